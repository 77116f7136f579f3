//! Browser bindings. Each exported function takes and returns JSON text so
//! the page needs no glue beyond the generated module.

use bicenter::approx::approx_solve;
use bicenter::exact_solve;
use bicenter::gen::{generate, Kind};
use bicenter::io::{instance_to_json, parse_instance, parse_solution, SolutionFile};
use bicenter::oracle::{brute_exact, verify_solution, OracleBudget};
use bicenter::svg::render_svg;
use wasm_bindgen::prelude::*;

/// Largest instance the page will hand to the exact solver.
pub const EXACT_LIMIT: usize = 64;

pub fn solve_json(instance: &str, mode: &str, eps: f64) -> Result<String, String> {
    let inst = parse_instance(instance).map_err(|e| e.to_string())?;
    let sol = match mode {
        "exact" => {
            if inst.len() > EXACT_LIMIT {
                return Err(format!("exact mode is limited to {EXACT_LIMIT} pairs here"));
            }
            exact_solve(&inst)
        }
        "approx" => approx_solve(&inst, eps).map_err(|e| e.to_string())?,
        "oracle" => brute_exact(&inst, &OracleBudget::default()).map_err(|e| e.to_string())?,
        other => return Err(format!("unknown mode {other:?}")),
    };
    if !verify_solution(&inst, &sol) {
        return Err("solution failed verification".into());
    }
    serde_json::to_string(&SolutionFile::new(&sol, true)).map_err(|e| e.to_string())
}

pub fn generate_json(kind: &str, n: usize, seed: u64) -> Result<String, String> {
    let kind: Kind = kind.parse().map_err(|_| format!("unknown generator {kind:?}"))?;
    if n == 0 {
        return Err("need at least one pair".into());
    }
    Ok(instance_to_json(&generate(kind, n, seed)))
}

pub fn render_json(instance: &str, solution: &str) -> Result<String, String> {
    let inst = parse_instance(instance).map_err(|e| e.to_string())?;
    let sol = if solution.trim().is_empty() {
        None
    } else {
        let s = parse_solution(solution).map_err(|e| e.to_string())?;
        if s.coloring.len() != inst.len() {
            return Err("solution does not match the instance".into());
        }
        Some(s)
    };
    Ok(render_svg(&inst, sol.as_ref()))
}

#[wasm_bindgen]
pub fn solve(instance: &str, mode: &str, eps: f64) -> Result<String, JsValue> {
    solve_json(instance, mode, eps).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn generate_instance(kind: &str, n: usize, seed: u32) -> Result<String, JsValue> {
    generate_json(kind, n, u64::from(seed)).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn render(instance: &str, solution: &str) -> Result<String, JsValue> {
    render_json(instance, solution).map_err(|e| JsValue::from_str(&e))
}
