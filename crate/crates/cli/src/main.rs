use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use bicenter::approx::approx_solve;
use bicenter::gen::{generate, generate_ib2c, Kind};
use bicenter::ib2c::{covers, ib2c_solve, Ib2cInstance};
use bicenter::io::{instance_to_json, parse_instance, SolutionFile};
use bicenter::oracle::{brute_exact, verify_solution, OracleBudget};
use bicenter::svg::render_svg;
use bicenter::{exact_solve, fit_exponent, Instance, Point, PointPair, Solution};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Minimum-radius congruent disk pairs covering point pairs bichromatically.
#[derive(Parser, Debug)]
#[command(name = "bicenter", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve one instance and print a JSON run record
    Solve {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        /// Accuracy for approx mode, in (0, 1]
        #[arg(long)]
        eps: Option<f64>,
        /// Recorded in the output for bookkeeping
        #[arg(long)]
        seed: Option<u64>,
        /// Also write an SVG picture here
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Write the record here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest pair count the oracle accepts
        #[arg(long, default_value_t = OracleBudget::default().max_pairs_exact)]
        budget: usize,
    },
    /// Generate a random instance
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        /// Number of pairs
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Grid extent for ib2c-grid
        #[arg(long, default_value_t = 16)]
        u: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time solvers on every instance in a directory, as CSV
    Bench {
        dir: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "exact")]
        solvers: Vec<Mode>,
        #[arg(long, default_value_t = 1)]
        reps: usize,
        #[arg(long, default_value_t = 0.25)]
        eps: f64,
        /// Instances with at most this many pairs are also solved by the
        /// oracle and the difference is reported
        #[arg(long, default_value_t = 12)]
        budget: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time the exact solver over growing n and the integral solver over
    /// growing U, and fit power-law exponents
    Scaling {
        #[arg(long, value_delimiter = ',', default_value = "16,32,64,128")]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "16,32,64,128")]
        u: Vec<i64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Exact,
    Approx,
    Oracle,
    Ib2c,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GenKind {
    Uniform,
    TwoCluster,
    NearbyLens,
    Ib2cGrid,
}

#[derive(Debug)]
enum Failure {
    Parse(String),
    Budget(String),
    Other(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Other(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Budget(_) => 3,
        }
    }
}

impl From<bicenter::Error> for Failure {
    fn from(e: bicenter::Error) -> Self {
        use bicenter::Error as E;
        match e {
            E::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            E::Parse(_)
            | E::Empty(_)
            | E::NonFinite
            | E::CoordinateOutOfRange { .. }
            | E::EpsilonOutOfRange(_) => Failure::Parse(e.to_string()),
            _ => Failure::Other(e.to_string()),
        }
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Failure {
    Failure::Other(format!("{}: {e}", path.display()))
}

#[derive(Serialize, Debug)]
struct RunRecord {
    instance: String,
    solver: String,
    radius: f64,
    centers: [[f64; 2]; 2],
    coloring: Vec<u8>,
    verified: bool,
    wall_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    eps: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    squared_grid_radius: Option<i64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve {
            input,
            mode,
            eps,
            seed,
            svg,
            out,
            budget,
        } => cmd_solve(&input, mode, eps, seed, svg.as_deref(), out.as_deref(), budget),
        Command::Gen {
            kind,
            n,
            u,
            seed,
            out,
        } => cmd_gen(kind, n, u, seed, out.as_deref()),
        Command::Bench {
            dir,
            solvers,
            reps,
            eps,
            budget,
            out,
        } => cmd_bench(&dir, &solvers, reps, eps, budget, out.as_deref()),
        Command::Scaling { n, u, seed, out } => cmd_scaling(&n, &u, seed, out.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Parse(m) | Failure::Budget(m) | Failure::Other(m)) = &f;
            eprintln!("error: {m}");
            ExitCode::from(f.code())
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| io_err(path, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Other(e.to_string()))
        }
    }
}

fn solve_continuous(
    inst: &Instance,
    mode: Mode,
    eps: Option<f64>,
    budget: usize,
) -> Result<Solution, Failure> {
    Ok(match mode {
        Mode::Exact => exact_solve(inst),
        Mode::Approx => {
            let eps = eps.ok_or_else(|| Failure::Parse("approx mode needs --eps".into()))?;
            approx_solve(inst, eps)?
        }
        Mode::Oracle => brute_exact(
            inst,
            &OracleBudget {
                max_pairs_exact: budget,
                ..OracleBudget::default()
            },
        )?,
        Mode::Ib2c => unreachable!("integral instances are handled separately"),
    })
}

fn cmd_solve(
    input: &Path,
    mode: Mode,
    eps: Option<f64>,
    seed: Option<u64>,
    svg: Option<&Path>,
    out: Option<&Path>,
    budget: usize,
) -> Result<(), Failure> {
    let text = fs::read_to_string(input).map_err(|e| io_err(input, e))?;
    let start = Instant::now();
    let (inst, sol, grid_k) = if mode == Mode::Ib2c {
        let grid = Ib2cInstance::from_json(&text)?;
        let pairs = grid.pairs_tuples();
        let s = ib2c_solve(&pairs, grid.u)?;
        if !covers(&pairs, s.c1, s.c2, s.k) {
            return Err(Failure::Other("integral solution failed verification".into()));
        }
        let inst = grid_as_instance(&grid)?;
        let c = |p: bicenter::ib2c::IPoint| Point::new(p.x as f64, p.y as f64);
        let sol = Solution::from_centers(&inst, c(s.c1), c(s.c2), s.radius(), &inst.tolerance())
            .ok_or_else(|| Failure::Other("integral solution failed verification".into()))?;
        (inst, sol, Some(s.k))
    } else {
        let inst = parse_instance(&text)?;
        let sol = solve_continuous(&inst, mode, eps, budget)?;
        (inst, sol, None)
    };
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    if !verify_solution(&inst, &sol) {
        return Err(Failure::Other("solution failed verification".into()));
    }
    let file = SolutionFile::new(&sol, true);
    let record = RunRecord {
        instance: input.display().to_string(),
        solver: format!("{mode:?}").to_lowercase(),
        radius: file.radius,
        centers: file.centers,
        coloring: file.coloring,
        verified: true,
        wall_ms,
        eps: if mode == Mode::Approx { eps } else { None },
        seed,
        squared_grid_radius: grid_k,
    };
    if let Some(path) = svg {
        fs::write(path, render_svg(&inst, Some(&sol))).map_err(|e| io_err(path, e))?;
    }
    let mut json = serde_json::to_string_pretty(&record).map_err(|e| Failure::Other(e.to_string()))?;
    json.push('\n');
    emit(&json, out)
}

fn grid_as_instance(grid: &Ib2cInstance) -> Result<Instance, Failure> {
    let c = |p: bicenter::ib2c::IPoint| Point::new(p.x as f64, p.y as f64);
    let pairs = grid
        .pairs
        .iter()
        .map(|[a, b]| PointPair::new(c(*a), c(*b)))
        .collect();
    Ok(Instance::new(pairs)?)
}

fn cmd_gen(kind: GenKind, n: usize, u: i64, seed: u64, out: Option<&Path>) -> Result<(), Failure> {
    if n == 0 || u < 1 {
        return Err(Failure::Parse("sizes must be positive".into()));
    }
    let mut text = match kind {
        GenKind::Uniform => instance_to_json(&generate(Kind::Uniform, n, seed)),
        GenKind::TwoCluster => instance_to_json(&generate(Kind::TwoCluster, n, seed)),
        GenKind::NearbyLens => instance_to_json(&generate(Kind::NearbyLens, n, seed)),
        GenKind::Ib2cGrid => generate_ib2c(u, n, seed).to_json(),
    };
    text.push('\n');
    emit(&text, out)
}

#[derive(Serialize)]
struct BenchRow {
    instance: String,
    solver: String,
    n: usize,
    eps: Option<f64>,
    rep: usize,
    radius: f64,
    wall_ms: f64,
    oracle_radius: Option<f64>,
    oracle_delta: Option<f64>,
}

fn cmd_bench(
    dir: &Path,
    solvers: &[Mode],
    reps: usize,
    eps: f64,
    budget: usize,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| io_err(dir, e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    w.write_record([
        "instance",
        "solver",
        "n",
        "eps",
        "rep",
        "radius",
        "wall_ms",
        "oracle_radius",
        "oracle_delta",
    ])
    .map_err(|e| Failure::Other(e.to_string()))?;
    for path in &files {
        let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
        let inst = parse_instance(&text)?;
        let oracle = (inst.len() <= budget)
            .then(|| brute_exact(&inst, &OracleBudget::default()).ok())
            .flatten()
            .map(|s| s.radius);
        for &solver in solvers {
            if solver == Mode::Ib2c {
                return Err(Failure::Parse("bench runs continuous solvers only".into()));
            }
            for rep in 0..reps {
                let start = Instant::now();
                let sol =
                    solve_continuous(&inst, solver, Some(eps), OracleBudget::default().max_pairs_exact)?;
                let wall_ms = start.elapsed().as_secs_f64() * 1e3;
                if !verify_solution(&inst, &sol) {
                    return Err(Failure::Other(format!(
                        "{}: solution failed verification",
                        path.display()
                    )));
                }
                w.serialize(BenchRow {
                    instance: path.display().to_string(),
                    solver: format!("{solver:?}").to_lowercase(),
                    n: inst.len(),
                    eps: (solver == Mode::Approx).then_some(eps),
                    rep,
                    radius: sol.radius,
                    wall_ms,
                    oracle_radius: oracle,
                    oracle_delta: oracle.map(|o| sol.radius - o),
                })
                .map_err(|e| Failure::Other(e.to_string()))?;
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| Failure::Other(e.to_string()))?;
    emit(&String::from_utf8_lossy(&bytes), out)
}

fn cmd_scaling(ns: &[usize], us: &[i64], seed: u64, out: Option<&Path>) -> Result<(), Failure> {
    let mut csv = String::from("solver,size,wall_ms\n");
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for &n in ns {
        let inst = generate(Kind::Uniform, n, seed);
        let start = Instant::now();
        let sol = exact_solve(&inst);
        let ms = start.elapsed().as_secs_f64() * 1e3;
        debug_assert!(verify_solution(&inst, &sol));
        csv.push_str(&format!("exact,{n},{ms:.3}\n"));
        eprintln!("exact n={n}: {ms:.1} ms");
        xs.push(n as f64);
        ys.push(ms);
    }
    let exact_fit = fit_exponent(&xs, &ys);
    xs.clear();
    ys.clear();
    for &u in us {
        let grid = generate_ib2c(u, 2 * u as usize, seed);
        let start = Instant::now();
        ib2c_solve(&grid.pairs_tuples(), u)?;
        let ms = start.elapsed().as_secs_f64() * 1e3;
        csv.push_str(&format!("ib2c,{u},{ms:.3}\n"));
        eprintln!("ib2c U={u}: {ms:.1} ms");
        xs.push(u as f64);
        ys.push(ms);
    }
    let ib2c_fit = fit_exponent(&xs, &ys);
    for (name, fit) in [("exact", exact_fit), ("ib2c", ib2c_fit)] {
        if let Some(b) = fit {
            csv.push_str(&format!("{name}-exponent,,{b:.3}\n"));
        }
    }
    emit(&csv, out)
}
