//! Two congruent disks of minimum radius covering a set of point pairs,
//! one point of each pair per disk.
//!
//! [`exact_solve`] returns an optimal solution; [`approx::approx_solve`]
//! trades accuracy for speed through a grid reduction to the integral
//! problem solved in [`ib2c`].

pub mod approx;
pub mod error;
pub mod exact_distant;
pub mod exact_nearby;
pub mod gen;
pub mod geometry;
pub mod ib2c;
pub mod io;
pub mod oracle;
pub mod regions;
pub mod svg;

pub use error::{Error, Result};
pub use geometry::{Disk, Instance, Point, PointPair, Solution, Tolerance};

/// Optimal solution: the better of the distant-case and nearby-case
/// solvers.
pub fn exact_solve(inst: &Instance) -> Solution {
    let tol = inst.tolerance();
    let distant = exact_distant::distant_solve(inst);
    match exact_nearby::nearby_solve_bounded(inst, distant.as_ref()) {
        Some(near) => match distant {
            Some(far) => Solution::better(far, near, &tol),
            None => near,
        },
        None => distant.unwrap_or_else(|| exact_nearby::nearby_solve(inst).expect("single disk is feasible")),
    }
}

/// Least-squares slope of `ln y` against `ln x`: the exponent `b` in a fit
/// `y ≈ a·x^b`. `None` with fewer than two usable points.
pub fn fit_exponent(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = xs
        .iter()
        .zip(ys)
        .filter(|(x, y)| **x > 0.0 && **y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}
