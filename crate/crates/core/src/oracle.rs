//! Brute-force reference solvers.
//!
//! These share nothing with the fast solvers beyond the basic geometry
//! types and the smallest enclosing disk, and are only practical for small
//! inputs; [`OracleBudget`] enforces the limits.

use crate::error::{Error, Result};
use crate::geometry::{sed, Disk, Instance, Point, Solution, Tolerance};
use crate::ib2c::IPoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_pairs_exact: usize,
    pub max_u: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_pairs_exact: 15,
            max_u: 14,
        }
    }
}

/// Optimal solution by enumerating every coloring.
pub fn brute_exact(inst: &Instance, budget: &OracleBudget) -> Result<Solution> {
    let n = inst.len();
    if n > budget.max_pairs_exact {
        return Err(Error::BudgetExceeded {
            what: "pairs",
            got: n,
            limit: budget.max_pairs_exact,
        });
    }
    let pairs = inst.pairs();
    let mut red = Vec::with_capacity(n);
    let mut blue = Vec::with_capacity(n);
    let mut best: Option<(f64, Disk, Disk, u64)> = None;
    // Pair 0 is fixed red-first; the mirrored colorings give the same radius.
    for mask in 0..(1u64 << (n - 1)) {
        let bits = mask << 1 | 1;
        red.clear();
        blue.clear();
        for (k, p) in pairs.iter().enumerate() {
            if bits >> k & 1 == 1 {
                red.push(p.first);
                blue.push(p.second);
            } else {
                red.push(p.second);
                blue.push(p.first);
            }
        }
        let d1 = sed(&red);
        if best.as_ref().is_some_and(|b| d1.radius >= b.0) {
            continue;
        }
        let d2 = sed(&blue);
        let r = d1.radius.max(d2.radius);
        if best.as_ref().map_or(true, |b| r < b.0) {
            best = Some((r, d1, d2, bits));
        }
    }
    let (r, d1, d2, bits) = best.expect("at least one coloring");
    Ok(Solution {
        disk1: Disk::new(d1.center, r),
        disk2: Disk::new(d2.center, r),
        coloring: (0..n).map(|k| bits >> k & 1 == 1).collect(),
        radius: r,
    })
}

/// Optimal integral solution `(k, c1, c2)` with radius `sqrt(k)`, by
/// enumerating every ordered pair of grid centers.
pub fn brute_ib2c(
    pairs: &[(IPoint, IPoint)],
    u: i64,
    budget: &OracleBudget,
) -> Result<(i64, IPoint, IPoint)> {
    if u < 1 || u as usize > budget.max_u {
        return Err(Error::BudgetExceeded {
            what: "U",
            got: u.max(0) as usize,
            limit: budget.max_u,
        });
    }
    for &(a, b) in pairs {
        for q in [a, b] {
            if !(1..=u).contains(&q.x) || !(1..=u).contains(&q.y) {
                return Err(Error::CoordinateOutOfRange { x: q.x, y: q.y, u });
            }
        }
    }
    let cells: Vec<IPoint> = (1..=u)
        .flat_map(|y| (1..=u).map(move |x| IPoint::new(x, y)))
        .collect();
    let mut best = (i64::MAX, IPoint::new(1, 1), IPoint::new(1, 1));
    for &c1 in &cells {
        for &c2 in &cells {
            let mut worst = 0i64;
            for &(a, b) in pairs {
                let straight = a.dist2(c1).max(b.dist2(c2));
                let crossed = a.dist2(c2).max(b.dist2(c1));
                worst = worst.max(straight.min(crossed));
                if worst >= best.0 {
                    break;
                }
            }
            if worst < best.0 {
                best = (worst, c1, c2);
            }
        }
    }
    if pairs.is_empty() {
        best.0 = 0;
    }
    Ok(best)
}

/// Checks that both disks share the stated radius, that the coloring
/// realizes a bichromatic cover, and that every pair is covered.
pub fn verify_solution(inst: &Instance, sol: &Solution) -> bool {
    verify_with(inst, sol, &inst.tolerance())
}

pub fn verify_with(inst: &Instance, sol: &Solution, tol: &Tolerance) -> bool {
    let r = sol.radius;
    if !(r >= 0.0) || sol.coloring.len() != inst.len() {
        return false;
    }
    if !tol.approx_eq(sol.disk1.radius, r) || !tol.approx_eq(sol.disk2.radius, r) {
        return false;
    }
    let (c1, c2) = (sol.disk1.center, sol.disk2.center);
    let inside = |c: Point, p: Point| tol.contains(c, r, p);
    inst.pairs().iter().zip(&sol.coloring).all(|(p, &first_red)| {
        let (red, blue) = if first_red {
            (p.first, p.second)
        } else {
            (p.second, p.first)
        };
        inside(c1, red) && inside(c2, blue)
    })
}
