//! `(1+ε)`-approximation.
//!
//! Two branches run and the better feasible answer wins. When the disks
//! are tiny relative to the whole point set, some line through or near the
//! enclosing-disk center separates the two colors and the enclosing disks
//! of the two sides are optimal. Otherwise the points are snapped to a grid
//! of cell side `ε·r̃/100`, the integral problem is solved exactly, and its
//! radius is inflated by `1 + ε/3` to absorb the snapping error.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geometry::{sed, Instance, Point, Solution};
use crate::ib2c::{ib2c_solve, IPoint};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridTransform {
    pub origin: Point,
    pub delta: f64,
    pub u: i64,
}

impl GridTransform {
    /// Lower-left vertex of the cell containing `p`, as 1-based grid
    /// coordinates.
    pub fn to_grid(&self, p: Point) -> IPoint {
        let g = |v: f64| ((v / self.delta).floor() as i64 + 1).max(1);
        IPoint::new(g(p.x - self.origin.x), g(p.y - self.origin.y))
    }

    pub fn to_world(&self, g: IPoint) -> Point {
        self.origin + Point::new((g.x - 1) as f64, (g.y - 1) as f64) * self.delta
    }
}

/// An instance snapped to the grid, with duplicate pairs removed.
#[derive(Debug, Clone, PartialEq)]
pub struct GridInstance {
    pub transform: GridTransform,
    pub pairs: Vec<(IPoint, IPoint)>,
}

impl GridInstance {
    pub fn u(&self) -> i64 {
        self.transform.u
    }
}

fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps <= 1.0 {
        Ok(())
    } else {
        Err(Error::EpsilonOutOfRange(eps))
    }
}

pub fn grid_snap(inst: &Instance, eps: f64) -> Result<GridInstance> {
    check_eps(eps)?;
    let pts = inst.points();
    let r = sed(&pts).radius;
    if r == 0.0 {
        return Err(Error::Degenerate("all points coincide"));
    }
    let delta = eps * r / 100.0;
    let origin = pts.iter().fold(Point::new(f64::INFINITY, f64::INFINITY), |m, p| {
        Point::new(m.x.min(p.x), m.y.min(p.y))
    });
    let mut transform = GridTransform { origin, delta, u: 1 };
    let mut pairs: Vec<(IPoint, IPoint)> = inst
        .pairs()
        .iter()
        .map(|p| {
            let (a, b) = (transform.to_grid(p.first), transform.to_grid(p.second));
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    pairs.sort();
    pairs.dedup();
    transform.u = pairs
        .iter()
        .flat_map(|&(a, b)| [a.x, a.y, b.x, b.y])
        .max()
        .unwrap_or(1);
    Ok(GridInstance { transform, pairs })
}

/// Best split of the instance by a line that every pair straddles, among
/// four orientations through the enclosing-disk center and their offsets
/// by `±r̃/2` along the normal.
pub fn far_case_solve(inst: &Instance) -> Option<Solution> {
    let pts = inst.points();
    let tol = inst.tolerance();
    let enclosing = sed(&pts);
    let mut best: Option<Solution> = None;
    for k in 0..4 {
        let dir = Point::unit(PI * k as f64 / 4.0);
        let normal = Point::new(-dir.y, dir.x);
        for shift in [0.0, 0.5, -0.5] {
            let anchor = enclosing.center + normal * (shift * enclosing.radius);
            let Some(sol) = split_by_line(inst, anchor, dir) else {
                continue;
            };
            best = Some(match best {
                Some(b) => Solution::better(b, sol, &tol),
                None => sol,
            });
        }
    }
    best
}

fn split_by_line(inst: &Instance, anchor: Point, dir: Point) -> Option<Solution> {
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for p in inst.pairs() {
        let (sa, sb) = (dir.cross(p.first - anchor), dir.cross(p.second - anchor));
        if (sa > 0.0 && sb > 0.0) || (sa < 0.0 && sb < 0.0) {
            return None;
        }
        if sa >= sb {
            left.push(p.first);
            right.push(p.second);
        } else {
            left.push(p.second);
            right.push(p.first);
        }
    }
    let (a, b) = (sed(&left), sed(&right));
    let r = a.radius.max(b.radius);
    Solution::from_centers(inst, a.center, b.center, r, &inst.tolerance())
}

/// Grid radius widened to absorb snapping: `(1 + ε/3)·r`.
pub fn inflate(r: f64, eps: f64) -> f64 {
    (1.0 + eps / 3.0) * r
}

/// A feasible solution with radius at most `(1+ε)` times the optimum.
pub fn approx_solve(inst: &Instance, eps: f64) -> Result<Solution> {
    check_eps(eps)?;
    let tol = inst.tolerance();
    let pts = inst.points();
    let enclosing = sed(&pts);
    let single = Solution::from_centers(inst, enclosing.center, enclosing.center, enclosing.radius, &tol)
        .ok_or(Error::Degenerate("enclosing disk does not cover the instance"))?;
    if enclosing.radius == 0.0 {
        return Ok(single);
    }
    let mut best = single;
    if let Some(far) = far_case_solve(inst) {
        best = Solution::better(best, far, &tol);
    }
    let grid = grid_snap(inst, eps)?;
    let g = ib2c_solve(&grid.pairs, grid.u())?;
    let r = inflate(g.radius(), eps) * grid.transform.delta;
    let (c1, c2) = (grid.transform.to_world(g.c1), grid.transform.to_world(g.c2));
    if let Some(snapped) = Solution::from_centers(inst, c1, c2, r, &tol) {
        best = Solution::better(best, snapped, &tol);
    }
    Ok(best)
}
