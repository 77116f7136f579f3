//! Solver for instances whose optimal disks are far apart.
//!
//! A candidate line splits the points; the side's points `P1` must all lie
//! in the first disk, and some optimal first disk then has a `P1` point on
//! its boundary. Its center is therefore on the boundary of `I_r(P1)`, and
//! only finitely many boundary points (vertices and crossings with the
//! circles around the remaining points) need testing: coverage on an open
//! boundary arc is a subset of the coverage at its endpoints. At each such
//! center the uncovered points force the second disk into `I_r(P(e))`, and
//! fully covered pairs force it into `U_r(S(e))`.

use std::f64::consts::PI;

use crate::geometry::{candidate_radii, first_feasible, sed, Instance, Point, PointPair, Solution};
use crate::regions::{common_intersection, regions_intersect, union_chain, Mode};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    pub point: Point,
    pub dir: Point,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// One closed side of a line and the points on it.
#[derive(Debug, Clone, PartialEq)]
pub struct SideSpec {
    pub line: Line,
    pub side: Side,
    pub p1: Vec<Point>,
}

pub const DEFAULT_ORIENTATIONS: usize = 4;

/// Lines through the center of the smallest disk enclosing `points`, at
/// four orientations, with both closed sides of each.
pub fn candidate_lines(points: &[Point]) -> Vec<SideSpec> {
    candidate_lines_with(points, DEFAULT_ORIENTATIONS)
}

/// As [`candidate_lines`] with orientations `k·π/count`.
pub fn candidate_lines_with(points: &[Point], count: usize) -> Vec<SideSpec> {
    if points.is_empty() {
        return Vec::new();
    }
    let center = sed(points).center;
    let eps = 1e-12 * crate::geometry::coordinate_scale(points);
    let mut out = Vec::with_capacity(2 * count);
    for k in 0..count {
        let line = Line {
            point: center,
            dir: Point::unit(PI * k as f64 / count as f64),
        };
        for side in [Side::Left, Side::Right] {
            let p1: Vec<Point> = points
                .iter()
                .copied()
                .filter(|&p| {
                    let s = line.dir.cross(p - center);
                    match side {
                        Side::Left => s >= -eps,
                        Side::Right => s <= eps,
                    }
                })
                .collect();
            if !p1.is_empty() {
                out.push(SideSpec { line, side, p1 });
            }
        }
    }
    out
}

/// A solution of radius `r` whose first disk covers `side.p1` with a point
/// of `side.p1` on its boundary, if one exists.
pub fn distant_decision(inst: &Instance, side: &SideSpec, r: f64) -> Option<Solution> {
    let tol = inst.tolerance();
    let region = common_intersection(&side.p1, r, &tol).ok()?;
    if region.is_empty() {
        return None;
    }
    let mut others = inst.points();
    let mut p1 = side.p1.clone();
    p1.sort_by(|a, b| a.lex_cmp(b));
    others.retain(|q| p1.binary_search_by(|x| x.lex_cmp(q)).is_err());
    others.sort_by(|a, b| a.lex_cmp(b));
    others.dedup();

    let mut events = region.vertices();
    for &c in &others {
        events.extend(region.boundary_crossings(c));
    }
    if events.is_empty() {
        events.extend(region.boundary_samples().into_iter().take(1));
    }

    let mut covered: Vec<PointPair> = Vec::new();
    let mut uncovered: Vec<Point> = Vec::new();
    for e in events {
        covered.clear();
        uncovered.clear();
        let mut feasible = true;
        for p in inst.pairs() {
            match (tol.contains(e, r, p.first), tol.contains(e, r, p.second)) {
                (true, true) => covered.push(*p),
                (true, false) => uncovered.push(p.second),
                (false, true) => uncovered.push(p.first),
                (false, false) => {
                    feasible = false;
                    break;
                }
            }
        }
        if !feasible {
            continue;
        }
        let witness = if uncovered.is_empty() {
            Some(e)
        } else {
            let rest = common_intersection(&uncovered, r, &tol).ok()?;
            if covered.is_empty() {
                rest.interior_point()
            } else {
                match union_chain(&covered, e, r, &tol) {
                    Ok(u) => regions_intersect(&u, &rest, Mode::Closed),
                    Err(_) => None,
                }
            }
        };
        if let Some(sol) = witness.and_then(|w| Solution::from_centers(inst, e, w, r, &tol)) {
            return Some(sol);
        }
    }
    None
}

/// Smallest candidate radius at which some candidate side admits a
/// solution, with that solution.
pub fn distant_solve(inst: &Instance) -> Option<Solution> {
    distant_solve_with(inst, DEFAULT_ORIENTATIONS)
}

pub fn distant_solve_with(inst: &Instance, orientations: usize) -> Option<Solution> {
    let points = inst.points();
    let tol = inst.tolerance();
    let sides = candidate_lines_with(&points, orientations);
    let radii = candidate_radii(&points, &tol);
    let decide = |r: f64| sides.iter().find_map(|s| distant_decision(inst, s, r));
    let idx = first_feasible(&radii, |r| decide(r).is_some())?;
    decide(radii[idx])
}
