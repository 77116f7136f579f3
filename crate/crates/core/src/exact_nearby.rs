//! Solver for instances whose optimal disks overlap.
//!
//! If some point `o` lies in both optimal disks, the points sorted by angle
//! around `o` split into two angular ranges, one per disk. A partition is
//! indexed by `(i, j)`: `L_ij` takes the upper points after the first `i`
//! and the first `j` lower points, `R_ij` the rest. Each cell is a
//! restricted problem where one disk covers `L_ij ∪ {o}` and the other
//! `R_ij ∪ {o}`, and the answer is the minimum over cells. Cell optima are
//! monotone enough that a staircase walk visits only `n1 + n2 + 1` cells.
//!
//! Candidate points `o` come from a grid around the enclosing-disk center
//! that is fine enough to hit the lens of any overlapping optimum.

use std::f64::consts::SQRT_2;

use crate::error::{Error, Result};
use crate::geometry::{
    candidate_radii, candidate_radii_through, sed, sort_dedup, Disk, Instance, Point, PointPair, Solution,
    Tolerance,
};
use crate::regions::{common_intersection, regions_intersect, union_chain, Mode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    /// Handled as `X` on coordinates with x and y exchanged.
    Y,
}

/// Points split by the horizontal line through `o` and sorted
/// counterclockwise around `o`. Coordinates are in the working frame:
/// swapped when `axis` is `Y`.
#[derive(Debug, Clone, PartialEq)]
pub struct AngularPartition {
    /// Origin, in world coordinates.
    pub o: Point,
    pub axis: Axis,
    pub plus: Vec<Point>,
    pub minus: Vec<Point>,
    plus_ids: Vec<usize>,
    minus_ids: Vec<usize>,
    frame: Vec<Point>,
}

impl AngularPartition {
    pub fn n1(&self) -> usize {
        self.plus.len()
    }

    pub fn n2(&self) -> usize {
        self.minus.len()
    }

    fn origin(&self) -> Point {
        self.to_frame(self.o)
    }

    fn to_frame(&self, p: Point) -> Point {
        match self.axis {
            Axis::X => p,
            Axis::Y => p.swapped(),
        }
    }

    /// Whether each point id belongs to `L_ij`.
    fn left_mask(&self, i: usize, j: usize) -> Vec<bool> {
        let mut mask = vec![false; self.frame.len()];
        for &id in self.plus_ids[i..].iter().chain(&self.minus_ids[..j]) {
            mask[id] = true;
        }
        mask
    }
}

/// Partitions `points` around `o`. Point ids are positions in `points`.
pub fn angular_partition(o: Point, axis: Axis, points: &[Point]) -> AngularPartition {
    let to_frame = |p: Point| match axis {
        Axis::X => p,
        Axis::Y => p.swapped(),
    };
    let frame: Vec<Point> = points.iter().map(|&p| to_frame(p)).collect();
    let origin = to_frame(o);
    let mut keyed: Vec<(f64, f64, usize)> = frame
        .iter()
        .enumerate()
        .map(|(id, &p)| {
            let v = p - origin;
            (v.angle(), v.norm(), id)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)).then(a.2.cmp(&b.2)));
    let (mut plus_ids, mut minus_ids) = (Vec::new(), Vec::new());
    for (_, _, id) in keyed {
        if frame[id].y >= origin.y {
            plus_ids.push(id);
        } else {
            minus_ids.push(id);
        }
    }
    AngularPartition {
        o,
        axis,
        plus: plus_ids.iter().map(|&id| frame[id]).collect(),
        minus: minus_ids.iter().map(|&id| frame[id]).collect(),
        plus_ids,
        minus_ids,
        frame,
    }
}

/// One cell of the partition matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixCellEval {
    pub i: usize,
    pub j: usize,
    pub r_star: f64,
    /// The left-side disk is not the binding one: it could shrink.
    pub left_tight: bool,
}

struct Cell {
    left: Vec<Point>,
    right: Vec<Point>,
    /// Pairs with both points on the left.
    s1: Vec<PointPair>,
    /// Pairs with both points on the right.
    s2: Vec<PointPair>,
    sed_left: Disk,
    sed_right: Disk,
}

impl Cell {
    fn new(part: &AngularPartition, i: usize, j: usize) -> Cell {
        let mask = part.left_mask(i, j);
        let o = part.origin();
        let (mut left, mut right) = (vec![o], vec![o]);
        for (id, &p) in part.frame.iter().enumerate() {
            if mask[id] {
                left.push(p);
            } else {
                right.push(p);
            }
        }
        let (mut s1, mut s2) = (Vec::new(), Vec::new());
        for k in 0..part.frame.len() / 2 {
            let pair = PointPair::new(part.frame[2 * k], part.frame[2 * k + 1]);
            match (mask[2 * k], mask[2 * k + 1]) {
                (true, true) => s1.push(pair),
                (false, false) => s2.push(pair),
                _ => {}
            }
        }
        let sed_left = sed(&left);
        let sed_right = sed(&right);
        Cell {
            left,
            right,
            s1,
            s2,
            sed_left,
            sed_right,
        }
    }

    fn lower_bound(&self) -> f64 {
        self.sed_left.radius.max(self.sed_right.radius)
    }

    /// A center for the disk covering `sites` that also hits every pair
    /// in `pairs`, whose points all lie within `r` of `anchor`.
    fn side(
        sites: &[Point],
        pairs: &[PointPair],
        anchor: Point,
        r: f64,
        tol: &Tolerance,
        mode: Mode,
    ) -> Option<Point> {
        let rr = match mode {
            Mode::Closed => r,
            Mode::Open => r * (1.0 - tol.open_margin),
        };
        if pairs.is_empty() {
            return common_intersection(sites, rr, tol).ok()?.interior_point();
        }
        let region = common_intersection(sites, r, tol).ok()?;
        let u = union_chain(pairs, anchor, r, tol).ok()?;
        regions_intersect(&u, &region, mode)
    }

    fn left_side(&self, r: f64, tol: &Tolerance, mode: Mode) -> Option<Point> {
        Cell::side(&self.left, &self.s2, self.sed_right.center, r, tol, mode)
    }

    fn right_side(&self, r: f64, tol: &Tolerance, mode: Mode) -> Option<Point> {
        Cell::side(&self.right, &self.s1, self.sed_left.center, r, tol, mode)
    }

    fn decide(&self, r: f64, tol: &Tolerance) -> Option<(Point, Point)> {
        if !tol.le(self.lower_bound(), r) {
            return None;
        }
        let c1 = self.left_side(r, tol, Mode::Closed)?;
        let c2 = self.right_side(r, tol, Mode::Closed)?;
        Some((c1, c2))
    }
}

fn check_cell(part: &AngularPartition, i: usize, j: usize) -> Result<()> {
    if i > part.n1() || j > part.n2() {
        return Err(Error::IndexOutOfRange {
            i,
            j,
            rows: part.n1() + 1,
            cols: part.n2() + 1,
        });
    }
    Ok(())
}

/// Two radius-`r` disks, in world coordinates, with the first covering
/// `L_ij ∪ {o}`, the second `R_ij ∪ {o}`, together covering the instance
/// bichromatically.
pub fn rb2c_decision(
    inst: &Instance,
    part: &AngularPartition,
    i: usize,
    j: usize,
    r: f64,
) -> Result<Option<(Disk, Disk)>> {
    check_cell(part, i, j)?;
    let tol = inst.tolerance();
    let back = |p: Point| part.to_frame(p);
    Ok(Cell::new(part, i, j)
        .decide(r, &tol)
        .map(|(c1, c2)| (Disk::new(back(c1), r), Disk::new(back(c2), r))))
}

/// The cell optimum over a sorted candidate list, and whether the left
/// disk has slack at that optimum.
pub fn rb2c_optimize(
    inst: &Instance,
    part: &AngularPartition,
    i: usize,
    j: usize,
    candidates: &[f64],
) -> Result<MatrixCellEval> {
    check_cell(part, i, j)?;
    let tol = inst.tolerance();
    let cell = Cell::new(part, i, j);
    let lower = cell.lower_bound();
    let start = candidates.partition_point(|&c| !tol.le(lower, c));
    let feasible = |idx: usize| cell.decide(candidates[idx], &tol).is_some();
    let found = gallop(start, candidates.len(), feasible);
    let Some(idx) = found else {
        return Ok(MatrixCellEval {
            i,
            j,
            r_star: f64::INFINITY,
            left_tight: false,
        });
    };
    let r_star = candidates[idx];
    let left_tight = if r_star > 0.0 {
        let prev = if idx > 0 { candidates[idx - 1] } else { 0.0 };
        let margin = tol.open_margin.min(0.5 * (r_star - prev) / r_star);
        let open = Tolerance {
            open_margin: margin,
            ..tol
        };
        cell.left_side(r_star, &open, Mode::Open).is_some()
    } else {
        false
    };
    Ok(MatrixCellEval {
        i,
        j,
        r_star,
        left_tight,
    })
}

/// First index in `start..end` satisfying a monotone predicate, probing
/// `start, start+1, start+3, ...` before bisecting. Cheap when the answer
/// sits near `start`, which is typical for cell optima.
fn gallop(start: usize, end: usize, mut pred: impl FnMut(usize) -> bool) -> Option<usize> {
    if start >= end {
        return None;
    }
    if pred(start) {
        return Some(start);
    }
    let (mut bad, mut step) = (start, 1usize);
    let mut good = end;
    while bad + step < end {
        if pred(bad + step) {
            good = bad + step;
            break;
        }
        bad += step;
        step *= 2;
    }
    let (mut lo, mut hi) = (bad + 1, good);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    (lo < end).then_some(lo)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixSearchResult {
    pub r_star: f64,
    pub cell: (usize, usize),
    pub evaluations: usize,
}

/// Minimum over the `(n1+1)×(n2+1)` cell matrix by a staircase walk from
/// `(0, 0)`. A left-tight cell rules out every cell below-left of it, so
/// the walk moves right; otherwise it moves down.
pub fn matrix_search(
    n1: usize,
    n2: usize,
    mut eval: impl FnMut(usize, usize) -> MatrixCellEval,
) -> MatrixSearchResult {
    let (mut i, mut j) = (0usize, 0usize);
    let mut best = MatrixSearchResult {
        r_star: f64::INFINITY,
        cell: (0, 0),
        evaluations: 0,
    };
    while i <= n1 && j <= n2 {
        let cell = eval(i, j);
        best.evaluations += 1;
        if cell.r_star < best.r_star {
            best.r_star = cell.r_star;
            best.cell = (i, j);
        }
        if cell.left_tight {
            j += 1;
        } else {
            i += 1;
        }
    }
    best
}

/// Grid points around the enclosing-disk center `c` with spacing
/// `r̃/(3√2)` over the square of half-side `√3·r̃`.
pub fn candidate_centers_o(points: &[Point]) -> Vec<Point> {
    candidate_centers_o_with(points, 1)
}

/// As [`candidate_centers_o`] with the spacing divided by `refine`.
pub fn candidate_centers_o_with(points: &[Point], refine: usize) -> Vec<Point> {
    if points.is_empty() {
        return Vec::new();
    }
    let d = sed(points);
    if d.radius == 0.0 {
        return vec![d.center];
    }
    let h = d.radius / (3.0 * SQRT_2 * refine.max(1) as f64);
    let half = 3f64.sqrt() * d.radius;
    let k = (half / h + 1e-9).floor() as i64;
    let mut out = Vec::with_capacity(((2 * k + 1) * (2 * k + 1)) as usize);
    for a in -k..=k {
        for b in -k..=k {
            out.push(d.center + Point::new(a as f64 * h, b as f64 * h));
        }
    }
    out
}

fn merge_sorted(a: &[f64], b: &[f64], tol: &Tolerance) -> Vec<f64> {
    let mut v = Vec::with_capacity(a.len() + b.len());
    v.extend_from_slice(a);
    v.extend_from_slice(b);
    sort_dedup(v, tol)
}

/// Best solution over every grid point `o` and both axes.
pub fn nearby_solve(inst: &Instance) -> Option<Solution> {
    nearby_solve_bounded(inst, None)
}

/// As [`nearby_solve`], but only looks for solutions strictly better than
/// `bound`; returns `None` when there are none. Points `o` farther than
/// twice the bound from some input point cannot lie in both disks of a
/// better solution and are skipped.
pub fn nearby_solve_bounded(inst: &Instance, bound: Option<&Solution>) -> Option<Solution> {
    nearby_solve_with(inst, bound, 1)
}

pub fn nearby_solve_with(inst: &Instance, bound: Option<&Solution>, refine: usize) -> Option<Solution> {
    let tol = inst.tolerance();
    let pts = inst.points();
    let enclosing = sed(&pts);
    let single = Solution::from_centers(inst, enclosing.center, enclosing.center, enclosing.radius, &tol);
    let mut limit = bound.map_or(enclosing.radius, |s| s.radius);
    if enclosing.radius == 0.0 {
        return if bound.is_some() { None } else { single };
    }
    if let Some(zero) = zero_radius(inst, &tol) {
        return match bound {
            Some(b) if b.radius <= 0.0 => None,
            _ => Some(zero),
        };
    }
    let base = candidate_radii(&pts, &tol);
    let mut grid = candidate_centers_o_with(&pts, refine);
    grid.sort_by(|a, b| a.dist2(enclosing.center).total_cmp(&b.dist2(enclosing.center)));
    let mut best: Option<(f64, AngularPartition, (usize, usize))> = None;
    for o in grid {
        let farthest = pts.iter().map(|p| p.dist(o)).fold(0.0, f64::max);
        if !tol.le(farthest, 2.0 * limit) {
            continue;
        }
        let cands = merge_sorted(&base, &candidate_radii_through(o, &pts, &tol), &tol);
        for axis in [Axis::X, Axis::Y] {
            let part = angular_partition(o, axis, &pts);
            let res = matrix_search(part.n1(), part.n2(), |i, j| {
                rb2c_optimize(inst, &part, i, j, &cands).expect("indices within the matrix")
            });
            if best.as_ref().map_or(true, |b| res.r_star < b.0) {
                limit = limit.min(res.r_star);
                best = Some((res.r_star, part, res.cell));
            }
        }
    }
    let found = best.and_then(|(r, part, (i, j))| {
        let (d1, d2) = rb2c_decision(inst, &part, i, j, r).ok()??;
        Solution::from_centers(inst, d1.center, d2.center, r, &tol)
    });
    match (found, bound) {
        (Some(s), Some(b)) => (s.radius < b.radius && !tol.approx_eq(s.radius, b.radius)).then_some(s),
        (Some(s), None) => Some(match single {
            Some(one) => Solution::better(s, one, &tol),
            None => s,
        }),
        (None, Some(_)) => None,
        (None, None) => single,
    }
}

/// Radius zero is possible only when every pair consists of the same two
/// locations; no point `o` can lie in both disks then, so it is checked
/// directly.
fn zero_radius(inst: &Instance, tol: &Tolerance) -> Option<Solution> {
    let first = inst.pairs()[0];
    let same = |p: &PointPair| {
        (p.first == first.first && p.second == first.second)
            || (p.first == first.second && p.second == first.first)
    };
    if inst.pairs().iter().all(same) {
        Solution::from_centers(inst, first.first, first.second, 0.0, tol)
    } else {
        None
    }
}
