//! Points, disks, instances, the containment tolerance policy and the
//! smallest-enclosing-disk machinery the solvers are built on.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Seed of the shuffle used by [`smallest_enclosing_disk`].
pub const SED_SEED: u64 = 0x2c3e_7a11_5eed;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Unit vector at angle `theta`.
    pub fn unit(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Point::new(c, s)
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm2(self) -> f64 {
        self.dot(self)
    }

    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    pub fn dist2(self, o: Point) -> f64 {
        (self - o).norm2()
    }

    /// Direction angle in `[0, 2π)`.
    pub fn angle(self) -> f64 {
        let a = self.y.atan2(self.x);
        if a < 0.0 {
            a + 2.0 * PI
        } else {
            a
        }
    }

    pub fn midpoint(self, o: Point) -> Point {
        Point::new(0.5 * (self.x + o.x), 0.5 * (self.y + o.y))
    }

    /// Reflection across the diagonal `y = x`.
    pub fn swapped(self) -> Point {
        Point::new(self.y, self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Lexicographic comparison on `(x, y)`.
    pub fn lex_cmp(&self, o: &Point) -> std::cmp::Ordering {
        self.x.total_cmp(&o.x).then(self.y.total_cmp(&o.y))
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointPair {
    pub first: Point,
    pub second: Point,
}

impl PointPair {
    pub const fn new(first: Point, second: Point) -> Self {
        PointPair { first, second }
    }

    pub fn points(&self) -> [Point; 2] {
        [self.first, self.second]
    }

    pub fn swapped(&self) -> PointPair {
        PointPair::new(self.first.swapped(), self.second.swapped())
    }
}

/// A nonempty list of finite point pairs.
///
/// Points of `P(S)` are addressed by id `2 * pair + slot`, slot 0 being
/// `first` and slot 1 `second`; [`Instance::points`] follows that order.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pairs: Vec<PointPair>,
}

impl Instance {
    pub fn new(pairs: Vec<PointPair>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::Empty("instance has no pairs"));
        }
        if pairs
            .iter()
            .any(|p| !p.first.is_finite() || !p.second.is_finite())
        {
            return Err(Error::NonFinite);
        }
        Ok(Instance { pairs })
    }

    pub fn from_coords(pairs: &[((f64, f64), (f64, f64))]) -> Result<Self> {
        Instance::new(
            pairs
                .iter()
                .map(|&((a, b), (c, d))| PointPair::new(Point::new(a, b), Point::new(c, d)))
                .collect(),
        )
    }

    pub fn pairs(&self) -> &[PointPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The multiset `P(S)` in id order.
    pub fn points(&self) -> Vec<Point> {
        self.pairs.iter().flat_map(|p| p.points()).collect()
    }

    pub fn point(&self, id: usize) -> Point {
        let p = &self.pairs[id / 2];
        if id % 2 == 0 {
            p.first
        } else {
            p.second
        }
    }

    /// Largest absolute coordinate, at least 1.
    pub fn scale(&self) -> f64 {
        coordinate_scale(&self.points())
    }

    pub fn swapped(&self) -> Instance {
        Instance {
            pairs: self.pairs.iter().map(PointPair::swapped).collect(),
        }
    }

    /// Tolerance whose absolute part is scaled to this instance.
    pub fn tolerance(&self) -> Tolerance {
        Tolerance::default().with_scale(self.scale())
    }
}

pub fn coordinate_scale(points: &[Point]) -> f64 {
    points
        .iter()
        .fold(1.0_f64, |m, p| m.max(p.x.abs()).max(p.y.abs()))
}

/// Containment policy: `|p - c| <= r * (1 + rel) + abs`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
    /// Relative shrink applied by open-interior tests; must exceed `rel`.
    pub open_margin: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            rel: 1e-9,
            abs: 1e-12,
            open_margin: 1e-7,
        }
    }
}

impl Tolerance {
    pub fn with_scale(self, scale: f64) -> Self {
        Tolerance {
            abs: Tolerance::default().abs * scale.max(1.0),
            ..self
        }
    }

    pub fn slack(&self, r: f64) -> f64 {
        r * self.rel + self.abs
    }

    /// `d <= r` up to tolerance.
    pub fn le(&self, d: f64, r: f64) -> bool {
        d <= r + self.slack(r)
    }

    pub fn contains(&self, center: Point, r: f64, p: Point) -> bool {
        self.le(center.dist(p), r)
    }

    pub fn approx_eq(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.slack(a.abs().max(b.abs()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Disk {
    pub center: Point,
    pub radius: f64,
}

impl Disk {
    pub const fn new(center: Point, radius: f64) -> Self {
        Disk { center, radius }
    }

    pub fn contains(&self, p: Point, tol: &Tolerance) -> bool {
        tol.contains(self.center, self.radius, p)
    }
}

/// Two congruent disks and a per-pair coloring certificate.
///
/// `coloring[k]` is `true` when the first point of pair `k` is red (in
/// `disk1`) and the second blue (in `disk2`), `false` for the opposite.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub disk1: Disk,
    pub disk2: Disk,
    pub coloring: Vec<bool>,
    pub radius: f64,
}

impl Solution {
    /// Builds a solution with both disks of radius `r`, deriving the
    /// coloring. Returns `None` when the disks do not bichromatically cover
    /// the instance.
    pub fn from_centers(inst: &Instance, c1: Point, c2: Point, r: f64, tol: &Tolerance) -> Option<Solution> {
        let coloring = inst
            .pairs()
            .iter()
            .map(|p| {
                if tol.contains(c1, r, p.first) && tol.contains(c2, r, p.second) {
                    Some(true)
                } else if tol.contains(c1, r, p.second) && tol.contains(c2, r, p.first) {
                    Some(false)
                } else {
                    None
                }
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Solution {
            disk1: Disk::new(c1, r),
            disk2: Disk::new(c2, r),
            coloring,
            radius: r,
        })
    }

    /// Distance between the two centers.
    pub fn delta(&self) -> f64 {
        self.disk1.center.dist(self.disk2.center)
    }

    pub fn swapped(&self) -> Solution {
        Solution {
            disk1: Disk::new(self.disk1.center.swapped(), self.disk1.radius),
            disk2: Disk::new(self.disk2.center.swapped(), self.disk2.radius),
            ..self.clone()
        }
    }

    /// The smaller of two solutions by radius; near-ties go to the
    /// lexicographically smaller first center.
    pub fn better(a: Solution, b: Solution, tol: &Tolerance) -> Solution {
        if tol.approx_eq(a.radius, b.radius) {
            if b.disk1.center.lex_cmp(&a.disk1.center).is_lt() {
                b
            } else {
                a
            }
        } else if b.radius < a.radius {
            b
        } else {
            a
        }
    }
}

// Containment inside the incremental SED uses a tiny multiplicative slack.
const SED_EPS: f64 = 1e-14;

fn sed_contains(d: &Disk, p: Point) -> bool {
    d.center.dist(p) <= d.radius * (1.0 + SED_EPS) + SED_EPS
}

/// Smallest enclosing disk by the randomized incremental method, shuffled
/// with a fixed seed so results are reproducible.
pub fn smallest_enclosing_disk(points: &[Point]) -> Result<Disk> {
    if points.is_empty() {
        return Err(Error::Empty("smallest enclosing disk of no points"));
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(sed(points))
}

/// [`smallest_enclosing_disk`] for callers that already hold a nonempty,
/// finite point list.
pub(crate) fn sed(points: &[Point]) -> Disk {
    debug_assert!(!points.is_empty());
    let mut pts = points.to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(SED_SEED);
    pts.shuffle(&mut rng);

    let mut d = Disk::new(pts[0], 0.0);
    for i in 1..pts.len() {
        if !sed_contains(&d, pts[i]) {
            d = sed_one(&pts[..i], pts[i]);
        }
    }
    d
}

fn sed_one(pts: &[Point], p: Point) -> Disk {
    let mut d = Disk::new(p, 0.0);
    for i in 0..pts.len() {
        let q = pts[i];
        if !sed_contains(&d, q) {
            d = if d.radius == 0.0 {
                diametral(p, q)
            } else {
                sed_two(&pts[..i], p, q)
            };
        }
    }
    d
}

fn sed_two(pts: &[Point], p: Point, q: Point) -> Disk {
    let base = diametral(p, q);
    let pq = q - p;
    let mut left: Option<Disk> = None;
    let mut right: Option<Disk> = None;
    for &r in pts {
        if sed_contains(&base, r) {
            continue;
        }
        let cross = pq.cross(r - p);
        let Some(c) = circumdisk(p, q, r) else {
            continue;
        };
        let side = pq.cross(c.center - p);
        if cross > 0.0 {
            if left.map_or(true, |l| side > pq.cross(l.center - p)) {
                left = Some(c);
            }
        } else if cross < 0.0 && right.map_or(true, |l| side < pq.cross(l.center - p)) {
            right = Some(c);
        }
    }
    match (left, right) {
        (None, None) => base,
        (Some(l), None) => l,
        (None, Some(r)) => r,
        (Some(l), Some(r)) => {
            if l.radius <= r.radius {
                l
            } else {
                r
            }
        }
    }
}

fn diametral(a: Point, b: Point) -> Disk {
    let c = a.midpoint(b);
    Disk::new(c, c.dist(a).max(c.dist(b)))
}

/// Circumscribed disk of three points, `None` when they are collinear.
fn circumdisk(a: Point, b: Point, c: Point) -> Option<Disk> {
    // Work relative to the bounding-box center for precision.
    let ox = (a.x.min(b.x).min(c.x) + a.x.max(b.x).max(c.x)) / 2.0;
    let oy = (a.y.min(b.y).min(c.y) + a.y.max(b.y).max(c.y)) / 2.0;
    let (ax, ay) = (a.x - ox, a.y - oy);
    let (bx, by) = (b.x - ox, b.y - oy);
    let (cx, cy) = (c.x - ox, c.y - oy);
    let d = (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by)) * 2.0;
    let span = (ax.abs() + bx.abs() + cx.abs() + ay.abs() + by.abs() + cy.abs()).max(f64::MIN_POSITIVE);
    if d.abs() <= 1e-12 * span * span {
        return None;
    }
    let a2 = ax * ax + ay * ay;
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let x = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d;
    let y = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d;
    let center = Point::new(ox + x, oy + y);
    let r = center.dist(a).max(center.dist(b)).max(center.dist(c));
    Some(Disk::new(center, r))
}

/// Disk with all 2 or 3 input points on its boundary.
pub fn circumcircle(points: &[Point]) -> Result<Disk> {
    match *points {
        [a, b] => Ok(diametral(a, b)),
        [a, b, c] => circumdisk(a, b, c).ok_or(Error::Degenerate("collinear triple")),
        _ => Err(Error::Domain(format!(
            "circumcircle needs 2 or 3 points, got {}",
            points.len()
        ))),
    }
}

/// Radii of all pair and non-collinear triple circumcircles, plus 0,
/// sorted ascending and deduplicated under `tol`.
pub fn candidate_radii(points: &[Point], tol: &Tolerance) -> Vec<f64> {
    let n = points.len();
    let mut out = Vec::with_capacity(1 + n * n / 2 + n * n * n / 6);
    out.push(0.0);
    for i in 0..n {
        for j in i + 1..n {
            out.push(0.5 * points[i].dist(points[j]));
            for k in j + 1..n {
                if let Some(d) = circumdisk(points[i], points[j], points[k]) {
                    out.push(d.radius);
                }
            }
        }
    }
    sort_dedup(out, tol)
}

/// Candidate radii of circles through `o` and one or two points of
/// `points`. Together with `candidate_radii(points)` this covers
/// `candidate_radii(points ∪ {o})`.
pub fn candidate_radii_through(o: Point, points: &[Point], tol: &Tolerance) -> Vec<f64> {
    let n = points.len();
    let mut out = Vec::with_capacity(n + n * n / 2);
    for i in 0..n {
        out.push(0.5 * o.dist(points[i]));
        for j in i + 1..n {
            if let Some(d) = circumdisk(o, points[i], points[j]) {
                out.push(d.radius);
            }
        }
    }
    sort_dedup(out, tol)
}

/// Sorts and merges runs whose values agree with the run's first element
/// up to `tol`; each run is represented by its largest member.
pub fn sort_dedup(mut v: Vec<f64>, tol: &Tolerance) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    let mut out: Vec<f64> = Vec::with_capacity(v.len());
    let mut run_start = f64::NAN;
    for x in v {
        match out.last_mut() {
            Some(last) if x - run_start <= tol.rel * run_start.abs().max(tol.abs) => *last = x,
            _ => {
                out.push(x);
                run_start = x;
            }
        }
    }
    out
}

/// Index of the first element of a sorted candidate list satisfying a
/// monotone predicate (false...false true...true).
pub fn first_feasible(cands: &[f64], mut pred: impl FnMut(f64) -> bool) -> Option<usize> {
    let (mut lo, mut hi) = (0usize, cands.len());
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if pred(cands[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    (lo < cands.len()).then_some(lo)
}

/// Smallest value across several sorted candidate lists satisfying a
/// monotone predicate; each list is searched only below the best value
/// found so far.
pub fn first_feasible_in(lists: &[&[f64]], mut pred: impl FnMut(f64) -> bool) -> Option<f64> {
    let mut best: Option<f64> = None;
    for list in lists {
        let end = match best {
            Some(b) => list.partition_point(|&x| x < b),
            None => list.len(),
        };
        if let Some(i) = first_feasible(&list[..end], &mut pred) {
            best = Some(list[i]);
        }
    }
    best
}
