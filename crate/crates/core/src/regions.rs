//! Regions cut out by congruent disks.
//!
//! [`CommonIntersection`] is `I_r(A)`, the intersection of the radius-`r`
//! disks centered at the sites `A`. It is convex and its boundary is a
//! cyclic sequence of arcs, each keyed by its site and the range of outward
//! normal angles it spans.
//!
//! [`UnionChain`] is `U_r(S')`, the intersection over pairs `(p, p')` of
//! `D_r(p) ∪ D_r(p')`. When an anchor `c` has every pair point within `r`,
//! the region is star-shaped around `c` and its boundary is stored as a
//! radial function: angular pieces around `c`, each naming the site whose
//! circle bounds the region in that direction.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::error::{Error, Result};
use crate::geometry::{sed, Point, PointPair, Tolerance};

const ANGLE_EPS: f64 = 1e-9;

/// A boundary arc of a disk-intersection region. Points of the arc are
/// `site + r * unit(theta)` for `theta` in `[start, end]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arc {
    pub site: Point,
    pub start: f64,
    pub end: f64,
}

impl Arc {
    pub fn point_at(&self, theta: f64, r: f64) -> Point {
        self.site + Point::unit(theta) * r
    }

    pub fn is_full(&self) -> bool {
        self.end - self.start >= TAU - ANGLE_EPS
    }

    pub fn contains_angle(&self, theta: f64) -> bool {
        let t = (theta - self.start).rem_euclid(TAU);
        t <= self.end - self.start + ANGLE_EPS || t >= TAU - ANGLE_EPS
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Shape {
    Empty,
    /// The disks meet in a single point (up to tolerance).
    Point(Point),
    Arcs(Vec<Arc>),
}

#[derive(Debug, Clone, Copy)]
struct ChainPiece {
    site: Point,
    t0: f64,
    t1: f64,
}

/// `{ x : (x, line_y) in region }`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval1D {
    pub low: f64,
    pub high: f64,
    pub line_y: f64,
    pub empty: bool,
}

impl Interval1D {
    pub fn new(low: f64, high: f64, line_y: f64) -> Self {
        Interval1D {
            low,
            high,
            line_y,
            empty: false,
        }
    }

    pub fn empty(line_y: f64) -> Self {
        Interval1D {
            low: f64::INFINITY,
            high: f64::NEG_INFINITY,
            line_y,
            empty: true,
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        !self.empty && self.low <= x && x <= self.high
    }
}

/// The convex region `I_r(A)`.
#[derive(Debug, Clone)]
pub struct CommonIntersection {
    radius: f64,
    sites: Vec<Point>,
    shape: Shape,
    center: Option<Point>,
    right_chain: Vec<ChainPiece>,
    left_chain: Vec<ChainPiece>,
    tol: Tolerance,
}

/// Builds `I_r(A)`. Only convex-hull vertices of `A` can bound the region,
/// so arcs are computed over the hull.
pub fn common_intersection(sites: &[Point], r: f64, tol: &Tolerance) -> Result<CommonIntersection> {
    if sites.is_empty() {
        return Err(Error::Empty("common intersection of no disks"));
    }
    if !(r >= 0.0) || sites.iter().any(|p| !p.is_finite()) {
        return Err(Error::Domain(format!("bad radius {r} or non-finite site")));
    }
    Ok(CommonIntersection::build(sites, r, *tol))
}

impl CommonIntersection {
    fn build(sites: &[Point], r: f64, tol: Tolerance) -> Self {
        let hull = convex_hull(sites);
        let sed = sed(&hull);
        let mut region = CommonIntersection {
            radius: r,
            sites: hull,
            shape: Shape::Empty,
            center: None,
            right_chain: Vec::new(),
            left_chain: Vec::new(),
            tol,
        };
        if !tol.le(sed.radius, r) {
            return region;
        }
        region.center = Some(sed.center);
        if r - sed.radius <= tol.slack(r) {
            region.shape = Shape::Point(sed.center);
            return region;
        }
        let arcs = if region.sites.len() == 1 {
            vec![Arc {
                site: region.sites[0],
                start: -PI,
                end: PI,
            }]
        } else {
            hull_arcs(&region.sites, r)
        };
        region.right_chain = chain(&arcs, -FRAC_PI_2);
        region.left_chain = chain(&arcs, FRAC_PI_2);
        region.shape = Shape::Arcs(arcs);
        region
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Hull vertices of the defining sites.
    pub fn sites(&self) -> &[Point] {
        &self.sites
    }

    pub fn is_empty(&self) -> bool {
        self.shape == Shape::Empty
    }

    pub fn arcs(&self) -> &[Arc] {
        match &self.shape {
            Shape::Arcs(a) => a,
            _ => &[],
        }
    }

    /// Some point of the region (the center of the sites' enclosing disk).
    pub fn interior_point(&self) -> Option<Point> {
        self.center
    }

    /// Junctions between consecutive arcs; a lone point for a degenerate
    /// region; nothing for a full disk or the empty set.
    pub fn vertices(&self) -> Vec<Point> {
        match &self.shape {
            Shape::Empty => Vec::new(),
            Shape::Point(p) => vec![*p],
            Shape::Arcs(arcs) if arcs.len() == 1 && arcs[0].is_full() => Vec::new(),
            Shape::Arcs(arcs) => arcs.iter().map(|a| a.point_at(a.end, self.radius)).collect(),
        }
    }

    /// Points on the boundary: vertices plus arc midpoints.
    pub fn boundary_samples(&self) -> Vec<Point> {
        let mut out = self.vertices();
        for a in self.arcs() {
            out.push(a.point_at(0.5 * (a.start + a.end), self.radius));
        }
        out
    }

    pub fn contains(&self, q: Point) -> bool {
        !self.is_empty() && self.sites.iter().all(|&a| self.tol.contains(a, self.radius, q))
    }

    /// `∂I ∩ ∂D_r(c)`.
    pub fn boundary_crossings(&self, c: Point) -> Vec<Point> {
        let mut out = Vec::new();
        match &self.shape {
            Shape::Empty => {}
            Shape::Point(p) => {
                if self.tol.approx_eq(p.dist(c), self.radius) {
                    out.push(*p);
                }
            }
            Shape::Arcs(arcs) => {
                for a in arcs {
                    for x in circle_intersections(a.site, c, self.radius, &self.tol) {
                        if a.contains_angle((x - a.site).angle()) {
                            out.push(x);
                        }
                    }
                }
            }
        }
        out
    }

    /// Horizontal line intersection by binary search on the two
    /// y-monotone boundary chains.
    pub fn hli(&self, y: f64) -> Interval1D {
        let r = self.radius;
        match &self.shape {
            Shape::Empty => Interval1D::empty(y),
            Shape::Point(p) => {
                if (p.y - y).abs() <= self.tol.slack(r) {
                    Interval1D::new(p.x, p.x, y)
                } else {
                    Interval1D::empty(y)
                }
            }
            Shape::Arcs(_) => {
                let (Some(first), Some(last)) = (self.right_chain.first(), self.right_chain.last()) else {
                    return Interval1D::empty(y);
                };
                let ymin = first.site.y + r * first.t0.sin();
                let ymax = last.site.y + r * last.t1.sin();
                let slack = self.tol.slack(r);
                if y < ymin - slack || y > ymax + slack {
                    return Interval1D::empty(y);
                }
                let yc = y.clamp(ymin, ymax);
                let high = chain_x(&self.right_chain, yc, r, 1.0);
                let low = chain_x(&self.left_chain, yc, r, -1.0);
                Interval1D::new(low.min(high), high.max(low), y)
            }
        }
    }
}

/// Right chain: normal angles in `[-π/2, π/2]`, y increasing, boundary to
/// the right of each site. Left chain: `[π/2, 3π/2]`, y decreasing.
fn chain(arcs: &[Arc], window_start: f64) -> Vec<ChainPiece> {
    let lo = window_start;
    let hi = window_start + PI;
    let mut out = Vec::new();
    for a in arcs {
        for k in -2..=2 {
            let s = a.start + TAU * k as f64;
            let e = a.end + TAU * k as f64;
            let t0 = s.max(lo);
            let t1 = e.min(hi);
            if t0 <= t1 {
                out.push(ChainPiece { site: a.site, t0, t1 });
            }
        }
    }
    out.sort_by(|a, b| a.t0.total_cmp(&b.t0));
    out
}

fn chain_x(chain: &[ChainPiece], y: f64, r: f64, side: f64) -> f64 {
    let ys = |p: &ChainPiece| p.site.y + r * p.t0.sin();
    let ye = |p: &ChainPiece| p.site.y + r * p.t1.sin();
    // Along the right chain y increases, along the left chain it decreases.
    let idx = if side > 0.0 {
        chain.partition_point(|p| ys(p) <= y)
    } else {
        chain.partition_point(|p| ys(p) >= y)
    };
    let piece = &chain[idx.saturating_sub(1)];
    let on_arc = if side > 0.0 {
        y <= ye(piece)
    } else {
        y >= ye(piece)
    };
    if on_arc {
        let dy = y - piece.site.y;
        piece.site.x + side * (r * r - dy * dy).max(0.0).sqrt()
    } else {
        piece.site.x + r * piece.t1.cos()
    }
}

fn hull_arcs(hull: &[Point], r: f64) -> Vec<Arc> {
    let mut arcs = Vec::with_capacity(hull.len());
    for (i, &a) in hull.iter().enumerate() {
        let mut reference: Option<f64> = None;
        let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
        for (j, &b) in hull.iter().enumerate() {
            if i == j {
                continue;
            }
            let v = b - a;
            let d = v.norm();
            let w = v.y.atan2(v.x);
            let hw = (d / (2.0 * r)).min(1.0).acos();
            let w0 = *reference.get_or_insert(w);
            let rel = wrap_pi(w - w0);
            lo = lo.max(rel - hw);
            hi = hi.min(rel + hw);
        }
        if lo <= hi {
            let w0 = reference.unwrap_or(0.0);
            let start = (w0 + lo).rem_euclid(TAU);
            arcs.push(Arc {
                site: a,
                start,
                end: start + (hi - lo),
            });
        }
    }
    arcs.sort_by(|a, b| a.start.total_cmp(&b.start));
    arcs
}

fn wrap_pi(a: f64) -> f64 {
    let t = (a + PI).rem_euclid(TAU) - PI;
    if t <= -PI {
        t + TAU
    } else {
        t
    }
}

/// Strict convex hull (counterclockwise, collinear points dropped) of the
/// distinct input points.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.lex_cmp(b));
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut hull: Vec<Point> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Point>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2 {
                let a = hull[hull.len() - 2];
                let b = hull[hull.len() - 1];
                if (b - a).cross(p - a) <= 0.0 {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        hull.pop();
    }
    if hull.len() < 2 {
        // All points collinear and the passes collapsed; keep the extremes.
        return vec![pts[0], pts[pts.len() - 1]];
    }
    hull
}

/// Intersection points of the radius-`r` circles around `a` and `b`;
/// a single point when they are tangent up to tolerance.
pub fn circle_intersections(a: Point, b: Point, r: f64, tol: &Tolerance) -> Vec<Point> {
    circle_intersections_with(a, r, b, r, tol)
}

/// As [`circle_intersections`] for circles of radii `ra` and `rb`.
pub fn circle_intersections_with(a: Point, ra: f64, b: Point, rb: f64, tol: &Tolerance) -> Vec<Point> {
    let v = b - a;
    let d = v.norm();
    let big = ra.max(rb);
    if d == 0.0 || !tol.le(d, ra + rb) || !tol.le((ra - rb).abs(), d) {
        return Vec::new();
    }
    // Distance from `a` to the chord, along `v`.
    let t = (0.5 * (d * d + ra * ra - rb * rb) / d).clamp(-ra, ra);
    let foot = a + v * (t / d);
    let h = (ra * ra - t * t).max(0.0).sqrt();
    if h <= tol.slack(big) {
        return vec![foot];
    }
    let perp = Point::new(-v.y, v.x) * (h / d);
    vec![foot + perp, foot - perp]
}

#[derive(Debug, Clone, Copy)]
struct Piece {
    start: f64,
    site: usize,
}

/// The star-shaped region `U_r(S')` around an anchor.
#[derive(Debug, Clone)]
pub struct UnionChain {
    radius: f64,
    pairs: Vec<PointPair>,
    anchor: Point,
    sites: Vec<Point>,
    pieces: Vec<Piece>,
    tol: Tolerance,
}

/// Builds `U_r(S')`; every pair point must lie in `D_r(anchor)`.
pub fn union_chain(pairs: &[PointPair], anchor: Point, r: f64, tol: &Tolerance) -> Result<UnionChain> {
    if pairs.is_empty() {
        return Err(Error::Empty("union chain of no pairs"));
    }
    if !(r >= 0.0) || !anchor.is_finite() {
        return Err(Error::Domain(format!("bad radius {r} or anchor")));
    }
    for p in pairs {
        for q in p.points() {
            if !tol.contains(anchor, r, q) {
                return Err(Error::Domain(format!(
                    "pair point ({}, {}) lies outside D_r(anchor)",
                    q.x, q.y
                )));
            }
        }
    }
    Ok(UnionChain::build(pairs, anchor, r, *tol))
}

#[derive(Clone, Copy, PartialEq)]
enum EnvOp {
    Min,
    Max,
}

impl UnionChain {
    /// The radius is raised to the farthest pair point if needed, so the
    /// anchor lies in every disk exactly and not just within tolerance.
    fn build(pairs: &[PointPair], anchor: Point, r: f64, tol: Tolerance) -> Self {
        let sites: Vec<Point> = pairs.iter().flat_map(|p| p.points()).collect();
        let r = sites.iter().map(|q| q.dist(anchor)).fold(r, f64::max);
        let mut chain = UnionChain {
            radius: r,
            pairs: pairs.to_vec(),
            anchor,
            sites,
            pieces: Vec::new(),
            tol,
        };
        let envs: Vec<Vec<Piece>> = (0..pairs.len())
            .map(|k| {
                chain.merge(
                    &[Piece {
                        start: 0.0,
                        site: 2 * k,
                    }],
                    &[Piece {
                        start: 0.0,
                        site: 2 * k + 1,
                    }],
                    EnvOp::Max,
                )
            })
            .collect();
        chain.pieces = chain.lower_envelope(envs);
        chain
    }

    fn lower_envelope(&self, mut envs: Vec<Vec<Piece>>) -> Vec<Piece> {
        while envs.len() > 1 {
            let mut next = Vec::with_capacity(envs.len() / 2 + 1);
            let mut it = envs.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(self.merge(&a, &b, EnvOp::Min)),
                    None => next.push(a),
                }
            }
            envs = next;
        }
        envs.pop().unwrap_or_default()
    }

    /// Distance from the anchor to where the ray at angle `phi` leaves
    /// `D_r(site)`.
    fn exit(&self, site: Point, phi: f64) -> f64 {
        exit_distance(self.anchor, site, self.radius, phi)
    }

    fn merge(&self, a: &[Piece], b: &[Piece], op: EnvOp) -> Vec<Piece> {
        let mut cuts: Vec<f64> = a.iter().chain(b).map(|p| p.start).collect();
        cuts.sort_by(f64::total_cmp);
        cuts.dedup();
        let (mut ia, mut ib) = (0usize, 0usize);
        let mut out: Vec<Piece> = Vec::new();
        for (k, &lo) in cuts.iter().enumerate() {
            let hi = cuts.get(k + 1).copied().unwrap_or(TAU);
            while ia + 1 < a.len() && a[ia + 1].start <= lo {
                ia += 1;
            }
            while ib + 1 < b.len() && b[ib + 1].start <= lo {
                ib += 1;
            }
            let (sa, sb) = (a[ia].site, b[ib].site);
            let (pa, pb) = (self.sites[sa], self.sites[sb]);
            if pa == pb {
                push_piece(&mut out, lo, sa);
                continue;
            }
            let mut splits = vec![lo];
            let near = self.tol.slack(self.radius);
            let mut xs: Vec<f64> = Vec::new();
            for x in circle_intersections(pa, pb, self.radius, &self.tol) {
                if x.dist(self.anchor) > near {
                    xs.push((x - self.anchor).angle());
                } else {
                    // Both circles pass through the anchor. The exits are
                    // then `2·b` and switch where the projections agree.
                    let w = (pa - pb).angle() + FRAC_PI_2;
                    xs.extend([w.rem_euclid(TAU), (w + PI).rem_euclid(TAU)]);
                }
            }
            // A circle through the anchor gives an exit that is zero on a
            // half-plane of directions, with kinks where it leaves zero.
            for q in [pa, pb] {
                let d = q - self.anchor;
                if (d.norm() - self.radius).abs() <= near {
                    let w = d.angle() + FRAC_PI_2;
                    xs.extend([w.rem_euclid(TAU), (w + PI).rem_euclid(TAU)]);
                }
            }
            xs.retain(|&t| t > lo && t < hi);
            xs.sort_by(f64::total_cmp);
            splits.extend(xs);
            for (m, &s) in splits.iter().enumerate() {
                let e = splits.get(m + 1).copied().unwrap_or(hi);
                let mid = 0.5 * (s + e);
                let (ta, tb) = (self.exit(pa, mid), self.exit(pb, mid));
                let pick_a = match op {
                    EnvOp::Min => ta <= tb,
                    EnvOp::Max => ta >= tb,
                };
                push_piece(&mut out, s, if pick_a { sa } else { sb });
            }
        }
        out
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn anchor(&self) -> Point {
        self.anchor
    }

    pub fn pairs(&self) -> &[PointPair] {
        &self.pairs
    }

    /// `(start angle, site)` for each boundary piece, in angular order
    /// around the anchor.
    pub fn boundary(&self) -> Vec<(f64, Point)> {
        self.pieces
            .iter()
            .map(|p| (p.start, self.sites[p.site]))
            .collect()
    }

    /// Distance from the anchor to the boundary in direction `phi`.
    pub fn radial(&self, phi: f64) -> f64 {
        let phi = phi.rem_euclid(TAU);
        let idx = self.pieces.partition_point(|p| p.start <= phi).saturating_sub(1);
        self.exit(self.sites[self.pieces[idx].site], phi)
    }

    pub fn contains(&self, q: Point) -> bool {
        let v = q - self.anchor;
        let d = v.norm();
        if d <= self.tol.slack(self.radius) {
            return true;
        }
        self.tol.le(d, self.radial(v.angle()))
    }

    /// Boundary points where the bounding site changes.
    pub fn vertices(&self) -> Vec<Point> {
        self.pieces
            .iter()
            .map(|p| self.anchor + Point::unit(p.start) * self.exit(self.sites[p.site], p.start))
            .collect()
    }

    fn distinct_sites(&self) -> Vec<Point> {
        let mut s: Vec<Point> = self.pieces.iter().map(|p| self.sites[p.site]).collect();
        s.sort_by(|a, b| a.lex_cmp(b));
        s.dedup();
        s
    }
}

fn push_piece(out: &mut Vec<Piece>, start: f64, site: usize) {
    match out.last() {
        Some(last) if last.site == site => {}
        _ => out.push(Piece { start, site }),
    }
}

fn exit_distance(anchor: Point, site: Point, r: f64, phi: f64) -> f64 {
    let d = site - anchor;
    let b = d.dot(Point::unit(phi));
    let disc = r * r - d.norm2() + b * b;
    if disc < 0.0 {
        0.0
    } else {
        (b + disc.sqrt()).max(0.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Closed,
    /// Interiors must meet; contacts within tolerance do not count.
    Open,
}

/// A point of `U ∩ I` (closed mode) or of the intersection of their
/// interiors (open mode), if one exists.
///
/// The closed test enumerates the junctions of the boundary of `U ∩ I`:
/// vertices of either region and crossings of their bounding circles, plus
/// one boundary sample per region for the corner-free cases. The open test
/// runs the closed test on both regions shrunk by `tol.open_margin`.
pub fn regions_intersect(u: &UnionChain, i: &CommonIntersection, mode: Mode) -> Option<Point> {
    match mode {
        Mode::Closed => closed_witness(u, i),
        Mode::Open => {
            let r = u.radius * (1.0 - u.tol.open_margin);
            let us = UnionChain::build(&u.pairs, u.anchor, r, u.tol);
            let is = CommonIntersection::build(&i.sites, r, i.tol);
            closed_witness(&us, &is)
        }
    }
}

fn closed_witness(u: &UnionChain, i: &CommonIntersection) -> Option<Point> {
    if i.is_empty() {
        return None;
    }
    let hit = |q: &Point| i.contains(*q) && u.contains(*q);
    let mut first: Vec<Point> = vec![u.anchor];
    first.extend(i.boundary_samples());
    first.extend(i.interior_point());
    first.extend(u.vertices());
    if let Some(q) = first.iter().find(|q| hit(q)) {
        return Some(*q);
    }
    let usites = u.distinct_sites();
    for a in i.arcs() {
        for &s in &usites {
            for q in circle_intersections_with(a.site, i.radius, s, u.radius, &u.tol) {
                if hit(&q) {
                    return Some(q);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn single_site_is_the_disk() {
        let i = common_intersection(&[p(1.0, 2.0)], 1.5, &tol()).unwrap();
        assert!(i.contains(p(1.0, 3.5)));
        assert!(!i.contains(p(1.0, 3.6)));
        assert_eq!(i.arcs().len(), 1);
        assert!(i.vertices().is_empty());
    }

    #[test]
    fn lens_at_exactly_two_r_is_a_point() {
        let i = common_intersection(&[p(0.0, 0.0), p(2.0, 0.0)], 1.0, &tol()).unwrap();
        assert!(!i.is_empty());
        assert_eq!(i.vertices(), vec![p(1.0, 0.0)]);
        assert!(i.contains(p(1.0, 0.0)));
        assert!(!i.contains(p(1.0, 0.01)));
    }

    #[test]
    fn far_sites_are_empty() {
        let i = common_intersection(&[p(0.0, 0.0), p(3.0, 0.0)], 1.0, &tol()).unwrap();
        assert!(i.is_empty());
        assert!(!i.contains(p(1.5, 0.0)));
        assert!(i.hli(0.0).empty);
    }

    #[test]
    fn rejects_empty_sites() {
        assert!(common_intersection(&[], 1.0, &tol()).is_err());
        assert!(union_chain(&[], p(0.0, 0.0), 1.0, &tol()).is_err());
    }

    #[test]
    fn lens_arcs_and_vertices() {
        let i = common_intersection(&[p(0.0, 0.0), p(1.0, 0.0)], 1.0, &tol()).unwrap();
        assert_eq!(i.arcs().len(), 2);
        let mut v = i.vertices();
        v.sort_by(|a, b| a.y.total_cmp(&b.y));
        let h = 0.75f64.sqrt();
        assert!((v[0].x - 0.5).abs() < 1e-12 && (v[0].y + h).abs() < 1e-12);
        assert!((v[1].x - 0.5).abs() < 1e-12 && (v[1].y - h).abs() < 1e-12);
    }

    #[test]
    fn hli_examples() {
        let d = common_intersection(&[p(0.0, 0.0)], 1.0, &tol()).unwrap();
        let iv = d.hli(0.0);
        assert!((iv.low + 1.0).abs() < 1e-12 && (iv.high - 1.0).abs() < 1e-12);
        assert!(d.hli(2.0).empty);

        // Chords of D_1(0,0) and D_1(1,0) at y = 0.5: [1 - w, w], w = sqrt(0.75).
        let lens = common_intersection(&[p(0.0, 0.0), p(1.0, 0.0)], 1.0, &tol()).unwrap();
        let iv = lens.hli(0.5);
        let w = 0.75f64.sqrt();
        assert!((iv.low - (1.0 - w)).abs() < 1e-12, "{iv:?}");
        assert!((iv.high - w).abs() < 1e-12, "{iv:?}");
    }

    #[test]
    fn union_chain_degenerate_pair_is_a_disk() {
        let u = union_chain(
            &[PointPair::new(p(0.0, 0.0), p(0.0, 0.0))],
            p(0.0, 0.0),
            1.0,
            &tol(),
        )
        .unwrap();
        assert!(u.contains(p(0.0, 1.0)));
        assert!(u.contains(p(-0.7, 0.7)));
        assert!(!u.contains(p(0.0, 1.01)));
    }

    #[test]
    fn union_chain_one_pair_is_union() {
        let pair = PointPair::new(p(-0.5, 0.0), p(0.5, 0.0));
        let u = union_chain(&[pair], p(0.0, 0.0), 1.0, &tol()).unwrap();
        assert!(u.contains(p(1.5, 0.0)));
        assert!(u.contains(p(-1.5, 0.0)));
        assert!(!u.contains(p(0.0, 0.9)));
        assert!(u.contains(p(0.0, 0.85)));
    }

    #[test]
    fn circles_of_different_radii() {
        let xs = circle_intersections_with(p(0.0, 0.0), 2.0, p(3.0, 0.0), 1.0, &tol());
        assert_eq!(xs, vec![p(2.0, 0.0)]);
        let xs = circle_intersections_with(p(0.0, 0.0), 5.0, p(4.0, 0.0), 3.0, &tol());
        assert_eq!(xs.len(), 2);
        for x in xs {
            assert!((x.norm() - 5.0).abs() < 1e-12 && (x.dist(p(4.0, 0.0)) - 3.0).abs() < 1e-12);
        }
        assert!(circle_intersections_with(p(0.0, 0.0), 5.0, p(1.0, 0.0), 1.0, &tol()).is_empty());
    }

    fn agrees_with_naive(u: &UnionChain, pairs: &[PointPair], r: f64) {
        let c = u.anchor();
        let step = 0.035 * r;
        for a in -60..=60 {
            for b in -60..=60 {
                let q = c + p(a as f64 * step, b as f64 * step);
                let naive = pairs
                    .iter()
                    .map(|s| s.first.dist(q).min(s.second.dist(q)))
                    .fold(0.0, f64::max);
                if naive < r - 1e-6 {
                    assert!(u.contains(q), "{q:?} should be inside");
                } else if naive > r + 1e-6 {
                    assert!(!u.contains(q), "{q:?} should be outside");
                }
            }
        }
    }

    #[test]
    fn union_chain_pair_circles_through_anchor() {
        let pairs = [
            PointPair::new(p(1.0, 0.0), p(-0.6, 0.8)),
            PointPair::new(p(0.3, 0.1), p(-0.2, -0.4)),
        ];
        let u = union_chain(&pairs, p(0.0, 0.0), 1.0, &tol()).unwrap();
        agrees_with_naive(&u, &pairs, 1.0);
    }

    #[test]
    fn union_chain_radius_just_below_farthest_point() {
        let pairs = [
            PointPair::new(p(1.0, 0.0), p(-1.0, 0.0)),
            PointPair::new(p(0.2, 0.5), p(0.1, -0.3)),
        ];
        let r = 1.0 - 4.0 * f64::EPSILON;
        let u = union_chain(&pairs, p(0.0, 0.0), r, &tol()).unwrap();
        assert!(u.contains(p(0.5, 0.5)));
        agrees_with_naive(&u, &pairs, r);
    }

    #[test]
    fn union_chain_both_pair_points_on_anchor_circle() {
        let pairs = [
            PointPair::new(
                p(62.4071426656068, 58.57048452575731),
                p(47.021791165344, 52.72648035649983),
            ),
            PointPair::new(
                p(54.04375951110555, 48.77716064474642),
                p(55.836950169785176, 53.000348730633675),
            ),
        ];
        let anchor = p(57.58855126245913, 48.08195842111469);
        let r = 11.542443543646131;
        let u = union_chain(&pairs, anchor, r, &tol().with_scale(100.0)).unwrap();
        agrees_with_naive(&u, &pairs, r);
    }

    #[test]
    fn union_chain_checks_anchor() {
        let pair = PointPair::new(p(0.0, 0.0), p(3.0, 0.0));
        assert!(matches!(
            union_chain(&[pair], p(0.0, 0.0), 1.0, &tol()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn intersect_examples() {
        let u = union_chain(
            &[PointPair::new(p(0.0, 0.0), p(0.0, 0.0))],
            p(0.0, 0.0),
            1.0,
            &tol(),
        )
        .unwrap();
        let overlapping = common_intersection(&[p(0.5, 0.0)], 1.0, &tol()).unwrap();
        let w = regions_intersect(&u, &overlapping, Mode::Closed).unwrap();
        assert!(overlapping.contains(w) && u.contains(w));

        let empty = common_intersection(&[p(0.0, 0.0), p(5.0, 0.0)], 1.0, &tol()).unwrap();
        assert!(regions_intersect(&u, &empty, Mode::Closed).is_none());

        let tangent = common_intersection(&[p(2.0, 0.0)], 1.0, &tol()).unwrap();
        let w = regions_intersect(&u, &tangent, Mode::Closed).unwrap();
        assert!(w.dist(p(1.0, 0.0)) < 1e-9);
        assert!(regions_intersect(&u, &tangent, Mode::Open).is_none());
        assert!(regions_intersect(&u, &overlapping, Mode::Open).is_some());
    }

    #[test]
    fn hull_drops_interior_and_collinear() {
        let h = convex_hull(&[p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0), p(1.0, 1.0), p(1.0, 0.2)]);
        assert_eq!(h.len(), 3);
        let h = convex_hull(&[p(0.0, 0.0), p(1.0, 1.0), p(2.0, 2.0)]);
        assert_eq!(h, vec![p(0.0, 0.0), p(2.0, 2.0)]);
        assert_eq!(convex_hull(&[p(1.0, 1.0), p(1.0, 1.0)]), vec![p(1.0, 1.0)]);
    }
}
