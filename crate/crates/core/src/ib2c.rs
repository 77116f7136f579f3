//! Integral bichromatic 2-center: pairs and centers on the grid `[U]×[U]`.
//!
//! Every radius is handled as its integer square `k`, so the whole solver is
//! exact. The optimum is `sqrt(k)` for some `k <= 2(U-1)²`, found by binary
//! search over `k` with [`ib2c_decision`].
//!
//! The decision works in two steps. First it computes the grid points that
//! can serve as either center, row by row: a center that misses `a` must
//! cover every partner of `a`, so each point `a` contributes the set
//! `D_r(a) ∪ I_r(partners)` and the candidates are the points inside all of
//! them. Second, for each candidate `c1` the points it misses must all be
//! covered by `c2`, which is a range query per row.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct IPoint {
    pub x: i64,
    pub y: i64,
}

impl IPoint {
    pub const fn new(x: i64, y: i64) -> Self {
        IPoint { x, y }
    }

    pub fn dist2(self, o: IPoint) -> i64 {
        let (dx, dy) = (self.x - o.x, self.y - o.y);
        dx * dx + dy * dy
    }
}

impl From<[i64; 2]> for IPoint {
    fn from(a: [i64; 2]) -> Self {
        IPoint::new(a[0], a[1])
    }
}

impl From<IPoint> for [i64; 2] {
    fn from(p: IPoint) -> Self {
        [p.x, p.y]
    }
}

/// An instance in its on-disk form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ib2cInstance {
    #[serde(rename = "U")]
    pub u: i64,
    pub pairs: Vec<[IPoint; 2]>,
}

impl Ib2cInstance {
    pub fn from_json(s: &str) -> Result<Self> {
        let inst: Ib2cInstance = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        check_coords(&inst.pairs_tuples(), inst.u)?;
        Ok(inst)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn pairs_tuples(&self) -> Vec<(IPoint, IPoint)> {
        self.pairs.iter().map(|p| (p[0], p[1])).collect()
    }
}

fn check_coords(pairs: &[(IPoint, IPoint)], u: i64) -> Result<()> {
    if u < 1 {
        return Err(Error::Domain(format!("grid extent must be positive, got {u}")));
    }
    for &(a, b) in pairs {
        for q in [a, b] {
            if !(1..=u).contains(&q.x) || !(1..=u).contains(&q.y) {
                return Err(Error::CoordinateOutOfRange { x: q.x, y: q.y, u });
            }
        }
    }
    Ok(())
}

/// Pairs reduced to row-wise extreme partners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrunedInstance {
    pub u: i64,
    /// Surviving unordered pairs, each stored with its smaller point first.
    pub pairs: Vec<(IPoint, IPoint)>,
    /// For each point, its leftmost and rightmost partner on every row.
    pub partners: BTreeMap<IPoint, Vec<IPoint>>,
    /// All points of the surviving pairs, sorted.
    pub points: Vec<IPoint>,
}

/// Keeps, for each point `a`, only the leftmost and rightmost partners of
/// `a` on each row. A pair of disks covers the pruned pairs bichromatically
/// iff it covers the original ones.
pub fn prune_extremes(pairs: &[(IPoint, IPoint)], u: i64) -> Result<PrunedInstance> {
    check_coords(pairs, u)?;
    let mut rows: BTreeMap<IPoint, BTreeMap<i64, (i64, i64)>> = BTreeMap::new();
    let mut note = |a: IPoint, b: IPoint| {
        let e = rows.entry(a).or_default().entry(b.y).or_insert((b.x, b.x));
        e.0 = e.0.min(b.x);
        e.1 = e.1.max(b.x);
    };
    for &(a, b) in pairs {
        note(a, b);
        note(b, a);
    }
    let mut partners: BTreeMap<IPoint, Vec<IPoint>> = BTreeMap::new();
    let mut kept: Vec<(IPoint, IPoint)> = Vec::new();
    for (&a, by_row) in &rows {
        let list = partners.entry(a).or_default();
        for (&y, &(lo, hi)) in by_row {
            list.push(IPoint::new(lo, y));
            if hi != lo {
                list.push(IPoint::new(hi, y));
            }
        }
        for &b in list.iter() {
            kept.push(if a <= b { (a, b) } else { (b, a) });
        }
    }
    kept.sort();
    kept.dedup();
    let mut points: Vec<IPoint> = kept.iter().flat_map(|&(a, b)| [a, b]).collect();
    points.sort();
    points.dedup();
    Ok(PrunedInstance {
        u,
        pairs: kept,
        partners,
        points,
    })
}

/// Whether disks of squared radius `k` at `c1`, `c2` cover every pair with
/// one point each.
pub fn covers(pairs: &[(IPoint, IPoint)], c1: IPoint, c2: IPoint, k: i64) -> bool {
    pairs
        .iter()
        .all(|&(a, b)| (a.dist2(c1) <= k && b.dist2(c2) <= k) || (a.dist2(c2) <= k && b.dist2(c1) <= k))
}

/// Half-width of the integer chord of `D_sqrt(k)(a)` on row `y`.
fn chord(a: IPoint, y: i64, k: i64) -> Option<i64> {
    let dy = y - a.y;
    let rem = k - dy * dy;
    (rem >= 0).then(|| rem.isqrt())
}

/// Integer x-range of `I_sqrt(k)(sites)` on row `y`, clipped to `[1, u]`.
pub fn row_range(sites: &[IPoint], y: i64, k: i64, u: i64) -> Option<(i64, i64)> {
    let (mut lo, mut hi) = (1i64, u);
    for &a in sites {
        let h = chord(a, y, k)?;
        lo = lo.max(a.x - h);
        hi = hi.min(a.x + h);
        if lo > hi {
            return None;
        }
    }
    Some((lo, hi))
}

/// Counterclockwise hull of integer points, collinear points removed.
pub fn integer_hull(points: &[IPoint]) -> Vec<IPoint> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let cross = |o: IPoint, a: IPoint, b: IPoint| (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    let mut hull: Vec<IPoint> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let seq: Vec<IPoint> = if pass == 0 {
            pts.clone()
        } else {
            pts.iter().rev().copied().collect()
        };
        for p in seq {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

/// Runs of constant depth along a row, for a family of interval sets.
/// Each member contributes its (merged) intervals once; returns
/// `(lo, hi, depth)` runs covering `[1, u]`.
pub fn depth_profile(members: &[Vec<(i64, i64)>], u: i64) -> Vec<(i64, i64, usize)> {
    let mut events: Vec<(i64, i32)> = Vec::with_capacity(4 * members.len());
    for ivs in members {
        let mut ivs: Vec<(i64, i64)> = ivs
            .iter()
            .map(|&(lo, hi)| (lo.max(1), hi.min(u)))
            .filter(|&(lo, hi)| lo <= hi)
            .collect();
        ivs.sort();
        let mut merged: Vec<(i64, i64)> = Vec::with_capacity(ivs.len());
        for (lo, hi) in ivs {
            match merged.last_mut() {
                Some(last) if lo <= last.1 + 1 => last.1 = last.1.max(hi),
                _ => merged.push((lo, hi)),
            }
        }
        for (lo, hi) in merged {
            events.push((lo, 1));
            events.push((hi + 1, -1));
        }
    }
    events.sort();
    let mut out = Vec::new();
    let mut depth = 0i64;
    let mut x = 1i64;
    let mut idx = 0;
    while x <= u {
        while idx < events.len() && events[idx].0 <= x {
            depth += events[idx].1 as i64;
            idx += 1;
        }
        let next = events.get(idx).map_or(u + 1, |e| e.0.min(u + 1));
        out.push((x, next - 1, depth as usize));
        x = next;
    }
    out
}

/// Grid points usable as either center, stored per row as sorted runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateCenters {
    pub u: i64,
    rows: Vec<Vec<(i64, i64)>>,
}

impl CandidateCenters {
    /// Runs of row `y` (1-based).
    pub fn row(&self, y: i64) -> &[(i64, i64)] {
        &self.rows[(y - 1) as usize]
    }

    pub fn contains(&self, p: IPoint) -> bool {
        self.first_in(p.y, p.x, p.x).is_some()
    }

    /// Leftmost candidate of row `y` with x in `[lo, hi]`.
    pub fn first_in(&self, y: i64, lo: i64, hi: i64) -> Option<i64> {
        let runs = self.row(y);
        let idx = runs.partition_point(|r| r.1 < lo);
        let r = runs.get(idx)?;
        let x = r.0.max(lo);
        (x <= hi).then_some(x)
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }
}

/// Step 1: the grid points of `U_sqrt(k)(T')`.
pub fn candidate_centers(inst: &PrunedInstance, k: i64) -> CandidateCenters {
    let u = inst.u;
    let hulls: Vec<(IPoint, Vec<IPoint>)> = inst
        .partners
        .iter()
        .map(|(&a, ps)| (a, integer_hull(ps)))
        .collect();
    let need = hulls.len();
    let mut rows = Vec::with_capacity(u as usize);
    let mut members: Vec<Vec<(i64, i64)>> = Vec::with_capacity(need);
    for y in 1..=u {
        members.clear();
        for (a, hull) in &hulls {
            let mut ivs = Vec::with_capacity(2);
            if let Some(h) = chord(*a, y, k) {
                ivs.push((a.x - h, a.x + h));
            }
            if let Some(iv) = row_range(hull, y, k, u) {
                ivs.push(iv);
            }
            members.push(ivs);
        }
        let runs: Vec<(i64, i64)> = depth_profile(&members, u)
            .into_iter()
            .filter(|r| r.2 == need)
            .map(|r| (r.0, r.1))
            .collect();
        rows.push(runs);
    }
    CandidateCenters { u, rows }
}

/// For a center row `row`, the split of `P(p_i) = P \ D_r(p_i)` into the
/// part left of column `i` (growing with `i`) and the part right of it
/// (shrinking with `i`). `xi[a]` is the leftmost column `i >= a.x` whose
/// center misses `a`; `xi_suffix[a]` is the rightmost column `i <= a.x`
/// whose center misses `a`.
#[derive(Debug, Clone)]
pub struct PrefixDecomposition {
    pub row: i64,
    pub u: i64,
    pub k: i64,
    pub points: Vec<IPoint>,
    pub xi: Vec<Option<i64>>,
    pub xi_suffix: Vec<Option<i64>>,
}

impl PrefixDecomposition {
    pub fn new(points: &[IPoint], row: i64, k: i64, u: i64) -> Self {
        let misses = |a: IPoint, i: i64| IPoint::new(i, row).dist2(a) > k;
        let xi = points
            .iter()
            .map(|&a| first_true(a.x.max(1), u, |i| misses(a, i)))
            .collect();
        // Moving left from a.x only increases the distance, so the columns
        // missing `a` form a prefix of `1..=a.x`.
        let xi_suffix = points
            .iter()
            .map(|&a| {
                let hi = a.x.min(u);
                match first_true(1, hi, |i| !misses(a, i)) {
                    None => (hi >= 1).then_some(hi),
                    Some(i) => (i > 1).then_some(i - 1),
                }
            })
            .collect();
        PrefixDecomposition {
            row,
            u,
            k,
            points: points.to_vec(),
            xi,
            xi_suffix,
        }
    }

    /// `Q_i`: points first missed at column `i` from the left.
    pub fn q(&self, i: i64) -> Vec<IPoint> {
        self.select(|t| self.xi[t] == Some(i))
    }

    /// `P'(p_i)`.
    pub fn prefix(&self, i: i64) -> Vec<IPoint> {
        self.select(|t| self.xi[t].is_some_and(|x| x <= i))
    }

    /// `P''(p_i)`.
    pub fn suffix(&self, i: i64) -> Vec<IPoint> {
        self.select(|t| self.xi_suffix[t].is_some_and(|x| x >= i))
    }

    /// `P(p_i)` as the union of prefix and suffix parts.
    pub fn missed(&self, i: i64) -> Vec<IPoint> {
        let mut v = self.prefix(i);
        v.extend(self.suffix(i));
        v.sort();
        v.dedup();
        v
    }

    fn select(&self, keep: impl Fn(usize) -> bool) -> Vec<IPoint> {
        (0..self.points.len())
            .filter(|&t| keep(t))
            .map(|t| self.points[t])
            .collect()
    }

    /// `I_{i,j'}` for all `i` on row `y`: the x-range of points within
    /// `sqrt(k)` of all of `P(p_i)`, computed incrementally from the `Q_i`
    /// on the prefix side and symmetrically on the suffix side.
    pub fn intervals(&self, y: i64) -> Vec<Option<(i64, i64)>> {
        let n = self.u as usize;
        let clip = |acc: Option<(i64, i64)>, a: IPoint| -> Option<(i64, i64)> {
            let (lo, hi) = acc?;
            let h = chord(a, y, self.k)?;
            let (lo, hi) = (lo.max(a.x - h), hi.min(a.x + h));
            (lo <= hi).then_some((lo, hi))
        };
        let mut by_xi: Vec<Vec<IPoint>> = vec![Vec::new(); n + 2];
        let mut by_suffix: Vec<Vec<IPoint>> = vec![Vec::new(); n + 2];
        for (t, &a) in self.points.iter().enumerate() {
            if let Some(i) = self.xi[t] {
                by_xi[i as usize].push(a);
            }
            if let Some(i) = self.xi_suffix[t] {
                by_suffix[i as usize].push(a);
            }
        }
        let mut prefix = vec![None; n + 1];
        let mut acc = Some((1, self.u));
        for i in 1..=n {
            for &a in &by_xi[i] {
                acc = clip(acc, a);
            }
            prefix[i] = acc;
        }
        let mut out = vec![None; n];
        let mut acc = Some((1, self.u));
        for i in (1..=n).rev() {
            for &a in &by_suffix[i] {
                acc = clip(acc, a);
            }
            out[i - 1] = match (prefix[i], acc) {
                (Some(p), Some(s)) => {
                    let (lo, hi) = (p.0.max(s.0), p.1.min(s.1));
                    (lo <= hi).then_some((lo, hi))
                }
                _ => None,
            };
        }
        out
    }
}

/// Smallest `i` in `lo..=hi` with `pred(i)`, for a predicate that is false
/// then true.
fn first_true(lo: i64, hi: i64, pred: impl Fn(i64) -> bool) -> Option<i64> {
    let (mut a, mut b) = (lo, hi + 1);
    while a < b {
        let m = a + (b - a) / 2;
        if pred(m) {
            b = m;
        } else {
            a = m + 1;
        }
    }
    (a <= hi).then_some(a)
}

/// Integral centers `(c1, c2)` of disks with squared radius `k` covering
/// the pruned pairs bichromatically, if any exist. The first feasible `c1`
/// in row-major order is reported.
pub fn ib2c_decision(inst: &PrunedInstance, k: i64) -> Option<(IPoint, IPoint)> {
    let u = inst.u;
    if inst.points.is_empty() {
        return Some((IPoint::new(1, 1), IPoint::new(1, 1)));
    }
    let centers = candidate_centers(inst, k);
    if centers.is_empty() {
        return None;
    }
    let pts = &inst.points;
    let words = pts.len().div_ceil(64);
    let mut memo: HashMap<Vec<u64>, Option<IPoint>> = HashMap::new();
    let mut cuts: Vec<i64> = Vec::with_capacity(2 * pts.len() + 2);
    for y in 1..=u {
        if centers.row(y).is_empty() {
            continue;
        }
        // The set of missed points is constant between consecutive cuts.
        cuts.clear();
        cuts.push(1);
        for &a in pts {
            if let Some(h) = chord(a, y, k) {
                cuts.push((a.x - h).max(1));
                cuts.push((a.x + h + 1).max(1));
            }
        }
        cuts.retain(|&x| x <= u);
        cuts.sort_unstable();
        cuts.dedup();
        for (t, &lo) in cuts.iter().enumerate() {
            let hi = cuts.get(t + 1).map_or(u, |&x| x - 1);
            let Some(x1) = centers.first_in(y, lo, hi) else {
                continue;
            };
            let c1 = IPoint::new(x1, y);
            let mut key = vec![0u64; words];
            let mut missed = Vec::new();
            for (s, &a) in pts.iter().enumerate() {
                if a.dist2(c1) > k {
                    key[s / 64] |= 1 << (s % 64);
                    missed.push(a);
                }
            }
            let hit = *memo
                .entry(key)
                .or_insert_with(|| first_center_covering(&centers, &integer_hull(&missed), k));
            if let Some(c2) = hit {
                return Some((c1, c2));
            }
        }
    }
    None
}

fn first_center_covering(centers: &CandidateCenters, sites: &[IPoint], k: i64) -> Option<IPoint> {
    (1..=centers.u).find_map(|y| {
        let (lo, hi) = row_range(sites, y, k, centers.u)?;
        centers.first_in(y, lo, hi).map(|x| IPoint::new(x, y))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ib2cSolution {
    /// Squared radius.
    pub k: i64,
    pub c1: IPoint,
    pub c2: IPoint,
}

impl Ib2cSolution {
    pub fn radius(&self) -> f64 {
        (self.k as f64).sqrt()
    }
}

/// Optimal integral solution: the smallest `k` in `0..=2(U-1)²` whose
/// decision succeeds.
pub fn ib2c_solve(pairs: &[(IPoint, IPoint)], u: i64) -> Result<Ib2cSolution> {
    let inst = prune_extremes(pairs, u)?;
    if inst.pairs.is_empty() {
        return Ok(Ib2cSolution {
            k: 0,
            c1: IPoint::new(1, 1),
            c2: IPoint::new(1, 1),
        });
    }
    let (mut lo, mut hi) = (0i64, 2 * (u - 1) * (u - 1));
    let mut found = ib2c_decision(&inst, hi).expect("the largest radius covers the grid");
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match ib2c_decision(&inst, mid) {
            Some(w) => {
                hi = mid;
                found = w;
            }
            None => lo = mid + 1,
        }
    }
    Ok(Ib2cSolution {
        k: hi,
        c1: found.0,
        c2: found.1,
    })
}
