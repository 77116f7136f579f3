use bicenter::ib2c::{
    candidate_centers, covers, depth_profile, ib2c_decision, integer_hull, prune_extremes, row_range, IPoint,
    PrefixDecomposition, PrunedInstance,
};
use proptest::prelude::*;

fn instance() -> impl Strategy<Value = (i64, Vec<(IPoint, IPoint)>, i64)> {
    (2i64..=7).prop_flat_map(|u| {
        let pt = (1..=u, 1..=u).prop_map(|(x, y)| IPoint::new(x, y));
        (
            Just(u),
            prop::collection::vec((pt.clone(), pt), 1..12),
            0..=2 * (u - 1) * (u - 1),
        )
    })
}

fn cells(u: i64) -> Vec<IPoint> {
    (1..=u)
        .flat_map(|y| (1..=u).map(move |x| IPoint::new(x, y)))
        .collect()
}

/// A center can serve as either disk iff every point it misses has all of
/// its partners inside it.
fn usable(inst: &PrunedInstance, c: IPoint, k: i64) -> bool {
    inst.partners
        .iter()
        .all(|(&a, ps)| a.dist2(c) <= k || ps.iter().all(|b| b.dist2(c) <= k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn depth_sweep_matches_direct_count((u, pairs, k) in instance(), y in 1i64..=7) {
        let y = y.min(u);
        let inst = prune_extremes(&pairs, u).unwrap();
        let members: Vec<(IPoint, Vec<(i64, i64)>)> = inst
            .partners
            .iter()
            .map(|(&a, ps)| {
                let mut ivs = Vec::new();
                let dy = a.y - y;
                if dy * dy <= k {
                    let h = ((k - dy * dy) as f64).sqrt().floor() as i64;
                    ivs.push((a.x - h, a.x + h));
                }
                ivs.extend(row_range(&integer_hull(ps), y, k, u));
                (a, ivs)
            })
            .collect();
        let sets: Vec<Vec<(i64, i64)>> = members.iter().map(|m| m.1.clone()).collect();
        let runs = depth_profile(&sets, u);
        prop_assert_eq!(runs.first().map(|r| r.0), Some(1));
        prop_assert_eq!(runs.last().map(|r| r.1), Some(u));
        for (lo, hi, depth) in runs {
            for x in lo..=hi {
                let c = IPoint::new(x, y);
                let direct = inst
                    .partners
                    .iter()
                    .filter(|(&a, ps)| a.dist2(c) <= k || ps.iter().all(|b| b.dist2(c) <= k))
                    .count();
                prop_assert_eq!(depth, direct, "x={} y={}", x, y);
            }
        }
        let centers = candidate_centers(&inst, k);
        for c in cells(u) {
            prop_assert_eq!(centers.contains(c), usable(&inst, c, k), "{:?}", c);
        }
    }

    #[test]
    fn prefix_suffix_chains((u, pairs, k) in instance(), row in 1i64..=7) {
        let row = row.min(u);
        let inst = prune_extremes(&pairs, u).unwrap();
        let dec = PrefixDecomposition::new(&inst.points, row, k, u);
        let subset = |a: &[IPoint], b: &[IPoint]| a.iter().all(|p| b.contains(p));
        let mut seen: Vec<IPoint> = Vec::new();
        for i in 1..=u {
            let c = IPoint::new(i, row);
            let mut naive: Vec<IPoint> = inst.points.iter().copied().filter(|a| a.dist2(c) > k).collect();
            naive.sort();
            prop_assert_eq!(dec.missed(i), naive);
            let q = dec.q(i);
            prop_assert!(q.iter().all(|a| !seen.contains(a)));
            seen.extend(q);
            seen.sort();
            prop_assert_eq!(&seen, &dec.prefix(i));
            if i > 1 {
                prop_assert!(subset(&dec.prefix(i - 1), &dec.prefix(i)));
                prop_assert!(subset(&dec.suffix(i), &dec.suffix(i - 1)));
            }
        }
    }

    #[test]
    fn row_intervals_match_naive((u, pairs, k) in instance(), row in 1i64..=7) {
        let row = row.min(u);
        let inst = prune_extremes(&pairs, u).unwrap();
        let dec = PrefixDecomposition::new(&inst.points, row, k, u);
        for y in 1..=u {
            let ivs = dec.intervals(y);
            prop_assert_eq!(ivs.len(), u as usize);
            for i in 1..=u {
                let missed = dec.missed(i);
                let xs: Vec<i64> = (1..=u)
                    .filter(|&x| missed.iter().all(|a| a.dist2(IPoint::new(x, y)) <= k))
                    .collect();
                let naive = xs.first().map(|&lo| (lo, *xs.last().unwrap()));
                prop_assert_eq!(ivs[(i - 1) as usize], naive, "i={} y={}", i, y);
            }
        }
    }

    #[test]
    fn cover_iff_usable_centers_reach_every_point((u, pairs, k) in instance(), c1 in (1i64..=7, 1i64..=7), c2 in (1i64..=7, 1i64..=7)) {
        let inst = prune_extremes(&pairs, u).unwrap();
        let (c1, c2) = (IPoint::new(c1.0.min(u), c1.1.min(u)), IPoint::new(c2.0.min(u), c2.1.min(u)));
        let centers = candidate_centers(&inst, k);
        let reach = inst.points.iter().all(|a| a.dist2(c1) <= k || a.dist2(c2) <= k);
        let factored = centers.contains(c1) && centers.contains(c2) && reach;
        prop_assert_eq!(covers(&inst.pairs, c1, c2, k), factored);
        prop_assert_eq!(covers(&pairs, c1, c2, k), covers(&inst.pairs, c1, c2, k));
    }

    #[test]
    fn decision_matches_exhaustive_search((u, pairs, k) in instance()) {
        let inst = prune_extremes(&pairs, u).unwrap();
        let grid = cells(u);
        let exists = grid.iter().any(|&c1| grid.iter().any(|&c2| covers(&pairs, c1, c2, k)));
        match ib2c_decision(&inst, k) {
            Some((c1, c2)) => prop_assert!(covers(&pairs, c1, c2, k)),
            None => prop_assert!(!exists),
        }
        prop_assert_eq!(ib2c_decision(&inst, k).is_some(), exists);
    }
}
