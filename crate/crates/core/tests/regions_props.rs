use bicenter::geometry::{Point, PointPair, Tolerance};
use bicenter::regions::{common_intersection, regions_intersect, union_chain, Mode};
use proptest::prelude::*;

fn pt() -> impl Strategy<Value = Point> {
    (-5.0f64..5.0, -5.0f64..5.0).prop_map(|(x, y)| Point::new(x, y))
}

fn naive_in_i(sites: &[Point], r: f64, q: Point, margin: f64) -> bool {
    sites.iter().all(|s| s.dist(q) <= r + margin)
}

fn naive_in_u(pairs: &[PointPair], r: f64, q: Point, margin: f64) -> bool {
    pairs
        .iter()
        .all(|p| p.first.dist(q).min(p.second.dist(q)) <= r + margin)
}

const BAND: f64 = 1e-6;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn intersection_membership_matches_naive(
        sites in prop::collection::vec(pt(), 1..8),
        r in 0.5f64..8.0,
        qs in prop::collection::vec(pt(), 40),
    ) {
        let tol = Tolerance::default();
        let i = common_intersection(&sites, r, &tol).unwrap();
        for q in qs {
            if naive_in_i(&sites, r, q, -BAND) {
                prop_assert!(i.contains(q));
            } else if !naive_in_i(&sites, r, q, BAND) {
                prop_assert!(!i.contains(q));
            }
        }
        for v in i.vertices() {
            prop_assert!(naive_in_i(&sites, r, v, 1e-7));
        }
    }

    #[test]
    fn hli_matches_naive(
        sites in prop::collection::vec(pt(), 1..8),
        r in 0.5f64..8.0,
        ys in prop::collection::vec(-8.0f64..8.0, 20),
    ) {
        let tol = Tolerance::default();
        let i = common_intersection(&sites, r, &tol).unwrap();
        for y in ys {
            let iv = i.hli(y);
            if iv.empty {
                for k in 0..=400 {
                    let x = -15.0 + 30.0 * k as f64 / 400.0;
                    prop_assert!(!naive_in_i(&sites, r, Point::new(x, y), -BAND));
                }
            } else {
                let inside = Point::new(0.5 * (iv.low + iv.high), y);
                prop_assert!(naive_in_i(&sites, r, inside, 1e-7));
                prop_assert!(naive_in_i(&sites, r, Point::new(iv.low, y), 1e-7));
                prop_assert!(naive_in_i(&sites, r, Point::new(iv.high, y), 1e-7));
                prop_assert!(!naive_in_i(&sites, r, Point::new(iv.low - 1e-4, y), -BAND));
                prop_assert!(!naive_in_i(&sites, r, Point::new(iv.high + 1e-4, y), -BAND));
            }
        }
    }

    #[test]
    fn union_membership_matches_naive(
        raw in prop::collection::vec((pt(), pt()), 1..7),
        extra in 0.0f64..3.0,
        qs in prop::collection::vec(pt(), 40),
    ) {
        let tol = Tolerance::default();
        let pairs: Vec<PointPair> = raw.iter().map(|&(a, b)| PointPair::new(a, b)).collect();
        let anchor = Point::new(0.3, -0.2);
        let r = pairs
            .iter()
            .flat_map(|p| p.points())
            .map(|q| q.dist(anchor))
            .fold(0.0, f64::max)
            + extra;
        let u = union_chain(&pairs, anchor, r, &tol).unwrap();
        for q in qs {
            if naive_in_u(&pairs, r, q, -BAND) {
                prop_assert!(u.contains(q), "{q:?} should be inside");
            } else if !naive_in_u(&pairs, r, q, BAND) {
                prop_assert!(!u.contains(q), "{q:?} should be outside");
            }
        }
    }

    #[test]
    fn intersect_agrees_with_sampling(
        raw in prop::collection::vec((pt(), pt()), 1..5),
        sites in prop::collection::vec(pt(), 1..5),
        extra in 0.0f64..2.0,
    ) {
        let tol = Tolerance::default();
        let pairs: Vec<PointPair> = raw.iter().map(|&(a, b)| PointPair::new(a, b)).collect();
        let anchor = Point::new(0.0, 0.0);
        let r = pairs
            .iter()
            .flat_map(|p| p.points())
            .map(|q| q.norm())
            .fold(0.0, f64::max)
            + extra;
        let u = union_chain(&pairs, anchor, r, &tol).unwrap();
        let i = common_intersection(&sites, r, &tol).unwrap();
        let closed = regions_intersect(&u, &i, Mode::Closed);
        if let Some(w) = closed {
            prop_assert!(naive_in_i(&sites, r, w, 1e-7));
            prop_assert!(naive_in_u(&pairs, r, w, 1e-7));
        }
        let n = 120;
        let mut sampled = false;
        'outer: for a in 0..=n {
            for b in 0..=n {
                let q = Point::new(-15.0 + 30.0 * a as f64 / n as f64, -15.0 + 30.0 * b as f64 / n as f64);
                if naive_in_i(&sites, r, q, -1e-3) && naive_in_u(&pairs, r, q, -1e-3) {
                    sampled = true;
                    break 'outer;
                }
            }
        }
        if sampled {
            prop_assert!(closed.is_some());
            prop_assert!(regions_intersect(&u, &i, Mode::Open).is_some());
        }
    }
}
