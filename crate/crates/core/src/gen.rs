//! Seeded random instance generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{Instance, Point, PointPair};
use crate::ib2c::{IPoint, Ib2cInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Points uniform in a 100×100 square.
    Uniform,
    /// Each pair has one point in each of two small, far-apart clusters.
    TwoCluster,
    /// Each pair has one point in each of two heavily overlapping disks.
    NearbyLens,
}

impl std::str::FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "uniform" => Ok(Kind::Uniform),
            "two-cluster" => Ok(Kind::TwoCluster),
            "nearby-lens" => Ok(Kind::NearbyLens),
            _ => Err(format!("unknown instance kind '{s}'")),
        }
    }
}

fn in_disk(rng: &mut ChaCha8Rng, c: Point, r: f64) -> Point {
    loop {
        let p = Point::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
        if p.norm2() <= 1.0 {
            return c + p * r;
        }
    }
}

pub fn generate(kind: Kind, n: usize, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = n.max(1);
    let pairs = match kind {
        Kind::Uniform => (0..n)
            .map(|_| {
                let mut p = || Point::new(rng.gen_range(0.0..100.0), rng.gen_range(0.0..100.0));
                PointPair::new(p(), p())
            })
            .collect(),
        Kind::TwoCluster => {
            let r = rng.gen_range(2.0..8.0);
            let gap = rng.gen_range(40.0..120.0);
            let tilt = rng.gen_range(0.0..std::f64::consts::PI);
            let a = Point::new(0.0, 0.0);
            let b = a + Point::unit(tilt) * gap;
            (0..n)
                .map(|_| {
                    let (p, q) = (in_disk(&mut rng, a, r), in_disk(&mut rng, b, r));
                    if rng.gen_bool(0.5) {
                        PointPair::new(p, q)
                    } else {
                        PointPair::new(q, p)
                    }
                })
                .collect()
        }
        Kind::NearbyLens => {
            let r = 10.0;
            let d = rng.gen_range(0.2..1.4) * r;
            let tilt = rng.gen_range(0.0..std::f64::consts::PI);
            let a = Point::new(50.0, 50.0);
            let b = a + Point::unit(tilt) * d;
            (0..n)
                .map(|_| {
                    let (p, q) = (in_disk(&mut rng, a, r), in_disk(&mut rng, b, r));
                    if rng.gen_bool(0.5) {
                        PointPair::new(p, q)
                    } else {
                        PointPair::new(q, p)
                    }
                })
                .collect()
        }
    };
    Instance::new(pairs).expect("generated points are finite")
}

/// `m` random pairs with coordinates in `[1, u]`.
pub fn generate_ib2c(u: i64, m: usize, seed: u64) -> Ib2cInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u = u.max(1);
    let mut p = || IPoint::new(rng.gen_range(1..=u), rng.gen_range(1..=u));
    let pairs = (0..m).map(|_| [p(), p()]).collect();
    Ib2cInstance { u, pairs }
}
