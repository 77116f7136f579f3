//! JSON formats.
//!
//! Instances are `{"pairs": [[[x, y], [x, y]], ...]}`. Solutions are
//! `{"radius": r, "centers": [[x, y], [x, y]], "coloring": [0|1, ...],
//! "verified": bool}` where coloring `1` means the pair's first point is in
//! the first disk.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Disk, Instance, Point, PointPair, Solution};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct InstanceFile {
    pairs: Vec<[[f64; 2]; 2]>,
}

pub fn parse_instance(s: &str) -> Result<Instance> {
    let file: InstanceFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let pairs = file
        .pairs
        .iter()
        .map(|[a, b]| PointPair::new(Point::new(a[0], a[1]), Point::new(b[0], b[1])))
        .collect();
    Instance::new(pairs)
}

pub fn instance_to_json(inst: &Instance) -> String {
    let file = InstanceFile {
        pairs: inst
            .pairs()
            .iter()
            .map(|p| [[p.first.x, p.first.y], [p.second.x, p.second.y]])
            .collect(),
    };
    serde_json::to_string(&file).expect("finite coordinates serialize")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionFile {
    pub radius: f64,
    pub centers: [[f64; 2]; 2],
    pub coloring: Vec<u8>,
    pub verified: bool,
}

impl SolutionFile {
    pub fn new(sol: &Solution, verified: bool) -> Self {
        let c = |d: &Disk| [d.center.x, d.center.y];
        SolutionFile {
            radius: sol.radius,
            centers: [c(&sol.disk1), c(&sol.disk2)],
            coloring: sol.coloring.iter().map(|&b| u8::from(b)).collect(),
            verified,
        }
    }

    pub fn to_solution(&self) -> Solution {
        let d = |c: [f64; 2]| Disk::new(Point::new(c[0], c[1]), self.radius);
        Solution {
            disk1: d(self.centers[0]),
            disk2: d(self.centers[1]),
            coloring: self.coloring.iter().map(|&b| b != 0).collect(),
            radius: self.radius,
        }
    }
}

pub fn parse_solution(s: &str) -> Result<Solution> {
    let file: SolutionFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(file.to_solution())
}
