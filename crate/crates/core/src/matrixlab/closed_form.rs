//! Weight expressions printed alongside the constructions, evaluated exactly.
//! Values are carried doubled so that half-integers survive.

use serde::{Deserialize, Serialize};

use super::Corona;
use crate::graphs::VertexRef;
use crate::labeling::EdgeLabeling;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrintedWeight {
    /// Class name: `c`, `c1`, `c2`, `v`, `u`, `u1`, `u2`.
    pub class: String,
    /// Representative vertex of the class.
    pub vertex: VertexRef,
    /// The expression as printed.
    pub formula: String,
    pub twice: i64,
}

impl PrintedWeight {
    pub fn value(&self) -> Option<u64> {
        (self.twice % 2 == 0 && self.twice > 0).then_some(self.twice as u64 / 2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormCheck {
    pub printed: PrintedWeight,
    pub computed: u64,
    pub holds: bool,
}

fn pw(class: &str, vertex: VertexRef, formula: &str, twice: i64) -> PrintedWeight {
    PrintedWeight { class: class.into(), vertex, formula: formula.into(), twice }
}

pub fn printed_weights(c: &Corona) -> Vec<PrintedWeight> {
    use VertexRef::*;
    match *c {
        Corona::SkEmpty { k, r } => {
            let (k, r) = (k as i64, r as i64);
            let (cw, vw, cf, vf) = if r % 2 == 1 {
                (
                    2 * k * k * r * r + (k * k + 1) * (r + 1),
                    2 * k * r * r + 3 * k * r + k + r + 1,
                    "k²r² + (k²+1)(r+1)/2",
                    "kr² + (3kr+k+r+1)/2",
                )
            } else {
                (
                    2 * (k * k * r * r + k) + (k * k + k) * r,
                    2 * k * (r * r + 1) + 3 * k * r + r,
                    "k²r² + k + (k²+k)r/2",
                    "k(r²+1) + (3kr+r)/2",
                )
            };
            vec![
                pw("c", HubCenter(0), cf, cw),
                pw("v", HubLeaf(1), vf, vw),
                pw("u", CopyVertex(1, 1, 0), "2rk+2k+1", 2 * (2 * r * k + 2 * k + 1)),
            ]
        }
        Corona::SkK2 { k, r } => {
            let (k, r) = (k as i64, r as i64);
            let (cw, vw, cf, vf) = if r % 2 == 1 {
                (
                    2 * (r * k * k + 4 * k * k + 2 * k)
                        + 3 * k * k * (r * r + 2 * r - 3)
                        + (k * r - k) * (2 * r * k - 2 * k + 3),
                    2 * (2 * r * k + 2 * k) + k * r * (5 * r * k + 3),
                    "rk² + 4k² + 2k + [3k²(r²+2r−3) + (kr−k)(2rk−2k+3)]/2",
                    "2rk + 2k + kr(5rk+3)/2",
                )
            } else {
                (
                    4 * k * k + k * r * (5 * k * r + 4 * k + 3),
                    2 * (2 * k * r - k + 1) + 11 * k * r * r + r,
                    "2k² + kr(5kr+4k+3)/2",
                    "2kr − k + 1 + (11kr² + r)/2",
                )
            };
            vec![
                pw("c", HubCenter(0), cf, cw),
                pw("v", HubLeaf(1), vf, vw),
                pw("u1", CopyVertex(1, 1, 1), "7rk+3k+1", 2 * (7 * r * k + 3 * k + 1)),
                pw("u2", CopyVertex(1, 1, 2), "10rk+3k+2", 2 * (10 * r * k + 3 * k + 2)),
            ]
        }
        Corona::DstarEmpty { k1, k2, r } => {
            let (k1, k2, r) = (k1 as i64, k2 as i64, r as i64);
            let t = k1 + k2 + 1;
            let (c1, c2, v, f) = if r % 2 == 1 {
                let v = (2 * r * r + 3 * r + 1) * t + r + 1;
                (
                    (k1 + 1) * (2 * (r * r * t + t + 1) + r * k1 + r * k2 + k1 - k2),
                    k2 * ((2 * r * r + r + 1) * t + 2 * k1 + 3 + r) + v,
                    v,
                    [
                        "(k1+1)(r²t + t + 1 + (rk1+rk2+k1−k2)/2)",
                        "k2((2r²+r+1)t + 2k1 + 3 + r)/2 + ((2r²+3r+1)t + r + 1)/2",
                        "((2r²+3r+1)t + r + 1)/2",
                    ],
                )
            } else {
                (
                    (k1 + 1) * ((2 * r * r + r) * t - 2 * k2 + r + 2),
                    2 * k2 * (k1 + 2) + (k2 * (2 * r * r + r) + (2 * r * r + 3 * r + 2)) * t + (k2 + 1) * r,
                    (2 * r * r + 3 * r + 2) * t + r,
                    [
                        "(k1+1)((2r²+r)t − 2k2 + r + 2)/2",
                        "k2(k1+2) + ((k2(2r²+r) + 2r²+3r+2)t + (k2+1)r)/2",
                        "((2r²+3r+2)t + r)/2",
                    ],
                )
            };
            vec![
                pw("c1", HubCenter(1), f[0], c1),
                pw("c2", HubCenter(2), f[1], c2),
                pw("v", HubLeaf(1), f[2], v),
                pw("u", CopyVertex(1, 1, 0), "(2r+2)t+1", 2 * ((2 * r + 2) * t + 1)),
            ]
        }
        Corona::DstarK2 { k1, k2, r } => {
            let (k1, k2, r) = (k1 as i64, k2 as i64, r as i64);
            let t = k1 + k2 + 1;
            let big = r * (11 * r * t + 4 * t + 1);
            let (c1, c2, v, f) = if r % 2 == 1 {
                let s = (r - 1) * (t * r + 3 * t + 1);
                (
                    (k1 + 1) * s + 2 * (k1 + 1) * (t + k1 + 2),
                    k2 * s + 2 * ((2 * r * r + r + 1) * t + k2 * (2 * t + k1 + 2)),
                    big + t + 1,
                    [
                        "(k1+1)(r−1)(tr+3t+1)/2 + (k1+1)(t+k1+2)",
                        "k2(r−1)(tr+3t+1)/2 + (2r²+r+1)t + k2(2t+k1+2)",
                        "[r(11rt+4t+1) + t + 1]/2",
                    ],
                )
            } else {
                (
                    2 * (k1 + 1) * (2 * r * t - t + 3 * k1 + 3) + r * (k1 + 1) * (5 * r * t + 3),
                    2 * (k2 * (2 * r * t + 5 * t - 3 * k2) - t + 1) + r * k2 * (5 * r * t + 3) + big,
                    big + 2 * (1 - t),
                    [
                        "(k1+1)(2rt−t+3k1+3) + r(k1+1)(5rt+3)/2",
                        "k2(2rt+5t−3k2) − t + 1 + [rk2(5rt+3) + r(11rt+4t+1)]/2",
                        "r(11rt+4t+1)/2 + 1 − t",
                    ],
                )
            };
            vec![
                pw("c1", HubCenter(1), f[0], c1),
                pw("c2", HubCenter(2), f[1], c2),
                pw("v", HubLeaf(1), f[2], v),
                pw("u1", CopyVertex(1, 1, 1), "7rt+3t+1", 2 * (7 * r * t + 3 * t + 1)),
                pw("u2", CopyVertex(1, 1, 2), "10rt+3t+2", 2 * (10 * r * t + 3 * t + 2)),
            ]
        }
    }
}

/// Compares each printed class weight with the labeling's computed weight.
pub fn check_closed_forms(c: &Corona, l: &EdgeLabeling) -> Vec<ClosedFormCheck> {
    let w = l.weights();
    printed_weights(c)
        .into_iter()
        .filter_map(|p| {
            let computed = w[l.graph.vertex(&p.vertex)?];
            let holds = p.twice == 2 * computed as i64;
            Some(ClosedFormCheck { printed: p, computed, holds })
        })
        .collect()
}
