//! Labeling matrices and the edge-corona constructions built from them.

pub mod assemble;
pub mod closed_form;
pub mod fixtures;
pub mod vectors;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::errata::{Fix, Fixes};
use crate::error::{invalid, Error, Result};
use crate::graphs::{Graph, VertexRef};
use crate::labeling::EdgeLabeling;

pub use assemble::{even_r_adjust, BlockPlan, CopyBlocks, Layout};
pub use fixtures::{appendix_fixture, Appendix};
pub use vectors::{reverse, sk2_vectors, split3, star_empty_vectors, DiagBlock, LabelVector, VectorTriple};

/// Symmetric vertex-indexed matrix; only the upper triangle is stored and
/// absent entries are the sentinel ★.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingMatrix {
    order: Vec<VertexRef>,
    entries: BTreeMap<(usize, usize), u64>,
}

impl LabelingMatrix {
    pub fn new(order: Vec<VertexRef>, entries: impl IntoIterator<Item = (usize, usize, u64)>) -> Result<Self> {
        let n = order.len();
        let mut map = BTreeMap::new();
        for (i, j, l) in entries {
            if i == j {
                return Err(invalid(format!("diagonal entry ({i},{i})")));
            }
            if i.max(j) >= n {
                return Err(Error::IndexOutOfRange { index: i.max(j), max: n - 1 });
            }
            let key = (i.min(j), i.max(j));
            if let Some(old) = map.insert(key, l) {
                if old != l {
                    return Err(invalid(format!("conflicting entries at {key:?}")));
                }
            }
        }
        Ok(LabelingMatrix { order, entries: map })
    }

    pub fn from_labeling(l: &EdgeLabeling) -> Self {
        let entries = l.graph.edges().iter().zip(&l.labels).map(|(&(a, b), &x)| ((a.min(b), a.max(b)), x));
        LabelingMatrix { order: l.graph.vertices().to_vec(), entries: entries.collect() }
    }

    pub fn dimension(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[VertexRef] {
        &self.order
    }

    pub fn get(&self, i: usize, j: usize) -> Option<u64> {
        self.entries.get(&(i.min(j), i.max(j))).copied()
    }

    /// Upper-triangle entries `(i, j, label)` with `i < j`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &l)| (i, j, l))
    }

    pub fn row_sums(&self) -> Vec<u64> {
        let mut s = vec![0; self.dimension()];
        for (i, j, l) in self.entries() {
            s[i] += l;
            s[j] += l;
        }
        s
    }

    /// Row sum of the row whose role is `v`.
    pub fn row_sum_of(&self, v: &VertexRef) -> Option<u64> {
        let i = self.order.iter().position(|x| x == v)?;
        Some(self.row_sums()[i])
    }

    /// Whether the upper triangle holds each of `1..=m` exactly once.
    pub fn is_permutation(&self) -> bool {
        let mut labels: Vec<u64> = self.entries.values().copied().collect();
        labels.sort_unstable();
        labels.iter().enumerate().all(|(i, &l)| l == i as u64 + 1)
    }

    /// Human-readable grid with ★ at absent positions.
    pub fn render(&self) -> String {
        let n = self.dimension();
        let width = self.entries.values().max().map_or(1, |m| m.to_string().len()).max(1);
        let names: Vec<String> = self.order.iter().map(|v| v.to_string()).collect();
        let nw = names.iter().map(String::len).max().unwrap_or(0);
        let mut out = String::new();
        for i in 0..n {
            let _ = write!(out, "{:>nw$} |", names[i]);
            for j in 0..n {
                match self.get(i, j) {
                    Some(l) => {
                        let _ = write!(out, " {l:>width$}");
                    }
                    None => {
                        let _ = write!(out, " {:>width$}", "★");
                    }
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Reads `m` as a labeling of `g`; the matrix order must be `g`'s vertex order.
pub fn matrix_to_labeling(m: &LabelingMatrix, g: &Graph) -> Result<EdgeLabeling> {
    if m.order() != g.vertices() {
        return Err(Error::SupportMismatch("matrix order differs from the graph's vertex order".into()));
    }
    let mut labels = vec![0u64; g.size()];
    for (i, j, l) in m.entries() {
        let e = g
            .edge_between(i, j)
            .ok_or_else(|| Error::SupportMismatch(format!("entry at ({i},{j}) is not an edge")))?;
        labels[e] = l;
    }
    if let Some(e) = labels.iter().position(|&l| l == 0) {
        let (a, b) = g.edges()[e];
        return Err(Error::SupportMismatch(format!("edge {}{} has no entry", g.vertices()[a], g.vertices()[b])));
    }
    let mut seen = vec![false; labels.len() + 1];
    for &l in &labels {
        if l as usize >= seen.len() || seen[l as usize] {
            return Err(Error::DuplicateLabel(l));
        }
        seen[l as usize] = true;
    }
    EdgeLabeling::new(g.clone(), labels)
}

/// The four edge-corona constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "construction", rename_all = "kebab-case")]
pub enum Corona {
    SkEmpty { k: u32, r: u32 },
    DstarEmpty { k1: u32, k2: u32, r: u32 },
    SkK2 { k: u32, r: u32 },
    DstarK2 { k1: u32, k2: u32, r: u32 },
}

impl Corona {
    /// Colors the construction is expected to reach.
    pub fn claimed_colors(&self) -> usize {
        match self {
            Corona::SkEmpty { .. } => 3,
            Corona::DstarEmpty { .. } | Corona::SkK2 { .. } => 4,
            Corona::DstarK2 { .. } => 5,
        }
    }

    pub fn traced(&self, fixes: Fixes) -> Result<(EdgeLabeling, Vec<Fix>)> {
        match *self {
            Corona::SkEmpty { k, r } => assemble::sk_empty_traced(k, r, fixes),
            Corona::DstarEmpty { k1, k2, r } => assemble::dstar_empty_traced(k1, k2, r, fixes),
            Corona::SkK2 { k, r } => assemble::sk_k2_traced(k, r, fixes),
            Corona::DstarK2 { k1, k2, r } => assemble::dstar_k2_traced(k1, k2, r, fixes),
        }
    }

    /// Verified labeling with exactly the claimed number of colors.
    pub fn labeling(&self) -> Result<EdgeLabeling> {
        let (l, _) = self.traced(Fixes::all())?;
        let r = l.check();
        if r.certified() && r.color_count == self.claimed_colors() {
            Ok(l)
        } else {
            Err(Error::VerificationFailure(format!("{self}: {}", r.summary(&l.graph))))
        }
    }

    pub fn matrix(&self) -> Result<LabelingMatrix> {
        Ok(LabelingMatrix::from_labeling(&self.labeling()?))
    }
}

impl std::fmt::Display for Corona {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Corona::SkEmpty { k, r } => write!(f, "S_{k} ◇ K̄_{r}"),
            Corona::DstarEmpty { k1, k2, r } => write!(f, "S_{{{k1},{k2}}} ◇ K̄_{r}"),
            Corona::SkK2 { k, r } => write!(f, "S_{k} ◇ {r}K_2"),
            Corona::DstarK2 { k1, k2, r } => write!(f, "S_{{{k1},{k2}}} ◇ {r}K_2"),
        }
    }
}

pub fn assemble_sk_empty(k: u32, r: u32) -> Result<LabelingMatrix> {
    Corona::SkEmpty { k, r }.matrix()
}

pub fn assemble_dstar_empty(k1: u32, k2: u32, r: u32) -> Result<LabelingMatrix> {
    Corona::DstarEmpty { k1, k2, r }.matrix()
}

pub fn assemble_sk_k2(k: u32, r: u32) -> Result<LabelingMatrix> {
    Corona::SkK2 { k, r }.matrix()
}

pub fn assemble_dstar_k2(k1: u32, k2: u32, r: u32) -> Result<LabelingMatrix> {
    Corona::DstarK2 { k1, k2, r }.matrix()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::make_complete_two;

    #[test]
    fn single_edge_matrix() {
        let g = make_complete_two();
        let m = LabelingMatrix::new(g.vertices().to_vec(), [(1, 0, 1)]).unwrap();
        let l = matrix_to_labeling(&m, &g).unwrap();
        assert_eq!(l.labels, vec![1]);
        assert_eq!(m.row_sums(), vec![1, 1]);
        assert!(m.render().contains('★'));
    }

    #[test]
    fn support_mismatch_detected() {
        let g = crate::graphs::make_path(3).unwrap();
        let m = LabelingMatrix::new(g.vertices().to_vec(), [(0, 2, 1), (0, 1, 2)]).unwrap();
        assert!(matches!(matrix_to_labeling(&m, &g), Err(Error::SupportMismatch(_))));
        let m = LabelingMatrix::new(g.vertices().to_vec(), [(0, 1, 1), (1, 2, 1)]).unwrap();
        assert!(matches!(matrix_to_labeling(&m, &g), Err(Error::DuplicateLabel(1))));
    }

    #[test]
    fn example_one_row_sums() {
        let m = assemble_sk_empty(3, 6).unwrap();
        assert_eq!(m.row_sum_of(&VertexRef::HubCenter(0)), Some(363));
        assert_eq!(m.row_sum_of(&VertexRef::HubLeaf(1)), Some(141));
        assert_eq!(m.row_sum_of(&VertexRef::CopyVertex(1, 1, 0)), Some(43));
        // "37" sits in row v_1 at copy 1
        assert_eq!(m.get(1, 4), Some(37));
    }
}
