//! Block plans and their assembly into labelings of the four edge coronas.
//!
//! Every construction is written for a star `S_t` first: `a_0` labels the
//! edges `c v_i`, and copy `j` of `H` contributes a row block (edges from `c`)
//! and a diagonal block (edges from `v_i`). Double stars reuse the star plan
//! with `t = k1 + k2 + 1`: star column 1 becomes the edge `c_1c_2`, and the
//! remaining columns become the leaves of `c_1` then of `c_2`.

use serde::{Deserialize, Serialize};

use super::vectors::{a0, reverse, sk2_vectors, star_empty_vectors, DiagBlock, LabelVector};
use crate::errata::{Fix, Fixes, Trace};
use crate::error::{invalid, Result};
use crate::graphs::{
    double_star_corona_empty, double_star_corona_k2, star_corona_empty, star_corona_k2, Graph, VertexRef,
};
use crate::labeling::{Builder, EdgeLabeling, LabelKind};
use crate::oracle::{exists_with_colors, SearchBudget, MAX_ITEMS};

/// Labels of one copy of `H` (or one half of a `K_2` copy).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopyBlocks {
    /// Edges from the star center to `u_1^j, …, u_t^j`.
    pub center: LabelVector,
    /// Edges `v_i u_i^j`.
    pub leaves: DiagBlock,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockPlan {
    pub t: usize,
    pub r: usize,
    pub a0: LabelVector,
    /// Copies of `K̄_r`, or the first ends of the `K_2` copies.
    pub first: Vec<CopyBlocks>,
    /// Second ends of the `K_2` copies; empty for `K̄_r`.
    pub second: Vec<CopyBlocks>,
    /// Edges inside each `K_2` copy; empty for `K̄_r`.
    pub inner: Vec<DiagBlock>,
}

impl BlockPlan {
    pub fn has_k2(&self) -> bool {
        !self.second.is_empty()
    }
}

/// `S_t ◇ K̄_r` before any even-r adjustment: copy `j` gets `a_j` (reversed
/// when r is even) and `A_{r+1−j}`.
pub fn star_empty_plan(t: usize, r: usize) -> Result<BlockPlan> {
    if t == 0 || r == 0 {
        return Err(invalid("t and r must be positive"));
    }
    let mut first = Vec::with_capacity(r);
    for j in 1..=r {
        let (a, _) = star_empty_vectors(t, r, j)?;
        let (_, big) = star_empty_vectors(t, r, r + 1 - j)?;
        let center = if r % 2 == 0 { reverse(&a) } else { a };
        first.push(CopyBlocks { center, leaves: big });
    }
    Ok(BlockPlan { t, r, a0: a0(t), first, second: Vec::new(), inner: Vec::new() })
}

/// Even-r repair of the middle copies: copy `r/2 + 1` takes
/// `(rk+2, rk+4, …, rk+2k)` with `diag(rk+2k−1, …, rk+1)`; when `r/2` is even,
/// copy `r/2 + 2` also goes back to the unreversed `a_{r/2+2}` with its
/// diagonal reordered.
pub fn even_r_adjust(plan: &BlockPlan, k: usize, r: usize) -> Result<BlockPlan> {
    if r % 2 == 1 {
        return Err(invalid(format!("even_r_adjust needs even r, got {r}")));
    }
    if plan.first.len() != r || plan.t != k {
        return Err(invalid("plan does not match (k, r)"));
    }
    let mut out = plan.clone();
    let (h, rk) = (r / 2, (r * k) as u64);
    out.first[h] = CopyBlocks {
        center: LabelVector((1..=k as u64).map(|x| rk + 2 * x).collect()),
        leaves: DiagBlock { diagonal: (1..=k as u64).map(|x| rk + 2 * k as u64 + 1 - 2 * x).collect() },
    };
    if h % 2 == 0 && h + 1 < r {
        let c = &mut out.first[h + 1];
        c.center = reverse(&c.center);
        c.leaves = c.leaves.reversed();
    }
    Ok(out)
}

fn sk_empty_plan(t: usize, r: usize) -> Result<BlockPlan> {
    let plan = star_empty_plan(t, r)?;
    if r % 2 == 0 {
        even_r_adjust(&plan, t, r)
    } else {
        Ok(plan)
    }
}

/// `S_t ◇ rK_2`. For even r the reversal pattern is the one exhibited by the
/// worked `r = 6` example.
pub fn sk2_plan(t: usize, r: usize, trace: &mut Trace) -> Result<BlockPlan> {
    let v = sk2_vectors(t, r)?;
    let mut c1: Vec<LabelVector> = (1..=r).map(|j| v.a[j].clone()).collect();
    let mut v1: Vec<DiagBlock> = (1..=r).map(|j| v.big_a[r + 1 - j].clone()).collect();
    let mut c2: Vec<LabelVector> = (1..=r).map(|p| v.b[r + 1 - p].clone()).collect();
    let mut v2: Vec<DiagBlock> = (1..=r).map(|p| v.big_b[p].clone()).collect();
    let mut m4: Vec<DiagBlock> = (1..=r).map(|p| v.big_b[r + p].clone()).collect();
    if r % 2 == 0 && trace.fix(Fix::MatSk2EvenPriming) {
        for d in v1.iter_mut().take(r - 1).skip(1) {
            *d = d.reversed();
        }
        for c in c2.iter_mut().skip(1) {
            *c = reverse(c);
        }
        c1[0] = reverse(&c1[0]);
        v2[0] = v2[0].reversed();
        m4[0] = m4[0].reversed();
        let ar = c1[r - 1].clone();
        c1[r - 1] = reverse(&LabelVector(v1[r - 1].diagonal.clone()));
        v1[r - 1] = ar.into();
    }
    let pair = |c: Vec<LabelVector>, d: Vec<DiagBlock>| {
        c.into_iter().zip(d).map(|(center, leaves)| CopyBlocks { center, leaves }).collect()
    };
    Ok(BlockPlan { t, r, a0: v.a[0].clone(), first: pair(c1, v1), second: pair(c2, v2), inner: m4 })
}

/// Where the star columns go.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Layout {
    Star,
    /// `order[p]` is the star column placed at double-star position `p + 1`.
    DoubleStar { k1: usize, k2: usize, order: Vec<usize> },
}

impl Layout {
    /// Columns `mid` (a `k1`-subset of `2..=t`) go to `c_1`.
    pub fn double_star(k1: usize, k2: usize, mid: &[usize]) -> Self {
        let t = k1 + k2 + 1;
        let mut order = vec![1];
        order.extend_from_slice(mid);
        order.extend((2..=t).filter(|c| !mid.contains(c)));
        Layout::DoubleStar { k1, k2, order }
    }

    pub fn default_double_star(k1: usize, k2: usize) -> Self {
        let mid: Vec<usize> = (2..=k1 + 1).collect();
        Layout::double_star(k1, k2, &mid)
    }
}

/// Writes a plan onto `g` under `layout`.
pub fn plan_to_labeling(plan: &BlockPlan, layout: &Layout, g: Graph) -> EdgeLabeling {
    let pos: Vec<usize> = match layout {
        Layout::Star => (0..=plan.t).collect(),
        Layout::DoubleStar { order, .. } => {
            let mut p = vec![0; plan.t + 1];
            for (i, &col) in order.iter().enumerate() {
                p[col] = i + 1;
            }
            p
        }
    };
    let center = |col: usize| match layout {
        Layout::Star => VertexRef::HubCenter(0),
        Layout::DoubleStar { k1, .. } => VertexRef::HubCenter(if pos[col] <= 1 + k1 { 1 } else { 2 }),
    };
    let leaf = |col: usize| match layout {
        Layout::Star => VertexRef::HubLeaf(col as u32),
        Layout::DoubleStar { .. } if col == 1 => VertexRef::HubCenter(2),
        Layout::DoubleStar { .. } => VertexRef::HubLeaf(pos[col] as u32 - 1),
    };
    let copy = |col: usize, j: usize, s: u32| VertexRef::CopyVertex(pos[col] as u32, j as u32, s);
    let mut b = Builder::new(g);
    let mut put = |x: VertexRef, y: VertexRef, l: u64| b.set_edge(x, y, l as i64);
    for col in 1..=plan.t {
        put(center(col), leaf(col), plan.a0.0[col - 1]);
    }
    let halves: [(&[CopyBlocks], u32); 2] = if plan.has_k2() {
        [(&plan.first, 1), (&plan.second, 2)]
    } else {
        [(&plan.first, 0), (&[], 0)]
    };
    for (blocks, s) in halves {
        for (j, blk) in blocks.iter().enumerate() {
            for col in 1..=plan.t {
                put(center(col), copy(col, j + 1, s), blk.center.0[col - 1]);
                put(leaf(col), copy(col, j + 1, s), blk.leaves.diagonal[col - 1]);
            }
        }
    }
    for (j, d) in plan.inner.iter().enumerate() {
        for col in 1..=plan.t {
            put(copy(col, j + 1, 1), copy(col, j + 1, 2), d.diagonal[col - 1]);
        }
    }
    b.edge_labeling()
}

fn hits(l: &EdgeLabeling, colors: usize) -> bool {
    let r = l.check();
    r.certified() && r.color_count == colors
}

pub fn sk_empty_traced(k: u32, r: u32, fixes: Fixes) -> Result<(EdgeLabeling, Vec<Fix>)> {
    let mut trace = Trace::new(fixes);
    let g = star_corona_empty(k, r)?;
    let plan = sk_empty_plan(k as usize, r as usize)?;
    let mut l = plan_to_labeling(&plan, &Layout::Star, g);
    if !hits(&l, 3) && l.graph.size() <= MAX_ITEMS && trace.fix(Fix::MatSkEmptySmall) {
        let found = exists_with_colors(&l.graph, 3, LabelKind::Edge, SearchBudget::default())?;
        if let Some(crate::labeling::AnyLabeling::Edge(w)) = found.witness {
            l = w;
        }
    }
    Ok((l, trace.finish()))
}

pub fn sk_k2_traced(k: u32, r: u32, fixes: Fixes) -> Result<(EdgeLabeling, Vec<Fix>)> {
    let mut trace = Trace::new(fixes);
    let g = star_corona_k2(k, r)?;
    let plan = sk2_plan(k as usize, r as usize, &mut trace)?;
    Ok((plan_to_labeling(&plan, &Layout::Star, g), trace.finish()))
}

fn dstar_with_columns(
    plan: &BlockPlan,
    k1: usize,
    k2: usize,
    g: Graph,
    colors: usize,
    trace: &mut Trace,
) -> EdgeLabeling {
    let l = plan_to_labeling(plan, &Layout::default_double_star(k1, k2), g.clone());
    if hits(&l, colors) || !trace.fix(Fix::MatDstarColumns) {
        return l;
    }
    let cols: Vec<usize> = (2..=k1 + k2 + 1).collect();
    for mid in Combinations::new(&cols, k1) {
        let cand = plan_to_labeling(plan, &Layout::double_star(k1, k2, &mid), g.clone());
        if hits(&cand, colors) {
            return cand;
        }
    }
    l
}

pub fn dstar_empty_traced(k1: u32, k2: u32, r: u32, fixes: Fixes) -> Result<(EdgeLabeling, Vec<Fix>)> {
    let mut trace = Trace::new(fixes);
    let g = double_star_corona_empty(k1, k2, r)?;
    let (k1, k2) = (k1 as usize, k2 as usize);
    let plan = sk_empty_plan(k1 + k2 + 1, r as usize)?;
    let l = dstar_with_columns(&plan, k1, k2, g, 4, &mut trace);
    Ok((l, trace.finish()))
}

pub fn dstar_k2_traced(k1: u32, k2: u32, r: u32, fixes: Fixes) -> Result<(EdgeLabeling, Vec<Fix>)> {
    let mut trace = Trace::new(fixes);
    let g = double_star_corona_k2(k1, k2, r)?;
    let (k1, k2) = (k1 as usize, k2 as usize);
    let plan = sk2_plan(k1 + k2 + 1, r as usize, &mut trace)?;
    let l = dstar_with_columns(&plan, k1, k2, g, 5, &mut trace);
    Ok((l, trace.finish()))
}

/// `k`-subsets of `items` in lexicographic order.
struct Combinations<'a> {
    items: &'a [usize],
    idx: Vec<usize>,
    first: bool,
}

impl<'a> Combinations<'a> {
    fn new(items: &'a [usize], k: usize) -> Self {
        Combinations { items, idx: (0..k).collect(), first: true }
    }
}

impl Iterator for Combinations<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let (n, k) = (self.items.len(), self.idx.len());
        if k > n {
            return None;
        }
        if self.first {
            self.first = false;
        } else {
            let mut i = k;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                if self.idx[i] != i + n - k {
                    break;
                }
            }
            self.idx[i] += 1;
            for x in i + 1..k {
                self.idx[x] = self.idx[x - 1] + 1;
            }
        }
        Some(self.idx.iter().map(|&i| self.items[i]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_lexicographic() {
        let items = [2, 3, 4, 5];
        let all: Vec<Vec<usize>> = Combinations::new(&items, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![2, 3]);
        assert_eq!(all[5], vec![4, 5]);
    }

    #[test]
    fn even_r_adjust_examples() {
        let p = even_r_adjust(&star_empty_plan(3, 6).unwrap(), 3, 6).unwrap();
        assert_eq!(p.first[3].center.0, vec![20, 22, 24]);
        assert_eq!(p.first[3].leaves.diagonal, vec![23, 21, 19]);
        let base = star_empty_plan(3, 6).unwrap();
        for j in [0, 1, 2, 4, 5] {
            assert_eq!(p.first[j], base.first[j]);
        }
        let p = even_r_adjust(&star_empty_plan(10, 4).unwrap(), 10, 4).unwrap();
        assert_eq!(&p.first[2].center.0[1..5], &[44, 46, 48, 50]);
        assert!(even_r_adjust(&star_empty_plan(3, 3).unwrap(), 3, 3).is_err());
    }
}
