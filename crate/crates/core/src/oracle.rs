//! Exact χ_la / χ_lat on tiny graphs by branch and bound.
//!
//! Items (edges, plus vertices for total labelings) are assigned labels in a
//! fixed order chosen so that vertices become complete early. A vertex's
//! weight is final once all its items are labeled; collisions with finished
//! neighbors and excess colors prune the branch.
//!
//! Reductions, all exactness-preserving:
//! - the search stops as soon as the incumbent meets a proven lower bound
//!   (2 for any graph with an edge, and the clique bound);
//! - on regular graphs the complement `f ↦ N + 1 − f` maps weights by
//!   `w ↦ d(N+1) − w` (or `(d+1)(N+1) − w` for total labelings), a bijection, so
//!   the first item's label is restricted to the lower half.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::labeling::{AnyLabeling, EdgeLabeling, LabelKind, TotalLabeling};
use crate::verify::clique_lower_bound;

/// Default cap on the number of labeled items.
pub const MAX_ITEMS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    Exhaustive,
    FirstWitness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub wall_clock_limit: Duration,
    pub mode: SearchMode,
    pub max_items: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 2_000_000_000,
            wall_clock_limit: Duration::from_secs(60),
            mode: SearchMode::Exhaustive,
            max_items: MAX_ITEMS,
        }
    }
}

impl SearchBudget {
    pub fn validate(&self) -> Result<()> {
        if self.max_nodes == 0 || self.wall_clock_limit.is_zero() || self.max_items == 0 {
            return Err(Error::InvalidParameter("search budget limits must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    /// Proven value (minimum, or the requested count was achieved).
    Value(usize),
    /// First-witness mode: a labeling with this many colors exists.
    UpperBound(usize),
    /// No labeling with the requested property exists.
    Infeasible,
    /// Budget ran out before the search could conclude.
    Exhausted,
}

#[derive(Debug, Clone)]
pub struct OracleResult {
    pub outcome: Outcome,
    pub witness: Option<AnyLabeling>,
    pub explored: u64,
    pub elapsed_ms: u64,
}

impl OracleResult {
    pub fn value(&self) -> Option<usize> {
        match self.outcome {
            Outcome::Value(v) => Some(v),
            _ => None,
        }
    }
}

pub fn exact_chi_la(g: &Graph, budget: SearchBudget) -> Result<OracleResult> {
    minimize(g, LabelKind::Edge, budget)
}

pub fn exact_chi_lat(g: &Graph, budget: SearchBudget) -> Result<OracleResult> {
    minimize(g, LabelKind::Total, budget)
}

/// First witness with exactly `c` colors.
pub fn exists_with_colors(g: &Graph, c: usize, kind: LabelKind, budget: SearchBudget) -> Result<OracleResult> {
    let mut s = Search::new(g, kind, budget)?;
    s.exact = Some(c);
    s.limit = c;
    s.run();
    let outcome = if s.best.is_some() {
        Outcome::Value(c)
    } else if s.out_of_budget {
        Outcome::Exhausted
    } else {
        Outcome::Infeasible
    };
    Ok(s.result(outcome))
}

fn minimize(g: &Graph, kind: LabelKind, budget: SearchBudget) -> Result<OracleResult> {
    let mut s = Search::new(g, kind, budget)?;
    s.limit = g.order();
    s.run();
    let outcome = match (s.best.as_ref(), s.out_of_budget, budget.mode) {
        (None, false, _) => Outcome::Infeasible,
        (None, true, _) => Outcome::Exhausted,
        (Some(&(c, _)), false, SearchMode::Exhaustive) => Outcome::Value(c),
        (Some(&(c, _)), _, _) if c <= s.lower => Outcome::Value(c),
        (Some(&(c, _)), false, SearchMode::FirstWitness) => Outcome::UpperBound(c),
        (Some(_), true, _) => Outcome::Exhausted,
    };
    Ok(s.result(outcome))
}

struct Search<'g> {
    g: &'g Graph,
    kind: LabelKind,
    budget: SearchBudget,
    /// Items in assignment order: `Ok(e)` edge, `Err(v)` vertex.
    items: Vec<std::result::Result<usize, usize>>,
    top: u64,
    lower: usize,
    first_cap: u64,
    used: Vec<bool>,
    edge: Vec<u64>,
    vertex: Vec<u64>,
    weight: Vec<u64>,
    remaining: Vec<usize>,
    finished: Vec<bool>,
    colors: Vec<(u64, usize)>,
    /// Maximum colors allowed in the current branch.
    limit: usize,
    exact: Option<usize>,
    best: Option<(usize, (Vec<u64>, Vec<u64>))>,
    explored: u64,
    start: Instant,
    out_of_budget: bool,
    done: bool,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, kind: LabelKind, budget: SearchBudget) -> Result<Self> {
        budget.validate()?;
        let total = kind == LabelKind::Total;
        let count = g.size() + if total { g.order() } else { 0 };
        if count > budget.max_items {
            return Err(Error::Guard(format!(
                "{count} labeled items exceed the oracle guard of {}",
                budget.max_items
            )));
        }
        let mut remaining: Vec<usize> = (0..g.order()).map(|v| g.degree(v) + usize::from(total)).collect();
        // Vertices in BFS order from a maximum-degree vertex; each contributes
        // its own item and its not-yet-listed edges.
        let mut items = Vec::with_capacity(count);
        let mut seen_v = vec![false; g.order()];
        let mut seen_e = vec![false; g.size()];
        let mut starts: Vec<usize> = (0..g.order()).collect();
        starts.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        for s in starts {
            if seen_v[s] {
                continue;
            }
            seen_v[s] = true;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                if total {
                    items.push(Err(v));
                }
                for &e in g.incident(v) {
                    if !seen_e[e] {
                        seen_e[e] = true;
                        items.push(Ok(e));
                    }
                    let w = g.other_end(e, v);
                    if !seen_v[w] {
                        seen_v[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        let top = count as u64;
        let regular = g.order() > 0 && (0..g.order()).all(|v| g.degree(v) == g.degree(0));
        let first_cap = if regular { top.div_ceil(2) } else { top };
        let lower = if g.size() > 0 { clique_lower_bound(g).max(2) } else { 1 };
        if g.size() == 0 {
            remaining.iter_mut().for_each(|r| *r = usize::from(total));
        }
        Ok(Search {
            g,
            kind,
            budget,
            items,
            top,
            lower,
            first_cap,
            used: vec![false; count + 1],
            edge: vec![0; g.size()],
            vertex: vec![0; g.order()],
            weight: vec![0; g.order()],
            remaining,
            finished: vec![false; g.order()],
            colors: Vec::new(),
            limit: 0,
            exact: None,
            best: None,
            explored: 0,
            start: Instant::now(),
            out_of_budget: false,
            done: false,
        })
    }

    fn run(&mut self) {
        // Isolated vertices of an edge labeling are finished from the start.
        for v in 0..self.g.order() {
            if self.remaining[v] == 0 && !self.finish_vertex(v) {
                return;
            }
        }
        self.go(0);
    }

    fn result(&self, outcome: Outcome) -> OracleResult {
        let witness = self.best.as_ref().map(|(_, (v, e))| match self.kind {
            LabelKind::Edge => AnyLabeling::Edge(EdgeLabeling { graph: self.g.clone(), labels: e.clone() }),
            LabelKind::Total => AnyLabeling::Total(TotalLabeling {
                graph: self.g.clone(),
                vertex_labels: v.clone(),
                edge_labels: e.clone(),
            }),
        });
        OracleResult {
            outcome,
            witness,
            explored: self.explored,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
        }
    }

    fn tick(&mut self) -> bool {
        self.explored += 1;
        if self.explored >= self.budget.max_nodes
            || (self.explored % 4096 == 0 && self.start.elapsed() >= self.budget.wall_clock_limit)
        {
            self.out_of_budget = true;
            self.done = true;
        }
        !self.done
    }

    fn go(&mut self, depth: usize) {
        if depth == self.items.len() {
            self.record();
            return;
        }
        let cap = if depth == 0 { self.first_cap } else { self.top };
        for label in 1..=cap {
            if self.used[label as usize] {
                continue;
            }
            if !self.tick() {
                return;
            }
            self.used[label as usize] = true;
            let touched = self.assign(depth, label);
            let mut ok = true;
            for &v in touched.iter().flatten() {
                if self.remaining[v] == 0 && !self.finish_vertex(v) {
                    ok = false;
                }
            }
            if ok {
                self.go(depth + 1);
            }
            self.unassign(depth, label, &touched);
            self.used[label as usize] = false;
            if self.done {
                return;
            }
        }
    }

    fn assign(&mut self, depth: usize, label: u64) -> [Option<usize>; 2] {
        match self.items[depth] {
            Ok(e) => {
                let (a, b) = self.g.edges()[e];
                self.edge[e] = label;
                for v in [a, b] {
                    self.weight[v] += label;
                    self.remaining[v] -= 1;
                }
                [Some(a), Some(b)]
            }
            Err(v) => {
                self.vertex[v] = label;
                self.weight[v] += label;
                self.remaining[v] -= 1;
                [Some(v), None]
            }
        }
    }

    fn unassign(&mut self, depth: usize, label: u64, touched: &[Option<usize>; 2]) {
        for &v in touched.iter().flatten() {
            if self.finished[v] {
                self.unfinish(v);
            }
        }
        match self.items[depth] {
            Ok(e) => {
                let (a, b) = self.g.edges()[e];
                self.edge[e] = 0;
                for v in [a, b] {
                    self.weight[v] -= label;
                    self.remaining[v] += 1;
                }
            }
            Err(v) => {
                self.vertex[v] = 0;
                self.weight[v] -= label;
                self.remaining[v] += 1;
            }
        }
    }

    /// Marks `v` finished; false if that breaks properness or the color limit.
    /// The vertex stays marked either way so that `unassign` can undo it.
    fn finish_vertex(&mut self, v: usize) -> bool {
        if self.finished[v] {
            return true;
        }
        self.finished[v] = true;
        let w = self.weight[v];
        match self.colors.iter_mut().find(|(c, _)| *c == w) {
            Some((_, n)) => *n += 1,
            None => self.colors.push((w, 1)),
        }
        let proper = self.g.neighbors(v).all(|u| !(self.finished[u] && u != v && self.weight[u] == w));
        proper && self.colors.len() <= self.limit
    }

    fn unfinish(&mut self, v: usize) {
        self.finished[v] = false;
        let w = self.weight[v];
        let i = self.colors.iter().position(|(c, _)| *c == w).expect("finished weight is counted");
        self.colors[i].1 -= 1;
        if self.colors[i].1 == 0 {
            self.colors.swap_remove(i);
        }
    }

    fn record(&mut self) {
        let c = self.colors.len();
        if let Some(want) = self.exact {
            if c == want {
                self.best = Some((c, (self.vertex.clone(), self.edge.clone())));
                self.done = true;
            }
            return;
        }
        self.best = Some((c, (self.vertex.clone(), self.edge.clone())));
        self.limit = c - 1;
        if c <= self.lower || self.budget.mode == SearchMode::FirstWitness {
            self.done = true;
        }
    }
}

/// Plain enumeration of all bijections, for cross-checking the pruned search.
/// Returns the minimum color count over proper labelings, if any.
pub fn naive_chi(g: &Graph, kind: LabelKind) -> Option<usize> {
    let total = kind == LabelKind::Total;
    let count = g.size() + if total { g.order() } else { 0 };
    assert!(count <= 9, "naive enumeration is for tiny graphs only");
    let mut labels: Vec<u64> = (1..=count as u64).collect();
    let mut best = None;
    permute(&mut labels, 0, &mut |p| {
        let (v, e) = if total { p.split_at(g.order()) } else { (&p[..0], p) };
        let mut w = vec![0u64; g.order()];
        for (i, &(a, b)) in g.edges().iter().enumerate() {
            w[a] += e[i];
            w[b] += e[i];
        }
        for (x, l) in w.iter_mut().zip(v) {
            *x += l;
        }
        if g.edges().iter().all(|&(a, b)| w[a] != w[b]) {
            w.sort_unstable();
            w.dedup();
            best = Some(best.map_or(w.len(), |b: usize| b.min(w.len())));
        }
    });
    best
}

fn permute(xs: &mut Vec<u64>, k: usize, f: &mut impl FnMut(&[u64])) {
    if k == xs.len() {
        f(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, f);
        xs.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::*;

    #[test]
    fn k2_edge_is_infeasible() {
        let r = exact_chi_la(&make_complete_two(), SearchBudget::default()).unwrap();
        assert_eq!(r.outcome, Outcome::Infeasible);
    }

    #[test]
    fn guard_refuses_large_graphs() {
        let g = make_firecracker(3, 4).unwrap();
        assert!(matches!(exact_chi_la(&g, SearchBudget::default()), Err(Error::Guard(_))));
    }

    #[test]
    fn node_budget_reports_exhaustion() {
        let budget = SearchBudget { max_nodes: 10, ..SearchBudget::default() };
        let r = exact_chi_la(&make_firecracker(3, 2).unwrap(), budget).unwrap();
        assert_eq!(r.outcome, Outcome::Exhausted);
    }

    #[test]
    fn star_values() {
        for k in 1..=4 {
            let r = exact_chi_la(&make_star(k).unwrap(), SearchBudget::default()).unwrap();
            let want = if k == 1 { None } else { Some(k as usize + 1) };
            assert_eq!(r.value(), want, "S_{k}");
        }
    }
}
