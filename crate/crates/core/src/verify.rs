//! Weights, certification reports and lower bounds.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::labeling::LabelKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Item {
    Vertex(usize),
    Edge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Violation {
    Unlabeled { item: Item },
    OutOfRange { item: Item, label: u64 },
    Duplicate { label: u64, items: Vec<Item> },
    Missing { label: u64 },
    Collision { edge: usize, a: usize, b: usize, weight: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBounds {
    /// Leaves + 1; only defined for trees.
    pub leaf_bound: Option<usize>,
    pub clique_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub kind: LabelKind,
    pub bijection_ok: bool,
    pub proper_ok: bool,
    pub weights: Vec<u64>,
    pub color_classes: BTreeMap<u64, Vec<usize>>,
    pub color_count: usize,
    pub lower_bounds: LowerBounds,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn certified(&self) -> bool {
        self.bijection_ok && self.proper_ok
    }

    /// 0 certified, 1 bijection failure, 2 properness failure.
    pub fn exit_code(&self) -> i32 {
        if !self.bijection_ok {
            1
        } else if !self.proper_ok {
            2
        } else {
            0
        }
    }

    pub fn colors(&self) -> Vec<u64> {
        self.color_classes.keys().copied().collect()
    }

    /// One-line verdict with role names, used as ledger witness text.
    pub fn summary(&self, g: &Graph) -> String {
        if self.certified() {
            let mut s = format!("certified, {} colors", self.color_count);
            if self.color_count <= 6 {
                let vals: Vec<String> = self.colors().iter().map(u64::to_string).collect();
                s.push_str(&format!(" {{{}}}", vals.join(", ")));
            }
            return s;
        }
        let name = |it: &Item| match *it {
            Item::Vertex(v) => g.vertices()[v].to_string(),
            Item::Edge(e) => {
                let (a, b) = g.edges()[e];
                format!("{}{}", g.vertices()[a], g.vertices()[b])
            }
        };
        let details: Vec<String> = self
            .violations
            .iter()
            .take(3)
            .map(|v| match v {
                Violation::Unlabeled { item } => format!("{} has no integer label", name(item)),
                Violation::OutOfRange { item, label } => format!("{} = {label} out of range", name(item)),
                Violation::Duplicate { label, items } => {
                    let who: Vec<String> = items.iter().map(name).collect();
                    format!("label {label} on {}", who.join(" and "))
                }
                Violation::Missing { label } => format!("label {label} unused"),
                Violation::Collision { a, b, weight, .. } => format!(
                    "w({}) = w({}) = {weight}",
                    g.vertices()[*a],
                    g.vertices()[*b]
                ),
            })
            .collect();
        let head = if !self.bijection_ok { "not a bijection" } else { "not proper" };
        let more = self.violations.len().saturating_sub(3);
        let tail = if more > 0 { format!("; {more} more") } else { String::new() };
        format!("{head}: {}{tail}", details.join("; "))
    }
}

/// `w(u)` = sum of labels on edges at `u`.
pub fn weights_edge(g: &Graph, labels: &[u64]) -> Result<Vec<u64>> {
    if labels.len() != g.size() {
        return Err(Error::LabelMismatch(format!(
            "{} edge labels for {} edges",
            labels.len(),
            g.size()
        )));
    }
    let mut w = vec![0u64; g.order()];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        w[a] += labels[e];
        w[b] += labels[e];
    }
    Ok(w)
}

/// `w_t(u) = g(u) + sum of labels on edges at u`.
pub fn weights_total(g: &Graph, vertex_labels: &[u64], edge_labels: &[u64]) -> Result<Vec<u64>> {
    if vertex_labels.len() != g.order() {
        return Err(Error::LabelMismatch(format!(
            "{} vertex labels for {} vertices",
            vertex_labels.len(),
            g.order()
        )));
    }
    let mut w = weights_edge(g, edge_labels)?;
    for (x, l) in w.iter_mut().zip(vertex_labels) {
        *x += l;
    }
    Ok(w)
}

pub fn check_edge(g: &Graph, labels: &[u64]) -> Report {
    let items: Vec<(Item, u64)> = labels.iter().enumerate().map(|(e, &l)| (Item::Edge(e), l)).collect();
    let weights = match weights_edge(g, labels) {
        Ok(w) => w,
        Err(_) => return mismatch(g, LabelKind::Edge),
    };
    finish(g, LabelKind::Edge, &items, weights)
}

pub fn check_total(g: &Graph, vertex_labels: &[u64], edge_labels: &[u64]) -> Report {
    let mut items: Vec<(Item, u64)> =
        vertex_labels.iter().enumerate().map(|(v, &l)| (Item::Vertex(v), l)).collect();
    items.extend(edge_labels.iter().enumerate().map(|(e, &l)| (Item::Edge(e), l)));
    let weights = match weights_total(g, vertex_labels, edge_labels) {
        Ok(w) => w,
        Err(_) => return mismatch(g, LabelKind::Total),
    };
    finish(g, LabelKind::Total, &items, weights)
}

fn mismatch(g: &Graph, kind: LabelKind) -> Report {
    Report {
        kind,
        bijection_ok: false,
        proper_ok: false,
        weights: Vec::new(),
        color_classes: BTreeMap::new(),
        color_count: 0,
        lower_bounds: lower_bounds(g),
        violations: vec![Violation::Missing { label: 1 }],
    }
}

fn finish(g: &Graph, kind: LabelKind, items: &[(Item, u64)], weights: Vec<u64>) -> Report {
    let top = items.len() as u64;
    let mut violations = Vec::new();
    let mut holders: Vec<Vec<Item>> = vec![Vec::new(); items.len() + 1];
    for &(item, label) in items {
        if label == 0 {
            violations.push(Violation::Unlabeled { item });
        } else if label > top {
            violations.push(Violation::OutOfRange { item, label });
        } else {
            holders[label as usize].push(item);
        }
    }
    for (label, who) in holders.iter().enumerate().skip(1) {
        match who.len() {
            0 => violations.push(Violation::Missing { label: label as u64 }),
            1 => {}
            _ => violations.push(Violation::Duplicate { label: label as u64, items: who.clone() }),
        }
    }
    let bijection_ok = violations.is_empty();

    let mut proper_ok = true;
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if weights[a] == weights[b] {
            proper_ok = false;
            violations.push(Violation::Collision { edge: e, a, b, weight: weights[a] });
        }
    }
    let mut color_classes: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (v, &w) in weights.iter().enumerate() {
        color_classes.entry(w).or_default().push(v);
    }
    Report {
        kind,
        bijection_ok,
        proper_ok,
        color_count: color_classes.len(),
        weights,
        color_classes,
        lower_bounds: lower_bounds(g),
        violations,
    }
}

pub fn lower_bounds(g: &Graph) -> LowerBounds {
    LowerBounds { leaf_bound: leaf_lower_bound(g), clique_bound: clique_lower_bound(g) }
}

/// For a tree with `l` leaves, any local antimagic labeling uses at least `l + 1` colors.
pub fn leaf_lower_bound(g: &Graph) -> Option<usize> {
    g.is_tree().then(|| g.leaf_count() + 1)
}

/// Largest clique size up to 5, a lower bound on the chromatic number.
pub fn clique_lower_bound(g: &Graph) -> usize {
    const CAP: usize = 5;
    if g.order() == 0 {
        return 0;
    }
    let mut best = 1;
    let mut clique = Vec::with_capacity(CAP);
    for v in 0..g.order() {
        let cand: Vec<usize> = g.neighbors(v).filter(|&w| w > v).collect();
        clique.clear();
        clique.push(v);
        grow(g, &mut clique, &cand, &mut best, CAP);
        if best >= CAP {
            break;
        }
    }
    best
}

fn grow(g: &Graph, clique: &mut Vec<usize>, cand: &[usize], best: &mut usize, cap: usize) {
    *best = (*best).max(clique.len());
    if *best >= cap || clique.len() + cand.len() <= *best {
        return;
    }
    for (i, &w) in cand.iter().enumerate() {
        let next: Vec<usize> =
            cand[i + 1..].iter().copied().filter(|&x| g.edge_between(w, x).is_some()).collect();
        clique.push(w);
        grow(g, clique, &next, best, cap);
        clique.pop();
        if *best >= cap {
            return;
        }
    }
}
