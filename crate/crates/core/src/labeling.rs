use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{Graph, VertexRef};
use crate::verify::{self, Report};

/// Edge labeling `f: E -> [1, m]`. Label 0 marks an edge left unlabeled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeling {
    pub graph: Graph,
    pub labels: Vec<u64>,
}

/// Total labeling `g: V ∪ E -> [1, n + m]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalLabeling {
    pub graph: Graph,
    pub vertex_labels: Vec<u64>,
    pub edge_labels: Vec<u64>,
}

impl EdgeLabeling {
    pub fn new(graph: Graph, labels: Vec<u64>) -> Result<Self> {
        if labels.len() != graph.size() {
            return Err(Error::LengthMismatch { expected: graph.size(), got: labels.len() });
        }
        Ok(EdgeLabeling { graph, labels })
    }

    pub fn weights(&self) -> Vec<u64> {
        verify::weights_edge(&self.graph, &self.labels).expect("lengths checked at construction")
    }

    pub fn check(&self) -> Report {
        verify::check_edge(&self.graph, &self.labels)
    }

    pub fn label_of(&self, a: &VertexRef, b: &VertexRef) -> Option<u64> {
        self.graph.edge(a, b).map(|e| self.labels[e])
    }
}

impl TotalLabeling {
    pub fn new(graph: Graph, vertex_labels: Vec<u64>, edge_labels: Vec<u64>) -> Result<Self> {
        if vertex_labels.len() != graph.order() {
            return Err(Error::LengthMismatch { expected: graph.order(), got: vertex_labels.len() });
        }
        if edge_labels.len() != graph.size() {
            return Err(Error::LengthMismatch { expected: graph.size(), got: edge_labels.len() });
        }
        Ok(TotalLabeling { graph, vertex_labels, edge_labels })
    }

    pub fn weights(&self) -> Vec<u64> {
        verify::weights_total(&self.graph, &self.vertex_labels, &self.edge_labels)
            .expect("lengths checked at construction")
    }

    pub fn check(&self) -> Report {
        verify::check_total(&self.graph, &self.vertex_labels, &self.edge_labels)
    }
}

/// Either kind of labeling, as read from or written to disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyLabeling {
    Edge(EdgeLabeling),
    Total(TotalLabeling),
}

impl AnyLabeling {
    pub fn graph(&self) -> &Graph {
        match self {
            AnyLabeling::Edge(l) => &l.graph,
            AnyLabeling::Total(l) => &l.graph,
        }
    }

    pub fn check(&self) -> Report {
        match self {
            AnyLabeling::Edge(l) => l.check(),
            AnyLabeling::Total(l) => l.check(),
        }
    }

    pub fn kind(&self) -> LabelKind {
        match self {
            AnyLabeling::Edge(_) => LabelKind::Edge,
            AnyLabeling::Total(_) => LabelKind::Total,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelKind {
    Edge,
    Total,
}

/// Role-addressed writer used by the constructions. Formula values arrive as
/// signed integers; anything below 1 is stored as 0 and shows up as an
/// unlabeled item in the report.
pub(crate) struct Builder {
    pub graph: Graph,
    pub edge: Vec<u64>,
    pub vertex: Vec<u64>,
}

impl Builder {
    pub fn new(graph: Graph) -> Self {
        let (n, m) = (graph.order(), graph.size());
        Builder { graph, edge: vec![0; m], vertex: vec![0; n] }
    }

    pub fn set_edge(&mut self, a: VertexRef, b: VertexRef, label: i64) {
        let e = self
            .graph
            .edge(&a, &b)
            .unwrap_or_else(|| panic!("no edge {a}{b} in {}", self.graph.family()));
        self.edge[e] = clamp(label);
    }

    pub fn set_vertex(&mut self, v: VertexRef, label: i64) {
        let i = self
            .graph
            .vertex(&v)
            .unwrap_or_else(|| panic!("no vertex {v} in {}", self.graph.family()));
        self.vertex[i] = clamp(label);
    }

    pub fn edge_labeling(self) -> EdgeLabeling {
        EdgeLabeling { graph: self.graph, labels: self.edge }
    }

    pub fn total_labeling(self) -> TotalLabeling {
        TotalLabeling { graph: self.graph, vertex_labels: self.vertex, edge_labels: self.edge }
    }
}

fn clamp(x: i64) -> u64 {
    if x < 1 {
        0
    } else {
        x as u64
    }
}

/// `x / 2` when `x` is even. A printed formula with an odd numerator has no
/// integer value; 0 is returned so the verifier reports the hole.
pub(crate) fn half(x: i64) -> i64 {
    if x % 2 == 0 {
        x / 2
    } else {
        0
    }
}
