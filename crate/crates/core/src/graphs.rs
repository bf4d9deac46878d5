//! Graph families and products, with role-tagged vertices.
//!
//! Every constructor is deterministic: vertex and edge order depend only on
//! the parameters. Vertex order follows the row order used by the labeling
//! matrices, so row `i` of a matrix always addresses vertex `i`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Structural role of a vertex. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VertexRef {
    /// `u_i`, the center of the i-th star of a firecracker.
    SpineCenter(u32),
    /// `p_i`, a vertex of a path.
    SpineLink(u32),
    /// `v_{i,j}`, a leaf of the i-th firecracker star; `v_{i,1}` lies on the spine.
    Leaf(u32, u32),
    /// Star center: tag 0 is `c`, tags 1 and 2 are `c_1`, `c_2` of a double star.
    HubCenter(u32),
    /// `v_i`, a leaf of a star or double star.
    HubLeaf(u32),
    /// Copy vertex attached to edge `i` of the base graph, in copy `j`.
    /// `s = 0` for a single vertex, `s = 1, 2` for the two ends of a `K_2` copy.
    CopyVertex(u32, u32, u32),
    /// The vertex added by a join with `K_1`.
    Apex,
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VertexRef::SpineCenter(i) => write!(f, "u{i}"),
            VertexRef::SpineLink(i) => write!(f, "p{i}"),
            VertexRef::Leaf(i, j) => write!(f, "v{i},{j}"),
            VertexRef::HubCenter(0) => write!(f, "c"),
            VertexRef::HubCenter(t) => write!(f, "c{t}"),
            VertexRef::HubLeaf(i) => write!(f, "v{i}"),
            VertexRef::CopyVertex(i, j, 0) => write!(f, "u{i}^{j}"),
            VertexRef::CopyVertex(i, j, s) => write!(f, "u{i}^{j}.{s}"),
            VertexRef::Apex => write!(f, "a"),
        }
    }
}

impl std::str::FromStr for VertexRef {
    type Err = Error;

    /// Parses the [`fmt::Display`] form back.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unrecognized vertex name {s:?}"));
        let num = |t: &str| t.parse::<u32>().map_err(|_| bad());
        if s == "a" {
            return Ok(VertexRef::Apex);
        }
        if s == "c" {
            return Ok(VertexRef::HubCenter(0));
        }
        let (head, rest) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        match head {
            "c" => Ok(VertexRef::HubCenter(num(rest)?)),
            "p" => Ok(VertexRef::SpineLink(num(rest)?)),
            "v" => match rest.split_once(',') {
                Some((i, j)) => Ok(VertexRef::Leaf(num(i)?, num(j)?)),
                None => Ok(VertexRef::HubLeaf(num(rest)?)),
            },
            "u" => match rest.split_once('^') {
                None => Ok(VertexRef::SpineCenter(num(rest)?)),
                Some((i, tail)) => match tail.split_once('.') {
                    Some((j, side)) => Ok(VertexRef::CopyVertex(num(i)?, num(j)?, num(side)?)),
                    None => Ok(VertexRef::CopyVertex(num(i)?, num(tail)?, 0)),
                },
            },
            _ => Err(bad()),
        }
    }
}

/// Which graph a [`Graph`] was built from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "kebab-case")]
pub enum Family {
    Star { k: u32 },
    DoubleStar { k1: u32, k2: u32 },
    Firecracker { n: u32, k: u32 },
    Path { n: u32 },
    Empty { r: u32 },
    CompleteTwo,
    CopiesK2 { r: u32 },
    EdgeCorona { g: Box<Family>, h: Box<Family> },
    Join { g: Box<Family> },
    Custom,
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Family::Star { k } => make_star(*k),
            Family::DoubleStar { k1, k2 } => make_double_star(*k1, *k2),
            Family::Firecracker { n, k } => make_firecracker(*n, *k),
            Family::Path { n } => make_path(*n),
            Family::Empty { r } => make_empty(*r),
            Family::CompleteTwo => make_path(2),
            Family::CopiesK2 { r } => disjoint_copies_k2(*r),
            Family::EdgeCorona { g, h } => edge_corona(&g.build()?, &h.build()?),
            Family::Join { g } => Ok(join_with_single_vertex(&g.build()?)),
            Family::Custom => Err(invalid("a custom graph has no generator")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Star { k } => write!(f, "S_{k}"),
            Family::DoubleStar { k1, k2 } => write!(f, "S_{{{k1},{k2}}}"),
            Family::Firecracker { n, k } => write!(f, "F_{{{n},{k}}}"),
            Family::Path { n } => write!(f, "P_{n}"),
            Family::Empty { r } => write!(f, "~K_{r}"),
            Family::CompleteTwo => write!(f, "K_2"),
            Family::CopiesK2 { r } => write!(f, "{r}K_2"),
            Family::EdgeCorona { g, h } => write!(f, "{g} <> {h}"),
            Family::Join { g } => write!(f, "{g} v K_1"),
            Family::Custom => write!(f, "custom"),
        }
    }
}

/// An immutable simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    family: Family,
    vertices: Vec<VertexRef>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    index: HashMap<VertexRef, usize>,
    edge_index: HashMap<(usize, usize), usize>,
}

impl Graph {
    /// Builds and validates a graph. Edges are unordered pairs of vertex indices.
    pub fn from_parts(
        family: Family,
        vertices: Vec<VertexRef>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(*v, i).is_some() {
                return Err(Error::NotSimple(format!("vertex role {v} used twice")));
            }
        }
        let mut adjacency = vec![Vec::new(); vertices.len()];
        let mut edge_index = HashMap::with_capacity(edges.len());
        for (e, &(a, b)) in edges.iter().enumerate() {
            if a >= vertices.len() || b >= vertices.len() {
                return Err(Error::NotSimple(format!("edge {e} names a missing vertex")));
            }
            if a == b {
                return Err(Error::NotSimple(format!("loop at {}", vertices[a])));
            }
            if edge_index.insert(key(a, b), e).is_some() {
                return Err(Error::NotSimple(format!(
                    "duplicate edge {}{}",
                    vertices[a], vertices[b]
                )));
            }
            adjacency[a].push(e);
            adjacency[b].push(e);
        }
        Ok(Graph { family, vertices, edges, adjacency, index, edge_index })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn vertices(&self) -> &[VertexRef] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Incident edge indices of vertex `v`.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(move |&e| self.other_end(e, v))
    }

    pub fn vertex(&self, role: &VertexRef) -> Option<usize> {
        self.index.get(role).copied()
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_index.get(&key(a, b)).copied()
    }

    /// Edge index for a pair of roles.
    pub fn edge(&self, a: &VertexRef, b: &VertexRef) -> Option<usize> {
        self.edge_between(self.vertex(a)?, self.vertex(b)?)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size() + 1 == self.order() && self.is_connected()
    }

    pub fn leaf_count(&self) -> usize {
        (0..self.order()).filter(|&v| self.degree(v) == 1).count()
    }
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn positive(name: &str, x: u32) -> Result<()> {
    if x == 0 {
        Err(invalid(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

/// Star `S_k`: center `c`, leaves `v_1..v_k`.
pub fn make_star(k: u32) -> Result<Graph> {
    positive("k", k)?;
    let mut vertices = vec![VertexRef::HubCenter(0)];
    vertices.extend((1..=k).map(VertexRef::HubLeaf));
    let edges = (1..=k as usize).map(|i| (0, i)).collect();
    Graph::from_parts(Family::Star { k }, vertices, edges)
}

/// Double star `S_{k1,k2}`: centers `c_1, c_2`, then `v_1..v_{k1+k2}`.
/// Edge order is `c_1c_2`, the `k1` leaves of `c_1`, then the `k2` leaves of `c_2`.
pub fn make_double_star(k1: u32, k2: u32) -> Result<Graph> {
    positive("k1", k1)?;
    positive("k2", k2)?;
    if k1 > k2 {
        return Err(invalid(format!("double star needs k1 <= k2, got ({k1},{k2})")));
    }
    let mut vertices = vec![VertexRef::HubCenter(1), VertexRef::HubCenter(2)];
    vertices.extend((1..=k1 + k2).map(VertexRef::HubLeaf));
    let mut edges = vec![(0, 1)];
    for i in 1..=(k1 + k2) as usize {
        let center = if i <= k1 as usize { 0 } else { 1 };
        edges.push((center, 1 + i));
    }
    Graph::from_parts(Family::DoubleStar { k1, k2 }, vertices, edges)
}

/// Firecracker `F_{n,k}`: vertices `u_1..u_n`, then `v_{i,j}` row by row.
/// Edges `u_iv_{i,j}` row by row, then the spine `v_{i,1}v_{i+1,1}`.
pub fn make_firecracker(n: u32, k: u32) -> Result<Graph> {
    positive("n", n)?;
    positive("k", k)?;
    let (nu, ku) = (n as usize, k as usize);
    let mut vertices: Vec<VertexRef> = (1..=n).map(VertexRef::SpineCenter).collect();
    for i in 1..=n {
        vertices.extend((1..=k).map(|j| VertexRef::Leaf(i, j)));
    }
    let leaf = |i: usize, j: usize| nu + (i - 1) * ku + (j - 1);
    let mut edges = Vec::with_capacity(nu * ku + nu - 1);
    for i in 1..=nu {
        for j in 1..=ku {
            edges.push((i - 1, leaf(i, j)));
        }
    }
    for i in 1..nu {
        edges.push((leaf(i, 1), leaf(i + 1, 1)));
    }
    Graph::from_parts(Family::Firecracker { n, k }, vertices, edges)
}

pub fn make_path(n: u32) -> Result<Graph> {
    positive("n", n)?;
    let vertices = (1..=n).map(VertexRef::SpineLink).collect();
    let edges = (1..n as usize).map(|i| (i - 1, i)).collect();
    let family = if n == 2 { Family::CompleteTwo } else { Family::Path { n } };
    Graph::from_parts(family, vertices, edges)
}

pub fn make_complete_two() -> Graph {
    make_path(2).expect("K_2 is valid")
}

/// Empty graph on `r` vertices, meant as the `H` argument of [`edge_corona`].
pub fn make_empty(r: u32) -> Result<Graph> {
    positive("r", r)?;
    let vertices = (1..=r).map(|j| VertexRef::CopyVertex(1, j, 0)).collect();
    Graph::from_parts(Family::Empty { r }, vertices, Vec::new())
}

/// `rK_2`: first ends of all copies, then the second ends, matched in order.
pub fn disjoint_copies_k2(r: u32) -> Result<Graph> {
    positive("r", r)?;
    let mut vertices: Vec<VertexRef> = (1..=r).map(|j| VertexRef::CopyVertex(1, j, 1)).collect();
    vertices.extend((1..=r).map(|j| VertexRef::CopyVertex(1, j, 2)));
    let ru = r as usize;
    let edges = (0..ru).map(|j| (j, ru + j)).collect();
    Graph::from_parts(Family::CopiesK2 { r }, vertices, edges)
}

/// Edge corona `G◇H`: one copy of `H` per edge of `G`, both ends of the edge
/// joined to every vertex of its copy.
///
/// Copy vertices are ordered with the `H` vertex outermost and the `G` edge
/// innermost, which reproduces the block layout of the labeling matrices.
pub fn edge_corona(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.size() == 0 {
        return Err(invalid("edge corona needs a base graph with at least one edge"));
    }
    if !g.is_connected() {
        return Err(invalid("edge corona needs a connected base graph"));
    }
    let base = g.order();
    let m = g.size();
    let mut vertices = g.vertices().to_vec();
    for (x, role) in h.vertices().iter().enumerate() {
        let (j, s) = match *role {
            VertexRef::CopyVertex(_, j, s) => (j, s),
            _ => (x as u32 + 1, 0),
        };
        for e in 0..m {
            vertices.push(VertexRef::CopyVertex(e as u32 + 1, j, s));
        }
    }
    let copy = |x: usize, e: usize| base + x * m + e;
    let mut edges = g.edges().to_vec();
    for x in 0..h.order() {
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            edges.push((a, copy(x, e)));
            edges.push((b, copy(x, e)));
        }
    }
    for &(x, y) in h.edges() {
        for e in 0..m {
            edges.push((copy(x, e), copy(y, e)));
        }
    }
    let family = Family::EdgeCorona {
        g: Box::new(g.family().clone()),
        h: Box::new(h.family().clone()),
    };
    Graph::from_parts(family, vertices, edges)
}

/// `G ∨ K_1`. The new edges come after the old ones, in vertex order.
pub fn join_with_single_vertex(g: &Graph) -> Graph {
    let apex = g.order();
    let mut vertices = g.vertices().to_vec();
    vertices.push(VertexRef::Apex);
    let mut edges = g.edges().to_vec();
    edges.extend((0..apex).map(|v| (v, apex)));
    Graph::from_parts(Family::Join { g: Box::new(g.family().clone()) }, vertices, edges)
        .expect("joining an apex keeps the graph simple")
}

/// `S_k ◇ ~K_r`.
pub fn star_corona_empty(k: u32, r: u32) -> Result<Graph> {
    edge_corona(&make_star(k)?, &make_empty(r)?)
}

/// `S_{k1,k2} ◇ ~K_r`.
pub fn double_star_corona_empty(k1: u32, k2: u32, r: u32) -> Result<Graph> {
    edge_corona(&make_double_star(k1, k2)?, &make_empty(r)?)
}

/// `S_k ◇ rK_2`.
pub fn star_corona_k2(k: u32, r: u32) -> Result<Graph> {
    edge_corona(&make_star(k)?, &disjoint_copies_k2(r)?)
}

/// `S_{k1,k2} ◇ rK_2`.
pub fn double_star_corona_k2(k1: u32, k2: u32, r: u32) -> Result<Graph> {
    edge_corona(&make_double_star(k1, k2)?, &disjoint_copies_k2(r)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_names_parse_back() {
        let g = edge_corona(&make_double_star(1, 2).unwrap(), &disjoint_copies_k2(2).unwrap()).unwrap();
        let f = make_firecracker(2, 3).unwrap();
        let j = join_with_single_vertex(&make_path(3).unwrap());
        for v in g.vertices().iter().chain(f.vertices()).chain(j.vertices()) {
            assert_eq!(v.to_string().parse::<VertexRef>().unwrap(), *v);
        }
        assert!("x1".parse::<VertexRef>().is_err());
        assert!("v1,".parse::<VertexRef>().is_err());
    }

    #[test]
    fn star_counts() {
        let g = make_star(3).unwrap();
        assert_eq!((g.order(), g.size()), (4, 3));
        assert_eq!(g.degree(0), 3);
        assert!(make_star(0).is_err());
    }

    #[test]
    fn double_star_rejects_swapped() {
        assert!(make_double_star(5, 4).is_err());
        let g = make_double_star(3, 4).unwrap();
        assert_eq!((g.degree(0), g.degree(1)), (4, 5));
    }

    #[test]
    fn firecracker_roles() {
        let g = make_firecracker(5, 4).unwrap();
        assert_eq!((g.order(), g.size()), (25, 24));
        assert!(g.is_tree());
        assert_eq!(g.leaf_count(), 5 * 3);
        let spine = g.edge(&VertexRef::Leaf(2, 1), &VertexRef::Leaf(3, 1));
        assert!(spine.is_some());
        assert!(g.edge(&VertexRef::Leaf(2, 2), &VertexRef::Leaf(3, 2)).is_none());
    }

    #[test]
    fn corona_vertex_order_matches_matrix_rows() {
        let g = double_star_corona_empty(1, 2, 2).unwrap();
        let v = g.vertices();
        assert_eq!(v[0], VertexRef::HubCenter(1));
        assert_eq!(v[1], VertexRef::HubCenter(2));
        assert_eq!(v[5], VertexRef::CopyVertex(1, 1, 0));
        assert_eq!(v[9], VertexRef::CopyVertex(1, 2, 0));
        let k2 = star_corona_k2(2, 2).unwrap();
        let roles: Vec<_> = k2.vertices()[3..].to_vec();
        assert_eq!(roles[0], VertexRef::CopyVertex(1, 1, 1));
        assert_eq!(roles[3], VertexRef::CopyVertex(2, 2, 1));
        assert_eq!(roles[4], VertexRef::CopyVertex(1, 1, 2));
    }
}
