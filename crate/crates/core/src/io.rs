//! On-disk formats: versioned JSON documents, DOT and CSV.
//!
//! Every writer here has a matching reader, and `read(write(x)) == x`.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graphs::{Family, Graph, VertexRef};
use crate::labeling::{AnyLabeling, EdgeLabeling, LabelKind, TotalLabeling};
use crate::matrixlab::{Corona, LabelingMatrix};
use crate::oracle::{OracleResult, Outcome};
use crate::verify::Report;

/// Schema version written into every JSON document.
pub const FORMAT: u32 = 1;

fn check_format(found: u32) -> Result<()> {
    if found == FORMAT {
        Ok(())
    } else {
        Err(invalid(format!("unsupported format {found}, expected {FORMAT}")))
    }
}

fn to_pretty<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub format: u32,
    #[serde(flatten)]
    pub family: Family,
    pub vertices: Vec<VertexRef>,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphDoc {
    fn from(g: &Graph) -> Self {
        GraphDoc {
            format: FORMAT,
            family: g.family().clone(),
            vertices: g.vertices().to_vec(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl GraphDoc {
    pub fn into_graph(self) -> Result<Graph> {
        check_format(self.format)?;
        Graph::from_parts(self.family, self.vertices, self.edges.into_iter().map(|[a, b]| (a, b)).collect())
    }
}

pub fn graph_to_json(g: &Graph) -> String {
    to_pretty(&GraphDoc::from(g))
}

pub fn graph_from_json(s: &str) -> Result<Graph> {
    serde_json::from_str::<GraphDoc>(s)?.into_graph()
}

/// Labels stored as `[index, label]` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingDoc {
    pub format: u32,
    pub kind: LabelKind,
    pub graph: GraphDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<[u64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_labels: Option<Vec<[u64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_labels: Option<Vec<[u64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_colors: Option<usize>,
}

fn pairs(labels: &[u64]) -> Vec<[u64; 2]> {
    labels.iter().enumerate().map(|(i, &l)| [i as u64, l]).collect()
}

/// Dense label vector from pairs; absent indices stay 0 (unlabeled).
fn unpair(p: &[[u64; 2]], len: usize) -> Result<Vec<u64>> {
    let mut out = vec![0; len];
    let mut seen = vec![false; len];
    for &[i, l] in p {
        let i = i as usize;
        if i >= len {
            return Err(Error::IndexOutOfRange { index: i, max: len.saturating_sub(1) });
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(invalid(format!("index {i} labeled twice")));
        }
        out[i] = l;
    }
    Ok(out)
}

impl LabelingDoc {
    pub fn new(l: &AnyLabeling, claimed_colors: Option<usize>) -> Self {
        let mut doc = LabelingDoc {
            format: FORMAT,
            kind: l.kind(),
            graph: GraphDoc::from(l.graph()),
            labels: None,
            vertex_labels: None,
            edge_labels: None,
            claimed_colors,
        };
        match l {
            AnyLabeling::Edge(e) => doc.labels = Some(pairs(&e.labels)),
            AnyLabeling::Total(t) => {
                doc.vertex_labels = Some(pairs(&t.vertex_labels));
                doc.edge_labels = Some(pairs(&t.edge_labels));
            }
        }
        doc
    }

    pub fn into_labeling(self) -> Result<AnyLabeling> {
        check_format(self.format)?;
        let g = self.graph.into_graph()?;
        let missing = |f: &str| invalid(format!("{f} missing for this labeling kind"));
        match self.kind {
            LabelKind::Edge => {
                let p = self.labels.ok_or_else(|| missing("labels"))?;
                let labels = unpair(&p, g.size())?;
                Ok(AnyLabeling::Edge(EdgeLabeling::new(g, labels)?))
            }
            LabelKind::Total => {
                let v = self.vertex_labels.ok_or_else(|| missing("vertex_labels"))?;
                let e = self.edge_labels.ok_or_else(|| missing("edge_labels"))?;
                let (v, e) = (unpair(&v, g.order())?, unpair(&e, g.size())?);
                Ok(AnyLabeling::Total(TotalLabeling::new(g, v, e)?))
            }
        }
    }
}

pub fn labeling_to_json(l: &AnyLabeling, claimed_colors: Option<usize>) -> String {
    to_pretty(&LabelingDoc::new(l, claimed_colors))
}

/// The labeling and its claimed color count, if recorded.
pub fn labeling_from_json(s: &str) -> Result<(AnyLabeling, Option<usize>)> {
    let doc: LabelingDoc = serde_json::from_str(s)?;
    let claimed = doc.claimed_colors;
    Ok((doc.into_labeling()?, claimed))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub format: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<Corona>,
    pub order: Vec<VertexRef>,
    /// Upper triangle only, `[i, j, label]` with `i < j`.
    pub entries: Vec<[u64; 3]>,
}

pub fn matrix_to_json(m: &LabelingMatrix, source: Option<Corona>) -> String {
    to_pretty(&MatrixDoc {
        format: FORMAT,
        source,
        order: m.order().to_vec(),
        entries: m.entries().map(|(i, j, l)| [i as u64, j as u64, l]).collect(),
    })
}

pub fn matrix_from_json(s: &str) -> Result<(LabelingMatrix, Option<Corona>)> {
    let doc: MatrixDoc = serde_json::from_str(s)?;
    check_format(doc.format)?;
    let entries = doc.entries.into_iter().map(|[i, j, l]| (i as usize, j as usize, l));
    Ok((LabelingMatrix::new(doc.order, entries)?, doc.source))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub format: u32,
    pub certified: bool,
    pub exit_code: i32,
    pub summary: String,
    pub report: Report,
}

pub fn report_to_json(r: &Report, g: &Graph) -> String {
    to_pretty(&ReportDoc {
        format: FORMAT,
        certified: r.certified(),
        exit_code: r.exit_code(),
        summary: r.summary(g),
        report: r.clone(),
    })
}

pub fn report_from_json(s: &str) -> Result<Report> {
    let doc: ReportDoc = serde_json::from_str(s)?;
    check_format(doc.format)?;
    Ok(doc.report)
}

/// `value` is an integer, `"exhausted"` or `"infeasible"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OracleValue {
    Colors(usize),
    Word(OracleWord),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleWord {
    Exhausted,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDoc {
    pub format: u32,
    pub value: OracleValue,
    /// False when the value is only an upper bound (first-witness mode).
    pub proven: bool,
    pub witness: Option<LabelingDoc>,
    pub explored: u64,
    pub elapsed_ms: u64,
}

impl From<&OracleResult> for OracleDoc {
    fn from(r: &OracleResult) -> Self {
        let (value, proven) = match r.outcome {
            Outcome::Value(v) => (OracleValue::Colors(v), true),
            Outcome::UpperBound(v) => (OracleValue::Colors(v), false),
            Outcome::Infeasible => (OracleValue::Word(OracleWord::Infeasible), true),
            Outcome::Exhausted => (OracleValue::Word(OracleWord::Exhausted), false),
        };
        OracleDoc {
            format: FORMAT,
            value,
            proven,
            witness: r.witness.as_ref().map(|w| LabelingDoc::new(w, r.value())),
            explored: r.explored,
            elapsed_ms: r.elapsed_ms,
        }
    }
}

impl OracleDoc {
    pub fn into_result(self) -> Result<OracleResult> {
        check_format(self.format)?;
        let outcome = match (self.value, self.proven) {
            (OracleValue::Colors(v), true) => Outcome::Value(v),
            (OracleValue::Colors(v), false) => Outcome::UpperBound(v),
            (OracleValue::Word(OracleWord::Infeasible), _) => Outcome::Infeasible,
            (OracleValue::Word(OracleWord::Exhausted), _) => Outcome::Exhausted,
        };
        Ok(OracleResult {
            outcome,
            witness: self.witness.map(LabelingDoc::into_labeling).transpose()?,
            explored: self.explored,
            elapsed_ms: self.elapsed_ms,
        })
    }
}

pub fn oracle_to_json(r: &OracleResult) -> String {
    to_pretty(&OracleDoc::from(r))
}

pub fn oracle_from_json(s: &str) -> Result<OracleResult> {
    serde_json::from_str::<OracleDoc>(s)?.into_result()
}

/// One row of the per-vertex report table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRow {
    pub role: String,
    pub weight: u64,
    /// 1-based rank of the weight among the distinct weights.
    pub class: usize,
}

fn csv_err(e: csv::Error) -> Error {
    invalid(format!("csv: {e}"))
}

/// Serializes rows with a header line.
pub fn write_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| invalid(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn read_csv<T: for<'de> Deserialize<'de>>(s: &str) -> Result<Vec<T>> {
    csv::Reader::from_reader(s.as_bytes()).deserialize().map(|r| r.map_err(csv_err)).collect()
}

pub fn weight_rows(r: &Report, g: &Graph) -> Vec<WeightRow> {
    let colors = r.colors();
    g.vertices()
        .iter()
        .zip(&r.weights)
        .map(|(v, &w)| WeightRow {
            role: v.to_string(),
            weight: w,
            class: colors.binary_search(&w).map_or(0, |i| i + 1),
        })
        .collect()
}

pub fn report_to_csv(r: &Report, g: &Graph) -> String {
    write_csv(&weight_rows(r, g)).expect("weight rows always serialize")
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn unquote(s: &str) -> Option<String> {
    let inner = s.strip_prefix('"')?.strip_suffix('"')?;
    Some(inner.replace("\\\"", "\"").replace("\\\\", "\\"))
}

/// Undirected DOT; vertex labels are role names, edge labels are the labels if given.
pub fn to_dot(g: &Graph, edge_labels: Option<&[u64]>) -> String {
    let mut out = format!("graph {} {{\n", quote(&g.family().to_string()));
    for (i, v) in g.vertices().iter().enumerate() {
        out.push_str(&format!("  {i} [label={}];\n", quote(&v.to_string())));
    }
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        match edge_labels {
            Some(l) => out.push_str(&format!("  {a} -- {b} [label=\"{}\"];\n", l[e])),
            None => out.push_str(&format!("  {a} -- {b};\n")),
        }
    }
    out.push_str("}\n");
    out
}

/// Reads DOT written by [`to_dot`]. The family comes back as `Custom`.
pub fn from_dot(s: &str) -> Result<(Graph, Option<Vec<u64>>)> {
    let bad = |line: &str| invalid(format!("unrecognized DOT line {line:?}"));
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    for raw in s.lines() {
        let line = raw.trim();
        if line.is_empty() || line == "}" || line.starts_with("graph ") {
            continue;
        }
        let body = line.strip_suffix(';').ok_or_else(|| bad(line))?;
        let (head, attr) = match body.split_once(" [label=") {
            Some((h, a)) => (h, Some(a.strip_suffix(']').ok_or_else(|| bad(line))?)),
            None => (body, None),
        };
        let idx = |t: &str| t.trim().parse::<usize>().map_err(|_| bad(line));
        if let Some((a, b)) = head.split_once("--") {
            edges.push((idx(a)?, idx(b)?));
            let l = attr.map(|a| unquote(a).and_then(|x| x.parse::<u64>().ok()).ok_or_else(|| bad(line)));
            labels.push(l.transpose()?);
        } else {
            if idx(head)? != vertices.len() {
                return Err(invalid("DOT vertices out of order"));
            }
            let name = attr.and_then(unquote).ok_or_else(|| bad(line))?;
            vertices.push(name.parse::<VertexRef>()?);
        }
    }
    let g = Graph::from_parts(Family::Custom, vertices, edges)?;
    let labels = match labels.iter().all(Option::is_some) && !labels.is_empty() {
        true => Some(labels.into_iter().flatten().collect()),
        false => None,
    };
    Ok((g, labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct_la::label_firecracker;
    use crate::construct_lat::total_label_fn1;
    use crate::graphs::make_firecracker;

    #[test]
    fn graph_json_shape() {
        let g = make_firecracker(2, 2).unwrap();
        let v: serde_json::Value = serde_json::from_str(&graph_to_json(&g)).unwrap();
        assert_eq!(v["format"], 1);
        assert_eq!(v["family"], "firecracker");
        assert_eq!(v["params"]["n"], 2);
        assert_eq!(v["edges"].as_array().unwrap().len(), 5);
        assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);
    }

    #[test]
    fn unit_family_round_trips() {
        let g = crate::graphs::make_complete_two();
        assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);
    }

    #[test]
    fn labelings_round_trip() {
        let e = AnyLabeling::Edge(label_firecracker(3, 2).unwrap());
        let (back, c) = labeling_from_json(&labeling_to_json(&e, Some(4))).unwrap();
        assert_eq!((back, c), (e, Some(4)));
        let t = AnyLabeling::Total(total_label_fn1(4).unwrap());
        let s = labeling_to_json(&t, None);
        assert!(s.contains("\"kind\": \"total\""));
        assert_eq!(labeling_from_json(&s).unwrap().0, t);
    }

    #[test]
    fn wrong_format_rejected() {
        let g = make_firecracker(2, 2).unwrap();
        let s = graph_to_json(&g).replace("\"format\": 1", "\"format\": 2");
        assert!(graph_from_json(&s).is_err());
    }

    #[test]
    fn dot_round_trip() {
        let l = label_firecracker(3, 3).unwrap();
        let (g, labels) = from_dot(&to_dot(&l.graph, Some(&l.labels))).unwrap();
        assert_eq!(g.vertices(), l.graph.vertices());
        assert_eq!(g.edges(), l.graph.edges());
        assert_eq!(labels.as_deref(), Some(&l.labels[..]));
        let (_, none) = from_dot(&to_dot(&l.graph, None)).unwrap();
        assert!(none.is_none());
    }

    #[test]
    fn weight_csv_round_trip() {
        let l = label_firecracker(2, 3).unwrap();
        let r = l.check();
        let rows: Vec<WeightRow> = read_csv(&report_to_csv(&r, &l.graph)).unwrap();
        assert_eq!(rows, weight_rows(&r, &l.graph));
        // role names such as "v1,2" contain commas and must be quoted
        assert!(rows.iter().any(|w| w.role.contains(',')));
    }
}
