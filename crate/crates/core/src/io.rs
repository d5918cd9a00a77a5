//! Plain-text edge lists.
//!
//! One edge per line as two whitespace-separated labels; `#` starts a
//! comment line. An optional `n <count>` header fixes the order, in which
//! case labels must be the integers `0..count`. Without it, labels are
//! arbitrary tokens numbered by first appearance.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug)]
pub struct LabeledGraph {
    pub graph: Graph,
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl LabeledGraph {
    pub fn unlabeled(graph: Graph) -> Self {
        let labels: Vec<String> = (0..graph.n()).map(|v| v.to_string()).collect();
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        LabeledGraph { graph, labels, index }
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn id(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn ids(&self, labels: &[impl AsRef<str>]) -> Result<Vec<usize>> {
        labels
            .iter()
            .map(|l| {
                self.id(l.as_ref()).ok_or_else(|| Error::InvalidParameter(format!("unknown vertex label '{}'", l.as_ref())))
            })
            .collect()
    }

    pub fn labels_of(&self, ids: &[usize]) -> Vec<String> {
        ids.iter().map(|&v| self.labels[v].clone()).collect()
    }
}

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut order: Option<usize> = None;
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut seen_edge = false;

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(err(format!("expected two labels, found {}", tokens.len())));
        }
        if tokens[0] == "n" && !seen_edge && order.is_none() && labels.is_empty() {
            let count: usize = tokens[1].parse().map_err(|_| err(format!("bad vertex count '{}'", tokens[1])))?;
            order = Some(count);
            labels = (0..count).map(|v| v.to_string()).collect();
            index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
            continue;
        }
        seen_edge = true;
        let mut ends = [0usize; 2];
        for (slot, tok) in ends.iter_mut().zip(&tokens) {
            *slot = match order {
                Some(n) => {
                    let id: i64 = tok.parse().map_err(|_| err(format!("label '{tok}' is not a vertex id")))?;
                    if id < 0 || id as usize >= n {
                        return Err(err(format!("vertex {id} out of range for n = {n}")));
                    }
                    id as usize
                }
                None => match index.get(*tok) {
                    Some(&id) => id,
                    None => {
                        index.insert(tok.to_string(), labels.len());
                        labels.push(tok.to_string());
                        labels.len() - 1
                    }
                },
            };
        }
        if ends[0] == ends[1] {
            return Err(err(format!("self-loop on '{}'", tokens[0])));
        }
        edges.push((ends[0], ends[1]));
    }
    let graph = Graph::from_edge_list(&edges, Some(labels.len()))?;
    Ok(LabeledGraph { graph, labels, index })
}

/// Canonical text: comment lines, the order header, then sorted edges.
pub fn write_edge_list(g: &LabeledGraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "n {}", g.graph.n());
    for (u, v) in g.graph.edges() {
        let _ = writeln!(out, "{} {}", g.label(u), g.label(v));
    }
    out
}
