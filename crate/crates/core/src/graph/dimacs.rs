//! DIMACS `.col` reading and writing, with an optional JSON label sidecar.
//!
//! Vertices are 1-indexed in the file and 0-indexed in memory.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Graph, Provenance};
use crate::error::{Error, Result};

/// Contents of the `<file>.labels.json` sidecar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelSidecar {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<i64>,
    /// 1-indexed vertex id (as a string key) to display label.
    pub labels: BTreeMap<String, String>,
}

impl LabelSidecar {
    pub fn from_graph(g: &Graph) -> Option<LabelSidecar> {
        let labels = g.labels()?;
        Some(LabelSidecar {
            family: g.provenance().map(|p| p.family.clone()),
            params: g.provenance().map(|p| p.params.clone()).unwrap_or_default(),
            labels: labels
                .iter()
                .enumerate()
                .map(|(i, l)| ((i + 1).to_string(), l.clone()))
                .collect(),
        })
    }

    /// Attaches the labels (and provenance, if recorded) to `g`.
    pub fn apply(&self, g: Graph) -> Result<Graph> {
        let n = g.order();
        let mut labels = vec![None; n];
        for (k, l) in &self.labels {
            let i: usize = k.parse().map_err(|_| Error::Parse {
                line: 0,
                message: format!("bad label key {k:?}"),
            })?;
            if i == 0 || i > n {
                return Err(Error::VertexOutOfRange { vertex: i, order: n });
            }
            labels[i - 1] = Some(l.clone());
        }
        let labels: Option<Vec<String>> = labels.into_iter().collect();
        let labels = labels.ok_or_else(|| Error::Precondition("label sidecar does not cover every vertex".into()))?;
        let mut g = g.with_labels(labels)?;
        if let Some(f) = &self.family {
            g = g.with_provenance(f, &self.params);
        }
        Ok(g)
    }
}

/// Parses DIMACS edge format: `c` comment lines, one `p edge N M` header,
/// and `e U V` lines. Repeated edges are merged; loops are rejected.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                if order.is_some() {
                    return Err(err("duplicate problem line".into()));
                }
                let kind = parts.next().ok_or_else(|| err("missing format".into()))?;
                if kind != "edge" && kind != "col" {
                    return Err(err(format!("unsupported format {kind:?}")));
                }
                let n: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| err("bad vertex count".into()))?;
                parts
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| err("bad edge count".into()))?;
                order = Some(n);
            }
            Some("e") => {
                let n = order.ok_or_else(|| err("edge before problem line".into()))?;
                let mut endpoint = || -> Result<usize> {
                    let x: usize = parts
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| err("bad endpoint".into()))?;
                    if x == 0 || x > n {
                        return Err(err(format!("vertex {x} out of range 1..={n}")));
                    }
                    Ok(x - 1)
                };
                let (a, b) = (endpoint()?, endpoint()?);
                if a == b {
                    return Err(err(format!("loop at vertex {}", a + 1)));
                }
                edges.push((a, b));
            }
            Some(other) => return Err(err(format!("unknown line type {other:?}"))),
            None => {}
        }
    }
    let n = order.ok_or(Error::Parse {
        line: 0,
        message: "missing problem line".into(),
    })?;
    Graph::from_edges(n, edges)
}

/// Writes DIMACS with a provenance comment when available.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    if let Some(Provenance { family, params }) = g.provenance() {
        let p: Vec<String> = params.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "c {} {}", family, p.join(" "));
    }
    let _ = writeln!(out, "p edge {} {}", g.order(), g.size());
    for e in g.edges() {
        let _ = writeln!(out, "e {} {}", e.u + 1, e.v + 1);
    }
    out
}
