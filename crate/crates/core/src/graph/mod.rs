//! Simple undirected graphs with bitset adjacency rows.

mod dimacs;
mod invariants;
mod vertex_set;

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::budget::check_construction;
use crate::error::{Error, Result};

pub use dimacs::{parse_dimacs, write_dimacs, LabelSidecar};
pub use invariants::Girth;
pub use vertex_set::VertexSet;

/// An edge with `u < v`. Serialized as the pair `[u, v]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "(usize, usize)", try_from = "(usize, usize)")]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds the normalized edge between two distinct endpoints.
    pub fn new(a: usize, b: usize) -> Edge {
        assert_ne!(a, b, "loops are not edges");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl From<Edge> for (usize, usize) {
    fn from(e: Edge) -> Self {
        (e.u, e.v)
    }
}

impl TryFrom<(usize, usize)> for Edge {
    type Error = String;

    fn try_from((a, b): (usize, usize)) -> std::result::Result<Self, String> {
        if a == b {
            Err(format!("loop at vertex {a}"))
        } else {
            Ok(Edge::new(a, b))
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Family name and parameters of a generated graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub family: String,
    pub params: Vec<i64>,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.params.iter().map(|x| x.to_string()).collect();
        write!(f, "{}({})", self.family, p.join(","))
    }
}

/// Immutable simple graph. Adjacency is symmetric with an empty diagonal.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<VertexSet>,
    labels: Option<Vec<String>>,
    provenance: Option<Provenance>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        check_construction(n)?;
        Ok(Graph {
            rows: vec![VertexSet::new(n); n],
            labels: None,
            provenance: None,
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, order: n });
                }
            }
            if a == b {
                return Err(Error::Precondition(format!("loop at vertex {a}")));
            }
            g.rows[a].insert(b);
            g.rows[b].insert(a);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric adjacency predicate.
    pub fn from_fn<F>(n: usize, mut adjacent: F) -> Result<Graph>
    where
        F: FnMut(usize, usize) -> bool,
    {
        let mut g = Graph::empty(n)?;
        for a in 0..n {
            for b in a + 1..n {
                if adjacent(a, b) {
                    g.rows[a].insert(b);
                    g.rows[b].insert(a);
                }
            }
        }
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.order() {
            return Err(Error::Precondition(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.order()
            )));
        }
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::Precondition("labels are not distinct".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_provenance(mut self, family: &str, params: &[i64]) -> Graph {
        self.provenance = Some(Provenance {
            family: family.to_string(),
            params: params.to_vec(),
        });
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `v`, falling back to its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order() && self.rows[a].contains(b)
    }

    /// Open neighbourhood row without range checking beyond indexing.
    #[inline]
    pub fn adj(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// N(v).
    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.rows[v].clone())
    }

    /// N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut s = self.rows[v].clone();
        s.insert(v);
        Ok(s)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| Edge { u, v }))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.order())
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let rows = (0..n)
            .map(|v| {
                let mut r = self.rows[v].complement();
                r.remove(v);
                r
            })
            .collect();
        Graph {
            rows,
            labels: self.labels.clone(),
            provenance: None,
        }
    }

    /// Induced subgraph on `keep`, plus the map from new to old vertex ids.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = keep.iter().collect();
        let mut back = vec![usize::MAX; self.order()];
        for (i, &v) in map.iter().enumerate() {
            back[v] = i;
        }
        let rows = map
            .iter()
            .map(|&v| {
                VertexSet::from_vertices(
                    map.len(),
                    self.rows[v].iter().filter(|&w| keep.contains(w)).map(|w| back[w]),
                )
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| map.iter().map(|&v| l[v].clone()).collect());
        (
            Graph {
                rows,
                labels,
                provenance: None,
            },
            map,
        )
    }

    /// True iff no edge has both endpoints in `s`.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.rows[v].is_disjoint(s))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut others = s.clone();
            others.remove(v);
            others.is_subset(&self.rows[v])
        })
    }

    /// Categorical (tensor) product: (u,x) ~ (v,y) iff u ~ v and x ~ y.
    /// Vertex (u,x) gets index `u * |V(H)| + x`.
    pub fn categorical_product(&self, other: &Graph) -> Result<Graph> {
        let (n, m) = (self.order(), other.order());
        let order = n.checked_mul(m).ok_or(Error::SizeGuard {
            requested: usize::MAX,
            limit: crate::budget::MAX_CONSTRUCTION_ORDER,
        })?;
        let g = Graph::from_fn(order, |a, b| {
            let (u, x) = (a / m, a % m);
            let (v, y) = (b / m, b % m);
            self.has_edge(u, v) && other.has_edge(x, y)
        })?;
        let labels = (0..order)
            .map(|a| format!("({},{})", self.label(a / m), other.label(a % m)))
            .collect();
        g.with_labels(labels)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(n, 0);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for w in self.rows[v].iter() {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == n
    }

    /// Whether a bijection preserving adjacency exists. Plain backtracking,
    /// meant for the small instances used in checks.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        let n = self.order();
        if n != other.order() || self.size() != other.size() {
            return false;
        }
        let mut da: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut db: Vec<usize> = (0..n).map(|v| other.degree(v)).collect();
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return false;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        iso_extend(self, other, 0, &mut map, &mut used)
    }
}

fn iso_extend(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == g.order() {
        return true;
    }
    for x in 0..h.order() {
        if used[x] || g.degree(v) != h.degree(x) {
            continue;
        }
        let ok = (0..v).all(|w| g.has_edge(v, w) == h.has_edge(x, map[w]));
        if ok {
            map[v] = x;
            used[x] = true;
            if iso_extend(g, h, v + 1, map, used) {
                return true;
            }
            used[x] = false;
        }
    }
    false
}
