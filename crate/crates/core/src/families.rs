//! Generators for the graph families: Kneser, generalized Kneser, Schrijver,
//! circular complete, complete/cycle/path, and iterated Mycielskians.
//!
//! Subset-indexed families order their vertices colexicographically, which
//! is the increasing order of the subsets' bitmasks. Labels list elements of
//! `[m] = {1..m}`, e.g. `{1,3}`.

use serde::{Deserialize, Serialize};

use crate::budget::{check_construction, MAX_CONSTRUCTION_ORDER};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

/// All `n`-subsets of `[m]` as bitmasks (bit `i` = element `i+1`), in
/// colex order.
pub fn subsets(m: usize, n: usize) -> Result<Vec<u64>> {
    if m > 63 {
        return Err(precondition(format!("ground set size {m} exceeds 63")));
    }
    if n > m {
        return Ok(Vec::new());
    }
    let count = crate::formulas::binomial_u128(m as u64, n as u64);
    if count > MAX_CONSTRUCTION_ORDER as u128 {
        return Err(Error::SizeGuard {
            requested: count.min(usize::MAX as u128) as usize,
            limit: MAX_CONSTRUCTION_ORDER,
        });
    }
    if n == 0 {
        return Ok(vec![0]);
    }
    let mut out = Vec::with_capacity(count as usize);
    let limit = 1u64 << m;
    let mut x: u64 = (1u64 << n) - 1;
    while x < limit {
        out.push(x);
        // Gosper's hack: next larger integer with the same popcount.
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    Ok(out)
}

/// Renders a subset mask as `{1,3,4}`.
pub fn subset_label(mask: u64) -> String {
    let elems: Vec<String> = (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", elems.join(","))
}

fn subset_graph<F>(masks: &[u64], adjacent: F) -> Result<Graph>
where
    F: Fn(u64, u64) -> bool,
{
    let g = Graph::from_fn(masks.len(), |a, b| adjacent(masks[a], masks[b]))?;
    g.with_labels(masks.iter().map(|&m| subset_label(m)).collect())
}

/// KG(m, n): `n`-subsets of `[m]`, adjacent when disjoint.
pub fn kneser(m: usize, n: usize) -> Result<Graph> {
    if n < 1 || m < n {
        return Err(precondition(format!("kneser needs m >= n >= 1, got ({m},{n})")));
    }
    let masks = subsets(m, n)?;
    Ok(subset_graph(&masks, |a, b| a & b == 0)?.with_provenance("kneser", &[m as i64, n as i64]))
}

/// KG(m, n, s): `n`-subsets of `[m]`, adjacent when they share at most `s`
/// elements.
pub fn generalized_kneser(m: usize, n: usize, s: usize) -> Result<Graph> {
    if !(m >= n && n > s) {
        return Err(precondition(format!(
            "generalized kneser needs m >= n > s >= 0, got ({m},{n},{s})"
        )));
    }
    let masks = subsets(m, n)?;
    Ok(subset_graph(&masks, |a, b| ((a & b).count_ones() as usize) <= s)?
        .with_provenance("gen_kneser", &[m as i64, n as i64, s as i64]))
}

/// Whether every two distinct elements `x, y` of the subset satisfy
/// `2 <= |x - y| <= m - 2`.
pub fn is_two_stable(mask: u64, m: usize) -> bool {
    let elems: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
    let hi = m.saturating_sub(2);
    elems.iter().enumerate().all(|(i, &x)| {
        elems[i + 1..].iter().all(|&y| {
            let d = y - x;
            (2..=hi).contains(&d)
        })
    })
}

/// SG(m, n): the subgraph of KG(m, n) induced by 2-stable subsets.
pub fn schrijver(m: usize, n: usize) -> Result<Graph> {
    if n < 1 || m < 2 * n {
        return Err(precondition(format!("schrijver needs m >= 2n >= 2, got ({m},{n})")));
    }
    let masks: Vec<u64> = subsets(m, n)?.into_iter().filter(|&x| is_two_stable(x, m)).collect();
    Ok(subset_graph(&masks, |a, b| a & b == 0)?.with_provenance("schrijver", &[m as i64, n as i64]))
}

/// K_{n/d}: vertices `0..n`, `i ~ j` iff `d <= |i - j| <= n - d`.
pub fn circular_complete(n: usize, d: usize) -> Result<Graph> {
    if d < 1 || n < 2 * d {
        return Err(precondition(format!(
            "circular complete needs n >= 2d >= 2, got ({n},{d})"
        )));
    }
    check_construction(n)?;
    Ok(Graph::from_fn(n, |i, j| {
        let diff = j - i;
        d <= diff && diff <= n - d
    })?
    .with_provenance("circular", &[n as i64, d as i64]))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(precondition("complete graph needs n >= 1"));
    }
    Ok(Graph::from_fn(n, |_, _| true)?.with_provenance("complete", &[n as i64]))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(precondition("cycle needs n >= 3"));
    }
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?.with_provenance("cycle", &[n as i64]))
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(precondition("path needs n >= 1"));
    }
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?.with_provenance("path", &[n as i64]))
}

/// `G` together with its Mycielski bookkeeping at level `t`.
///
/// The Mycielskian of `H` (order `p`) keeps `H`'s vertices as `0..p`, puts
/// the twin of `v` at `p + v` and the root at `2p`. So the vertices of
/// `M^{t-1}(G)` are a prefix of those of `M^t(G)`.
#[derive(Debug, Clone)]
pub struct MycielskiGraph {
    graph: Graph,
    base: Graph,
    level: usize,
    parent_order: usize,
    roots: VertexSet,
}

impl MycielskiGraph {
    /// Level 0: `G` itself with no roots.
    pub fn identity(g: &Graph) -> MycielskiGraph {
        MycielskiGraph {
            graph: g.clone(),
            base: g.clone(),
            level: 0,
            parent_order: g.order(),
            roots: VertexSet::new(g.order()),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Order of `M^{t-1}(G)` (the graph this level was built from).
    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    /// The root `z` of the last iteration.
    pub fn root(&self) -> Option<usize> {
        (self.level > 0).then_some(2 * self.parent_order)
    }

    /// Twin of a vertex of the previous level.
    pub fn twin(&self, v: usize) -> Option<usize> {
        (self.level > 0 && v < self.parent_order).then_some(self.parent_order + v)
    }

    /// The previous-level vertex whose twin is `x`, if `x` is a twin.
    pub fn twin_source(&self, x: usize) -> Option<usize> {
        (self.level > 0 && x >= self.parent_order && x < 2 * self.parent_order).then(|| x - self.parent_order)
    }

    /// Roots accumulated over all iterations: the roots, their twins, the
    /// twins of those, and so on. Has `2^t - 1` members.
    pub fn roots(&self) -> &VertexSet {
        &self.roots
    }

    /// `M^{t-1}(G)` with its own bookkeeping.
    pub fn parent(&self) -> Result<MycielskiGraph> {
        if self.level == 0 {
            return Err(precondition("level-0 graph has no parent"));
        }
        iterated_mycielskian(&self.base, self.level - 1)
    }

    /// One more Mycielski iteration.
    pub fn step(&self) -> Result<MycielskiGraph> {
        let h = &self.graph;
        let p = h.order();
        check_construction(2 * p + 1)?;
        let mut edges: Vec<(usize, usize)> = h.edges().map(|e| (e.u, e.v)).collect();
        for e in h.edges() {
            edges.push((p + e.u, e.v));
            edges.push((e.u, p + e.v));
        }
        let z = 2 * p;
        edges.extend((0..p).map(|v| (p + v, z)));
        let mut graph = Graph::from_edges(2 * p + 1, edges)?;
        let level = self.level + 1;

        let mut labels: Vec<String> = (0..p).map(|v| h.label(v)).collect();
        labels.extend((0..p).map(|v| format!("{}'", h.label(v))));
        labels.push(format!("z{level}"));
        graph = match graph.clone().with_labels(labels) {
            Ok(g) => g,
            Err(_) => graph,
        };
        graph = graph.with_provenance("mycielski", &[level as i64]);

        let mut roots = VertexSet::new(2 * p + 1);
        for r in self.roots.iter() {
            roots.insert(r);
            roots.insert(p + r);
        }
        roots.insert(z);

        Ok(MycielskiGraph {
            graph,
            base: self.base.clone(),
            level,
            parent_order: p,
            roots,
        })
    }
}

/// M(G).
pub fn mycielskian(g: &Graph) -> Result<MycielskiGraph> {
    MycielskiGraph::identity(g).step()
}

/// M^t(G); `t = 0` wraps `G` with no roots.
pub fn iterated_mycielskian(g: &Graph, t: usize) -> Result<MycielskiGraph> {
    let mut mg = MycielskiGraph::identity(g);
    for _ in 0..t {
        mg = mg.step()?;
    }
    Ok(mg)
}

/// Family name plus integer parameters, as accepted by the CLI `gen` verb.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilySpec {
    Kneser {
        m: usize,
        n: usize,
    },
    GenKneser {
        m: usize,
        n: usize,
        s: usize,
    },
    Schrijver {
        m: usize,
        n: usize,
    },
    Circular {
        n: usize,
        d: usize,
    },
    Complete {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    /// `t`-th Mycielskian of another family member.
    Mycielski {
        t: usize,
        base: Box<FamilySpec>,
    },
    Product {
        left: Box<FamilySpec>,
        right: Box<FamilySpec>,
    },
}

impl FamilySpec {
    /// Parses `kneser 5 2`, `gen_kneser 6 3 1`, `circular 7 3`, ...
    /// Mycielskians and products take nested specs:
    /// `mycielski 2 complete 2`, `product complete 2 complete 3`.
    pub fn parse(words: &[&str]) -> Result<FamilySpec> {
        let (spec, rest) = Self::parse_prefix(words)?;
        if !rest.is_empty() {
            return Err(precondition(format!("trailing arguments: {}", rest.join(" "))));
        }
        Ok(spec)
    }

    fn parse_prefix<'a, 'b>(words: &'a [&'b str]) -> Result<(FamilySpec, &'a [&'b str])> {
        let (name, rest) = words.split_first().ok_or_else(|| precondition("missing family name"))?;
        let take = |k: usize, rest: &'a [&'b str]| -> Result<(Vec<usize>, &'a [&'b str])> {
            if rest.len() < k {
                return Err(precondition(format!("{name} needs {k} parameters")));
            }
            let nums = rest[..k]
                .iter()
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| precondition(format!("bad parameter {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((nums, &rest[k..]))
        };
        Ok(match *name {
            "kneser" => {
                let (p, r) = take(2, rest)?;
                (FamilySpec::Kneser { m: p[0], n: p[1] }, r)
            }
            "gen_kneser" | "gen-kneser" | "generalized_kneser" => {
                let (p, r) = take(3, rest)?;
                (
                    FamilySpec::GenKneser {
                        m: p[0],
                        n: p[1],
                        s: p[2],
                    },
                    r,
                )
            }
            "schrijver" => {
                let (p, r) = take(2, rest)?;
                (FamilySpec::Schrijver { m: p[0], n: p[1] }, r)
            }
            "circular" => {
                let (p, r) = take(2, rest)?;
                (FamilySpec::Circular { n: p[0], d: p[1] }, r)
            }
            "complete" => {
                let (p, r) = take(1, rest)?;
                (FamilySpec::Complete { n: p[0] }, r)
            }
            "cycle" => {
                let (p, r) = take(1, rest)?;
                (FamilySpec::Cycle { n: p[0] }, r)
            }
            "path" => {
                let (p, r) = take(1, rest)?;
                (FamilySpec::Path { n: p[0] }, r)
            }
            "mycielski" => {
                let (p, r) = take(1, rest)?;
                let (base, r) = Self::parse_prefix(r)?;
                (
                    FamilySpec::Mycielski {
                        t: p[0],
                        base: Box::new(base),
                    },
                    r,
                )
            }
            "product" => {
                let (left, r) = Self::parse_prefix(rest)?;
                let (right, r) = Self::parse_prefix(r)?;
                (
                    FamilySpec::Product {
                        left: Box::new(left),
                        right: Box::new(right),
                    },
                    r,
                )
            }
            other => return Err(precondition(format!("unknown family {other:?}"))),
        })
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Kneser { m, n } => kneser(*m, *n),
            FamilySpec::GenKneser { m, n, s } => generalized_kneser(*m, *n, *s),
            FamilySpec::Schrijver { m, n } => schrijver(*m, *n),
            FamilySpec::Circular { n, d } => circular_complete(*n, *d),
            FamilySpec::Complete { n } => complete(*n),
            FamilySpec::Cycle { n } => cycle(*n),
            FamilySpec::Path { n } => path(*n),
            FamilySpec::Mycielski { t, base } => Ok(iterated_mycielskian(&base.build()?, *t)?.graph),
            FamilySpec::Product { left, right } => left.build()?.categorical_product(&right.build()?),
        }
    }
}
