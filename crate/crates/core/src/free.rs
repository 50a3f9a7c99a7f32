//! Free independent sets, the free chromatic numbers φ and φ^a_b, and the
//! constructions that turn circular colourings, short edges, short cycles
//! and Mycielski structure into free colourings.
//!
//! An independent set `F` is *supported* by an edge `uv` when
//! `F ∩ (N(u) ∪ N(v)) = ∅`; it is *free* when some edge supports it. The
//! support of `F` is exactly the edge set of `G − N[F]`.

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::chromatic::{chromatic_number, circular_chromatic_number, k_colorable, Coloring};
use crate::error::{Error, Result};
use crate::families::MycielskiGraph;
use crate::graph::{Edge, Girth, Graph, VertexSet};
use crate::hom::{constrained_mycielski_hom, HomWitness};

/// A free chromatic number: finite, or `∞` when no admissible colouring
/// exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FreeNumber {
    Finite(usize),
    Infinite,
}

impl FreeNumber {
    pub fn finite(self) -> Option<usize> {
        match self {
            FreeNumber::Finite(t) => Some(t),
            FreeNumber::Infinite => None,
        }
    }
}

impl std::fmt::Display for FreeNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FreeNumber::Finite(t) => write!(f, "{t}"),
            FreeNumber::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for FreeNumber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FreeNumber::Finite(t) => s.serialize_u64(*t as u64),
            FreeNumber::Infinite => s.serialize_str("inf"),
        }
    }
}

/// A partition into independent classes where the first `support.len()`
/// classes are designated free, each with a supporting edge.
///
/// `b = None` leaves the per-vertex incidence of support edges unbounded,
/// which is the plain free colouring behind φ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeColoring {
    pub classes: Vec<VertexSet>,
    pub a: usize,
    pub b: Option<usize>,
    pub support: Vec<Edge>,
}

impl FreeColoring {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Number of classes without a support edge.
    pub fn undesignated(&self) -> usize {
        self.classes.len() - self.support.len()
    }

    /// Re-checks every condition from scratch.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidColoring(m));
        let n = g.order();
        let mut seen = VertexSet::new(n);
        for (i, c) in self.classes.iter().enumerate() {
            if c.universe() != n {
                return bad(format!("class {i} has universe {} for order {n}", c.universe()));
            }
            if c.is_empty() {
                return bad(format!("class {i} is empty"));
            }
            if !g.is_independent(c) {
                return bad(format!("class {i} is not independent"));
            }
            if !seen.is_disjoint(c) {
                return bad(format!("class {i} overlaps an earlier class"));
            }
            seen.union_with(c);
        }
        if seen.len() != n {
            return bad(format!("classes cover {} of {n} vertices", seen.len()));
        }
        if self.support.len() > self.classes.len() {
            return bad("more support edges than classes".into());
        }
        if self.undesignated() > self.a {
            return bad(format!(
                "{} classes lack support, allowance is {}",
                self.undesignated(),
                self.a
            ));
        }
        if self.b == Some(0) {
            return bad("b must be positive".into());
        }
        let mut incidence = vec![0usize; n];
        for (i, e) in self.support.iter().enumerate() {
            if !g.has_edge(e.u, e.v) {
                return bad(format!("support {e} of class {i} is not an edge"));
            }
            if !supports(g, &self.classes[i], *e) {
                return bad(format!("edge {e} does not support class {i}"));
            }
            incidence[e.u] += 1;
            incidence[e.v] += 1;
        }
        if let Some(b) = self.b {
            if let Some(v) = incidence.iter().position(|&k| k > b) {
                return bad(format!("vertex {v} meets {} support edges, cap is {b}", incidence[v]));
            }
        }
        Ok(())
    }
}

fn supports(g: &Graph, f: &VertexSet, e: Edge) -> bool {
    g.adj(e.u).is_disjoint(f) && g.adj(e.v).is_disjoint(f)
}

fn check_independent(g: &Graph, f: &VertexSet) -> Result<()> {
    if f.universe() != g.order() {
        return Err(Error::Precondition(format!(
            "set over {} vertices for a graph of order {}",
            f.universe(),
            g.order()
        )));
    }
    if g.is_independent(f) {
        Ok(())
    } else {
        Err(Error::NotIndependent)
    }
}

/// supp(F): edges `uv` with `F ∩ (N(u) ∪ N(v)) = ∅`, lexicographic.
pub fn supp(g: &Graph, f: &VertexSet) -> Result<Vec<Edge>> {
    check_independent(g, f)?;
    Ok(g.edges().filter(|&e| supports(g, f, e)).collect())
}

pub fn is_free_independent(g: &Graph, f: &VertexSet) -> Result<bool> {
    check_independent(g, f)?;
    Ok(g.edges().any(|e| supports(g, f, e)))
}

/// Maximal independent sets of `g` containing `f`, up to `limit` of them,
/// by Bron–Kerbosch on the complement of `G − N[F]`.
pub fn maximal_independent_extensions(g: &Graph, f: &VertexSet, limit: usize) -> Result<Vec<VertexSet>> {
    check_independent(g, f)?;
    let mut blocked = f.clone();
    for v in f.iter() {
        blocked.union_with(g.adj(v));
    }
    let mut out = Vec::new();
    let p = blocked.complement();
    bron_kerbosch(g, f.clone(), p, g.empty_set(), limit, &mut out);
    Ok(out)
}

fn bron_kerbosch(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, limit: usize, out: &mut Vec<VertexSet>) {
    if out.len() >= limit {
        return;
    }
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    while let Some(v) = p.first() {
        let mut r2 = r.clone();
        r2.insert(v);
        // non-neighbours of v stay candidates
        let mut p2 = p.difference(g.adj(v));
        p2.remove(v);
        let mut x2 = x.difference(g.adj(v));
        x2.remove(v);
        bron_kerbosch(g, r2, p2, x2, limit, out);
        if out.len() >= limit {
            return;
        }
        p.remove(v);
        x.insert(v);
    }
}

/// Every vertex lies in a free independent set, i.e. `G − N[v]` has an
/// edge for every `v`.
pub fn is_free_graph(g: &Graph) -> bool {
    (0..g.order()).all(|v| {
        let rest = g.adj(v).union(&VertexSet::singleton(g.order(), v)).complement();
        rest.iter().any(|x| !g.adj(x).is_disjoint(&rest))
    })
}

/// The weaker vertex test: `G − N[v]` is non-empty for every `v`. It can
/// accept graphs that are not free, such as the path on four vertices.
pub fn has_nonempty_remainders(g: &Graph) -> bool {
    (0..g.order()).all(|v| g.adj(v).len() + 1 < g.order())
}

/// ᾱ(G): the largest non-empty free independent set, or 0 if there is none.
/// A set is free exactly when it is independent in some `G − (N(u) ∪ N(v))`.
pub fn max_free_size(g: &Graph, budget: &mut Budget) -> Result<(usize, VertexSet)> {
    budget.check_order(g.order())?;
    let mut best = (0, g.empty_set());
    for e in g.edges() {
        let keep = g.adj(e.u).union(g.adj(e.v)).complement();
        if keep.len() <= best.0 {
            continue;
        }
        let (sub, map) = g.induced(&keep);
        let s = sub.max_independent_set(budget)?;
        if s.len() > best.0 {
            best = (s.len(), VertexSet::from_vertices(g.order(), s.iter().map(|x| map[x])));
        }
    }
    Ok(best)
}

/// State of one class during partition search.
#[derive(Clone)]
struct Class {
    members: VertexSet,
    /// union of the members' neighbourhoods
    nbrs: VertexSet,
    /// indices of edges that still support the class
    alive: VertexSet,
}

struct PartitionSearch<'a> {
    g: &'a Graph,
    edges: Vec<Edge>,
    /// edges touching N[x], by vertex x
    kill: Vec<VertexSet>,
    /// most classes allowed
    t: usize,
    /// most classes allowed to lose all support
    a: usize,
    b: Option<usize>,
}

impl<'a> PartitionSearch<'a> {
    fn new(g: &'a Graph, t: usize, a: usize, b: Option<usize>) -> Self {
        let edges: Vec<Edge> = g.edges().collect();
        let m = edges.len();
        let kill = (0..g.order())
            .map(|x| {
                let mut closed = g.adj(x).clone();
                closed.insert(x);
                VertexSet::from_vertices(
                    m,
                    edges
                        .iter()
                        .enumerate()
                        .filter(|(_, e)| closed.contains(e.u) || closed.contains(e.v))
                        .map(|(i, _)| i),
                )
            })
            .collect();
        PartitionSearch {
            g,
            edges,
            kill,
            t,
            a,
            b,
        }
    }

    /// Vertices are placed in index order; a new class may only be opened
    /// by the next vertex, so classes are ordered by their least member.
    fn run(&self, budget: &mut Budget) -> Result<Option<FreeColoring>> {
        let mut classes = Vec::new();
        self.place(0, &mut classes, budget)
    }

    fn place(&self, v: usize, classes: &mut Vec<Class>, budget: &mut Budget) -> Result<Option<FreeColoring>> {
        if v == self.g.order() {
            return self.finish(classes, budget);
        }
        let n = self.g.order();
        for i in 0..=classes.len() {
            if i == classes.len() {
                if classes.len() == self.t {
                    break;
                }
                classes.push(Class {
                    members: VertexSet::new(n),
                    nbrs: VertexSet::new(n),
                    alive: VertexSet::full(self.edges.len()),
                });
            } else if classes[i].nbrs.contains(v) {
                continue;
            }
            budget.tick()?;
            let saved = classes[i].clone();
            let c = &mut classes[i];
            c.members.insert(v);
            c.nbrs.union_with(self.g.adj(v));
            c.alive.difference_with(&self.kill[v]);
            let unsupported = classes.iter().filter(|c| c.alive.is_empty()).count();
            if unsupported <= self.a {
                if let Some(found) = self.place(v + 1, classes, budget)? {
                    return Ok(Some(found));
                }
            }
            if saved.members.is_empty() {
                classes.pop();
            } else {
                classes[i] = saved;
            }
        }
        Ok(None)
    }

    fn finish(&self, classes: &[Class], budget: &mut Budget) -> Result<Option<FreeColoring>> {
        let t = classes.len();
        let need = t.saturating_sub(self.a);
        let chosen = match self.b {
            None => {
                let supported: Vec<(usize, usize)> = (0..t)
                    .filter_map(|i| classes[i].alive.first().map(|e| (i, e)))
                    .collect();
                if supported.len() < need {
                    return Ok(None);
                }
                supported
            }
            Some(b) => {
                let mut order: Vec<usize> = (0..t).filter(|&i| !classes[i].alive.is_empty()).collect();
                order.sort_by_key(|&i| (classes[i].alive.len(), i));
                let mut incidence = vec![0usize; self.g.order()];
                let mut picked = Vec::new();
                if !self.pick(classes, &order, 0, need, b, &mut incidence, &mut picked, budget)? {
                    return Ok(None);
                }
                picked.sort_unstable();
                picked
            }
        };
        let designated: Vec<usize> = chosen.iter().map(|&(i, _)| i).collect();
        let mut out_classes: Vec<VertexSet> = designated.iter().map(|&i| classes[i].members.clone()).collect();
        out_classes.extend(
            (0..t)
                .filter(|i| !designated.contains(i))
                .map(|i| classes[i].members.clone()),
        );
        Ok(Some(FreeColoring {
            classes: out_classes,
            a: self.a,
            b: self.b,
            support: chosen.iter().map(|&(_, e)| self.edges[e]).collect(),
        }))
    }

    /// Chooses support edges for `need` of the classes in `order` (each
    /// class at most once) keeping every vertex within `b` incidences.
    #[allow(clippy::too_many_arguments)]
    fn pick(
        &self,
        classes: &[Class],
        order: &[usize],
        pos: usize,
        need: usize,
        b: usize,
        incidence: &mut [usize],
        picked: &mut Vec<(usize, usize)>,
        budget: &mut Budget,
    ) -> Result<bool> {
        if picked.len() == need {
            return Ok(true);
        }
        if order.len() - pos < need - picked.len() {
            return Ok(false);
        }
        let i = order[pos];
        for ei in classes[i].alive.iter() {
            let e = self.edges[ei];
            if incidence[e.u] == b || incidence[e.v] == b {
                continue;
            }
            budget.tick()?;
            incidence[e.u] += 1;
            incidence[e.v] += 1;
            picked.push((i, ei));
            if self.pick(classes, order, pos + 1, need, b, incidence, picked, budget)? {
                return Ok(true);
            }
            picked.pop();
            incidence[e.u] -= 1;
            incidence[e.v] -= 1;
        }
        self.pick(classes, order, pos + 1, need, b, incidence, picked, budget)
    }
}

/// φ(G) with a witness, or `∞` when `G` is not free.
///
/// Iterative deepening over `t` from χ(G); each level is an exhaustive
/// canonical partition search in which every class keeps a support edge.
pub fn free_chromatic_number(g: &Graph, budget: &mut Budget) -> Result<(FreeNumber, Option<FreeColoring>)> {
    budget.check_order(g.order())?;
    if !is_free_graph(g) {
        return Ok((FreeNumber::Infinite, None));
    }
    let (chi, _) = chromatic_number(g, budget)?;
    for t in chi..=g.order() {
        if let Some(fc) = PartitionSearch::new(g, t, 0, None).run(budget)? {
            debug_assert!(fc.validate(g).is_ok());
            return Ok((FreeNumber::Finite(fc.len()), Some(fc)));
        }
    }
    Err(Error::Counterexample(
        "free graph without a free colouring into singletons".into(),
    ))
}

/// φ^a_b(G) with a witness.
///
/// For each `t` from χ(G) to `|V(G)|`, searches canonical partitions into at
/// most `t` independent classes, pruning once more than `a` classes have
/// lost every support edge, then looks for support edges for all but `a`
/// classes within the incidence cap `b`.
pub fn ab_free_chromatic_number(
    g: &Graph,
    a: usize,
    b: usize,
    budget: &mut Budget,
) -> Result<(FreeNumber, Option<FreeColoring>)> {
    if b == 0 {
        return Err(Error::Precondition("b must be at least 1".into()));
    }
    budget.check_order(g.order())?;
    let (chi, coloring) = chromatic_number(g, budget)?;
    if a >= chi {
        let fc = FreeColoring {
            classes: coloring.classes().into_iter().filter(|c| !c.is_empty()).collect(),
            a,
            b: Some(b),
            support: Vec::new(),
        };
        return Ok((FreeNumber::Finite(fc.len()), Some(fc)));
    }
    for t in chi..=g.order() {
        if let Some(fc) = PartitionSearch::new(g, t, a, Some(b)).run(budget)? {
            debug_assert!(fc.validate(g).is_ok());
            return Ok((FreeNumber::Finite(fc.len()), Some(fc)));
        }
    }
    Ok((FreeNumber::Infinite, None))
}

fn counterexample<T>(what: &str, err: Error) -> Result<T> {
    Err(Error::Counterexample(format!("{what}: {err}")))
}

fn finish_construction(g: &Graph, fc: FreeColoring, what: &str) -> Result<FreeColoring> {
    match fc.validate(g) {
        Ok(()) => Ok(fc),
        Err(e) => counterexample(what, e),
    }
}

/// Least support edge of each class, in class order.
fn least_supports(g: &Graph, classes: &[VertexSet], what: &str) -> Result<Vec<Edge>> {
    classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            g.edges()
                .find(|&e| supports(g, c, e))
                .ok_or_else(|| Error::Counterexample(format!("{what}: class {i} is not free")))
        })
        .collect()
}

/// Block colouring from a homomorphism `c: G → K_{n/d}`, `d ≥ 2`.
///
/// With `n = k(d−1) + s`, class `i` is `c⁻¹` of the block
/// `{(i−1)(d−1)+1, …, i(d−1)}` (the last block runs to `n ≡ 0`), and its
/// support edge is the least edge mapped onto `{(i−1)(d−1), (i−1)(d−1)+d}`.
/// Classes whose block is unused are dropped. The result is a `(0, 2)`-free
/// colouring with at most `⌈n/(d−1)⌉` classes.
pub fn free_coloring_from_circular(g: &Graph, witness: &HomWitness, n: usize, d: usize) -> Result<FreeColoring> {
    if d < 2 || n < 2 * d {
        return Err(Error::Precondition(format!("need d >= 2 and n >= 2d, got ({n},{d})")));
    }
    let target = crate::families::circular_complete(n, d)?;
    if !witness.validate(g, &target) {
        return Err(Error::Precondition(format!(
            "witness is not a homomorphism to K_{n}/{d}"
        )));
    }
    let blocks = n.div_ceil(d - 1);
    let mut classes = Vec::new();
    let mut support = Vec::new();
    for i in 0..blocks {
        let lo = i * (d - 1) + 1;
        let hi = ((i + 1) * (d - 1)).min(n);
        let class = VertexSet::from_vertices(
            g.order(),
            (0..g.order()).filter(|&v| {
                let c = if witness.mapping[v] == 0 { n } else { witness.mapping[v] };
                (lo..=hi).contains(&c)
            }),
        );
        if class.is_empty() {
            continue;
        }
        let (x, y) = ((i * (d - 1)) % n, (i * (d - 1) + d) % n);
        let pair = |e: &Edge| {
            let (cu, cv) = (witness.mapping[e.u], witness.mapping[e.v]);
            (cu == x && cv == y) || (cu == y && cv == x)
        };
        let Some(e) = g.edges().find(pair) else {
            return Err(Error::Counterexample(format!(
                "no edge maps onto {{{x},{y}}}; the witness is not at the exact circular chromatic number"
            )));
        };
        classes.push(class);
        support.push(e);
    }
    finish_construction(
        g,
        FreeColoring {
            classes,
            a: 0,
            b: Some(2),
            support,
        },
        "circular block colouring",
    )
}

/// Colouring through an edge `uv` of least span: an optimal colouring of
/// `G − (N(u) ∪ N(v))`, all supported by `uv`, plus a singleton class for
/// each vertex of `N(u) ∪ N(v)`. At most `χ(G) + d(G)` classes.
pub fn free_coloring_via_edge(g: &Graph, budget: &mut Budget) -> Result<FreeColoring> {
    if !is_free_graph(g) || g.size() == 0 {
        return Err(Error::Precondition("graph is not free".into()));
    }
    let (_, e) = g.min_edge_span()?;
    let near = g.adj(e.u).union(g.adj(e.v));
    let (rest, map) = g.induced(&near.complement());
    let (_, coloring) = chromatic_number(&rest, budget)?;
    let mut classes: Vec<VertexSet> = lift_classes(g.order(), &coloring, &map);
    let mut support = vec![e; classes.len()];
    let singles: Vec<VertexSet> = near.iter().map(|v| VertexSet::singleton(g.order(), v)).collect();
    support.extend(least_supports(g, &singles, "edge construction")?);
    classes.extend(singles);
    finish_construction(
        g,
        FreeColoring {
            classes,
            a: 0,
            b: None,
            support,
        },
        "edge construction",
    )
}

fn lift_classes(order: usize, coloring: &Coloring, map: &[usize]) -> Vec<VertexSet> {
    coloring
        .classes()
        .into_iter()
        .filter(|c| !c.is_empty())
        .map(|c| VertexSet::from_vertices(order, c.iter().map(|x| map[x])))
        .collect()
}

/// Which girth construction to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GirthVariant {
    /// Four special classes; needs girth ≥ 5 or a tree of diameter > 4.
    Four,
    /// Two special classes; needs girth ≥ 7.
    Two,
}

/// The girth-based free colourings.
///
/// Tree: along a longest path `u_1 … u_d`, the classes are a 2-colouring of
/// `G − N[u_{d−1}]`, `{u_{d−1}}` and `N(u_{d−1})`. Otherwise, with `u_1u_2`
/// an edge of a shortest cycle: `{u_1}`, `{u_2}`, `N(u_1) − u_2`,
/// `N(u_2) − u_1` and an optimal colouring of the rest. The two-class
/// variant uses `N(u_1)`, `N(u_2)` and an optimal colouring of the rest.
pub fn free_coloring_girth(g: &Graph, variant: GirthVariant, budget: &mut Budget) -> Result<FreeColoring> {
    if !is_free_graph(g) || g.size() == 0 {
        return Err(Error::Precondition("graph is not free".into()));
    }
    let n = g.order();
    let mut special: Vec<VertexSet> = Vec::new();
    match (g.girth(), variant) {
        (Girth::Infinite, GirthVariant::Four) => {
            if !g.is_connected() {
                return Err(Error::Precondition("tree construction needs a connected graph".into()));
            }
            let path = longest_path(g);
            if path.len() < 6 {
                return Err(Error::Precondition(format!("tree of diameter {} <= 4", path.len() - 1)));
            }
            let x = path[path.len() - 2];
            special.push(VertexSet::singleton(n, x));
            special.push(g.adj(x).clone());
        }
        (Girth::Infinite, GirthVariant::Two) => {
            return Err(Error::Precondition("two-class construction needs a cycle".into()));
        }
        (Girth::Finite(girth), GirthVariant::Four) if girth >= 5 => {
            let cyc = g.shortest_cycle().expect("finite girth");
            let (u1, u2) = (cyc[0], cyc[1]);
            let mut n1 = g.adj(u1).clone();
            n1.remove(u2);
            let mut n2 = g.adj(u2).clone();
            n2.remove(u1);
            special.extend([VertexSet::singleton(n, u1), VertexSet::singleton(n, u2), n1, n2]);
        }
        (Girth::Finite(girth), GirthVariant::Two) if girth >= 7 => {
            let cyc = g.shortest_cycle().expect("finite girth");
            special.extend([g.adj(cyc[0]).clone(), g.adj(cyc[1]).clone()]);
        }
        (girth, _) => {
            return Err(Error::Precondition(format!("girth {girth} too small for {variant:?}")));
        }
    }
    let mut used = g.empty_set();
    for s in &special {
        used.union_with(s);
    }
    let (rest, map) = g.induced(&used.complement());
    let coloring = match variant {
        GirthVariant::Four if g.girth() == Girth::Infinite => k_colorable(&rest, 2, budget)?
            .ok_or_else(|| Error::Counterexample("forest remainder is not bipartite".into()))?,
        _ => chromatic_number(&rest, budget)?.1,
    };
    let mut classes = lift_classes(n, &coloring, &map);
    classes.extend(special.into_iter().filter(|s| !s.is_empty()));
    let support = least_supports(g, &classes, "girth construction")?;
    finish_construction(
        g,
        FreeColoring {
            classes,
            a: 0,
            b: None,
            support,
        },
        "girth construction",
    )
}

/// A longest path of a tree: farthest vertex from 0, then farthest from it.
fn longest_path(g: &Graph) -> Vec<usize> {
    let bfs = |s: usize| {
        let mut parent = vec![usize::MAX; g.order()];
        let mut order = vec![s];
        parent[s] = s;
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for w in g.adj(v).iter() {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    order.push(w);
                }
            }
        }
        (*order.last().unwrap(), parent)
    };
    let (a, _) = bfs(0);
    let (b, parent) = bfs(a);
    let mut path = vec![b];
    let mut v = b;
    while v != a {
        v = parent[v];
        path.push(v);
    }
    path.reverse();
    path
}

/// Result of pushing a free colouring of `M(H)` down to `H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pushdown {
    pub coloring: FreeColoring,
    /// Designated classes that lost their support because their edge
    /// touched the root.
    pub demoted: usize,
}

/// Restricts an `(a, b)`-free colouring of `M(H)` to `H`.
///
/// Classes become `U_i = V_i ∩ V(H)` (empties dropped). Support edges
/// avoiding the root are kept, with a twin endpoint `v'` replaced by `v`;
/// classes whose edge touches the root lose their designation. The result
/// is an `(a + b, 2b)`-free colouring of `H`.
pub fn mycielski_pushdown(mg: &MycielskiGraph, fc: &FreeColoring) -> Result<Pushdown> {
    let Some(z) = mg.root() else {
        return Err(Error::Precondition("need a Mycielskian of level >= 1".into()));
    };
    let Some(b) = fc.b else {
        return Err(Error::Precondition("pushdown needs a finite cap b".into()));
    };
    fc.validate(mg.graph())
        .map_err(|e| Error::Precondition(format!("input colouring: {e}")))?;
    let parent = mg.parent()?;
    let h = parent.graph();
    let p = mg.parent_order();
    let restrict = |c: &VertexSet| VertexSet::from_vertices(p, c.iter().filter(|&v| v < p));
    let down = |x: usize| mg.twin_source(x).unwrap_or(x);

    let mut kept = Vec::new();
    let mut kept_edges = Vec::new();
    let mut demoted = Vec::new();
    for (c, e) in fc.classes.iter().zip(&fc.support) {
        let u = restrict(c);
        if u.is_empty() {
            continue;
        }
        if e.touches(z) {
            demoted.push(u);
        } else {
            kept.push(u);
            kept_edges.push(Edge::new(down(e.u), down(e.v)));
        }
    }
    let rest: Vec<VertexSet> = fc.classes[fc.support.len()..]
        .iter()
        .map(restrict)
        .filter(|u| !u.is_empty())
        .collect();
    let count = demoted.len();
    let mut classes = kept;
    classes.extend(demoted);
    classes.extend(rest);
    let out = FreeColoring {
        classes,
        a: fc.a + b,
        b: Some(2 * b),
        support: kept_edges,
    };
    let out = finish_construction(h, out, "pushdown")?;
    Ok(Pushdown {
        coloring: out,
        demoted: count,
    })
}

/// Trace of the block-colouring-and-pushdown pipeline on `M^t(G)`.
#[derive(Debug, Clone, Serialize)]
pub struct PipelineTrace {
    /// χ_c(M^t(G)) as `(n, d)`.
    pub circular: (usize, usize),
    /// Colourings of `M^t(G)`, `M^{t−1}(G)`, …, `G`; each validated.
    pub stages: Vec<FreeColoring>,
    /// Classes of the final colouring without a support edge.
    pub p: usize,
    /// `2^t + 3`.
    pub bound: usize,
}

/// Runs the pipeline behind the bound `φ^{2^t+3}_{2^{t+1}}(G) ≤ 2χ(M^t(G)) − 1`.
///
/// Computes χ_c(M^t(G)) = n/d, which must have `d ≥ 2`; takes a
/// root-pinned, twin-respecting homomorphism to `K_{n/d}`; builds the block
/// colouring and pushes it down `t` times. The final colouring is
/// revalidated as a `(p, 2^{t+1})`-free colouring where `p` counts its
/// unsupported classes, and `p ≤ 2^t + 3` is checked.
pub fn mmm2_pipeline(mg: &MycielskiGraph, budget: &mut Budget) -> Result<PipelineTrace> {
    let t = mg.level();
    if t == 0 {
        return Err(Error::Precondition("need t >= 1".into()));
    }
    let cc = circular_chromatic_number(mg.graph(), budget)?;
    let (n, d) = (cc.value.numer() as usize, cc.value.denom() as usize);
    if d < 2 {
        return Err(Error::Precondition(format!(
            "circular chromatic number {} equals the chromatic number",
            cc.value
        )));
    }
    let c = constrained_mycielski_hom(mg, n, d, budget)?
        .ok_or_else(|| Error::Counterexample(format!("no constrained homomorphism to K_{n}/{d}")))?;
    let mut fc = free_coloring_from_circular(mg.graph(), &c, n, d)?;
    let mut stages = vec![fc.clone()];
    let mut level = mg.clone();
    for _ in 0..t {
        fc = mycielski_pushdown(&level, &fc)?.coloring;
        level = level.parent()?;
        stages.push(fc.clone());
    }
    let p = fc.undesignated();
    fc.a = p;
    fc.b = Some(1 << (t + 1));
    let fc = finish_construction(level.graph(), fc, "pipeline result")?;
    *stages.last_mut().unwrap() = fc;
    let bound = (1 << t) + 3;
    if p > bound {
        return Err(Error::Counterexample(format!("p = {p} exceeds 2^t + 3 = {bound}")));
    }
    Ok(PipelineTrace {
        circular: (n, d),
        stages,
        p,
        bound,
    })
}
