use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use super::{Edge, Graph, VertexSet};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Length of a shortest cycle, or `Infinite` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

impl Graph {
    /// Shortest path from `from` to `to` avoiding the edge `skip`, by BFS
    /// with ascending neighbour order.
    fn path_avoiding(&self, from: usize, to: usize, skip: Edge) -> Option<Vec<usize>> {
        let n = self.order();
        let mut parent = vec![usize::MAX; n];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for y in self.adj(x).iter() {
                if Edge::new(x, y) == skip || parent[y] != usize::MAX {
                    continue;
                }
                parent[y] = x;
                queue.push_back(y);
            }
        }
        None
    }

    /// A shortest cycle as a vertex sequence (consecutive vertices adjacent,
    /// last adjacent to first). The first edge in lexicographic order that
    /// lies on a shortest cycle is used, so the result is deterministic.
    /// A shortest cycle is always induced.
    pub fn shortest_cycle(&self) -> Option<Vec<usize>> {
        let mut best: Option<Vec<usize>> = None;
        for e in self.edges() {
            if let Some(p) = self.path_avoiding(e.u, e.v, e) {
                if best.as_ref().is_none_or(|b| p.len() < b.len()) {
                    best = Some(p);
                    if best.as_ref().unwrap().len() == 3 {
                        break;
                    }
                }
            }
        }
        best
    }

    pub fn girth(&self) -> Girth {
        match self.shortest_cycle() {
            Some(c) => Girth::Finite(c.len()),
            None => Girth::Infinite,
        }
    }

    /// Acyclicity via edge/component counting, independent of the BFS girth.
    pub fn is_forest(&self) -> bool {
        let n = self.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in self.edges() {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    /// d(e) = |N(u) ∪ N(v)|, which includes u and v themselves.
    pub fn edge_span(&self, e: Edge) -> Result<usize> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::Precondition(format!("{e} is not an edge")));
        }
        Ok(self.adj(e.u).union(self.adj(e.v)).len())
    }

    /// d(G): the minimum edge span and the first edge attaining it.
    pub fn min_edge_span(&self) -> Result<(usize, Edge)> {
        self.edges()
            .map(|e| (self.adj(e.u).union(self.adj(e.v)).len(), e))
            .min_by_key(|&(d, e)| (d, e))
            .ok_or_else(|| Error::Precondition("graph has no edges".into()))
    }

    /// Maximum clique by branch and bound with a greedy colouring bound.
    pub fn max_clique(&self, budget: &mut Budget) -> Result<VertexSet> {
        budget.check_order(self.order())?;
        max_clique(self, budget)
    }

    pub fn clique_number(&self, budget: &mut Budget) -> Result<usize> {
        Ok(self.max_clique(budget)?.len())
    }

    /// Maximum independent set, as a maximum clique of the complement.
    pub fn max_independent_set(&self, budget: &mut Budget) -> Result<VertexSet> {
        budget.check_order(self.order())?;
        max_clique(&self.complement(), budget)
    }

    pub fn independence_number(&self, budget: &mut Budget) -> Result<usize> {
        Ok(self.max_independent_set(budget)?.len())
    }
}

fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    rank: Vec<usize>,
    best: Vec<usize>,
}

fn max_clique(g: &Graph, budget: &mut Budget) -> Result<VertexSet> {
    let order = degree_order(g);
    let mut rank = vec![0; g.order()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }

    // Greedy lower bound: grow a clique along the degree order.
    let mut greedy = Vec::new();
    let mut cand = g.vertex_set();
    for &v in &order {
        if cand.contains(v) {
            greedy.push(v);
            cand.intersect_with(g.adj(v));
        }
    }

    let mut s = CliqueSearch { g, rank, best: greedy };
    let mut current = Vec::new();
    s.expand(&mut current, g.vertex_set(), budget)?;
    Ok(VertexSet::from_vertices(g.order(), s.best))
}

impl CliqueSearch<'_> {
    /// Greedy sequential colouring of `cand` in degree order; returns the
    /// vertices sorted by colour with each colour number (1-based).
    fn color_sort(&self, cand: &VertexSet) -> Vec<(usize, usize)> {
        let mut verts: Vec<usize> = cand.iter().collect();
        verts.sort_by_key(|&v| self.rank[v]);
        let mut classes: Vec<VertexSet> = Vec::new();
        let mut out = Vec::with_capacity(verts.len());
        for v in verts {
            let k = classes
                .iter()
                .position(|c| c.is_disjoint(self.g.adj(v)))
                .unwrap_or_else(|| {
                    classes.push(VertexSet::new(self.g.order()));
                    classes.len() - 1
                });
            classes[k].insert(v);
        }
        for (k, c) in classes.iter().enumerate() {
            let mut members: Vec<usize> = c.iter().collect();
            members.sort_by_key(|&v| self.rank[v]);
            out.extend(members.into_iter().map(|v| (v, k + 1)));
        }
        out
    }

    fn expand(&mut self, current: &mut Vec<usize>, mut cand: VertexSet, budget: &mut Budget) -> Result<()> {
        let colored = self.color_sort(&cand);
        for &(v, color) in colored.iter().rev() {
            if current.len() + color <= self.best.len() {
                return Ok(());
            }
            budget.tick()?;
            current.push(v);
            let next = cand.intersection(self.g.adj(v));
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next, budget)?;
            }
            current.pop();
            cand.remove(v);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, kneser, path};

    fn brute_alpha(g: &Graph) -> usize {
        let n = g.order();
        (0u64..1 << n)
            .filter(|mask| {
                let s = VertexSet::from_vertices(n, (0..n).filter(|i| mask >> i & 1 == 1));
                g.is_independent(&s)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn girth_examples() {
        assert_eq!(cycle(5).unwrap().girth(), Girth::Finite(5));
        assert_eq!(path(4).unwrap().girth(), Girth::Infinite);
        assert_eq!(complete(4).unwrap().girth(), Girth::Finite(3));
        assert_eq!(kneser(5, 2).unwrap().girth(), Girth::Finite(5));
    }

    #[test]
    fn shortest_cycle_is_a_cycle() {
        let p = kneser(5, 2).unwrap();
        let c = p.shortest_cycle().unwrap();
        assert_eq!(c.len(), 5);
        for i in 0..c.len() {
            assert!(p.has_edge(c[i], c[(i + 1) % c.len()]));
        }
    }

    #[test]
    fn edge_spans() {
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.edge_span(Edge::new(0, 1)).unwrap(), 4);
        assert_eq!(c5.min_edge_span().unwrap(), (4, Edge::new(0, 1)));
        let k5 = complete(5).unwrap();
        assert_eq!(k5.min_edge_span().unwrap().0, 5);
        assert!(c5.edge_span(Edge::new(0, 2)).is_err());
        assert!(Graph::empty(3).unwrap().min_edge_span().is_err());
    }

    #[test]
    fn alpha_and_omega() {
        let mut b = Budget::default();
        assert_eq!(cycle(5).unwrap().independence_number(&mut b).unwrap(), 2);
        let pet = kneser(5, 2).unwrap();
        assert_eq!(pet.independence_number(&mut b).unwrap(), 4);
        assert_eq!(pet.clique_number(&mut b).unwrap(), 2);
        assert_eq!(complete(5).unwrap().clique_number(&mut b).unwrap(), 5);
        assert_eq!(Graph::empty(0).unwrap().clique_number(&mut b).unwrap(), 0);
        assert_eq!(Graph::empty(3).unwrap().clique_number(&mut b).unwrap(), 1);
    }

    #[test]
    fn alpha_matches_brute_force() {
        let mut b = Budget::default();
        for g in [
            cycle(7).unwrap(),
            kneser(5, 2).unwrap(),
            path(6).unwrap(),
            kneser(6, 2).unwrap(),
        ] {
            let mis = g.max_independent_set(&mut b).unwrap();
            assert!(g.is_independent(&mis));
            assert_eq!(mis.len(), brute_alpha(&g));
        }
    }

    #[test]
    fn budget_exhaustion_reported() {
        let mut b = Budget::new(1);
        let r = kneser(6, 2).unwrap().independence_number(&mut b);
        assert!(matches!(r, Err(Error::Exhausted { .. })));
    }

    #[test]
    fn search_guard() {
        let mut b = Budget::default().with_vertex_limit(4);
        assert!(matches!(
            cycle(5).unwrap().clique_number(&mut b),
            Err(Error::SizeGuard { .. })
        ));
    }
}
