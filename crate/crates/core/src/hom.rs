//! Backtracking search for graph homomorphisms.
//!
//! One engine serves every caller: plain existence, onto-edge
//! homomorphisms, circular colourings (target `K_{n/d}` with the first
//! branched vertex pinned to 0), proper `k`-colourings (with colour
//! symmetry breaking), and the constrained Mycielski colourings where a
//! root is fixed and twins must copy far-from-zero colours.
//!
//! Candidate images live in per-vertex bitsets and are filtered by forward
//! checking after each assignment. The next vertex is the one with the
//! fewest remaining candidates, ties broken by larger degree and then by
//! smaller index; values are tried in ascending order. The search is fully
//! deterministic.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::families::{circular_complete, MycielskiGraph};
use crate::graph::{Edge, Graph};

/// A vertex map `V(G) → V(H)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomWitness {
    pub mapping: Vec<usize>,
}

impl HomWitness {
    pub fn new(mapping: Vec<usize>) -> Self {
        HomWitness { mapping }
    }

    /// Re-checks from scratch that every edge of `g` lands on an edge of `h`.
    pub fn validate(&self, g: &Graph, h: &Graph) -> bool {
        self.mapping.len() == g.order()
            && self.mapping.iter().all(|&x| x < h.order())
            && g.edges().all(|e| h.has_edge(self.mapping[e.u], self.mapping[e.v]))
    }

    /// `other ∘ self`.
    pub fn compose(&self, other: &HomWitness) -> HomWitness {
        HomWitness::new(self.mapping.iter().map(|&x| other.mapping[x]).collect())
    }

    /// Image of the edge set of `g`.
    pub fn edge_image(&self, g: &Graph) -> Vec<Edge> {
        let mut img: Vec<Edge> = g
            .edges()
            .filter(|e| self.mapping[e.u] != self.mapping[e.v])
            .map(|e| Edge::new(self.mapping[e.u], self.mapping[e.v]))
            .collect();
        img.sort_unstable();
        img.dedup();
        img
    }

    pub fn is_onto_edges(&self, g: &Graph, h: &Graph) -> bool {
        self.edge_image(g).len() == h.size()
    }
}

/// Circular distance between colours `a` and `b` in `Z_n`.
pub fn circular_distance(a: usize, b: usize, n: usize) -> usize {
    let d = a.abs_diff(b) % n;
    d.min(n - d)
}

/// If `v` receives a colour outside `exempt`, then `twin` must receive the
/// same colour.
#[derive(Debug, Clone)]
struct TwinRule {
    v: usize,
    twin: usize,
    exempt: Vec<u64>,
}

#[derive(Debug, Clone, Default)]
struct Options {
    pin_first: Option<usize>,
    pins: Vec<(usize, usize)>,
    color_symmetry: bool,
    onto_edge: bool,
    twins: Vec<TwinRule>,
}

struct Engine<'a> {
    g: &'a Graph,
    h: &'a Graph,
    words: usize,
    opts: Options,
    /// twin rules indexed by vertex: (rule index, is the `v` side)
    rules_at: Vec<Vec<(usize, bool)>>,
    h_edges: Vec<Edge>,
}

#[inline]
fn bit(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
fn popcount(words: &[u64]) -> u32 {
    words.iter().map(|w| w.count_ones()).sum()
}

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, h: &'a Graph, opts: Options) -> Self {
        let words = h.order().div_ceil(64).max(1);
        let mut rules_at = vec![Vec::new(); g.order()];
        for (i, r) in opts.twins.iter().enumerate() {
            rules_at[r.v].push((i, true));
            rules_at[r.twin].push((i, false));
        }
        Engine {
            g,
            h,
            words,
            opts,
            rules_at,
            h_edges: h.edges().collect(),
        }
    }

    fn dom<'d>(&self, doms: &'d [u64], v: usize) -> &'d [u64] {
        &doms[v * self.words..(v + 1) * self.words]
    }

    fn run(&self, budget: &mut Budget) -> Result<Option<HomWitness>> {
        let n = self.g.order();
        if n == 0 {
            return Ok(if self.opts.onto_edge && self.h.size() > 0 {
                None
            } else {
                Some(HomWitness::new(Vec::new()))
            });
        }
        if self.h.order() == 0 {
            return Ok(None);
        }
        if self.opts.onto_edge && self.g.size() < self.h.size() {
            return Ok(None);
        }
        let w = self.words;
        let mut doms = vec![0u64; n * w];
        let full = self.h.vertex_set();
        for v in 0..n {
            doms[v * w..(v + 1) * w].copy_from_slice(full.words());
            // a vertex with a neighbour can only go to a non-isolated target
            if self.g.degree(v) > 0 {
                for x in 0..self.h.order() {
                    if self.h.degree(x) == 0 {
                        doms[v * w + x / 64] &= !(1 << (x % 64));
                    }
                }
            }
        }
        for &(v, x) in &self.opts.pins {
            for (i, word) in doms[v * w..(v + 1) * w].iter_mut().enumerate() {
                *word = if i == x / 64 { 1 << (x % 64) } else { 0 };
            }
        }
        let mut assignment = vec![usize::MAX; n];
        let found = self.extend(&mut doms, &mut assignment, 0, None, budget)?;
        Ok(found.then(|| HomWitness::new(assignment)))
    }

    fn select(&self, doms: &[u64], assignment: &[usize]) -> Option<usize> {
        (0..self.g.order())
            .filter(|&v| assignment[v] == usize::MAX)
            .min_by_key(|&v| (popcount(self.dom(doms, v)), std::cmp::Reverse(self.g.degree(v)), v))
    }

    /// Upper bound check for onto-edge searches: the target edges not yet
    /// covered must be coverable by source edges that still have an
    /// unassigned endpoint.
    fn onto_feasible(&self, assignment: &[usize]) -> bool {
        let mut covered = vec![false; self.h_edges.len()];
        let mut open = 0usize;
        for e in self.g.edges() {
            let (a, b) = (assignment[e.u], assignment[e.v]);
            if a == usize::MAX || b == usize::MAX {
                open += 1;
            } else if let Ok(i) = self.h_edges.binary_search(&Edge::new(a, b)) {
                covered[i] = true;
            }
        }
        covered.iter().filter(|&&c| !c).count() <= open
    }

    fn extend(
        &self,
        doms: &mut Vec<u64>,
        assignment: &mut Vec<usize>,
        depth: usize,
        max_used: Option<usize>,
        budget: &mut Budget,
    ) -> Result<bool> {
        let Some(v) = self.select(doms, assignment) else {
            return Ok(!self.opts.onto_edge || HomWitness::new(assignment.clone()).is_onto_edges(self.g, self.h));
        };
        let w = self.words;
        let mut candidates: Vec<usize> = (0..self.h.order()).filter(|&x| bit(self.dom(doms, v), x)).collect();
        if depth == 0 {
            if let Some(x) = self.opts.pin_first {
                candidates.retain(|&c| c == x);
            }
        }
        if self.opts.color_symmetry {
            let cap = max_used.map_or(0, |m| m + 1);
            candidates.retain(|&c| c <= cap);
        }
        for x in candidates {
            budget.tick()?;
            let mut next = doms.clone();
            next[v * w..(v + 1) * w].iter_mut().enumerate().for_each(|(i, word)| {
                *word = if i == x / 64 { 1 << (x % 64) } else { 0 };
            });
            assignment[v] = x;
            if self.propagate(&mut next, assignment, v, x) && (!self.opts.onto_edge || self.onto_feasible(assignment)) {
                let used = Some(max_used.map_or(x, |m| m.max(x)));
                if self.extend(&mut next, assignment, depth + 1, used, budget)? {
                    *doms = next;
                    return Ok(true);
                }
            }
            assignment[v] = usize::MAX;
        }
        Ok(false)
    }

    /// Forward checking after `v := x`. Returns false on a wipe-out.
    fn propagate(&self, doms: &mut [u64], assignment: &[usize], v: usize, x: usize) -> bool {
        let w = self.words;
        let image_nbrs = self.h.adj(x).words();
        for u in self.g.adj(v).iter() {
            if assignment[u] != usize::MAX {
                if !self.h.has_edge(x, assignment[u]) {
                    return false;
                }
                continue;
            }
            let d = &mut doms[u * w..(u + 1) * w];
            let mut any = 0;
            for (a, b) in d.iter_mut().zip(image_nbrs) {
                *a &= b;
                any |= *a;
            }
            if any == 0 {
                return false;
            }
        }
        for &(ri, is_v) in &self.rules_at[v] {
            let rule = &self.opts.twins[ri];
            let (other, allowed): (usize, Vec<u64>) = if is_v {
                if bit(&rule.exempt, x) {
                    continue;
                }
                let mut only = vec![0u64; w];
                only[x / 64] = 1 << (x % 64);
                (rule.twin, only)
            } else {
                let mut ok = rule.exempt.clone();
                ok[x / 64] |= 1 << (x % 64);
                (rule.v, ok)
            };
            if assignment[other] != usize::MAX {
                if !bit(&allowed, assignment[other]) {
                    return false;
                }
                continue;
            }
            let d = &mut doms[other * w..(other + 1) * w];
            let mut any = 0;
            for (a, b) in d.iter_mut().zip(&allowed) {
                *a &= b;
                any |= *a;
            }
            if any == 0 {
                return false;
            }
        }
        true
    }
}

fn checked(g: &Graph, h: &Graph, opts: Options, budget: &mut Budget) -> Result<Option<HomWitness>> {
    budget.check_order(g.order())?;
    let witness = Engine::new(g, h, opts).run(budget)?;
    if let Some(w) = &witness {
        debug_assert!(w.validate(g, h));
    }
    Ok(witness)
}

/// Some homomorphism `g → h`, or `None` after exhaustive search.
pub fn exists_hom(g: &Graph, h: &Graph, budget: &mut Budget) -> Result<Option<HomWitness>> {
    checked(g, h, Options::default(), budget)
}

/// A homomorphism whose edge image is all of `E(h)`.
pub fn exists_onto_edge_hom(g: &Graph, h: &Graph, budget: &mut Budget) -> Result<Option<HomWitness>> {
    checked(
        g,
        h,
        Options {
            onto_edge: true,
            ..Options::default()
        },
        budget,
    )
}

/// A proper colouring with at most `k` colours, as a homomorphism to `K_k`.
/// Colour `c` is only tried once colours `0..c` are in use.
pub(crate) fn k_coloring_hom(g: &Graph, k: usize, budget: &mut Budget) -> Result<Option<HomWitness>> {
    if k == 0 {
        return Ok((g.order() == 0).then(|| HomWitness::new(Vec::new())));
    }
    let kk = Graph::from_fn(k, |_, _| true)?;
    checked(
        g,
        &kk,
        Options {
            color_symmetry: true,
            ..Options::default()
        },
        budget,
    )
}

fn check_circular_params(n: usize, d: usize) -> Result<()> {
    if d < 1 || n < 2 * d {
        return Err(Error::Precondition(format!("need n >= 2d >= 2, got ({n},{d})")));
    }
    if n.gcd(&d) != 1 {
        return Err(Error::Precondition(format!("gcd({n},{d}) != 1")));
    }
    Ok(())
}

/// A homomorphism `g → K_{n/d}`. The first branched vertex is pinned to
/// colour 0, which loses nothing since rotations act transitively.
pub fn circular_hom(g: &Graph, n: usize, d: usize, budget: &mut Budget) -> Result<Option<HomWitness>> {
    check_circular_params(n, d)?;
    let target = circular_complete(n, d)?;
    checked(
        g,
        &target,
        Options {
            pin_first: Some(0),
            ..Options::default()
        },
        budget,
    )
}

/// Colours of `Z_n` in `[n−d+1, d−1] (mod n)`, i.e. within distance `d−1`
/// of 0.
fn near_zero(n: usize, d: usize) -> Vec<u64> {
    let mut w = vec![0u64; n.div_ceil(64).max(1)];
    for c in 0..n {
        if circular_distance(c, 0, n) < d {
            w[c / 64] |= 1 << (c % 64);
        }
    }
    w
}

/// A homomorphism `c: M(H) → K_{n/d}` with `c(z) = 0` for the root `z`,
/// and `c(v') = c(v)` whenever `c(v) ∉ [n−d+1, d−1] (mod n)`.
pub fn constrained_mycielski_hom(
    mg: &MycielskiGraph,
    n: usize,
    d: usize,
    budget: &mut Budget,
) -> Result<Option<HomWitness>> {
    if mg.level() < 1 {
        return Err(Error::Precondition("need a Mycielskian of level >= 1".into()));
    }
    if d < 2 {
        return Err(Error::Precondition("twin constraint needs d >= 2".into()));
    }
    check_circular_params(n, d)?;
    let target = circular_complete(n, d)?;
    let z = mg.root().expect("level >= 1");
    let exempt = near_zero(n, d);
    let twins = (0..mg.parent_order())
        .map(|v| TwinRule {
            v,
            twin: mg.twin(v).expect("parent vertex"),
            exempt: exempt.clone(),
        })
        .collect();
    checked(
        mg.graph(),
        &target,
        Options {
            pins: vec![(z, 0)],
            twins,
            ..Options::default()
        },
        budget,
    )
}

/// Independent check of the constrained-Mycielski conditions on a witness.
pub fn validate_constrained(mg: &MycielskiGraph, n: usize, d: usize, w: &HomWitness) -> bool {
    let Ok(target) = circular_complete(n, d) else {
        return false;
    };
    let Some(z) = mg.root() else {
        return false;
    };
    w.validate(mg.graph(), &target)
        && w.mapping[z] == 0
        && (0..mg.parent_order()).all(|v| {
            let cv = w.mapping[v];
            circular_distance(cv, 0, n) < d || w.mapping[mg.twin(v).unwrap()] == cv
        })
}

/// Edges `{i, i+d}` of `K_{n/d}` that are not hit by the witness.
pub fn missing_tight_edges(g: &Graph, w: &HomWitness, n: usize, d: usize) -> Vec<Edge> {
    let image = w.edge_image(g);
    (0..n)
        .map(|i| Edge::new(i, (i + d) % n))
        .filter(|e| image.binary_search(e).is_err())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, iterated_mycielskian, kneser, mycielskian, path};

    fn budget() -> Budget {
        Budget::default()
    }

    /// Exhaustive enumeration of all maps; the oracle for small cases.
    fn brute_hom_exists(g: &Graph, h: &Graph) -> bool {
        let (n, k) = (g.order(), h.order());
        let total = k.pow(n as u32);
        (0..total).any(|mut code| {
            let map: Vec<usize> = (0..n)
                .map(|_| {
                    let x = code % k;
                    code /= k;
                    x
                })
                .collect();
            HomWitness::new(map).validate(g, h)
        })
    }

    #[test]
    fn basic_existence() {
        let c5 = cycle(5).unwrap();
        let k3 = complete(3).unwrap();
        let w = exists_hom(&c5, &k3, &mut budget()).unwrap().unwrap();
        assert!(w.validate(&c5, &k3));
        assert!(exists_hom(&k3, &c5, &mut budget()).unwrap().is_none());
        let pet = kneser(5, 2).unwrap();
        assert!(exists_hom(&pet, &c5, &mut budget()).unwrap().is_none());
    }

    #[test]
    fn agrees_with_enumeration() {
        let graphs = [
            cycle(5).unwrap(),
            cycle(6).unwrap(),
            complete(3).unwrap(),
            path(4).unwrap(),
            cycle(7).unwrap(),
        ];
        let targets = [
            complete(2).unwrap(),
            cycle(5).unwrap(),
            complete(3).unwrap(),
            circular_complete(7, 3).unwrap(),
        ];
        for g in &graphs {
            for h in &targets {
                let got = exists_hom(g, h, &mut budget()).unwrap();
                assert_eq!(got.is_some(), brute_hom_exists(g, h), "{g:?} -> {h:?}");
            }
        }
    }

    #[test]
    fn onto_edge() {
        let c6 = cycle(6).unwrap();
        let k2 = complete(2).unwrap();
        let w = exists_onto_edge_hom(&c6, &k2, &mut budget()).unwrap().unwrap();
        assert!(w.is_onto_edges(&c6, &k2));
        assert!(exists_onto_edge_hom(&k2, &complete(3).unwrap(), &mut budget())
            .unwrap()
            .is_none());
        let c5 = cycle(5).unwrap();
        let w = exists_onto_edge_hom(&c5, &c5, &mut budget()).unwrap().unwrap();
        assert!(w.is_onto_edges(&c5, &c5));
        // C7 -> C5 exists but cannot cover?  C7 folds onto C5 covering all edges.
        let c7 = cycle(7).unwrap();
        assert!(exists_onto_edge_hom(&c7, &c5, &mut budget()).unwrap().is_some());
    }

    #[test]
    fn circular_cases() {
        let c5 = cycle(5).unwrap();
        let w = circular_hom(&c5, 5, 2, &mut budget()).unwrap().unwrap();
        assert!(w.validate(&c5, &circular_complete(5, 2).unwrap()));
        assert!(circular_hom(&c5, 7, 3, &mut budget()).unwrap().is_none());
        let grotzsch = iterated_mycielskian(&complete(2).unwrap(), 2).unwrap();
        assert!(circular_hom(grotzsch.graph(), 4, 1, &mut budget()).unwrap().is_some());
        assert!(circular_hom(&c5, 6, 2, &mut budget()).is_err());
        assert!(circular_hom(&c5, 3, 2, &mut budget()).is_err());
    }

    #[test]
    fn pinning_changes_nothing() {
        let graphs = [
            cycle(5).unwrap(),
            cycle(7).unwrap(),
            kneser(5, 2).unwrap(),
            mycielskian(&complete(3).unwrap()).unwrap().graph().clone(),
        ];
        for g in &graphs {
            for (n, d) in [(5, 2), (7, 3), (7, 2), (3, 1), (8, 3), (4, 1)] {
                let a = circular_hom(g, n, d, &mut budget()).unwrap().is_some();
                let b = exists_hom(g, &circular_complete(n, d).unwrap(), &mut budget())
                    .unwrap()
                    .is_some();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn lemma_a_on_c5() {
        let m = mycielskian(&complete(2).unwrap()).unwrap();
        let w = constrained_mycielski_hom(&m, 5, 2, &mut budget()).unwrap().unwrap();
        assert!(validate_constrained(&m, 5, 2, &w));
        assert_eq!(w.mapping[m.root().unwrap()], 0);
    }

    #[test]
    fn lemma_a_preconditions() {
        let m = mycielskian(&complete(3).unwrap()).unwrap();
        assert!(constrained_mycielski_hom(&m, 7, 1, &mut budget()).is_err());
        assert!(
            constrained_mycielski_hom(&MycielskiGraph::identity(&complete(3).unwrap()), 7, 2, &mut budget()).is_err()
        );
        // chi_c(M(K3)) = 4 > 7/2, so nothing maps to K_{7/2}
        assert!(constrained_mycielski_hom(&m, 7, 2, &mut budget()).unwrap().is_none());
    }

    #[test]
    fn exhaustion_is_not_none() {
        let pet = kneser(5, 2).unwrap();
        let r = exists_hom(&pet, &cycle(5).unwrap(), &mut Budget::new(3));
        assert!(matches!(r, Err(Error::Exhausted { .. })));
    }

    #[test]
    fn composition_validates() {
        let c7 = cycle(7).unwrap();
        let c5 = cycle(5).unwrap();
        let k3 = complete(3).unwrap();
        let a = exists_hom(&c7, &c5, &mut budget()).unwrap().unwrap();
        let b = exists_hom(&c5, &k3, &mut budget()).unwrap().unwrap();
        assert!(a.compose(&b).validate(&c7, &k3));
    }

    #[test]
    fn distances() {
        assert_eq!(circular_distance(0, 6, 7), 1);
        assert_eq!(circular_distance(2, 5, 7), 3);
        assert_eq!(near_zero(5, 2)[0], 0b10011);
    }
}
