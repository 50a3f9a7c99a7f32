//! Exact chromatic and circular chromatic numbers with witnesses.

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::families::circular_complete;
use crate::graph::{Graph, VertexSet};
use crate::hom::{circular_hom, k_coloring_hom, HomWitness};
use crate::rational::{Rational, SternBrocotRange};

/// A proper colouring with colour ids in `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>, k: usize) -> Self {
        Coloring { assignment, k }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.assignment.len() != g.order() {
            return Err(Error::InvalidColoring(format!(
                "{} colours for {} vertices",
                self.assignment.len(),
                g.order()
            )));
        }
        if let Some(v) = self.assignment.iter().position(|&c| c >= self.k) {
            return Err(Error::InvalidColoring(format!("vertex {v} uses colour >= {}", self.k)));
        }
        if let Some(e) = g.edges().find(|e| self.assignment[e.u] == self.assignment[e.v]) {
            return Err(Error::InvalidColoring(format!("edge {e} is monochromatic")));
        }
        Ok(())
    }

    /// Colour classes, including empty ones, indexed by colour.
    pub fn classes(&self) -> Vec<VertexSet> {
        let n = self.assignment.len();
        let mut out = vec![VertexSet::new(n); self.k];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c].insert(v);
        }
        out
    }
}

/// A proper `k`-colouring, or `None` if there is none.
pub fn k_colorable(g: &Graph, k: usize, budget: &mut Budget) -> Result<Option<Coloring>> {
    Ok(k_coloring_hom(g, k, budget)?.map(|w| Coloring::new(w.mapping, k)))
}

/// χ(G) and an optimal colouring. The search starts at the clique number.
pub fn chromatic_number(g: &Graph, budget: &mut Budget) -> Result<(usize, Coloring)> {
    budget.check_order(g.order())?;
    let lower = g.clique_number(budget)?;
    for k in lower..=g.order() {
        if let Some(c) = k_colorable(g, k, budget)? {
            return Ok((k, c));
        }
    }
    unreachable!("every graph is |V|-colourable")
}

/// Result of a circular chromatic number computation.
#[derive(Debug, Clone, Serialize)]
pub struct CircularResult {
    pub value: Rational,
    /// Homomorphism to `K_{p/q}` where `value = p/q`.
    pub witness: HomWitness,
    pub chi: usize,
    /// Candidates refuted before the answer, in ascending order.
    pub refuted: Vec<Rational>,
    /// True when every candidate below χ was refuted at once because no
    /// χ-colouring has an acyclic tight digraph.
    pub tight_certified: bool,
}

/// A `k`-colouring whose tight digraph (arc `u → v` for each edge with
/// `c(v) = c(u) + 1 mod k`) is acyclic, or `None` if every `k`-colouring
/// has a tight cycle.
///
/// Such a colouring exists iff `χ_c(G) < k` (for `k ≥ χ(G)`). Rotations and
/// the reflection of `Z_k` preserve acyclicity, so the first branched vertex
/// is pinned to 0 and the first non-zero colour is at most `k/2`.
pub fn acyclic_tight_coloring(g: &Graph, k: usize, budget: &mut Budget) -> Result<Option<Coloring>> {
    budget.check_order(g.order())?;
    if k == 0 || k > 64 {
        return Err(Error::Precondition(format!(
            "tight colouring search needs 1 <= k <= 64, got {k}"
        )));
    }
    let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut search = TightSearch {
        g,
        k,
        colour: vec![usize::MAX; g.order()],
    };
    let doms = vec![full; g.order()];
    Ok(search
        .extend(doms, true, true, budget)?
        .then(|| Coloring::new(search.colour, k)))
}

struct TightSearch<'a> {
    g: &'a Graph,
    k: usize,
    colour: Vec<usize>,
}

impl TightSearch<'_> {
    fn extend(&mut self, doms: Vec<u64>, first: bool, unreflected: bool, budget: &mut Budget) -> Result<bool> {
        let Some(v) = (0..self.g.order())
            .filter(|&v| self.colour[v] == usize::MAX)
            .min_by_key(|&v| (doms[v].count_ones(), std::cmp::Reverse(self.g.degree(v)), v))
        else {
            return Ok(true);
        };
        for x in 0..self.k {
            if doms[v] >> x & 1 == 0 || (first && x != 0) || (unreflected && x > self.k - x) {
                continue;
            }
            budget.tick()?;
            self.colour[v] = x;
            let mut next = doms.clone();
            next[v] = 1 << x;
            let mut ok = true;
            for u in self.g.adj(v).iter() {
                next[u] &= !(1 << x);
                if next[u] == 0 {
                    ok = false;
                    break;
                }
            }
            if ok && !self.cycle_through(v) && self.extend(next, false, unreflected && x == 0, budget)? {
                return Ok(true);
            }
            self.colour[v] = usize::MAX;
        }
        Ok(false)
    }

    /// Whether the tight digraph on coloured vertices has a cycle through `v`.
    fn cycle_through(&self, v: usize) -> bool {
        let mut seen = VertexSet::new(self.g.order());
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            let next = (self.colour[x] + 1) % self.k;
            for y in self.g.adj(x).iter() {
                if self.colour[y] != next {
                    continue;
                }
                if y == v {
                    return true;
                }
                if !seen.contains(y) {
                    seen.insert(y);
                    stack.push(y);
                }
            }
        }
        false
    }
}

/// χ_c(G): the least `p/q` with `χ−1 < p/q ≤ χ`, `p ≤ |V(G)|`, admitting a
/// homomorphism to `K_{p/q}`.
///
/// When no χ-colouring has an acyclic tight digraph, χ_c = χ and no
/// fractional candidate is probed. Otherwise candidates are visited in
/// strictly ascending order, so the first feasible one is the minimum. The
/// numerator cap is sound because an optimal circular colouring can be
/// taken onto the vertices of the target. Each candidate gets a fresh node
/// budget; exhausting it aborts the whole computation.
pub fn circular_chromatic_number(g: &Graph, budget: &mut Budget) -> Result<CircularResult> {
    if g.size() == 0 {
        return Err(Error::Precondition(
            "circular chromatic number needs at least one edge".into(),
        ));
    }
    let (chi, coloring) = chromatic_number(g, budget)?;
    let whole = Rational::integer(chi as u64);
    let mut refuted = Vec::new();
    let mut tight_certified = false;
    if chi > 2 {
        let mut local = budget.fresh();
        let below = acyclic_tight_coloring(g, chi, &mut local);
        budget.absorb(&local);
        if below?.is_none() {
            tight_certified = true;
            refuted.extend(SternBrocotRange::unit_interval(chi as u64, g.order() as u64));
        } else {
            for cand in SternBrocotRange::unit_interval(chi as u64, g.order() as u64) {
                let mut local = budget.fresh();
                let found = circular_hom(g, cand.numer() as usize, cand.denom() as usize, &mut local);
                budget.absorb(&local);
                if let Some(w) = found? {
                    return Ok(CircularResult {
                        value: cand,
                        witness: w,
                        chi,
                        refuted,
                        tight_certified,
                    });
                }
                refuted.push(cand);
            }
        }
    }
    // K_{χ/1} is K_χ, so the optimal colouring is itself the witness.
    debug_assert!(HomWitness::new(coloring.assignment.clone()).validate(g, &circular_complete(chi, 1)?));
    Ok(CircularResult {
        value: whole,
        witness: HomWitness::new(coloring.assignment),
        chi,
        refuted,
        tight_certified,
    })
}
