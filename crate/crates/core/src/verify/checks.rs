use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::chromatic::{chromatic_number, circular_chromatic_number, k_colorable};
use crate::error::{Error, Result};
use crate::families::{complete, generalized_kneser, iterated_mycielskian, kneser, mycielskian, schrijver, subsets};
use crate::formulas::{
    binomial, frankl_bound, genkneser_greedy_coloring, hilton_milner_free_bound, kneser_chi, schrijver_count,
};
use crate::free::{
    ab_free_chromatic_number, free_chromatic_number, free_coloring_from_circular, free_coloring_girth,
    free_coloring_via_edge, is_free_graph, max_free_size, mmm2_pipeline, mycielski_pushdown, FreeNumber, GirthVariant,
};
use crate::graph::{Girth, Graph, VertexSet};
use crate::hom::{constrained_mycielski_hom, exists_onto_edge_hom, validate_constrained};
use crate::rational::Rational;

use super::corpus::{corpus, lookup, CorpusEntry};
use super::{CheckDef, Ctx, Outcome};

pub(super) static REGISTRY: &[CheckDef] = &[
    CheckDef {
        name: "myc-chi-omega",
        statement: "chi(M(G)) = chi(G) + 1 and omega(M(G)) = omega(G)",
        instances: corpus_graphs,
        run: myc_chi_omega,
    },
    CheckDef {
        name: "chi-kneser",
        statement: "chi(KG(m,n)) = m - 2n + 2",
        instances: kneser_pairs,
        run: chi_kneser,
    },
    CheckDef {
        name: "chi-c-jhs",
        statement: "chi_c(KG(m,n)) = chi(KG(m,n)) when m <= 2n + 2 or n = 2",
        instances: jhs_pairs,
        run: chi_c_jhs,
    },
    CheckDef {
        name: "simonyi-tardos-even",
        statement: "chi_c(M^t(K_n)) = n + t when n + t is even",
        instances: even_pairs,
        run: simonyi_tardos_even,
    },
    CheckDef {
        name: "free-circular",
        statement: "chi_c = n/d with d >= 2 gives a (0,2)-free colouring with at most ceil(n/(d-1)) <= 2 chi - 1 classes",
        instances: corpus_graphs,
        run: free_circular,
    },
    CheckDef {
        name: "phi-lower",
        statement: "phi(G) >= |V|/alpha_bar(G) >= |V|/(|V| - d(G)) for free G",
        instances: phi_graphs,
        run: phi_lower,
    },
    CheckDef {
        name: "girth-upper",
        statement: "phi(G) <= chi + d(G); <= chi + 4 for girth >= 5; <= chi + 2 for girth >= 7",
        instances: corpus_graphs,
        run: girth_upper,
    },
    CheckDef {
        name: "delta-corollary",
        statement: "phi(G) <= chi(G) + max degree + min degree for free G",
        instances: phi_graphs,
        run: delta_corollary,
    },
    CheckDef {
        name: "product-example",
        statement: "phi(K2 x K_m) = 2m = chi + d",
        instances: product_sizes,
        run: product_example,
    },
    CheckDef {
        name: "chain-lemma",
        statement: "phi^0_b >= phi with equality for large b; phi^a_b antitone in a and b; phi^a_b >= (|V| - a alpha)/alpha_bar",
        instances: chain_graphs,
        run: chain_lemma,
    },
    CheckDef {
        name: "phi2-contrapositive",
        statement: "chi_c(G) != chi(G) implies phi^a_b(G) <= 2 chi(G) - 1 for a >= 0, b >= 2",
        instances: phi_graphs,
        run: phi2_contrapositive,
    },
    CheckDef {
        name: "onto-hom-monotone",
        statement: "an onto-edge homomorphism G -> H between connected free graphs gives phi(G) <= phi(H)",
        instances: onto_pairs,
        run: onto_hom_monotone,
    },
    CheckDef {
        name: "lemma-a-hom",
        statement: "chi_c(M(G)) = n/d with d >= 2 admits c with c(z) = 0 and c(v') = c(v) off [n-d+1, d-1]",
        instances: mycielski_graphs,
        run: lemma_a_hom,
    },
    CheckDef {
        name: "mmm1",
        statement: "phi^a_b(M(G)) >= phi^{a+b}_{2b}(G), witnessed by pushdown",
        instances: mmm1_graphs,
        run: mmm1,
    },
    CheckDef {
        name: "mmm11",
        statement: "chi_c(M^t(G)) != chi(M^t(G)) implies phi^{2^{t+1}-2}_{2^{t+1}}(G) <= 2 chi(G) + 2t - 1",
        instances: mycielski_bases,
        run: mmm11,
    },
    CheckDef {
        name: "mmm2",
        statement: "block colouring of M^t(G) pushed down t times leaves p <= 2^t + 3 unsupported classes",
        instances: mycielski_bases,
        run: mmm2,
    },
    CheckDef {
        name: "hilton-free",
        statement: "alpha_bar(KG(m,n)) <= C(m-1,n-1) - C(m-n-1,n-1) for m > 2n",
        instances: hilton_pairs,
        run: hilton_free,
    },
    CheckDef {
        name: "frankl-alpha",
        statement: "alpha(KG(m,n,s)) <= C(m-s-1,n-s-1) for m >= (s+2)(n-s)",
        instances: frankl_triples,
        run: frankl_alpha,
    },
    CheckDef {
        name: "genkneser-coloring",
        statement: "colouring by the s+1 smallest elements is proper on KG(m,n,s) with at most C(m,s+1) colours",
        instances: genkneser_triples,
        run: genkneser_coloring,
    },
    CheckDef {
        name: "schrijver-count-critical",
        statement: "|V(SG(m,n))| = C(m-n-1,n-1) m/n, chi(SG) = m - 2n + 2 and SG is vertex-critical",
        instances: schrijver_pairs,
        run: schrijver_count_critical,
    },
];

fn skip<T>(why: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(why.into()))
}

fn int(p: &Value, key: &str) -> Result<usize> {
    p.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| Error::Precondition(format!("missing integer parameter {key:?}")))
}

fn entry(p: &Value, key: &str) -> Result<&'static CorpusEntry> {
    let name = p
        .get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Precondition(format!("missing graph parameter {key:?}")))?;
    lookup(name)
}

fn graph(p: &Value) -> Result<Graph> {
    entry(p, "graph")?.graph()
}

fn within(g: &Graph, cap: usize) -> Result<()> {
    if g.order() > cap {
        skip(format!("{} vertices exceed the profile cap {cap}", g.order()))
    } else {
        Ok(())
    }
}

fn corpus_filtered(ctx: &Ctx, cap: usize) -> Vec<Value> {
    corpus(ctx.profile)
        .filter(|e| e.graph().map(|g| g.order() <= cap).unwrap_or(false))
        .map(|e| json!({ "graph": e.name }))
        .collect()
}

fn corpus_graphs(ctx: &Ctx) -> Vec<Value> {
    corpus_filtered(ctx, ctx.cap)
}

fn phi_graphs(ctx: &Ctx) -> Vec<Value> {
    corpus_filtered(ctx, ctx.phi_cap.min(ctx.cap))
}

fn chain_graphs(ctx: &Ctx) -> Vec<Value> {
    corpus_filtered(ctx, 8)
}

fn n_choose(m: usize, n: usize) -> usize {
    binomial(m as i64, n as i64).try_into().unwrap_or(usize::MAX)
}

fn pairs(ctx: &Ctx, list: &[(usize, usize)], order: impl Fn(usize, usize) -> usize) -> Vec<Value> {
    list.iter()
        .filter(|&&(m, n)| order(m, n) <= ctx.cap)
        .map(|&(m, n)| json!({ "m": m, "n": n }))
        .collect()
}

const KNESER: &[(usize, usize)] = &[(4, 2), (5, 2), (6, 2), (7, 2), (7, 3), (8, 3)];

fn kneser_pairs(ctx: &Ctx) -> Vec<Value> {
    pairs(ctx, KNESER, n_choose)
}

fn jhs_pairs(ctx: &Ctx) -> Vec<Value> {
    let list: Vec<(usize, usize)> = KNESER
        .iter()
        .copied()
        .filter(|&(m, n)| m <= 2 * n + 2 || n == 2)
        .collect();
    pairs(ctx, &list, n_choose)
}

fn even_pairs(ctx: &Ctx) -> Vec<Value> {
    [(3, 1), (5, 1), (2, 2), (4, 2)]
        .iter()
        .filter(|&&(n, t)| t <= ctx.max_t && mycielski_order(n, t) <= ctx.cap)
        .map(|&(n, t)| json!({ "n": n, "t": t }))
        .collect()
}

fn mycielski_order(n: usize, t: usize) -> usize {
    (0..t).fold(n, |p, _| 2 * p + 1)
}

fn product_sizes(ctx: &Ctx) -> Vec<Value> {
    (2..=6)
        .filter(|m| 2 * m <= ctx.phi_cap)
        .map(|m| json!({ "m": m }))
        .collect()
}

fn onto_pairs(ctx: &Ctx) -> Vec<Value> {
    let list = [
        ("C5", "C5"),
        ("C7", "C5"),
        ("C7", "C7"),
        ("M(K2)", "C5"),
        ("SG(5,2)", "C5"),
        ("KG(5,2)", "KG(5,2)"),
        ("K2xK3", "K2xK3"),
    ];
    list.iter()
        .filter(|(g, h)| {
            let fits = |n: &str| {
                lookup(n)
                    .and_then(|e| e.graph())
                    .map(|g| g.order() <= ctx.phi_cap)
                    .unwrap_or(false)
            };
            fits(g) && fits(h)
        })
        .map(|(g, h)| json!({ "graph": g, "target": h }))
        .collect()
}

fn mycielski_graphs(ctx: &Ctx) -> Vec<Value> {
    corpus(ctx.profile)
        .filter(|e| e.mycielski().map(|m| m.is_some()).unwrap_or(false))
        .filter(|e| e.graph().map(|g| g.order() <= ctx.cap).unwrap_or(false))
        .map(|e| json!({ "graph": e.name }))
        .collect()
}

fn mmm1_graphs(ctx: &Ctx) -> Vec<Value> {
    corpus(ctx.profile)
        .filter(|e| e.graph().map(|g| 2 * g.order() < ctx.phi_cap).unwrap_or(false))
        .map(|e| json!({ "graph": e.name }))
        .collect()
}

fn mycielski_bases(ctx: &Ctx) -> Vec<Value> {
    let quick = [("K2", 1), ("K3", 1), ("K4", 1), ("P4", 1), ("C5", 1)];
    let full = [
        ("C7", 1),
        ("K2xK3", 1),
        ("KG(4,2)", 1),
        ("KG(5,2)", 1),
        ("SG(6,2)", 1),
        ("M(K3)", 1),
        ("K2", 2),
        ("K3", 2),
    ];
    let extra: &[(&str, usize)] = if ctx.profile == super::Profile::Full {
        &full
    } else {
        &[]
    };
    quick
        .iter()
        .chain(extra)
        .filter(|&&(name, t)| {
            t <= ctx.max_t
                && lookup(name)
                    .and_then(|e| e.graph())
                    .map(|g| mycielski_order(g.order(), t) <= ctx.cap)
                    .unwrap_or(false)
        })
        .map(|&(name, t)| json!({ "graph": name, "t": t }))
        .collect()
}

fn hilton_pairs(ctx: &Ctx) -> Vec<Value> {
    let list: Vec<(usize, usize)> = KNESER.iter().copied().filter(|&(m, n)| m > 2 * n).collect();
    pairs(ctx, &list, n_choose)
}

fn frankl_triples(ctx: &Ctx) -> Vec<Value> {
    [
        (4, 2, 0),
        (5, 2, 0),
        (6, 2, 0),
        (7, 2, 0),
        (7, 3, 0),
        (6, 3, 1),
        (7, 3, 1),
    ]
    .iter()
    .filter(|&&(m, n, _)| n_choose(m, n) <= ctx.cap)
    .map(|&(m, n, s)| json!({ "m": m, "n": n, "s": s }))
    .collect()
}

fn genkneser_triples(ctx: &Ctx) -> Vec<Value> {
    let quick = [(5, 2, 0), (6, 3, 1), (7, 3, 1)];
    let full = [(8, 3, 1), (8, 4, 2), (9, 4, 1)];
    let extra: &[(usize, usize, usize)] = if ctx.profile == super::Profile::Full {
        &full
    } else {
        &[]
    };
    quick
        .iter()
        .chain(extra)
        .map(|&(m, n, s)| json!({ "m": m, "n": n, "s": s }))
        .collect()
}

fn schrijver_pairs(ctx: &Ctx) -> Vec<Value> {
    let list = [(5, 2), (6, 2), (7, 2), (7, 3), (8, 3)];
    pairs(ctx, &list, |m, n| {
        schrijver_count(m as i64, n as i64)
            .ok()
            .and_then(|c| c.try_into().ok())
            .unwrap_or(usize::MAX)
    })
}

fn myc_chi_omega(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let g = graph(p)?;
    within(&g, ctx.cap)?;
    let mut b = ctx.budget();
    let m = mycielskian(&g)?;
    let (chi, _) = chromatic_number(&g, &mut b)?;
    let omega = g.clique_number(&mut b)?;
    let mut b2 = ctx.budget();
    let (chi_m, _) = chromatic_number(m.graph(), &mut b2)?;
    let omega_m = m.graph().clique_number(&mut b2)?;
    Ok(Outcome::new(
        chi_m == chi + 1 && omega_m == omega,
        json!({ "chi": chi_m, "omega": omega_m }),
        json!({ "chi": chi + 1, "omega": omega }),
    ))
}

fn chi_kneser(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let (m, n) = (int(p, "m")?, int(p, "n")?);
    let g = kneser(m, n)?;
    within(&g, ctx.cap)?;
    let (chi, coloring) = chromatic_number(&g, &mut ctx.budget())?;
    let formula = kneser_chi(m as i64, n as i64)?;
    Ok(Outcome::new(chi as i64 == formula, chi, formula).witness(coloring.assignment))
}

fn chi_c_jhs(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let (m, n) = (int(p, "m")?, int(p, "n")?);
    if !(m <= 2 * n + 2 || n == 2) {
        return skip("needs m <= 2n + 2 or n = 2");
    }
    let g = kneser(m, n)?;
    within(&g, ctx.cap)?;
    let r = circular_chromatic_number(&g, &mut ctx.budget())?;
    let chi = Rational::integer(r.chi as u64);
    Ok(Outcome::new(r.value == chi, r.value, chi).witness(r.witness))
}

fn simonyi_tardos_even(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let (n, t) = (int(p, "n")?, int(p, "t")?);
    if (n + t) % 2 != 0 {
        return skip("needs n + t even");
    }
    let mg = iterated_mycielskian(&complete(n)?, t)?;
    within(mg.graph(), ctx.cap)?;
    let r = circular_chromatic_number(mg.graph(), &mut ctx.budget())?;
    let want = Rational::integer((n + t) as u64);
    Ok(Outcome::new(r.value == want, r.value, want))
}

/// χ_c with its witness, skipping when it is an integer.
fn fractional_circular(g: &Graph, ctx: &Ctx) -> Result<(usize, usize, usize, crate::hom::HomWitness)> {
    if g.size() == 0 {
        return skip("graph has no edges");
    }
    let r = circular_chromatic_number(g, &mut ctx.budget())?;
    let (n, d) = (r.value.numer() as usize, r.value.denom() as usize);
    if d < 2 {
        return skip(format!("circular chromatic number {} is an integer", r.value));
    }
    Ok((n, d, r.chi, r.witness))
}

fn free_circular(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let g = graph(p)?;
    within(&g, ctx.cap)?;
    let (n, d, chi, w) = fractional_circular(&g, ctx)?;
    let fc = free_coloring_from_circular(&g, &w, n, d)?;
    let bound = n.div_ceil(d - 1);
    let pass = fc.len() <= bound && bound < 2 * chi && fc.b == Some(2) && fc.a == 0;
    Ok(Outcome::new(
        pass,
        json!({ "classes": fc.len(), "cap": fc.b }),
        json!({ "ceil_bound": bound, "two_chi_minus_one": 2 * chi - 1, "cap": 2 }),
    )
    .witness(fc))
}

fn free_phi(g: &Graph, ctx: &Ctx) -> Result<usize> {
    within(g, ctx.phi_cap)?;
    if !is_free_graph(g) {
        return skip("graph is not free");
    }
    match free_chromatic_number(g, &mut ctx.budget())?.0 {
        FreeNumber::Finite(t) => Ok(t),
        FreeNumber::Infinite => Err(Error::Counterexample("free graph with infinite phi".into())),
    }
}

fn phi_lower(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let g = graph(p)?;
    let phi = free_phi(&g, ctx)?;
    let (alpha_bar, witness) = max_free_size(&g, &mut ctx.budget())?;
    let (d, _) = g.min_edge_span()?;
    let n = g.order() as u64;
    let by_alpha = Rational::new(n, alpha_bar as u64);
    let by_span = Rational::new(n, n - d as u64);
    let pass = Rational::integer(phi as u64) >= by_alpha && by_alpha >= by_span;
    Ok(Outcome::new(
        pass,
        phi,
        json!({ "n_over_alpha_bar": by_alpha, "n_over_n_minus_d": by_span }),
    )
    .witness(json!({ "largest_free_set": witness })))
}

fn girth_upper(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let g = graph(p)?;
    within(&g, ctx.cap)?;
    if !is_free_graph(&g) || g.size() == 0 {
        return skip("graph is not free");
    }
    let mut b = ctx.budget();
    let (chi, _) = chromatic_number(&g, &mut b)?;
    let (d, _) = g.min_edge_span()?;
    let mut lhs = serde_json::Map::new();
    let mut rhs = serde_json::Map::new();
    let mut pass = true;
    let mut upper = Vec::new();

    let via = free_coloring_via_edge(&g, &mut b)?;
    lhs.insert("via_edge".into(), json!(via.len()));
    rhs.insert("chi_plus_d".into(), json!(chi + d));
    pass &= via.len() <= chi + d;
    upper.push(chi + d);

    let girth = g.girth();
    let tree_ok = girth == Girth::Infinite && g.is_connected();
    if girth.at_least(5) && (girth != Girth::Infinite || tree_ok) {
        match free_coloring_girth(&g, GirthVariant::Four, &mut b) {
            Ok(fc) => {
                lhs.insert("girth_four".into(), json!(fc.len()));
                rhs.insert("chi_plus_4".into(), json!(chi + 4));
                pass &= fc.len() <= chi + 4;
                upper.push(chi + 4);
            }
            Err(Error::Precondition(_)) => {}
            Err(e) => return Err(e),
        }
    }
    if girth.at_least(7) && girth != Girth::Infinite {
        let fc = free_coloring_girth(&g, GirthVariant::Two, &mut b)?;
        lhs.insert("girth_two".into(), json!(fc.len()));
        rhs.insert("chi_plus_2".into(), json!(chi + 2));
        pass &= fc.len() <= chi + 2;
        upper.push(chi + 2);
    }
    if g.order() <= ctx.phi_cap {
        let phi = free_phi(&g, ctx)?;
        lhs.insert("phi".into(), json!(phi));
        pass &= upper.iter().all(|&u| phi <= u);
    }
    Ok(Outcome::new(pass, lhs, rhs))
}

fn delta_corollary(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let g = graph(p)?;
    let phi = free_phi(&g, ctx)?;
    let (chi, _) = chromatic_number(&g, &mut ctx.budget())?;
    let bound = chi + g.max_degree() + g.min_degree();
    Ok(Outcome::new(phi <= bound, phi, bound))
}

fn product_example(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let m = int(p, "m")?;
    if m < 2 {
        return skip("needs m >= 2");
    }
    let g = complete(2)?.categorical_product(&complete(m)?)?;
    let phi = free_phi(&g, ctx)?;
    let (chi, _) = chromatic_number(&g, &mut ctx.budget())?;
    let (d, _) = g.min_edge_span()?;
    Ok(Outcome::new(phi == 2 * m && chi + d == 2 * m, phi, 2 * m).witness(json!({ "chi_plus_d": chi + d })))
}

fn ab(g: &Graph, a: usize, b: usize, ctx: &Ctx) -> Result<FreeNumber> {
    Ok(ab_free_chromatic_number(g, a, b, &mut ctx.budget())?.0)
}

fn chain_lemma(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let g = graph(p)?;
    within(&g, 8)?;
    if g.size() == 0 {
        return skip("graph has no edges");
    }
    let mut table = vec![vec![FreeNumber::Infinite; 5]; 4];
    for (a, row) in table.iter_mut().enumerate() {
        for (b, cell) in row.iter_mut().enumerate().skip(1) {
            *cell = ab(&g, a, b, ctx)?;
        }
    }
    let phi = free_chromatic_number(&g, &mut ctx.budget())?.0;
    let large_b = ab(&g, 0, g.size().max(g.order()), ctx)?;
    let mut violations = Vec::new();
    for (b, v) in table[0].iter().enumerate().skip(1) {
        if *v < phi {
            violations.push(format!("phi^0_{b} < phi"));
        }
    }
    if large_b != phi {
        violations.push("phi^0_b != phi for b >= |E|".into());
    }
    for a in 0..4 {
        for b in 1..=4 {
            for a2 in a..4 {
                for b2 in b..=4 {
                    if table[a][b] < table[a2][b2] {
                        violations.push(format!("phi^{a}_{b} < phi^{a2}_{b2}"));
                    }
                }
            }
        }
    }
    let mut bb = ctx.budget();
    let alpha = g.independence_number(&mut bb)? as i64;
    let (alpha_bar, _) = max_free_size(&g, &mut bb)?;
    if alpha_bar > 0 {
        let n = g.order() as i64;
        for (a, row) in table.iter().enumerate() {
            for (b, cell) in row.iter().enumerate().skip(1) {
                if let FreeNumber::Finite(t) = cell {
                    if (*t as i64) * (alpha_bar as i64) < n - a as i64 * alpha {
                        violations.push(format!("phi^{a}_{b} below the counting bound"));
                    }
                }
            }
        }
    }
    let shown: Vec<Vec<String>> = table
        .iter()
        .map(|r| r[1..].iter().map(|x| x.to_string()).collect())
        .collect();
    Ok(Outcome::new(violations.is_empty(), violations.len(), 0).witness(json!({
        "phi": phi.to_string(),
        "phi_ab_rows_a0_to_a3_cols_b1_to_b4": shown,
        "violations": violations,
    })))
}

fn phi2_contrapositive(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let g = graph(p)?;
    within(&g, ctx.phi_cap)?;
    let (_, _, chi, _) = fractional_circular(&g, ctx)?;
    let mut worst = FreeNumber::Finite(0);
    let mut table = serde_json::Map::new();
    for a in 0..=2 {
        for b in [2, 3] {
            let v = ab(&g, a, b, ctx)?;
            table.insert(format!("{a},{b}"), json!(v));
            worst = worst.max(v);
        }
    }
    Ok(Outcome::new(worst <= FreeNumber::Finite(2 * chi - 1), worst, 2 * chi - 1).witness(table))
}

fn onto_hom_monotone(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let g = graph(p)?;
    let h = entry(p, "target")?.graph()?;
    for x in [&g, &h] {
        if !x.is_connected() || !is_free_graph(x) {
            return skip("both graphs must be connected and free");
        }
    }
    let Some(w) = exists_onto_edge_hom(&g, &h, &mut ctx.budget())? else {
        return skip("no onto-edge homomorphism");
    };
    let (pg, ph) = (free_phi(&g, ctx)?, free_phi(&h, ctx)?);
    Ok(Outcome::new(pg <= ph, pg, ph).witness(w))
}

fn lemma_a_hom(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let e = entry(p, "graph")?;
    let Some(mg) = e.mycielski()? else {
        return skip("not a Mycielskian");
    };
    within(mg.graph(), ctx.cap)?;
    let (n, d, _, _) = fractional_circular(mg.graph(), ctx)?;
    let found = constrained_mycielski_hom(&mg, n, d, &mut ctx.budget())?;
    let ok = found.as_ref().is_some_and(|w| validate_constrained(&mg, n, d, w));
    let mut out = Outcome::new(ok, ok, true).detail(format!("target K_{n}/{d}"));
    if let Some(w) = found {
        out = out.witness(w);
    }
    Ok(out)
}

fn mmm1(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let g = graph(p)?;
    let mg = mycielskian(&g)?;
    within(mg.graph(), ctx.phi_cap)?;
    let mut lhs = serde_json::Map::new();
    let mut rhs = serde_json::Map::new();
    let mut pass = true;
    for (a, b) in [(0, 1), (0, 2), (1, 1), (1, 2)] {
        let (left, fc) = ab_free_chromatic_number(mg.graph(), a, b, &mut ctx.budget())?;
        let right = ab(&g, a + b, 2 * b, ctx)?;
        pass &= left >= right;
        if let Some(fc) = fc {
            let pushed = mycielski_pushdown(&mg, &fc)?;
            pass &= FreeNumber::Finite(pushed.coloring.len()) >= right;
        }
        lhs.insert(format!("{a},{b}"), json!(left));
        rhs.insert(format!("{},{}", a + b, 2 * b), json!(right));
    }
    Ok(Outcome::new(pass, lhs, rhs))
}

fn mycielski_of(p: &Value, ctx: &Ctx) -> Result<(Graph, usize, crate::families::MycielskiGraph)> {
    let g = graph(p)?;
    let t = int(p, "t")?;
    if t == 0 || t > ctx.max_t {
        return skip(format!("t = {t} outside 1..={}", ctx.max_t));
    }
    let mg = iterated_mycielskian(&g, t)?;
    within(mg.graph(), ctx.cap)?;
    Ok((g, t, mg))
}

fn mmm11(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let (g, t, mg) = mycielski_of(p, ctx)?;
    within(&g, ctx.phi_cap)?;
    let (_, _, chi_m, _) = fractional_circular(mg.graph(), ctx)?;
    let (chi, _) = chromatic_number(&g, &mut ctx.budget())?;
    let a = (1 << (t + 1)) - 2;
    let b = 1 << (t + 1);
    let v = ab(&g, a, b, ctx)?;
    let bound = 2 * chi + 2 * t - 1;
    Ok(Outcome::new(
        chi_m == chi + t && v <= FreeNumber::Finite(bound) && bound == 2 * chi_m - 1,
        v,
        bound,
    ))
}

fn mmm2(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let (_, t, mg) = mycielski_of(p, ctx)?;
    let trace = mmm2_pipeline(&mg, &mut ctx.budget())?;
    let (chi_m, _) = chromatic_number(mg.graph(), &mut ctx.budget())?;
    let first = trace.stages.first().map_or(0, |s| s.len());
    let last = trace.stages.last().map_or(0, |s| s.len());
    let cap = trace.stages.last().and_then(|s| s.b);
    let pass = trace.p <= trace.bound && first < 2 * chi_m && last <= first && cap == Some(1 << (t + 1));
    Ok(Outcome::new(
        pass,
        json!({ "p": trace.p, "classes": last }),
        json!({ "p_bound": trace.bound, "two_chi_minus_one": 2 * chi_m - 1, "cap": 1usize << (t + 1) }),
    )
    .witness(trace))
}

fn hilton_free(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let (m, n) = (int(p, "m")?, int(p, "n")?);
    let g = kneser(m, n)?;
    within(&g, ctx.cap)?;
    let bound = hilton_milner_free_bound(m as i64, n as i64)?;
    let (size, set) = max_free_size(&g, &mut ctx.budget())?;
    Ok(Outcome::new(BigUint::from(size) <= bound, size, bound.to_string()).witness(json!({ "free_set": set })))
}

fn frankl_alpha(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let (m, n, s) = (int(p, "m")?, int(p, "n")?, int(p, "s")?);
    let bound = frankl_bound(m as i64, n as i64, s as i64)?;
    let g = generalized_kneser(m, n, s)?;
    within(&g, ctx.cap)?;
    let set = g.max_independent_set(&mut ctx.budget())?;
    Ok(Outcome::new(BigUint::from(set.len()) <= bound, set.len(), bound.to_string()).witness(set))
}

fn genkneser_coloring(p: &Value, _ctx: &Ctx) -> Result<Outcome> {
    let (m, n, s) = (int(p, "m")?, int(p, "n")?, int(p, "s")?);
    let g = generalized_kneser(m, n, s)?;
    let c = genkneser_greedy_coloring(m, n, s)?;
    let proper = c.validate(&g).is_ok();
    let bound = binomial(m as i64, s as i64 + 1);
    Ok(Outcome::new(
        proper && BigUint::from(c.k) <= bound,
        json!({ "proper": proper, "colours": c.k }),
        json!({ "proper": true, "colour_bound": bound.to_string() }),
    ))
}

fn schrijver_count_critical(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let (m, n) = (int(p, "m")?, int(p, "n")?);
    let g = schrijver(m, n)?;
    let count = schrijver_count(m as i64, n as i64)?;
    let stable = subsets(m, n)?
        .iter()
        .filter(|&&mask| crate::families::is_two_stable(mask, m))
        .count();
    within(&g, ctx.cap)?;
    let mut b = ctx.budget();
    let (chi, _) = chromatic_number(&g, &mut b)?;
    let formula = kneser_chi(m as i64, n as i64)?;
    let mut critical = true;
    for v in 0..g.order() {
        let mut keep = VertexSet::full(g.order());
        keep.remove(v);
        let (sub, _) = g.induced(&keep);
        critical &= k_colorable(&sub, chi - 1, &mut b)?.is_some();
    }
    let pass = BigUint::from(g.order()) == count && stable == g.order() && chi as i64 == formula && critical;
    Ok(Outcome::new(
        pass,
        json!({ "order": g.order(), "chi": chi, "vertex_critical": critical }),
        json!({ "order": count.to_string(), "chi": formula, "vertex_critical": true }),
    ))
}
