//! Small worked examples, each checked against an independent brute-force
//! computation or against a value stated in the literature.

mod common;

use circmyc::chromatic::{chromatic_number, circular_chromatic_number, k_colorable};
use circmyc::families::{
    circular_complete, complete, cycle, generalized_kneser, iterated_mycielskian, kneser, mycielskian, path, schrijver,
};
use circmyc::formulas::{
    double_counting_holds, final_inequality_check, genkneser_greedy_coloring, hilton_milner_free_bound, kneser_chi,
    mycielski_threshold, schrijver_count, KVariant,
};
use circmyc::free::{
    ab_free_chromatic_number, free_chromatic_number, free_coloring_from_circular, free_coloring_girth,
    free_coloring_via_edge, is_free_graph, is_free_independent, max_free_size, mycielski_pushdown, supp, FreeNumber,
    GirthVariant,
};
use circmyc::graph::Girth;
use circmyc::hom::{circular_hom, constrained_mycielski_hom, exists_hom, HomWitness};
use circmyc::{Budget, Edge, Graph, Rational, VertexSet};
use num_bigint::BigUint;

fn budget() -> Budget {
    Budget::default()
}

fn vertex(g: &Graph, label: &str) -> usize {
    g.labels().unwrap().iter().position(|l| l == label).unwrap()
}

fn set(g: &Graph, vs: &[usize]) -> VertexSet {
    VertexSet::from_vertices(g.order(), vs.iter().copied())
}

fn petersen() -> Graph {
    kneser(5, 2).unwrap()
}

fn k2_times(m: usize) -> Graph {
    complete(2).unwrap().categorical_product(&complete(m).unwrap()).unwrap()
}

#[test]
fn petersen_is_cubic() {
    // Disjoint 2-subsets of [5] avoiding a fixed pair: C(3,2) = 3.
    let masks: Vec<u32> = (0u32..32).filter(|m| m.count_ones() == 2).collect();
    for &a in &masks {
        assert_eq!(masks.iter().filter(|&&b| a & b == 0).count(), 3);
    }
    let g = petersen();
    assert!((0..10).all(|v| g.neighborhood(v).unwrap().len() == 3));
}

#[test]
fn mycielskian_of_c5_has_girth_four() {
    let m = mycielskian(&cycle(5).unwrap()).unwrap();
    assert_eq!(common::girth(&common::adj(m.graph())), Some(4));
    assert_eq!(m.graph().girth(), Girth::Finite(4));
}

#[test]
fn edge_spans() {
    let c5 = cycle(5).unwrap();
    let a = common::adj(&c5);
    for e in c5.edges() {
        let union = (0..5).filter(|&x| a[e.u][x] || a[e.v][x]).count();
        assert_eq!(union, 4);
        assert_eq!(c5.edge_span(e).unwrap(), 4);
    }
    // φ(K2×K_m) = 2m = χ + d with χ = 2 gives d = 2m − 2.
    for m in 2..=5 {
        let g = k2_times(m);
        assert!(g.edges().all(|e| g.edge_span(e).unwrap() == 2 * m - 2));
        assert_eq!(g.min_edge_span().unwrap().0, 2 * m - 2);
    }
    let p = petersen();
    let a = common::adj(&p);
    let d = p
        .edges()
        .map(|e| (0..10).filter(|&x| a[e.u][x] || a[e.v][x]).count())
        .min()
        .unwrap();
    assert_eq!(d, 6);
    assert_eq!(p.min_edge_span().unwrap().0, 6);
}

#[test]
fn independence_in_kneser_graphs() {
    let g = petersen();
    let star = set(&g, &[vertex(&g, "{1,2}"), vertex(&g, "{1,3}"), vertex(&g, "{1,4}")]);
    assert!(g.is_independent(&star));
    // Erdős–Ko–Rado: C(4,1), attained by the star at 1.
    assert_eq!(g.independence_number(&mut budget()).unwrap(), 4);

    let g = generalized_kneser(6, 3, 1).unwrap();
    let alpha = g.independence_number(&mut budget()).unwrap();
    assert_eq!(alpha, common::alpha_backtrack(&common::adj(&g)));
    assert!(alpha <= 6);
}

#[test]
fn clique_numbers() {
    let p = petersen();
    let a = common::adj(&p);
    let triangle = (0..10).any(|x| (0..10).any(|y| (0..10).any(|z| a[x][y] && a[y][z] && a[x][z])));
    assert!(!triangle);
    assert_eq!(p.clique_number(&mut budget()).unwrap(), 2);
    let m = mycielskian(&complete(3).unwrap()).unwrap();
    assert_eq!(m.graph().clique_number(&mut budget()).unwrap(), 3);
}

#[test]
fn products_of_complete_graphs() {
    assert!(k2_times(3).is_isomorphic(&cycle(6).unwrap()));
    for m in 2..=5 {
        assert_eq!(chromatic_number(&k2_times(m), &mut budget()).unwrap().0, 2);
    }
}

#[test]
fn schrijver_graphs() {
    // 2-stable: no two chosen elements cyclically adjacent in [m].
    let stable = |mask: u32, m: u32| (0..m).all(|i| !(mask >> i & 1 == 1 && mask >> ((i + 1) % m) & 1 == 1));
    for (m, n) in [(5u32, 2u32), (6, 2), (7, 2), (7, 3)] {
        let count = (0u32..1 << m).filter(|&x| x.count_ones() == n && stable(x, m)).count();
        let g = schrijver(m as usize, n as usize).unwrap();
        assert_eq!(g.order(), count);
        assert_eq!(schrijver_count(m as i64, n as i64).unwrap(), BigUint::from(count));
    }
    let sg = schrijver(5, 2).unwrap();
    assert_eq!(sg.labels().unwrap(), ["{1,3}", "{1,4}", "{2,4}", "{2,5}", "{3,5}"]);
    assert!(sg.is_isomorphic(&cycle(5).unwrap()));
    assert_eq!(chromatic_number(&schrijver(6, 2).unwrap(), &mut budget()).unwrap().0, 4);
}

#[test]
fn small_mycielskians() {
    assert!(mycielskian(&complete(2).unwrap())
        .unwrap()
        .graph()
        .is_isomorphic(&cycle(5).unwrap()));
    let grotzsch = iterated_mycielskian(&complete(2).unwrap(), 2).unwrap();
    let g = grotzsch.graph();
    assert_eq!(g.order(), 11);
    assert_eq!(common::omega(&common::adj(g)), 2);
    assert_eq!(g.clique_number(&mut budget()).unwrap(), 2);
    assert!(k_colorable(g, 3, &mut budget()).unwrap().is_none());
    assert_eq!(chromatic_number(g, &mut budget()).unwrap().0, 4);
}

#[test]
fn chromatic_numbers_of_kneser_graphs() {
    assert_eq!(chromatic_number(&petersen(), &mut budget()).unwrap().0, 3);
    assert_eq!(chromatic_number(&kneser(7, 3).unwrap(), &mut budget()).unwrap().0, 3);
    assert_eq!(kneser_chi(5, 2).unwrap(), 3);
    assert_eq!(kneser_chi(7, 3).unwrap(), 3);
    for n in 1..6 {
        assert_eq!(kneser_chi(2 * n, n).unwrap(), 2);
    }
}

#[test]
fn circular_chromatic_numbers() {
    let k73 = circular_complete(7, 3).unwrap();
    assert_eq!(common::chi_c(&common::adj(&k73)), (7, 3));
    assert_eq!(
        circular_chromatic_number(&k73, &mut budget()).unwrap().value,
        Rational::new(7, 3)
    );
    assert_eq!(
        circular_chromatic_number(&petersen(), &mut budget()).unwrap().value,
        Rational::integer(3)
    );
    let grotzsch = iterated_mycielskian(&complete(2).unwrap(), 2).unwrap();
    assert_eq!(
        circular_chromatic_number(grotzsch.graph(), &mut budget())
            .unwrap()
            .value,
        Rational::integer(4)
    );
}

#[test]
fn homomorphism_examples() {
    let p = petersen();
    let c5 = cycle(5).unwrap();
    assert!(!common::hom_exists(&common::adj(&p), &common::adj(&c5)));
    assert!(exists_hom(&p, &c5, &mut budget()).unwrap().is_none());

    assert!(!common::hom_exists(&common::adj(&c5), &common::circular_adj(7, 3)));
    assert!(circular_hom(&c5, 7, 3, &mut budget()).unwrap().is_none());

    let grotzsch = iterated_mycielskian(&complete(2).unwrap(), 2).unwrap();
    let w = circular_hom(grotzsch.graph(), 4, 1, &mut budget()).unwrap().unwrap();
    assert!(w.validate(grotzsch.graph(), &complete(4).unwrap()));
}

/// c(z) = 0, and c(v') = c(v) whenever c(v) is at circular distance ≥ d
/// from 0, for the numbering v, p+v (twin), 2p (root).
fn twin_condition(p: usize, n: usize, d: usize, c: &[usize]) -> bool {
    let dist = |x: usize| x.min(n - x);
    c[2 * p] == 0 && (0..p).all(|v| dist(c[v]) < d || c[p + v] == c[v])
}

#[test]
fn constrained_homomorphisms() {
    let mg = mycielskian(&complete(2).unwrap()).unwrap();
    let w = constrained_mycielski_hom(&mg, 5, 2, &mut budget()).unwrap().unwrap();
    assert!(w.validate(mg.graph(), &circular_complete(5, 2).unwrap()));
    assert!(twin_condition(2, 5, 2, &w.mapping));

    // χ_c(M(K3)) = 4 > 7/2, so no homomorphism to K_{7/2} at all.
    let mk3 = mycielskian(&complete(3).unwrap()).unwrap();
    assert_eq!(common::chi_c(&common::adj(mk3.graph())), (4, 1));
    assert!(constrained_mycielski_hom(&mk3, 7, 2, &mut budget()).unwrap().is_none());
}

#[test]
fn supports_and_free_sets() {
    let c5 = cycle(5).unwrap();
    let a = common::adj(&c5);
    assert_eq!(common::supp(&a, &[0]), [(2, 3)]);
    assert_eq!(supp(&c5, &set(&c5, &[0])).unwrap(), [Edge::new(2, 3)]);

    let g = petersen();
    let f = set(&g, &[vertex(&g, "{1,2}"), vertex(&g, "{1,3}")]);
    let e = Edge::new(vertex(&g, "{1,4}"), vertex(&g, "{2,3}"));
    assert!(supp(&g, &f).unwrap().contains(&e));

    for (vs, free) in [(&[0usize][..], true), (&[0, 2][..], false)] {
        let extensions = common::maximal_independent_supersets(&a, vs).len();
        assert_eq!(extensions >= 2, free);
        assert_eq!(is_free_independent(&c5, &set(&c5, vs)).unwrap(), free);
    }
}

#[test]
fn free_graphs() {
    let c5 = cycle(5).unwrap();
    let p = petersen();
    for v in 0..5 {
        let mut keep = c5.vertex_set();
        keep.difference_with(&c5.closed_neighborhood(v).unwrap());
        assert_eq!(c5.induced(&keep).0.size(), 1);
    }
    for v in 0..10 {
        let mut keep = p.vertex_set();
        keep.difference_with(&p.closed_neighborhood(v).unwrap());
        assert!(p.induced(&keep).0.is_isomorphic(&cycle(6).unwrap()));
    }
    assert!(is_free_graph(&c5));
    assert!(is_free_graph(&p));
}

#[test]
fn largest_free_sets() {
    let c5 = cycle(5).unwrap();
    assert_eq!(common::alpha_bar(&common::adj(&c5)), 1);
    assert_eq!(max_free_size(&c5, &mut budget()).unwrap().0, 1);
    let p = petersen();
    assert_eq!(common::alpha_bar(&common::adj(&p)), 2);
    assert_eq!(max_free_size(&p, &mut budget()).unwrap().0, 2);
    assert_eq!(hilton_milner_free_bound(5, 2).unwrap(), BigUint::from(2u32));
}

#[test]
fn free_chromatic_numbers() {
    let c5 = cycle(5).unwrap();
    let a = common::adj(&c5);
    assert_eq!(common::phi_ab(&a, 0, None), Some(5));
    assert_eq!(
        free_chromatic_number(&c5, &mut budget()).unwrap().0,
        FreeNumber::Finite(5)
    );
    assert_eq!(
        free_chromatic_number(&k2_times(3), &mut budget()).unwrap().0,
        FreeNumber::Finite(6)
    );

    assert_eq!(common::phi_ab(&a, 0, Some(2)), Some(5));
    assert_eq!(common::phi_ab(&a, 0, Some(1)), None);
    assert_eq!(
        ab_free_chromatic_number(&c5, 0, 2, &mut budget()).unwrap().0,
        FreeNumber::Finite(5)
    );
    assert_eq!(
        ab_free_chromatic_number(&c5, 0, 1, &mut budget()).unwrap().0,
        FreeNumber::Infinite
    );
}

#[test]
fn colouring_from_a_circular_witness() {
    let c5 = cycle(5).unwrap();
    let w = HomWitness::new(vec![0, 2, 4, 1, 3]);
    let fc = free_coloring_from_circular(&c5, &w, 5, 2).unwrap();
    fc.validate(&c5).unwrap();
    assert_eq!(fc.len(), 5);
    assert!(fc.classes.iter().all(|c| c.len() == 1));
    assert_eq!((fc.a, fc.b, fc.support.len()), (0, Some(2), 5));

    for g in [c5, cycle(7).unwrap(), schrijver(5, 2).unwrap()] {
        let r = circular_chromatic_number(&g, &mut budget()).unwrap();
        let (n, d) = (r.value.numer() as usize, r.value.denom() as usize);
        assert!(d >= 2);
        let fc = free_coloring_from_circular(&g, &r.witness, n, d).unwrap();
        // ⌈(n/d)(1 + 1/(d−1))⌉ = ⌈n/(d−1)⌉.
        let bound = n.div_ceil(d - 1);
        assert!(fc.len() <= bound && bound < 2 * r.chi);
        assert_eq!(fc.b, Some(2));
    }
}

#[test]
fn colouring_around_an_edge() {
    let cases = [(cycle(5).unwrap(), 3 + 4), (petersen(), 3 + 6), (k2_times(3), 2 + 4)];
    for (g, bound) in cases {
        let fc = free_coloring_via_edge(&g, &mut budget()).unwrap();
        fc.validate(&g).unwrap();
        assert!(fc.len() <= bound);
    }
    assert_eq!(free_coloring_via_edge(&k2_times(3), &mut budget()).unwrap().len(), 6);
}

#[test]
fn colourings_from_girth() {
    let c7 = cycle(7).unwrap();
    let four = free_coloring_girth(&c7, GirthVariant::Four, &mut budget()).unwrap();
    assert!(four.len() <= 3 + 4);
    let two = free_coloring_girth(&c7, GirthVariant::Two, &mut budget()).unwrap();
    assert!(two.len() <= 3 + 2);
    let p = free_coloring_girth(&petersen(), GirthVariant::Four, &mut budget()).unwrap();
    assert!(p.len() <= 3 + 4);
    let tree = path(6).unwrap();
    let t = free_coloring_girth(&tree, GirthVariant::Four, &mut budget()).unwrap();
    t.validate(&tree).unwrap();
    assert!(t.len() <= 2 + 4);
    for fc in [&four, &two] {
        fc.validate(&c7).unwrap();
    }
}

#[test]
fn pushing_down_to_k2() {
    let k2 = complete(2).unwrap();
    let mg = mycielskian(&k2).unwrap();
    let (_, fc) = ab_free_chromatic_number(mg.graph(), 0, 2, &mut budget()).unwrap();
    let fc = fc.unwrap();
    assert_eq!(fc.len(), 5);
    let down = mycielski_pushdown(&mg, &fc).unwrap();
    down.coloring.validate(&k2).unwrap();
    assert!(down.coloring.len() <= 5);
    assert!(down.coloring.support.is_empty());
    assert_eq!((down.coloring.a, down.coloring.b), (2, Some(4)));
}

#[test]
fn pushing_down_twice() {
    let k2 = complete(2).unwrap();
    let m2 = iterated_mycielskian(&k2, 2).unwrap();
    let (_, fc) = ab_free_chromatic_number(m2.graph(), 0, 2, &mut budget()).unwrap();
    let once = mycielski_pushdown(&m2, &fc.unwrap()).unwrap().coloring;
    let m1 = m2.parent().unwrap();
    once.validate(m1.graph()).unwrap();
    let twice = mycielski_pushdown(&m1, &once).unwrap().coloring;
    twice.validate(&k2).unwrap();
    assert_eq!((twice.a, twice.b), (6, Some(8)));
}

fn threshold_oracle(n: i128, t: u32) -> i128 {
    let k = ((1i128 << (t + 1)) - 2).min((1i128 << t) + 3);
    2 * n * n * (n - 1) + k * n - (2 * n - t as i128 - 3).min(0)
}

#[test]
fn thresholds() {
    assert_eq!(mycielski_threshold(2, 0).unwrap(), 8.into());
    assert_eq!(mycielski_threshold(3, 1).unwrap(), 42.into());
    for t in 0..6 {
        let k = ((1i128 << (t + 1)) - 2).min((1i128 << t) + 3);
        assert_eq!(mycielski_threshold(1, t).unwrap(), (k + t as i128 + 1).into());
        for n in 1..8 {
            assert_eq!(
                mycielski_threshold(n, t).unwrap(),
                threshold_oracle(n as i128, t).into()
            );
        }
    }
}

#[test]
fn threshold_inequality_at_eight_two_zero() {
    let (m, n, t) = (8i128, 2i128, 0i128);
    for (variant, k) in [(KVariant::Statement, 0i128), (KVariant::Proof, 0)] {
        let lhs = n * common::binomial(m - 2, n - 2) * 2 * (m - 2 * n + 2 + t);
        let rhs = common::binomial(m, n) - k * common::binomial(m - 1, n - 1);
        assert!(lhs <= rhs);
        assert!(final_inequality_check(8, 2, 0, variant).unwrap().holds);
    }
}

#[test]
fn double_counting_sweep() {
    for n in 2..=5i64 {
        for m in 2 * n..=30 {
            let (mm, nn) = (m as i128, n as i128);
            let lhs = common::binomial(mm - 1, nn - 1) - common::binomial(mm - nn - 1, nn - 1);
            assert!(lhs <= nn * common::binomial(mm - 2, nn - 2));
            assert!(double_counting_holds(m, n));
        }
    }
}

#[test]
fn greedy_generalized_kneser_colourings() {
    for (m, n, s, cap) in [(5, 2, 0, 5), (6, 3, 1, 15)] {
        let g = generalized_kneser(m, n, s).unwrap();
        let c = genkneser_greedy_coloring(m, n, s).unwrap();
        let a = common::adj(&g);
        assert!(common::edges(&a)
            .iter()
            .all(|&(u, v)| c.assignment[u] != c.assignment[v]));
        assert!(c.k <= cap);
    }
}
