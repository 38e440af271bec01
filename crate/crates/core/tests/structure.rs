use bcres_core::arrangement::{dot, generic_point, koszul_report, Arrangement, KoszulVerdict};
use bcres_core::betti::{betti_table, classify_linearity};
use bcres_core::corpus::{arrangement_corpus, bc_ideal, graph_corpus, matroid_corpus, named_examples, parallel_connection_arrangement, DEFAULT_SEED};
use bcres_core::decomposition::{
    extremal_h_check, fvector_bound_check, generalized_bound_check, stratify, two_term_decomposition, verify_stratification,
};
use bcres_core::graph::{build_gnr, gnr_report, shared_edge_example, Bridge, Graph};
use bcres_core::hilbert::{h_binomial_fit, hilbert_function};
use bcres_core::{Characteristic, ElementOrder, Matroid};
use num_rational::BigRational;
use num_traits::{One, Zero};

const CH: Characteristic = Characteristic::ZERO;

fn sum(parts: &[(usize, usize)]) -> Matroid {
    Matroid::direct_sum(&parts.iter().map(|&(p, m)| Matroid::uniform(p, m).unwrap()).collect::<Vec<_>>())
}

fn parallel_connection() -> Matroid {
    named_examples().into_iter().find(|x| x.name == "parallel-connection").unwrap().value
}

#[test]
fn linear_resolution_iff_two_terms_iff_extremal_h() {
    for x in matroid_corpus(DEFAULT_SEED) {
        let m = &x.value;
        let linear = classify_linearity(&betti_table(&bc_ideal(m), CH).unwrap()).is_linear();
        let two = two_term_decomposition(m).unwrap();
        let s = m.min_circuit_size().map_or(m.full_rank(), |c| c - 1);
        let extremal = extremal_h_check(m, s).unwrap().holds;
        assert_eq!(linear, two.is_some(), "{}", x.name);
        assert_eq!(two.is_some(), extremal, "{}", x.name);
    }
}

#[test]
fn fvector_bound_holds_under_its_precondition() {
    for x in matroid_corpus(DEFAULT_SEED) {
        let m = &x.value;
        for s in 1..=m.full_rank() {
            if let Ok(rows) = fvector_bound_check(m, s) {
                assert!(rows.iter().all(|r| r.holds), "{} at s = {s}", x.name);
            }
        }
    }
}

#[test]
fn powers_of_linear_ideals_stay_linear() {
    for x in matroid_corpus(DEFAULT_SEED) {
        let i = bc_ideal(&x.value);
        let Some(s) = classify_linearity(&betti_table(&i, CH).unwrap()).linear_degree() else {
            continue;
        };
        for k in 2..=3 {
            if let Ok(t) = betti_table(&i.power(k), CH) {
                assert_eq!(classify_linearity(&t).linear_degree(), Some(k * s), "{} power {k}", x.name);
            }
        }
    }
}

#[test]
fn stratifications_reverify() {
    for x in matroid_corpus(DEFAULT_SEED) {
        let m = &x.value;
        let st = stratify(m).unwrap().expect("single elements always give a chain");
        assert!(verify_stratification(m, &st), "{}", x.name);
        assert_eq!(st.strata.iter().map(|s| s.n).sum::<usize>(), m.n());
        assert_eq!(st.rank_sum_matches, st.rank_sum == m.full_rank());
        if two_term_decomposition(m).unwrap().is_some() {
            assert_eq!(st.depth(), 1, "{}", x.name);
        }
    }
}

#[test]
fn decomposition_examples() {
    let u24 = Matroid::uniform(2, 4).unwrap();
    let t = two_term_decomposition(&u24).unwrap().unwrap();
    assert_eq!((t.s, t.coloops.len()), (2, 0));
    let t = two_term_decomposition(&sum(&[(2, 4), (1, 1)])).unwrap().unwrap();
    assert_eq!((t.s, t.coloops), (2, vec!["5".to_string()]));
    assert!(two_term_decomposition(&parallel_connection()).unwrap().is_none());

    let rows = fvector_bound_check(&u24, 2).unwrap();
    assert_eq!((rows[2].independent, rows[2].bound, rows[2].holds), (6, 3, true));
    assert_eq!((rows[0].independent, rows[0].bound), (1, 1));
    let free = Matroid::uniform(3, 3).unwrap();
    let rows = fvector_bound_check(&free, 3).unwrap();
    assert_eq!(rows.iter().map(|r| r.independent).collect::<Vec<_>>(), vec![1, 3, 3, 1]);
    assert!(rows.iter().all(|r| r.equal));
    assert!(fvector_bound_check(&u24, 3).is_err());

    assert_eq!(extremal_h_check(&u24, 2).unwrap().h, vec![1, 2, 3]);
    assert!(extremal_h_check(&u24, 2).unwrap().holds);
    assert!(extremal_h_check(&sum(&[(2, 4), (1, 1)]), 2).unwrap().holds);
    assert!(!extremal_h_check(&parallel_connection(), 1).unwrap().holds);

    let i = bc_ideal(&u24);
    let h = hilbert_function(&i, 6).unwrap();
    let fit = h_binomial_fit(&[1, 2, 0], 2);
    assert_eq!((fit.c.clone(), fit.cutoff, fit.fits), (vec![1], 2, true));
    let g = generalized_bound_check(&u24, &h.coefficients, &fit).unwrap();
    assert!(g.h_reading_extremal);
    let g = generalized_bound_check(&free, &[1], &h_binomial_fit(&[1], 0)).unwrap();
    assert!(g.h_reading_extremal);

    let st = stratify(&sum(&[(2, 4), (1, 1)])).unwrap().unwrap();
    assert_eq!(st.depth(), 1);
    let st = stratify(&free).unwrap().unwrap();
    assert_eq!((st.depth(), st.strata[0].s), (1, 0));
    let st = stratify(&parallel_connection()).unwrap().unwrap();
    assert!(!st.rank_sum_matches && verify_stratification(&parallel_connection(), &st));
}

#[test]
fn coning_adds_a_coloop() {
    for a in arrangement_corpus(DEFAULT_SEED) {
        let m = a.value.matroid().unwrap();
        let cone = a.value.cone().matroid().unwrap();
        let expected = Matroid::direct_sum(&[m.clone(), Matroid::uniform(1, 1).unwrap()]);
        assert_eq!(cone.circuits(), expected.circuits(), "{}", a.name);
        assert_eq!(cone.full_rank(), m.full_rank() + 1);
    }
}

#[test]
fn product_factors_recompose() {
    for a in arrangement_corpus(DEFAULT_SEED) {
        if !a.value.is_essential() {
            continue;
        }
        let m = a.value.matroid().unwrap();
        let factors = a.value.detect_product().unwrap();
        let mut circuits: Vec<Vec<String>> = Vec::new();
        let mut rank = 0;
        let mut elements = 0;
        for f in &factors {
            let fm = f.arrangement.matroid().unwrap();
            assert_eq!(fm.full_rank(), f.dimension);
            rank += fm.full_rank();
            elements += fm.n();
            circuits.extend(fm.circuit_labels());
        }
        let mut expected = m.circuit_labels();
        expected.sort();
        circuits.sort();
        assert_eq!((circuits, rank, elements), (expected, m.full_rank(), m.n()), "{}", a.name);
    }
}

#[test]
fn orlik_terao_generators_vanish_on_reciprocals() {
    for a in arrangement_corpus(DEFAULT_SEED) {
        let arr = &a.value;
        if !arr.is_essential() {
            continue;
        }
        let v = generic_point(arr);
        for g in arr.os_ot_generators().unwrap() {
            let values: Vec<BigRational> = g
                .circuit
                .iter()
                .map(|l| {
                    let j = arr.labels().iter().position(|x| x == l).unwrap();
                    BigRational::one() / dot(&arr.column(j), &v)
                })
                .collect();
            assert!(g.evaluate_orlik_terao(&values).is_zero(), "{}: {:?}", a.name, g.circuit);
            let first: i64 = g.dependency[0].parse().unwrap();
            assert!(first > 0);
        }
    }
}

#[test]
fn koszul_verdict_tracks_rank_two_decompositions() {
    for a in arrangement_corpus(DEFAULT_SEED) {
        if !a.value.is_essential() {
            continue;
        }
        let m = a.value.matroid().unwrap();
        if !m.is_loopless() {
            continue;
        }
        let rep = koszul_report(&a.value).unwrap();
        let two = two_term_decomposition(&m).unwrap();
        assert_eq!(rep.two_term_rank_two, two.as_ref().is_some_and(|t| t.s == 2), "{}", a.name);
        if rep.two_term_rank_two {
            assert_eq!(rep.verdict, KoszulVerdict::Koszul);
        }
    }
}

#[test]
fn arrangement_examples() {
    let lines = Arrangement::from_integer_rows(&[vec![1, 0, 1, 1], vec![0, 1, 1, -1]]).unwrap();
    let twice = lines.cone().cone();
    assert_eq!(koszul_report(&twice).unwrap().verdict, KoszulVerdict::Koszul);
    let three = Arrangement::from_integer_rows(&[vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
    let g = three.os_ot_generators().unwrap();
    assert_eq!(g.len(), 1);
    assert_eq!(g[0].orlik_solomon.len(), 3);
    let pc = parallel_connection_arrangement();
    let rep = koszul_report(&pc).unwrap();
    assert!(rep.two_term.is_none());
    assert_eq!(rep.bc_graded_linear, Some(true));
    assert_ne!(rep.verdict, KoszulVerdict::Koszul);
}

#[test]
fn cycle_matroid_rank_counts_components() {
    for g in graph_corpus() {
        let m = g.value.cycle_matroid().unwrap();
        assert_eq!(m.full_rank(), g.value.vertices().len() - g.value.n_components(), "{}", g.name);
    }
}

#[test]
fn edge_disjoint_cycle_graphs_are_complete_intersections() {
    for sizes in [&[3][..], &[3, 3], &[3, 4], &[4, 4, 4], &[3, 5, 4]] {
        for bridge in [Bridge::Disjoint, Bridge::Wedge, Bridge::Path(1), Bridge::Path(3)] {
            let g = build_gnr(sizes, bridge).unwrap();
            let rep = gnr_report(&g, &ElementOrder::natural(g.n_edges()), Some(sizes.len())).unwrap();
            assert!(rep.edge_disjoint && rep.complete_intersection && rep.cohen_macaulay, "{sizes:?} {bridge:?}");
            assert!(rep.sr_matches_broken_circuits);
            assert_eq!(rep.r, sizes.len());
        }
    }
}

#[test]
fn graph_examples() {
    let tri = Graph::from_edges(&[(0, 1), (1, 2), (2, 0)]);
    assert_eq!(tri.cycle_matroid().unwrap().circuits(), Matroid::uniform(2, 3).unwrap().circuits());
    let two = build_gnr(&[3, 3], Bridge::Disjoint).unwrap();
    assert_eq!(two.n_edges(), 6);
    let rep = gnr_report(&two, &ElementOrder::natural(6), Some(2)).unwrap();
    assert_eq!(rep.broken_circuit_ideal, "(x2x3, x5x6)");
    assert!(rep.complete_intersection && rep.cohen_macaulay);
    let tree = Graph::from_edges(&[(0, 1), (1, 2), (1, 3)]);
    assert!(tree.cycle_matroid().unwrap().circuits().is_empty());
    let path = build_gnr(&[3, 4], Bridge::Path(2)).unwrap();
    assert_eq!(path.n_edges(), 9);
    assert_eq!(path.cycle_matroid().unwrap().circuits().len(), 2);

    let shared = shared_edge_example();
    let rep = gnr_report(&shared, &ElementOrder::natural(6), None).unwrap();
    assert!(!rep.complete_intersection && !rep.edge_disjoint);
    assert_eq!(rep.broken_circuit_ideal, "(x5x6, x2x3x6, x2x3x4x5)");
    assert!(matches!(
        gnr_report(&shared, &ElementOrder::natural(6), Some(2)),
        Err(bcres_core::Error::CycleCountMismatch { expected: 2, found: 3 })
    ));
    assert_eq!(shared.cycle_matroid().unwrap(), parallel_connection());
}
