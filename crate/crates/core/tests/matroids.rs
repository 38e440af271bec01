use bcres_core::bits::{self, bit, full, submasks};
use bcres_core::corpus::{matroid_corpus, DEFAULT_SEED};
use bcres_core::matroid::{build_matroid, default_labels, MatroidSpec, Origin};
use bcres_core::{Error, Matroid, TuttePolynomial};
use proptest::prelude::*;

fn uniform_sum(parts: &[(usize, usize)]) -> Matroid {
    Matroid::direct_sum(&parts.iter().map(|&(p, m)| Matroid::uniform(p, m).unwrap()).collect::<Vec<_>>())
}

fn arb_matroid() -> impl Strategy<Value = Matroid> {
    let part = (1usize..=4).prop_flat_map(|m| (0..=m, Just(m)));
    let uniform = prop::collection::vec(part, 1..=3).prop_map(|parts| uniform_sum(&parts));
    let linear = prop::collection::vec(prop::collection::vec(-2i64..=2, 6), 2..=4).prop_filter_map("needs a nonzero column", |rows| {
        let rows: Vec<Vec<_>> = rows
            .iter()
            .map(|r| r.iter().map(|&a| num_rational::BigRational::from_integer(a.into())).collect())
            .collect();
        Matroid::linear(&rows, None).ok()
    });
    prop_oneof![uniform, linear]
}

fn signed_binomials(k: u32) -> Vec<i64> {
    // coefficients of (z - 1)^k
    let mut c = vec![1i64];
    for _ in 0..k {
        let mut next = vec![0i64; c.len() + 1];
        for (i, &a) in c.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= a;
        }
        c = next;
    }
    c
}

/// `Σ_A (x-1)^{r-r(A)} (y-1)^{|A|-r(A)}` expanded over all subsets.
fn corank_nullity(x: &Matroid) -> TuttePolynomial {
    let r = x.full_rank() as u32;
    let mut t = TuttePolynomial::default();
    for s in submasks(x.ground()) {
        let rs = x.rank(s) as u32;
        let (a, b) = (r - rs, bits::len(s) as u32 - rs);
        for (i, ci) in signed_binomials(a).into_iter().enumerate() {
            for (j, cj) in signed_binomials(b).into_iter().enumerate() {
                t.add_term(i as u32, j as u32, ci * cj);
            }
        }
    }
    t
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_is_an_involution(x in arb_matroid()) {
        prop_assert_eq!(x.dual().dual(), x.clone());
        prop_assert_eq!(x.dual().full_rank(), x.n() - x.full_rank());
    }

    #[test]
    fn rank_is_monotone_and_submodular(x in arb_matroid()) {
        prop_assume!(x.n() <= 8);
        let subsets: Vec<u64> = submasks(x.ground()).collect();
        for &a in &subsets {
            prop_assert!(x.rank(a) <= bits::len(a));
            for &b in &subsets {
                prop_assert!(x.rank(a | b) + x.rank(a & b) <= x.rank(a) + x.rank(b));
                if a & b == a {
                    prop_assert!(x.rank(a) <= x.rank(b));
                }
            }
        }
    }

    #[test]
    fn tutte_agrees_with_corank_nullity(x in arb_matroid()) {
        let t = x.tutte_polynomial();
        prop_assert_eq!(&t, &corank_nullity(&x));
        prop_assert!(t.terms().all(|(_, c)| c >= 0));
        prop_assert_eq!(t.eval(1, 1) as usize, x.bases().len());
    }

    #[test]
    fn deletion_contraction(x in arb_matroid()) {
        let t = x.tutte_polynomial();
        let loops = x.loops();
        let coloops = x.coloops();
        for e in bits::elems(x.ground()) {
            if (loops | coloops) & bit(e) != 0 {
                continue;
            }
            let del = x.minor_masks(bit(e), 0).tutte_polynomial();
            let con = x.minor_masks(0, bit(e)).tutte_polynomial();
            prop_assert_eq!(&t, &del.add(&con));
        }
    }

    #[test]
    fn direct_sum_multiplies_tutte(a in arb_matroid(), b in arb_matroid()) {
        prop_assume!(a.n() + b.n() <= 12);
        let s = Matroid::direct_sum(&[a.clone(), b.clone()]);
        prop_assert_eq!(s.full_rank(), a.full_rank() + b.full_rank());
        prop_assert_eq!(s.tutte_polynomial(), a.tutte_polynomial().mul(&b.tutte_polynomial()));
    }

    #[test]
    fn contraction_rank_identity(x in arb_matroid(), del in any::<u64>(), con in any::<u64>()) {
        let con = con & x.ground();
        let del = del & x.ground() & !con;
        let m = x.minor_masks(del, con);
        let rest = x.ground() & !del & !con;
        for a in submasks(full(m.n())) {
            let original = bits::from_elems(bits::elems(rest).enumerate().filter(|&(i, _)| a & bit(i) != 0).map(|(_, e)| e));
            prop_assert_eq!(m.rank(a), x.rank(original | con) - x.rank(con));
        }
    }
}

#[test]
fn corpus_matroid_invariants() {
    for x in matroid_corpus(DEFAULT_SEED) {
        let m = &x.value;
        assert_eq!(m.dual().dual(), *m, "{}", x.name);
        let t = m.tutte_polynomial();
        let profile = m.independence_profile();
        assert_eq!(t.eval(1, 1) as u64, profile[m.full_rank()], "{}", x.name);
        assert_eq!(profile[0], 1);
    }
}

#[test]
fn rank_submodular_exhaustively_up_to_seven() {
    for x in matroid_corpus(DEFAULT_SEED).iter().filter(|x| x.value.n() <= 7) {
        let m = &x.value;
        let g = m.ground();
        for a in submasks(g) {
            for b in submasks(g) {
                assert!(m.rank(a | b) + m.rank(a & b) <= m.rank(a) + m.rank(b), "{}", x.name);
            }
        }
    }
}

#[test]
fn construction_examples() {
    let u24 = build_matroid(&MatroidSpec::Uniform { p: 2, n: 4 }).unwrap();
    assert_eq!(u24.circuits(), &[0b0111, 0b1011, 0b1101, 0b1110]);
    assert_eq!(u24.full_rank(), 2);
    assert_eq!(u24.rank(0b0111), 2);
    assert_eq!(u24.rank(0), 0);
    assert_eq!(u24.tutte_polynomial().to_string(), "x^2 + 2x + y^2 + 2y");
    assert_eq!(u24.independence_profile(), vec![1, 4, 6]);
    assert_eq!(u24.dual(), u24);
    let deleted = u24.minor(&["4"], &[] as &[&str]).unwrap();
    assert_eq!(deleted.labels(), &["1", "2", "3"]);
    assert_eq!((deleted.circuits(), deleted.full_rank()), (Matroid::uniform(2, 3).unwrap().circuits(), 2));
    let contracted = u24.minor(&[] as &[&str], &["1"]).unwrap();
    assert_eq!(contracted.labels(), &["2", "3", "4"]);
    assert_eq!((contracted.circuits(), contracted.full_rank()), (Matroid::uniform(1, 3).unwrap().circuits(), 1));
    assert_eq!(u24.minor(&["1"], &["1"]), Err(Error::Overlap("1".into())));

    let pc = build_matroid(&MatroidSpec::Circuits {
        n: 6,
        circuits: vec![vec![4, 5, 6], vec![1, 2, 3, 6], vec![1, 2, 3, 4, 5]],
        labels: None,
    })
    .unwrap();
    assert_eq!(pc.full_rank(), 4);
    assert_eq!(pc.rank_of_labels(&["4", "5", "6"]).unwrap(), 2);
    let (components, coloops) = pc.components_and_coloops();
    assert_eq!((components, coloops), (vec![0b111111], 0));
    // bases of the graph made of a triangle and a 4-cycle glued along an edge
    assert_eq!(pc.independence_profile()[4], 11);

    let free = Matroid::uniform(3, 3).unwrap();
    assert!(free.circuits().is_empty());
    assert_eq!(free.dual(), Matroid::uniform(0, 3).unwrap());
    assert_eq!(free.components_and_coloops(), (vec![0b001, 0b010, 0b100], 0b111));
    assert_eq!(Matroid::uniform(1, 3).unwrap().dual(), Matroid::uniform(2, 3).unwrap());

    let sum = Matroid::direct_sum(&[Matroid::uniform(1, 2).unwrap(), Matroid::uniform(1, 2).unwrap()]);
    assert_eq!(sum.circuits(), &[0b0011, 0b1100]);
    assert_eq!(sum.full_rank(), 2);
}

#[test]
fn invalid_circuit_families_are_rejected() {
    // {1,2} and {2,3} force a circuit inside {1,3}
    let bad = Matroid::from_circuits(default_labels(3), vec![0b011, 0b110], Origin::Circuits, true);
    assert!(matches!(bad, Err(Error::CircuitElimination { .. })));
    let nested = Matroid::from_circuits(default_labels(3), vec![0b011, 0b111], Origin::Circuits, true);
    assert!(matches!(nested, Err(Error::NotAntichain { .. })));
}

#[test]
fn broken_circuit_examples() {
    use bcres_core::ElementOrder;
    let u24 = Matroid::uniform(2, 4).unwrap();
    let bc = u24.broken_circuits(&ElementOrder::natural(4)).unwrap();
    assert_eq!(bc.minimal, vec![0b0110, 0b1010, 0b1100]);
    let pc = Matroid::from_circuits(default_labels(6), vec![0b111000, 0b100111, 0b011111], Origin::Circuits, true).unwrap();
    let bc = pc.broken_circuits(&ElementOrder::natural(6)).unwrap();
    let labels: Vec<Vec<String>> = bc.minimal.iter().map(|&s| pc.labels_of(s)).collect();
    assert_eq!(labels, vec![vec!["5", "6"], vec!["2", "3", "6"], vec!["2", "3", "4", "5"]]);
    let with_loop = Matroid::uniform(0, 1).unwrap();
    assert!(matches!(with_loop.broken_circuits(&ElementOrder::natural(1)), Err(Error::LoopPresent(_))));
}
