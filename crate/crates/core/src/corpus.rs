//! Deterministic test corpora of matroids, ideals, arrangements and graphs.
//!
//! Everything is generated from a seed with ChaCha8, so two runs with the same
//! seed see exactly the same instances in the same order.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arrangement::Arrangement;
use crate::graph::{build_gnr, shared_edge_example, Bridge, Graph};
use crate::ideal::{broken_circuit_ideal, Monomial, MonomialIdeal};
use crate::matroid::{ElementOrder, Matroid};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Largest ground set in the matroid corpus.
pub const MAX_GROUND: usize = 8;

#[derive(Debug, Clone, Serialize)]
pub struct Named<T> {
    pub name: String,
    pub value: T,
}

fn named<T>(name: impl Into<String>, value: T) -> Named<T> {
    Named {
        name: name.into(),
        value,
    }
}

/// Direct sums of non-free uniform matroids `U_{p,m}` (2 ≤ p < m) padded with coloops,
/// every combination with at most [`MAX_GROUND`] elements.
pub fn uniform_sums() -> Vec<Named<Matroid>> {
    let parts: Vec<(usize, usize)> = (3..=MAX_GROUND)
        .flat_map(|m| (2..m).map(move |p| (p, m)))
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<(usize, usize)>, usize)> = vec![(0, Vec::new(), 0)];
    while let Some((from, chosen, size)) = stack.pop() {
        for k in 0..=MAX_GROUND - size {
            if chosen.is_empty() && k == 0 {
                continue;
            }
            let mut pieces: Vec<Matroid> = chosen
                .iter()
                .map(|&(p, m)| Matroid::uniform(p, m).expect("small uniform"))
                .collect();
            if k > 0 {
                pieces.push(Matroid::uniform(k, k).expect("free matroid"));
            }
            let mut name = chosen.iter().map(|(p, m)| format!("U{p},{m}")).join("+");
            if k > 0 {
                if !name.is_empty() {
                    name.push('+');
                }
                name.push_str(&format!("U{k},{k}"));
            }
            out.push(named(name, Matroid::direct_sum(&pieces)));
        }
        for (i, &(p, m)) in parts.iter().enumerate().skip(from) {
            if size + m <= MAX_GROUND {
                let mut next = chosen.clone();
                next.push((p, m));
                stack.push((i, next, size + m));
            }
        }
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

/// One representative of every connected simple graph on 2 to 5 vertices
/// with at most [`MAX_GROUND`] edges, up to isomorphism.
pub fn small_connected_graphs() -> Vec<Named<Graph>> {
    let mut out = Vec::new();
    for nv in 2..=5usize {
        let slots: Vec<(usize, usize)> = (0..nv).tuple_combinations().collect();
        let mut seen = BTreeSet::new();
        for mask in 1u32..(1 << slots.len()) {
            if mask.count_ones() as usize > MAX_GROUND {
                continue;
            }
            let edges: Vec<(usize, usize)> = slots
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            if !connected(nv, &edges) {
                continue;
            }
            let canon = canonical_form(nv, &edges);
            if seen.insert(canon.clone()) {
                let g = Graph::from_edges(&canon);
                out.push(named(format!("graph{nv}:{}", edge_string(&canon)), g));
            }
        }
    }
    out
}

fn edge_string(edges: &[(usize, usize)]) -> String {
    edges.iter().map(|(a, b)| format!("{a}{b}")).join(",")
}

fn connected(nv: usize, edges: &[(usize, usize)]) -> bool {
    let mut reach = 1u32;
    loop {
        let next = edges.iter().fold(reach, |acc, &(a, b)| {
            if acc >> a & 1 == 1 || acc >> b & 1 == 1 {
                acc | 1 << a | 1 << b
            } else {
                acc
            }
        });
        if next == reach {
            return reach.count_ones() as usize == nv;
        }
        reach = next;
    }
}

/// Lexicographically least sorted edge list over all vertex relabellings.
fn canonical_form(nv: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    (0..nv)
        .permutations(nv)
        .map(|perm| {
            let mut e: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (perm[a], perm[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            e.sort_unstable();
            e
        })
        .min()
        .expect("at least one permutation")
}

fn rational_rows(rows: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| r.iter().map(|&a| BigRational::from_integer(BigInt::from(a))).collect())
        .collect()
}

/// Random small integer matrices of full row rank whose column matroid is simple.
pub fn random_linear(seed: u64, count: usize) -> Vec<Named<Matroid>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempts = 0usize;
    while out.len() < count && attempts < 50 * count {
        attempts += 1;
        let r = rng.gen_range(2..=4usize);
        let n = rng.gen_range(r + 1..=MAX_GROUND);
        let rows: Vec<Vec<i64>> = (0..r)
            .map(|_| (0..n).map(|_| rng.gen_range(-2..=2i64)).collect())
            .collect();
        let Ok(a) = Arrangement::new(rational_rows(&rows), None) else {
            continue;
        };
        if !a.is_essential() {
            continue;
        }
        let x = a.matroid().expect("rectangular rational matrix");
        if x.is_simple() {
            out.push(named(format!("linear#{}:{:?}", out.len(), rows), x));
        }
    }
    out
}

/// The full matroid corpus: uniform sums, graphic matroids and random
/// representable ones. All members are simple and loopless with `n ≤ 8`.
pub fn matroid_corpus(seed: u64) -> Vec<Named<Matroid>> {
    let mut out = uniform_sums();
    out.extend(small_connected_graphs().into_iter().map(|g| {
        let x = g.value.cycle_matroid().expect("small graph");
        named(g.name, x)
    }));
    out.extend(random_linear(seed, 100));
    out.extend(named_examples());
    out
}

/// Matroids that appear as worked examples.
pub fn named_examples() -> Vec<Named<Matroid>> {
    let pc = Matroid::from_circuits(
        crate::matroid::default_labels(6),
        vec![0b111000, 0b100111, 0b011111],
        crate::matroid::Origin::Circuits,
        true,
    )
    .expect("valid circuits");
    vec![
        named("U2,4", Matroid::uniform(2, 4).expect("uniform")),
        named("U3,3", Matroid::uniform(3, 3).expect("uniform")),
        named("parallel-connection", pc),
    ]
}

/// The broken-circuit ideal `I_<(X)` in the natural order.
pub fn bc_ideal(x: &Matroid) -> MonomialIdeal {
    broken_circuit_ideal(x, &ElementOrder::natural(x.n())).expect("loopless corpus matroid")
}

fn mono(pairs: &[(usize, u32)]) -> Monomial {
    Monomial::from_pairs(pairs.iter().map(|&(v, e)| (v - 1, e)))
}

fn sq(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
    MonomialIdeal::squarefree(n, &gens.iter().map(|g| g.iter().fold(0u64, |m, &v| m | 1 << (v - 1))).collect::<Vec<_>>())
}

/// Ideals used as worked examples, including a few non-squarefree ones.
pub fn example_ideals() -> Vec<Named<MonomialIdeal>> {
    vec![
        named("(x5x6,x2x3x6,x2x3x4x5)", sq(6, &[&[5, 6], &[2, 3, 6], &[2, 3, 4, 5]])),
        named("(x2x3,x2x4,x3x4)", sq(4, &[&[2, 3], &[2, 4], &[3, 4]])),
        named("(x1x2)", sq(2, &[&[1, 2]])),
        named("(x1x2,x3x4)", sq(4, &[&[1, 2], &[3, 4]])),
        named("(x1x2,x1x3x4x5)", sq(5, &[&[1, 2], &[1, 3, 4, 5]])),
        named("(0)", MonomialIdeal::zero(3)),
        named("(x1^2)", MonomialIdeal::new(1, vec![mono(&[(1, 2)])]).expect("in range")),
        named(
            "(x1^2,x1x2)",
            MonomialIdeal::new(2, vec![mono(&[(1, 2)]), mono(&[(1, 1), (2, 1)])]).expect("in range"),
        ),
        named(
            "(x1^2,x1x2^3)",
            MonomialIdeal::new(2, vec![mono(&[(1, 2)]), mono(&[(1, 1), (2, 3)])]).expect("in range"),
        ),
        named("m3", MonomialIdeal::maximal(3)),
    ]
}

/// Random squarefree ideals on at most 6 variables with at most 10 generators.
pub fn random_squarefree(seed: u64, count: usize) -> Vec<Named<MonomialIdeal>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1dea1);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(2..=6usize);
            let k = rng.gen_range(1..=10usize);
            let supports: Vec<u64> = (0..k)
                .map(|_| loop {
                    let s = rng.gen_range(1..1u64 << n);
                    if s.count_ones() >= 2 || rng.gen_bool(0.15) {
                        break s;
                    }
                })
                .collect();
            let ideal = MonomialIdeal::squarefree(n, &supports);
            named(format!("random#{i}:{ideal}"), ideal)
        })
        .collect()
}

/// Ideal corpus: broken-circuit ideals of the matroid corpus, the worked
/// examples and random squarefree ideals.
pub fn ideal_corpus(seed: u64) -> Vec<Named<MonomialIdeal>> {
    let mut out: Vec<Named<MonomialIdeal>> = matroid_corpus(seed)
        .into_iter()
        .map(|x| named(format!("I<({})", x.name), bc_ideal(&x.value)))
        .collect();
    out.extend(example_ideals());
    out.extend(random_squarefree(seed, 120));
    out
}

/// Arrangements: the random representable corpus, their cones and a few named ones.
pub fn arrangement_corpus(seed: u64) -> Vec<Named<Arrangement>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xa77);
    let mut out = vec![
        named("boolean3", Arrangement::boolean(3)),
        named(
            "generic-lines",
            Arrangement::from_integer_rows(&[vec![1, 0, 1, 1], vec![0, 1, 1, -1]]).expect("valid"),
        ),
        named("braid-A3", Arrangement::from_integer_rows(&[
            vec![1, 1, 1, 0, 0, 0],
            vec![-1, 0, 0, 1, 1, 0],
            vec![0, -1, 0, -1, 0, 1],
        ])
        .expect("valid")),
        named("parallel-connection", parallel_connection_arrangement()),
    ];
    while out.len() < 40 {
        let r = rng.gen_range(2..=3usize);
        let n = rng.gen_range(r..=6usize);
        let rows: Vec<Vec<i64>> = (0..r)
            .map(|_| (0..n).map(|_| rng.gen_range(-2..=2i64)).collect())
            .collect();
        if let Ok(a) = Arrangement::new(rational_rows(&rows), None) {
            if a.is_essential() {
                let i = out.len();
                out.push(named(format!("random-arrangement#{i}"), a.clone()));
                out.push(named(format!("cone(random-arrangement#{i})"), a.cone()));
            }
        }
    }
    out
}

/// A rational realization of the parallel connection with circuits
/// `{4,5,6}`, `{1,2,3,6}` and `{1,2,3,4,5}`.
pub fn parallel_connection_arrangement() -> Arrangement {
    Arrangement::from_integer_rows(&[
        vec![1, 0, 0, 0, 1, 1],
        vec![0, 1, 0, 0, 1, 1],
        vec![0, 0, 1, 0, 1, 1],
        vec![0, 0, 0, 1, -1, 0],
    ])
    .expect("valid")
}

/// Graphs: the small connected graphs plus cycle constructions with
/// edge-disjoint cycles and one example with a shared edge.
pub fn graph_corpus() -> Vec<Named<Graph>> {
    let mut out = small_connected_graphs();
    let shapes: &[&[usize]] = &[&[3], &[4], &[3, 3], &[3, 4], &[4, 4], &[3, 3, 3], &[3, 5], &[4, 4, 4]];
    for sizes in shapes {
        for bridge in [Bridge::Disjoint, Bridge::Wedge, Bridge::Path(1), Bridge::Path(2)] {
            let g = build_gnr(sizes, bridge).expect("feasible shape");
            out.push(named(format!("G{:?}/{:?}", sizes, bridge), g));
        }
    }
    out.push(named("shared-edge", shared_edge_example()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_census() {
        let counts = small_connected_graphs().iter().fold([0usize; 6], |mut acc, g| {
            acc[g.value.vertices().len()] += 1;
            acc
        });
        // connected graphs up to isomorphism: 1, 2, 6, 21 on 2..5 vertices; K5 and K5-e have too many edges
        assert_eq!(&counts[2..], &[1, 2, 6, 19]);
    }

    #[test]
    fn corpus_shape() {
        let c = matroid_corpus(DEFAULT_SEED);
        assert!(c.len() >= 200, "only {} matroids", c.len());
        for x in &c {
            assert!(x.value.n() <= MAX_GROUND && x.value.is_simple(), "{}", x.name);
        }
        let again = matroid_corpus(DEFAULT_SEED);
        assert!(c.iter().zip(&again).all(|(a, b)| a.name == b.name && a.value == b.value));
    }

    #[test]
    fn parallel_connection_realization() {
        let a = parallel_connection_arrangement();
        assert_eq!(a.matroid().unwrap(), named_examples()[2].value);
    }
}
