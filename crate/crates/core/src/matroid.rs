//! Matroids in circuit normal form.
//!
//! Every construction (uniform, explicit circuits, graphs, rational matrices,
//! direct sums, minors, duals) is normalised to the list of circuits over a
//! ground set `0..n` with display labels. Rank and independence are answered
//! from the circuit list by greedy scans.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bits::{self, bit, full, is_subset, len};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg;
use crate::poly::TuttePolynomial;

/// Circuit-elimination is checked on every pair up to this ground size and on a
/// random sample of pairs above it.
pub const EXHAUSTIVE_AXIOM_LIMIT: usize = 12;
pub const SAMPLED_AXIOM_PAIRS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    Uniform,
    Circuits,
    Graphic,
    Linear,
    DirectSum,
    Dual,
    Minor,
}

/// A construction description accepted by [`build_matroid`].
#[derive(Debug, Clone, PartialEq)]
pub enum MatroidSpec {
    Uniform { p: usize, n: usize },
    /// Circuits given as 1-based element positions.
    Circuits {
        n: usize,
        circuits: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    },
    /// Edges between integer vertex ids; edge `k` becomes element `k + 1`.
    Graphic { edges: Vec<(usize, usize)> },
    /// Rows of a rational matrix; the columns are the elements.
    Linear {
        rows: Vec<Vec<BigRational>>,
        labels: Option<Vec<String>>,
    },
    DirectSum(Vec<MatroidSpec>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "MatroidRepr")]
pub struct Matroid {
    labels: Vec<String>,
    circuits: Vec<u64>,
    rank: usize,
    origin: Origin,
    #[serde(skip)]
    by_element: Vec<Vec<u64>>,
}

#[derive(Deserialize)]
struct MatroidRepr {
    labels: Vec<String>,
    circuits: Vec<u64>,
    rank: usize,
    origin: Origin,
}

impl TryFrom<MatroidRepr> for Matroid {
    type Error = Error;

    fn try_from(r: MatroidRepr) -> Result<Self> {
        check_ground(r.labels.len())?;
        let m = Matroid::from_circuits(r.labels, r.circuits, r.origin, true)?;
        if m.rank != r.rank {
            return Err(Error::Precondition(format!("stored rank {} but circuits give {}", r.rank, m.rank)));
        }
        Ok(m)
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.circuits == other.circuits && self.rank == other.rank
    }
}

impl Eq for Matroid {}

pub fn build_matroid(spec: &MatroidSpec) -> Result<Matroid> {
    match spec {
        MatroidSpec::Uniform { p, n } => Matroid::uniform(*p, *n),
        MatroidSpec::Circuits { n, circuits, labels } => {
            let labels = match labels {
                Some(l) => l.clone(),
                None => default_labels(*n),
            };
            if labels.len() != *n {
                return Err(Error::Precondition(format!(
                    "{} labels given for {} elements",
                    labels.len(),
                    n
                )));
            }
            let mut masks = Vec::with_capacity(circuits.len());
            for c in circuits {
                let mut m = 0u64;
                for &e in c {
                    if e == 0 || e > *n {
                        return Err(Error::UnknownElement(e.to_string()));
                    }
                    m |= bit(e - 1);
                }
                masks.push(m);
            }
            Matroid::from_circuits(labels, masks, Origin::Circuits, true)
        }
        MatroidSpec::Graphic { edges } => Ok(Graph::from_edges(edges).cycle_matroid()?),
        MatroidSpec::Linear { rows, labels } => Matroid::linear(rows, labels.clone()),
        MatroidSpec::DirectSum(parts) => {
            let built = parts.iter().map(build_matroid).collect::<Result<Vec<_>>>()?;
            Ok(Matroid::direct_sum(&built))
        }
    }
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn check_ground(n: usize) -> Result<()> {
    if n > bits::MAX_GROUND {
        return Err(Error::Bound {
            what: "ground set",
            limit: bits::MAX_GROUND,
            got: n,
        });
    }
    Ok(())
}

fn check_labels(labels: &[String]) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

impl Matroid {
    /// Normalise a circuit list. With `validate`, the circuit axioms are checked
    /// (antichain, no empty circuit, elimination) and the rank is computed along
    /// two greedy orders which must agree.
    pub fn from_circuits(labels: Vec<String>, circuits: Vec<u64>, origin: Origin, validate: bool) -> Result<Self> {
        check_ground(labels.len())?;
        check_labels(&labels)?;
        let n = labels.len();
        let mut cs = circuits;
        cs.sort_by_key(|&c| (len(c), c));
        cs.dedup();
        if validate {
            if cs.first() == Some(&0) {
                return Err(Error::EmptyCircuit);
            }
            if let Some(&bad) = cs.iter().find(|&&c| !is_subset(c, full(n))) {
                return Err(Error::UnknownElement(format!("{bad:#b}")));
            }
            for (i, &a) in cs.iter().enumerate() {
                if let Some(&b) = cs[i + 1..].iter().find(|&&b| is_subset(a, b)) {
                    return Err(Error::NotAntichain {
                        inner: mask_labels(&labels, a),
                        outer: mask_labels(&labels, b),
                    });
                }
            }
        }
        let mut m = Matroid {
            labels,
            circuits: cs,
            rank: 0,
            origin,
            by_element: Vec::new(),
        };
        m.index();
        if validate {
            m.check_elimination()?;
            let forward = m.greedy_rank(bits::elems(full(n)));
            let backward = m.greedy_rank((0..n).rev());
            if forward != backward {
                return Err(Error::RankMismatch { forward, backward });
            }
        }
        m.rank = m.rank(full(n));
        Ok(m)
    }

    fn index(&mut self) {
        let n = self.labels.len();
        self.by_element = vec![Vec::new(); n];
        for &c in &self.circuits {
            for e in bits::elems(c) {
                self.by_element[e].push(c);
            }
        }
    }

    fn check_elimination(&self) -> Result<()> {
        let n = self.n();
        let k = self.circuits.len();
        let check_pair = |a: u64, b: u64| -> Result<()> {
            for e in bits::elems(a & b) {
                let u = (a | b) & !bit(e);
                if !self.circuits.iter().any(|&c| is_subset(c, u)) {
                    return Err(Error::CircuitElimination {
                        first: mask_labels(&self.labels, a),
                        second: mask_labels(&self.labels, b),
                        shared: self.labels[e].clone(),
                    });
                }
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_AXIOM_LIMIT {
            for i in 0..k {
                for j in i + 1..k {
                    check_pair(self.circuits[i], self.circuits[j])?;
                }
            }
        } else if k >= 2 {
            let mut rng = ChaCha8Rng::seed_from_u64(0x0062_6372_6573);
            for _ in 0..SAMPLED_AXIOM_PAIRS {
                let i = rng.gen_range(0..k);
                let j = rng.gen_range(0..k);
                if i != j {
                    check_pair(self.circuits[i], self.circuits[j])?;
                }
            }
        }
        Ok(())
    }

    fn greedy_rank<I: IntoIterator<Item = usize>>(&self, order: I) -> usize {
        let mut indep = 0u64;
        for e in order {
            let cand = indep | bit(e);
            if !self.by_element[e].iter().any(|&c| is_subset(c, cand)) {
                indep = cand;
            }
        }
        len(indep)
    }

    pub fn uniform(p: usize, n: usize) -> Result<Self> {
        check_ground(n)?;
        let circuits = if p < n {
            bits::k_subsets(full(n), p + 1).collect()
        } else {
            Vec::new()
        };
        Matroid::from_circuits(default_labels(n), circuits, Origin::Uniform, false)
    }

    /// Matroid on the columns of a rational matrix.
    pub fn linear(rows: &[Vec<BigRational>], labels: Option<Vec<String>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, |r| r.len());
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ncols {
                return Err(Error::NonRectangular {
                    row: i,
                    expected: ncols,
                    found: r.len(),
                });
            }
        }
        check_ground(ncols)?;
        let labels = labels.unwrap_or_else(|| default_labels(ncols));
        if labels.len() != ncols {
            return Err(Error::Precondition(format!(
                "{} labels given for {} columns",
                labels.len(),
                ncols
            )));
        }
        // Column scaling does not change the matroid, so clear denominators.
        let cols: Vec<Vec<BigInt>> = (0..ncols)
            .map(|j| {
                let col: Vec<BigRational> = rows.iter().map(|r| r[j].clone()).collect();
                if col.iter().all(|x| x.is_zero()) {
                    vec![BigInt::zero(); col.len()]
                } else {
                    linalg::primitive_integer_vector(&col)
                }
            })
            .collect();
        let indep = |s: u64| -> bool {
            let chosen: Vec<Vec<BigInt>> = bits::elems(s).map(|j| cols[j].clone()).collect();
            linalg::rank_bigint(&chosen) == chosen.len()
        };
        let circuits = circuits_from_oracle(ncols, indep);
        Matroid::from_circuits(labels, circuits, Origin::Linear, false)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    pub fn ground(&self) -> u64 {
        full(self.n())
    }

    pub fn full_rank(&self) -> usize {
        self.rank
    }

    pub fn circuits(&self) -> &[u64] {
        &self.circuits
    }

    pub fn circuit_labels(&self) -> Vec<Vec<String>> {
        self.circuits.iter().map(|&c| mask_labels(&self.labels, c)).collect()
    }

    /// Size of a maximal independent subset of `s`.
    pub fn rank(&self, s: u64) -> usize {
        self.greedy_rank(bits::elems(s))
    }

    pub fn rank_of_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<usize> {
        Ok(self.rank(self.mask_of(labels)?))
    }

    pub fn is_independent(&self, s: u64) -> bool {
        !self.circuits.iter().any(|&c| is_subset(c, s))
    }

    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<u64> {
        let mut m = 0u64;
        for l in labels {
            let l = l.as_ref();
            let i = self
                .labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::UnknownElement(l.to_string()))?;
            m |= bit(i);
        }
        Ok(m)
    }

    pub fn labels_of(&self, s: u64) -> Vec<String> {
        mask_labels(&self.labels, s)
    }

    pub fn loops(&self) -> u64 {
        self.circuits.iter().filter(|&&c| len(c) == 1).fold(0, |a, &c| a | c)
    }

    pub fn is_loopless(&self) -> bool {
        self.loops() == 0
    }

    /// Loopless and without parallel pairs: every circuit has at least three elements.
    pub fn is_simple(&self) -> bool {
        self.circuits.iter().all(|&c| len(c) >= 3)
    }

    pub fn min_circuit_size(&self) -> Option<usize> {
        self.circuits.iter().map(|&c| len(c)).min()
    }

    /// `C \ min(C)` for every circuit, in circuit order, and the inclusion-minimal ones.
    pub fn broken_circuits(&self, order: &ElementOrder) -> Result<BrokenCircuits> {
        order.check(self.n())?;
        if let Some(l) = bits::min_elem(self.loops()) {
            return Err(Error::LoopPresent(self.labels[l].clone()));
        }
        let all: Vec<u64> = self
            .circuits
            .iter()
            .map(|&c| c & !bit(order.min_of(c).expect("nonempty circuit")))
            .collect();
        let minimal = bits::minimal_sets(all.clone());
        Ok(BrokenCircuits { all, minimal })
    }

    /// Bases are complements of bases of `self`.
    pub fn dual(&self) -> Matroid {
        let n = self.n();
        let r = self.rank;
        let g = full(n);
        let circuits = circuits_from_oracle(n, |s| self.rank(g & !s) == r);
        Matroid::from_circuits(self.labels.clone(), circuits, Origin::Dual, false).expect("dual of a valid matroid")
    }

    /// Delete `del` and contract `con`; the result lives on the remaining labels.
    pub fn minor<S: AsRef<str>>(&self, del: &[S], con: &[S]) -> Result<Matroid> {
        let d = self.mask_of(del)?;
        let c = self.mask_of(con)?;
        if let Some(e) = bits::min_elem(d & c) {
            return Err(Error::Overlap(self.labels[e].clone()));
        }
        Ok(self.minor_masks(d, c))
    }

    pub fn minor_masks(&self, del: u64, con: u64) -> Matroid {
        let kept = self.ground() & !del & !con;
        let after_delete: Vec<u64> = self.circuits.iter().copied().filter(|&c| c & del == 0).collect();
        let contracted: Vec<u64> = after_delete.iter().map(|&c| c & !con).filter(|&c| c != 0).collect();
        let circuits = bits::minimal_sets(contracted)
            .into_iter()
            .map(|c| compress(c, kept))
            .collect();
        let labels = mask_labels(&self.labels, kept);
        Matroid::from_circuits(labels, circuits, Origin::Minor, false).expect("minor of a valid matroid")
    }

    /// Restriction to `s` (deletion of the complement), keeping labels.
    pub fn restrict(&self, s: u64) -> Matroid {
        self.minor_masks(self.ground() & !s, 0)
    }

    /// Direct sum with elements relabelled `1..N` block by block.
    pub fn direct_sum(parts: &[Matroid]) -> Matroid {
        let mut circuits = Vec::new();
        let mut offset = 0;
        for p in parts {
            circuits.extend(p.circuits.iter().map(|&c| c << offset));
            offset += p.n();
        }
        Matroid::from_circuits(default_labels(offset), circuits, Origin::DirectSum, false)
            .expect("direct sum of valid matroids")
    }

    /// Connected components (transitive closure of "share a circuit") and coloops.
    pub fn components_and_coloops(&self) -> (Vec<u64>, u64) {
        let n = self.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for &c in &self.circuits {
            let mut it = bits::elems(c);
            if let Some(first) = it.next() {
                for e in it {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, e));
                    parent[a] = b;
                }
            }
        }
        let mut blocks: HashMap<usize, u64> = HashMap::new();
        for e in 0..n {
            let r = find(&mut parent, e);
            *blocks.entry(r).or_default() |= bit(e);
        }
        let mut comps: Vec<u64> = blocks.into_values().collect();
        comps.sort_unstable_by_key(|&c| c.trailing_zeros());
        let covered = self.circuits.iter().fold(0u64, |a, &c| a | c);
        (comps, self.ground() & !covered)
    }

    pub fn coloops(&self) -> u64 {
        self.components_and_coloops().1
    }

    /// Deletion-contraction with memoisation on the (ground, circuit list) state.
    pub fn tutte_polynomial(&self) -> TuttePolynomial {
        let mut memo: HashMap<(u64, Vec<u64>), TuttePolynomial> = HashMap::new();
        tutte_rec(self.ground(), self.circuits.clone(), &mut memo)
    }

    /// `I_k`, the number of independent `k`-subsets, for `k = 0..=rank`.
    pub fn independence_profile(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.rank + 1];
        self.for_each_independent(|s| counts[len(s)] += 1);
        counts
    }

    pub fn for_each_independent<F: FnMut(u64)>(&self, mut f: F) {
        let n = self.n();
        let mut stack: Vec<(u64, usize)> = vec![(0, 0)];
        while let Some((s, next)) = stack.pop() {
            f(s);
            for e in next..n {
                let cand = s | bit(e);
                if !self.by_element[e].iter().any(|&c| is_subset(c, cand)) {
                    stack.push((cand, e + 1));
                }
            }
        }
    }

    pub fn bases(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let r = self.rank;
        self.for_each_independent(|s| {
            if len(s) == r {
                out.push(s);
            }
        });
        out.sort_unstable();
        out
    }
}

fn tutte_rec(ground: u64, circuits: Vec<u64>, memo: &mut HashMap<(u64, Vec<u64>), TuttePolynomial>) -> TuttePolynomial {
    if circuits.is_empty() {
        return TuttePolynomial::monomial(len(ground) as u32, 0, 1);
    }
    let key = (ground, circuits);
    if let Some(t) = memo.get(&key) {
        return t.clone();
    }
    let (ground, circuits) = key;
    // Elements in no circuit are coloops and split off as powers of x.
    let covered = circuits.iter().fold(0u64, |a, &c| a | c);
    let coloops = len(ground & !covered) as u32;
    let e = covered.trailing_zeros() as usize;
    let eb = bit(e);
    let rest = ground & !eb & covered;
    let deleted: Vec<u64> = circuits.iter().copied().filter(|&c| c & eb == 0).collect();
    let result = if circuits.contains(&eb) {
        tutte_rec(rest, deleted, memo).shift(0, 1)
    } else {
        let contracted = bits::minimal_sets(circuits.iter().map(|&c| c & !eb).collect());
        let d = tutte_rec(rest, deleted, memo);
        let c = tutte_rec(rest, contracted, memo);
        d.add(&c)
    }
    .shift(coloops, 0);
    memo.insert((ground, circuits), result.clone());
    result
}

/// Minimal dependent sets of an independence oracle over `0..n`, found by
/// increasing size and skipping supersets of circuits already found.
pub fn circuits_from_oracle<F: Fn(u64) -> bool>(n: usize, indep: F) -> Vec<u64> {
    let mut greedy = 0u64;
    for e in 0..n {
        if indep(greedy | bit(e)) {
            greedy |= bit(e);
        }
    }
    let r = len(greedy);
    let mut circuits: Vec<u64> = Vec::new();
    for k in 1..=(r + 1).min(n) {
        let found: Vec<u64> = bits::k_subsets(full(n), k)
            .filter(|&s| !circuits.iter().any(|&c| is_subset(c, s)))
            .filter(|&s| !indep(s))
            .collect();
        circuits.extend(found);
    }
    circuits
}

/// Map the bits of `s` that lie in `keep` onto consecutive positions.
pub fn compress(s: u64, keep: u64) -> u64 {
    bits::elems(keep)
        .enumerate()
        .filter(|&(_, e)| s & bit(e) != 0)
        .fold(0, |acc, (i, _)| acc | bit(i))
}

pub fn mask_labels(labels: &[String], s: u64) -> Vec<String> {
    bits::elems(s).map(|i| labels[i].clone()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrokenCircuits {
    pub all: Vec<u64>,
    pub minimal: Vec<u64>,
}

/// A total order on the ground set: `sequence[k]` is the element in position `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "OrderRepr")]
pub struct ElementOrder {
    sequence: Vec<usize>,
    #[serde(skip)]
    position: Vec<usize>,
}

#[derive(Deserialize)]
struct OrderRepr {
    sequence: Vec<usize>,
}

impl TryFrom<OrderRepr> for ElementOrder {
    type Error = Error;

    fn try_from(r: OrderRepr) -> Result<Self> {
        ElementOrder::from_sequence(r.sequence)
    }
}

impl ElementOrder {
    pub fn natural(n: usize) -> Self {
        Self::from_sequence((0..n).collect()).expect("identity is a permutation")
    }

    pub fn from_sequence(sequence: Vec<usize>) -> Result<Self> {
        let n = sequence.len();
        let mut position = vec![usize::MAX; n];
        for (k, &e) in sequence.iter().enumerate() {
            if e >= n || position[e] != usize::MAX {
                return Err(Error::Precondition("element order is not a permutation".into()));
            }
            position[e] = k;
        }
        Ok(ElementOrder { sequence, position })
    }

    pub fn from_labels<S: AsRef<str>>(m: &Matroid, labels: &[S]) -> Result<Self> {
        let seq = labels
            .iter()
            .map(|l| {
                let l = l.as_ref();
                m.labels.iter().position(|x| x == l).ok_or_else(|| Error::UnknownElement(l.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        if seq.len() != m.n() {
            return Err(Error::Precondition(format!(
                "element order lists {} of {} elements",
                seq.len(),
                m.n()
            )));
        }
        Self::from_sequence(seq)
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    pub fn position(&self, e: usize) -> usize {
        self.position[e]
    }

    pub fn min_of(&self, s: u64) -> Option<usize> {
        bits::elems(s).min_by_key(|&e| self.position[e])
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.sequence.len() != n {
            return Err(Error::Precondition(format!(
                "element order has {} entries for {} elements",
                self.sequence.len(),
                n
            )));
        }
        Ok(())
    }
}
