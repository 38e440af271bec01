//! Monomial ideals over a polynomial ring in named variables.
//!
//! Generators are kept minimal at all times and in the order they were given
//! (after dropping redundant ones), because several analyses depend on the
//! listed order.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, bit};
use crate::complex::{bc_complex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::matroid::{ElementOrder, Matroid};

/// A monomial stored as (variable index, positive exponent) pairs sorted by index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(i: usize) -> Self {
        Monomial { exps: vec![(i, 1)] }
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Self {
        let mut exps: Vec<(usize, u32)> = Vec::new();
        let mut all: Vec<(usize, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        all.sort_unstable();
        for (v, e) in all {
            match exps.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => exps.push((v, e)),
            }
        }
        Monomial { exps }
    }

    pub fn from_dense(exps: &[u32]) -> Self {
        Monomial::from_pairs(exps.iter().enumerate().map(|(i, &e)| (i, e)))
    }

    pub fn from_mask(mask: u64) -> Self {
        Monomial {
            exps: bits::elems(mask).map(|i| (i, 1)).collect(),
        }
    }

    pub fn exponents(&self) -> &[(usize, u32)] {
        &self.exps
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn dense(&self, n: usize) -> Vec<u32> {
        let mut out = vec![0; n];
        for &(v, e) in &self.exps {
            out[v] = e;
        }
        out
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    pub fn support(&self) -> u64 {
        self.exps.iter().fold(0, |a, &(v, _)| a | bit(v))
    }

    pub fn max_var(&self) -> Option<usize> {
        self.exps.last().map(|&(v, _)| v)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let mut it = other.exps.iter().peekable();
        'outer: for &(v, e) in &self.exps {
            while let Some(&&(w, f)) = it.peek() {
                match w.cmp(&v) {
                    Ordering::Less => {
                        it.next();
                    }
                    Ordering::Equal => {
                        if f < e {
                            return false;
                        }
                        it.next();
                        continue 'outer;
                    }
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    fn merge(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        let mut vars: Vec<usize> = self.exps.iter().chain(&other.exps).map(|&(v, _)| v).collect();
        vars.sort_unstable();
        vars.dedup();
        Monomial {
            exps: vars
                .into_iter()
                .map(|v| (v, f(self.exponent(v), other.exponent(v))))
                .filter(|&(_, e)| e > 0)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::min)
    }

    /// `self / gcd(self, other)`.
    pub fn strip(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a.saturating_sub(b))
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".into();
        }
        self.exps
            .iter()
            .map(|&(v, e)| {
                let name = names.get(v).cloned().unwrap_or_else(|| format!("x{}", v + 1));
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect()
    }

    fn sort_key(&self) -> (u32, Vec<(usize, std::cmp::Reverse<u32>)>) {
        (self.degree(), self.exps.iter().map(|&(v, e)| (v, std::cmp::Reverse(e))).collect())
    }
}

/// Minimal generators from a list: redundant generators are dropped, the
/// order of the survivors is kept.
pub fn minimalize(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut idx: Vec<usize> = (0..gens.len()).collect();
    idx.sort_by_key(|&i| gens[i].degree());
    let mut keep = vec![false; gens.len()];
    let mut kept: Vec<usize> = Vec::new();
    for &i in &idx {
        let g = &gens[i];
        let redundant = kept.iter().any(|&j| {
            let h = &gens[j];
            (h.degree() < g.degree() || h == g) && h.divides(g)
        });
        if !redundant {
            keep[i] = true;
            kept.push(i);
        }
    }
    gens.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MonomialIdeal {
    names: Vec<String>,
    gens: Vec<Monomial>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.names.len() == other.names.len() && self.sorted_gens() == other.sorted_gens()
    }
}

impl Eq for MonomialIdeal {}

pub fn default_var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        Self::with_names(default_var_names(nvars), gens)
    }

    pub fn with_names(names: Vec<String>, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(v) = gens.iter().filter_map(|g| g.max_var()).max() {
            if v >= names.len() {
                return Err(Error::UnknownElement(format!("x{}", v + 1)));
            }
        }
        Ok(MonomialIdeal {
            names,
            gens: minimalize(gens),
        })
    }

    /// Squarefree ideal generated by the given supports.
    pub fn squarefree(nvars: usize, supports: &[u64]) -> Self {
        Self::new(nvars, supports.iter().map(|&s| Monomial::from_mask(s)).collect()).expect("supports inside ground")
    }

    pub fn zero(nvars: usize) -> Self {
        Self::new(nvars, Vec::new()).expect("no generators")
    }

    /// The maximal homogeneous ideal.
    pub fn maximal(nvars: usize) -> Self {
        Self::new(nvars, (0..nvars).map(Monomial::var).collect()).expect("variables in range")
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn sorted_gens(&self) -> Vec<Monomial> {
        let mut g = self.gens.clone();
        g.sort_by_key(|m| m.sort_key());
        g
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn supports(&self) -> Vec<u64> {
        self.gens.iter().map(|g| g.support()).collect()
    }

    pub fn indeg(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).max()
    }

    pub fn is_equigenerated(&self) -> bool {
        self.indeg() == self.max_degree()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    fn derived(&self, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            names: self.names.clone(),
            gens: minimalize(gens),
        }
    }

    /// `I : m`, generated by `g / gcd(g, m)`.
    pub fn colon(&self, m: &Monomial) -> Self {
        self.derived(self.gens.iter().map(|g| g.strip(m)).collect())
    }

    /// Ideal generated by the first `k` generators in the stored order.
    pub fn prefix(&self, k: usize) -> Self {
        self.derived(self.gens[..k].to_vec())
    }

    pub fn reordered(&self, order: &[usize]) -> Self {
        self.derived(order.iter().map(|&i| self.gens[i].clone()).collect())
    }

    /// Minimal generators of `I^k`.
    pub fn power(&self, k: u32) -> Self {
        assert!(k >= 1, "powers start at 1");
        let mut cur = self.gens.clone();
        for _ in 1..k {
            let mut next: Vec<Monomial> = Vec::with_capacity(cur.len() * self.gens.len());
            for a in &cur {
                for b in &self.gens {
                    next.push(a.mul(b));
                }
            }
            next.sort_by_key(|m| m.sort_key());
            next.dedup();
            cur = minimalize(next);
        }
        self.derived(cur)
    }

    /// Ideal generated by the degree-`d` monomials of `I`.
    pub fn component(&self, d: u32) -> Self {
        let n = self.nvars();
        let mut out: Vec<Monomial> = Vec::new();
        for g in &self.gens {
            if g.degree() > d {
                continue;
            }
            for m in monomials_of_degree(n, d - g.degree()) {
                out.push(g.mul(&m));
            }
        }
        out.sort_by_key(|m| m.sort_key());
        out.dedup();
        self.derived(out)
    }

    /// Replace `x^a` by `x_a x_b ...` in fresh variables; squarefree ideals are unchanged.
    pub fn polarize(&self) -> Self {
        let n = self.nvars();
        let mut top = vec![0u32; n];
        for g in &self.gens {
            for &(v, e) in g.exponents() {
                top[v] = top[v].max(e);
            }
        }
        let mut names = Vec::new();
        let mut first = vec![0usize; n];
        for v in 0..n {
            first[v] = names.len();
            if top[v] <= 1 {
                names.push(self.names[v].clone());
            } else {
                for k in 0..top[v] {
                    names.push(format!("{}{}", self.names[v], suffix(k as usize)));
                }
            }
        }
        let first = &first;
        let gens = self
            .gens
            .iter()
            .map(|g| Monomial::from_pairs(g.exponents().iter().flat_map(|&(v, e)| (0..e as usize).map(move |k| (first[v] + k, 1)))))
            .collect();
        MonomialIdeal { names, gens }
    }

    /// Generators have pairwise disjoint supports.
    pub fn is_complete_intersection(&self) -> bool {
        let s = self.supports();
        (0..s.len()).all(|i| (i + 1..s.len()).all(|j| s[i] & s[j] == 0))
    }

    /// Radical of a monomial ideal: generated by the supports.
    pub fn radical(&self) -> Self {
        let s = self.supports();
        MonomialIdeal::squarefree(self.nvars(), &s).renamed(self.names.clone())
    }

    fn renamed(mut self, names: Vec<String>) -> Self {
        self.names = names;
        self
    }

    /// The complex whose Stanley-Reisner ideal is `I`.
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        self.check_ground()?;
        Ok(SimplicialComplex::from_nonfaces(self.names.clone(), &self.supports()))
    }

    fn check_ground(&self) -> Result<()> {
        if self.nvars() > bits::MAX_GROUND {
            return Err(Error::Bound {
                what: "variables",
                limit: bits::MAX_GROUND,
                got: self.nvars(),
            });
        }
        Ok(())
    }

    /// Number of monomials of degree `s` lying in `I`.
    pub fn count_in_degree(&self, s: u32) -> u64 {
        monomials_of_degree(self.nvars(), s).filter(|m| self.contains(m)).count() as u64
    }

    /// Number of standard monomials (not in `I`) of degree `s`.
    pub fn count_standard(&self, s: u32) -> u64 {
        monomials_of_degree(self.nvars(), s).filter(|m| !self.contains(m)).count() as u64
    }

    pub fn render(&self) -> String {
        if self.gens.is_empty() {
            return "(0)".into();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.render(&self.names)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn suffix(k: usize) -> String {
    let letters = b"abcdefghijklmnopqrstuvwxyz";
    if k < letters.len() {
        (letters[k] as char).to_string()
    } else {
        format!("_{}", k + 1)
    }
}

/// All monomials of degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> impl Iterator<Item = Monomial> {
    let mut cur: Option<Vec<u32>> = if n == 0 {
        (d == 0).then(Vec::new)
    } else {
        let mut v = vec![0u32; n];
        v[n - 1] = d;
        Some(v)
    };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let v = cur.as_mut().unwrap();
        // next composition of d into n parts: move one unit leftwards
        let mut advanced = false;
        if n > 0 {
            let mut i = n - 1;
            while i > 0 {
                if v[i] > 0 {
                    let rest = v[i] - 1;
                    v[i] = 0;
                    v[i - 1] += 1;
                    v[n - 1] = rest;
                    advanced = true;
                    break;
                }
                i -= 1;
            }
        }
        if !advanced {
            cur = None;
        }
        Some(Monomial::from_dense(&out))
    })
}

/// Stanley-Reisner ideal: generated by the minimal non-faces.
pub fn stanley_reisner_ideal(delta: &SimplicialComplex) -> MonomialIdeal {
    MonomialIdeal::squarefree(delta.n_vertices(), &delta.minimal_nonfaces()).renamed(x_names(delta))
}

/// Facet ideal: generated by the facets.
/// `I_<(X)`: the Stanley-Reisner ideal of the broken-circuit complex.
pub fn broken_circuit_ideal(x: &Matroid, order: &ElementOrder) -> Result<MonomialIdeal> {
    Ok(stanley_reisner_ideal(&bc_complex(x, order)?))
}

pub fn facet_ideal(delta: &SimplicialComplex) -> MonomialIdeal {
    MonomialIdeal::squarefree(delta.n_vertices(), delta.facets()).renamed(x_names(delta))
}

fn x_names(delta: &SimplicialComplex) -> Vec<String> {
    delta.vertices().iter().map(|v| format!("x{v}")).collect()
}

/// Outcome of a search for a generator order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "order", rename_all = "kebab-case")]
pub enum OrderSearch {
    /// An order (indices into the stored generators) with the property.
    Found(Vec<usize>),
    /// No order has the property; the search was exhaustive.
    None,
    /// The heuristic failed beyond the exhaustive bound.
    Inconclusive,
}

impl OrderSearch {
    pub fn found(&self) -> Option<&[usize]> {
        match self {
            OrderSearch::Found(o) => Some(o),
            _ => None,
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            OrderSearch::Found(_) => Some(true),
            OrderSearch::None => Some(false),
            OrderSearch::Inconclusive => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientsReport {
    pub linear_quotients: OrderSearch,
    pub graded_linear_quotients: OrderSearch,
    /// Generators pairwise coprime, the only way monomials form a regular sequence.
    pub regular_sequence: bool,
    pub exhaustive: bool,
}

/// Generator counts up to this bound are searched exhaustively.
pub const EXHAUSTIVE_ORDER_LIMIT: usize = 16;

#[derive(Clone, Copy)]
enum QuotientKind {
    Linear,
    Graded,
}

/// Does `(placed) : g` satisfy the property? `placed` is a bitmask of generator indices.
fn colon_ok(gens: &[Monomial], placed: u64, g: usize, kind: QuotientKind) -> bool {
    if placed == 0 {
        return true;
    }
    let q: Vec<Monomial> = bits::elems(placed).map(|j| gens[j].strip(&gens[g])).collect();
    let linear_vars: u64 = q.iter().filter(|m| m.degree() == 1).fold(0, |a, m| a | m.support());
    match kind {
        QuotientKind::Graded => linear_vars != 0,
        QuotientKind::Linear => q.iter().all(|m| m.support() & linear_vars != 0),
    }
}

fn search_order(gens: &[Monomial], kind: QuotientKind) -> OrderSearch {
    let m = gens.len();
    if m <= 1 {
        return OrderSearch::Found((0..m).collect());
    }
    let listed: Vec<usize> = (0..m).collect();
    if order_ok(gens, &listed, kind) {
        return OrderSearch::Found(listed);
    }
    if m <= EXHAUSTIVE_ORDER_LIMIT {
        // reach[S]: the generators in S can be placed first in some good order;
        // the colon of a placed set by the next generator depends only on the set.
        let size = 1usize << m;
        let mut reach = vec![false; size];
        let mut last = vec![u8::MAX; size];
        reach[0] = true;
        for s in 1..size {
            for g in bits::elems(s as u64) {
                let prev = s & !(1usize << g);
                if reach[prev] && colon_ok(gens, prev as u64, g, kind) {
                    reach[s] = true;
                    last[s] = g as u8;
                    break;
                }
            }
        }
        if !reach[size - 1] {
            return OrderSearch::None;
        }
        let mut order = Vec::with_capacity(m);
        let mut s = size - 1;
        while s != 0 {
            let g = last[s] as usize;
            order.push(g);
            s &= !(1usize << g);
        }
        order.reverse();
        return OrderSearch::Found(order);
    }
    greedy_order(gens, kind)
}

fn order_ok(gens: &[Monomial], order: &[usize], kind: QuotientKind) -> bool {
    let mut placed = 0u64;
    for &g in order {
        if !colon_ok(gens, placed, g, kind) {
            return false;
        }
        placed |= bit(g);
    }
    true
}

/// Extend `order` greedily; false if no admissible generator remains at some step.
fn greedy_extend(gens: &[Monomial], candidates: &[usize], order: &mut Vec<usize>, kind: QuotientKind) -> bool {
    let mut placed = order.iter().fold(0u64, |a, &g| a | bit(g));
    while order.len() < gens.len() {
        match candidates
            .iter()
            .copied()
            .find(|&g| placed & bit(g) == 0 && colon_ok(gens, placed, g, kind))
        {
            Some(g) => {
                order.push(g);
                placed |= bit(g);
            }
            None => return false,
        }
    }
    true
}

/// Smallest degree first, ties by lexicographic support, with one level of
/// backtracking at the point where the greedy run gets stuck.
fn greedy_order(gens: &[Monomial], kind: QuotientKind) -> OrderSearch {
    if gens.len() > bits::MAX_GROUND {
        return OrderSearch::Inconclusive;
    }
    let mut candidates: Vec<usize> = (0..gens.len()).collect();
    candidates.sort_by(|&a, &b| {
        let (ga, gb) = (&gens[a], &gens[b]);
        ga.degree()
            .cmp(&gb.degree())
            .then_with(|| lex_support(ga).cmp(&lex_support(gb)))
    });
    let mut order = Vec::new();
    if greedy_extend(gens, &candidates, &mut order, kind) {
        return OrderSearch::Found(order);
    }
    let Some(undone) = order.pop() else {
        return OrderSearch::Inconclusive;
    };
    let placed = order.iter().fold(0u64, |a, &g| a | bit(g));
    for &alt in &candidates {
        if alt == undone || placed & bit(alt) != 0 || !colon_ok(gens, placed, alt, kind) {
            continue;
        }
        let mut attempt = order.clone();
        attempt.push(alt);
        if greedy_extend(gens, &candidates, &mut attempt, kind) {
            return OrderSearch::Found(attempt);
        }
    }
    OrderSearch::Inconclusive
}

fn lex_support(m: &Monomial) -> Vec<usize> {
    m.exponents().iter().map(|&(v, _)| v).collect()
}

pub fn quotients_analysis(ideal: &MonomialIdeal) -> QuotientsReport {
    let gens = ideal.gens();
    QuotientsReport {
        linear_quotients: search_order(gens, QuotientKind::Linear),
        graded_linear_quotients: search_order(gens, QuotientKind::Graded),
        regular_sequence: ideal.is_complete_intersection(),
        exhaustive: gens.len() <= EXHAUSTIVE_ORDER_LIMIT,
    }
}

/// The colon ideals `J_l = (g_1, ..., g_{l-1}) : g_l` for `l = 2..=m` along `order`.
pub fn colon_sequence(ideal: &MonomialIdeal, order: &[usize]) -> Vec<MonomialIdeal> {
    let gens = ideal.gens();
    (1..order.len())
        .map(|l| {
            let prefix: Vec<Monomial> = order[..l].iter().map(|&i| gens[i].clone()).collect();
            ideal.derived(prefix).colon(&gens[order[l]])
        })
        .collect()
}

/// Inclusion test used by property checks: every generator of `a` lies in `b`.
pub fn is_contained(a: &MonomialIdeal, b: &MonomialIdeal) -> bool {
    a.gens().iter().all(|g| b.contains(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(n: usize, sets: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::squarefree(n, &sets.iter().map(|s| bits::from_elems(s.iter().map(|&e| e - 1))).collect::<Vec<_>>())
    }

    fn mono(pairs: &[(usize, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().map(|&(v, e)| (v - 1, e)))
    }

    fn golden() -> MonomialIdeal {
        sq(6, &[&[5, 6], &[2, 3, 6], &[2, 3, 4, 5]])
    }

    #[test]
    fn rendering_and_minimality() {
        assert_eq!(golden().to_string(), "(x5x6, x2x3x6, x2x3x4x5)");
        let i = MonomialIdeal::new(3, vec![mono(&[(1, 1), (2, 1)]), mono(&[(1, 1)]), mono(&[(3, 2)])]).unwrap();
        assert_eq!(i.to_string(), "(x1, x3^2)");
        assert_eq!(MonomialIdeal::zero(3).to_string(), "(0)");
    }

    #[test]
    fn stanley_reisner_and_facets() {
        let c = SimplicialComplex::from_facets(crate::matroid::default_labels(4), vec![0b0011, 0b0101, 0b1001]).unwrap();
        assert_eq!(stanley_reisner_ideal(&c), sq(4, &[&[2, 3], &[2, 4], &[3, 4]]));
        assert_eq!(facet_ideal(&c), sq(4, &[&[1, 2], &[1, 3], &[1, 4]]));
        assert!(stanley_reisner_ideal(&SimplicialComplex::simplex(crate::matroid::default_labels(3))).is_zero());
    }

    #[test]
    fn complex_of_ideal() {
        let c = sq(2, &[&[1, 2]]).to_complex().unwrap();
        assert_eq!(c.facets(), &[1, 2]);
        let c = sq(4, &[&[2, 3], &[2, 4], &[3, 4]]).to_complex().unwrap();
        assert_eq!(c.facets(), &[0b0011, 0b0101, 0b1001]);
        assert_eq!(MonomialIdeal::zero(3).to_complex().unwrap().facets(), &[0b111]);
        let sq2 = MonomialIdeal::new(1, vec![mono(&[(1, 2)])]).unwrap();
        assert_eq!(sq2.to_complex(), Err(Error::NotSquarefree));
    }

    #[test]
    fn colons() {
        let a = sq(6, &[&[5, 6]]);
        assert_eq!(a.colon(&mono(&[(2, 1), (3, 1), (6, 1)])), sq(6, &[&[5]]));
        let b = sq(6, &[&[5, 6], &[2, 3, 6]]);
        assert_eq!(b.colon(&mono(&[(2, 1), (3, 1), (4, 1), (5, 1)])), sq(6, &[&[6]]));
        assert_eq!(golden().colon(&Monomial::one()), golden());
        assert!(golden().colon(&mono(&[(5, 1), (6, 1)])).is_unit());
    }

    #[test]
    fn quotient_orders() {
        let r = quotients_analysis(&golden());
        assert_eq!(r.linear_quotients, OrderSearch::Found(vec![0, 1, 2]));
        assert!(!r.regular_sequence);
        let r = quotients_analysis(&sq(4, &[&[2, 3], &[2, 4], &[3, 4]]));
        assert!(r.linear_quotients.found().is_some());
        let r = quotients_analysis(&sq(3, &[&[1, 2, 3]]));
        assert_eq!(r.linear_quotients, OrderSearch::Found(vec![0]));
        // two disjoint edges: the colon is generated in degree 2 whatever the order
        let r = quotients_analysis(&sq(4, &[&[1, 2], &[3, 4]]));
        assert_eq!(r.linear_quotients, OrderSearch::None);
        assert_eq!(r.graded_linear_quotients, OrderSearch::None);
        assert!(r.regular_sequence);
    }

    #[test]
    fn reordering_is_found() {
        // listed order fails ((x1x2):(x3x4) = (x1x2)), but x2x3 placed second fixes it
        let i = sq(4, &[&[1, 2], &[3, 4], &[2, 3]]);
        let r = quotients_analysis(&i);
        let order = r.linear_quotients.found().unwrap().to_vec();
        for j in colon_sequence(&i, &order) {
            assert!(j.gens().iter().all(|g| g.degree() == 1));
        }
    }

    #[test]
    fn complete_intersections() {
        assert!(sq(4, &[&[1, 2], &[3, 4]]).is_complete_intersection());
        assert!(!sq(4, &[&[2, 3], &[2, 4], &[3, 4]]).is_complete_intersection());
        assert!(!golden().is_complete_intersection());
    }

    #[test]
    fn polarization() {
        let i = MonomialIdeal::new(1, vec![mono(&[(1, 2)])]).unwrap();
        assert_eq!(i.polarize().to_string(), "(x1ax1b)");
        assert_eq!(golden().polarize(), golden());
        let i = MonomialIdeal::new(2, vec![mono(&[(1, 2)]), mono(&[(1, 1), (2, 1)])]).unwrap();
        let p = i.polarize();
        assert_eq!(p.to_string(), "(x1ax1b, x1ax2)");
        assert_eq!(p.nvars(), 3);
    }

    #[test]
    fn components() {
        assert_eq!(golden().component(2), sq(6, &[&[5, 6]]));
        let c3 = golden().component(3);
        let expected = MonomialIdeal::new(
            6,
            vec![
                mono(&[(2, 1), (3, 1), (6, 1)]),
                mono(&[(1, 1), (5, 1), (6, 1)]),
                mono(&[(2, 1), (5, 1), (6, 1)]),
                mono(&[(3, 1), (5, 1), (6, 1)]),
                mono(&[(4, 1), (5, 1), (6, 1)]),
                mono(&[(5, 2), (6, 1)]),
                mono(&[(5, 1), (6, 2)]),
            ],
        )
        .unwrap();
        assert_eq!(c3, expected);
        assert!(golden().component(1).is_zero());
    }

    #[test]
    fn powers() {
        let i = sq(2, &[&[1, 2]]);
        assert_eq!(i.power(2).to_string(), "(x1^2x2^2)");
        let p = sq(4, &[&[2, 3], &[2, 4], &[3, 4]]).power(2);
        assert_eq!(p.gens().len(), 6);
        assert!(p.gens().iter().all(|g| g.degree() == 4));
        assert_eq!(golden().power(1), golden());
    }

    #[test]
    fn degree_counts() {
        let i = sq(4, &[&[2, 3], &[2, 4], &[3, 4]]);
        assert_eq!(i.count_in_degree(2), 3);
        assert_eq!(sq(4, &[&[1, 2], &[3, 4]]).count_in_degree(2), 2);
        assert_eq!(monomials_of_degree(3, 2).count(), 6);
        assert_eq!(monomials_of_degree(0, 0).count(), 1);
        assert_eq!(monomials_of_degree(0, 2).count(), 0);
        let standard: Vec<u64> = (0..5).map(|s| i.count_standard(s)).collect();
        assert_eq!(standard, vec![1, 4, 7, 10, 13]);
    }
}
