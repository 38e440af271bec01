//! Graded Betti tables of monomial ideals.
//!
//! Three independent routes are provided:
//! * Hochster's formula for squarefree ideals, summing reduced homology of
//!   induced subcomplexes over the lcm lattice;
//! * the Taylor complex tensored with the field, grouped by multidegree
//!   (a brute-force oracle for at most twelve generators);
//! * upper Koszul simplicial complexes `K^b` for arbitrary monomial ideals,
//!   with multidegrees `b` restricted to the lcm lattice.
//!
//! Tables are for the ideal `I`, not the quotient `A/I`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{self, bit, len};
use crate::complex::{faces_avoiding, reduced_homology_of_faces};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::{self, Characteristic};
use crate::poly::Poly;

pub const TAYLOR_GENERATOR_LIMIT: usize = 12;
pub const LCM_LATTICE_LIMIT: usize = 1 << 20;
pub const BOX_LIMIT: usize = 1 << 21;
pub const KOSZUL_WORK_LIMIT: usize = 1 << 27;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BettiRepr", from = "BettiRepr")]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), u64>,
    characteristic: Characteristic,
}

#[derive(Serialize, Deserialize)]
struct BettiRepr {
    characteristic: Characteristic,
    /// `(i, j, beta_{i,j})`, sorted.
    entries: Vec<(usize, u32, u64)>,
}

impl From<BettiTable> for BettiRepr {
    fn from(t: BettiTable) -> Self {
        BettiRepr {
            characteristic: t.characteristic,
            entries: t.entries.into_iter().map(|((i, j), v)| (i, j, v)).collect(),
        }
    }
}

impl From<BettiRepr> for BettiTable {
    fn from(r: BettiRepr) -> Self {
        let mut t = BettiTable::new(r.characteristic);
        for (i, j, v) in r.entries {
            t.add(i, j, v);
        }
        t
    }
}

impl BettiTable {
    pub fn new(characteristic: Characteristic) -> Self {
        BettiTable {
            entries: BTreeMap::new(),
            characteristic,
        }
    }

    pub fn from_entries(characteristic: Characteristic, entries: &[(usize, u32, u64)]) -> Self {
        let mut t = BettiTable::new(characteristic);
        for &(i, j, v) in entries {
            t.add(i, j, v);
        }
        t
    }

    pub fn add(&mut self, i: usize, j: u32, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_default() += v;
        }
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn characteristic(&self) -> Characteristic {
        self.characteristic
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    /// Row indices `j - i` of nonzero entries.
    pub fn rows(&self) -> BTreeSet<u32> {
        self.entries.keys().map(|&(i, j)| j - i as u32).collect()
    }

    pub fn regularity(&self) -> Option<u32> {
        self.rows().into_iter().max()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `Σ (-1)^i β_{i,j} t^j`, the numerator of the Hilbert series of `I` over `(1-t)^n`.
    pub fn alternating_numerator(&self) -> Poly {
        let top = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0) as usize;
        let mut c = vec![0i64; top + 1];
        for (i, j, v) in self.entries() {
            c[j as usize] += if i % 2 == 0 { v as i64 } else { -(v as i64) };
        }
        Poly::new(c)
    }

    /// Conventional grid: columns are `i`, rows are `j - i`.
    pub fn render(&self) -> String {
        if self.is_empty() {
            return "0 (zero ideal)".into();
        }
        let rows = self.rows();
        let cols = self.projective_dimension().unwrap_or(0) + 1;
        let cell = |i: usize, r: u32| -> String {
            match self.get(i, r + i as u32) {
                0 => ".".into(),
                v => v.to_string(),
            }
        };
        let lo = *rows.iter().next().unwrap();
        let hi = *rows.iter().last().unwrap();
        let width = (lo..=hi)
            .flat_map(|r| (0..cols).map(move |i| (i, r)))
            .map(|(i, r)| cell(i, r).len())
            .chain((0..cols).map(|i| i.to_string().len()))
            .max()
            .unwrap_or(1);
        let label_w = hi.to_string().len();
        let mut out = String::new();
        out.push_str(&" ".repeat(label_w + 1));
        for i in 0..cols {
            out.push_str(&format!(" {:>width$}", i));
        }
        out.push('\n');
        for r in lo..=hi {
            out.push_str(&format!("{:>label_w$}:", r));
            for i in 0..cols {
                out.push_str(&format!(" {:>width$}", cell(i, r)));
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LinearityKind {
    /// The zero ideal: vacuously linear.
    Zero,
    Linear { s: u32 },
    GradedLinear,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearityVerdict {
    pub kind: LinearityKind,
    pub rows: Vec<u32>,
    /// The lenient reading: consecutive rows, no condition within a row.
    pub consecutive_rows: bool,
}

impl LinearityVerdict {
    pub fn is_linear(&self) -> bool {
        matches!(self.kind, LinearityKind::Zero | LinearityKind::Linear { .. })
    }

    pub fn linear_degree(&self) -> Option<u32> {
        match self.kind {
            LinearityKind::Linear { s } => Some(s),
            _ => None,
        }
    }

    /// Strict graded linearity (linear tables count as graded linear).
    pub fn is_graded_linear(&self) -> bool {
        !matches!(self.kind, LinearityKind::None)
    }

    pub fn label(&self) -> String {
        match &self.kind {
            LinearityKind::Zero => "zero ideal (vacuously linear)".into(),
            LinearityKind::Linear { s } => format!("{s}-linear"),
            LinearityKind::GradedLinear => format!("graded-linear with rows {:?}", self.rows),
            LinearityKind::None => format!("not graded-linear (rows {:?})", self.rows),
        }
    }
}

pub fn classify_linearity(table: &BettiTable) -> LinearityVerdict {
    let rows: Vec<u32> = table.rows().into_iter().collect();
    let consecutive_rows = rows.windows(2).all(|w| w[1] == w[0] + 1);
    let kind = if rows.is_empty() {
        LinearityKind::Zero
    } else if rows.len() == 1 {
        LinearityKind::Linear { s: rows[0] }
    } else {
        let per_row_ok = rows.iter().all(|&r| {
            let cols: Vec<usize> = table.entries().filter(|&(i, j, _)| j - i as u32 == r).map(|(i, _, _)| i).collect();
            cols.windows(2).all(|w| w[1] == w[0] + 1)
        });
        if consecutive_rows && per_row_ok {
            LinearityKind::GradedLinear
        } else {
            LinearityKind::None
        }
    };
    LinearityVerdict {
        kind,
        rows,
        consecutive_rows,
    }
}

fn unit_table(ch: Characteristic) -> BettiTable {
    BettiTable::from_entries(ch, &[(0, 0, 1)])
}

/// Hochster's formula: `β_{i,σ}(I_Δ) = dim H̃_{|σ|-i-2}(Δ|σ)`.
pub fn betti_hochster(ideal: &MonomialIdeal, ch: Characteristic) -> Result<BettiTable> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if ideal.is_unit() {
        return Ok(unit_table(ch));
    }
    if ideal.nvars() > bits::MAX_GROUND {
        return Err(Error::Bound {
            what: "variables",
            limit: bits::MAX_GROUND,
            got: ideal.nvars(),
        });
    }
    let supports = ideal.supports();
    let lattice = union_closure(&supports)?;
    let homologies: Vec<(u64, Vec<usize>)> = lattice
        .par_iter()
        .map(|&sigma| (sigma, reduced_homology_of_faces(&faces_avoiding(sigma, &supports), ch)))
        .collect();
    let mut table = BettiTable::new(ch);
    for (sigma, h) in homologies {
        let size = len(sigma);
        for (k, &rank) in h.iter().enumerate() {
            // h[k] is the rank in dimension k - 1, so i = |σ| - (k - 1) - 2
            if let Some(i) = (size + 1).checked_sub(k + 2) {
                table.add(i, size as u32, rank as u64);
            }
        }
    }
    Ok(table)
}

/// All nonempty unions of the given sets.
fn union_closure(sets: &[u64]) -> Result<Vec<u64>> {
    let mut seen: std::collections::HashSet<u64> = std::collections::HashSet::new();
    let mut all: Vec<u64> = Vec::new();
    for &s in sets {
        let mut fresh = Vec::new();
        if seen.insert(s) {
            fresh.push(s);
        }
        for &t in &all {
            if seen.insert(s | t) {
                fresh.push(s | t);
            }
        }
        all.extend(fresh);
        if all.len() > LCM_LATTICE_LIMIT {
            return Err(Error::Bound {
                what: "lcm lattice",
                limit: LCM_LATTICE_LIMIT,
                got: all.len(),
            });
        }
    }
    all.sort_unstable();
    Ok(all)
}

/// Betti numbers from the Taylor complex: in multidegree `b`, the strand spanned
/// by generator subsets `F` with `lcm(F) = b`, in homological degree `|F| - 1`,
/// where only faces `F \ g` with the same lcm survive the differential.
pub fn betti_taylor_oracle(ideal: &MonomialIdeal, ch: Characteristic) -> Result<BettiTable> {
    let m = ideal.gens().len();
    if m > TAYLOR_GENERATOR_LIMIT {
        return Err(Error::Bound {
            what: "Taylor oracle generators",
            limit: TAYLOR_GENERATOR_LIMIT,
            got: m,
        });
    }
    let n = ideal.nvars();
    let dense: Vec<Vec<u32>> = ideal.gens().iter().map(|g| g.dense(n)).collect();
    let mut lcms: Vec<Vec<u32>> = vec![vec![0; n]; 1 << m];
    let mut groups: HashMap<Vec<u32>, Vec<u64>> = HashMap::new();
    for f in 1usize..(1 << m) {
        let g = f.trailing_zeros() as usize;
        let rest = f & (f - 1);
        let l: Vec<u32> = (0..n).map(|v| lcms[rest][v].max(dense[g][v])).collect();
        lcms[f] = l.clone();
        groups.entry(l).or_default().push(f as u64);
    }
    let strands: Vec<(u32, Vec<usize>)> = groups
        .into_par_iter()
        .map(|(b, members)| {
            let degree: u32 = b.iter().sum();
            let top = members.iter().map(|&f| len(f)).max().unwrap_or(0);
            let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
            for &f in &members {
                by_size[len(f)].push(f);
            }
            let ranks: Vec<usize> = (0..=top + 1)
                .map(|k| {
                    if k < 2 || k > top {
                        0
                    } else {
                        strand_boundary_rank(&by_size[k], &by_size[k - 1], ch)
                    }
                })
                .collect();
            let homology = (1..=top).map(|k| by_size[k].len() - ranks[k] - ranks[k + 1]).collect();
            (degree, homology)
        })
        .collect();
    let mut table = BettiTable::new(ch);
    for (degree, homology) in strands {
        for (i, &h) in homology.iter().enumerate() {
            table.add(i, degree, h as u64);
        }
    }
    Ok(table)
}

fn strand_boundary_rank(upper: &[u64], lower: &[u64], ch: Characteristic) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let rows: Vec<Vec<i64>> = upper
        .iter()
        .map(|&f| {
            let mut row = vec![0i64; lower.len()];
            for (pos, g) in bits::elems(f).enumerate() {
                if let Some(&j) = index.get(&(f & !bit(g))) {
                    row[j] = if pos % 2 == 0 { 1 } else { -1 };
                }
            }
            row
        })
        .collect();
    linalg::rank(&rows, ch)
}

/// Betti numbers of an arbitrary monomial ideal via `β_{i,b} = dim H̃_{i-1}(K^b)`,
/// `K^b = {τ ⊆ supp b squarefree : x^{b-τ} ∈ I}`.
pub fn betti_koszul(ideal: &MonomialIdeal, ch: Characteristic) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Ok(BettiTable::new(ch));
    }
    if ideal.is_unit() {
        return Ok(unit_table(ch));
    }
    let n = ideal.nvars();
    let dense: Vec<Vec<u32>> = ideal.gens().iter().map(|g| g.dense(n)).collect();
    let active: Vec<usize> = (0..n).filter(|&v| dense.iter().any(|g| g[v] > 0)).collect();
    let k = active.len();
    if k > bits::MAX_GROUND {
        return Err(Error::Bound {
            what: "variables",
            limit: bits::MAX_GROUND,
            got: k,
        });
    }
    let top: Vec<usize> = active.iter().map(|&v| dense.iter().map(|g| g[v]).max().unwrap() as usize).collect();
    let mut stride = vec![1usize; k];
    let mut size = 1usize;
    for (a, &t) in top.iter().enumerate() {
        stride[a] = size;
        size = size.checked_mul(t + 1).filter(|&s| s <= BOX_LIMIT).ok_or(Error::Bound {
            what: "multidegree box",
            limit: BOX_LIMIT,
            got: usize::MAX,
        })?;
    }
    let coords = |mut idx: usize| -> Vec<usize> {
        (0..k)
            .map(|a| {
                let c = idx % (top[a] + 1);
                idx /= top[a] + 1;
                c
            })
            .collect()
    };
    let mut is_gen = vec![false; size];
    for g in &dense {
        let idx: usize = active.iter().enumerate().map(|(a, &v)| g[v] as usize * stride[a]).sum();
        is_gen[idx] = true;
    }
    // In increasing index order every b - e_a is visited before b.
    let mut in_ideal = vec![false; size];
    let mut attained = vec![0u64; size];
    for idx in 0..size {
        let c = coords(idx);
        let mut inside = is_gen[idx];
        let mut att = 0u64;
        if is_gen[idx] {
            att = (0..k).filter(|&a| c[a] > 0).fold(0, |m, a| m | bit(a));
        }
        for a in 0..k {
            if c[a] > 0 {
                let prev = idx - stride[a];
                inside |= in_ideal[prev];
                att |= attained[prev] & !bit(a);
            }
        }
        in_ideal[idx] = inside;
        attained[idx] = att;
    }
    let lattice: Vec<(usize, u64)> = (0..size)
        .filter_map(|idx| {
            let c = coords(idx);
            let supp = (0..k).filter(|&a| c[a] > 0).fold(0u64, |m, a| m | bit(a));
            (in_ideal[idx] && attained[idx] == supp).then_some((idx, supp))
        })
        .collect();
    let work: usize = lattice.iter().map(|&(_, s)| 1usize << len(s).min(40)).sum();
    if work > KOSZUL_WORK_LIMIT {
        return Err(Error::Bound {
            what: "Koszul complex faces",
            limit: KOSZUL_WORK_LIMIT,
            got: work,
        });
    }
    let parts: Vec<(u32, Vec<usize>)> = lattice
        .par_iter()
        .map(|&(idx, supp)| {
            let c = coords(idx);
            let degree = c.iter().sum::<usize>() as u32;
            let elems: Vec<usize> = bits::elems(supp).collect();
            let mut faces = Vec::new();
            let mut stack: Vec<(u64, usize, usize)> = vec![(0, 0, idx)];
            while let Some((tau, next, cell)) = stack.pop() {
                faces.push(tau);
                for (p, &a) in elems.iter().enumerate().skip(next) {
                    let below = cell - stride[a];
                    if in_ideal[below] {
                        stack.push((tau | bit(a), p + 1, below));
                    }
                }
            }
            (degree, reduced_homology_of_faces(&faces, ch))
        })
        .collect();
    let mut table = BettiTable::new(ch);
    for (degree, h) in parts {
        for (i, &r) in h.iter().enumerate() {
            table.add(i, degree, r as u64);
        }
    }
    Ok(table)
}

/// Default route: Hochster for squarefree ideals, Koszul complexes otherwise.
pub fn betti_table(ideal: &MonomialIdeal, ch: Characteristic) -> Result<BettiTable> {
    if ideal.is_squarefree() && ideal.nvars() <= 24 {
        betti_hochster(ideal, ch)
    } else {
        betti_koszul(ideal, ch)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCertificate {
    pub degree: u32,
    pub generators: usize,
    /// `None` when the Betti computation hit a bound.
    pub verdict: Option<LinearityVerdict>,
    pub linear: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentwiseReport {
    /// `None` means inconclusive.
    pub holds: Option<bool>,
    pub regularity: Option<u32>,
    pub certificates: Vec<ComponentCertificate>,
    /// Degrees above the top generator degree, up to this one, follow from the last certificate.
    pub implied_through: Option<u32>,
}

/// The ideal generated by `I_d` must have a `d`-linear table for every `d`.
///
/// Degrees are checked upward from the initial degree and the scan stops at
/// the first component that is not linear. Above the top generator degree `D`
/// the component is `m^(d-D) I_<D>`, and `reg(J_{>=k}) = max(reg J, k)` makes it
/// linear as soon as `I_<D>` is, so degrees `D+1..=max(D, reg I)` are recorded
/// as implied rather than recomputed.
pub fn componentwise_linear_check(ideal: &MonomialIdeal, ch: Characteristic) -> ComponentwiseReport {
    let (Some(lo), Some(top)) = (ideal.indeg(), ideal.max_degree()) else {
        return ComponentwiseReport {
            holds: Some(true),
            regularity: None,
            certificates: Vec::new(),
            implied_through: None,
        };
    };
    let regularity = betti_table(ideal, ch).ok().and_then(|t| t.regularity());
    let mut certificates = Vec::new();
    let mut holds = Some(true);
    for d in lo..=top {
        let comp = ideal.component(d);
        let verdict = betti_table(&comp, ch).ok().map(|t| classify_linearity(&t));
        let linear = verdict.as_ref().map(|v| v.linear_degree() == Some(d));
        certificates.push(ComponentCertificate {
            degree: d,
            generators: comp.gens().len(),
            verdict,
            linear,
        });
        match linear {
            Some(true) => {}
            Some(false) => {
                holds = Some(false);
                break;
            }
            None => holds = None,
        }
    }
    let implied_through = match (holds, regularity) {
        (Some(true), Some(r)) if r > top => Some(r),
        _ => None,
    };
    ComponentwiseReport {
        holds,
        regularity,
        certificates,
        implied_through,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Monomial;

    fn sq(n: usize, sets: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::squarefree(n, &sets.iter().map(|s| bits::from_elems(s.iter().map(|&e| e - 1))).collect::<Vec<_>>())
    }

    const Z: Characteristic = Characteristic::ZERO;

    fn all_routes(i: &MonomialIdeal) -> BettiTable {
        let k = betti_koszul(i, Z).unwrap();
        assert_eq!(betti_taylor_oracle(i, Z).unwrap(), k);
        if i.is_squarefree() {
            assert_eq!(betti_hochster(i, Z).unwrap(), k);
        }
        k
    }

    #[test]
    fn small_tables() {
        assert_eq!(all_routes(&sq(2, &[&[1, 2]])), BettiTable::from_entries(Z, &[(0, 2, 1)]));
        let t = all_routes(&sq(4, &[&[2, 3], &[2, 4], &[3, 4]]));
        assert_eq!(t, BettiTable::from_entries(Z, &[(0, 2, 3), (1, 3, 2)]));
        assert_eq!(classify_linearity(&t).kind, LinearityKind::Linear { s: 2 });
        let t = all_routes(&sq(4, &[&[1, 2], &[3, 4]]));
        assert_eq!(t, BettiTable::from_entries(Z, &[(0, 2, 2), (1, 4, 1)]));
        assert!(all_routes(&MonomialIdeal::zero(3)).is_empty());
    }

    #[test]
    fn golden_table_is_graded_linear() {
        let t = all_routes(&sq(6, &[&[5, 6], &[2, 3, 6], &[2, 3, 4, 5]]));
        assert_eq!(t.get(0, 2), 1);
        assert_eq!(t.get(0, 3), 1);
        assert_eq!(t.get(0, 4), 1);
        let v = classify_linearity(&t);
        assert_eq!(v.kind, LinearityKind::GradedLinear);
        assert_eq!(v.rows, vec![2, 3, 4]);
    }

    #[test]
    fn classification_rules() {
        let gap = BettiTable::from_entries(Z, &[(0, 2, 1), (1, 6, 1)]);
        let v = classify_linearity(&gap);
        assert_eq!(v.kind, LinearityKind::None);
        assert_eq!(v.rows, vec![2, 5]);
        assert_eq!(classify_linearity(&BettiTable::new(Z)).kind, LinearityKind::Zero);
        // rows 2 and 3 but row 3 skips a column: fails strictly, passes leniently
        let holey = BettiTable::from_entries(Z, &[(0, 2, 1), (0, 3, 1), (2, 5, 1)]);
        let v = classify_linearity(&holey);
        assert_eq!(v.kind, LinearityKind::None);
        assert!(v.consecutive_rows);
    }

    #[test]
    fn non_squarefree_routes_agree() {
        let x = |v: usize, e: u32| Monomial::from_pairs([(v, e)]);
        let i = MonomialIdeal::new(2, vec![x(0, 2), x(0, 1).mul(&x(1, 1))]).unwrap();
        let t = all_routes(&i);
        assert_eq!(t, BettiTable::from_entries(Z, &[(0, 2, 2), (1, 3, 1)]));
        assert_eq!(betti_hochster(&i.polarize(), Z).unwrap(), t);
        let m3 = MonomialIdeal::maximal(3).power(2);
        let t = all_routes(&m3);
        assert_eq!(classify_linearity(&t).kind, LinearityKind::Linear { s: 2 });
        assert_eq!(t.get(0, 2), 6);
    }

    #[test]
    fn unit_ideal() {
        let u = MonomialIdeal::new(2, vec![Monomial::one()]).unwrap();
        assert_eq!(all_routes(&u), BettiTable::from_entries(Z, &[(0, 0, 1)]));
    }

    #[test]
    fn componentwise() {
        let r = componentwise_linear_check(&sq(6, &[&[5, 6], &[2, 3, 6], &[2, 3, 4, 5]]), Z);
        assert_eq!(r.holds, Some(true));
        let r = componentwise_linear_check(&sq(4, &[&[2, 3], &[2, 4], &[3, 4]]), Z);
        assert_eq!(r.holds, Some(true));
        assert_eq!(r.certificates.len(), 1);
        let r = componentwise_linear_check(&sq(4, &[&[1, 2], &[3, 4]]), Z);
        assert_eq!(r.holds, Some(false));
    }

    #[test]
    fn stable_ideal_with_a_row_gap() {
        // (x^2, x y^3) has linear quotients and is componentwise linear, yet
        // its Betti rows are {2, 4}: the strict graded-linear reading rejects it.
        let i = MonomialIdeal::new(
            2,
            vec![Monomial::from_pairs([(0, 2)]), Monomial::from_pairs([(0, 1), (1, 3)])],
        )
        .unwrap();
        let t = all_routes(&i);
        assert_eq!(t.rows().into_iter().collect::<Vec<_>>(), vec![2, 4]);
        assert_eq!(componentwise_linear_check(&i, Z).holds, Some(true));
        assert!(!classify_linearity(&t).is_graded_linear());
    }

    #[test]
    fn grid_rendering() {
        let t = BettiTable::from_entries(Z, &[(0, 2, 3), (1, 3, 2)]);
        assert_eq!(t.render(), "   0 1\n2: 3 2\n");
        assert_eq!(BettiTable::new(Z).render(), "0 (zero ideal)");
    }
}
