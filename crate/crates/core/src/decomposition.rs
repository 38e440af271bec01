//! Uniform-matroid decompositions, f-vector bounds, stratifications, and the
//! cross-validation battery that ties the algebraic and combinatorial
//! characterisations of (graded) linearity together.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::betti::{self, classify_linearity, ComponentwiseReport, LinearityVerdict};
use crate::bits::{self, bit, is_subset, len};
use crate::complex::{bc_complex, h_from_f, independence_complex};
use crate::error::{Error, Result};
use crate::hilbert::{self, h_binomial_fit, HFit, HilbertData, LinearValueReport};
use crate::ideal::{colon_sequence, quotients_analysis, stanley_reisner_ideal, MonomialIdeal, QuotientsReport};
use crate::linalg::Characteristic;
use crate::matroid::{ElementOrder, Matroid};
use crate::poly::binom;

/// Largest ground set accepted by [`stratify`].
pub const STRATIFY_LIMIT: usize = 12;

/// `X ≅ U_{s, n-r+s} ⊕ U_{r-s, r-s}`: the non-coloop part is uniform of rank `s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoTerm {
    pub s: usize,
    pub n: usize,
    pub r: usize,
    pub uniform_part: Vec<String>,
    pub coloops: Vec<String>,
}

fn require_loopless(x: &Matroid) -> Result<()> {
    match bits::min_elem(x.loops()) {
        Some(l) => Err(Error::LoopPresent(x.labels()[l].clone())),
        None => Ok(()),
    }
}

/// On the restriction to `block`: `Some((s, coloops))` when it is a uniform
/// matroid of rank `s` plus coloops.
fn two_term_on(x: &Matroid, block: u64) -> Option<(usize, u64)> {
    let inside: Vec<u64> = x.circuits().iter().copied().filter(|&c| is_subset(c, block)).collect();
    let covered = inside.iter().fold(0u64, |a, &c| a | c);
    let coloops = block & !covered;
    let s = x.rank(block) - len(coloops);
    inside.iter().all(|&c| len(c) == s + 1).then_some((s, coloops))
}

pub fn two_term_decomposition(x: &Matroid) -> Result<Option<TwoTerm>> {
    require_loopless(x)?;
    Ok(two_term_on(x, x.ground()).map(|(s, coloops)| TwoTerm {
        s,
        n: x.n(),
        r: x.full_rank(),
        uniform_part: x.labels_of(x.ground() & !coloops),
        coloops: x.labels_of(coloops),
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub k: usize,
    pub independent: u64,
    pub bound: i64,
    pub holds: bool,
    pub equal: bool,
}

/// `I_k ≥ Σ_{i<s} C(n-r+i-1, i) C(r-i, k-i)` for `k = 0..=r`.
pub fn fvector_bound_check(x: &Matroid, s: usize) -> Result<Vec<BoundRow>> {
    if x.min_circuit_size().is_some_and(|m| m <= s) {
        return Err(Error::Precondition(format!("some {s}-subset is dependent")));
    }
    let (n, r) = (x.n() as i64, x.full_rank() as i64);
    let profile = x.independence_profile();
    Ok((0..=r)
        .map(|k| {
            let bound: i64 = (0..s as i64)
                .map(|i| binom(n - r + i - 1, i) * binom(r - i, k - i))
                .sum();
            let independent = profile[k as usize];
            BoundRow {
                k: k as usize,
                independent,
                bound,
                holds: independent as i64 >= bound,
                equal: independent as i64 == bound,
            }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub s: usize,
    pub h: Vec<i64>,
    pub expected: Vec<i64>,
    pub holds: bool,
}

/// The h-vector of the independence complex equals `C(n-r+k-1, k)` up to `s`
/// and vanishes above it.
pub fn extremal_h_check(x: &Matroid, s: usize) -> Result<ExtremalReport> {
    require_loopless(x)?;
    let h = h_from_f(&x.independence_profile());
    let (n, r) = (x.n() as i64, x.full_rank() as i64);
    let expected: Vec<i64> = (0..=r)
        .map(|k| if k <= s as i64 { binom(n - r + k - 1, k) } else { 0 })
        .collect();
    Ok(ExtremalReport {
        s,
        holds: h == expected,
        h,
        expected,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiteralRow {
    pub j: usize,
    pub independent: u64,
    pub rhs: i64,
    pub holds: bool,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralizedBoundReport {
    /// `I_{j-1} ≥ Σ_{i<c} Σ_{l=1}^{d} c_l C(n-r+l-1, l) C(r-i, j-i)`, read literally
    /// with `c` the h-fit cutoff and `c_l` the `l`-th Hilbert coefficient.
    pub literal: Vec<LiteralRow>,
    pub literal_holds: bool,
    pub literal_equal: bool,
    /// The h-vector reading: fit of the broken-circuit h-vector.
    pub h_reading: HFit,
    pub h_reading_extremal: bool,
}

pub fn generalized_bound_check(x: &Matroid, coefficients: &[i64], h_fit: &HFit) -> Result<GeneralizedBoundReport> {
    require_loopless(x)?;
    let (n, r) = (x.n() as i64, x.full_rank() as i64);
    let profile = x.independence_profile();
    let d = coefficients.len() as i64;
    let inner: i64 = (1..=d)
        .map(|l| coefficients.get(l as usize).copied().unwrap_or(0) * binom(n - r + l - 1, l))
        .sum();
    let literal: Vec<LiteralRow> = (1..=r + 1)
        .map(|j| {
            let rhs: i64 = (0..h_fit.cutoff as i64).map(|i| inner * binom(r - i, j - i)).sum();
            let independent = profile[(j - 1) as usize];
            LiteralRow {
                j: j as usize,
                independent,
                rhs,
                holds: independent as i64 >= rhs,
                equal: independent as i64 == rhs,
            }
        })
        .collect();
    Ok(GeneralizedBoundReport {
        literal_holds: literal.iter().all(|row| row.holds),
        literal_equal: literal.iter().all(|row| row.equal),
        literal,
        h_reading_extremal: h_fit.fits && h_fit.c == [1],
        h_reading: h_fit.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub elements: Vec<String>,
    pub mask: u64,
    pub s: usize,
    pub r: usize,
    pub n: usize,
    pub coloops: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratification {
    /// Always "restriction": each stratum is the restriction to `E_j \ E_{j+1}`.
    pub semantics: String,
    /// `E_0 ⊃ E_1 ⊃ ... ⊃ E_{d-1}`, each nonempty.
    pub chain: Vec<Vec<String>>,
    pub strata: Vec<Stratum>,
    pub rank: usize,
    pub rank_sum: usize,
    /// `Σ r_j = r`, i.e. the strata are separators and `X` is their direct sum.
    pub rank_sum_matches: bool,
}

impl Stratification {
    pub fn depth(&self) -> usize {
        self.strata.len()
    }
}

/// Depth-first search for a chain of restrictions whose strata each split as a
/// uniform matroid plus coloops. Chains with `Σ r_j = r` are searched first;
/// otherwise any chain is returned (single elements always qualify) and the
/// mismatch is recorded.
pub fn stratify(x: &Matroid) -> Result<Option<Stratification>> {
    require_loopless(x)?;
    if x.n() > STRATIFY_LIMIT {
        return Err(Error::Bound {
            what: "stratification ground set",
            limit: STRATIFY_LIMIT,
            got: x.n(),
        });
    }
    let mut failed = HashSet::new();
    let blocks = match search_blocks(x, x.ground(), true, &mut failed) {
        Some(b) => b,
        None => {
            failed.clear();
            match search_blocks(x, x.ground(), false, &mut failed) {
                Some(b) => b,
                None => return Ok(None),
            }
        }
    };
    Ok(Some(assemble(x, &blocks)))
}

fn assemble(x: &Matroid, blocks: &[u64]) -> Stratification {
    let mut remaining = x.ground();
    let mut chain = Vec::new();
    let mut strata = Vec::new();
    for &b in blocks {
        chain.push(x.labels_of(remaining));
        let (s, coloops) = two_term_on(x, b).expect("search only keeps decomposable blocks");
        strata.push(Stratum {
            elements: x.labels_of(b),
            mask: b,
            s,
            r: x.rank(b),
            n: len(b),
            coloops: x.labels_of(coloops),
        });
        remaining &= !b;
    }
    let rank_sum = strata.iter().map(|s| s.r).sum();
    Stratification {
        semantics: "restriction".into(),
        chain,
        strata,
        rank: x.full_rank(),
        rank_sum,
        rank_sum_matches: rank_sum == x.full_rank(),
    }
}

fn components_within(x: &Matroid, set: u64) -> Vec<u64> {
    let mut comps: Vec<u64> = bits::elems(set).map(bit).collect();
    for &c in x.circuits().iter().filter(|&&c| is_subset(c, set)) {
        let (touching, rest): (Vec<u64>, Vec<u64>) = comps.into_iter().partition(|&k| k & c != 0);
        comps = rest;
        comps.push(touching.into_iter().fold(0, |a, k| a | k));
    }
    comps.sort_unstable_by_key(|&k| k.trailing_zeros());
    comps
}

fn search_blocks(x: &Matroid, rest: u64, separators_only: bool, failed: &mut HashSet<u64>) -> Option<Vec<u64>> {
    if rest == 0 {
        return Some(Vec::new());
    }
    if failed.contains(&rest) {
        return None;
    }
    let first = bit(rest.trailing_zeros() as usize);
    let mut candidates: Vec<u64> = if separators_only {
        let comps = components_within(x, rest);
        let own = comps.iter().copied().find(|&k| k & first != 0).unwrap();
        let others: Vec<u64> = comps.into_iter().filter(|&k| k != own).collect();
        (0u64..1 << others.len())
            .map(|pick| bits::elems(pick).fold(own, |a, i| a | others[i]))
            .collect()
    } else {
        bits::submasks(rest & !first).map(|t| t | first).collect()
    };
    candidates.sort_unstable_by_key(|&b| (std::cmp::Reverse(len(b)), b));
    for b in candidates {
        if two_term_on(x, b).is_none() {
            continue;
        }
        if let Some(mut tail) = search_blocks(x, rest & !b, separators_only, failed) {
            tail.insert(0, b);
            return Some(tail);
        }
    }
    failed.insert(rest);
    None
}

/// Independent re-check of a stratification from the circuits of `x`.
pub fn verify_stratification(x: &Matroid, st: &Stratification) -> bool {
    let mut union = 0u64;
    for (j, stratum) in st.strata.iter().enumerate() {
        let Ok(mask) = x.mask_of(&stratum.elements) else {
            return false;
        };
        if mask & union != 0 || mask == 0 {
            return false;
        }
        let remaining = x.ground() & !union;
        if x.mask_of(&st.chain[j]).ok() != Some(remaining) {
            return false;
        }
        union |= mask;
        let restricted = x.restrict(mask);
        let Ok(Some(cert)) = two_term_decomposition(&restricted) else {
            return false;
        };
        if cert.s != stratum.s || restricted.full_rank() != stratum.r || restricted.n() != stratum.n {
            return false;
        }
        // U_{s, n-r+s} ⊕ U_{r-s, r-s}
        if cert.coloops.len() != stratum.r - stratum.s || cert.uniform_part.len() != stratum.n - stratum.r + stratum.s {
            return false;
        }
    }
    union == x.ground() && st.strata.iter().map(|s| s.n).sum::<usize>() == x.n()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Confirmed,
    Refuted,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Equivalent,
    Implies,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub statement: String,
    pub relation: Relation,
    pub left: Option<bool>,
    pub right: Option<bool>,
    pub status: ClaimStatus,
    /// Reported for comparison only; a refutation here is a finding, not a failure.
    pub empirical: bool,
}

impl Claim {
    pub fn empirical(mut self) -> Self {
        self.empirical = true;
        self
    }

    pub fn equivalent(statement: &str, left: Option<bool>, right: Option<bool>) -> Self {
        let status = match (left, right) {
            (Some(a), Some(b)) if a == b => ClaimStatus::Confirmed,
            (Some(_), Some(_)) => ClaimStatus::Refuted,
            _ => ClaimStatus::Inconclusive,
        };
        Claim {
            statement: statement.into(),
            relation: Relation::Equivalent,
            left,
            right,
            status,
            empirical: false,
        }
    }

    pub fn implies(statement: &str, left: Option<bool>, right: Option<bool>) -> Self {
        let status = match (left, right) {
            (Some(false), _) | (_, Some(true)) => ClaimStatus::Confirmed,
            (Some(true), Some(false)) => ClaimStatus::Refuted,
            _ => ClaimStatus::Inconclusive,
        };
        Claim {
            statement: statement.into(),
            relation: Relation::Implies,
            left,
            right,
            status,
            empirical: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossOptions {
    pub characteristic: Characteristic,
    pub max_power: u32,
}

impl Default for CrossOptions {
    fn default() -> Self {
        CrossOptions {
            characteristic: Characteristic::ZERO,
            max_power: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerReport {
    pub k: u32,
    pub generators: usize,
    pub verdict: Option<LinearityVerdict>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Observation {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossReport {
    pub ideal: String,
    pub betti: Option<betti::BettiTable>,
    pub verdict: Option<LinearityVerdict>,
    pub quotients: QuotientsReport,
    pub colon_verdicts: Option<Vec<Option<LinearityVerdict>>>,
    pub componentwise: ComponentwiseReport,
    pub hilbert: Option<HilbertData>,
    pub linear_value: Option<LinearValueReport>,
    pub bc_h_vector: Vec<i64>,
    pub h_fit: HFit,
    pub two_term: Option<TwoTerm>,
    pub extremal_h: ExtremalReport,
    pub generalized_bound: Option<GeneralizedBoundReport>,
    pub powers: Vec<PowerReport>,
    pub stratification: Option<Stratification>,
    pub complete_intersection: bool,
    pub height: usize,
    pub claims: Vec<Claim>,
    pub observations: Vec<Observation>,
}

impl CrossReport {
    /// Refuted claims that are asserted to hold.
    pub fn refuted(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.status == ClaimStatus::Refuted && !c.empirical)
    }
}

pub fn cross_validate(x: &Matroid, order: &ElementOrder, opts: CrossOptions) -> Result<CrossReport> {
    require_loopless(x)?;
    let ch = opts.characteristic;
    let bc = bc_complex(x, order)?;
    let ideal = stanley_reisner_ideal(&bc);
    let (n, r) = (x.n(), x.full_rank());

    let ((betti_res, componentwise), (powers, stratification)) = rayon::join(
        || {
            rayon::join(
                || betti::betti_table(&ideal, ch).ok(),
                || betti::componentwise_linear_check(&ideal, ch),
            )
        },
        || {
            rayon::join(
                || power_reports(&ideal, opts.max_power, ch),
                || stratify(x).ok().flatten(),
            )
        },
    );
    let verdict = betti_res.as_ref().map(classify_linearity);
    let quotients = quotients_analysis(&ideal);
    let colon_verdicts = quotients.graded_linear_quotients.found().map(|o| {
        colon_sequence(&ideal, o)
            .iter()
            .map(|j| betti::betti_table(j, ch).ok().map(|t| classify_linearity(&t)))
            .collect::<Vec<_>>()
    });
    let hilbert_data = hilbert::hilbert_function(&ideal, hilbert::default_horizon(&ideal)).ok();
    let linear_value = hilbert::linear_value_criterion(&ideal).ok();
    let bc_h = bc.f_h_vectors().h;
    let h_fit = h_binomial_fit(&bc_h, n - r);
    let two_term = two_term_decomposition(x)?;
    let s_guess = x.min_circuit_size().map_or(r, |m| m - 1);
    let extremal_h = extremal_h_check(x, s_guess)?;
    let generalized_bound = hilbert_data
        .as_ref()
        .and_then(|h| generalized_bound_check(x, &h.coefficients, &h_fit).ok());
    let complete_intersection = ideal.is_complete_intersection();
    let height = n - hilbert_data.as_ref().map_or(0, |h| h.dim);

    let linear = verdict.as_ref().map(|v| v.is_linear());
    let graded = verdict.as_ref().map(|v| v.is_graded_linear());
    let s_value = verdict.as_ref().and_then(|v| v.linear_degree());
    let powers_linear = if powers.is_empty() {
        None
    } else if powers.iter().any(|p| p.verdict.as_ref().is_some_and(|v| !v.is_linear())) {
        Some(false)
    } else if powers.iter().all(|p| p.verdict.is_some()) {
        Some(true)
    } else {
        None
    };
    let fit_is_linear = h_fit.fits && h_fit.c == [1] && (ideal.is_zero() || Some(h_fit.cutoff as u32) == s_value);
    let equigenerated_lq = quotients
        .linear_quotients
        .as_bool()
        .map(|b| b && ideal.is_equigenerated());
    let colons_graded = colon_verdicts.as_ref().map(|vs| vs.iter().all(|v| v.as_ref().is_some_and(|v| v.is_graded_linear())));
    let separator_strat = stratification.as_ref().map(|s| s.rank_sum_matches);

    let claims = vec![
        Claim::equivalent("s-linear resolution <=> uniform plus coloops decomposition", linear, Some(two_term.is_some())),
        Claim::equivalent(
            "uniform plus coloops decomposition <=> extremal h-vector",
            Some(two_term.is_some()),
            Some(extremal_h.holds),
        ),
        Claim::equivalent(
            "s-linear resolution <=> single-value Hilbert criterion",
            linear,
            linear_value.as_ref().map(|l| l.holds),
        ),
        Claim::equivalent("s-linear resolution <=> h-vector fit c = (1) with cutoff s", linear, Some(fit_is_linear)),
        Claim::equivalent("s-linear resolution <=> linear resolutions of the computed powers", linear, powers_linear),
        Claim::equivalent(
            "pairwise coprime generators <=> generator count equals height",
            Some(complete_intersection),
            Some(ideal.gens().len() == height),
        ),
        Claim::implies("componentwise linear => graded linear resolution", componentwise.holds, graded),
        Claim::implies("equigenerated with linear quotients => s-linear resolution", equigenerated_lq, linear),
        Claim::implies(
            "graded linear quotients => every colon ideal has a graded linear resolution",
            quotients.graded_linear_quotients.as_bool(),
            colons_graded,
        ),
        Claim::equivalent("graded linear resolution <=> stratification with rank sum r", graded, separator_strat).empirical(),
        Claim::equivalent(
            "graded linear resolution <=> equality in the literal generalized bound",
            graded,
            generalized_bound.as_ref().map(|g| g.literal_equal),
        )
        .empirical(),
    ];

    let mut observations = Vec::new();
    if let (Some(st), Some(v)) = (&stratification, &verdict) {
        observations.push(Observation {
            name: "strata count vs Betti row count".into(),
            value: format!("{} vs {}", st.depth(), v.rows.len()),
        });
    }
    observations.push(Observation {
        name: "Hilbert coefficients".into(),
        value: hilbert_data
            .as_ref()
            .map_or("unavailable".into(), |h| format!("{:?} at exponent {}", h.coefficients, h.coefficient_exponent)),
    });

    Ok(CrossReport {
        ideal: ideal.render(),
        betti: betti_res,
        verdict,
        quotients,
        colon_verdicts,
        componentwise,
        hilbert: hilbert_data,
        linear_value,
        bc_h_vector: bc_h,
        h_fit,
        two_term,
        extremal_h,
        generalized_bound,
        powers,
        stratification,
        complete_intersection,
        height,
        claims,
        observations,
    })
}

fn power_reports(ideal: &MonomialIdeal, max_power: u32, ch: Characteristic) -> Vec<PowerReport> {
    if ideal.is_zero() {
        return Vec::new();
    }
    (2..=max_power)
        .map(|k| {
            let p = ideal.power(k);
            PowerReport {
                k,
                generators: p.gens().len(),
                verdict: betti::betti_table(&p, ch).ok().map(|t| classify_linearity(&t)),
            }
        })
        .collect()
}

/// The h-vector of the independence complex, for reports.
pub fn independence_h_vector(x: &Matroid) -> Vec<i64> {
    independence_complex(x).f_h_vectors().h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{build_matroid, MatroidSpec};

    fn parallel_connection() -> Matroid {
        build_matroid(&MatroidSpec::Circuits {
            n: 6,
            circuits: vec![vec![4, 5, 6], vec![1, 2, 3, 6], vec![1, 2, 3, 4, 5]],
            labels: None,
        })
        .unwrap()
    }

    fn u(p: usize, n: usize) -> Matroid {
        Matroid::uniform(p, n).unwrap()
    }

    #[test]
    fn two_term_examples() {
        let t = two_term_decomposition(&u(2, 4)).unwrap().unwrap();
        assert_eq!(t.s, 2);
        assert!(t.coloops.is_empty());
        let sum = Matroid::direct_sum(&[u(2, 4), u(1, 1)]);
        let t = two_term_decomposition(&sum).unwrap().unwrap();
        assert_eq!((t.s, t.coloops.clone()), (2, vec!["5".to_string()]));
        assert_eq!(two_term_decomposition(&parallel_connection()).unwrap(), None);
        assert_eq!(two_term_decomposition(&u(3, 3)).unwrap().unwrap().s, 0);
    }

    #[test]
    fn bounds() {
        let rows = fvector_bound_check(&u(2, 4), 2).unwrap();
        assert_eq!((rows[2].independent, rows[2].bound, rows[2].holds), (6, 3, true));
        let rows = fvector_bound_check(&u(3, 3), 3).unwrap();
        assert!(rows.iter().all(|r| r.equal));
        assert!(fvector_bound_check(&parallel_connection(), 3).is_err());
        assert_eq!(fvector_bound_check(&parallel_connection(), 2).unwrap()[0].independent, 1);
    }

    #[test]
    fn extremal() {
        let r = extremal_h_check(&u(2, 4), 2).unwrap();
        assert_eq!(r.h, vec![1, 2, 3]);
        assert!(r.holds);
        assert!(extremal_h_check(&Matroid::direct_sum(&[u(2, 4), u(1, 1)]), 2).unwrap().holds);
        assert!(!extremal_h_check(&parallel_connection(), 1).unwrap().holds);
    }

    #[test]
    fn stratifications() {
        let sum = Matroid::direct_sum(&[u(2, 4), u(1, 1)]);
        let st = stratify(&sum).unwrap().unwrap();
        assert_eq!(st.depth(), 1);
        assert!(verify_stratification(&sum, &st));
        let st = stratify(&u(3, 3)).unwrap().unwrap();
        assert_eq!((st.depth(), st.strata[0].s), (1, 0));
        let pc = parallel_connection();
        let st = stratify(&pc).unwrap().unwrap();
        assert!(verify_stratification(&pc, &st));
        assert!(!st.rank_sum_matches);
        let two = Matroid::direct_sum(&[u(2, 3), u(3, 4)]);
        let st = stratify(&two).unwrap().unwrap();
        assert!(st.rank_sum_matches);
        assert_eq!(st.depth(), 2);
        assert!(verify_stratification(&two, &st));
    }

    #[test]
    fn cross_validation_of_u24() {
        let rep = cross_validate(&u(2, 4), &ElementOrder::natural(4), CrossOptions::default()).unwrap();
        assert_eq!(rep.verdict.as_ref().unwrap().linear_degree(), Some(2));
        assert!(rep.claims.iter().take(5).all(|c| c.status == ClaimStatus::Confirmed), "{:#?}", rep.claims);
        assert_eq!(rep.powers.len(), 2);
    }

    #[test]
    fn cross_validation_of_parallel_connection() {
        let rep = cross_validate(&parallel_connection(), &ElementOrder::natural(6), CrossOptions::default()).unwrap();
        assert_eq!(rep.ideal, "(x5x6, x2x3x6, x2x3x4x5)");
        let v = rep.verdict.unwrap();
        assert!(v.is_graded_linear() && !v.is_linear());
        assert!(rep.two_term.is_none());
        assert_eq!(rep.componentwise.holds, Some(true));
        assert!(rep.quotients.linear_quotients.found().is_some());
    }

    #[test]
    fn cross_validation_of_free_matroid() {
        let rep = cross_validate(&u(3, 3), &ElementOrder::natural(3), CrossOptions::default()).unwrap();
        assert_eq!(rep.ideal, "(0)");
        assert_eq!(rep.refuted().count(), 0, "{:#?}", rep.claims);
    }
}
