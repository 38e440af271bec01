//! Hilbert functions and series of Stanley-Reisner quotients and the
//! binomial-form expansions of their numerators.

use serde::{Deserialize, Serialize};

use crate::complex::h_from_f;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::poly::{binom, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub nvars: usize,
    /// `H(A/I, s)` for `s = 0..=horizon`.
    pub values: Vec<u64>,
    /// Krull dimension of `A/I`.
    pub dim: usize,
    /// `n - dim`.
    pub codim: usize,
    /// `N(t)` with Hilbert series `N(t) / (1-t)^dim`.
    pub numerator: Poly,
    /// `c_i` with series `Σ c_i / (1-t)^{e-i}`, where `e = coefficient_exponent`.
    pub coefficients: Vec<i64>,
    /// `max(codim, dim)`: the codimension unless the series needs a larger denominator.
    pub coefficient_exponent: usize,
}

pub fn default_horizon(ideal: &MonomialIdeal) -> u32 {
    ideal.nvars() as u32 + ideal.max_degree().unwrap_or(0) + 2
}

/// Hilbert data of `A/I` for squarefree `I`, from the f-vector of its complex:
/// `H(s) = Σ_i f_{i-1} C(s-1, i-1)` for `s ≥ 1`.
pub fn hilbert_function(ideal: &MonomialIdeal, horizon: u32) -> Result<HilbertData> {
    let n = ideal.nvars();
    let delta = ideal.to_complex()?;
    if delta.is_void() {
        return Ok(HilbertData {
            nvars: n,
            values: vec![0; horizon as usize + 1],
            dim: 0,
            codim: n,
            numerator: Poly::default(),
            coefficients: Vec::new(),
            coefficient_exponent: n,
        });
    }
    let f = delta.f_vector();
    let dim = f.len() - 1;
    let values = (0..=horizon as i64)
        .map(|s| {
            if s == 0 {
                1
            } else {
                f.iter()
                    .enumerate()
                    .map(|(i, &fi)| fi as i64 * binom(s - 1, i as i64 - 1))
                    .sum::<i64>() as u64
            }
        })
        .collect();
    let numerator = Poly::new(h_from_f(&f));
    let codim = n - dim;
    let exponent = codim.max(dim);
    let coefficients = numerator.mul(&Poly::one_minus_t_pow(exponent - dim)).in_one_minus_t_basis();
    Ok(HilbertData {
        nvars: n,
        values,
        dim,
        codim,
        numerator,
        coefficients,
        coefficient_exponent: exponent,
    })
}

impl HilbertData {
    /// Evaluate `Σ c_i C(s + e - i - 1, s)`; agrees with `values` for every `s`
    /// once the series is a polynomial in `1/(1-t)`.
    pub fn value_from_coefficients(&self, s: u32) -> i64 {
        let e = self.coefficient_exponent as i64;
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, &c)| c * binom(s as i64 + e - i as i64 - 1, s as i64))
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialFit {
    pub c: Vec<i64>,
    pub d: usize,
    pub q: usize,
}

/// Expand the series at denominator `(1-t)^q` with `q` the codimension.
pub fn binomial_form_fit(data: &HilbertData) -> Result<BinomialFit> {
    if data.dim > data.codim {
        return Err(Error::DenominatorExceedsCodim {
            dim: data.dim,
            codim: data.codim,
        });
    }
    let c = data
        .numerator
        .mul(&Poly::one_minus_t_pow(data.codim - data.dim))
        .in_one_minus_t_basis();
    Ok(BinomialFit {
        d: c.len(),
        c,
        q: data.codim,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HFit {
    pub c: Vec<i64>,
    pub cutoff: usize,
    /// An exact fit exists with at most `q` coefficients.
    pub fits: bool,
}

/// Least-length `c` with `h_k = Σ_l c_l C(k+q-l-1, k)` for `k < cutoff`,
/// where `cutoff` is the length of `h` without trailing zeros.
pub fn h_binomial_fit(h: &[i64], q: usize) -> HFit {
    let cutoff = h.iter().rposition(|&x| x != 0).map_or(0, |p| p + 1);
    let hp = Poly::new(h[..cutoff].to_vec());
    let c = hp.mul(&Poly::one_minus_t_pow(q)).truncate(cutoff).in_one_minus_t_basis();
    HFit {
        fits: c.len() <= q.max(1),
        c,
        cutoff,
    }
}

impl HFit {
    pub fn value(&self, k: usize, q: usize) -> i64 {
        self.c
            .iter()
            .enumerate()
            .map(|(l, &cl)| cl * binom(k as i64 + q as i64 - l as i64 - 1, k as i64))
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearValueReport {
    /// Initial degree; `None` for the zero ideal, where the criterion holds vacuously.
    pub s: Option<u32>,
    pub q: usize,
    pub dim_in_degree: u64,
    pub expected: u64,
    pub holds: bool,
}

/// `dim_k I_s = C(s+q-1, s)` at `s = indeg I`, with `q = n - dim A/√I`.
pub fn linear_value_criterion(ideal: &MonomialIdeal) -> Result<LinearValueReport> {
    let n = ideal.nvars();
    let radical_complex = ideal.radical().to_complex()?;
    let krull = if radical_complex.is_void() {
        0
    } else {
        (radical_complex.dim() + 1) as usize
    };
    let q = n - krull;
    let Some(s) = ideal.indeg() else {
        return Ok(LinearValueReport {
            s: None,
            q,
            dim_in_degree: 0,
            expected: 0,
            holds: true,
        });
    };
    let dim_in_degree = ideal.count_in_degree(s);
    let expected = binom(s as i64 + q as i64 - 1, s as i64).max(0) as u64;
    Ok(LinearValueReport {
        s: Some(s),
        q,
        dim_in_degree,
        expected,
        holds: dim_in_degree == expected,
    })
}
