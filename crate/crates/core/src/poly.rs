//! Integer polynomials: univariate (Hilbert numerators, h-polynomials) and the
//! bivariate Tutte polynomial.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Binomial coefficient with the usual extension to a negative upper index:
/// `C(a, k) = (-1)^k C(k - a - 1, k)` for `a < 0`, and zero for `k < 0`.
pub fn binom(a: i64, k: i64) -> i64 {
    if k < 0 {
        return 0;
    }
    if a < 0 {
        let v = binom(k - a - 1, k);
        return if k % 2 == 0 { v } else { -v };
    }
    if k > a {
        return 0;
    }
    let k = k.min(a - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (a - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// Dense univariate polynomial, coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Poly(pub Vec<i64>);

impl Poly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn one() -> Self {
        Poly(vec![1])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::default();
        }
        let mut out = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: i64) -> Poly {
        Poly::new(self.0.iter().map(|a| a * c).collect())
    }

    /// `(1 - t)^k`.
    pub fn one_minus_t_pow(k: usize) -> Poly {
        Poly::new((0..=k).map(|i| binom(k as i64, i as i64) * if i % 2 == 0 { 1 } else { -1 }).collect())
    }

    /// Substitute `t -> 1 - u` and return the coefficients in `u`; that is the
    /// expansion `p(t) = sum_i c_i (1 - t)^i`.
    pub fn in_one_minus_t_basis(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.0.len()];
        for (k, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            // (1 - u)^k
            for (i, slot) in out.iter_mut().enumerate().take(k + 1) {
                let c = binom(k as i64, i as i64);
                *slot += a * if i % 2 == 0 { c } else { -c };
            }
        }
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    /// Truncate to terms of degree `< k`.
    pub fn truncate(&self, k: usize) -> Poly {
        Poly::new(self.0.iter().take(k).copied().collect())
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &a| acc * t + a)
    }

    /// Render with the given variable name, highest degree first.
    pub fn render(&self, var: &str) -> String {
        let terms: Vec<(i64, String)> = self
            .0
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (c, monomial_str(&[(var, k as u32)])))
            .collect();
        join_terms(&terms)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

fn monomial_str(parts: &[(&str, u32)]) -> String {
    let mut s = String::new();
    for &(v, e) in parts {
        match e {
            0 => {}
            1 => s.push_str(v),
            _ => s.push_str(&format!("{v}^{e}")),
        }
    }
    s
}

fn join_terms(terms: &[(i64, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (c, mono)) in terms.iter().enumerate() {
        let neg = *c < 0;
        let abs = c.unsigned_abs();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs == 1 {
            out.push_str(mono);
        } else {
            out.push_str(&format!("{abs}{mono}"));
        }
    }
    out
}

/// Bivariate integer polynomial in `x`, `y`, keyed by `(x exponent, y exponent)`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(from = "Vec<(u32, u32, i64)>", into = "Vec<(u32, u32, i64)>")]
pub struct TuttePolynomial {
    terms: BTreeMap<(u32, u32), i64>,
}

impl From<Vec<(u32, u32, i64)>> for TuttePolynomial {
    fn from(v: Vec<(u32, u32, i64)>) -> Self {
        let mut p = TuttePolynomial::default();
        for (a, b, c) in v {
            p.add_term(a, b, c);
        }
        p
    }
}

impl From<TuttePolynomial> for Vec<(u32, u32, i64)> {
    fn from(p: TuttePolynomial) -> Self {
        p.terms.into_iter().map(|((a, b), c)| (a, b, c)).collect()
    }
}

impl TuttePolynomial {
    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(x: u32, y: u32, c: i64) -> Self {
        let mut p = Self::default();
        p.add_term(x, y, c);
        p
    }

    pub fn add_term(&mut self, x: u32, y: u32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((x, y)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(x, y));
        }
    }

    pub fn coeff(&self, x: u32, y: u32) -> i64 {
        self.terms.get(&(x, y)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i64)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in other.terms() {
            out.add_term(a, b, c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for ((a, b), c) in self.terms() {
            for ((d, e), f) in other.terms() {
                out.add_term(a + d, b + e, c * f);
            }
        }
        out
    }

    pub fn shift(&self, dx: u32, dy: u32) -> Self {
        let mut out = Self::default();
        for ((a, b), c) in self.terms() {
            out.add_term(a + dx, b + dy, c);
        }
        out
    }

    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.terms()
            .map(|((a, b), c)| c * x.pow(a) * y.pow(b))
            .sum()
    }

    /// `T(x, y0)` as a polynomial in `x`.
    pub fn at_y(&self, y0: i64) -> Poly {
        let mut out: Vec<i64> = Vec::new();
        for ((a, b), c) in self.terms() {
            let a = a as usize;
            if out.len() <= a {
                out.resize(a + 1, 0);
            }
            out[a] += c * y0.pow(b);
        }
        Poly::new(out)
    }

    /// `T(1 - t, 0)` as a polynomial in `t`.
    pub fn at_one_minus_t_y0(&self) -> Poly {
        let mut out = Poly::default();
        for ((a, b), c) in self.terms() {
            if b == 0 {
                out = out.add(&Poly::one_minus_t_pow(a as usize).scale(c));
            }
        }
        out
    }
}

impl fmt::Display for TuttePolynomial {
    /// Terms in descending `x` degree, then descending `y` degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<((u32, u32), i64)> = self.terms().collect();
        keys.sort_by(|(k1, _), (k2, _)| k2.0.cmp(&k1.0).then(k2.1.cmp(&k1.1)));
        let terms: Vec<(i64, String)> = keys
            .into_iter()
            .map(|((a, b), c)| (c, monomial_str(&[("x", a), ("y", b)])))
            .collect();
        f.write_str(&join_terms(&terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(4, 2), 6);
        assert_eq!(binom(3, 5), 0);
        assert_eq!(binom(-1, 0), 1);
        assert_eq!(binom(-1, 3), -1);
        assert_eq!(binom(-2, 2), 3);
        assert_eq!(binom(5, -1), 0);
    }

    #[test]
    fn one_minus_t_basis() {
        // 1 + 2t = 3 - 2(1 - t)
        assert_eq!(Poly::new(vec![1, 2]).in_one_minus_t_basis(), vec![3, -2]);
        assert_eq!(Poly::one().in_one_minus_t_basis(), vec![1]);
    }

    #[test]
    fn tutte_rendering() {
        let mut t = TuttePolynomial::default();
        t.add_term(2, 0, 1);
        t.add_term(1, 0, 2);
        t.add_term(0, 1, 2);
        t.add_term(0, 2, 1);
        assert_eq!(t.to_string(), "x^2 + 2x + y^2 + 2y");
        assert_eq!(Poly::new(vec![1, -3, 0, 2]).to_string(), "2t^3 - 3t + 1");
    }
}
