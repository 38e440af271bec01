//! Central hyperplane arrangements given by rational normal vectors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::betti::{betti_table, classify_linearity};
use crate::bits::{self, bit, len};
use crate::ideal::broken_circuit_ideal;
use crate::linalg::Characteristic;
use crate::decomposition::{stratify, two_term_decomposition, Stratification, TwoTerm};
use crate::error::{Error, Result};
use crate::linalg;
use crate::matroid::{default_labels, ElementOrder, Matroid};

/// Normals are the columns of an `r × n` rational matrix.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Arrangement {
    rows: Vec<Vec<BigRational>>,
    labels: Vec<String>,
}

fn q(a: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(a))
}

impl Arrangement {
    pub fn new(rows: Vec<Vec<BigRational>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NonRectangular {
                    row: i,
                    expected: n,
                    found: r.len(),
                });
            }
        }
        if let Some(j) = (0..n).find(|&j| rows.iter().all(|r| r[j].is_zero())) {
            return Err(Error::ZeroColumn(j));
        }
        let labels = labels.unwrap_or_else(|| default_labels(n));
        if labels.len() != n {
            return Err(Error::Precondition(format!("{} labels for {} hyperplanes", labels.len(), n)));
        }
        Ok(Arrangement { rows, labels })
    }

    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&a| q(a)).collect()).collect(), None)
    }

    /// Coordinate hyperplanes in dimension `r`.
    pub fn boolean(r: usize) -> Self {
        let rows = (0..r).map(|i| (0..r).map(|j| q((i == j) as i64)).collect()).collect();
        Arrangement {
            rows,
            labels: default_labels(r),
        }
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn column(&self, j: usize) -> Vec<BigRational> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn is_essential(&self) -> bool {
        linalg::rank_rational(&self.rows) == self.dimension()
    }

    pub fn matroid(&self) -> Result<Matroid> {
        Matroid::linear(&self.rows, Some(self.labels.clone()))
    }

    /// Append a zero coordinate to every normal and add the new coordinate hyperplane.
    pub fn cone(&self) -> Arrangement {
        let mut rows: Vec<Vec<BigRational>> = self
            .rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.push(q(0));
                r
            })
            .collect();
        let mut last = vec![q(0); self.n()];
        last.push(q(1));
        rows.push(last);
        let mut labels = self.labels.clone();
        let mut fresh = (self.n() + 1).to_string();
        while labels.contains(&fresh) {
            fresh.push('\'');
        }
        labels.push(fresh);
        Arrangement { rows, labels }
    }

    fn require_essential(&self) -> Result<()> {
        if self.is_essential() {
            Ok(())
        } else {
            Err(Error::Precondition("arrangement is not essential".into()))
        }
    }

    /// Factors of the arrangement: one per connected component of its matroid,
    /// with normals rewritten in the coordinates of a basis chosen inside the block.
    pub fn detect_product(&self) -> Result<Vec<Factor>> {
        self.require_essential()?;
        let x = self.matroid()?;
        let (components, _) = x.components_and_coloops();
        components
            .into_iter()
            .map(|block| {
                let mut basis: Vec<usize> = Vec::new();
                let mut chosen = 0u64;
                for e in bits::elems(block) {
                    if x.is_independent(chosen | bit(e)) {
                        chosen |= bit(e);
                        basis.push(e);
                    }
                }
                let basis_cols: Vec<Vec<BigRational>> = basis.iter().map(|&b| self.column(b)).collect();
                let coords: Vec<Vec<BigRational>> = bits::elems(block)
                    .map(|e| coordinates_in(&basis_cols, &self.column(e)))
                    .collect::<Result<_>>()?;
                // rows of the factor matrix are basis directions
                let rows: Vec<Vec<BigRational>> = (0..basis.len())
                    .map(|i| coords.iter().map(|c| c[i].clone()).collect())
                    .collect();
                let labels = x.labels_of(block);
                let factor = Arrangement::new(rows, Some(labels.clone()))?;
                let matroid = factor.matroid()?;
                Ok(Factor {
                    elements: labels,
                    dimension: basis.len(),
                    generic: matroid.circuits().iter().all(|&c| len(c) == basis.len() + 1),
                    boolean: len(block) == basis.len(),
                    arrangement: factor,
                })
            })
            .collect()
    }

    /// Orlik-Solomon and Orlik-Terao generators, one pair per circuit.
    pub fn os_ot_generators(&self) -> Result<Vec<CircuitGenerators>> {
        self.require_essential()?;
        let x = self.matroid()?;
        x.circuits()
            .iter()
            .map(|&c| {
                let elems: Vec<usize> = bits::elems(c).collect();
                let cols: Vec<Vec<BigRational>> = elems.iter().map(|&e| self.column(e)).collect();
                let dependency = circuit_dependency(&cols)?;
                let names: Vec<String> = elems.iter().map(|&e| self.labels[e].clone()).collect();
                let others = |j: usize| -> Vec<String> {
                    names.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, l)| l.clone()).collect()
                };
                let orlik_solomon = (0..elems.len())
                    .map(|j| OsTerm {
                        sign: if j % 2 == 0 { 1 } else { -1 },
                        elements: others(j),
                    })
                    .collect();
                let orlik_terao = (0..elems.len())
                    .map(|j| OtTerm {
                        coefficient: dependency[j].to_string(),
                        variables: others(j),
                    })
                    .collect();
                Ok(CircuitGenerators {
                    circuit: names,
                    dependency: dependency.iter().map(|d| d.to_string()).collect(),
                    orlik_solomon,
                    orlik_terao,
                })
            })
            .collect()
    }
}

/// Coefficients expressing `v` in the span of `basis`.
fn coordinates_in(basis: &[Vec<BigRational>], v: &[BigRational]) -> Result<Vec<BigRational>> {
    let m = v.len();
    let k = basis.len();
    // columns: basis vectors then v; a kernel vector with last entry -1 gives the coordinates
    let rows: Vec<Vec<BigRational>> = (0..m)
        .map(|i| basis.iter().map(|b| b[i].clone()).chain(std::iter::once(v[i].clone())).collect())
        .collect();
    let kernel = linalg::kernel_rational(&rows, k + 1);
    let w = kernel
        .into_iter()
        .find(|w| !w[k].is_zero())
        .ok_or_else(|| Error::Precondition("vector outside the span of the chosen basis".into()))?;
    let scale = -w[k].clone();
    Ok(w[..k].iter().map(|a| a / &scale).collect())
}

/// The unique (up to scale) linear dependency among the normals of a circuit,
/// as coprime integers with the first one positive.
fn circuit_dependency(cols: &[Vec<BigRational>]) -> Result<Vec<BigInt>> {
    let m = cols.first().map_or(0, |c| c.len());
    let rows: Vec<Vec<BigRational>> = (0..m).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let kernel = linalg::kernel_rational(&rows, cols.len());
    match kernel.as_slice() {
        [w] => Ok(linalg::primitive_integer_vector(w)),
        _ => Err(Error::Precondition("circuit without a one-dimensional dependency".into())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub elements: Vec<String>,
    pub dimension: usize,
    pub generic: bool,
    pub boolean: bool,
    #[serde(skip)]
    pub arrangement: Arrangement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OsTerm {
    pub sign: i8,
    pub elements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OtTerm {
    pub coefficient: String,
    pub variables: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitGenerators {
    pub circuit: Vec<String>,
    /// `a_j` with `Σ a_j α_j = 0`.
    pub dependency: Vec<String>,
    pub orlik_solomon: Vec<OsTerm>,
    /// `Σ_j a_j Π_{k≠j} y_k`.
    pub orlik_terao: Vec<OtTerm>,
}

impl CircuitGenerators {
    /// Evaluate the Orlik-Terao generator at `y_k = values[k]` (values in circuit order).
    pub fn evaluate_orlik_terao(&self, values: &[BigRational]) -> BigRational {
        self.orlik_terao
            .iter()
            .enumerate()
            .map(|(j, t)| {
                let a: BigInt = t.coefficient.parse().expect("integer coefficient");
                values
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .fold(BigRational::from_integer(a), |acc, (_, v)| acc * v)
            })
            .fold(BigRational::zero(), |a, b| a + b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KoszulVerdict {
    /// Uniform of rank two plus coloops (or no circuits at all).
    Koszul,
    /// A stratification by separators exists.
    GradedKoszul,
    /// Neither criterion holds while the complete-intersection proxy does.
    NotKoszul,
    /// Neither criterion holds and the complete-intersection proxy fails.
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulReport {
    /// Minimal broken circuits pairwise disjoint (natural order): a matroid-level
    /// proxy for the complete-intersection hypothesis on the Orlik-Terao ideal.
    pub complete_intersection_proxy: bool,
    pub two_term: Option<TwoTerm>,
    pub two_term_rank_two: bool,
    pub stratification: Option<Stratification>,
    pub separator_stratification: bool,
    /// Computed Betti verdict of the broken-circuit ideal, `None` past the oracle bounds.
    pub bc_linear: Option<bool>,
    pub bc_graded_linear: Option<bool>,
    pub factors: Vec<Factor>,
    pub verdict: KoszulVerdict,
    pub explanation: String,
}

pub fn koszul_report(a: &Arrangement) -> Result<KoszulReport> {
    a.require_essential()?;
    let x = a.matroid()?;
    if !x.is_loopless() {
        return Err(Error::LoopPresent("zero normal".into()));
    }
    let broken = x.broken_circuits(&ElementOrder::natural(x.n()))?;
    let m = &broken.minimal;
    let ci = (0..m.len()).all(|i| (i + 1..m.len()).all(|j| m[i] & m[j] == 0));
    let two_term = two_term_decomposition(&x)?;
    let no_circuits = x.circuits().is_empty();
    let two_term_rank_two = two_term.as_ref().is_some_and(|t| t.s == 2);
    let stratification = stratify(&x).ok().flatten();
    let separator_stratification = stratification.as_ref().is_some_and(|s| s.rank_sum_matches);
    let factors = a.detect_product()?;
    let bc_verdict = betti_table(&broken_circuit_ideal(&x, &ElementOrder::natural(x.n()))?, Characteristic::ZERO)
        .ok()
        .map(|t| classify_linearity(&t));
    let (verdict, explanation) = if two_term_rank_two || no_circuits {
        (
            KoszulVerdict::Koszul,
            "matroid is U_{2,m} plus coloops (or has no circuits): Koszul".to_string(),
        )
    } else if separator_stratification {
        (
            KoszulVerdict::GradedKoszul,
            "matroid stratifies into uniform-plus-coloop separators: graded Koszul".to_string(),
        )
    } else if ci {
        (
            KoszulVerdict::NotKoszul,
            "criteria not met while the complete-intersection proxy holds".to_string(),
        )
    } else {
        (
            KoszulVerdict::Undetermined,
            "criteria not met; complete-intersection precondition unverified".to_string(),
        )
    };
    Ok(KoszulReport {
        complete_intersection_proxy: ci,
        two_term,
        two_term_rank_two,
        stratification,
        separator_stratification,
        bc_linear: bc_verdict.as_ref().map(|v| v.is_linear()),
        bc_graded_linear: bc_verdict.as_ref().map(|v| v.is_graded_linear()),
        factors,
        verdict,
        explanation,
    })
}

/// Integer point where no normal vanishes, found by trying small vectors.
pub fn generic_point(a: &Arrangement) -> Vec<BigRational> {
    let r = a.dimension();
    for t in 1i64.. {
        let v: Vec<BigRational> = (0..r).map(|i| q(t.pow(i as u32))).collect();
        let all_nonzero = (0..a.n()).all(|j| !dot(&a.column(j), &v).is_zero());
        if all_nonzero {
            return v;
        }
    }
    unreachable!("moment curve points avoid every hyperplane eventually")
}

pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn reciprocal(x: &BigRational) -> BigRational {
    BigRational::one() / x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn generic_lines() -> Arrangement {
        Arrangement::from_integer_rows(&[vec![1, 0, 1, 1], vec![0, 1, 1, -1]]).unwrap()
    }

    #[test]
    fn matroids_of_arrangements() {
        assert_eq!(generic_lines().matroid().unwrap(), Matroid::uniform(2, 4).unwrap());
        assert_eq!(Arrangement::boolean(3).matroid().unwrap(), Matroid::uniform(3, 3).unwrap());
        let repeated = Arrangement::from_integer_rows(&[vec![1, 2, 0], vec![1, 2, 1]]).unwrap();
        let x = repeated.matroid().unwrap();
        assert_eq!(x.circuits(), &[0b011]);
        assert!(!x.is_simple());
        assert_eq!(
            Arrangement::from_integer_rows(&[vec![1, 0], vec![0, 0]]),
            Err(Error::ZeroColumn(1))
        );
    }

    #[test]
    fn coning() {
        let c = generic_lines().cone();
        let expected = Matroid::direct_sum(&[Matroid::uniform(2, 4).unwrap(), Matroid::uniform(1, 1).unwrap()]);
        assert_eq!(c.matroid().unwrap(), expected);
        assert_eq!(Arrangement::boolean(2).cone().matroid().unwrap(), Arrangement::boolean(3).matroid().unwrap());
        let cc = c.cone();
        assert_eq!(cc.matroid().unwrap().coloops().count_ones(), 2);
    }

    #[test]
    fn products() {
        let f = generic_lines().cone().detect_product().unwrap();
        assert_eq!(f.len(), 2);
        assert!(f[0].generic && f[0].dimension == 2 && f[0].elements.len() == 4);
        assert!(f[1].boolean);
        assert_eq!(Arrangement::boolean(3).detect_product().unwrap().len(), 3);
        assert_eq!(generic_lines().detect_product().unwrap().len(), 1);
    }

    #[test]
    fn generators() {
        // α1 - α2 + α3 = 0 in the plane
        let a = Arrangement::from_integer_rows(&[vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        let g = a.os_ot_generators().unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].dependency, vec!["1", "-1", "1"]);
        assert_eq!(g[0].orlik_solomon.iter().map(|t| t.sign).collect::<Vec<_>>(), vec![1, -1, 1]);
        let v = generic_point(&a);
        let vals: Vec<BigRational> = (0..3).map(|j| reciprocal(&dot(&a.column(j), &v))).collect();
        assert!(g[0].evaluate_orlik_terao(&vals).is_zero());
        assert!(Arrangement::boolean(3).os_ot_generators().unwrap().is_empty());
    }

    #[test]
    fn koszul_verdicts() {
        let mut a = generic_lines();
        a = a.cone().cone();
        assert_eq!(koszul_report(&a).unwrap().verdict, KoszulVerdict::Koszul);
        assert_eq!(koszul_report(&Arrangement::boolean(3)).unwrap().verdict, KoszulVerdict::Koszul);
    }
}
