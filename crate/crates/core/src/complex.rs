//! Finite simplicial complexes on labelled vertex sets, with f/h-vectors and
//! reduced homology over the rationals or a prime field.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{self, bit, is_subset, len};
use crate::error::{Error, Result};
use crate::linalg::{self, Characteristic};
use crate::matroid::{mask_labels, ElementOrder, Matroid};
use crate::poly::binom;

/// A complex given by its facets. The void complex has no facets; the
/// complex `{∅}` has the single facet `0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<u64>,
}

/// `f[k]` is `f_{k-1}`, the number of faces with `k` vertices; `h[k]` is `h_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FHVectors {
    pub dim: i64,
    pub f: Vec<u64>,
    pub h: Vec<i64>,
}

impl FHVectors {
    pub fn from_f(f: Vec<u64>) -> Self {
        let dim = f.len() as i64 - 2;
        let h = h_from_f(&f);
        FHVectors { dim, f, h }
    }

    pub fn h_polynomial(&self) -> crate::poly::Poly {
        crate::poly::Poly::new(self.h.clone())
    }
}

/// `h_k = Σ_{i≤k} (-1)^{k-i} C(d+1-i, k-i) f_{i-1}` with `d + 1 = f.len() - 1`.
pub fn h_from_f(f: &[u64]) -> Vec<i64> {
    let top = f.len() as i64 - 1;
    (0..f.len() as i64)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binom(top - i, k - i) * f[i as usize] as i64
                })
                .sum()
        })
        .collect()
}

/// Inverse transform: `f_{k-1} = Σ_{i≤k} C(d+1-i, k-i) h_i`.
pub fn f_from_h(h: &[i64]) -> Vec<i64> {
    let top = h.len() as i64 - 1;
    (0..h.len() as i64)
        .map(|k| (0..=k).map(|i| binom(top - i, k - i) * h[i as usize]).sum())
        .collect()
}

impl SimplicialComplex {
    pub fn from_facets(vertices: Vec<String>, facets: Vec<u64>) -> Result<Self> {
        let all = bits::full(vertices.len());
        if let Some(&bad) = facets.iter().find(|&&f| !is_subset(f, all)) {
            return Err(Error::UnknownElement(format!("{bad:#b}")));
        }
        Ok(SimplicialComplex {
            vertices,
            facets: bits::maximal_sets(facets),
        })
    }

    /// Complex of all subsets of the vertex set containing none of `nonfaces`.
    pub fn from_nonfaces(vertices: Vec<String>, nonfaces: &[u64]) -> Self {
        let n = vertices.len();
        if nonfaces.contains(&0) {
            return SimplicialComplex { vertices, facets: Vec::new() };
        }
        let mut facets = Vec::new();
        let mut stack: Vec<(u64, usize)> = vec![(0, 0)];
        let admissible = |s: u64| !nonfaces.iter().any(|&g| is_subset(g, s));
        while let Some((s, next)) = stack.pop() {
            let mut extended = false;
            for e in next..n {
                let cand = s | bit(e);
                if admissible(cand) {
                    stack.push((cand, e + 1));
                    extended = true;
                }
            }
            // only faces reached with no later extension can be maximal
            if !extended && (0..next).all(|e| s & bit(e) != 0 || !admissible(s | bit(e))) {
                facets.push(s);
            }
        }
        facets.sort_unstable();
        SimplicialComplex { vertices, facets }
    }

    pub fn simplex(vertices: Vec<String>) -> Self {
        let f = bits::full(vertices.len());
        SimplicialComplex { vertices, facets: vec![f] }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn facet_labels(&self) -> Vec<Vec<String>> {
        self.facets.iter().map(|&f| mask_labels(&self.vertices, f)).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Largest facet size minus one; `-1` for `{∅}` and for the void complex.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|&f| len(f) as i64).max().unwrap_or(0) - 1
    }

    pub fn contains(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| is_subset(face, f))
    }

    /// Inclusion-minimal subsets of the vertex set that are not faces.
    pub fn minimal_nonfaces(&self) -> Vec<u64> {
        let n = self.n_vertices();
        if self.is_void() {
            return vec![0];
        }
        let mut found: Vec<u64> = Vec::new();
        // A minimal non-face N has every N \ {v} a face, so it is a face plus one vertex.
        let faces = self.faces();
        let mut seen = HashSet::new();
        for &f in &faces {
            for v in 0..n {
                if f & bit(v) != 0 {
                    continue;
                }
                let cand = f | bit(v);
                if !seen.insert(cand) || self.contains(cand) {
                    continue;
                }
                if bits::elems(cand).all(|u| self.contains(cand & !bit(u))) {
                    found.push(cand);
                }
            }
        }
        bits::minimal_sets(found)
    }

    /// All faces, deduplicated, sorted by (size, value).
    pub fn faces(&self) -> Vec<u64> {
        let mut set: HashSet<u64> = HashSet::new();
        for &f in &self.facets {
            if set.contains(&f) {
                continue;
            }
            for s in bits::submasks(f) {
                set.insert(s);
            }
        }
        let mut v: Vec<u64> = set.into_iter().collect();
        v.sort_unstable_by_key(|&s| (len(s), s));
        v
    }

    /// `f[k]` = number of faces with `k` vertices, for `k = 0..=dim+1`.
    pub fn f_vector(&self) -> Vec<u64> {
        if self.is_void() {
            return Vec::new();
        }
        let mut f = vec![0u64; (self.dim() + 2) as usize];
        for s in self.faces() {
            f[len(s)] += 1;
        }
        f
    }

    pub fn f_h_vectors(&self) -> FHVectors {
        FHVectors::from_f(self.f_vector())
    }

    /// Faces of `self` inside `sigma`, on the vertices of `sigma` only.
    pub fn induced_subcomplex<S: AsRef<str>>(&self, sigma: &[S]) -> Result<Self> {
        let mut mask = 0u64;
        for l in sigma {
            let l = l.as_ref();
            let i = self
                .vertices
                .iter()
                .position(|v| v == l)
                .ok_or_else(|| Error::UnknownElement(l.to_string()))?;
            mask |= bit(i);
        }
        Ok(self.induced_mask(mask))
    }

    pub fn induced_mask(&self, sigma: u64) -> Self {
        let vertices = mask_labels(&self.vertices, sigma);
        let facets = if self.is_void() {
            Vec::new()
        } else {
            bits::maximal_sets(
                self.facets
                    .iter()
                    .map(|&f| crate::matroid::compress(f & sigma, sigma))
                    .collect(),
            )
        };
        SimplicialComplex { vertices, facets }
    }

    /// Ranks of reduced homology in dimensions `-1..=dim` (index 0 is dimension -1).
    pub fn reduced_homology(&self, ch: Characteristic) -> Vec<usize> {
        reduced_homology_of_faces(&self.faces(), ch)
    }
}

/// Reduced homology ranks of the complex whose face list is `faces` (closed
/// under subsets). Index 0 is dimension -1. The void complex gives `[0]`.
pub fn reduced_homology_of_faces(faces: &[u64], ch: Characteristic) -> Vec<usize> {
    if faces.is_empty() {
        return vec![0];
    }
    let top = faces.iter().map(|&f| len(f)).max().unwrap_or(0);
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[len(f)].push(f);
    }
    // boundary_rank[k] = rank of the map from faces of size k to faces of size k - 1
    let boundary_rank: Vec<usize> = (0..=top + 1)
        .map(|k| {
            if k == 0 || k > top {
                0
            } else {
                boundary_rank(&by_size[k], &by_size[k - 1], ch)
            }
        })
        .collect();
    (0..=top)
        .map(|k| by_size[k].len() - boundary_rank[k] - boundary_rank[k + 1])
        .collect()
}

fn boundary_rank(upper: &[u64], lower: &[u64], ch: Characteristic) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let rows: Vec<Vec<i64>> = upper
        .iter()
        .map(|&f| {
            let mut row = vec![0i64; lower.len()];
            for (j, v) in bits::elems(f).enumerate() {
                row[index[&(f & !bit(v))]] = if j % 2 == 0 { 1 } else { -1 };
            }
            row
        })
        .collect();
    linalg::rank(&rows, ch)
}

/// Faces of the complex on `sigma` avoiding every set in `nonfaces`.
pub fn faces_avoiding(sigma: u64, nonfaces: &[u64]) -> Vec<u64> {
    let relevant: Vec<u64> = nonfaces.iter().copied().filter(|&g| is_subset(g, sigma)).collect();
    if relevant.contains(&0) {
        return Vec::new();
    }
    let elems: Vec<usize> = bits::elems(sigma).collect();
    let mut out = Vec::new();
    let mut stack: Vec<(u64, usize)> = vec![(0, 0)];
    while let Some((s, next)) = stack.pop() {
        out.push(s);
        for (i, &e) in elems.iter().enumerate().skip(next) {
            let cand = s | bit(e);
            if !relevant.iter().any(|&g| is_subset(g, cand)) {
                stack.push((cand, i + 1));
            }
        }
    }
    out
}

/// Subsets of the ground set containing no broken circuit.
pub fn bc_complex(x: &Matroid, order: &ElementOrder) -> Result<SimplicialComplex> {
    let bc = x.broken_circuits(order)?;
    Ok(SimplicialComplex::from_nonfaces(x.labels().to_vec(), &bc.minimal))
}

/// The complex of independent sets; its facets are the bases.
pub fn independence_complex(x: &Matroid) -> SimplicialComplex {
    let bases = x.bases();
    SimplicialComplex {
        vertices: x.labels().to_vec(),
        facets: bases,
    }
}

/// Reduced homology of many induced subcomplexes at once.
pub fn induced_homologies(nonfaces: &[u64], sigmas: &[u64], ch: Characteristic) -> Vec<Vec<usize>> {
    sigmas
        .par_iter()
        .map(|&s| reduced_homology_of_faces(&faces_avoiding(s, nonfaces), ch))
        .collect()
}
