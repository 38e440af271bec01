//! Exact computations on matroids, broken-circuit complexes and the monomial
//! ideals attached to them.
//!
//! Everything here works over the integers or rationals (or a prime field when
//! asked); no floating point is involved anywhere. Ground sets are limited to
//! 64 elements so subsets can be carried around as `u64` bitmasks.

pub mod arrangement;
pub mod betti;
pub mod bits;
pub mod complex;
pub mod corpus;
pub mod decomposition;
pub mod error;
pub mod graph;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod matroid;
pub mod poly;

pub use arrangement::Arrangement;
pub use betti::{BettiTable, LinearityKind, LinearityVerdict};
pub use complex::{FHVectors, SimplicialComplex};
pub use error::{Error, Result};
pub use graph::Graph;
pub use hilbert::HilbertData;
pub use ideal::{Monomial, MonomialIdeal};
pub use linalg::Characteristic;
pub use matroid::{ElementOrder, Matroid, MatroidSpec};
pub use poly::{Poly, TuttePolynomial};
