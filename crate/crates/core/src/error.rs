use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("circuit elimination fails for circuits {first:?} and {second:?} on shared element {shared}")]
    CircuitElimination {
        first: Vec<String>,
        second: Vec<String>,
        shared: String,
    },
    #[error("circuit {inner:?} is contained in circuit {outer:?}")]
    NotAntichain { inner: Vec<String>, outer: Vec<String> },
    #[error("empty circuit")]
    EmptyCircuit,
    #[error("rank is not well defined: greedy scans disagree ({forward} vs {backward})")]
    RankMismatch { forward: usize, backward: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    NonRectangular {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("element {0:?} is both deleted and contracted")]
    Overlap(String),
    #[error("element {0:?} is a loop")]
    LoopPresent(String),
    #[error("{what}: size {got} exceeds the limit {limit}")]
    Bound {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("series denominator exponent {dim} exceeds codimension {codim}")]
    DenominatorExceedsCodim { dim: usize, codim: usize },
    #[error("column {0} is zero")]
    ZeroColumn(usize),
    #[error("characteristic {0} is neither 0 nor a prime")]
    InvalidCharacteristic(u64),
    #[error("expected {expected} cycles, found {found}")]
    CycleCountMismatch { expected: usize, found: usize },
    #[error("infeasible construction: {0}")]
    Infeasible(String),
    #[error("parse error in {field}: {message}")]
    Parse { field: String, message: String },
}

impl Error {
    /// True when the failure comes from a size or search bound rather than
    /// from bad input. Callers report these as inconclusive.
    pub fn is_bound(&self) -> bool {
        matches!(self, Error::Bound { .. })
    }
}
