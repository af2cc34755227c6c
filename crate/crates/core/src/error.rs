use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("bracket entry [e{i}, e{j}] is invalid: {reason}")]
    InvalidBracket { i: usize, j: usize, reason: String },

    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    Jacobi { i: usize, j: usize, k: usize },

    #[error("operator weight must be nonzero")]
    ZeroWeight,

    #[error("operator weight must be 1, found {0}")]
    WeightNotOne(String),

    #[error("operator weights differ: {0} vs {1}")]
    WeightMismatch(String, String),

    #[error("Rota-Baxter identity fails on basis pair ({i}, {j})")]
    NotRotaBaxter { i: usize, j: usize },

    #[error("map is not a Lie algebra automorphism (fails on basis pair ({i}, {j}))")]
    NotAutomorphism { i: usize, j: usize },

    #[error("{0} is not a subalgebra")]
    NotSubalgebra(String),

    #[error("subspaces do not form a direct sum of the ambient space")]
    NotDirectSum,

    #[error("module condition fails: {0}")]
    ModuleCondition(String),

    #[error("a homomorphism check failed: {0}")]
    Homomorphism(String),

    #[error("constraint violated for type ({ty}): {constraint}")]
    Constraint { ty: u8, constraint: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
