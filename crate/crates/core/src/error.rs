use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("undefined resultant: both polynomials are zero")]
    UndefinedResultant,
    #[error("not a polynomial square")]
    NotPolynomialSquare,
    #[error("not etale: {0}")]
    NotEtale(String),
    #[error("division by a non-unit (component {component})")]
    NonUnit { component: usize },
    #[error("linear system has no solution")]
    NoSolution,
    #[error("factorization inconclusive after {tried} candidates (cap {cap})")]
    FactorInconclusive { tried: u64, cap: u64 },
    #[error("genericity search exhausted after {attempts} substitutions")]
    GenericityExhausted { attempts: u32, tried: Vec<String> },
    #[error("unknown module map name: {0}")]
    UnknownMapName(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("degenerate quadratic form")]
    DegenerateForm,
    #[error("transfer degenerate")]
    TransferDegenerate,
    #[error("lambda is a root of rho")]
    RhoRoot,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
