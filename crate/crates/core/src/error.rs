use thiserror::Error;

/// Errors raised by the algebraic routines in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("polynomial family or variable count mismatch: {0}")]
    FamilyMismatch(String),

    #[error("polynomial is not divisible: {0}")]
    NotDivisible(String),

    #[error("invalid Hessenberg function: {0}")]
    InvalidHessenberg(String),

    #[error("invalid ordered graph: {0}")]
    InvalidGraph(String),

    #[error("invalid colouring: {0}")]
    InvalidColouring(String),

    #[error("ordered graph is not a unit interval graph: {0}")]
    NotUnitInterval(String),

    #[error("ordered graph has interleaving components: {0}")]
    NotDecomposable(String),

    #[error("chooser polynomial violates the edge condition on {edge:?} at vertex {vertex}")]
    ChooserViolation {
        vertex: String,
        edge: (usize, usize),
    },

    #[error("flow-up system is inconsistent at vertex {0}")]
    Infeasible(String),

    #[error("element is not in the span of the basis: {0}")]
    NotInSpan(String),

    #[error("diagonal coefficient is not a scalar at vertex {0}")]
    NonScalarDiagonal(String),

    #[error("quasisymmetric function is not symmetric")]
    NotSymmetric,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
