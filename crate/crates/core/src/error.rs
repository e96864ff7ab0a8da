use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("discriminant mismatch: sqrt({0}) vs sqrt({1})")]
    DiscMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("unsupported dimension {0} (expected 2 or 3)")]
    BadDimension(usize),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("matrix is not orthogonal")]
    NotOrthogonal,
    #[error("frame is not orthonormal")]
    NotOrthonormal,
    #[error("group closure exceeded cap of {0} elements")]
    ClosureCapExceeded(usize),
    #[error("field is not solenoidal; divergence residual: {0}")]
    NotSolenoidal(String),
    #[error("field does not satisfy the vector Helmholtz equation; residual in component {component}: {residual}")]
    NotHelmholtz { component: usize, residual: String },
    #[error("family degree parameter {0} exceeds cap {1}")]
    DegreeCapExceeded(u32, u32),
    #[error("curl is only defined for 3-dimensional fields (got dimension {0})")]
    CurlDimension(usize),
    #[error("linear system is inconsistent")]
    InconsistentSystem,
    #[error("initial point ({0}, {1}) is not on the diagonal")]
    NotOnDiagonal(f64, f64),
    #[error("non-finite state encountered at t = {t}; last good t = {last_good_t}")]
    NonFiniteState { t: f64, last_good_t: f64 },
    #[error("invalid field document: {0}")]
    BadDocument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
