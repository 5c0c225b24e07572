use thiserror::Error;

pub type Result<T> = std::result::Result<T, AlgebraError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid coefficient field: {0}")]
    InvalidField(String),
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("exponent overflow: exponent {0} does not fit in 16 bits")]
    ExponentOverflow(u32),
    #[error("ring has {0} variables; at most {1} are supported")]
    TooManyVariables(usize, usize),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("variable {0} has no image under the substitution")]
    UnmappedVariable(String),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),
    #[error("ideal is not zero-dimensional")]
    NonZeroDimensional,
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("containment violated: {0}")]
    Containment(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("search bound {bound} exceeded: {what}")]
    BoundExceeded { what: String, bound: usize },
    #[error("Hilbert–Samuel fit failed: {0}")]
    HilbertFit(String),
    /// A cross-check that can only fail through an arithmetic bug.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
