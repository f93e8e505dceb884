use thiserror::Error;

/// Errors raised by the polynomial ring and its substitutions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolyError {
    #[error("variable space mismatch: {left} vs {right} variables")]
    SpaceMismatch { left: usize, right: usize },
    #[error("expected a vector of length {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("at least one direction is required")]
    NoDirections,
    #[error("a polynomial needs at least one variable")]
    NoVariables,
    #[error("total degree {degree} exceeds the line-restriction limit {max}")]
    DegreeTooLarge { degree: u32, max: u32 },
}

/// Errors raised by the symmetric-matrix transforms.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SymError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("matrix order {found} does not match variable space of order {expected}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("matrix is not symmetric (entry ({row}, {col}) differs from its transpose)")]
    NotSymmetric { row: usize, col: usize },
    #[error("matrix is singular (|det| = {det:e})")]
    Singular { det: f64 },
    #[error("order {order} exceeds the symbolic determinant cap {cap}")]
    OrderTooLarge { order: usize, cap: usize },
    #[error("index subset must be nonempty with entries below {order}")]
    BadIndexSet { order: usize },
    #[error("not a permutation of 0..{order}")]
    BadPermutation { order: usize },
    #[error("block partition {sizes:?} is inconsistent with order {order}")]
    BadBlocks { sizes: Vec<usize>, order: usize },
    #[error("polynomial couples blocks through variable z{{{row},{col}}}")]
    CrossBlockVariable { row: usize, col: usize },
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(f64),
}

/// Errors raised by root finding and the falsifiers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum StabError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error("root iteration did not converge after {iterations} iterations (last correction {last_correction:e})")]
    NoConvergence { iterations: usize, last_correction: f64 },
    #[error("polynomial is constant, it has no roots")]
    Constant,
    #[error("cone has no generators")]
    EmptyCone,
    #[error("cone generator {0} is zero")]
    ZeroGenerator(usize),
    #[error("cone dimension {cone} does not match {nvars} variables")]
    ConeDimension { cone: usize, nvars: usize },
}

/// Errors raised by the preserver catalogue.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PreserverError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Stab(#[from] StabError),
    #[error("transform {kind} needs a {expected} variable space")]
    WrongSpace { kind: &'static str, expected: &'static str },
    #[error("invalid parameter for {kind}: {reason}")]
    InvalidParameter { kind: &'static str, reason: String },
    #[error("degree of f in direction v is {measured}, the transform needs at most 1")]
    DirectionalDegree { measured: u32 },
}

/// Errors raised by the support combinatorics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CombinatError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error("the two exponent vectors coincide")]
    SamePoint,
    #[error("exponent vectors have different lengths")]
    LengthMismatch,
    #[error("binomial coefficients must be nonzero")]
    ZeroCoefficient,
    #[error("expected exactly two terms, found {0}")]
    NotBinomial(usize),
    #[error("start exponent is not in the support")]
    NotInSupport,
    #[error("inconsistent block specification: {0}")]
    BadBlockSpec(String),
}

/// A parse failure with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}
