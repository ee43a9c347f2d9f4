use thiserror::Error;

/// Errors produced by the exact and numeric routines in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("division by zero")]
    DivisionByZero,
    #[error("substitution makes the denominator identically zero")]
    DegenerateSubstitution,
    #[error("singular colored matrix")]
    SingularMatrix,
    #[error("matrix is not square or dimensions disagree: {0}")]
    Dimension(String),
    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("invalid graph field `{field}`: {message}")]
    InvalidGraph { field: String, message: String },
    #[error("unsupported: fractional coloring")]
    FractionalColoring,
    #[error("incompatible roots")]
    IncompatibleRoots,
    #[error("incompatible comb root")]
    IncompatibleCombRoot,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid retraction: {0}")]
    InvalidRetraction(String),
    #[error("multiple w-vertices unsupported")]
    MultipleWVertices,
    #[error("level curve solve denominator vanishes identically")]
    DegenerateLevelCurve,
    #[error("order exceeds truncation")]
    OrderExceedsTruncation,
    #[error("contact order exceeds bound")]
    ContactOrderExceedsBound,
    #[error("contact order undefined: level curve has a lambda-dependent pole at infinity")]
    NegativeContactOrder,
    #[error("contact theorem needs exactly one w-colored vertex, found {0}")]
    WVertexCount(usize),
    #[error("contact theorem precondition: {0}")]
    ContactPrecondition(String),
    #[error("Pick property not asserted for general colors")]
    PickNotAsserted,
    #[error("pole proximity")]
    PoleProximity,
    #[error("numerically singular matrix")]
    NumericallySingular,
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for errors that stem from malformed user input rather than from
    /// a failed computation on well-formed input.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidGraph { .. }
                | Error::FractionalColoring
                | Error::Parse { .. }
                | Error::InvalidArgument(_)
                | Error::InvalidPermutation(_)
        )
    }

    pub(crate) fn graph(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::InvalidGraph {
            field: field.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
