use thiserror::Error;

/// Errors raised by the algebraic constructions and the word/presentation parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("determinant is {0}, expected 1")]
    NotSpecialLinear(String),
    #[error("word pair does not induce an invertible map on H3 (determinant {0})")]
    NotInvertible(String),
    #[error("unknown generator `{token}` at column {column}")]
    UnknownToken { token: String, column: usize },
    #[error("malformed word at column {column}: {message}")]
    MalformedWord { column: usize, message: String },
    #[error("line {line}: {message}")]
    Presentation { line: usize, message: String },
    #[error("homomorphism is not well defined: {0}")]
    TorsionIncompatible(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("zero quaternion has no inverse")]
    ZeroQuaternion,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("action matrix does not have the declared order: {0}")]
    ActionOrder(String),
    #[error("inconsistent extension exponents: {0}")]
    InconsistentExtension(String),
    #[error("no consistent universal-coefficient solution: {0}")]
    Uct(String),
}

pub type Result<T> = std::result::Result<T, Error>;
