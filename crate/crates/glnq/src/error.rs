use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum GlnqError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("singular matrix")]
    SingularMatrix,

    #[error("zero element has no discrete logarithm")]
    ZeroElement,

    #[error("pole: evaluation point makes {0} vanish")]
    Pole(String),

    #[error("value is not rational: {0}")]
    NotRational(String),

    #[error("value is not an integer: {0}")]
    NotIntegral(String),

    #[error("sign convention violated: {0}")]
    SignViolation(String),

    #[error("unsupported class for the formula path: {0}")]
    UnsupportedClass(String),

    #[error("element cap exceeded: |G| = {order} > cap {cap}")]
    CapExceeded { order: u128, cap: u128 },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),
}
