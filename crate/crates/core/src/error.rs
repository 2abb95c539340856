use thiserror::Error;

/// Errors raised by the arithmetic, evaluation and registry layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid modulus {0}: expected an odd prime")]
    InvalidModulus(u64),

    #[error("{a} is not invertible modulo {m}")]
    NotInvertible { a: i128, m: u64 },

    #[error("division by zero in {0}")]
    DivisionByZero(&'static str),

    #[error("{num}/{den} is not {p}-integral")]
    NotPIntegral { num: i128, den: i128, p: u64 },

    #[error("index {n} too large for characteristic {p}")]
    IndexTooLarge { n: u64, p: u64 },

    #[error("prime {p} too large for {what}")]
    PrimeTooLarge { p: u64, what: &'static str },

    #[error("operation not applicable: {0}")]
    Inapplicable(String),

    #[error("cannot normalize {x}^2 + {d}*{y}^2 to satisfy {condition}")]
    Normalization {
        x: i64,
        y: i64,
        d: u64,
        condition: String,
    },

    #[error("evaluation routes disagree: {0}")]
    RouteMismatch(String),

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),

    #[error("registry encoding error: {0}")]
    Registry(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
