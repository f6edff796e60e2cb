use thiserror::Error;

/// Errors raised by the enumeration engine.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("denominator has zero constant term")]
    ZeroConstantDenominator,

    #[error("logarithm requires constant term 1, found {0}")]
    LogConstantTerm(String),

    #[error("u-integration requires a zero u^0 term, found one at x^{0}")]
    NonzeroUConstant(usize),

    #[error("u-degree {u_degree} exceeds x-degree {x_degree}")]
    DegreeBound { x_degree: usize, u_degree: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("automaton: {0}")]
    Automaton(String),

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("invalid wheel sequence: {0}")]
    InvalidSequence(String),

    #[error("coefficient of x^{index} is not a nonnegative integer: {value}")]
    NonIntegral { index: usize, value: String },

    #[error("routes disagree for {what} at x^{index}: {left} vs {right}")]
    RouteMismatch {
        what: String,
        index: usize,
        left: String,
        right: String,
    },

    #[error("no sign change on [{lo}, {hi}]")]
    NotBracketing { lo: f64, hi: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
