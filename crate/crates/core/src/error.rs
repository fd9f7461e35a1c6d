use thiserror::Error;

use crate::arith::{format_rational, Rational};

#[derive(Debug, Error)]
pub enum Error {
    #[error("parts sum to {sum}, expected {total}")]
    MultinomialMismatch { total: u64, sum: u64 },

    #[error("dominance compares partitions of equal weight, got {left} and {right}")]
    WeightMismatch { left: usize, right: usize },

    #[error("composition of length {len} does not fit in {n} slots")]
    TooLong { len: usize, n: usize },

    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<i64>),

    #[error("polynomials in {left} and {right} variables cannot be combined")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("zero substituted for x{index}, which carries a negative exponent")]
    ZeroAtPole { index: usize },

    #[error("alpha must be nonzero")]
    ZeroAlpha,

    #[error("kernel exponent must be a positive integer, got {}", format_rational(.0))]
    NonIntegerExponent(Rational),

    #[error("Gram system for {partition:?} is singular at alpha = {}", format_rational(.alpha))]
    SingularGram { partition: Vec<usize>, alpha: Rational },

    #[error("hook product for {partition:?} has a zero factor at alpha = {}", format_rational(.alpha))]
    DegenerateHook { partition: Vec<usize>, alpha: Rational },

    #[error("division by {divisor} is not exact")]
    InexactDivision { divisor: String },

    #[error("{what} needs at least {needed} variables, got {n}")]
    NotEnoughVariables { what: &'static str, needed: usize, n: usize },

    #[error("{0} exceeds the configured cap")]
    CapExceeded(String),

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),

    #[error("invalid tensor: {0}")]
    InvalidTensor(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
