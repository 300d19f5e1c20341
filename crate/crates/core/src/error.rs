use thiserror::Error;

/// Errors raised across the crate.
///
/// `Internal` marks outcomes that the underlying theory rules out; the CLI maps
/// it to exit code 3.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown Cartan type {0:?}")]
    UnknownType(String),
    #[error("type {0} has no diagram automorphism for a twist")]
    NoTwist(String),
    #[error("generator index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("invalid class parameter: {0}")]
    InvalidClass(String),
    #[error("invalid orbit parameter: {0}")]
    InvalidOrbit(String),
    #[error("group too large for enumeration: {0}")]
    TooLarge(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic context mismatch: Q(z_{0}) vs Q(z_{1})")]
    ContextMismatch(u32, u32),
    #[error("element is not real")]
    NotReal,
    #[error("{0} is not coprime to the conductor {1}")]
    NotCoprime(i64, u32),
    #[error("braids belong to different data")]
    DatumMismatch,
    #[error("not a good position pair: {0}")]
    NotGoodPosition(String),
    #[error("invalid subspace: {0}")]
    InvalidSubspace(String),
    #[error("gamma is not regular semisimple: root {0} vanishes on every component")]
    NotRegularSemisimple(String),
    #[error("component k={0} is not a z^k-eigenvector of w")]
    EigenViolation(i64),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
