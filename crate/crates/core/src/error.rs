use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0}: zero polynomial not allowed")]
    ZeroPolynomial(&'static str),
    #[error("{op}: polynomial has degree 0 in {var}")]
    DegreeZero { op: &'static str, var: &'static str },
    #[error("expected a univariate polynomial in {0}")]
    NotUnivariate(&'static str),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("degenerate fiber: t - alpha divides the polynomial")]
    DegenerateFiber,
    #[error("certification failed: {0}")]
    Certification(String),
    #[error("parse error at {line}:{column} (offset {offset}): {message}")]
    Parse {
        line: usize,
        column: usize,
        offset: usize,
        message: String,
    },
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
