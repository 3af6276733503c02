use thiserror::Error;

/// Errors raised by the polynomial, tree, spectral and Salem routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor leading coefficient {0} is not a unit")]
    NonUnitDivisor(String),
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial has no real root")]
    NoRealRoot,
    #[error("tolerance must be positive")]
    NonPositiveTolerance,
    #[error("invalid interval: lower endpoint exceeds upper endpoint")]
    InvalidInterval,
    #[error("not a starlike tree: {0}")]
    NotStarlike(String),
    #[error("parameter out of range: {0}")]
    Domain(String),
    #[error("polynomial is not reciprocal")]
    NotReciprocal,
    #[error("reciprocal polynomial has odd degree {0}")]
    OddDegree(usize),
    #[error("polynomial is not monic up to sign")]
    NotMonic,
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("power iteration did not converge within {0} iterations")]
    NoConvergence(usize),
    #[error("cannot parse {what}: {token:?}")]
    Parse { what: &'static str, token: String },
}

pub type Result<T> = std::result::Result<T, Error>;
