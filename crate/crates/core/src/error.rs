use thiserror::Error;

/// Errors raised by the arithmetic, geometry and analysis layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("conductor mismatch: Q(zeta_{left}) vs Q(zeta_{right})")]
    ConductorMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid conductor {0}: must be at least 1")]
    InvalidConductor(u32),
    #[error("expected {expected} coefficients for Q(zeta_{m}), found {found}")]
    CoefficientLength { m: u32, expected: usize, found: usize },
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
    #[error("all homogeneous coordinates are zero")]
    ZeroPoint,
    #[error("a line needs two distinct points")]
    CoincidentPoints,
    #[error("the two lines are identical")]
    IdenticalLines,
    #[error("{what} requires n >= {min}, got n = {n}")]
    DegreeTooSmall { what: &'static str, min: u32, n: u32 },
    #[error("{what} must lie in {min}..={max}, got {value}")]
    OutOfRange { what: &'static str, min: i64, max: i64, value: i64 },
    #[error("{0}")]
    Inapplicable(String),
    #[error("no singular points (s = 0): the linear Harbourne constant is undefined")]
    NoSingularPoints,
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error("lines {first} and {second} coincide")]
    DuplicateLine { first: usize, second: usize },
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
