use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
    #[error("series must have at least one coefficient")]
    EmptySeries,
    #[error("non-invertible series: constant term is zero")]
    NonInvertible,
    #[error("non-rational branch point: constant term {0} has no positive rational square root")]
    NonRationalBranchPoint(String),
    #[error(
        "continued fraction terminates early at a_{index}: remainder has zero linear coefficient"
    )]
    TerminatesEarly { index: usize },
    #[error(
        "insufficient series order: {depth} partial numerators need order > {depth}, got {order}"
    )]
    InsufficientOrder { depth: usize, order: usize },
    #[error("series constant term must be 1, got {0}")]
    ConstantTermNotOne(String),
    #[error("continued fraction must have at least one partial numerator")]
    EmptyContinuedFraction,
    #[error("continued fraction pole at x = {x}")]
    ContinuedFractionPole { x: f64 },
    #[error("tail becomes complex on this domain: 1 + 4cx = {discriminant} < 0")]
    ComplexTail { discriminant: f64 },
    #[error("tail constant must be nonzero")]
    ZeroTailConstant,
    #[error("x = {0} outside the domain [0, 1]")]
    Domain(f64),
    #[error("degenerate point: a = b = 0")]
    DegeneratePoint,
    #[error("invalid axes a = {a}, b = {b}")]
    InvalidAxes { a: f64, b: f64 },
    #[error("Cantrell denominator g(x) = {0} is not positive")]
    CantrellDenominator(f64),
    #[error("{0} has no exact rational expansion")]
    NoExactExpansion(String),
    #[error("order {n} unaffected by x^{m} perturbation")]
    ZeroSensitivity { m: usize, n: usize },
    #[error("coefficient of x^{n} is not affine in the x^{m} perturbation")]
    NonAffine { m: usize, n: usize },
    #[error("invalid perturbation: {0}")]
    InvalidPerturbation(String),
    #[error("quadrature tolerance {tol:e} unreachable within {evaluations} evaluations (partial value {value}, error estimate {estimated_error:e})")]
    QuadratureBudget {
        tol: f64,
        value: f64,
        estimated_error: f64,
        evaluations: usize,
    },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("unknown approximant {0:?}")]
    UnknownApproximant(String),
    #[error("empty report")]
    EmptyReport,
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
