use thiserror::Error;

/// Errors emitted by the numerical layers.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("gamma pole at z = {0}")]
    PoleOfGamma(String),
    #[error("hypergeometric parameter pole: c = {0}")]
    ParameterPole(String),
    #[error("2F1 evaluated on the cut [1,inf): z = {0}")]
    CutEvaluation(String),
    #[error("no convergent transformation for 2F1 argument z = {0}")]
    NoCoverage(String),
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("degenerate Legendre prefactor: {0}")]
    DegeneracyError(String),
    #[error("indicial exponents resonant: i*sigma within {0:.2e} of an integer")]
    IndicialResonance(f64),
    #[error("Frobenius recurrence breakdown: |denominator| = {0:.2e}")]
    RecurrenceBreakdown(f64),
    #[error("step size underflow near theta = {0}")]
    StepFailure(f64),
    #[error("connection matrix nearly singular: |det| = {0:.2e}")]
    NearSingularConnection(f64),
    #[error("sigma at or near a detected pole: |det| = {0:.2e}")]
    PoleDetected(f64),
    #[error("operator residual too large: {0:.2e}")]
    ResidualTooLarge(f64),
    #[error("asymptotic fit windows disagree: rel. spread {0:.2e}")]
    FitDivergence(f64),
    #[error("source grid too coarse: {0}")]
    GridTooCoarse(String),
    #[error("Richardson extrapolation diverged: {0}")]
    ExtrapolationDivergence(String),
    #[error("degenerate data: |denominator| = {0:.2e}")]
    DegenerateData(f64),
    #[error("smoothness mismatch across v=0: {0:.2e}")]
    SmoothnessMismatch(f64),
    #[error("invalid metric profile: {0}")]
    InvalidProfile(String),
    #[error("config error: {0}")]
    ConfigError(String),
    #[error("cache corruption: {0}")]
    CacheCorruption(String),
    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
