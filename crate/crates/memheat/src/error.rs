use thiserror::Error;

/// Failure modes across kernel certification, discretization, time stepping
/// and trace analysis.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("kernel mass diverges: {0}")]
    DivergentMass(String),

    #[error("kernel fails positivity/mass hypothesis: {0}")]
    HypothesisG1(String),

    #[error("no admissible decay pair for kernel: {0}")]
    HypothesisG2(String),

    #[error("nonlinearity exponent out of admissible range: {0}")]
    HypothesisG3(String),

    #[error("damping matrix loses coercivity: {0}")]
    CoercivityViolated(String),

    #[error("history stamps must increase: last {last}, pushed {pushed}")]
    NonMonotoneTime { last: f64, pushed: f64 },

    #[error("mesh too coarse: {0}")]
    TooCoarse(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("nonlinear step failed at t = {time}: {detail}")]
    StepFailed { time: f64, detail: String },

    #[error("linear solve failed: {0}")]
    LinearSolve(String),

    #[error("kernel compression failed: {0}")]
    CompressionFailed(String),

    #[error("trace too short: {0}")]
    TooFewStamps(String),

    #[error("quantity indeterminate: {0}")]
    Indeterminate(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("decay envelope violated: {0}")]
    EnvelopeViolated(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
