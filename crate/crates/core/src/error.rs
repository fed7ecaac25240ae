use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("h-separation violated: h_{n} = h_{j}")]
    HSeparationViolated { n: usize, j: usize },

    #[error("x-separation violated: x_{n} = x_{j}")]
    XSeparationViolated { n: usize, j: usize },

    #[error("g_{0} vanishes")]
    ZeroG(usize),

    #[error("invalid parameter vector: {0}")]
    InvalidParameters(String),

    #[error("inadmissible parameters for {family}: {reason}")]
    InadmissibleParams { family: String, reason: String },

    #[error("pattern violates rules: {0:?}")]
    RuleViolation(Vec<u8>),

    #[error("chart {chart} unreachable: pinned coordinate {coordinate} is zero")]
    ChartUnreachable { chart: String, coordinate: String },

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("unknown limit case {0:?}")]
    UnknownLimit(String),

    #[error("mismatch at n={n}, x={x}: {lhs} != {rhs}")]
    Mismatch { n: usize, x: String, lhs: String, rhs: String },

    #[error("limit {case} failed to converge at n={n}: {detail}")]
    ConvergenceFailure { case: String, n: usize, detail: String },

    #[error("parse error: {0}")]
    Parse(String),
}
