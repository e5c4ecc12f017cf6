use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A size guard was exceeded (factorial tables, Ryser subsets, recurrences).
    #[error("{what}: got {got}, allowed range is {min}..={max}")]
    SizeLimit {
        what: &'static str,
        got: usize,
        min: usize,
        max: usize,
    },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("value {value} is not on the grid F_{density} (tolerance 1e-12)")]
    OffGrid { value: f64, density: usize },

    #[error("index {0:?} is outside the index set of the grid")]
    IndexOutOfRange(Vec<i64>),

    #[error("missing {kind} for keys {keys:?}")]
    MissingKeys { kind: &'static str, keys: Vec<Vec<i64>> },

    #[error("unexpected key {0:?}")]
    UnexpectedKey(Vec<i64>),

    #[error("grid mismatch: ({n_a}, {density_a}) vs ({n_b}, {density_b})")]
    GridMismatch {
        n_a: usize,
        density_a: usize,
        n_b: usize,
        density_b: usize,
    },

    #[error("function is not A_n-symmetric: |f(wx) - f(x)| = {residual:e} at x = {point:?}")]
    NotSymmetric { residual: f64, point: Vec<f64> },

    #[error("malformed input at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("schema violation: {0}")]
    Schema(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
