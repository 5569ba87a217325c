//! Error types shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes of the library, grouped so callers can map them to
/// exit codes: usage/config problems, data problems, numeric problems.
#[derive(Debug, Error)]
pub enum Error {
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("csv structure error at row {row}: {message}")]
    CsvStructure { row: usize, message: String },

    #[error("schema error: {0}")]
    Schema(String),

    #[error("unknown column '{0}'")]
    UnknownColumn(String),

    #[error("column '{column}' cannot be imputed: {reason}")]
    UnimputableColumn { column: String, reason: String },

    #[error("scaling parameters do not cover column '{0}'")]
    ParamMismatch(String),

    #[error("degenerate split: {0}")]
    DegenerateSplit(String),

    #[error("unsupported polynomial degree {0}; only degrees 1 and 2 are supported")]
    UnsupportedDegree(usize),

    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("invalid distance matrix: {0}")]
    InvalidDistanceMatrix(String),

    #[error("stress is undefined: all input distances are zero")]
    UndefinedStress,

    #[error("neighborhood graph is disconnected ({components} components); increase n_neighbors")]
    DisconnectedGraph { components: usize },

    #[error("degenerate labels: {0}")]
    DegenerateLabels(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("underdetermined system: {rows} rows for {cols} coefficients")]
    Underdetermined { rows: usize, cols: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("training diverged at epoch {epoch}: {message}")]
    Divergence { epoch: usize, message: String },

    #[error("R^2 is undefined: target variance is zero")]
    UndefinedR2,

    #[error("correlation is undefined: {0}")]
    UndefinedCorrelation(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("{count} features exceed the exact-Shapley cap of {cap}; use shapley_sample")]
    TooManyFeatures { count: usize, cap: usize },

    #[error("kernel width {0} leaves all perturbation weights at zero")]
    KernelWidth(f64),

    #[error("render error: missing key '{0}' in plot data document")]
    RenderMissingKey(String),

    #[error("render error: {0}")]
    Render(String),

    #[error("singular matrix: {0}")]
    Singular(String),
}

impl Error {
    /// Exit-code category used by the command line interface:
    /// 2 usage, 3 data, 4 numeric.
    pub fn exit_code(&self) -> i32 {
        use Error::*;
        match self {
            Config(_) | Parameter(_) | UnsupportedDegree(_) => 2,
            Io { .. } | CsvStructure { .. } | Schema(_) | UnknownColumn(_)
            | UnimputableColumn { .. } | ParamMismatch(_) | UnknownVariant(_)
            | RenderMissingKey(_) | Render(_) | InsufficientData(_) => 3,
            _ => 4,
        }
    }
}
