use thiserror::Error;

/// Errors produced by the library and mapped to process exit codes by the CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("zero-norm wavefunction (norm^2 = {norm_sq:.3e})")]
    ZeroNorm { norm_sq: f64 },

    /// The plane-wave regime requires k^2 > alpha^2.
    #[error("excluded regime: k^2 = {k_sq:.6e} must exceed alpha^2 = {alpha_sq:.6e}")]
    Condition { k_sq: f64, alpha_sq: f64 },

    #[error("overflow guard: {0}")]
    Overflow(String),

    #[error("solver failed to converge: {0}")]
    Convergence(String),

    #[error("descent stagnated after {attempts} seed vectors")]
    Stagnation { attempts: u32 },

    #[error("grid not symmetric about the origin (x_min = {x_min}, x_max = {x_max})")]
    Symmetry { x_min: f64, x_max: f64 },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("report does not match the shipped schema: {0}")]
    Schema(String),
}

impl Error {
    /// Process exit code used by the CLI: config errors 2, solver failures 3,
    /// i/o failures 4, anything else 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::Convergence(_) | Error::Stagnation { .. } => 3,
            Error::Io(_) => 4,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
