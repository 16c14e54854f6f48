use thiserror::Error;

/// Errors surfaced by the simulation and analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument fell outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(&'static str),

    /// The adaptive quadrature exhausted its subdivision budget before
    /// reaching the requested tolerance. The partial estimate and its
    /// error bound are preserved so callers can still inspect them.
    #[error("quadrature did not converge: estimate {estimate:e} with error {abs_error:e} after {subdivisions} subdivisions")]
    QuadratureNonConvergence {
        estimate: f64,
        abs_error: f64,
        subdivisions: u32,
    },

    /// A binomial coefficient outside the exactly representable range.
    #[error("binomial coefficient C({n}, {k}) outside supported range")]
    BinomialRange { n: u32, k: u32 },

    /// The received sample was exactly zero, so no constellation point is
    /// closer than any other. Callers count this as a symbol error.
    #[error("detection ambiguous: received sample is zero")]
    DetectionAmbiguous,

    /// Paired slices of different lengths.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// A scenario configuration violating its invariants.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// A malformed key-value configuration file.
    #[error("config parse error: {0}")]
    ConfigParse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
