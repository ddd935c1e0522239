use thiserror::Error;

/// Errors produced by state construction, evolution, and sampling.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A photon count does not fit inside the requested truncation grid.
    #[error("photon count {count} exceeds cutoff {cutoff} on the {mode} mode")]
    CutoffExceeded {
        mode: &'static str,
        count: usize,
        cutoff: usize,
    },

    /// Two states live on different truncation grids.
    #[error("cutoff mismatch: ({0}, {1}) vs ({2}, {3})")]
    CutoffMismatch(usize, usize, usize, usize),

    /// The matrix-exponential cross-check was asked for a sector larger
    /// than it is willing to exponentiate.
    #[error("sector total {total} exceeds the oracle limit {limit}")]
    OracleLimitExceeded { total: usize, limit: usize },

    /// The state has lost too much probability mass to truncation to be
    /// sampled from without visible bias.
    #[error("norm deficit {deficit:.3e} is too lossy for sampling (limit {limit:.0e})")]
    TruncationTooLossy { deficit: f64, limit: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
