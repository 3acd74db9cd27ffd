use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Crate-wide error type. Horizon exhaustion is always reported
/// explicitly; nothing is silently truncated or guessed.
#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} out of range (valid up to {max})")]
    Range { index: usize, max: usize },

    #[error("invalid kneading map: {0}")]
    InvalidKneadingMap(String),

    #[error("kneading map rejected: not admissible (first violation at k = {violation})")]
    NotAdmissible { violation: usize },

    #[error("no slope in (sqrt 2, 2] realizes the itinerary (longest match {matched} of {required} symbols)")]
    SlopeNotFound { matched: usize, required: usize },

    #[error("horizon exhausted: {0}")]
    Horizon(String),

    #[error("pattern growth cap of {cap} entries exceeded after {steps} steps")]
    GrowthCap { cap: usize, steps: u32 },

    #[error("inconsistent folding pattern: {0}")]
    InconsistentPattern(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("chain construction failed: {0}")]
    ChainBuild(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
