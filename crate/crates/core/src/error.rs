use thiserror::Error;

/// Errors raised by the structural operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CsgError {
    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: usize, right: usize },

    #[error("index {index} out of range for level {level} (allowed 0..={max})")]
    IndexOutOfRange {
        index: usize,
        level: usize,
        max: usize,
    },

    #[error("face of a level-0 element")]
    FaceOfLevelZero,

    #[error("arrows are not composable: target {target} != source {start}")]
    NotComposable { target: String, start: String },

    #[error("invalid permutation {0:?}")]
    InvalidPerm(Vec<usize>),

    #[error("generator index {index} out of range for {strands} strands")]
    InvalidGenerator { index: usize, strands: usize },

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("incompatible horn: {0}")]
    IncompatibleHorn(String),

    #[error("filler post-verification failed: {0}")]
    FillerFailed(String),

    #[error("invalid monoid: {0}")]
    InvalidMonoid(String),
}

pub type Result<T, E = CsgError> = std::result::Result<T, E>;

pub(crate) fn check_index(index: usize, level: usize, max: usize) -> Result<()> {
    if index > max {
        Err(CsgError::IndexOutOfRange { index, level, max })
    } else {
        Ok(())
    }
}

pub(crate) fn check_levels(left: usize, right: usize) -> Result<()> {
    if left != right {
        Err(CsgError::LevelMismatch { left, right })
    } else {
        Ok(())
    }
}
