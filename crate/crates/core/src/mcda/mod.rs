//! SAW, TOPSIS and VIKOR rankers plus the VIKOR compromise-solution rule.

mod saw;
mod topsis;
mod vikor;

pub use saw::{saw_normalize, saw_rank};
pub use topsis::topsis_rank;
pub use vikor::{vikor_compromise, vikor_rank, CompromiseSet, VikorParams};

use thiserror::Error;

use crate::model::{DecisionMatrix, Method, Ranking};

#[derive(Debug, Error, PartialEq)]
pub enum McdaError {
    #[error("VIKOR strategy weight v must lie in [0, 1], got {0}")]
    InvalidV(f64),
    #[error("compromise solution needs a VIKOR ranking, got {0}")]
    NotVikor(Method),
    #[error("ranking trace lacks {0}")]
    MissingTrace(&'static str),
}

/// Ranks `matrix` with `method`; `params` is only read by VIKOR.
pub fn rank(matrix: &DecisionMatrix, method: Method, params: VikorParams) -> Ranking {
    match method {
        Method::Saw => saw_rank(matrix),
        Method::Topsis => topsis_rank(matrix),
        Method::Vikor => vikor_rank(matrix, params),
    }
}
