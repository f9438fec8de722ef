//! Multi-objective recommender re-ranking: ratings ingestion, item-based
//! collaborative filtering for top-K candidates, MOEA-driven top-N
//! re-ranking balancing accuracy, diversity, and novelty, and automated
//! selection of the final list.

mod ratings;
mod rerank;
mod similarity;

pub use ratings::{load_ratings, synth_dataset, RatingsMatrix, Split};
pub use rerank::{rec_list_objectives, rerank, RecList, RerankOutcome};
pub use similarity::{cf_topk, item_similarity, CfCandidates, ItemSimilarity};

use crate::moea::MoeaError;
use crate::select::SelectError;
use std::fmt;

/// Errors from the recommender pipeline.
#[derive(Debug)]
pub enum RecsysError {
    /// A ratings CSV row could not be parsed; rows are 1-based and include
    /// the header.
    ParseError {
        row: usize,
        message: String,
    },
    /// The ratings file holds no data rows.
    EmptyDataset,
    /// Asked for a longer list than there are candidates.
    InvalidN {
        n: usize,
        k: usize,
    },
    Moea(MoeaError),
    Select(SelectError),
}

impl fmt::Display for RecsysError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecsysError::ParseError { row, message } => {
                write!(f, "ratings parse error at row {row}: {message}")
            }
            RecsysError::EmptyDataset => write!(f, "ratings file holds no data rows"),
            RecsysError::InvalidN { n, k } => {
                write!(f, "cannot pick a top-{n} list from {k} candidates")
            }
            RecsysError::Moea(e) => write!(f, "{e}"),
            RecsysError::Select(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for RecsysError {}

impl From<MoeaError> for RecsysError {
    fn from(e: MoeaError) -> Self {
        RecsysError::Moea(e)
    }
}

impl From<SelectError> for RecsysError {
    fn from(e: SelectError) -> Self {
        RecsysError::Select(e)
    }
}
