//! Problem model, dominance relation, Pareto filtering, and the two
//! non-dominated sorting schemes everything else builds on.
//!
//! All objectives are minimized. Operations here are pure functions over
//! immutable inputs and are safe to call from any number of threads.

mod dominance;
mod front;
mod problem;

pub use dominance::{
    compare_dominance, dominates, dominator_count_groups, dominator_count_partition,
    nondominated_sort_indices, nondominated_sort_iterative, pareto_filter, pareto_filter_vectors,
    pareto_indices, utopia_and_nadir, DominanceRelation,
};
pub use front::{format_float, Front};
pub use problem::{
    evaluate, BoxBounds, ConstraintSet, DecisionVector, Evaluator, ObjectiveVector, Problem,
    Solution,
};

use std::fmt;

/// Errors from the core problem/dominance machinery.
#[derive(Debug, Clone, PartialEq)]
pub enum CoreError {
    /// An objective evaluated to NaN or infinity — a malformed evaluator.
    NonFiniteObjective { objective: usize, value: f64 },
    /// Two objective vectors of different lengths were compared.
    DimensionMismatch { left: usize, right: usize },
    /// An operation that needs at least one element got none.
    EmptyInput,
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::NonFiniteObjective { objective, value } => {
                write!(
                    f,
                    "objective {objective} evaluated to non-finite value {value}"
                )
            }
            CoreError::DimensionMismatch { left, right } => {
                write!(f, "objective vector dimensions differ: {left} vs {right}")
            }
            CoreError::EmptyInput => write!(f, "empty input"),
        }
    }
}

impl std::error::Error for CoreError {}
