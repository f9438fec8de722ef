//! Scalarization: transform a multi-objective problem into single-objective
//! ones and trace approximate Pareto fronts via parameter sweeps.
//!
//! Covers weighted sum, weighted exponential sum, weighted metric, weighted
//! Chebyshev, exponential weighted criterion, weighted product, the
//! epsilon-constraint method, the normal-boundary-intersection / normal
//! constraint construction, goal attainment, and the lexicographic method.

mod method;
mod nbi;
mod optimizer;
mod solve;
mod sweep;

pub use method::{IdealMode, MethodKind, ScalarizationMethod, WeightVector};
pub use nbi::{nbi_nc_front, NbiGeometry};
pub use optimizer::{default_optimizer_for, GridSearch, PatternSearch, SingleObjectiveOptimizer};
pub use solve::{
    epsilon_constraint, goal_attainment, lexicographic, lexicographic_uniform, scalar_objective,
    solve_scalarized, EpsilonBounds,
};
pub use sweep::{epsilon_schedule, weight_sweep, SweepFront, SweepRow};

use crate::core::CoreError;
use std::fmt;

/// Errors from scalarization solvers and the bundled optimizers.
#[derive(Debug, Clone, PartialEq)]
pub enum ScalarizeError {
    /// Invalid weights or method configuration.
    InvalidMethod(String),
    /// A method that measures distance to an ideal point was asked to run
    /// before the ideal was supplied or precomputed.
    MissingIdeal,
    /// The optimizer saw no point satisfying the feasibility predicate.
    NoFeasiblePoint,
    /// Feasible points existed but every scalar value was NaN or infinite.
    NoFiniteValue,
    /// The optimizer could not produce a result.
    OptimizerFailure(String),
    /// A constrained sub-problem has no attainable solution.
    Infeasible(String),
    /// Exponential or product scalarization overflowed everywhere.
    OverflowGuard(String),
    /// The requested construction is not defined for this problem shape.
    Unsupported(String),
    Core(CoreError),
}

impl fmt::Display for ScalarizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarizeError::InvalidMethod(msg) => write!(f, "invalid method: {msg}"),
            ScalarizeError::MissingIdeal => {
                write!(f, "ideal point required but not supplied or precomputed")
            }
            ScalarizeError::NoFeasiblePoint => write!(f, "no feasible point sampled"),
            ScalarizeError::NoFiniteValue => {
                write!(f, "every sampled scalar value was non-finite")
            }
            ScalarizeError::OptimizerFailure(msg) => write!(f, "optimizer failure: {msg}"),
            ScalarizeError::Infeasible(msg) => write!(f, "infeasible: {msg}"),
            ScalarizeError::OverflowGuard(msg) => write!(f, "overflow guard: {msg}"),
            ScalarizeError::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            ScalarizeError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ScalarizeError {}

impl From<CoreError> for ScalarizeError {
    fn from(e: CoreError) -> Self {
        ScalarizeError::Core(e)
    }
}
