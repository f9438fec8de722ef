//! Multi-objective evolutionary algorithms: VEGA, MOGA, NSGA, NSGA-II,
//! NPGA, and PAES over binary, permutation, and real-valued genomes, with
//! fitness sharing for diversity and a crowding-bounded Pareto archive.
//!
//! Every run owns its RNG and is deterministic for a fixed seed. The
//! archive collects every feasible non-dominated solution the run
//! evaluates, so the final front does not depend on which individuals
//! happened to survive the last generation.

mod algorithms;
mod archive;
mod fitness;
mod genome;

pub use algorithms::{
    evolve, evolve_seeded, paes_step, run_log_csv, Algorithm, EvolutionConfig, EvolutionContext,
    EvolveOutcome, GenerationStat, ListContext, ListObjective, ProblemContext,
};
pub use archive::{ArchiveEntry, ParetoArchive};
pub use fitness::{
    fitness_sharing, moga_fitness, niche_count, niche_counts, npga_tournament, nsga_dummy_fitness,
    nsga_shared_fitness, vega_assign_and_select, vega_subpopulation_probabilities,
};
pub use genome::{
    crossover, decode, genome_as_decision, mutate, random_genome, validate_genome, Decoded,
    EncodingSpec, Genome,
};

use crate::core::CoreError;
use std::fmt;

/// Errors from the evolutionary machinery.
#[derive(Debug, Clone, PartialEq)]
pub enum MoeaError {
    /// A genome violates its encoding invariants.
    InvalidGenome(String),
    /// A niche count below 1 is impossible (self always counts).
    InvalidNicheCount(f64),
    /// Bad run parameters.
    InvalidConfig(String),
    /// The population cannot support the requested operation.
    PopulationTooSmall { needed: usize, got: usize },
    /// An objective evaluation failed.
    Evaluation(CoreError),
}

impl fmt::Display for MoeaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoeaError::InvalidGenome(msg) => write!(f, "invalid genome: {msg}"),
            MoeaError::InvalidNicheCount(nc) => {
                write!(f, "niche count {nc} is below 1")
            }
            MoeaError::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
            MoeaError::PopulationTooSmall { needed, got } => {
                write!(
                    f,
                    "population of {got} cannot serve {needed} sub-populations"
                )
            }
            MoeaError::Evaluation(e) => write!(f, "evaluation failed: {e}"),
        }
    }
}

impl std::error::Error for MoeaError {}

impl From<CoreError> for MoeaError {
    fn from(e: CoreError) -> Self {
        MoeaError::Evaluation(e)
    }
}
