use serde::{Deserialize, Serialize};
use std::path::PathBuf;

/// One run's fully-specified configuration. Every field can come from a
/// JSON config file (keys are exactly these names), from a command-line
/// flag (flags win), or for the seed from the `PARETO_KIT_SEED`
/// environment variable as a fallback.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub problem: Option<String>,
    pub mode: Option<String>,
    pub method: Option<String>,
    pub generator: Option<String>,
    pub algorithm: Option<String>,
    pub weights: Option<Vec<f64>>,
    pub p: Option<f64>,
    pub ideal: Option<String>,
    pub goal: Option<Vec<f64>>,
    /// 1-based objective index kept by the epsilon-constraint method.
    pub epsilon_objective: Option<usize>,
    /// Upper bounds for the non-kept objectives, in objective order.
    pub epsilon_bounds: Option<Vec<f64>>,
    /// 1-based objective importance order for the lexicographic method.
    pub order: Option<Vec<usize>>,
    pub slack: Option<f64>,
    pub grid: Option<usize>,
    pub pop: Option<usize>,
    pub gens: Option<usize>,
    pub crossover_rate: Option<f64>,
    pub mutation_rate: Option<f64>,
    pub sigma_share: Option<f64>,
    pub tournament_size: Option<usize>,
    pub archive_capacity: Option<usize>,
    pub budget: Option<usize>,
    pub grid_resolution: Option<usize>,
    pub selection_method: Option<String>,
    pub seed: Option<u64>,
    pub output: Option<PathBuf>,
    pub scores_output: Option<PathBuf>,
    pub front: Option<PathBuf>,
    pub ratings: Option<PathBuf>,
    pub synthetic: Option<String>,
    #[serde(rename = "k")]
    pub top_k: Option<usize>,
    #[serde(rename = "n")]
    pub top_n: Option<usize>,
    pub like_threshold: Option<f64>,
    pub users: Option<usize>,
    pub archive_dir: Option<PathBuf>,
    pub json: Option<bool>,
}

macro_rules! merge_fields {
    ($flags:ident, $file:ident; $($field:ident),* $(,)?) => {
        RunConfig {
            $($field: $flags.$field.or($file.$field),)*
        }
    };
}

impl RunConfig {
    /// Read a JSON config file.
    pub fn from_file(path: &PathBuf) -> Result<RunConfig, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))
    }

    /// Flag values override file values.
    pub fn merged_over(self, file: RunConfig) -> RunConfig {
        let flags = self;
        merge_fields!(
            flags, file;
            problem, mode, method, generator, algorithm, weights, p, ideal, goal,
            epsilon_objective, epsilon_bounds, order, slack, grid, pop, gens,
            crossover_rate, mutation_rate, sigma_share, tournament_size,
            archive_capacity, budget, grid_resolution, selection_method, seed,
            output, scores_output, front, ratings, synthetic, top_k, top_n,
            like_threshold, users, archive_dir, json,
        )
    }

    /// Seed resolution: flag/file value, then `PARETO_KIT_SEED`, then 0.
    pub fn resolved_seed(&self) -> Result<u64, String> {
        if let Some(seed) = self.seed {
            return Ok(seed);
        }
        match std::env::var("PARETO_KIT_SEED") {
            Ok(text) => text
                .trim()
                .parse::<u64>()
                .map_err(|_| format!("PARETO_KIT_SEED is not a u64: {text:?}")),
            Err(_) => Ok(0),
        }
    }
}
