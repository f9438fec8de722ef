//! # pareto-kit
//!
//! A deterministic multi-objective optimization toolkit: dominance and
//! Pareto machinery, scalarization solvers, six genetic MOEAs, automated
//! Pareto-set selection, and a multi-objective recommender re-ranking
//! pipeline, all behind a config-driven CLI.
//!
//! All objectives are minimized. Every algorithm is deterministic for a
//! fixed seed: same inputs, byte-identical outputs.
//!
//! ## Module map
//!
//! * [`core`] — problems, dominance relation, Pareto filtering, the two
//!   non-dominated sorting schemes, front CSV I/O.
//! * [`scalarize`] — weighted-sum/exponential/metric/Chebyshev/product
//!   scalarizations, epsilon-constraint, NBI/NC front tracing, goal
//!   attainment, lexicographic method, bundled grid and pattern-search
//!   optimizers.
//! * [`moea`] — VEGA, MOGA, NSGA, NSGA-II, NPGA, and PAES over binary,
//!   permutation, and real-valued genomes, with fitness sharing.
//! * [`select`] — knee point, hypervolume, TOPSIS, and PROMETHEE selectors
//!   for picking one solution from a front, plus front-quality metrics.
//! * [`recsys`] — ratings ingestion, item-based CF candidates, and
//!   multi-objective top-N re-ranking (accuracy/diversity/novelty).
//! * [`cli`] — the `pareto-kit` command-line entry point.
//! * [`problems`] — the built-in benchmark problems.
//!
//! ## Runnable examples
//!
//! One per major capability, under `examples/`:
//!
//! | Example | Shows |
//! |---------|-------|
//! | `dominance_and_fronts` | dominance relation, filtering, both sorting schemes, front CSV |
//! | `scalarize_solve` | weighted sum, Chebyshev, epsilon-constraint, goals, lexicographic |
//! | `sweep_fronts` | weight sweeps and epsilon schedules; the concave-front failure of the weighted sum |
//! | `nbi_nc` | normal-boundary-intersection front tracing |
//! | `moea_catalog` | the six evolutionary algorithms side by side |
//! | `pick_a_solution` | knee, hypervolume, TOPSIS, PROMETHEE selection |
//! | `recsys_pipeline` | CF candidates, 3-objective re-ranking, automatic pick |
//!
//! ```bash
//! cargo run --example scalarize_solve
//! cargo run --example recsys_pipeline --release
//! ```

pub mod cli;
pub mod core;
pub mod moea;
pub mod problems;
pub mod recsys;
pub mod scalarize;
pub mod select;
