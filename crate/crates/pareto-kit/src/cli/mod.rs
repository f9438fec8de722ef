//! Command-line entry point: `solve` for a-priori scalarization, `front`
//! for a-posteriori Pareto set generation, `select` for picking one
//! solution from a front CSV, `recsys` for the recommender re-ranking
//! pipeline, and `bench` for the built-in front-quality comparison.
//!
//! Exit codes: 0 success, 1 bench check failure, 2 configuration or input
//! error, 3 runtime optimizer failure.

mod bench;
mod commands;
mod config;

pub use config::RunConfig;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

/// Outcome carried to the process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Exit 2: bad configuration, flags, or input files.
    Config(String),
    /// Exit 3: an optimizer or evaluation failed at runtime.
    Runtime(String),
    /// Exit 1: a bench quality check did not hold.
    ChecksFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::ChecksFailed(_) => 1,
            CliError::Config(_) => 2,
            CliError::Runtime(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "configuration error: {msg}"),
            CliError::Runtime(msg) => write!(f, "runtime error: {msg}"),
            CliError::ChecksFailed(n) => write!(f, "{n} bench check(s) failed"),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "pareto-kit",
    version,
    about = "Deterministic multi-objective optimization toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scalarize with decision-maker weights and solve for one solution.
    Solve(CommonArgs),
    /// Generate a Pareto front via sweeps, NBI/NC, or an evolutionary run.
    Front(CommonArgs),
    /// Pick the best row of a front CSV.
    Select(CommonArgs),
    /// Re-rank recommendations balancing accuracy, diversity, and novelty.
    Recsys(CommonArgs),
    /// Compare front quality of weighted-sum, Chebyshev, and NSGA-II on
    /// the built-in problems.
    Bench(CommonArgs),
}

/// Every flag mirrors a `RunConfig` field; a JSON config file can supply
/// any of them and flags override the file.
#[derive(Args, Default)]
struct CommonArgs {
    /// JSON config file mirroring these flags.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Built-in problem name (example2, example3).
    #[arg(long)]
    problem: Option<String>,
    /// DM involvement: a_priori, a_posteriori, or no_dm.
    #[arg(long)]
    mode: Option<String>,
    /// Scalarization method (weighted-sum, weighted-exp-sum,
    /// weighted-metric, chebyshev, exp-weighted-criterion,
    /// weighted-product, epsilon-constraint, goal-attainment,
    /// lexicographic).
    #[arg(long)]
    method: Option<String>,
    /// Front generator (weight-sweep, epsilon-schedule, nbi-nc).
    #[arg(long)]
    generator: Option<String>,
    /// Evolutionary algorithm (vega, moga, nsga, nsga2, npga, paes).
    #[arg(long)]
    algorithm: Option<String>,
    /// Objective weights, comma separated.
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<f64>>,
    /// Exponent for the exponent-bearing scalarizations.
    #[arg(long)]
    p: Option<f64>,
    /// Ideal point mode for distance scalarizations (utopia, origin, goal).
    #[arg(long)]
    ideal: Option<String>,
    /// Goal vector, comma separated.
    #[arg(long, value_delimiter = ',')]
    goal: Option<Vec<f64>>,
    /// 1-based objective kept by the epsilon-constraint method.
    #[arg(long)]
    epsilon_objective: Option<usize>,
    /// Epsilon upper bounds in objective order (the kept slot is ignored).
    #[arg(long, value_delimiter = ',')]
    epsilon_bounds: Option<Vec<f64>>,
    /// 1-based lexicographic importance order, comma separated.
    #[arg(long, value_delimiter = ',')]
    order: Option<Vec<usize>>,
    /// Lexicographic stage slack.
    #[arg(long)]
    slack: Option<f64>,
    /// Sweep grid size (weights, epsilon levels, or NBI base points).
    #[arg(long)]
    grid: Option<usize>,
    /// Population size.
    #[arg(long)]
    pop: Option<usize>,
    /// Generation count.
    #[arg(long)]
    gens: Option<usize>,
    #[arg(long)]
    crossover_rate: Option<f64>,
    #[arg(long)]
    mutation_rate: Option<f64>,
    #[arg(long)]
    sigma_share: Option<f64>,
    /// NPGA comparison group size.
    #[arg(long)]
    tournament_size: Option<usize>,
    #[arg(long)]
    archive_capacity: Option<usize>,
    /// Evaluation budget per single-objective sub-problem.
    #[arg(long)]
    budget: Option<usize>,
    /// Grid-search resolution per dimension.
    #[arg(long)]
    grid_resolution: Option<usize>,
    /// Selection method (knee, hypervolume, topsis, promethee).
    #[arg(long = "select")]
    selection_method: Option<String>,
    /// Random seed; falls back to PARETO_KIT_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
    /// Output CSV path.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Per-candidate scores CSV path (select).
    #[arg(long)]
    scores_output: Option<PathBuf>,
    /// Front CSV to select from.
    #[arg(long)]
    front: Option<PathBuf>,
    /// Ratings CSV (user_id,item_id,rating).
    #[arg(long)]
    ratings: Option<PathBuf>,
    /// Synthetic dataset size as USERS,ITEMS.
    #[arg(long)]
    synthetic: Option<String>,
    /// Candidate slate size per user.
    #[arg(long = "K")]
    top_k: Option<usize>,
    /// Recommendation list length.
    #[arg(long = "N")]
    top_n: Option<usize>,
    /// Ratings at or above this count as likes (default: scale midpoint).
    #[arg(long)]
    like_threshold: Option<f64>,
    /// Re-rank only the first COUNT users.
    #[arg(long)]
    users: Option<usize>,
    /// Directory for per-user archive CSVs.
    #[arg(long)]
    archive_dir: Option<PathBuf>,
    /// Machine-readable bench report.
    #[arg(long)]
    json: bool,
}

impl CommonArgs {
    fn into_config(self) -> Result<RunConfig, CliError> {
        let file = match &self.config {
            Some(path) => RunConfig::from_file(path).map_err(CliError::Config)?,
            None => RunConfig::default(),
        };
        let flags = RunConfig {
            problem: self.problem,
            mode: self.mode,
            method: self.method,
            generator: self.generator,
            algorithm: self.algorithm,
            weights: self.weights,
            p: self.p,
            ideal: self.ideal,
            goal: self.goal,
            epsilon_objective: self.epsilon_objective,
            epsilon_bounds: self.epsilon_bounds,
            order: self.order,
            slack: self.slack,
            grid: self.grid,
            pop: self.pop,
            gens: self.gens,
            crossover_rate: self.crossover_rate,
            mutation_rate: self.mutation_rate,
            sigma_share: self.sigma_share,
            tournament_size: self.tournament_size,
            archive_capacity: self.archive_capacity,
            budget: self.budget,
            grid_resolution: self.grid_resolution,
            selection_method: self.selection_method,
            seed: self.seed,
            output: self.output,
            scores_output: self.scores_output,
            front: self.front,
            ratings: self.ratings,
            synthetic: self.synthetic,
            top_k: self.top_k,
            top_n: self.top_n,
            like_threshold: self.like_threshold,
            users: self.users,
            archive_dir: self.archive_dir,
            json: if self.json { Some(true) } else { None },
        };
        Ok(flags.merged_over(file))
    }
}

/// Parse `std::env::args` and run; returns the process exit code.
pub fn run() -> i32 {
    run_with_args(std::env::args())
}

/// Testable entry point.
pub fn run_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes, not config errors.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Solve(args) => args.into_config().and_then(commands::cmd_solve),
        Command::Front(args) => args.into_config().and_then(commands::cmd_front),
        Command::Select(args) => args.into_config().and_then(commands::cmd_select),
        Command::Recsys(args) => args.into_config().and_then(commands::cmd_recsys),
        Command::Bench(args) => args.into_config().and_then(bench::cmd_bench),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("pareto-kit: {e}");
            e.exit_code()
        }
    }
}
