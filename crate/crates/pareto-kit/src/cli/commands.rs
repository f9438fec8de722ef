use super::config::RunConfig;
use super::CliError;
use crate::core::{format_float, Front, ObjectiveVector, Problem};
use crate::moea::{evolve, Algorithm, EvolutionConfig, MoeaError, ProblemContext};
use crate::problems;
use crate::recsys::{cf_topk, item_similarity, load_ratings, rerank, synth_dataset, RecsysError};
use crate::scalarize::{
    epsilon_constraint, epsilon_schedule, goal_attainment, lexicographic, nbi_nc_front,
    solve_scalarized, weight_sweep, EpsilonBounds, GridSearch, IdealMode, MethodKind,
    PatternSearch, ScalarizationMethod, ScalarizeError, SingleObjectiveOptimizer, SweepFront,
    WeightVector,
};
use crate::select::{
    hypervolume_set, hypervolume_set_monte_carlo, select_best, FrontScale, HypervolumeRef,
    McdmConfig, SelectError, SelectionMethod,
};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    APriori,
    APosteriori,
    NoDm,
}

fn resolve_mode(config: &RunConfig, default: Mode, allowed: &[Mode]) -> Result<Mode, CliError> {
    let mode = match config.mode.as_deref() {
        None => default,
        Some("a_priori") => Mode::APriori,
        Some("a_posteriori") => Mode::APosteriori,
        Some("no_dm") => Mode::NoDm,
        Some("interactive") => {
            return Err(CliError::Config(
                "unsupported mode: interactive decision making is not implemented".to_string(),
            ))
        }
        Some(other) => {
            return Err(CliError::Config(format!(
                "unknown mode {other:?} (expected a_priori, a_posteriori, or no_dm)"
            )))
        }
    };
    if !allowed.contains(&mode) {
        return Err(CliError::Config(format!(
            "mode {mode:?} is not valid for this command"
        )));
    }
    Ok(mode)
}

fn resolve_problem(config: &RunConfig) -> Result<Problem, CliError> {
    let name = config
        .problem
        .as_deref()
        .ok_or_else(|| CliError::Config("missing field: problem".to_string()))?;
    problems::builtin(name).ok_or_else(|| {
        CliError::Config(format!("unknown problem {name:?} (try example2, example3)"))
    })
}

fn build_optimizer(n: usize, config: &RunConfig) -> Box<dyn SingleObjectiveOptimizer> {
    match config.grid_resolution {
        Some(res) => Box::new(GridSearch::with_resolution(res)),
        None if n <= 3 => Box::new(GridSearch::default()),
        None => Box::new(PatternSearch::default()),
    }
}

fn budget(config: &RunConfig) -> usize {
    config.budget.unwrap_or(200_000)
}

fn method_kind(name: &str) -> Option<MethodKind> {
    [
        MethodKind::WeightedSum,
        MethodKind::WeightedExpSum,
        MethodKind::WeightedMetric,
        MethodKind::Chebyshev,
        MethodKind::ExpWeightedCriterion,
        MethodKind::WeightedProduct,
    ]
    .into_iter()
    .find(|k| k.name() == name)
}

fn ideal_mode(config: &RunConfig, m: usize) -> Result<IdealMode, CliError> {
    match config.ideal.as_deref() {
        None | Some("utopia") => Ok(IdealMode::Utopia(None)),
        Some("origin") => Ok(IdealMode::Origin),
        Some("goal") => {
            let goal = config.goal.clone().ok_or_else(|| {
                CliError::Config("missing field: goal (required by --ideal goal)".to_string())
            })?;
            if goal.len() != m {
                return Err(CliError::Config(format!(
                    "goal vector has {} entries, problem has {m} objectives",
                    goal.len()
                )));
            }
            Ok(IdealMode::Goal(ObjectiveVector::new(goal)))
        }
        Some(other) => Err(CliError::Config(format!(
            "unknown ideal mode {other:?} (expected utopia, origin, or goal)"
        ))),
    }
}

fn weighted_method(
    config: &RunConfig,
    kind: MethodKind,
    m: usize,
) -> Result<ScalarizationMethod, CliError> {
    let weights = config.weights.clone().ok_or_else(|| {
        CliError::Config("missing field: weights (required in a_priori mode)".to_string())
    })?;
    let weights = WeightVector::new(weights).map_err(map_scalarize)?;
    let mut method = ScalarizationMethod::new(kind, weights).with_ideal(ideal_mode(config, m)?);
    if let Some(p) = config.p {
        method = method.with_p(p);
    }
    method.validate(m).map_err(map_scalarize)?;
    Ok(method)
}

fn evolution_config(config: &RunConfig, seed: u64) -> Result<EvolutionConfig, CliError> {
    let algorithm = match config.algorithm.as_deref() {
        None => Algorithm::Nsga2,
        Some(name) => Algorithm::from_name(name)
            .ok_or_else(|| CliError::Config(format!("unknown algorithm {name:?}")))?,
    };
    let defaults = EvolutionConfig::default();
    let cfg = EvolutionConfig {
        algorithm,
        population_size: config.pop.unwrap_or(defaults.population_size),
        generations: config.gens.unwrap_or(defaults.generations),
        crossover_rate: config.crossover_rate.unwrap_or(defaults.crossover_rate),
        mutation_rate: config.mutation_rate.unwrap_or(defaults.mutation_rate),
        sigma_share: config.sigma_share.unwrap_or(defaults.sigma_share),
        tournament_comparison_size: config
            .tournament_size
            .unwrap_or(defaults.tournament_comparison_size),
        archive_capacity: config.archive_capacity.unwrap_or(defaults.archive_capacity),
        max_evaluations: None,
        collect_log: false,
        seed,
    };
    cfg.validate().map_err(map_moea)?;
    Ok(cfg)
}

fn selection_method(
    config: &RunConfig,
    default: Option<SelectionMethod>,
) -> Result<SelectionMethod, CliError> {
    let name = config
        .selection_method
        .as_deref()
        .or(config.method.as_deref());
    match name {
        Some(name) => SelectionMethod::from_name(name).ok_or_else(|| {
            CliError::Config(format!(
                "unknown selection method {name:?} (expected knee, hypervolume, topsis, promethee)"
            ))
        }),
        None => default.ok_or_else(|| {
            CliError::Config("missing field: selection_method (required in no_dm mode)".to_string())
        }),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display())))
}

pub(super) fn map_scalarize(e: ScalarizeError) -> CliError {
    match e {
        ScalarizeError::InvalidMethod(_)
        | ScalarizeError::MissingIdeal
        | ScalarizeError::Unsupported(_) => CliError::Config(e.to_string()),
        _ => CliError::Runtime(e.to_string()),
    }
}

pub(super) fn map_moea(e: MoeaError) -> CliError {
    match e {
        MoeaError::Evaluation(_) => CliError::Runtime(e.to_string()),
        _ => CliError::Config(e.to_string()),
    }
}

fn map_recsys(e: RecsysError) -> CliError {
    match e {
        RecsysError::Moea(inner) => map_moea(inner),
        RecsysError::Select(inner) => map_select(inner),
        _ => CliError::Config(e.to_string()),
    }
}

fn map_select(e: SelectError) -> CliError {
    CliError::Config(e.to_string())
}

/// Report hypervolume of a front against a reference 10% beyond its nadir,
/// in the front's own normalized space so sizes are comparable.
pub(super) fn report_hypervolume(vectors: &[ObjectiveVector]) -> f64 {
    let Ok(scale) = FrontScale::from_reference(vectors) else {
        return 0.0;
    };
    let scaled: Vec<ObjectiveVector> = vectors
        .iter()
        .map(|v| ObjectiveVector::new(scale.apply(v)))
        .collect();
    let m = scaled[0].len();
    let r = HypervolumeRef::nadir(ObjectiveVector::new(vec![1.1; m]));
    if m == 2 {
        hypervolume_set(&scaled, &r).unwrap_or(0.0)
    } else {
        hypervolume_set_monte_carlo(&scaled, &r, 65_536, 0)
            .map(|mc| mc.value)
            .unwrap_or(0.0)
    }
}

pub(super) fn cmd_solve(config: RunConfig) -> Result<(), CliError> {
    resolve_mode(&config, Mode::APriori, &[Mode::APriori])?;
    let problem = resolve_problem(&config)?;
    let m = problem.num_objectives();
    let seed = config.resolved_seed().map_err(CliError::Config)?;
    let optimizer = build_optimizer(problem.num_vars(), &config);
    let budget = budget(&config);
    let method_name = config.method.as_deref().unwrap_or("weighted-sum");

    let solution = if let Some(kind) = method_kind(method_name) {
        let method = weighted_method(&config, kind, m)?;
        solve_scalarized(&problem, &method, optimizer.as_ref(), budget, seed)
            .map_err(map_scalarize)?
    } else {
        match method_name {
            "epsilon-constraint" => {
                let kept = config.epsilon_objective.unwrap_or(1);
                if kept == 0 || kept > m {
                    return Err(CliError::Config(format!(
                        "epsilon_objective must be in 1..={m}"
                    )));
                }
                let eps = config
                    .epsilon_bounds
                    .clone()
                    .ok_or_else(|| CliError::Config("missing field: epsilon_bounds".to_string()))?;
                if eps.len() != m {
                    return Err(CliError::Config(format!(
                        "epsilon_bounds needs {m} entries (the kept slot is ignored)"
                    )));
                }
                let bounds = EpsilonBounds::new(kept - 1, eps).map_err(map_scalarize)?;
                epsilon_constraint(&problem, &bounds, optimizer.as_ref(), budget, seed)
                    .map_err(map_scalarize)?
            }
            "goal-attainment" => {
                let goal = config
                    .goal
                    .clone()
                    .ok_or_else(|| CliError::Config("missing field: goal".to_string()))?;
                goal_attainment(
                    &problem,
                    &ObjectiveVector::new(goal),
                    optimizer.as_ref(),
                    budget,
                    seed,
                )
                .map_err(map_scalarize)?
            }
            "lexicographic" => {
                let order = config
                    .order
                    .clone()
                    .ok_or_else(|| CliError::Config("missing field: order".to_string()))?;
                if order.iter().any(|i| *i == 0 || *i > m) {
                    return Err(CliError::Config(format!(
                        "order entries must be in 1..={m}"
                    )));
                }
                let order: Vec<usize> = order.iter().map(|i| i - 1).collect();
                let slacks = match config.slack {
                    Some(s) => vec![s; m],
                    None => {
                        default_lexicographic_slacks(&problem, optimizer.as_ref(), budget, seed)?
                    }
                };
                lexicographic(&problem, &order, optimizer.as_ref(), &slacks, budget, seed)
                    .map_err(map_scalarize)?
            }
            other => {
                return Err(CliError::Config(format!("unknown method {other:?}")));
            }
        }
    };

    let front = Front::new(vec![solution]);
    let csv = front.to_csv();
    print!("{csv}");
    if let Some(path) = &config.output {
        write_file(path, &csv)?;
    }
    Ok(())
}

/// Default lexicographic slack: 1e-6 of each objective's feasible range.
fn default_lexicographic_slacks(
    problem: &Problem,
    optimizer: &dyn SingleObjectiveOptimizer,
    budget: usize,
    seed: u64,
) -> Result<Vec<f64>, CliError> {
    let feasible = |x: &[f64]| problem.is_feasible(x);
    let mut slacks = Vec::with_capacity(problem.num_objectives());
    for i in 0..problem.num_objectives() {
        let lo_x = optimizer
            .minimize(
                &|x: &[f64]| (problem.objectives[i])(x),
                &problem.bounds,
                &feasible,
                budget,
                seed,
            )
            .map_err(map_scalarize)?;
        let hi_x = optimizer
            .minimize(
                &|x: &[f64]| -(problem.objectives[i])(x),
                &problem.bounds,
                &feasible,
                budget,
                seed,
            )
            .map_err(map_scalarize)?;
        let lo = (problem.objectives[i])(lo_x.as_slice());
        let hi = (problem.objectives[i])(hi_x.as_slice());
        slacks.push(1e-6 * (hi - lo).abs().max(1e-12));
    }
    Ok(slacks)
}

pub(super) fn cmd_front(config: RunConfig) -> Result<(), CliError> {
    let mode = resolve_mode(&config, Mode::APosteriori, &[Mode::APosteriori, Mode::NoDm])?;
    let problem = resolve_problem(&config)?;
    let m = problem.num_objectives();
    let seed = config.resolved_seed().map_err(CliError::Config)?;
    // In no-DM mode the selection method must be fixed before the run.
    let selector = match mode {
        Mode::NoDm => Some(selection_method(&config, None)?),
        _ => None,
    };

    if config.generator.is_some() && config.algorithm.is_some() {
        return Err(CliError::Config(
            "give either a generator or an algorithm, not both".to_string(),
        ));
    }

    let grid = config.grid.unwrap_or(11);
    let (front, csv) = if let Some(generator) = config.generator.as_deref() {
        let optimizer = build_optimizer(problem.num_vars(), &config);
        let budget = budget(&config);
        let sweep: SweepFront = match generator {
            "weight-sweep" => {
                let kind = match config.method.as_deref() {
                    None => MethodKind::WeightedSum,
                    Some(name) => method_kind(name).ok_or_else(|| {
                        CliError::Config(format!("unknown sweep method {name:?}"))
                    })?,
                };
                let mut template = ScalarizationMethod::new(kind, WeightVector::uniform(m))
                    .with_ideal(ideal_mode(&config, m)?);
                if let Some(p) = config.p {
                    template = template.with_p(p);
                }
                weight_sweep(&problem, &template, grid, optimizer.as_ref(), budget, seed)
                    .map_err(map_scalarize)?
            }
            "epsilon-schedule" => {
                let kept = config.epsilon_objective.unwrap_or(1);
                if kept == 0 || kept > m {
                    return Err(CliError::Config(format!(
                        "epsilon_objective must be in 1..={m}"
                    )));
                }
                epsilon_schedule(&problem, kept - 1, grid, optimizer.as_ref(), budget, seed)
                    .map_err(map_scalarize)?
            }
            "nbi-nc" => nbi_nc_front(&problem, grid, optimizer.as_ref(), budget, seed)
                .map_err(map_scalarize)?,
            other => {
                return Err(CliError::Config(format!(
                    "unknown generator {other:?} (expected weight-sweep, epsilon-schedule, nbi-nc)"
                )))
            }
        };
        (sweep.front(), sweep.to_csv())
    } else if config.algorithm.is_some() {
        let evo = evolution_config(&config, seed)?;
        let ctx = ProblemContext::new(&problem);
        let outcome = evolve(&ctx, &evo).map_err(map_moea)?;
        let front = outcome.archive.front();
        let csv = front.to_csv();
        (front, csv)
    } else {
        return Err(CliError::Config(
            "missing field: generator or algorithm".to_string(),
        ));
    };

    let output = config
        .output
        .clone()
        .unwrap_or_else(|| PathBuf::from("front.csv"));
    write_file(&output, &csv)?;
    let vectors = front.objective_vectors();
    println!(
        "front_size={} hypervolume={}",
        front.len(),
        format_float(report_hypervolume(&vectors))
    );

    if let Some(method) = selector {
        let weights = match &config.weights {
            Some(w) => WeightVector::new(w.clone()).map_err(map_scalarize)?,
            None => WeightVector::uniform(m),
        };
        let outcome = select_best(
            &vectors,
            method,
            &McdmConfig::uniform(m).with_weights(weights),
        )
        .map_err(map_select)?;
        println!(
            "{},{},{}",
            method.name(),
            outcome.index,
            format_float(outcome.score)
        );
    }
    Ok(())
}

pub(super) fn cmd_select(config: RunConfig) -> Result<(), CliError> {
    let path = config
        .front
        .clone()
        .ok_or_else(|| CliError::Config("missing field: front (CSV to select from)".to_string()))?;
    let text = std::fs::read_to_string(&path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    let front = Front::from_csv(&text).map_err(CliError::Config)?;
    if front.is_empty() {
        return Err(CliError::Config("front CSV holds no rows".to_string()));
    }
    let vectors = front.objective_vectors();
    let m = vectors[0].len();
    let method = selection_method(&config, None)?;
    let weights = match &config.weights {
        Some(w) => WeightVector::new(w.clone()).map_err(map_scalarize)?,
        None => WeightVector::uniform(m),
    };
    let outcome = select_best(
        &vectors,
        method,
        &McdmConfig::uniform(m).with_weights(weights),
    )
    .map_err(map_select)?;

    println!(
        "{},{},{}",
        method.name(),
        outcome.index,
        format_float(outcome.score)
    );
    if let Some(note) = &outcome.note {
        eprintln!("note: {note}");
    }

    let mut scores = String::from("id,score\n");
    for (i, s) in outcome.per_candidate.iter().enumerate() {
        let _ = writeln!(scores, "{i},{}", format_float(*s));
    }
    let scores_path = config
        .scores_output
        .clone()
        .or(config.output.clone())
        .unwrap_or_else(|| path.with_extension("scores.csv"));
    write_file(&scores_path, &scores)?;
    Ok(())
}

pub(super) fn cmd_recsys(config: RunConfig) -> Result<(), CliError> {
    resolve_mode(&config, Mode::NoDm, &[Mode::NoDm])?;
    let seed = config.resolved_seed().map_err(CliError::Config)?;

    let matrix = match (&config.ratings, &config.synthetic) {
        (Some(_), Some(_)) => {
            return Err(CliError::Config(
                "give either ratings or synthetic, not both".to_string(),
            ))
        }
        (Some(path), None) => {
            let provisional = config.like_threshold.unwrap_or(f64::NAN);
            let loaded = load_ratings(path, provisional).map_err(map_recsys)?;
            match config.like_threshold {
                Some(_) => loaded,
                None => {
                    let (lo, hi) = loaded.rating_bounds();
                    loaded.with_like_threshold((lo + hi) / 2.0)
                }
            }
        }
        (None, Some(spec)) => {
            let parse = |s: &str| s.trim().parse::<usize>().ok();
            let parts: Vec<Option<usize>> = spec.split(',').map(parse).collect();
            match parts.as_slice() {
                [Some(users), Some(items)] if *users >= 2 && *items >= 2 => {
                    let m = synth_dataset(*users, *items, seed);
                    match config.like_threshold {
                        Some(t) => m.with_like_threshold(t),
                        None => m,
                    }
                }
                _ => {
                    return Err(CliError::Config(format!(
                        "synthetic must be USERS,ITEMS with both at least 2, found {spec:?}"
                    )))
                }
            }
        }
        (None, None) => {
            return Err(CliError::Config(
                "missing field: ratings or synthetic".to_string(),
            ))
        }
    };

    let k = config.top_k.unwrap_or(50);
    let n = config.top_n.unwrap_or(10);
    if n > k {
        return Err(map_recsys(RecsysError::InvalidN { n, k }));
    }
    let evo = evolution_config(&config, seed)?;
    let method = match config.selection_method.as_deref() {
        None => SelectionMethod::Promethee,
        Some(_) => selection_method(&config, Some(SelectionMethod::Promethee))?,
    };

    if let Some(dir) = &config.archive_dir {
        std::fs::create_dir_all(dir)
            .map_err(|e| CliError::Config(format!("cannot create {}: {e}", dir.display())))?;
    }

    let sim = item_similarity(&matrix);
    let user_count = config
        .users
        .unwrap_or(matrix.num_users())
        .min(matrix.num_users());
    let mut out = String::from("user_id,rank,item_id,f_acc,f_div,f_nov\n");
    let mut served = 0usize;
    let mut sums = [0.0f64; 3];
    for user in 0..user_count {
        let candidates = cf_topk(&matrix, &sim, user, k);
        if candidates.cold_user {
            eprintln!(
                "warning: user {} has no train ratings; using popularity candidates",
                matrix.user_id(user)
            );
        }
        if candidates.items.len() < n {
            eprintln!(
                "warning: user {} has only {} candidates for a top-{n} list; skipped",
                matrix.user_id(user),
                candidates.items.len()
            );
            continue;
        }
        let per_user = EvolutionConfig {
            seed: seed.wrapping_add((user as u64).wrapping_mul(0x9E37_79B9)),
            ..evo.clone()
        };
        let outcome = match rerank(&matrix, &sim, user, &candidates.items, n, &per_user, method) {
            Ok(outcome) => outcome,
            Err(e) => {
                eprintln!("warning: user {} rerank failed: {e}", matrix.user_id(user));
                continue;
            }
        };
        let selected = &outcome.archive[outcome.selected];
        for (rank, item) in selected.items.iter().enumerate() {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                matrix.user_id(user),
                rank + 1,
                matrix.item_id(*item),
                format_float(selected.objectives[0]),
                format_float(selected.objectives[1]),
                format_float(selected.objectives[2]),
            );
        }
        for (slot, v) in selected.objectives.iter().enumerate() {
            sums[slot] += 1.0 - v;
        }
        served += 1;

        if let Some(dir) = &config.archive_dir {
            let mut archive_csv = String::from("id");
            for i in 1..=n {
                let _ = write!(archive_csv, ",item_{i}");
            }
            archive_csv.push_str(",f_acc,f_div,f_nov\n");
            for (id, list) in outcome.archive.iter().enumerate() {
                let _ = write!(archive_csv, "{id}");
                for item in &list.items {
                    let _ = write!(archive_csv, ",{}", matrix.item_id(*item));
                }
                let _ = writeln!(
                    archive_csv,
                    ",{},{},{}",
                    format_float(list.objectives[0]),
                    format_float(list.objectives[1]),
                    format_float(list.objectives[2]),
                );
            }
            write_file(
                &dir.join(format!("user_{}.csv", matrix.user_id(user))),
                &archive_csv,
            )?;
        }
    }

    let output = config
        .output
        .clone()
        .unwrap_or_else(|| PathBuf::from("recommendations.csv"));
    write_file(&output, &out)?;
    if served == 0 {
        return Err(CliError::Runtime(
            "no user produced a recommendation list".to_string(),
        ));
    }
    println!(
        "users={served} mean_precision={} mean_diversity={} mean_novelty={}",
        format_float(sums[0] / served as f64),
        format_float(sums[1] / served as f64),
        format_float(sums[2] / served as f64),
    );
    Ok(())
}
