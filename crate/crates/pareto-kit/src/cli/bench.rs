use super::commands::{map_moea, map_scalarize, report_hypervolume};
use super::config::RunConfig;
use super::CliError;
use crate::core::{evaluate, pareto_indices, DecisionVector, ObjectiveVector, Problem};
use crate::moea::{evolve, Algorithm, EvolutionConfig, ProblemContext};
use crate::problems;
use crate::scalarize::{weight_sweep, GridSearch, MethodKind, ScalarizationMethod, WeightVector};
use crate::select::{coverage_gap, max_spacing};
use serde::Serialize;

#[derive(Debug, Serialize)]
struct BenchRow {
    problem: String,
    method: String,
    points: usize,
    coverage_gap: f64,
    grid_spacing: f64,
    hypervolume: f64,
}

#[derive(Debug, Serialize)]
struct BenchCheck {
    name: String,
    passed: bool,
    detail: String,
}

#[derive(Debug, Serialize)]
struct BenchReport {
    seed: u64,
    rows: Vec<BenchRow>,
    checks: Vec<BenchCheck>,
}

/// Lay a uniform grid over the decision box, evaluate everything, and keep
/// the non-dominated objective vectors. This is the reference front the
/// methods are measured against.
fn dense_grid_front(problem: &Problem, per_dim: &[usize]) -> Vec<ObjectiveVector> {
    assert_eq!(per_dim.len(), problem.num_vars());
    let mut idx = vec![0usize; per_dim.len()];
    let mut vectors: Vec<ObjectiveVector> = Vec::new();
    loop {
        let x: Vec<f64> = idx
            .iter()
            .enumerate()
            .map(|(d, &i)| {
                let k = per_dim[d];
                let lo = problem.bounds.lower[d];
                let hi = problem.bounds.upper[d];
                if k <= 1 {
                    lo
                } else {
                    lo + (hi - lo) * i as f64 / (k as f64 - 1.0)
                }
            })
            .collect();
        let s = evaluate(problem, &DecisionVector::new(x))
            .expect("built-in problems evaluate everywhere");
        if s.feasible {
            vectors.push(s.f);
        }
        let mut d = 0;
        loop {
            idx[d] += 1;
            if idx[d] < per_dim[d] {
                break;
            }
            idx[d] = 0;
            d += 1;
            if d == per_dim.len() {
                break;
            }
        }
        if d == per_dim.len() {
            break;
        }
    }
    let keep = pareto_indices(&vectors);
    keep.into_iter().map(|i| vectors[i].clone()).collect()
}

struct MethodFront {
    name: &'static str,
    vectors: Vec<ObjectiveVector>,
    decision_x: Vec<f64>,
}

fn run_methods(
    problem: &Problem,
    gens: usize,
    budget: usize,
    seed: u64,
) -> Result<Vec<MethodFront>, CliError> {
    let optimizer = GridSearch::default();
    let mut fronts = Vec::new();
    for kind in [MethodKind::WeightedSum, MethodKind::Chebyshev] {
        let template = ScalarizationMethod::new(kind, WeightVector::uniform(2));
        let sweep = weight_sweep(problem, &template, 101, &optimizer, budget, seed)
            .map_err(map_scalarize)?;
        fronts.push(MethodFront {
            name: kind.name(),
            vectors: sweep.front().objective_vectors(),
            decision_x: sweep.rows().iter().map(|r| r.solution.x[0]).collect(),
        });
    }
    let evo = EvolutionConfig {
        algorithm: Algorithm::Nsga2,
        population_size: 100,
        generations: gens,
        seed,
        ..EvolutionConfig::default()
    };
    let ctx = ProblemContext::new(problem);
    let outcome = evolve(&ctx, &evo).map_err(map_moea)?;
    fronts.push(MethodFront {
        name: "nsga2",
        vectors: outcome.archive.objective_vectors(),
        decision_x: outcome
            .archive
            .members()
            .iter()
            .map(|e| e.solution.x[0])
            .collect(),
    });
    Ok(fronts)
}

pub(super) fn cmd_bench(config: RunConfig) -> Result<(), CliError> {
    let seed = config.resolved_seed().map_err(CliError::Config)?;
    let budget = config.budget.unwrap_or(60_000);
    let json = config.json.unwrap_or(false);

    let mut rows = Vec::new();
    let mut checks = Vec::new();
    let mut gaps: Vec<(String, String, f64)> = Vec::new();

    for (name, per_dim, gens) in [
        ("example2", vec![2001usize], 100usize),
        ("example3", vec![401, 41], 200),
    ] {
        let problem = problems::builtin(name).expect("built-in");
        let grid_front = dense_grid_front(&problem, &per_dim);
        let spacing = max_spacing(&grid_front).expect("grid front has many points");
        let methods = run_methods(&problem, gens, budget, seed)?;
        for mf in &methods {
            let gap = coverage_gap(&grid_front, &mf.vectors).expect("non-empty fronts");
            rows.push(BenchRow {
                problem: name.to_string(),
                method: mf.name.to_string(),
                points: mf.vectors.len(),
                coverage_gap: gap,
                grid_spacing: spacing,
                hypervolume: report_hypervolume(&mf.vectors),
            });
            gaps.push((name.to_string(), mf.name.to_string(), gap));
        }
        if name == "example2" {
            let nsga2 = methods.last().expect("nsga2 runs last");
            let inside = nsga2
                .decision_x
                .iter()
                .filter(|x| (0.0..=3.0 + 1e-6).contains(*x))
                .count();
            let share = inside as f64 / nsga2.decision_x.len().max(1) as f64;
            checks.push(BenchCheck {
                name: "example2_nsga2_pareto_set_share".to_string(),
                passed: share >= 0.95,
                detail: format!("{:.1}% of archive members in [0, 3]", 100.0 * share),
            });
        }
    }

    let gap_of = |problem: &str, method: &str| -> f64 {
        gaps.iter()
            .find(|(p, m, _)| p == problem && m == method)
            .map(|(_, _, g)| *g)
            .expect("all methods ran")
    };
    let ex3_spacing = rows
        .iter()
        .find(|r| r.problem == "example3")
        .map(|r| r.grid_spacing)
        .expect("example3 ran");
    let ws = gap_of("example3", "weighted-sum");
    let cheb = gap_of("example3", "chebyshev");
    let nsga2 = gap_of("example3", "nsga2");
    checks.push(BenchCheck {
        name: "example3_weighted_sum_misses_concave_segment".to_string(),
        passed: ws > 3.0 * ex3_spacing,
        detail: format!("gap {ws:.4} vs 3x grid spacing {:.4}", 3.0 * ex3_spacing),
    });
    checks.push(BenchCheck {
        name: "example3_chebyshev_halves_the_gap".to_string(),
        passed: cheb <= ws / 2.0,
        detail: format!("gap {cheb:.4} vs weighted-sum {ws:.4}"),
    });
    checks.push(BenchCheck {
        name: "example3_nsga2_halves_the_gap".to_string(),
        passed: nsga2 <= ws / 2.0,
        detail: format!("gap {nsga2:.4} vs weighted-sum {ws:.4}"),
    });

    let failed = checks.iter().filter(|c| !c.passed).count();
    let report = BenchReport { seed, rows, checks };
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        println!("problem   method           points  coverage_gap  grid_spacing  hypervolume");
        for r in &report.rows {
            println!(
                "{:<9} {:<16} {:>6}  {:>12.6}  {:>12.6}  {:>11.6}",
                r.problem, r.method, r.points, r.coverage_gap, r.grid_spacing, r.hypervolume
            );
        }
        for c in &report.checks {
            println!(
                "CHECK {} {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            );
        }
    }
    if failed > 0 {
        return Err(CliError::ChecksFailed(failed));
    }
    Ok(())
}
