use super::method::{ScalarizationMethod, WeightVector};
use super::optimizer::SingleObjectiveOptimizer;
use super::solve::{epsilon_constraint, resolve_ideal, solve_scalarized, EpsilonBounds};
use super::ScalarizeError;
use crate::core::{pareto_indices, Front, ObjectiveVector, Problem, Solution};
use std::fmt::Write as _;

/// One surviving sweep solution together with the parameters that produced
/// it.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub method: String,
    pub param_json: String,
    pub solution: Solution,
}

/// Mutually non-dominated sweep output, ordered by parameter index.
#[derive(Debug, Clone, Default)]
pub struct SweepFront {
    rows: Vec<SweepRow>,
}

impl SweepFront {
    pub fn rows(&self) -> &[SweepRow] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn front(&self) -> Front {
        Front::new(self.rows.iter().map(|r| r.solution.clone()).collect())
    }

    /// CSV with method and parameter columns prepended to the front schema:
    /// `method,param_json,id,x_1..x_n,f_1..f_M,feasible`. The JSON field is
    /// quoted since it contains commas.
    pub fn to_csv(&self) -> String {
        let n = self.rows.first().map_or(0, |r| r.solution.x.len());
        let m = self.rows.first().map_or(0, |r| r.solution.f.len());
        let mut out = String::from("method,param_json,id");
        for i in 1..=n {
            let _ = write!(out, ",x_{i}");
        }
        for i in 1..=m {
            let _ = write!(out, ",f_{i}");
        }
        out.push_str(",feasible\n");
        for (id, row) in self.rows.iter().enumerate() {
            let quoted = row.param_json.replace('"', "\"\"");
            let _ = write!(out, "{},\"{}\",{id}", row.method, quoted);
            for v in row.solution.x.as_slice() {
                let _ = write!(out, ",{}", crate::core::format_float(*v));
            }
            for v in row.solution.f.as_slice() {
                let _ = write!(out, ",{}", crate::core::format_float(*v));
            }
            let _ = writeln!(out, ",{}", row.solution.feasible);
        }
        out
    }
}

/// Evenly spaced weight vectors on the open simplex. Endpoints are offset
/// by `delta = 1e-3` so every component stays strictly positive. For two
/// objectives this yields exactly `grid_size` vectors.
pub fn simplex_weights(m: usize, grid_size: usize) -> Vec<WeightVector> {
    assert!(m >= 2, "need at least two objectives");
    assert!(grid_size >= 2, "grid_size must be at least 2");
    let delta = 1e-3;
    let steps = grid_size - 1;
    let mut out = Vec::new();
    let mut composition = vec![0usize; m];
    compositions(steps, m, &mut composition, 0, &mut |c: &[usize]| {
        let w: Vec<f64> = c
            .iter()
            .map(|&k| delta + (k as f64 / steps as f64) * (1.0 - m as f64 * delta))
            .collect();
        out.push(WeightVector::new(w).expect("simplex construction yields valid weights"));
    });
    out
}

fn compositions(
    remaining: usize,
    slots: usize,
    buf: &mut [usize],
    at: usize,
    emit: &mut dyn FnMut(&[usize]),
) {
    if at + 1 == slots {
        buf[at] = remaining;
        emit(buf);
        return;
    }
    for k in 0..=remaining {
        buf[at] = k;
        compositions(remaining - k, slots, buf, at + 1, emit);
    }
}

/// Sweep the weight simplex, solve each scalarization, and Pareto-filter
/// the results (the filter guards against optimizer noise and the weakly
/// dominated points Chebyshev can produce).
///
/// Individual weight failures are skipped; the sweep fails only when every
/// weight does.
pub fn weight_sweep(
    problem: &Problem,
    method: &ScalarizationMethod,
    grid_size: usize,
    optimizer: &dyn SingleObjectiveOptimizer,
    budget: usize,
    seed: u64,
) -> Result<SweepFront, ScalarizeError> {
    assert!(grid_size >= 2, "grid_size must be at least 2");
    let m = problem.num_objectives();
    // Resolve the ideal once: it does not depend on the weights.
    let template = resolve_ideal(problem, method, optimizer, budget, seed)?;
    let weights = simplex_weights(m, grid_size);

    let mut results: Vec<(String, Solution)> = Vec::new();
    let mut last_err = None;
    for w in &weights {
        let param_json = format!(
            "{{\"weights\":{}}}",
            serde_json::to_string(w.as_slice()).expect("weights serialize")
        );
        match solve_scalarized(
            problem,
            &template.with_weights(w.clone()),
            optimizer,
            budget,
            seed,
        ) {
            Ok(sol) => results.push((param_json, sol)),
            Err(e) => last_err = Some(e),
        }
    }
    if results.is_empty() {
        return Err(last_err.unwrap_or(ScalarizeError::OptimizerFailure(
            "weight sweep produced no solutions".to_string(),
        )));
    }
    Ok(filter_sweep(method.kind.name(), results))
}

/// Sweep the epsilon-constraint method: keep objective `objective`, slide
/// the other objectives' upper bounds over `grid_size` evenly spaced levels
/// between each objective's minimum and its value at the kept objective's
/// minimizer. Infeasible levels are recorded and skipped.
pub fn epsilon_schedule(
    problem: &Problem,
    objective: usize,
    grid_size: usize,
    optimizer: &dyn SingleObjectiveOptimizer,
    budget: usize,
    seed: u64,
) -> Result<SweepFront, ScalarizeError> {
    assert!(grid_size >= 2, "grid_size must be at least 2");
    let m = problem.num_objectives();
    if objective >= m {
        return Err(ScalarizeError::InvalidMethod(format!(
            "objective index {objective} out of range for {m} objectives"
        )));
    }

    // Anchor data: per-objective minima and each objective's value at the
    // kept objective's minimizer bound the useful epsilon range.
    let feasible = |x: &[f64]| problem.is_feasible(x);
    let mut minima = Vec::with_capacity(m);
    for i in 0..m {
        let obj = |x: &[f64]| (problem.objectives[i])(x);
        let x = optimizer
            .minimize(&obj, &problem.bounds, &feasible, budget, seed)
            .map_err(super::solve::lift_optimizer_error)?;
        minima.push((problem.objectives[i])(x.as_slice()));
    }
    let kept_best = minima[objective];
    // Tie-break the kept objective's minimizer toward small values of the
    // others; a degenerate minimizer slice would otherwise inflate the
    // schedule's upper range arbitrarily.
    let slack = 1e-9 * (1.0 + kept_best.abs());
    let tied = |x: &[f64]| feasible(x) && (problem.objectives[objective])(x) <= kept_best + slack;
    let rest = |x: &[f64]| {
        problem
            .objectives
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != objective)
            .map(|(_, f)| f(x))
            .sum::<f64>()
    };
    let kept_min_x = optimizer
        .minimize(&rest, &problem.bounds, &tied, budget, seed)
        .map_err(super::solve::lift_optimizer_error)?;
    let highs: Vec<f64> = problem
        .objectives
        .iter()
        .map(|f| f(kept_min_x.as_slice()))
        .collect();

    let mut results: Vec<(String, Solution)> = Vec::new();
    let mut last_err = None;
    for j in 0..grid_size {
        let t = j as f64 / (grid_size - 1) as f64;
        let eps: Vec<f64> = (0..m)
            .map(|i| {
                if i == objective {
                    f64::INFINITY
                } else {
                    minima[i] + t * (highs[i] - minima[i])
                }
            })
            .collect();
        let bounds = EpsilonBounds::new(objective, eps.clone())?;
        let shown: Vec<f64> = eps
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != objective)
            .map(|(_, e)| *e)
            .collect();
        let param_json = format!(
            "{{\"objective\":{objective},\"eps\":{}}}",
            serde_json::to_string(&shown).expect("eps serialize")
        );
        match epsilon_constraint(problem, &bounds, optimizer, budget, seed) {
            Ok(sol) => results.push((param_json, sol)),
            Err(e @ ScalarizeError::Infeasible(_)) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    if results.is_empty() {
        return Err(last_err.unwrap_or(ScalarizeError::OptimizerFailure(
            "epsilon schedule produced no solutions".to_string(),
        )));
    }
    Ok(filter_sweep("epsilon-constraint", results))
}

/// Pareto-filter parameterized results, preserving parameter order.
pub(crate) fn filter_sweep(method: &str, results: Vec<(String, Solution)>) -> SweepFront {
    let vectors: Vec<ObjectiveVector> = results.iter().map(|(_, s)| s.f.clone()).collect();
    let keep = pareto_indices(&vectors);
    SweepFront {
        rows: keep
            .into_iter()
            .map(|i| SweepRow {
                method: method.to_string(),
                param_json: results[i].0.clone(),
                solution: results[i].1.clone(),
            })
            .collect(),
    }
}
