use super::optimizer::SingleObjectiveOptimizer;
use super::solve::lift_optimizer_error;
use super::sweep::{filter_sweep, SweepFront};
use super::ScalarizeError;
use crate::core::{evaluate, DecisionVector, ObjectiveVector, Problem, Solution};

/// The geometric scaffolding of the normal-boundary-intersection / normal
/// constraint construction for two objectives.
#[derive(Debug, Clone)]
pub struct NbiGeometry {
    /// `A_i = F(argmin f_i)`, with ties on `f_i` broken toward the other
    /// objective so the anchors are true front endpoints.
    pub anchors: Vec<ObjectiveVector>,
    /// Minimizers behind the anchors.
    pub anchor_points: Vec<DecisionVector>,
    /// Utopia-line vector `A_1 - A_2`.
    pub utopia_line: Vec<f64>,
    /// Evenly spaced convex combinations of the anchors,
    /// `F_pj = w_j A_1 + (1 - w_j) A_2` with `w_j = j / (k - 1)`.
    pub base_points: Vec<ObjectiveVector>,
}

impl NbiGeometry {
    /// Compute anchors and base points. Only the bi-objective construction
    /// is defined.
    pub fn compute(
        problem: &Problem,
        n_base_points: usize,
        optimizer: &dyn SingleObjectiveOptimizer,
        budget: usize,
        seed: u64,
    ) -> Result<Self, ScalarizeError> {
        if problem.num_objectives() != 2 {
            return Err(ScalarizeError::Unsupported(format!(
                "the NBI/NC utopia-line construction is bi-objective; got M = {}",
                problem.num_objectives()
            )));
        }
        if n_base_points < 2 {
            return Err(ScalarizeError::InvalidMethod(
                "need at least two base points".to_string(),
            ));
        }
        let mut anchors = Vec::with_capacity(2);
        let mut anchor_points = Vec::with_capacity(2);
        for i in 0..2 {
            let x = anchor_minimizer(problem, i, optimizer, budget, seed)?;
            let s = evaluate(problem, &x)?;
            anchors.push(s.f);
            anchor_points.push(x);
        }
        let utopia_line: Vec<f64> = anchors[0]
            .as_slice()
            .iter()
            .zip(anchors[1].as_slice())
            .map(|(a1, a2)| a1 - a2)
            .collect();
        let base_points = (0..n_base_points)
            .map(|j| {
                let w = j as f64 / (n_base_points - 1) as f64;
                ObjectiveVector::new(
                    anchors[0]
                        .as_slice()
                        .iter()
                        .zip(anchors[1].as_slice())
                        .map(|(a1, a2)| w * a1 + (1.0 - w) * a2)
                        .collect(),
                )
            })
            .collect();
        Ok(NbiGeometry {
            anchors,
            anchor_points,
            utopia_line,
            base_points,
        })
    }
}

/// Anchor for objective `i`: minimize `f_i`, then minimize the other
/// objective among the near-ties so degenerate minimizers (whole slices of
/// the box) resolve to the actual front endpoint.
fn anchor_minimizer(
    problem: &Problem,
    i: usize,
    optimizer: &dyn SingleObjectiveOptimizer,
    budget: usize,
    seed: u64,
) -> Result<DecisionVector, ScalarizeError> {
    let other = 1 - i;
    let feasible = |x: &[f64]| problem.is_feasible(x);
    let obj_i = |x: &[f64]| (problem.objectives[i])(x);
    let stage1 = optimizer
        .minimize(&obj_i, &problem.bounds, &feasible, budget, seed)
        .map_err(lift_optimizer_error)?;
    let best = obj_i(stage1.as_slice());
    let slack = 1e-9 * (1.0 + best.abs());
    let tied = |x: &[f64]| feasible(x) && obj_i(x) <= best + slack;
    let obj_other = |x: &[f64]| (problem.objectives[other])(x);
    optimizer
        .minimize(&obj_other, &problem.bounds, &tied, budget, seed)
        .or(Ok(stage1))
}

/// Trace the front with the NBI/NC construction: anchors, evenly spaced
/// base points on the utopia line, one constrained minimization of `f_2`
/// per base point, then the NC Pareto-filtering step.
///
/// The half-space at each base point is taken on the anchor-1 side of the
/// normal (constraint `(A_2 - A_1) . (F(x) - F_pj) <= 0`); orienting it the
/// other way collapses every sub-problem onto the `f_2` anchor.
pub fn nbi_nc_front(
    problem: &Problem,
    n_base_points: usize,
    optimizer: &dyn SingleObjectiveOptimizer,
    budget: usize,
    seed: u64,
) -> Result<SweepFront, ScalarizeError> {
    let geometry = NbiGeometry::compute(problem, n_base_points, optimizer, budget, seed)?;
    let direction: Vec<f64> = geometry.utopia_line.iter().map(|u| -u).collect();

    let mut results: Vec<(String, Solution)> = Vec::new();
    let mut last_err = None;
    for (j, base) in geometry.base_points.iter().enumerate() {
        let w = j as f64 / (n_base_points - 1) as f64;
        let feasible = |x: &[f64]| {
            if !problem.is_feasible(x) {
                return false;
            }
            let dot: f64 = problem
                .objectives
                .iter()
                .zip(&direction)
                .zip(base.as_slice())
                .map(|((f, d), b)| d * (f(x) - b))
                .sum();
            dot <= 0.0
        };
        let obj = |x: &[f64]| (problem.objectives[1])(x);
        let param_json = format!("{{\"omega1\":{w}}}");
        match optimizer.minimize(&obj, &problem.bounds, &feasible, budget, seed) {
            Ok(x) => results.push((param_json, evaluate(problem, &x)?)),
            Err(e) => last_err = Some(lift_optimizer_error(e)),
        }
    }
    if results.is_empty() {
        return Err(last_err.unwrap_or(ScalarizeError::OptimizerFailure(
            "every NBI sub-problem failed".to_string(),
        )));
    }
    Ok(filter_sweep("nbi-nc", results))
}
