use super::method::{IdealMode, MethodKind, ScalarizationMethod};
use super::optimizer::SingleObjectiveOptimizer;
use super::ScalarizeError;
use crate::core::{evaluate, ObjectiveVector, Problem, Solution};

/// Scalarized objective: a single-valued function of the decision vector.
pub type ScalarEvaluator<'a> = Box<dyn Fn(&[f64]) -> f64 + 'a>;

/// Build the scalar evaluator for `method` over `problem`'s objectives.
///
/// The returned closure computes the cited formula exactly; overflowing
/// exponential/product forms yield non-finite values, which the optimizers
/// reject and [`solve_scalarized`] reports instead of clamping.
pub fn scalar_objective<'a>(
    problem: &'a Problem,
    method: &ScalarizationMethod,
) -> Result<ScalarEvaluator<'a>, ScalarizeError> {
    let m = problem.num_objectives();
    method.validate(m)?;
    let w = method.weights.as_slice().to_vec();
    let p = method.p;
    let ideal = if method.kind.needs_ideal() {
        method.ideal_point(m)?
    } else {
        Vec::new()
    };
    let objectives = &problem.objectives;
    let kind = method.kind;
    Ok(Box::new(move |x: &[f64]| {
        let f: Vec<f64> = objectives.iter().map(|o| o(x)).collect();
        match kind {
            MethodKind::WeightedSum => f.iter().zip(&w).map(|(fi, wi)| wi * fi).sum(),
            MethodKind::WeightedExpSum => f.iter().zip(&w).map(|(fi, wi)| wi * fi.powf(p)).sum(),
            MethodKind::WeightedMetric => f
                .iter()
                .zip(&w)
                .zip(&ideal)
                .map(|((fi, wi), fs)| wi.powf(p) * (fi - fs).abs().powf(p))
                .sum::<f64>()
                .powf(1.0 / p),
            MethodKind::Chebyshev => f
                .iter()
                .zip(&w)
                .zip(&ideal)
                .map(|((fi, wi), fs)| wi * (fi - fs).abs())
                .fold(f64::NEG_INFINITY, f64::max),
            MethodKind::ExpWeightedCriterion => f
                .iter()
                .zip(&w)
                .map(|(fi, wi)| ((p * wi).exp() - 1.0) * (p * fi).exp())
                .sum(),
            MethodKind::WeightedProduct => f
                .iter()
                .zip(&w)
                .map(|(fi, wi)| fi.abs().powf(*wi))
                .product(),
        }
    }))
}

/// Precompute the utopia point (componentwise objective minima over the
/// feasible set) with one single-objective solve per objective.
pub fn compute_utopia(
    problem: &Problem,
    optimizer: &dyn SingleObjectiveOptimizer,
    budget: usize,
    seed: u64,
) -> Result<ObjectiveVector, ScalarizeError> {
    let mut point = Vec::with_capacity(problem.num_objectives());
    for i in 0..problem.num_objectives() {
        let obj = |x: &[f64]| (problem.objectives[i])(x);
        let x = optimizer
            .minimize(
                &obj,
                &problem.bounds,
                &|x| problem.is_feasible(x),
                budget,
                seed,
            )
            .map_err(lift_optimizer_error)?;
        point.push((problem.objectives[i])(x.as_slice()));
    }
    Ok(ObjectiveVector::new(point))
}

/// Fill in a utopia ideal point when the method needs one and it is absent.
pub fn resolve_ideal(
    problem: &Problem,
    method: &ScalarizationMethod,
    optimizer: &dyn SingleObjectiveOptimizer,
    budget: usize,
    seed: u64,
) -> Result<ScalarizationMethod, ScalarizeError> {
    if method.kind.needs_ideal() && matches!(method.ideal, IdealMode::Utopia(None)) {
        let utopia = compute_utopia(problem, optimizer, budget, seed)?;
        Ok(method.clone().with_ideal(IdealMode::Utopia(Some(utopia))))
    } else {
        Ok(method.clone())
    }
}

/// Minimize the scalarized objective and evaluate the winner.
pub fn solve_scalarized(
    problem: &Problem,
    method: &ScalarizationMethod,
    optimizer: &dyn SingleObjectiveOptimizer,
    budget: usize,
    seed: u64,
) -> Result<Solution, ScalarizeError> {
    assert!(budget > 0, "optimizer budget must be positive");
    let method = resolve_ideal(problem, method, optimizer, budget, seed)?;
    let scalar = scalar_objective(problem, &method)?;
    let x = optimizer
        .minimize(
            scalar.as_ref(),
            &problem.bounds,
            &|x| problem.is_feasible(x),
            budget,
            seed,
        )
        .map_err(|e| match e {
            ScalarizeError::NoFiniteValue if method.kind.can_overflow() => {
                ScalarizeError::OverflowGuard(format!(
                    "{} overflowed at every feasible point",
                    method.kind.name()
                ))
            }
            other => lift_optimizer_error(other),
        })?;
    Ok(evaluate(problem, &x)?)
}

/// Upper bounds for every objective except the one kept for optimization.
#[derive(Debug, Clone)]
pub struct EpsilonBounds {
    /// Index of the objective to minimize (0-based).
    pub objective: usize,
    /// Per-objective upper bounds; the entry at `objective` is ignored.
    /// `+inf` makes a bound vacuous.
    pub eps: Vec<f64>,
}

impl EpsilonBounds {
    pub fn new(objective: usize, eps: Vec<f64>) -> Result<Self, ScalarizeError> {
        if objective >= eps.len() {
            return Err(ScalarizeError::InvalidMethod(format!(
                "kept objective index {objective} out of range for {} objectives",
                eps.len()
            )));
        }
        for (i, e) in eps.iter().enumerate() {
            if i != objective && e.is_nan() {
                return Err(ScalarizeError::InvalidMethod(format!(
                    "epsilon bound {i} is NaN"
                )));
            }
        }
        Ok(EpsilonBounds { objective, eps })
    }
}

/// Minimize `f_l` subject to the original feasibility plus
/// `f_i(x) <= eps_i` for every other objective.
pub fn epsilon_constraint(
    problem: &Problem,
    bounds: &EpsilonBounds,
    optimizer: &dyn SingleObjectiveOptimizer,
    budget: usize,
    seed: u64,
) -> Result<Solution, ScalarizeError> {
    let m = problem.num_objectives();
    if bounds.eps.len() != m {
        return Err(ScalarizeError::InvalidMethod(format!(
            "epsilon bounds have length {}, expected {m}",
            bounds.eps.len()
        )));
    }
    let l = bounds.objective;
    let feasible = |x: &[f64]| {
        problem.is_feasible(x)
            && problem
                .objectives
                .iter()
                .enumerate()
                .all(|(i, f)| i == l || f(x) <= bounds.eps[i])
    };
    let obj = |x: &[f64]| (problem.objectives[l])(x);
    let x = optimizer
        .minimize(&obj, &problem.bounds, &feasible, budget, seed)
        .map_err(|e| match e {
            ScalarizeError::NoFeasiblePoint => ScalarizeError::Infeasible(
                "no sampled point satisfies the epsilon bounds".to_string(),
            ),
            other => lift_optimizer_error(other),
        })?;
    Ok(evaluate(problem, &x)?)
}

/// Minimize the summed one-sided deviation `sum_i max(0, f_i(x) - goal_i)`.
/// The result is not post-filtered and may be dominated.
pub fn goal_attainment(
    problem: &Problem,
    goals: &ObjectiveVector,
    optimizer: &dyn SingleObjectiveOptimizer,
    budget: usize,
    seed: u64,
) -> Result<Solution, ScalarizeError> {
    let m = problem.num_objectives();
    if goals.len() != m {
        return Err(ScalarizeError::InvalidMethod(format!(
            "goal vector has length {}, expected {m}",
            goals.len()
        )));
    }
    if goals.as_slice().iter().any(|g| !g.is_finite()) {
        return Err(ScalarizeError::InvalidMethod(
            "goals must be finite".to_string(),
        ));
    }
    let goals = goals.as_slice().to_vec();
    let obj = |x: &[f64]| {
        problem
            .objectives
            .iter()
            .zip(&goals)
            .map(|(f, g)| (f(x) - g).max(0.0))
            .sum::<f64>()
    };
    let x = optimizer
        .minimize(
            &obj,
            &problem.bounds,
            &|x| problem.is_feasible(x),
            budget,
            seed,
        )
        .map_err(lift_optimizer_error)?;
    Ok(evaluate(problem, &x)?)
}

/// Minimize objectives one importance rank at a time: stage `k` minimizes
/// `f_order[k]` subject to every earlier objective staying within its stage
/// optimum plus that objective's slack.
pub fn lexicographic(
    problem: &Problem,
    order: &[usize],
    optimizer: &dyn SingleObjectiveOptimizer,
    slacks: &[f64],
    budget: usize,
    seed: u64,
) -> Result<Solution, ScalarizeError> {
    let m = problem.num_objectives();
    validate_order(order, m)?;
    if slacks.len() != m {
        return Err(ScalarizeError::InvalidMethod(format!(
            "slack vector has length {}, expected {m}",
            slacks.len()
        )));
    }
    if slacks.iter().any(|s| s.is_nan() || *s < 0.0) {
        return Err(ScalarizeError::InvalidMethod(
            "slacks must be non-negative".to_string(),
        ));
    }

    let mut caps: Vec<(usize, f64)> = Vec::new(); // (objective index, bound)
    let mut winner: Option<crate::core::DecisionVector> = None;
    for (stage, &oi) in order.iter().enumerate() {
        let feasible = |x: &[f64]| {
            problem.is_feasible(x)
                && caps
                    .iter()
                    .all(|(idx, bound)| (problem.objectives[*idx])(x) <= *bound)
        };
        let obj = |x: &[f64]| (problem.objectives[oi])(x);
        // The previous stage's winner satisfies every cap (its own bound has
        // non-negative slack), so it is a valid incumbent even when the
        // stage grid samples nothing inside a razor-thin feasible region.
        let x = match optimizer.minimize(&obj, &problem.bounds, &feasible, budget, seed) {
            Ok(found) => match &winner {
                Some(prev) if obj(prev.as_slice()) < obj(found.as_slice()) => prev.clone(),
                _ => found,
            },
            Err(ScalarizeError::NoFeasiblePoint) => match &winner {
                Some(prev) => prev.clone(),
                None => {
                    return Err(ScalarizeError::Infeasible(format!(
                        "lexicographic stage {stage} (objective {oi}) has no feasible point"
                    )))
                }
            },
            Err(other) => return Err(lift_optimizer_error(other)),
        };
        let best = (problem.objectives[oi])(x.as_slice());
        caps.push((oi, best + slacks[oi]));
        winner = Some(x);
    }
    let x = winner.expect("order is a non-empty permutation");
    Ok(evaluate(problem, &x)?)
}

/// [`lexicographic`] with the same slack for every objective.
pub fn lexicographic_uniform(
    problem: &Problem,
    order: &[usize],
    optimizer: &dyn SingleObjectiveOptimizer,
    slack: f64,
    budget: usize,
    seed: u64,
) -> Result<Solution, ScalarizeError> {
    let slacks = vec![slack; problem.num_objectives()];
    lexicographic(problem, order, optimizer, &slacks, budget, seed)
}

fn validate_order(order: &[usize], m: usize) -> Result<(), ScalarizeError> {
    let mut seen = vec![false; m];
    if order.len() != m {
        return Err(ScalarizeError::InvalidMethod(format!(
            "order has length {}, expected a permutation of 0..{m}",
            order.len()
        )));
    }
    for &i in order {
        if i >= m || seen[i] {
            return Err(ScalarizeError::InvalidMethod(format!(
                "order is not a permutation of 0..{m}"
            )));
        }
        seen[i] = true;
    }
    Ok(())
}

pub(crate) fn lift_optimizer_error(e: ScalarizeError) -> ScalarizeError {
    match e {
        ScalarizeError::NoFeasiblePoint => {
            ScalarizeError::OptimizerFailure("budget exhausted with no feasible point".to_string())
        }
        ScalarizeError::NoFiniteValue => {
            ScalarizeError::OptimizerFailure("no finite scalar value sampled".to_string())
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{BoxBounds, ConstraintSet};
    use crate::problems::example2;
    use crate::scalarize::{GridSearch, WeightVector};

    const BUDGET: usize = 60_000;

    fn grid() -> GridSearch {
        GridSearch::default()
    }

    #[test]
    fn weighted_sum_value_by_hand() {
        let p = example2();
        let m = ScalarizationMethod::new(
            MethodKind::WeightedSum,
            WeightVector::new(vec![0.5, 0.5]).unwrap(),
        );
        let s = scalar_objective(&p, &m).unwrap();
        assert!((s(&[2.5]) - 2.75).abs() < 1e-12);
    }

    #[test]
    fn weighted_sum_is_continuous_in_weights() {
        let p = example2();
        let x = [2.0];
        let base = ScalarizationMethod::new(
            MethodKind::WeightedSum,
            WeightVector::new(vec![0.5, 0.5]).unwrap(),
        );
        let v0 = scalar_objective(&p, &base).unwrap()(&x);
        for delta in [1e-3, 1e-6, 1e-9] {
            let m = base.with_weights(WeightVector::new(vec![0.5 - delta, 0.5 + delta]).unwrap());
            let v = scalar_objective(&p, &m).unwrap()(&x);
            // Linear in w: the change is bounded by delta times the objective spread.
            assert!((v - v0).abs() <= delta * 20.0 + 1e-15);
        }
    }

    #[test]
    fn chebyshev_value_by_hand() {
        let p = example2();
        let m = ScalarizationMethod::new(
            MethodKind::Chebyshev,
            WeightVector::new(vec![0.5, 0.5]).unwrap(),
        )
        .with_ideal(IdealMode::Utopia(Some(ObjectiveVector::new(vec![
            -1.0, 1.0,
        ]))));
        let s = scalar_objective(&p, &m).unwrap();
        assert!((s(&[3.0]) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn solve_weighted_sum_equal_weights() {
        let p = example2();
        let m = ScalarizationMethod::new(
            MethodKind::WeightedSum,
            WeightVector::new(vec![0.5, 0.5]).unwrap(),
        );
        let s = solve_scalarized(&p, &m, &grid(), BUDGET, 0).unwrap();
        assert!((s.x[0] - 2.5).abs() < 1e-4, "x = {}", s.x[0]);
        assert!((s.f[0] - 4.0).abs() < 1e-3);
        assert!((s.f[1] - 1.5).abs() < 1e-3);
    }

    #[test]
    fn solve_weighted_sum_third_weights() {
        let p = example2();
        let m = ScalarizationMethod::new(
            MethodKind::WeightedSum,
            WeightVector::new(vec![1.0 / 3.0, 2.0 / 3.0]).unwrap(),
        );
        let s = solve_scalarized(&p, &m, &grid(), BUDGET, 0).unwrap();
        assert!((s.x[0] - 2.75).abs() < 1e-4, "x = {}", s.x[0]);
    }

    #[test]
    fn solve_chebyshev_with_utopia() {
        let p = example2();
        let m = ScalarizationMethod::new(
            MethodKind::Chebyshev,
            WeightVector::new(vec![0.5, 0.5]).unwrap(),
        );
        // Utopia resolved automatically: (-1, 1). Balance point solves
        // x = (x - 3)^2, i.e. x = (7 - sqrt(13)) / 2.
        let s = solve_scalarized(&p, &m, &grid(), BUDGET, 0).unwrap();
        let expected = (7.0 - 13.0_f64.sqrt()) / 2.0;
        assert!((s.x[0] - expected).abs() < 1e-4, "x = {}", s.x[0]);
    }

    #[test]
    fn exp_weighted_criterion_overflow_is_reported() {
        let p = Problem::new(
            vec![
                Box::new(|x: &[f64]| 1e6 * (x[0] + 1.0)),
                Box::new(|x: &[f64]| 1e6 * (2.0 - x[0])),
            ],
            BoxBounds::new(vec![0.0], vec![1.0]),
            ConstraintSet::empty(),
        );
        let m = ScalarizationMethod::new(
            MethodKind::ExpWeightedCriterion,
            WeightVector::new(vec![0.5, 0.5]).unwrap(),
        )
        .with_p(1.0);
        let err = solve_scalarized(&p, &m, &grid(), 1000, 0).unwrap_err();
        assert!(
            matches!(err, ScalarizeError::OverflowGuard(_)),
            "got {err:?}"
        );
    }

    #[test]
    fn epsilon_constraint_hand_cases() {
        let p = example2();
        // f2 <= 3 means x in [2, 4]; min f1 there sits at x = 2.
        let b = EpsilonBounds::new(0, vec![f64::INFINITY, 3.0]).unwrap();
        let s = epsilon_constraint(&p, &b, &grid(), BUDGET, 0).unwrap();
        assert!((s.x[0] - 2.0).abs() < 1e-3, "x = {}", s.x[0]);
        assert!((s.f[0] - 3.0).abs() < 2e-3);

        // min f2 = 1 > 0.5: unattainable bound.
        let b = EpsilonBounds::new(0, vec![f64::INFINITY, 0.5]).unwrap();
        let err = epsilon_constraint(&p, &b, &grid(), BUDGET, 0).unwrap_err();
        assert!(matches!(err, ScalarizeError::Infeasible(_)));

        // Vacuous bound on f1: unconstrained min of f2 at x = 3.
        let b = EpsilonBounds::new(1, vec![f64::INFINITY, f64::INFINITY]).unwrap();
        let s = epsilon_constraint(&p, &b, &grid(), BUDGET, 0).unwrap();
        assert!((s.x[0] - 3.0).abs() < 1e-4, "x = {}", s.x[0]);
    }

    #[test]
    fn goal_attainment_cases() {
        let p = example2();
        // F(3) = (5, 1): both goals met exactly, zero deviation.
        let s = goal_attainment(
            &p,
            &ObjectiveVector::new(vec![5.0, 1.0]),
            &grid(),
            BUDGET,
            0,
        )
        .unwrap();
        let dev = (s.f[0] - 5.0).max(0.0) + (s.f[1] - 1.0).max(0.0);
        assert!(dev < 1e-9, "deviation {dev}");

        // Unreachable goals: min f2 = 1 > 0, so total deviation >= 1.
        let s = goal_attainment(
            &p,
            &ObjectiveVector::new(vec![-10.0, 0.0]),
            &grid(),
            BUDGET,
            0,
        )
        .unwrap();
        let dev = (s.f[0] + 10.0).max(0.0) + (s.f[1] - 0.0).max(0.0);
        assert!(dev >= 1.0, "deviation {dev}");
        assert!(goal_attainment(
            &p,
            &ObjectiveVector::new(vec![f64::NAN, 0.0]),
            &grid(),
            BUDGET,
            0
        )
        .is_err());
    }

    #[test]
    fn lexicographic_cases() {
        let p = example2();
        // f2 first, no slack: unique min of f2 is x = 3, F = (5, 1).
        let s = lexicographic_uniform(&p, &[1, 0], &grid(), 0.0, BUDGET, 0).unwrap();
        assert!((s.x[0] - 3.0).abs() < 1e-3, "x = {}", s.x[0]);

        // f1 first, no slack: unique min of f1 is x = 0, F = (-1, 19).
        let s = lexicographic_uniform(&p, &[0, 1], &grid(), 0.0, BUDGET, 0).unwrap();
        assert!(s.x[0].abs() < 1e-3, "x = {}", s.x[0]);

        // f2 first with slack 1: stage 2 minimizes f1 under f2 <= 2,
        // i.e. x >= 3 - sqrt(1/2).
        let s = lexicographic_uniform(&p, &[1, 0], &grid(), 1.0, BUDGET, 0).unwrap();
        let expected = 3.0 - 0.5_f64.sqrt();
        assert!((s.x[0] - expected).abs() < 1e-3, "x = {}", s.x[0]);
        assert!((s.f[1] - 2.0).abs() < 5e-3, "f2 = {}", s.f[1]);
    }

    #[test]
    fn lexicographic_rejects_bad_order() {
        let p = example2();
        assert!(lexicographic_uniform(&p, &[0, 0], &grid(), 0.0, 1000, 0).is_err());
        assert!(lexicographic_uniform(&p, &[0], &grid(), 0.0, 1000, 0).is_err());
        assert!(lexicographic_uniform(&p, &[0, 2], &grid(), 0.0, 1000, 0).is_err());
    }
}
