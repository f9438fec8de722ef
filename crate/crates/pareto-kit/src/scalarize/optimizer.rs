use super::ScalarizeError;
use crate::core::{BoxBounds, DecisionVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// Minimizes a scalar function over a box, rejecting points that fail the
/// feasibility predicate or evaluate to NaN/infinity.
///
/// Implementations must be deterministic for a fixed seed and budget, and
/// the returned point always satisfies the bounds.
pub trait SingleObjectiveOptimizer {
    fn minimize(
        &self,
        objective: &dyn Fn(&[f64]) -> f64,
        bounds: &BoxBounds,
        feasible: &dyn Fn(&[f64]) -> bool,
        budget: usize,
        seed: u64,
    ) -> Result<DecisionVector, ScalarizeError>;
}

/// Tracks the best candidate and distinguishes "nothing feasible" from
/// "feasible but nothing finite" when reporting failure.
struct BestTracker {
    best: Option<(f64, Vec<f64>)>,
    feasible_seen: bool,
}

impl BestTracker {
    fn new() -> Self {
        BestTracker {
            best: None,
            feasible_seen: false,
        }
    }

    fn offer(&mut self, x: &[f64], value: f64) {
        self.feasible_seen = true;
        if !value.is_finite() {
            return;
        }
        // Strict < keeps the earliest of equal-valued candidates.
        if self.best.as_ref().is_none_or(|(v, _)| value < *v) {
            self.best = Some((value, x.to_vec()));
        }
    }

    fn finish(self) -> Result<DecisionVector, ScalarizeError> {
        match self.best {
            Some((_, x)) => Ok(DecisionVector::new(x)),
            None if self.feasible_seen => Err(ScalarizeError::NoFiniteValue),
            None => Err(ScalarizeError::NoFeasiblePoint),
        }
    }
}

/// Exhaustive grid search with window refinement. Deterministic; the seed
/// is unused. Suitable for low dimensions (n <= 3).
///
/// Each round lays `k` points per dimension (capped so the round fits its
/// share of the budget), then the next round zooms into a one-cell window
/// around the incumbent.
#[derive(Debug, Clone)]
pub struct GridSearch {
    pub points_per_dim: usize,
    pub refine_rounds: usize,
}

impl Default for GridSearch {
    fn default() -> Self {
        GridSearch {
            points_per_dim: 2048,
            refine_rounds: 2,
        }
    }
}

impl GridSearch {
    pub fn with_resolution(points_per_dim: usize) -> Self {
        GridSearch {
            points_per_dim,
            ..GridSearch::default()
        }
    }
}

impl SingleObjectiveOptimizer for GridSearch {
    fn minimize(
        &self,
        objective: &dyn Fn(&[f64]) -> f64,
        bounds: &BoxBounds,
        feasible: &dyn Fn(&[f64]) -> bool,
        budget: usize,
        _seed: u64,
    ) -> Result<DecisionVector, ScalarizeError> {
        let n = bounds.dim();
        assert!(n > 0, "cannot optimize over a zero-dimensional box");
        assert!(budget > 0, "budget must be positive");

        let rounds = self.refine_rounds + 1;
        let round_budget = (budget / rounds).max(1);
        let k = per_dim_points(self.points_per_dim, round_budget, n);

        let mut lo = bounds.lower.clone();
        let mut hi = bounds.upper.clone();
        let mut overall = BestTracker::new();

        for _ in 0..rounds {
            let mut best_here: Option<(f64, Vec<f64>)> = None;
            let mut idx = vec![0usize; n];
            let mut x = vec![0.0; n];
            loop {
                for d in 0..n {
                    x[d] = grid_point(lo[d], hi[d], idx[d], k);
                }
                if feasible(&x) {
                    let v = objective(&x);
                    overall.offer(&x, v);
                    if v.is_finite() && best_here.as_ref().is_none_or(|(bv, _)| v < *bv) {
                        best_here = Some((v, x.clone()));
                    }
                }
                // Mixed-radix increment over the grid indices.
                let mut d = 0;
                loop {
                    idx[d] += 1;
                    if idx[d] < k {
                        break;
                    }
                    idx[d] = 0;
                    d += 1;
                    if d == n {
                        break;
                    }
                }
                if d == n {
                    break;
                }
            }
            // Shrink to a one-cell window around the incumbent; stop
            // refining when a window held nothing feasible.
            let Some((_, center)) = best_here else {
                break;
            };
            for d in 0..n {
                let cell = if k > 1 {
                    (hi[d] - lo[d]) / (k as f64 - 1.0)
                } else {
                    hi[d] - lo[d]
                };
                lo[d] = (center[d] - cell).max(bounds.lower[d]);
                hi[d] = (center[d] + cell).min(bounds.upper[d]);
            }
        }
        overall.finish()
    }
}

fn per_dim_points(configured: usize, round_budget: usize, n: usize) -> usize {
    let max_affordable = (round_budget as f64).powf(1.0 / n as f64).floor() as usize;
    configured.min(max_affordable).max(2)
}

fn grid_point(lo: f64, hi: f64, i: usize, k: usize) -> f64 {
    if k <= 1 {
        return lo;
    }
    lo + (hi - lo) * (i as f64) / (k as f64 - 1.0)
}

/// Seeded random-restart compass search for higher dimensions.
///
/// Each restart walks from a random in-bounds point, probing one step up
/// and down along every axis and halving the step when no probe improves.
#[derive(Debug, Clone)]
pub struct PatternSearch {
    pub restarts: usize,
    pub initial_step_fraction: f64,
    pub min_step_fraction: f64,
}

impl Default for PatternSearch {
    fn default() -> Self {
        PatternSearch {
            restarts: 8,
            initial_step_fraction: 0.25,
            min_step_fraction: 1e-9,
        }
    }
}

impl SingleObjectiveOptimizer for PatternSearch {
    fn minimize(
        &self,
        objective: &dyn Fn(&[f64]) -> f64,
        bounds: &BoxBounds,
        feasible: &dyn Fn(&[f64]) -> bool,
        budget: usize,
        seed: u64,
    ) -> Result<DecisionVector, ScalarizeError> {
        let n = bounds.dim();
        assert!(n > 0, "cannot optimize over a zero-dimensional box");
        assert!(budget > 0, "budget must be positive");
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let mut spent = 0usize;
        let mut tracker = BestTracker::new();

        'restarts: for _ in 0..self.restarts.max(1) {
            // Find a feasible start.
            let mut current: Option<(f64, Vec<f64>)> = None;
            for _ in 0..budget / self.restarts.max(1) {
                if spent >= budget {
                    break 'restarts;
                }
                let x: Vec<f64> = (0..n)
                    .map(|d| rng.gen_range(bounds.lower[d]..=bounds.upper[d]))
                    .collect();
                spent += 1;
                if feasible(&x) {
                    let v = objective(&x);
                    tracker.offer(&x, v);
                    if v.is_finite() {
                        current = Some((v, x));
                        break;
                    }
                }
            }
            let Some((mut cur_v, mut cur_x)) = current else {
                continue;
            };

            let mut step: Vec<f64> = (0..n)
                .map(|d| self.initial_step_fraction * bounds.range(d).max(f64::MIN_POSITIVE))
                .collect();
            loop {
                if spent >= budget {
                    break 'restarts;
                }
                let mut improved = false;
                for d in 0..n {
                    for dir in [-1.0, 1.0] {
                        if spent >= budget {
                            break;
                        }
                        let mut x = cur_x.clone();
                        x[d] = (x[d] + dir * step[d]).clamp(bounds.lower[d], bounds.upper[d]);
                        spent += 1;
                        if feasible(&x) {
                            let v = objective(&x);
                            tracker.offer(&x, v);
                            if v.is_finite() && v < cur_v {
                                cur_v = v;
                                cur_x = x;
                                improved = true;
                            }
                        }
                    }
                }
                if !improved {
                    for s in step.iter_mut() {
                        *s *= 0.5;
                    }
                    let converged = step
                        .iter()
                        .enumerate()
                        .all(|(d, s)| *s < self.min_step_fraction * bounds.range(d).max(1e-300));
                    if converged {
                        break;
                    }
                }
            }
        }
        tracker.finish()
    }
}

/// Grid search for n <= 3, pattern search above.
pub fn default_optimizer_for(n: usize) -> Box<dyn SingleObjectiveOptimizer> {
    if n <= 3 {
        Box::new(GridSearch::default())
    } else {
        Box::new(PatternSearch::default())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_box(n: usize) -> BoxBounds {
        BoxBounds::new(vec![0.0; n], vec![1.0; n])
    }

    #[test]
    fn grid_finds_quadratic_minimum() {
        let opt = GridSearch::with_resolution(101);
        let x = opt
            .minimize(
                &|x| (x[0] - 0.37).powi(2),
                &unit_box(1),
                &|_| true,
                10_000,
                0,
            )
            .unwrap();
        assert!((x[0] - 0.37).abs() < 1e-4, "found {}", x[0]);
    }

    #[test]
    fn grid_respects_feasibility_boundary() {
        let opt = GridSearch::default();
        let x = opt
            .minimize(&|x| x[0], &unit_box(1), &|x| x[0] >= 0.6, 20_000, 0)
            .unwrap();
        assert!((x[0] - 0.6).abs() < 1e-6, "found {}", x[0]);
        assert!(x[0] >= 0.6);
    }

    #[test]
    fn grid_reports_no_feasible_point() {
        let opt = GridSearch::default();
        let err = opt
            .minimize(&|x| x[0], &unit_box(1), &|_| false, 1000, 0)
            .unwrap_err();
        assert_eq!(err, ScalarizeError::NoFeasiblePoint);
    }

    #[test]
    fn grid_reports_no_finite_value() {
        let opt = GridSearch::default();
        let err = opt
            .minimize(&|_| f64::INFINITY, &unit_box(1), &|_| true, 1000, 0)
            .unwrap_err();
        assert_eq!(err, ScalarizeError::NoFiniteValue);
    }

    #[test]
    fn grid_budget_caps_resolution() {
        // With a budget of 30 over 3 rounds, each round affords 10 points.
        let opt = GridSearch::default();
        let x = opt
            .minimize(&|x| (x[0] - 0.5).powi(2), &unit_box(1), &|_| true, 30, 0)
            .unwrap();
        assert!((x[0] - 0.5).abs() < 0.1);
    }

    #[test]
    fn pattern_search_is_deterministic_and_converges() {
        let opt = PatternSearch::default();
        let sphere = |x: &[f64]| x.iter().map(|v| (v - 0.3) * (v - 0.3)).sum::<f64>();
        let a = opt
            .minimize(&sphere, &unit_box(5), &|_| true, 50_000, 7)
            .unwrap();
        let b = opt
            .minimize(&sphere, &unit_box(5), &|_| true, 50_000, 7)
            .unwrap();
        assert_eq!(a, b);
        for v in a.as_slice() {
            assert!((v - 0.3).abs() < 1e-3, "coordinate {v}");
        }
    }
}
