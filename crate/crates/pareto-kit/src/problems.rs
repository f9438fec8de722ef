//! Built-in benchmark problems used by the CLI, the examples, and the test
//! suites.

use crate::core::{BoxBounds, ConstraintSet, Problem};

/// Bi-objective toy problem on `x in [0, 6]`:
/// `f1(x) = 2(x - 1) + 1`, `f2(x) = 2(x - 3)^2 + 1`.
///
/// The Pareto set is `x in [0, 3]`: f1 rises and f2 falls there, while on
/// `[3, 6]` both rise, so every point above 3 is dominated by `x = 3`.
pub fn example2() -> Problem {
    Problem::new(
        vec![
            Box::new(|x: &[f64]| 2.0 * (x[0] - 1.0) + 1.0),
            Box::new(|x: &[f64]| 2.0 * (x[0] - 3.0).powi(2) + 1.0),
        ],
        BoxBounds::new(vec![0.0], vec![6.0]),
        ConstraintSet::empty(),
    )
}

/// Non-convex bi-objective problem on `[0, 1] x [-2, 2]`:
/// `f1(x) = x1`, `f2(x) = 1 + x2^2 - x1 - 0.1 sin(3 pi x1)`.
///
/// The Pareto front lives on `x2 = 0` and has concave segments from the
/// sine term, which weighted-sum sweeps cannot reach.
pub fn example3() -> Problem {
    Problem::new(
        vec![
            Box::new(|x: &[f64]| x[0]),
            Box::new(|x: &[f64]| {
                1.0 + x[1] * x[1] - x[0] - 0.1 * (3.0 * std::f64::consts::PI * x[0]).sin()
            }),
        ],
        BoxBounds::new(vec![0.0, -2.0], vec![1.0, 2.0]),
        ConstraintSet::empty(),
    )
}

/// Look up a built-in problem by CLI name.
pub fn builtin(name: &str) -> Option<Problem> {
    match name {
        "example2" => Some(example2()),
        "example3" => Some(example3()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{evaluate, DecisionVector};

    #[test]
    fn builtin_lookup() {
        assert!(builtin("example2").is_some());
        assert!(builtin("example3").is_some());
        assert!(builtin("zdt1").is_none());
    }

    #[test]
    fn example3_front_endpoint_values() {
        let p = example3();
        let a = evaluate(&p, &DecisionVector::new(vec![0.0, 0.0])).unwrap();
        assert!((a.f[0] - 0.0).abs() < 1e-15);
        assert!((a.f[1] - 1.0).abs() < 1e-15);
        let b = evaluate(&p, &DecisionVector::new(vec![1.0, 0.0])).unwrap();
        assert!((b.f[0] - 1.0).abs() < 1e-15);
        assert!(b.f[1].abs() < 1e-12, "sin(3 pi) term must vanish at x1 = 1");
    }
}
