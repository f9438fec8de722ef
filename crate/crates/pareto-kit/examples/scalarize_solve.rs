//! One-shot scalarization solves: turn two objectives into one and hand it
//! to a single-objective optimizer.
//!
//! Run: `cargo run --example scalarize_solve`

use pareto_kit::core::ObjectiveVector;
use pareto_kit::problems::example2;
use pareto_kit::scalarize::{
    epsilon_constraint, goal_attainment, lexicographic_uniform, solve_scalarized, EpsilonBounds,
    GridSearch, MethodKind, ScalarizationMethod, WeightVector,
};

fn main() {
    let problem = example2();
    let optimizer = GridSearch::default();
    let budget = 100_000;

    // ── Weighted sum ────────────────────────────────────────────────────
    // min 0.5 f1 + 0.5 f2 has its stationary point at x = 2.5.
    let method = ScalarizationMethod::new(
        MethodKind::WeightedSum,
        WeightVector::new(vec![0.5, 0.5]).unwrap(),
    );
    let s = solve_scalarized(&problem, &method, &optimizer, budget, 0).unwrap();
    println!(
        "weighted sum (0.5, 0.5):   x = {:.4}  f = ({:.4}, {:.4})",
        s.x[0], s.f[0], s.f[1]
    );

    // Shifting weight onto f2 moves the solution toward its minimizer.
    let method = method.with_weights(WeightVector::new(vec![1.0 / 3.0, 2.0 / 3.0]).unwrap());
    let s = solve_scalarized(&problem, &method, &optimizer, budget, 0).unwrap();
    println!("weighted sum (1/3, 2/3):   x = {:.4}", s.x[0]);

    // ── Weighted Chebyshev ──────────────────────────────────────────────
    // The utopia point (-1, 1) is computed automatically; the balanced
    // solution solves x = (x-3)^2, i.e. x = (7 - sqrt(13)) / 2 = 1.6972.
    let method = ScalarizationMethod::new(
        MethodKind::Chebyshev,
        WeightVector::new(vec![0.5, 0.5]).unwrap(),
    );
    let s = solve_scalarized(&problem, &method, &optimizer, budget, 0).unwrap();
    println!("chebyshev (utopia ideal):  x = {:.4}", s.x[0]);

    // ── Epsilon constraint ──────────────────────────────────────────────
    // Keep f1, demand f2 <= 3: feasible x in [2, 4], so min f1 sits at 2.
    let bounds = EpsilonBounds::new(0, vec![f64::INFINITY, 3.0]).unwrap();
    let s = epsilon_constraint(&problem, &bounds, &optimizer, budget, 0).unwrap();
    println!(
        "epsilon (f2 <= 3):         x = {:.4}  f = ({:.4}, {:.4})",
        s.x[0], s.f[0], s.f[1]
    );

    // Too tight a bound reports infeasibility instead of inventing a point.
    let bounds = EpsilonBounds::new(0, vec![f64::INFINITY, 0.5]).unwrap();
    match epsilon_constraint(&problem, &bounds, &optimizer, budget, 0) {
        Err(e) => println!("epsilon (f2 <= 0.5):       {e}"),
        Ok(_) => unreachable!("min f2 = 1"),
    }

    // ── Goal attainment ─────────────────────────────────────────────────
    // F(3) = (5, 1): both goals attainable, zero total deviation.
    let s = goal_attainment(
        &problem,
        &ObjectiveVector::new(vec![5.0, 1.0]),
        &optimizer,
        budget,
        0,
    )
    .unwrap();
    println!(
        "goals (5, 1):              x = {:.4}  (deviation 0)",
        s.x[0]
    );

    // ── Lexicographic ───────────────────────────────────────────────────
    // f2 first with slack 1: stage two minimizes f1 subject to f2 <= 2,
    // landing at x = 3 - sqrt(1/2).
    let s = lexicographic_uniform(&problem, &[1, 0], &optimizer, 1.0, budget, 0).unwrap();
    println!(
        "lexicographic f2 then f1:  x = {:.4}  f2 = {:.4}",
        s.x[0], s.f[1]
    );
}
