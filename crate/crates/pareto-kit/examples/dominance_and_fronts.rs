//! Dominance relation, Pareto filtering, and the two non-dominated
//! sorting schemes.
//!
//! Run: `cargo run --example dominance_and_fronts`

use pareto_kit::core::{
    compare_dominance, dominator_count_groups, evaluate, nondominated_sort_indices, pareto_filter,
    utopia_and_nadir, DecisionVector, ObjectiveVector,
};
use pareto_kit::problems::example2;

fn main() {
    // ── Evaluate a problem ──────────────────────────────────────────────
    // example2: f1 = 2(x-1)+1, f2 = 2(x-3)^2+1 on [0, 6]; Pareto set [0, 3].
    let problem = example2();
    for x in [0.0, 1.5, 3.0, 5.0] {
        let s = evaluate(&problem, &DecisionVector::new(vec![x])).unwrap();
        println!(
            "x = {x:3}  ->  f = ({:6.2}, {:6.2})  feasible = {}",
            s.f[0], s.f[1], s.feasible
        );
    }

    // ── Pairwise dominance ──────────────────────────────────────────────
    let pairs = [
        (vec![1.0, 1.0], vec![2.0, 2.0]), // dominates
        (vec![1.0, 2.0], vec![2.0, 1.0]), // incomparable
        (vec![1.0, 1.0], vec![1.0, 1.0]), // equal
    ];
    for (a, b) in &pairs {
        let rel = compare_dominance(
            &ObjectiveVector::new(a.clone()),
            &ObjectiveVector::new(b.clone()),
        )
        .unwrap();
        println!("{a:?} vs {b:?} -> {rel:?}");
    }

    // ── Filtering and sorting a sampled population ──────────────────────
    let population: Vec<_> = (0..=12)
        .map(|i| {
            let x = 6.0 * i as f64 / 12.0;
            evaluate(&problem, &DecisionVector::new(vec![x])).unwrap()
        })
        .collect();
    let front = pareto_filter(&population).unwrap();
    println!(
        "\n{} of {} sampled points are non-dominated (all with x <= 3):",
        front.len(),
        population.len()
    );
    for s in &front {
        println!("  x = {:4.2}  f = ({:6.2}, {:6.2})", s.x[0], s.f[0], s.f[1]);
    }

    // Iterative peeling vs dominator-count partition on the same set.
    let vectors: Vec<ObjectiveVector> = population.iter().map(|s| s.f.clone()).collect();
    println!(
        "\niterative fronts: {:?}",
        nondominated_sort_indices(&vectors)
    );
    println!(
        "dominator-count groups (empty groups preserved): {:?}",
        dominator_count_groups(&vectors)
    );

    let (utopia, nadir) = utopia_and_nadir(&vectors).unwrap();
    println!(
        "\nutopia = {:?}, nadir = {:?}",
        utopia.as_slice(),
        nadir.as_slice()
    );

    // Fronts serialize to CSV (id, decision columns, objectives, flag).
    println!("\nfront CSV:\n{}", front.to_csv());
}
