//! The six evolutionary algorithms side by side on the same problem.
//!
//! Run: `cargo run --example moea_catalog --release`

use pareto_kit::moea::{evolve, run_log_csv, Algorithm, EvolutionConfig, ProblemContext};
use pareto_kit::problems::example2;
use pareto_kit::select::{hypervolume_set, HypervolumeRef};

fn main() {
    let problem = example2();
    let ctx = ProblemContext::new(&problem);

    println!("algorithm  archive  evals   in-Pareto-set  hypervolume(nadir 12,20)");
    for algorithm in Algorithm::ALL {
        let config = EvolutionConfig {
            algorithm,
            population_size: 60,
            generations: 60,
            seed: 7,
            ..EvolutionConfig::default()
        };
        let outcome = evolve(&ctx, &config).unwrap();
        let members = outcome.archive.members();
        let inside = members
            .iter()
            .filter(|e| (0.0..=3.0 + 1e-6).contains(&e.solution.x[0]))
            .count();
        // Reference safely beyond the nadir (f1 <= 11, f2 <= 19 on [0,6]).
        let hv = hypervolume_set(
            &outcome.archive.objective_vectors(),
            &HypervolumeRef::nadir(pareto_kit::core::ObjectiveVector::new(vec![12.0, 20.0])),
        )
        .unwrap();
        println!(
            "{:<10} {:>7} {:>6}   {:>5.1}%        {:>8.2}",
            algorithm.name(),
            members.len(),
            outcome.evaluations,
            100.0 * inside as f64 / members.len() as f64,
            hv
        );
    }

    // A per-generation log is available on request.
    let config = EvolutionConfig {
        algorithm: Algorithm::Nsga2,
        population_size: 40,
        generations: 25,
        collect_log: true,
        seed: 3,
        ..EvolutionConfig::default()
    };
    let outcome = evolve(&ctx, &config).unwrap();
    println!("\nNSGA-II run log (first 6 generations):");
    for line in run_log_csv(&outcome.log).lines().take(7) {
        println!("{line}");
    }
}
