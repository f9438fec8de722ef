//! The full recommender re-ranking pipeline: collaborative-filtering
//! candidates, multi-objective re-ranking, automated selection.
//!
//! Run: `cargo run --example recsys_pipeline --release`

use pareto_kit::moea::{Algorithm, EvolutionConfig};
use pareto_kit::recsys::{cf_topk, item_similarity, rec_list_objectives, rerank, synth_dataset};
use pareto_kit::select::SelectionMethod;

fn main() {
    // Seeded synthetic data: 5 user clusters x 5 item genres, 5% density.
    let matrix = synth_dataset(200, 500, 42);
    println!(
        "dataset: {} users, {} items, {} ratings",
        matrix.num_users(),
        matrix.num_items(),
        matrix.num_ratings()
    );

    // Item-item cosine similarity over co-rating vectors (TRAIN only).
    let sim = item_similarity(&matrix);

    // Top-K candidates for one user by similarity-weighted rating average.
    let user = 17;
    let candidates = cf_topk(&matrix, &sim, user, 50);
    println!(
        "\nuser {} candidates (first 10 of {}): {:?}",
        matrix.user_id(user),
        candidates.items.len(),
        &candidates.items[..10]
    );

    // The plain CF top-10 is the accuracy-greedy baseline list.
    let objectives = rec_list_objectives(&matrix, &sim, user, &candidates.items);
    let plain: Vec<usize> = (0..10).collect();
    let plain_f: Vec<f64> = objectives.iter().map(|f| f(&plain)).collect();
    println!(
        "plain top-10:  precision {:.2}  diversity {:.2}  novelty {:.2}",
        1.0 - plain_f[0],
        1.0 - plain_f[1],
        1.0 - plain_f[2]
    );

    // Re-rank: NSGA-II over all C(50, 10) subsets, three objectives.
    let config = EvolutionConfig {
        algorithm: Algorithm::Nsga2,
        population_size: 60,
        generations: 40,
        archive_capacity: 100,
        seed: 42,
        ..EvolutionConfig::default()
    };
    let outcome = rerank(
        &matrix,
        &sim,
        user,
        &candidates.items,
        10,
        &config,
        SelectionMethod::Promethee,
    )
    .unwrap();

    println!(
        "\nre-ranked archive: {} mutually non-dominated lists ({} evaluations)",
        outcome.archive.len(),
        outcome.evaluations
    );
    println!("   precision  diversity  novelty");
    for (i, list) in outcome.archive.iter().enumerate().take(12) {
        let marker = if i == outcome.selected { "->" } else { "  " };
        println!(
            "{marker} {:9.2}  {:9.2}  {:7.2}",
            1.0 - list.objectives[0],
            1.0 - list.objectives[1],
            1.0 - list.objectives[2]
        );
    }

    let selected = &outcome.archive[outcome.selected];
    println!(
        "\nPROMETHEE picked list #{} with items {:?}",
        outcome.selected,
        selected
            .items
            .iter()
            .map(|i| matrix.item_id(*i))
            .collect::<Vec<_>>()
    );
}
