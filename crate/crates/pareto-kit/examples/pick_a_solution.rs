//! Picking one solution from a Pareto set without a decision maker: knee
//! point, hypervolume, TOPSIS, and PROMETHEE.
//!
//! Run: `cargo run --example pick_a_solution`

use pareto_kit::core::ObjectiveVector;
use pareto_kit::select::{
    hypervolume_set, select_best, HypervolumeRef, McdmConfig, PreferenceFunction, SelectionMethod,
};

fn main() {
    // A hand-made bi-objective front with a pronounced knee at index 2.
    let front: Vec<ObjectiveVector> = [
        [0.00, 1.00],
        [0.10, 0.50],
        [0.20, 0.10], // small f1 sacrifice bought a large f2 drop
        [0.55, 0.06],
        [1.00, 0.00],
    ]
    .iter()
    .map(|f| ObjectiveVector::new(f.to_vec()))
    .collect();

    let config = McdmConfig::uniform(2);
    for method in [
        SelectionMethod::Knee,
        SelectionMethod::Hypervolume,
        SelectionMethod::Topsis,
        SelectionMethod::Promethee,
    ] {
        let outcome = select_best(&front, method, &config).unwrap();
        println!(
            "{:<11} -> index {}  f = {:?}  score {:.4}",
            method.name(),
            outcome.index,
            front[outcome.index].as_slice(),
            outcome.score
        );
    }
    // Note the tension in the hypervolume rule: with the origin anchor it
    // maximizes the objective product, which on a minimization front
    // favors the middle rather than an extreme.

    // MCDM weights express preferences; tilting toward f2 moves TOPSIS.
    let tilted = McdmConfig::uniform(2)
        .with_weights(pareto_kit::scalarize::WeightVector::new(vec![0.15, 0.85]).unwrap());
    let outcome = select_best(&front, SelectionMethod::Topsis, &tilted).unwrap();
    println!(
        "topsis with w = (0.15, 0.85) -> index {}  f = {:?}",
        outcome.index,
        front[outcome.index].as_slice()
    );

    // PROMETHEE's step preference ignores margins; the linear default
    // weighs them.
    let usual = McdmConfig::uniform(2).with_preference(PreferenceFunction::Usual);
    let outcome = select_best(&front, SelectionMethod::Promethee, &usual).unwrap();
    println!("promethee (usual preference) -> index {}", outcome.index);

    // Whole-front quality: area dominated up to a reference point.
    let hv = hypervolume_set(
        &front,
        &HypervolumeRef::nadir(ObjectiveVector::new(vec![1.1, 1.1])),
    )
    .unwrap();
    println!("front hypervolume vs (1.1, 1.1): {hv:.4}");
}
