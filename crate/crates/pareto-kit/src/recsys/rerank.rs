use super::ratings::RatingsMatrix;
use super::similarity::ItemSimilarity;
use super::RecsysError;
use crate::moea::{
    decode, evolve_seeded, EncodingSpec, EvolutionConfig, EvolutionContext, Genome, ListContext,
    ListObjective,
};
use crate::select::{select_best, McdmConfig, SelectionMethod};

/// An ordered recommendation list with its objective values.
#[derive(Debug, Clone)]
pub struct RecList {
    /// Item indices into the ratings matrix, best CF rank first.
    pub items: Vec<usize>,
    /// `(f_acc, f_div, f_nov)`, all minimized, all in `[0, 1]`.
    pub objectives: [f64; 3],
}

/// The re-ranked Pareto set for one user plus the automatically selected
/// list.
#[derive(Debug)]
pub struct RerankOutcome {
    /// Mutually non-dominated candidate lists found by the MOEA.
    pub archive: Vec<RecList>,
    /// Index into `archive` of the selected list.
    pub selected: usize,
    pub evaluations: usize,
}

/// Build the three list objectives for one user over a candidate slate.
/// Lists are given as positions into `candidates`.
///
/// * `f_acc` = 1 - precision@N against the user's held-out likes.
/// * `f_div` = 1 - mean pairwise dissimilarity `(1 - s)`.
/// * `f_nov` = 1 - mean popularity complement, i.e. mean `pop / max_pop`.
pub fn rec_list_objectives(
    matrix: &RatingsMatrix,
    sim: &ItemSimilarity,
    user: usize,
    candidates: &[usize],
) -> Vec<ListObjective> {
    let likes = matrix.heldout_likes(user);
    let candidate_items: Vec<usize> = candidates.to_vec();

    let acc_items = candidate_items.clone();
    let f_acc: ListObjective = Box::new(move |positions: &[usize]| {
        if positions.is_empty() {
            return 1.0;
        }
        let hits = positions
            .iter()
            .filter(|&&p| likes.binary_search(&acc_items[p]).is_ok())
            .count();
        1.0 - hits as f64 / positions.len() as f64
    });

    let div_items = candidate_items.clone();
    let pairwise: Vec<f64> = {
        let k = candidates.len();
        let mut v = vec![0.0; k * k];
        for a in 0..k {
            for b in 0..k {
                // Dissimilarity clamped so pathological negative
                // similarities cannot push the objective outside [0, 1].
                v[a * k + b] = (1.0 - sim.get(candidates[a], candidates[b])).clamp(0.0, 1.0);
            }
        }
        v
    };
    let f_div: ListObjective = Box::new(move |positions: &[usize]| {
        let n = positions.len();
        if n < 2 {
            return 1.0;
        }
        let k = div_items.len();
        let mut total = 0.0;
        let mut pairs = 0.0;
        for (a, &pa) in positions.iter().enumerate() {
            for &pb in positions.iter().skip(a + 1) {
                total += pairwise[pa * k + pb];
                pairs += 1.0;
            }
        }
        1.0 - total / pairs
    });

    let popularity = matrix.item_popularity();
    let max_pop = popularity.iter().copied().max().unwrap_or(0).max(1) as f64;
    let nov_items = candidate_items;
    let f_nov: ListObjective = Box::new(move |positions: &[usize]| {
        if positions.is_empty() {
            return 1.0;
        }
        positions
            .iter()
            .map(|&p| popularity[nov_items[p]] as f64 / max_pop)
            .sum::<f64>()
            / positions.len() as f64
    });

    vec![f_acc, f_div, f_nov]
}

/// Re-rank one user's top-K candidates into a top-N list: run the
/// configured MOEA over binary genomes (length K, popcount N) scoring
/// accuracy, diversity, and novelty, then pick one archive member with the
/// given selection method (the pipeline default is PROMETHEE).
///
/// The initial population is warmed with the plain CF top-N genome, so the
/// archive's accuracy never falls behind the unreranked list.
pub fn rerank(
    matrix: &RatingsMatrix,
    sim: &ItemSimilarity,
    user: usize,
    candidates: &[usize],
    n: usize,
    config: &EvolutionConfig,
    selection: SelectionMethod,
) -> Result<RerankOutcome, RecsysError> {
    let k = candidates.len();
    if n > k || n == 0 {
        return Err(RecsysError::InvalidN { n, k });
    }
    let encoding = EncodingSpec::Binary {
        length: k,
        num_selected: n,
    };
    let objectives = rec_list_objectives(matrix, sim, user, candidates);
    let ctx = ListContext::new(encoding, objectives);

    let mut warm_bits = vec![false; k];
    for bit in warm_bits.iter_mut().take(n) {
        *bit = true;
    }
    let outcome = evolve_seeded(&ctx, config, &[Genome::Binary(warm_bits)])?;

    let archive: Vec<RecList> = outcome
        .archive
        .members()
        .iter()
        .map(|entry| {
            let positions = decode(&entry.genome, ctx.encoding())
                .expect("archived genomes are valid")
                .items()
                .to_vec();
            let f = entry.solution.f.as_slice();
            RecList {
                items: positions.iter().map(|&p| candidates[p]).collect(),
                objectives: [f[0], f[1], f[2]],
            }
        })
        .collect();
    assert!(
        !archive.is_empty(),
        "the warm-start genome always survives evaluation"
    );

    let selected = if archive.len() == 1 {
        0
    } else {
        let vectors = outcome
            .archive
            .members()
            .iter()
            .map(|e| e.solution.f.clone())
            .collect::<Vec<_>>();
        select_best(&vectors, selection, &McdmConfig::uniform(3))?.index
    };
    Ok(RerankOutcome {
        archive,
        selected,
        evaluations: outcome.evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{pareto_indices, ObjectiveVector};
    use crate::moea::Algorithm;
    use crate::recsys::ratings::synth_dataset;
    use crate::recsys::similarity::{cf_topk, item_similarity};

    fn toy() -> (RatingsMatrix, ItemSimilarity) {
        let m = synth_dataset(40, 60, 5);
        let sim = item_similarity(&m);
        (m, sim)
    }

    #[test]
    fn objectives_stay_in_unit_interval() {
        let (m, sim) = toy();
        let candidates = cf_topk(&m, &sim, 0, 12).items;
        let objectives = rec_list_objectives(&m, &sim, 0, &candidates);
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(1);
        for _ in 0..500 {
            let mut positions: Vec<usize> = (0..candidates.len()).collect();
            positions.shuffle(&mut rng);
            positions.truncate(4);
            for f in &objectives {
                let v = f(&positions);
                assert!((0.0..=1.0).contains(&v), "objective value {v}");
            }
        }
    }

    #[test]
    fn rerank_matches_brute_force_at_k5_n2() {
        let (m, sim) = toy();
        let user = 3;
        let candidates = cf_topk(&m, &sim, user, 5).items;
        assert_eq!(candidates.len(), 5);
        let config = EvolutionConfig {
            algorithm: Algorithm::Nsga2,
            population_size: 20,
            generations: 40,
            archive_capacity: 50,
            seed: 9,
            ..EvolutionConfig::default()
        };
        let out = rerank(
            &m,
            &sim,
            user,
            &candidates,
            2,
            &config,
            SelectionMethod::Promethee,
        )
        .unwrap();

        // Exhaustive oracle over all C(5, 2) = 10 lists.
        let objectives = rec_list_objectives(&m, &sim, user, &candidates);
        let mut all: Vec<(Vec<usize>, ObjectiveVector)> = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                let f: Vec<f64> = objectives.iter().map(|o| o(&[i, j])).collect();
                all.push((vec![candidates[i], candidates[j]], ObjectiveVector::new(f)));
            }
        }
        let vectors: Vec<ObjectiveVector> = all.iter().map(|(_, f)| f.clone()).collect();
        let mut expected: Vec<Vec<usize>> = pareto_indices(&vectors)
            .into_iter()
            .map(|i| all[i].0.clone())
            .collect();
        expected.sort();
        let mut got: Vec<Vec<usize>> = out.archive.iter().map(|l| l.items.clone()).collect();
        got.sort();
        assert_eq!(got, expected);
        assert!(out.selected < out.archive.len());
    }

    #[test]
    fn degenerate_candidates_collapse_to_accuracy_optimal_lists() {
        use crate::recsys::{RatingsMatrix, Split};
        // Five candidate items with identical rating vectors (pairwise
        // similarity 1) and equal popularity: f_div and f_nov are constant
        // across lists, so only accuracy can separate them.
        let ids = |prefix: &str, n: usize| -> Vec<String> {
            (0..n).map(|i| format!("{prefix}{i}")).collect()
        };
        let mut ratings = Vec::new();
        for user in 0..2 {
            for item in 0..5 {
                ratings.push((user, item, 4.0, Split::Train));
            }
        }
        // Target user: one TRAIN rating on a separate item, two held-out
        // likes among the candidates.
        ratings.push((2, 5, 4.0, Split::Train));
        ratings.push((2, 0, 5.0, Split::Heldout));
        ratings.push((2, 1, 5.0, Split::Heldout));
        let m = RatingsMatrix::from_parts(ids("u", 3), ids("i", 6), ratings, 3.0).unwrap();
        let sim = item_similarity(&m);
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(sim.get(a, b), 1.0, "candidates must be identical");
            }
        }

        let candidates = cf_topk(&m, &sim, 2, 5).items;
        assert_eq!(candidates, vec![0, 1, 2, 3, 4]);
        let config = EvolutionConfig {
            population_size: 20,
            generations: 40,
            archive_capacity: 50,
            seed: 4,
            ..EvolutionConfig::default()
        };
        let out = rerank(
            &m,
            &sim,
            2,
            &candidates,
            2,
            &config,
            SelectionMethod::Promethee,
        )
        .unwrap();
        // The only precision-1 list is {i0, i1}; everything else is
        // dominated through f_acc with the other objectives tied.
        assert_eq!(out.archive.len(), 1);
        assert_eq!(out.archive[0].items, vec![0, 1]);
        assert_eq!(out.archive[0].objectives[0], 0.0);
    }

    #[test]
    fn rerank_rejects_oversized_n() {
        let (m, sim) = toy();
        let candidates = cf_topk(&m, &sim, 0, 5).items;
        let err = rerank(
            &m,
            &sim,
            0,
            &candidates,
            7,
            &EvolutionConfig::default(),
            SelectionMethod::Promethee,
        )
        .unwrap_err();
        assert!(matches!(err, RecsysError::InvalidN { n: 7, k: 5 }));
    }

    #[test]
    fn rerank_is_deterministic() {
        let (m, sim) = toy();
        let candidates = cf_topk(&m, &sim, 1, 10).items;
        let config = EvolutionConfig {
            population_size: 16,
            generations: 10,
            seed: 2,
            ..EvolutionConfig::default()
        };
        let a = rerank(
            &m,
            &sim,
            1,
            &candidates,
            4,
            &config,
            SelectionMethod::Promethee,
        )
        .unwrap();
        let b = rerank(
            &m,
            &sim,
            1,
            &candidates,
            4,
            &config,
            SelectionMethod::Promethee,
        )
        .unwrap();
        assert_eq!(a.archive.len(), b.archive.len());
        assert_eq!(a.archive[a.selected].items, b.archive[b.selected].items);
    }
}
