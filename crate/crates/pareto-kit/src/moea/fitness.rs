use super::MoeaError;
use crate::core::{dominates, nondominated_sort_indices, ObjectiveVector};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha12Rng;

/// Niche counts for every member of a set: `nc(x) = sum_y sh(d(x, y))` with
/// `sh(d) = max(0, 1 - d / sigma_share)` and Euclidean distances in min-max
/// normalized objective space. Self-distance is zero, so every count is at
/// least 1.
pub fn niche_counts(objectives: &[ObjectiveVector], sigma_share: f64) -> Vec<f64> {
    assert!(sigma_share > 0.0, "sigma_share must be positive");
    let normalized = normalize(objectives);
    let n = normalized.len();
    let mut counts = vec![0.0; n];
    for i in 0..n {
        counts[i] += 1.0; // self
        for j in i + 1..n {
            let d = euclidean(&normalized[i], &normalized[j]);
            let sh = (1.0 - d / sigma_share).max(0.0);
            counts[i] += sh;
            counts[j] += sh;
        }
    }
    counts
}

/// Crowdedness around one member of the set; see [`niche_counts`].
pub fn niche_count(objectives: &[ObjectiveVector], idx: usize, sigma_share: f64) -> f64 {
    assert!(sigma_share > 0.0, "sigma_share must be positive");
    let normalized = normalize(objectives);
    normalized
        .iter()
        .map(|other| (1.0 - euclidean(&normalized[idx], other) / sigma_share).max(0.0))
        .sum()
}

fn normalize(objectives: &[ObjectiveVector]) -> Vec<Vec<f64>> {
    let raw: Vec<Vec<f64>> = objectives.iter().map(|v| v.as_slice().to_vec()).collect();
    crate::select::normalize_front(&raw).0
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Discount fitness by crowdedness: `z' = z / nc`.
pub fn fitness_sharing(fitness: f64, niche_count: f64) -> Result<f64, MoeaError> {
    if niche_count.is_nan() || niche_count < 1.0 {
        return Err(MoeaError::InvalidNicheCount(niche_count));
    }
    Ok(fitness / niche_count)
}

/// MOGA fitness: rank by dominator count, `r(x) = 1 + #dominators`, then
/// `z(x) = N - sum_(k < r) n_k - 0.5 (n_r - 1)` so all non-dominated
/// solutions share the maximum fitness and fitness falls with rank.
pub fn moga_fitness(objectives: &[ObjectiveVector]) -> Vec<f64> {
    let n = objectives.len();
    let ranks: Vec<usize> = (0..n)
        .map(|i| {
            1 + objectives
                .iter()
                .enumerate()
                .filter(|(j, other)| {
                    *j != i && dominates(other.as_slice(), objectives[i].as_slice())
                })
                .count()
        })
        .collect();
    let max_rank = ranks.iter().copied().max().unwrap_or(1);
    let mut rank_sizes = vec![0usize; max_rank + 1];
    for &r in &ranks {
        rank_sizes[r] += 1;
    }
    ranks
        .iter()
        .map(|&r| {
            let below: usize = rank_sizes[1..r].iter().sum();
            n as f64 - below as f64 - 0.5 * (rank_sizes[r] as f64 - 1.0)
        })
        .collect()
}

/// NSGA dummy fitness: front i (from iterative non-dominated sorting) gets
/// `number_of_fronts - i`, so earlier fronts score strictly higher. The
/// magnitudes are arbitrary; only the descending order matters.
pub fn nsga_dummy_fitness(objectives: &[ObjectiveVector]) -> Vec<f64> {
    let fronts = nondominated_sort_indices(objectives);
    let nf = fronts.len();
    let mut fitness = vec![0.0; objectives.len()];
    for (i, front) in fronts.iter().enumerate() {
        for &idx in front {
            fitness[idx] = (nf - i) as f64;
        }
    }
    fitness
}

/// NSGA selection fitness: dummy fitness shared within each front, with
/// niche counts computed among front members only.
pub fn nsga_shared_fitness(
    objectives: &[ObjectiveVector],
    sigma_share: f64,
) -> Result<Vec<f64>, MoeaError> {
    let fronts = nondominated_sort_indices(objectives);
    let nf = fronts.len();
    let mut fitness = vec![0.0; objectives.len()];
    for (i, front) in fronts.iter().enumerate() {
        let members: Vec<ObjectiveVector> =
            front.iter().map(|&idx| objectives[idx].clone()).collect();
        let counts = niche_counts(&members, sigma_share);
        for (slot, &idx) in front.iter().enumerate() {
            fitness[idx] = fitness_sharing((nf - i) as f64, counts[slot])?;
        }
    }
    Ok(fitness)
}

/// Raw selection probabilities for one VEGA sub-population:
/// `p_i = 1 - z_i / sum_s z_s`, renormalized to sum to one (the raw values
/// sum to `M_i - 1`). Degenerate cases (singletons, non-positive or
/// non-finite raw values from negative fitness) fall back to a uniform
/// distribution.
pub fn vega_subpopulation_probabilities(fitness: &[f64]) -> Vec<f64> {
    let n = fitness.len();
    assert!(n > 0);
    let total: f64 = fitness.iter().sum();
    let raw: Vec<f64> = fitness.iter().map(|z| 1.0 - z / total).collect();
    let raw_sum: f64 = raw.iter().sum();
    let valid = total != 0.0 && raw_sum > 0.0 && raw.iter().all(|p| p.is_finite() && *p >= 0.0);
    if !valid {
        return vec![1.0 / n as f64; n];
    }
    raw.iter().map(|p| p / raw_sum).collect()
}

/// VEGA selection: randomly partition the population into M sub-populations,
/// assign fitness `z_i(x) = f_i(x)` inside sub-population i, and draw each
/// sub-population's share of parents by roulette on the normalized
/// probabilities. Returns `population_size` parent indices.
pub fn vega_assign_and_select(
    objectives: &[ObjectiveVector],
    num_objectives: usize,
    rng: &mut ChaCha12Rng,
) -> Result<Vec<usize>, MoeaError> {
    let n = objectives.len();
    if n < num_objectives {
        return Err(MoeaError::PopulationTooSmall {
            needed: num_objectives,
            got: n,
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);

    let mut parents = Vec::with_capacity(n);
    let base = n / num_objectives;
    let extra = n % num_objectives;
    let mut start = 0;
    #[allow(clippy::needless_range_loop)] // obj_idx also selects the objective
    for obj_idx in 0..num_objectives {
        let size = base + usize::from(obj_idx < extra);
        let chunk = &order[start..start + size];
        start += size;
        let fitness: Vec<f64> = chunk.iter().map(|&i| objectives[i][obj_idx]).collect();
        let probs = vega_subpopulation_probabilities(&fitness);
        for _ in 0..size {
            parents.push(chunk[roulette(&probs, rng)]);
        }
    }
    Ok(parents)
}

/// Draw an index proportionally to `probs` (assumed normalized).
pub(crate) fn roulette(probs: &[f64], rng: &mut ChaCha12Rng) -> usize {
    let spin: f64 = rng.gen();
    let mut acc = 0.0;
    for (i, p) in probs.iter().enumerate() {
        acc += p;
        if spin < acc {
            return i;
        }
    }
    probs.len() - 1
}

/// NPGA tournament: candidates `a` and `b` are checked against a random
/// comparison group. If exactly one is dominated by the group, the other
/// wins; otherwise the less crowded candidate wins, with remaining ties
/// going to the lower index.
pub fn npga_tournament(
    objectives: &[ObjectiveVector],
    a: usize,
    b: usize,
    comparison: &[usize],
    sigma_share: f64,
) -> usize {
    if a == b {
        return a;
    }
    let dominated_by_group = |x: usize| {
        comparison
            .iter()
            .any(|&g| g != x && dominates(objectives[g].as_slice(), objectives[x].as_slice()))
    };
    let a_dominated = dominated_by_group(a);
    let b_dominated = dominated_by_group(b);
    match (a_dominated, b_dominated) {
        (true, false) => b,
        (false, true) => a,
        _ => {
            let counts = niche_counts(objectives, sigma_share);
            if counts[a] < counts[b] {
                a
            } else if counts[b] < counts[a] {
                b
            } else {
                a.min(b)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn ov(values: &[f64]) -> ObjectiveVector {
        ObjectiveVector::new(values.to_vec())
    }

    /// Same dominance structure as the worked sorting examples.
    fn five_point_set() -> Vec<ObjectiveVector> {
        vec![
            ov(&[0.0, 0.6]),  // A
            ov(&[0.3, 0.0]),  // B
            ov(&[0.05, 0.7]), // C
            ov(&[1.0, 0.05]), // D
            ov(&[0.35, 1.0]), // E
        ]
    }

    #[test]
    fn moga_fitness_worked_example() {
        // Ranks: A,B -> 1; C,D -> 2; E -> 4. n = (2, 2, 0, 1), N = 5.
        let z = moga_fitness(&five_point_set());
        assert_eq!(z[0], 4.5);
        assert_eq!(z[1], 4.5);
        // Literal formula value 5 - 2 - 0.5(2 - 1) = 2.5; the source text
        // prints 3.5 for this case but that contradicts its own equation.
        assert_eq!(z[2], 2.5);
        assert_eq!(z[3], 2.5);
        assert_eq!(z[4], 1.0);
    }

    #[test]
    fn moga_single_rank_population() {
        let pop = vec![ov(&[0.0, 2.0]), ov(&[1.0, 1.0]), ov(&[2.0, 0.0])];
        let z = moga_fitness(&pop);
        // All rank 1: z = N - 0.5 (N - 1) = 3 - 1 = 2.
        assert!(z.iter().all(|v| *v == 2.0));
    }

    #[test]
    fn moga_argmax_is_the_nondominated_set() {
        let mut rng = ChaCha12Rng::seed_from_u64(5);
        for _ in 0..50 {
            let pop: Vec<ObjectiveVector> = (0..30)
                .map(|_| ov(&[rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0)]))
                .collect();
            let z = moga_fitness(&pop);
            let best = z.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let argmax: Vec<usize> = (0..pop.len()).filter(|&i| z[i] == best).collect();
            assert_eq!(argmax, crate::core::pareto_indices(&pop));
        }
    }

    #[test]
    fn nsga_dummy_fitness_descends_across_fronts() {
        let z = nsga_dummy_fitness(&five_point_set());
        assert_eq!(z, vec![3.0, 3.0, 2.0, 2.0, 1.0]);
    }

    #[test]
    fn fitness_sharing_divides_by_niche_count() {
        assert_eq!(fitness_sharing(4.0, 2.0).unwrap(), 2.0);
        assert_eq!(fitness_sharing(3.0, 1.5).unwrap(), 2.0);
        assert_eq!(fitness_sharing(7.0, 1.0).unwrap(), 7.0);
        assert!(matches!(
            fitness_sharing(1.0, 0.5),
            Err(MoeaError::InvalidNicheCount(_))
        ));
    }

    #[test]
    fn niche_count_cases() {
        // Lone individual: only itself.
        assert_eq!(niche_count(&[ov(&[1.0, 2.0])], 0, 1.0), 1.0);

        // Two coincident individuals count each other fully.
        let pair = vec![ov(&[1.0, 1.0]), ov(&[1.0, 1.0])];
        assert_eq!(niche_count(&pair, 0, 0.5), 2.0);
        assert_eq!(niche_count(&pair, 1, 0.5), 2.0);

        // Normalized identity grid: neighbor at half the sharing radius
        // contributes 1 - 1/2, the one at the radius contributes nothing.
        let sigma = 2.0_f64.sqrt();
        let pop = vec![ov(&[0.0, 0.0]), ov(&[0.5, 0.5]), ov(&[1.0, 1.0])];
        let nc = niche_count(&pop, 0, sigma);
        assert!((nc - 1.5).abs() < 1e-12, "nc = {nc}");
    }

    #[test]
    fn vega_probabilities_worked_example() {
        let probs = vega_subpopulation_probabilities(&[2.0, 3.0, 5.0]);
        assert!((probs[0] - 0.4).abs() < 1e-12);
        assert!((probs[1] - 0.35).abs() < 1e-12);
        assert!((probs[2] - 0.25).abs() < 1e-12);

        let equal = vega_subpopulation_probabilities(&[4.0, 4.0]);
        assert_eq!(equal, vec![0.5, 0.5]);

        // Raw Eq value for a singleton is 0; normalization yields 1.
        assert_eq!(vega_subpopulation_probabilities(&[7.0]), vec![1.0]);
    }

    #[test]
    fn vega_selection_returns_population_size_parents() {
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        let pop: Vec<ObjectiveVector> = (0..11).map(|i| ov(&[i as f64, 10.0 - i as f64])).collect();
        let parents = vega_assign_and_select(&pop, 2, &mut rng).unwrap();
        assert_eq!(parents.len(), 11);
        assert!(parents.iter().all(|p| *p < 11));

        let err = vega_assign_and_select(&pop[..1], 2, &mut rng).unwrap_err();
        assert!(matches!(err, MoeaError::PopulationTooSmall { .. }));
    }

    #[test]
    fn npga_tournament_worked_examples() {
        let pop = five_point_set();
        // G = {C}: E is dominated by C, so A wins the (A, E) pair.
        assert_eq!(npga_tournament(&pop, 0, 4, &[2], 0.75), 0);
        // G = {C}: neither B nor D is dominated; D sits in the less
        // crowded region under sigma_share = 0.75.
        assert_eq!(npga_tournament(&pop, 1, 3, &[2], 0.75), 3);
        // Same individual on both sides.
        assert_eq!(npga_tournament(&pop, 2, 2, &[0], 0.75), 2);
    }
}
