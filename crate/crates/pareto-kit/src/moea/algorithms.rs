use super::archive::{ArchiveEntry, ParetoArchive};
use super::fitness::{
    moga_fitness, niche_counts, npga_tournament, nsga_shared_fitness, roulette,
    vega_assign_and_select,
};
use super::genome::{
    crossover, decode, genome_as_decision, mutate, random_genome, validate_genome, Decoded,
    EncodingSpec, Genome,
};
use super::MoeaError;
use crate::core::{
    compare_dominance, dominates, dominator_count_groups, evaluate, DominanceRelation,
    ObjectiveVector, Problem, Solution,
};
use crate::select::{hypervolume_set, hypervolume_set_monte_carlo, HypervolumeRef};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// The six population-based algorithms on offer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Vega,
    Moga,
    Nsga,
    Nsga2,
    Npga,
    Paes,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Vega,
        Algorithm::Moga,
        Algorithm::Nsga,
        Algorithm::Nsga2,
        Algorithm::Npga,
        Algorithm::Paes,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Vega => "vega",
            Algorithm::Moga => "moga",
            Algorithm::Nsga => "nsga",
            Algorithm::Nsga2 => "nsga2",
            Algorithm::Npga => "npga",
            Algorithm::Paes => "paes",
        }
    }

    pub fn from_name(name: &str) -> Option<Algorithm> {
        Algorithm::ALL.iter().copied().find(|a| a.name() == name)
    }
}

/// Run parameters shared by all six algorithms.
#[derive(Debug, Clone)]
pub struct EvolutionConfig {
    pub algorithm: Algorithm,
    pub population_size: usize,
    pub generations: usize,
    pub crossover_rate: f64,
    pub mutation_rate: f64,
    /// Sharing radius in min-max normalized objective space.
    pub sigma_share: f64,
    /// Size of the NPGA comparison group.
    pub tournament_comparison_size: usize,
    pub archive_capacity: usize,
    /// Soft cap on objective evaluations; the run stops early and flags
    /// the outcome when it is hit.
    pub max_evaluations: Option<usize>,
    /// Collect a per-generation statistics log.
    pub collect_log: bool,
    pub seed: u64,
}

impl Default for EvolutionConfig {
    fn default() -> Self {
        EvolutionConfig {
            algorithm: Algorithm::Nsga2,
            population_size: 100,
            generations: 100,
            crossover_rate: 0.9,
            mutation_rate: 0.1,
            sigma_share: 0.1,
            tournament_comparison_size: 10,
            archive_capacity: 100,
            max_evaluations: None,
            collect_log: false,
            seed: 0,
        }
    }
}

impl EvolutionConfig {
    pub fn validate(&self) -> Result<(), MoeaError> {
        if self.population_size < 2 {
            return Err(MoeaError::InvalidConfig(
                "population_size must be at least 2".to_string(),
            ));
        }
        if self.generations == 0 {
            return Err(MoeaError::InvalidConfig(
                "generations must be at least 1".to_string(),
            ));
        }
        for (name, rate) in [
            ("crossover_rate", self.crossover_rate),
            ("mutation_rate", self.mutation_rate),
        ] {
            if !(0.0..=1.0).contains(&rate) {
                return Err(MoeaError::InvalidConfig(format!(
                    "{name} must lie in [0, 1], found {rate}"
                )));
            }
        }
        if self.sigma_share.is_nan() || self.sigma_share <= 0.0 {
            return Err(MoeaError::InvalidConfig(
                "sigma_share must be positive".to_string(),
            ));
        }
        if self.tournament_comparison_size == 0 {
            return Err(MoeaError::InvalidConfig(
                "tournament_comparison_size must be at least 1".to_string(),
            ));
        }
        if self.archive_capacity == 0 {
            return Err(MoeaError::InvalidConfig(
                "archive_capacity must be at least 1".to_string(),
            ));
        }
        Ok(())
    }
}

/// What an algorithm needs from the problem being evolved: an encoding and
/// a way to score genomes.
pub trait EvolutionContext {
    fn encoding(&self) -> &EncodingSpec;
    fn num_objectives(&self) -> usize;
    fn evaluate(&self, genome: &Genome) -> Result<Solution, MoeaError>;
}

/// Real-encoded evolution directly over a continuous [`Problem`].
pub struct ProblemContext<'a> {
    problem: &'a Problem,
    encoding: EncodingSpec,
}

impl<'a> ProblemContext<'a> {
    pub fn new(problem: &'a Problem) -> Self {
        ProblemContext {
            encoding: EncodingSpec::Real {
                bounds: problem.bounds.clone(),
            },
            problem,
        }
    }
}

impl EvolutionContext for ProblemContext<'_> {
    fn encoding(&self) -> &EncodingSpec {
        &self.encoding
    }

    fn num_objectives(&self) -> usize {
        self.problem.num_objectives()
    }

    fn evaluate(&self, genome: &Genome) -> Result<Solution, MoeaError> {
        match decode(genome, &self.encoding)? {
            Decoded::Decision(x) => evaluate(self.problem, &x).map_err(MoeaError::Evaluation),
            Decoded::Items(_) => unreachable!("real encoding decodes to a decision vector"),
        }
    }
}

/// List-valued objective evaluator for binary and permutation encodings;
/// objectives receive the decoded item indices.
pub type ListObjective = Box<dyn Fn(&[usize]) -> f64 + Send + Sync>;

/// Evolution over item lists (e.g. recommendation lists) with objectives
/// defined directly on the decoded list.
pub struct ListContext {
    encoding: EncodingSpec,
    objectives: Vec<ListObjective>,
}

impl ListContext {
    pub fn new(encoding: EncodingSpec, objectives: Vec<ListObjective>) -> Self {
        assert!(
            objectives.len() >= 2,
            "a multi-objective context needs M >= 2"
        );
        assert!(
            !matches!(encoding, EncodingSpec::Real { .. }),
            "use ProblemContext for real-encoded problems"
        );
        ListContext {
            encoding,
            objectives,
        }
    }
}

impl EvolutionContext for ListContext {
    fn encoding(&self) -> &EncodingSpec {
        &self.encoding
    }

    fn num_objectives(&self) -> usize {
        self.objectives.len()
    }

    fn evaluate(&self, genome: &Genome) -> Result<Solution, MoeaError> {
        let items = match decode(genome, &self.encoding)? {
            Decoded::Items(items) => items,
            Decoded::Decision(_) => unreachable!("list encodings decode to items"),
        };
        let mut values = Vec::with_capacity(self.objectives.len());
        for (i, obj) in self.objectives.iter().enumerate() {
            let v = obj(&items);
            if !v.is_finite() {
                return Err(MoeaError::Evaluation(
                    crate::core::CoreError::NonFiniteObjective {
                        objective: i,
                        value: v,
                    },
                ));
            }
            values.push(v);
        }
        Ok(Solution {
            x: genome_as_decision(genome),
            f: ObjectiveVector::new(values),
            feasible: true,
        })
    }
}

/// One PAES acceptance step. The child was produced by mutating the parent
/// and already evaluated.
///
/// * Child dominated by the parent: discarded, nothing changes.
/// * Child dominates the parent: it becomes the parent and enters the
///   archive, sweeping out members it dominates.
/// * Otherwise the archive mediates: if the child dominates any archived
///   member it replaces them and becomes the parent; if not, it is archived
///   only while capacity remains, and the less crowded of parent and child
///   carries on (ties keep the parent).
pub fn paes_step(
    parent: &ArchiveEntry,
    child: ArchiveEntry,
    archive: &mut ParetoArchive,
    sigma_share: f64,
) -> ArchiveEntry {
    let relation = compare_dominance(&child.solution.f, &parent.solution.f)
        .expect("parent and child share the objective space");
    match relation {
        DominanceRelation::DominatedBy => parent.clone(),
        DominanceRelation::Dominates => {
            archive.insert(child.clone());
            child
        }
        DominanceRelation::Incomparable | DominanceRelation::Equal => {
            let child_clears_members = archive
                .members()
                .iter()
                .any(|e| dominates(child.solution.f.as_slice(), e.solution.f.as_slice()));
            if child_clears_members {
                archive.insert(child.clone());
                return child;
            }
            if archive.len() < archive.capacity() {
                archive.insert(child.clone());
            }
            let mut set = archive.objective_vectors();
            set.push(parent.solution.f.clone());
            set.push(child.solution.f.clone());
            let counts = niche_counts(&set, sigma_share);
            let parent_nc = counts[set.len() - 2];
            let child_nc = counts[set.len() - 1];
            if child_nc < parent_nc {
                child
            } else {
                parent.clone()
            }
        }
    }
}

/// Per-generation statistics for the optional run log.
#[derive(Debug, Clone)]
pub struct GenerationStat {
    pub generation: usize,
    pub archive_size: usize,
    /// Componentwise best (minimum) objective values over the archive.
    pub best: Vec<f64>,
    pub hypervolume: f64,
}

/// Result of an evolution run.
pub struct EvolveOutcome {
    pub archive: ParetoArchive,
    pub evaluations: usize,
    /// Set when `max_evaluations` stopped the run early; the archive still
    /// holds the best solutions found so far.
    pub budget_exhausted: bool,
    pub log: Vec<GenerationStat>,
}

struct Individual {
    genome: Genome,
    solution: Solution,
}

/// Run the configured algorithm and return the archive of non-dominated
/// solutions discovered along the way. Deterministic for a fixed seed.
pub fn evolve(
    ctx: &dyn EvolutionContext,
    config: &EvolutionConfig,
) -> Result<EvolveOutcome, MoeaError> {
    evolve_seeded(ctx, config, &[])
}

/// [`evolve`] with caller-provided genomes injected into the initial
/// population (a warm start).
pub fn evolve_seeded(
    ctx: &dyn EvolutionContext,
    config: &EvolutionConfig,
    initial: &[Genome],
) -> Result<EvolveOutcome, MoeaError> {
    config.validate()?;
    ctx.encoding().validate()?;
    let mut rng = ChaCha12Rng::seed_from_u64(config.seed);
    let mut run = Run {
        ctx,
        config,
        archive: ParetoArchive::new(config.archive_capacity, config.sigma_share),
        evaluations: 0,
        budget: config.max_evaluations.unwrap_or(usize::MAX),
        log: Vec::new(),
    };
    if config.algorithm == Algorithm::Paes {
        run.paes(initial, &mut rng)?;
    } else {
        run.generational(initial, &mut rng)?;
    }
    Ok(EvolveOutcome {
        budget_exhausted: run.evaluations >= run.budget,
        archive: run.archive,
        evaluations: run.evaluations,
        log: run.log,
    })
}

struct Run<'a> {
    ctx: &'a dyn EvolutionContext,
    config: &'a EvolutionConfig,
    archive: ParetoArchive,
    evaluations: usize,
    budget: usize,
    log: Vec<GenerationStat>,
}

impl Run<'_> {
    fn out_of_budget(&self) -> bool {
        self.evaluations >= self.budget
    }

    /// Evaluate and feed the running archive (the generational
    /// algorithms' path).
    fn score(&mut self, genome: Genome) -> Result<Individual, MoeaError> {
        let individual = self.evaluate_only(genome)?;
        if individual.solution.feasible {
            self.archive.insert(ArchiveEntry {
                genome: individual.genome.clone(),
                solution: individual.solution.clone(),
            });
        }
        Ok(individual)
    }

    /// Evaluate without touching the archive; PAES mediates its own
    /// archive updates through [`paes_step`].
    fn evaluate_only(&mut self, genome: Genome) -> Result<Individual, MoeaError> {
        let solution = self.ctx.evaluate(&genome)?;
        self.evaluations += 1;
        Ok(Individual { genome, solution })
    }

    fn init_population(
        &mut self,
        initial: &[Genome],
        rng: &mut ChaCha12Rng,
    ) -> Result<Vec<Individual>, MoeaError> {
        let mut pop = Vec::with_capacity(self.config.population_size);
        for genome in initial.iter().take(self.config.population_size) {
            validate_genome(genome, self.ctx.encoding())?;
            pop.push(self.score(genome.clone())?);
        }
        while pop.len() < self.config.population_size && !self.out_of_budget() {
            let genome = random_genome(self.ctx.encoding(), rng);
            pop.push(self.score(genome)?);
        }
        Ok(pop)
    }

    fn generational(&mut self, initial: &[Genome], rng: &mut ChaCha12Rng) -> Result<(), MoeaError> {
        let mut pop = self.init_population(initial, rng)?;
        if pop.is_empty() {
            return Ok(());
        }
        for generation in 0..self.config.generations {
            if self.out_of_budget() {
                break;
            }
            let objectives: Vec<ObjectiveVector> =
                pop.iter().map(|i| i.solution.f.clone()).collect();
            let parents = self.select_parents(&objectives, rng)?;
            let child_genomes = self.make_children(&pop, &parents, rng);
            let mut children = Vec::with_capacity(child_genomes.len());
            for genome in child_genomes {
                if self.out_of_budget() {
                    break;
                }
                children.push(self.score(genome)?);
            }
            pop = match self.config.algorithm {
                // Dominance-based elitism over parents and children.
                Algorithm::Vega | Algorithm::Nsga2 => elitist_merge(
                    pop,
                    children,
                    self.config.population_size,
                    self.config.sigma_share,
                ),
                // Generational replacement; the archive preserves elites.
                Algorithm::Moga | Algorithm::Nsga | Algorithm::Npga => {
                    if children.len() == self.config.population_size {
                        children
                    } else {
                        // Budget ran dry mid-generation; keep the old
                        // population for the final bookkeeping.
                        pop
                    }
                }
                Algorithm::Paes => unreachable!("PAES has its own loop"),
            };
            self.log_generation(generation);
        }
        Ok(())
    }

    fn select_parents(
        &self,
        objectives: &[ObjectiveVector],
        rng: &mut ChaCha12Rng,
    ) -> Result<Vec<usize>, MoeaError> {
        let n = objectives.len();
        Ok(match self.config.algorithm {
            Algorithm::Vega => vega_assign_and_select(objectives, self.ctx.num_objectives(), rng)?,
            Algorithm::Moga => {
                let fitness = moga_fitness(objectives);
                let counts = niche_counts(objectives, self.config.sigma_share);
                let shared: Vec<f64> = fitness.iter().zip(&counts).map(|(z, nc)| z / nc).collect();
                roulette_parents(&shared, n, rng)
            }
            Algorithm::Nsga => {
                let shared = nsga_shared_fitness(objectives, self.config.sigma_share)?;
                roulette_parents(&shared, n, rng)
            }
            Algorithm::Nsga2 => {
                let shared = nsga2_shared_fitness(objectives, self.config.sigma_share)?;
                roulette_parents(&shared, n, rng)
            }
            Algorithm::Npga => {
                let group_size = self.config.tournament_comparison_size.min(n);
                (0..n)
                    .map(|_| {
                        let a = rng.gen_range(0..n);
                        let b = rng.gen_range(0..n);
                        let comparison = rand::seq::index::sample(rng, n, group_size).into_vec();
                        npga_tournament(objectives, a, b, &comparison, self.config.sigma_share)
                    })
                    .collect()
            }
            Algorithm::Paes => unreachable!("PAES has its own loop"),
        })
    }

    fn make_children(
        &self,
        pop: &[Individual],
        parents: &[usize],
        rng: &mut ChaCha12Rng,
    ) -> Vec<Genome> {
        let target = self.config.population_size;
        let spec = self.ctx.encoding();
        let mut children = Vec::with_capacity(target + 1);
        let mut i = 0;
        while children.len() < target {
            let p1 = &pop[parents[i % parents.len()]].genome;
            let p2 = &pop[parents[(i + 1) % parents.len()]].genome;
            i += 2;
            let (mut c1, mut c2) = if rng.gen::<f64>() < self.config.crossover_rate {
                crossover(p1, p2, spec, rng)
            } else {
                (p1.clone(), p2.clone())
            };
            if rng.gen::<f64>() < self.config.mutation_rate {
                mutate(&mut c1, spec, rng);
            }
            if rng.gen::<f64>() < self.config.mutation_rate {
                mutate(&mut c2, spec, rng);
            }
            children.push(c1);
            if children.len() < target {
                children.push(c2);
            }
        }
        children
    }

    fn paes(&mut self, initial: &[Genome], rng: &mut ChaCha12Rng) -> Result<(), MoeaError> {
        let spec = self.ctx.encoding().clone();
        // First feasible genome becomes the initial parent and seeds the
        // archive.
        let mut parent: Option<ArchiveEntry> = None;
        let candidates = initial.iter().take(1).cloned();
        for genome in
            candidates.chain((0..self.config.population_size).map(|_| random_genome(&spec, rng)))
        {
            if self.out_of_budget() {
                return Ok(());
            }
            validate_genome(&genome, &spec)?;
            let ind = self.evaluate_only(genome)?;
            if ind.solution.feasible {
                parent = Some(ArchiveEntry {
                    genome: ind.genome,
                    solution: ind.solution,
                });
                break;
            }
        }
        let Some(mut parent) = parent else {
            return Ok(());
        };
        // The initial parent seeds the archive.
        self.archive.insert(parent.clone());

        for generation in 0..self.config.generations {
            if self.out_of_budget() {
                break;
            }
            for _ in 0..self.config.population_size {
                if self.out_of_budget() {
                    break;
                }
                let mut genome = parent.genome.clone();
                mutate(&mut genome, &spec, rng);
                let child = self.evaluate_only(genome)?;
                if !child.solution.feasible {
                    continue;
                }
                parent = paes_step(
                    &parent,
                    ArchiveEntry {
                        genome: child.genome,
                        solution: child.solution,
                    },
                    &mut self.archive,
                    self.config.sigma_share,
                );
            }
            self.log_generation(generation);
        }
        Ok(())
    }

    fn log_generation(&mut self, generation: usize) {
        if !self.config.collect_log {
            return;
        }
        let m = self.ctx.num_objectives();
        let vectors = self.archive.objective_vectors();
        let best = match crate::core::utopia_and_nadir(&vectors) {
            Ok((utopia, _)) => utopia.as_slice().to_vec(),
            Err(_) => vec![f64::NAN; m],
        };
        let hypervolume = archive_hypervolume(&vectors, self.config.seed ^ generation as u64);
        self.log.push(GenerationStat {
            generation,
            archive_size: self.archive.len(),
            best,
            hypervolume,
        });
    }
}

/// Render a run log as CSV: `generation,archive_size,best_f1..best_fM,
/// hypervolume`.
pub fn run_log_csv(log: &[GenerationStat]) -> String {
    use std::fmt::Write as _;
    let m = log.first().map_or(0, |s| s.best.len());
    let mut out = String::from("generation,archive_size");
    for i in 1..=m {
        let _ = write!(out, ",best_f{i}");
    }
    out.push_str(",hypervolume\n");
    for stat in log {
        let _ = write!(out, "{},{}", stat.generation, stat.archive_size);
        for v in &stat.best {
            let _ = write!(out, ",{}", crate::core::format_float(*v));
        }
        let _ = writeln!(out, ",{}", crate::core::format_float(stat.hypervolume));
    }
    out
}

/// Quality proxy for run logs: union volume between the archive and a
/// reference 10% beyond its own nadir. Exact for two objectives,
/// Monte-Carlo otherwise.
fn archive_hypervolume(vectors: &[ObjectiveVector], seed: u64) -> f64 {
    let Ok((utopia, nadir)) = crate::core::utopia_and_nadir(vectors) else {
        return 0.0;
    };
    let reference = ObjectiveVector::new(
        nadir
            .as_slice()
            .iter()
            .zip(utopia.as_slice())
            .map(|(hi, lo)| hi + 0.1 * (hi - lo).max(1e-12))
            .collect(),
    );
    let r = HypervolumeRef::nadir(reference);
    if vectors[0].len() == 2 {
        hypervolume_set(vectors, &r).unwrap_or(0.0)
    } else {
        hypervolume_set_monte_carlo(vectors, &r, 4096, seed)
            .map(|mc| mc.value)
            .unwrap_or(0.0)
    }
}

/// Fitness-proportional parent draw; fitness values must be positive.
fn roulette_parents(fitness: &[f64], count: usize, rng: &mut ChaCha12Rng) -> Vec<usize> {
    let total: f64 = fitness.iter().sum();
    debug_assert!(total > 0.0, "selection fitness must be positive");
    let probs: Vec<f64> = fitness.iter().map(|z| z / total).collect();
    (0..count).map(|_| roulette(&probs, rng)).collect()
}

/// NSGA-II-style selection fitness: dominator-count groups in order get
/// descending base fitness, shared within each group.
fn nsga2_shared_fitness(
    objectives: &[ObjectiveVector],
    sigma_share: f64,
) -> Result<Vec<f64>, MoeaError> {
    let groups = dominator_count_groups(objectives);
    let occupied: Vec<&Vec<usize>> = groups.iter().filter(|g| !g.is_empty()).collect();
    let levels = occupied.len();
    let mut fitness = vec![0.0; objectives.len()];
    for (order, group) in occupied.iter().enumerate() {
        let members: Vec<ObjectiveVector> = group.iter().map(|&i| objectives[i].clone()).collect();
        let counts = niche_counts(&members, sigma_share);
        for (slot, &idx) in group.iter().enumerate() {
            fitness[idx] = super::fitness::fitness_sharing((levels - order) as f64, counts[slot])?;
        }
    }
    Ok(fitness)
}

/// Merge parents and children, then refill the population following the
/// dominator-count partition; the group that straddles the boundary is
/// broken by crowding, least crowded kept, ties to the lowest index.
fn elitist_merge(
    pop: Vec<Individual>,
    children: Vec<Individual>,
    target: usize,
    sigma_share: f64,
) -> Vec<Individual> {
    let mut merged = pop;
    merged.extend(children);
    let objectives: Vec<ObjectiveVector> = merged.iter().map(|i| i.solution.f.clone()).collect();
    let groups = dominator_count_groups(&objectives);

    let mut chosen: Vec<usize> = Vec::with_capacity(target);
    for group in groups.iter().filter(|g| !g.is_empty()) {
        let room = target - chosen.len();
        if room == 0 {
            break;
        }
        if group.len() <= room {
            chosen.extend_from_slice(group);
            continue;
        }
        // Boundary group: keep the least crowded members.
        let members: Vec<ObjectiveVector> = group.iter().map(|&i| objectives[i].clone()).collect();
        let counts = niche_counts(&members, sigma_share);
        let mut ranked: Vec<(usize, f64)> = group
            .iter()
            .zip(&counts)
            .map(|(&idx, &nc)| (idx, nc))
            .collect();
        ranked.sort_by(|a, b| {
            a.1.partial_cmp(&b.1)
                .expect("niche counts are finite")
                .then(a.0.cmp(&b.0))
        });
        chosen.extend(ranked.into_iter().take(room).map(|(idx, _)| idx));
        break;
    }
    chosen.sort_unstable();

    let mut keep: Vec<Option<Individual>> = merged.into_iter().map(Some).collect();
    chosen
        .into_iter()
        .map(|i| keep[i].take().expect("indices are unique"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{pareto_indices, DecisionVector};
    use crate::problems::example2;

    fn entry(x: &[f64], f: &[f64]) -> ArchiveEntry {
        ArchiveEntry {
            genome: Genome::Real(x.to_vec()),
            solution: Solution {
                x: DecisionVector::new(x.to_vec()),
                f: ObjectiveVector::new(f.to_vec()),
                feasible: true,
            },
        }
    }

    #[test]
    fn paes_walkthrough_discard_step() {
        // Child dominated by the parent: everything stays as it was.
        let parent = entry(&[0.0], &[1.0, 1.0]);
        let mut archive = ParetoArchive::new(10, 0.5);
        archive.insert(parent.clone());
        let child = entry(&[1.0], &[2.0, 2.0]);
        let new_parent = paes_step(&parent, child, &mut archive, 0.5);
        assert_eq!(new_parent.solution.f, parent.solution.f);
        assert_eq!(archive.len(), 1);
        assert_eq!(archive.members()[0].solution.f.as_slice(), &[1.0, 1.0]);
    }

    #[test]
    fn paes_walkthrough_parent_replacement_step() {
        // Child dominates the parent: child takes over and enters the
        // archive, evicting what it dominates.
        let parent = entry(&[0.0], &[1.0, 1.0]);
        let mut archive = ParetoArchive::new(10, 0.5);
        archive.insert(parent.clone());
        let child = entry(&[1.0], &[0.5, 0.5]);
        let new_parent = paes_step(&parent, child, &mut archive, 0.5);
        assert_eq!(new_parent.solution.f.as_slice(), &[0.5, 0.5]);
        assert_eq!(archive.len(), 1);
        assert_eq!(archive.members()[0].solution.f.as_slice(), &[0.5, 0.5]);
    }

    #[test]
    fn paes_walkthrough_archive_replacement_step() {
        // Child incomparable to the parent but dominating an archived
        // member: that member is replaced and the child carries on.
        let a0 = entry(&[0.0], &[1.0, 1.0]);
        let a1 = entry(&[1.0], &[0.2, 1.6]);
        let a2 = entry(&[2.0], &[0.9, 0.9]);
        assert_eq!(
            compare_dominance(&a2.solution.f, &a1.solution.f).unwrap(),
            DominanceRelation::Incomparable
        );
        let mut archive = ParetoArchive::new(10, 0.5);
        archive.insert(a0.clone());
        let new_parent = paes_step(&a1, a2.clone(), &mut archive, 0.5);
        assert_eq!(archive.len(), 1);
        assert_eq!(archive.members()[0].solution.f.as_slice(), &[0.9, 0.9]);
        assert_eq!(new_parent.solution.f.as_slice(), &[0.9, 0.9]);
    }

    #[test]
    fn paes_crowding_tiebreak_keeps_capacity() {
        // No dominance anywhere and the archive is full: the child is not
        // added and the less crowded of parent/child goes on.
        let parent = entry(&[0.0], &[0.5, 0.5]);
        let mut archive = ParetoArchive::new(2, 0.5);
        archive.insert(entry(&[1.0], &[0.0, 1.0]));
        archive.insert(entry(&[2.0], &[1.0, 0.0]));
        let child = entry(&[3.0], &[0.45, 0.56]);
        let _ = paes_step(&parent, child, &mut archive, 0.5);
        assert_eq!(archive.len(), 2, "capacity must hold");
    }

    fn tiny_list_context() -> ListContext {
        // 5 items, pick 2; two hand-made objectives over the item set.
        let weights = [0.9, 0.1, 0.5, 0.3, 0.7];
        let costs = [0.1, 0.9, 0.5, 0.6, 0.2];
        ListContext::new(
            EncodingSpec::Binary {
                length: 5,
                num_selected: 2,
            },
            vec![
                Box::new(move |items: &[usize]| {
                    items.iter().map(|&i| weights[i]).sum::<f64>() / 2.0
                }),
                Box::new(move |items: &[usize]| items.iter().map(|&i| costs[i]).sum::<f64>() / 2.0),
            ],
        )
    }

    fn brute_force_front(ctx: &ListContext) -> Vec<Vec<usize>> {
        let mut genomes = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                let mut bits = vec![false; 5];
                bits[i] = true;
                bits[j] = true;
                genomes.push(Genome::Binary(bits));
            }
        }
        let objectives: Vec<ObjectiveVector> =
            genomes.iter().map(|g| ctx.evaluate(g).unwrap().f).collect();
        let keep = pareto_indices(&objectives);
        keep.into_iter()
            .map(|i| {
                decode(&genomes[i], ctx.encoding())
                    .unwrap()
                    .items()
                    .to_vec()
            })
            .collect()
    }

    #[test]
    fn all_six_algorithms_recover_the_exhaustive_front() {
        let ctx = tiny_list_context();
        let mut expected = brute_force_front(&ctx);
        expected.sort();
        for algorithm in Algorithm::ALL {
            let config = EvolutionConfig {
                algorithm,
                population_size: 20,
                generations: 60,
                archive_capacity: 50,
                seed: 11,
                ..EvolutionConfig::default()
            };
            let outcome = evolve(&ctx, &config).unwrap();
            let mut got: Vec<Vec<usize>> = outcome
                .archive
                .members()
                .iter()
                .map(|e| decode(&e.genome, ctx.encoding()).unwrap().items().to_vec())
                .collect();
            got.sort();
            assert_eq!(
                got,
                expected,
                "{} did not recover the exhaustive Pareto set",
                algorithm.name()
            );
        }
    }

    #[test]
    fn evolve_is_deterministic_per_seed() {
        let problem = example2();
        let ctx = ProblemContext::new(&problem);
        let config = EvolutionConfig {
            population_size: 30,
            generations: 20,
            seed: 7,
            ..EvolutionConfig::default()
        };
        let a = evolve(&ctx, &config).unwrap();
        let b = evolve(&ctx, &config).unwrap();
        assert_eq!(a.archive.front().to_csv(), b.archive.front().to_csv());
        let c = evolve(&ctx, &EvolutionConfig { seed: 8, ..config }).unwrap();
        assert_ne!(a.archive.front().to_csv(), c.archive.front().to_csv());
    }

    #[test]
    fn evolve_archives_are_mutually_nondominated() {
        let problem = example2();
        let ctx = ProblemContext::new(&problem);
        for algorithm in Algorithm::ALL {
            let config = EvolutionConfig {
                algorithm,
                population_size: 24,
                generations: 15,
                seed: 3,
                ..EvolutionConfig::default()
            };
            let outcome = evolve(&ctx, &config).unwrap();
            assert!(!outcome.archive.is_empty(), "{}", algorithm.name());
            assert!(
                outcome.archive.front().is_mutually_nondominated(),
                "{} archive holds dominated members",
                algorithm.name()
            );
        }
    }

    #[test]
    fn budget_cap_flags_the_outcome() {
        let problem = example2();
        let ctx = ProblemContext::new(&problem);
        let config = EvolutionConfig {
            population_size: 30,
            generations: 1000,
            max_evaluations: Some(500),
            seed: 0,
            ..EvolutionConfig::default()
        };
        let outcome = evolve(&ctx, &config).unwrap();
        assert!(outcome.budget_exhausted);
        assert!(
            outcome.evaluations <= 500 + 30,
            "spent {}",
            outcome.evaluations
        );
        assert!(!outcome.archive.is_empty());
    }

    #[test]
    fn run_log_tracks_archive_growth() {
        let problem = example2();
        let ctx = ProblemContext::new(&problem);
        let config = EvolutionConfig {
            population_size: 20,
            generations: 10,
            collect_log: true,
            seed: 1,
            ..EvolutionConfig::default()
        };
        let outcome = evolve(&ctx, &config).unwrap();
        assert_eq!(outcome.log.len(), 10);
        for stat in &outcome.log {
            assert!(stat.archive_size >= 1);
            assert!(stat.hypervolume >= 0.0);
            assert_eq!(stat.best.len(), 2);
        }
        let csv = run_log_csv(&outcome.log);
        assert!(csv.starts_with("generation,archive_size,best_f1,best_f2,hypervolume\n"));
        assert_eq!(csv.lines().count(), 11);
    }
}
