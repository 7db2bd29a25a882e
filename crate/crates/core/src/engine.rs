//! The evolutionary loop: population lifecycle, weak-chromosome repository
//! infusion, termination, and run telemetry.
//!
//! One run is sequential and driven by a single seeded random stream with a
//! fixed consumption order (init, then per generation: selection, cuts,
//! mutation gates, infusion draws), so identical configs reproduce identical
//! results.

use std::fmt;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chromosome::Chromosome;
use crate::error::{Error, Result};
use crate::fitness::{FitnessValue, Individual};
use crate::operators::{
    apply_mutation_policy, crossover_pair, distinct_positions, gate, order1_crossover, rank_select,
    CutPair, OperatorParams,
};

/// All tunable parameters for one solver run.
#[derive(Debug, Clone, PartialEq)]
pub struct GaConfig {
    /// Board size.
    pub n: usize,
    pub population_size: usize,
    pub max_generations: u64,
    /// Terminate after this many generations without a strict best-fitness
    /// improvement; `None` disables the check.
    pub stagnation_window: Option<u64>,
    pub operator_params: OperatorParams,
    pub seed: u64,
    /// Number of best members guaranteed to survive each generation unchanged.
    pub elitism_count: usize,
}

impl GaConfig {
    /// Defaults: population 1000, 5000 generations, stagnation window 500,
    /// crossover 0.9, mutation 0.8, double mutation 0.4, elitism 1, seed 0.
    pub fn new(n: usize) -> Self {
        Self {
            n,
            population_size: 1000,
            max_generations: 5000,
            stagnation_window: Some(500),
            operator_params: OperatorParams::default(),
            seed: 0,
            elitism_count: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Config("board size n must be at least 1".into()));
        }
        let min_pop = if self.n == 1 { 1 } else { 2 };
        if self.population_size < min_pop {
            return Err(Error::Config(format!(
                "population_size must be at least {min_pop} for n = {}",
                self.n
            )));
        }
        if self.elitism_count >= self.population_size {
            return Err(Error::Config(format!(
                "elitism_count {} must be smaller than population_size {}",
                self.elitism_count, self.population_size
            )));
        }
        if self.max_generations == 0 {
            return Err(Error::Config("max_generations must be at least 1".into()));
        }
        if self.stagnation_window == Some(0) {
            return Err(Error::Config(
                "stagnation_window must be at least 1 (or disabled)".into(),
            ));
        }
        if repository_size(self.n) > self.population_size {
            return Err(Error::Config(format!(
                "repository size {} exceeds population_size {}",
                repository_size(self.n),
                self.population_size
            )));
        }
        self.operator_params.validate()
    }
}

/// Repository capacity for a board of size n: floor(sqrt(n)).
pub fn repository_size(n: usize) -> usize {
    n.isqrt()
}

/// Evaluated members kept sorted by ascending fitness with stable tie order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Population {
    members: Vec<Individual>,
}

impl Population {
    pub fn from_unsorted(mut members: Vec<Individual>) -> Self {
        members.sort_by_key(|ind| ind.fitness);
        Self { members }
    }

    pub fn members(&self) -> &[Individual] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn best(&self) -> &Individual {
        &self.members[0]
    }

    pub fn worst(&self) -> &Individual {
        &self.members[self.members.len() - 1]
    }

    /// Lets a candidate compete: it replaces the current worst member iff its
    /// fitness is strictly better. Ties never replace. Returns whether the
    /// candidate entered.
    pub fn replace_worst_if_better(&mut self, candidate: Individual) -> bool {
        if candidate.fitness >= self.worst().fitness {
            return false;
        }
        self.members.pop();
        let pos = self
            .members
            .partition_point(|m| m.fitness <= candidate.fitness);
        self.members.insert(pos, candidate);
        true
    }
}

/// Frozen pool of weak chromosomes used for diversity infusion. Holds the
/// floor(sqrt(n)) worst members of the initial population; contents never
/// change for the whole run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Repository {
    members: Vec<Chromosome>,
}

impl Repository {
    pub fn members(&self) -> &[Chromosome] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Why a run stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TerminationCause {
    /// Best fitness reached 0.
    Solved,
    /// The generation budget ran out.
    GenerationBudget,
    /// No strict best-fitness improvement inside the stagnation window.
    Stagnation,
}

impl fmt::Display for TerminationCause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TerminationCause::Solved => f.write_str("solved"),
            TerminationCause::GenerationBudget => f.write_str("generation_budget"),
            TerminationCause::Stagnation => f.write_str("stagnation"),
        }
    }
}

/// Outcome of a termination check after a generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TerminationCheck {
    Continue,
    Terminate(TerminationCause),
}

/// Telemetry for one completed run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub best: Chromosome,
    pub best_fitness: FitnessValue,
    pub generations_run: u64,
    pub fitness_evaluations: u64,
    pub wall_time_ms: u64,
    pub terminated_by: TerminationCause,
}

/// Builds the initial population: `population_size` independent uniform
/// random permutations, evaluated and sorted ascending by fitness.
pub fn init_population(config: &GaConfig, rng: &mut impl Rng) -> Result<Population> {
    config.validate()?;
    let members = (0..config.population_size)
        .map(|_| Chromosome::random(config.n, rng).map(Individual::evaluate))
        .collect::<Result<Vec<_>>>()?;
    Ok(Population::from_unsorted(members))
}

/// Copies the floor(sqrt(n)) worst members of the initial population into the
/// frozen repository.
pub fn init_repository(config: &GaConfig, population: &Population) -> Result<Repository> {
    let size = repository_size(config.n);
    if size > population.len() {
        return Err(Error::Config(format!(
            "repository size {size} exceeds population size {}",
            population.len()
        )));
    }
    let members = population.members()[population.len() - size..]
        .iter()
        .map(|ind| ind.chromosome.clone())
        .collect();
    Ok(Repository { members })
}

/// Infusion mechanism 1: two distinct repository chromosomes are crossed,
/// both offspring mutated, and each competes against the current worst
/// population member. A repository smaller than 2 makes this a no-op.
/// Returns the number of fitness evaluations performed.
pub fn repository_infusion_pair(
    repo: &Repository,
    population: &mut Population,
    params: &OperatorParams,
    rng: &mut impl Rng,
) -> Result<u64> {
    if repo.len() < 2 {
        return Ok(0);
    }
    if population.is_empty() {
        return Err(Error::EmptyPopulation);
    }
    let (i, j) = distinct_positions(repo.len(), rng);
    let a = &repo.members()[i - 1];
    let b = &repo.members()[j - 1];
    let cuts_ab = CutPair::random(a.n(), rng);
    let cuts_ba = CutPair::random(a.n(), rng);
    let (c1, c2) = crossover_pair(a, b, cuts_ab, cuts_ba)?;
    let c1 = apply_mutation_policy(&c1, params, rng);
    let c2 = apply_mutation_policy(&c2, params, rng);
    population.replace_worst_if_better(Individual::evaluate(c1));
    population.replace_worst_if_better(Individual::evaluate(c2));
    Ok(2)
}

/// Infusion mechanism 2: one random repository chromosome is crossed with one
/// random population member (repository side as parent-1) and the single
/// offspring competes for a place. No mutation on this path.
/// Returns the number of fitness evaluations performed.
pub fn repository_infusion_single(
    repo: &Repository,
    population: &mut Population,
    _params: &OperatorParams,
    rng: &mut impl Rng,
) -> Result<u64> {
    if repo.is_empty() {
        return Err(Error::Config("repository is empty".into()));
    }
    if population.is_empty() {
        return Err(Error::EmptyPopulation);
    }
    let r = rng.gen_range(0..repo.len());
    let p = rng.gen_range(0..population.len());
    let repo_parent = &repo.members()[r];
    let cuts = CutPair::random(repo_parent.n(), rng);
    let child = order1_crossover(repo_parent, &population.members()[p].chromosome, cuts)?;
    population.replace_worst_if_better(Individual::evaluate(child));
    Ok(1)
}

/// Advances the population by one generation:
/// parents are rank-selected, pairs crossed with probability
/// `crossover_prob` (copied otherwise), every child mutated and evaluated,
/// children and parents pooled with the best `population_size` surviving
/// (elites guaranteed), then both repository infusions run once.
/// Returns the number of fitness evaluations performed.
pub fn evolve_generation(
    population: &mut Population,
    repo: &Repository,
    config: &GaConfig,
    rng: &mut impl Rng,
) -> Result<u64> {
    let params = &config.operator_params;
    let pairs = config.population_size / 2;
    let mut children: Vec<Individual> = Vec::with_capacity(2 * pairs);

    let selected = rank_select(population.members(), 2 * pairs, rng)?;
    for pair in selected.chunks_exact(2) {
        let (p1, p2) = (pair[0], pair[1]);
        let (c1, c2) = if gate(params.crossover_prob, rng) {
            let cuts_ab = CutPair::random(config.n, rng);
            let cuts_ba = CutPair::random(config.n, rng);
            crossover_pair(p1, p2, cuts_ab, cuts_ba)?
        } else {
            (p1.clone(), p2.clone())
        };
        let c1 = apply_mutation_policy(&c1, params, rng);
        let c2 = apply_mutation_policy(&c2, params, rng);
        children.push(Individual::evaluate(c1));
        children.push(Individual::evaluate(c2));
    }
    let mut evals = children.len() as u64;

    install_survivors(population, children, config.elitism_count);

    evals += repository_infusion_pair(repo, population, params, rng)?;
    evals += repository_infusion_single(repo, population, params, rng)?;
    Ok(evals)
}

/// Pooled (mu + lambda) survivor selection. Elites pass through untouched;
/// the remaining slots go to the best of children and non-elite parents,
/// with children listed first so equal-fitness offspring can displace
/// parents (neutral drift across plateaus).
fn install_survivors(population: &mut Population, children: Vec<Individual>, elitism: usize) {
    let target = population.len();
    let parents = std::mem::take(&mut population.members);
    let mut iter = parents.into_iter();
    let elites: Vec<Individual> = iter.by_ref().take(elitism).collect();
    let mut pool = children;
    pool.extend(iter);
    pool.sort_by_key(|ind| ind.fitness);
    pool.truncate(target - elites.len());
    let mut survivors = elites;
    survivors.extend(pool);
    survivors.sort_by_key(|ind| ind.fitness);
    population.members = survivors;
}

/// Decides whether the run stops after `generation` generations given the
/// per-generation best-fitness trace (entry 0 is the initial population).
/// Precedence: solved, then generation budget, then stagnation.
pub fn check_termination(
    best_trace: &[FitnessValue],
    generation: u64,
    config: &GaConfig,
) -> TerminationCheck {
    let last = *best_trace.last().expect("trace is never empty");
    if last.is_solution() {
        return TerminationCheck::Terminate(TerminationCause::Solved);
    }
    if generation >= config.max_generations {
        return TerminationCheck::Terminate(TerminationCause::GenerationBudget);
    }
    if let Some(window) = config.stagnation_window {
        let w = window as usize;
        if best_trace.len() > w && best_trace[best_trace.len() - 1 - w] == last {
            return TerminationCheck::Terminate(TerminationCause::Stagnation);
        }
    }
    TerminationCheck::Continue
}

/// Runs the full loop: init, repository seeding, then generations until a
/// termination condition fires. The best fitness trace is non-increasing, so
/// the final best member is the best ever seen.
pub fn run(config: &GaConfig) -> Result<SolveResult> {
    config.validate()?;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut population = init_population(config, &mut rng)?;
    let mut evals = population.len() as u64;
    let repository = init_repository(config, &population)?;

    let mut trace = vec![population.best().fitness];
    let mut generation = 0u64;
    let cause = loop {
        if let TerminationCheck::Terminate(cause) = check_termination(&trace, generation, config) {
            break cause;
        }
        evals += evolve_generation(&mut population, &repository, config, &mut rng)?;
        generation += 1;
        trace.push(population.best().fitness);
    };

    let best = population.best().clone();
    Ok(SolveResult {
        best: best.chromosome,
        best_fitness: best.fitness,
        generations_run: generation,
        fitness_evaluations: evals,
        wall_time_ms: start.elapsed().as_millis() as u64,
        terminated_by: cause,
    })
}
