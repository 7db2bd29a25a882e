//! Genetic-algorithm N-Queens solver on a permutation encoding.
//!
//! A chromosome assigns one queen per column via a permutation of row
//! indices, so row and column conflicts are impossible by construction and
//! fitness only counts diagonal crowding: each diagonal with k queens
//! contributes k - 1, summed over both diagonal directions. Fitness 0 is a
//! valid placement.
//!
//! The solver evolves a population with rank-based selection, order-1
//! crossover, swap mutation, and elitism, plus a frozen "repository" of the
//! worst initial chromosomes that is crossed back into the population each
//! generation to keep diversity up. Runs are deterministic for a given
//! config and seed.
//!
//! ```
//! use queens_ga::{run, GaConfig};
//!
//! let mut config = GaConfig::new(8);
//! config.population_size = 100;
//! config.seed = 1;
//! let result = run(&config).unwrap();
//! assert_eq!(result.best_fitness.value(), 0);
//! ```

mod chromosome;
mod error;
mod fitness;

pub mod engine;
pub mod operators;

pub use chromosome::{
    parse_tuple, render_board, validate_permutation, Chromosome, DEFAULT_RENDER_CAP,
};
pub use engine::{
    check_termination, evolve_generation, init_population, init_repository,
    repository_infusion_pair, repository_infusion_single, repository_size, run, GaConfig,
    Population, Repository, SolveResult, TerminationCause, TerminationCheck,
};
pub use error::{Error, Result};
pub use fitness::{
    fitness, pairwise_attack_count, ConflictReport, DiagonalId, Direction, FitnessValue, Individual,
};
pub use operators::{
    apply_mutation_policy, crossover_pair, order1_crossover, rank_select, swap_mutation, CutPair,
    OperatorParams,
};
