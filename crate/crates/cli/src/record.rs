//! Run records: the full per-run artifact plus the pinned CSV schema.

use std::fmt::Write as _;

use queens_ga::{GaConfig, SolveResult};
use serde::{Deserialize, Serialize};

/// One run's outcome together with the parameter set that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub n: usize,
    pub seed: u64,
    pub best_fitness: u32,
    pub generations_run: u64,
    pub fitness_evaluations: u64,
    pub wall_time_ms: u64,
    pub terminated_by: String,
    pub solution: String,
    pub pop_size: usize,
    pub max_generations: u64,
    /// 0 means the stagnation check was disabled.
    pub stagnation_window: u64,
    pub crossover_prob: f64,
    pub mutation_prob: f64,
    pub double_mutation_prob: f64,
    pub elitism: usize,
}

impl ResultRecord {
    pub fn new(config: &GaConfig, result: &SolveResult) -> Self {
        Self {
            n: config.n,
            seed: config.seed,
            best_fitness: result.best_fitness.value(),
            generations_run: result.generations_run,
            fitness_evaluations: result.fitness_evaluations,
            wall_time_ms: result.wall_time_ms,
            terminated_by: result.terminated_by.to_string(),
            solution: result.best.to_string(),
            pop_size: config.population_size,
            max_generations: config.max_generations,
            stagnation_window: config.stagnation_window.unwrap_or(0),
            crossover_prob: config.operator_params.crossover_prob,
            mutation_prob: config.operator_params.mutation_prob,
            double_mutation_prob: config.operator_params.double_mutation_prob,
            elitism: config.elitism_count,
        }
    }

    /// Key-value lines, one field per line, in record order.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "n: {}", self.n);
        let _ = writeln!(s, "seed: {}", self.seed);
        let _ = writeln!(s, "best_fitness: {}", self.best_fitness);
        let _ = writeln!(s, "generations_run: {}", self.generations_run);
        let _ = writeln!(s, "fitness_evaluations: {}", self.fitness_evaluations);
        let _ = writeln!(s, "wall_time_ms: {}", self.wall_time_ms);
        let _ = writeln!(s, "terminated_by: {}", self.terminated_by);
        let _ = writeln!(s, "solution: {}", self.solution);
        let _ = writeln!(s, "pop_size: {}", self.pop_size);
        let _ = writeln!(s, "max_generations: {}", self.max_generations);
        let _ = writeln!(s, "stagnation_window: {}", self.stagnation_window);
        let _ = writeln!(s, "crossover_prob: {}", self.crossover_prob);
        let _ = writeln!(s, "mutation_prob: {}", self.mutation_prob);
        let _ = writeln!(s, "double_mutation_prob: {}", self.double_mutation_prob);
        let _ = writeln!(s, "elitism: {}", self.elitism);
        s
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

/// The pinned CSV schema: these eight columns, in this order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CsvRecord {
    pub n: usize,
    pub seed: u64,
    pub best_fitness: u32,
    pub generations_run: u64,
    pub fitness_evaluations: u64,
    pub wall_time_ms: u64,
    pub terminated_by: String,
    pub solution: String,
}

impl From<&ResultRecord> for CsvRecord {
    fn from(r: &ResultRecord) -> Self {
        Self {
            n: r.n,
            seed: r.seed,
            best_fitness: r.best_fitness,
            generations_run: r.generations_run,
            fitness_evaluations: r.fitness_evaluations,
            wall_time_ms: r.wall_time_ms,
            terminated_by: r.terminated_by.clone(),
            solution: r.solution.clone(),
        }
    }
}
