//! Conflict scoring. A diagonal holding k queens contributes k-1 points,
//! summed over both diagonal directions; 0 means a solved board.
//!
//! [`pairwise_attack_count`] is a deliberately separate O(n^2) enumeration of
//! attacking pairs, kept as an independent cross-check of [`fitness`]. The two
//! agree on "conflict-free" but not on magnitude: three queens on one diagonal
//! score 2 fitness points but 3 attacking pairs.

use std::collections::BTreeMap;
use std::fmt;

use crate::chromosome::Chromosome;

/// Non-negative conflict score; `0` iff the arrangement is a solution.
/// Bounded above by `2 * (n - 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FitnessValue(pub u32);

impl FitnessValue {
    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_solution(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FitnessValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which family of diagonals a key belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    /// Diagonals of constant `row - column`.
    Main,
    /// Diagonals of constant `row + column`.
    Anti,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Main => f.write_str("main"),
            Direction::Anti => f.write_str("anti"),
        }
    }
}

/// A diagonal id: direction plus the signed key (`c - i` or `c + i`).
pub type DiagonalId = (Direction, i64);

/// Output of the pairwise oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictReport {
    /// Number of unordered queen pairs that attack each other.
    pub attacking_pairs: u64,
    /// Queen count for every occupied diagonal.
    pub per_diagonal_counts: BTreeMap<DiagonalId, u32>,
}

impl ConflictReport {
    /// Occupied diagonals holding two or more queens, i.e. actual conflicts.
    pub fn conflicting_diagonals(&self) -> impl Iterator<Item = (&DiagonalId, &u32)> {
        self.per_diagonal_counts.iter().filter(|(_, &k)| k >= 2)
    }
}

/// An evaluated chromosome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Individual {
    pub chromosome: Chromosome,
    pub fitness: FitnessValue,
}

impl Individual {
    pub fn evaluate(chromosome: Chromosome) -> Self {
        let fitness = fitness(&chromosome);
        Self {
            chromosome,
            fitness,
        }
    }
}

/// Conflict score of a board: for each diagonal direction, every diagonal
/// holding k queens adds `k - 1` points.
///
/// Rows and columns cannot conflict because the chromosome is a permutation.
pub fn fitness(chrom: &Chromosome) -> FitnessValue {
    let n = chrom.n();
    // Key ranges: c - i in [1-n, n-1], c + i in [2, 2n]; shift both to 0-based.
    let mut main_counts = vec![0u32; 2 * n - 1];
    let mut anti_counts = vec![0u32; 2 * n - 1];
    for (idx, &g) in chrom.genes().iter().enumerate() {
        let col = idx as i64 + 1;
        let row = g as i64;
        main_counts[(row - col + n as i64 - 1) as usize] += 1;
        anti_counts[(row + col - 2) as usize] += 1;
    }
    let score: u32 = main_counts
        .iter()
        .chain(anti_counts.iter())
        .map(|&k| k.saturating_sub(1))
        .sum();
    FitnessValue(score)
}

/// Independent conflict oracle: checks `(c_i - i) == (c_j - j)` and
/// `(c_i + i) == (c_j + j)` over all unordered pairs, and tallies the queen
/// count on every occupied diagonal.
pub fn pairwise_attack_count(chrom: &Chromosome) -> ConflictReport {
    let genes = chrom.genes();
    let n = genes.len();
    let mut attacking_pairs = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            let (ci, cj) = (genes[i] as i64, genes[j] as i64);
            let (pi, pj) = (i as i64 + 1, j as i64 + 1);
            if ci - pi == cj - pj || ci + pi == cj + pj {
                attacking_pairs += 1;
            }
        }
    }
    let mut per_diagonal_counts: BTreeMap<DiagonalId, u32> = BTreeMap::new();
    for (idx, &g) in genes.iter().enumerate() {
        let col = idx as i64 + 1;
        let row = g as i64;
        *per_diagonal_counts
            .entry((Direction::Main, row - col))
            .or_insert(0) += 1;
        *per_diagonal_counts
            .entry((Direction::Anti, row + col))
            .or_insert(0) += 1;
    }
    ConflictReport {
        attacking_pairs,
        per_diagonal_counts,
    }
}
