//! Board representation: a chromosome is a permutation of 1..=N where
//! `genes[i]` is the row of the queen in column `i + 1` (both 1-based).
//!
//! The permutation property structurally rules out row and column conflicts,
//! so only diagonal conflicts remain to be scored.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// Largest board `render_board` will draw by default.
pub const DEFAULT_RENDER_CAP: usize = 200;

/// One candidate board arrangement, encoded as a permutation of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chromosome {
    genes: Vec<u32>,
}

/// Returns true iff `genes` is a permutation of `1..=genes.len()`.
///
/// Total over arbitrary integer sequences; the empty sequence counts as the
/// (unique) permutation of the empty range.
pub fn validate_permutation(genes: &[u32]) -> bool {
    let n = genes.len();
    let mut seen = vec![false; n];
    for &g in genes {
        if g < 1 || g as usize > n || seen[g as usize - 1] {
            return false;
        }
        seen[g as usize - 1] = true;
    }
    true
}

impl Chromosome {
    /// Builds a chromosome, rejecting empty or non-permutation input.
    pub fn try_new(genes: Vec<u32>) -> Result<Self> {
        if genes.is_empty() {
            return Err(Error::EmptyChromosome);
        }
        if !validate_permutation(&genes) {
            let n = genes.len();
            let mut counts = vec![0usize; n];
            for &g in &genes {
                if g >= 1 && g as usize <= n {
                    counts[g as usize - 1] += 1;
                }
            }
            let duplicated: Vec<u32> = genes
                .iter()
                .copied()
                .filter(|&g| g >= 1 && (g as usize) <= n && counts[g as usize - 1] > 1)
                .collect();
            let mut duplicated = duplicated;
            duplicated.sort_unstable();
            duplicated.dedup();
            let missing: Vec<u32> = (1..=n as u32)
                .filter(|&v| counts[v as usize - 1] == 0)
                .collect();
            return Err(Error::NotPermutation {
                n,
                duplicated,
                missing,
            });
        }
        Ok(Self { genes })
    }

    /// Builds from genes already known to be a permutation (operator outputs).
    pub(crate) fn from_genes_unchecked(genes: Vec<u32>) -> Self {
        debug_assert!(!genes.is_empty() && validate_permutation(&genes));
        Self { genes }
    }

    /// Uniform random permutation of 1..=n (Fisher-Yates via `shuffle`).
    pub fn random(n: usize, rng: &mut impl Rng) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyChromosome);
        }
        let mut genes: Vec<u32> = (1..=n as u32).collect();
        genes.shuffle(rng);
        Ok(Self { genes })
    }

    /// Board size.
    pub fn n(&self) -> usize {
        self.genes.len()
    }

    pub fn genes(&self) -> &[u32] {
        &self.genes
    }

    /// Row of the queen in the given 1-based column.
    pub fn row(&self, column: usize) -> u32 {
        self.genes[column - 1]
    }

    /// Exchanges the genes at 1-based positions `i` and `j`.
    pub(crate) fn swap_genes(&mut self, i: usize, j: usize) {
        self.genes.swap(i - 1, j - 1);
    }
}

/// Parses tuple text: comma-separated integers, optional surrounding
/// parentheses and whitespace. `N` is inferred from the element count.
pub fn parse_tuple(text: &str) -> Result<Chromosome> {
    let trimmed = text.trim();
    let trimmed = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(trimmed);
    if trimmed.trim().is_empty() {
        return Err(Error::EmptyTuple);
    }
    let mut genes = Vec::new();
    for (idx, token) in trimmed.split(',').enumerate() {
        let value: u32 = token.trim().parse().map_err(|_| Error::BadToken {
            position: idx + 1,
            token: token.trim().to_string(),
        })?;
        genes.push(value);
    }
    Chromosome::try_new(genes)
}

impl FromStr for Chromosome {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_tuple(s)
    }
}

/// Canonical tuple text: comma-separated, no spaces, no parentheses.
impl fmt::Display for Chromosome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.genes.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Renders the board as an N-line grid, top row = N down to row 1, so the
/// tuple (column -> row) reads the way a printed chessboard does. `Q` marks a
/// queen, `.` an empty square.
pub fn render_board(chrom: &Chromosome, cap: usize) -> Result<String> {
    let n = chrom.n();
    if n > cap {
        return Err(Error::RenderCapExceeded { n, cap });
    }
    let mut out = String::with_capacity(n * (2 * n + 1));
    for row in (1..=n as u32).rev() {
        for col in 1..=n {
            if col > 1 {
                out.push(' ');
            }
            out.push(if chrom.row(col) == row { 'Q' } else { '.' });
        }
        if row > 1 {
            out.push('\n');
        }
    }
    Ok(out)
}
