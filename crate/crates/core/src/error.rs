//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by chromosome construction, parsing, operators, and the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A chromosome must hold at least one gene.
    #[error("chromosome must contain at least one gene")]
    EmptyChromosome,

    /// The gene sequence is not a permutation of 1..=n.
    #[error("not a permutation of 1..={n}: duplicated {duplicated:?}, missing {missing:?}")]
    NotPermutation {
        n: usize,
        duplicated: Vec<u32>,
        missing: Vec<u32>,
    },

    /// A tuple token failed to parse as an integer. Positions are 1-based.
    #[error("token {position} ({token:?}) is not a valid gene value")]
    BadToken { position: usize, token: String },

    /// The tuple text contained no tokens at all.
    #[error("empty tuple text")]
    EmptyTuple,

    /// Board too large to render as text.
    #[error("board size {n} exceeds render cap {cap}")]
    RenderCapExceeded { n: usize, cap: usize },

    /// Crossover parents must have the same length.
    #[error("parents have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    /// Cut points must satisfy 1 <= lo <= hi <= n.
    #[error("cut points ({lo}, {hi}) invalid for board size {n}")]
    InvalidCuts { lo: usize, hi: usize, n: usize },

    /// Swap positions must be distinct and within 1..=n.
    #[error(
        "swap positions ({i}, {j}) invalid for board size {n}: need distinct positions in 1..={n}"
    )]
    InvalidSwap { i: usize, j: usize, n: usize },

    /// Selection requires a non-empty population.
    #[error("population is empty")]
    EmptyPopulation,

    /// Cannot select more parents than the population holds.
    #[error("selection count {count} exceeds population size {size}")]
    SelectionCountTooLarge { count: usize, size: usize },

    /// A solver configuration field is out of range.
    #[error("invalid config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
