//! Genetic operators over permutation chromosomes: order-1 crossover,
//! swap mutation, the single/double mutation policy, and rank-based
//! parent selection.

use rand::Rng;

use crate::chromosome::Chromosome;
use crate::error::{Error, Result};
use crate::fitness::Individual;

/// Inclusive 1-based cut segment `[lo, hi]` for order-1 crossover.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutPair {
    lo: usize,
    hi: usize,
}

impl CutPair {
    /// Requires `1 <= lo <= hi`; the upper bound against the board size is
    /// checked where the cuts are applied.
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo < 1 || lo > hi {
            return Err(Error::InvalidCuts { lo, hi, n: hi });
        }
        Ok(Self { lo, hi })
    }

    /// Two distinct positions drawn uniformly from 1..=n, then ordered.
    /// For n == 1 the only possible segment (1, 1) is returned without
    /// consuming randomness.
    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        if n < 2 {
            return Self { lo: 1, hi: 1 };
        }
        let (a, b) = distinct_positions(n, rng);
        Self {
            lo: a.min(b),
            hi: a.max(b),
        }
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }
}

/// Probabilities steering crossover and the two mutation gates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorParams {
    pub crossover_prob: f64,
    pub mutation_prob: f64,
    pub double_mutation_prob: f64,
}

impl Default for OperatorParams {
    fn default() -> Self {
        Self {
            crossover_prob: 0.9,
            mutation_prob: 0.8,
            double_mutation_prob: 0.4,
        }
    }
}

impl OperatorParams {
    pub fn validate(&self) -> Result<()> {
        for (name, p) in [
            ("crossover_prob", self.crossover_prob),
            ("mutation_prob", self.mutation_prob),
            ("double_mutation_prob", self.double_mutation_prob),
        ] {
            if !(0.0..=1.0).contains(&p) || p.is_nan() {
                return Err(Error::Config(format!("{name} must be in [0, 1], got {p}")));
            }
        }
        Ok(())
    }
}

/// Two distinct 1-based positions drawn uniformly from 1..=n. Requires n >= 2.
pub(crate) fn distinct_positions(n: usize, rng: &mut impl Rng) -> (usize, usize) {
    debug_assert!(n >= 2);
    let i = rng.gen_range(1..=n);
    let mut j = rng.gen_range(1..=n - 1);
    if j >= i {
        j += 1;
    }
    (i, j)
}

/// Gate convention: draw u in [0, 1), fire iff u < p. p = 0 never fires,
/// p = 1 always fires.
pub(crate) fn gate(p: f64, rng: &mut impl Rng) -> bool {
    rng.gen::<f64>() < p
}

/// Order-1 crossover: the child copies `parent1[lo..=hi]` verbatim; the
/// remaining positions, scanned left to right, take the values of `parent2`
/// in `parent2`'s order, skipping values already present in the segment.
pub fn order1_crossover(
    parent1: &Chromosome,
    parent2: &Chromosome,
    cuts: CutPair,
) -> Result<Chromosome> {
    let n = parent1.n();
    if n != parent2.n() {
        return Err(Error::LengthMismatch {
            left: n,
            right: parent2.n(),
        });
    }
    if cuts.hi > n {
        return Err(Error::InvalidCuts {
            lo: cuts.lo,
            hi: cuts.hi,
            n,
        });
    }
    let (lo, hi) = (cuts.lo - 1, cuts.hi - 1); // 0-based inclusive
    let mut in_segment = vec![false; n + 1];
    for &g in &parent1.genes()[lo..=hi] {
        in_segment[g as usize] = true;
    }
    let mut fill = parent2
        .genes()
        .iter()
        .copied()
        .filter(|&g| !in_segment[g as usize]);
    let mut child = vec![0u32; n];
    child[lo..=hi].copy_from_slice(&parent1.genes()[lo..=hi]);
    for pos in (0..lo).chain(hi + 1..n) {
        child[pos] = fill.next().expect("fill values exactly cover the gaps");
    }
    Ok(Chromosome::from_genes_unchecked(child))
}

/// Produces both children of a parent pair: the first with `a` as parent-1
/// and `b` as parent-2, the second with the roles reversed. Each child uses
/// its own cut pair.
pub fn crossover_pair(
    a: &Chromosome,
    b: &Chromosome,
    cuts_ab: CutPair,
    cuts_ba: CutPair,
) -> Result<(Chromosome, Chromosome)> {
    Ok((
        order1_crossover(a, b, cuts_ab)?,
        order1_crossover(b, a, cuts_ba)?,
    ))
}

/// Exchanges the alleles at two distinct 1-based positions.
pub fn swap_mutation(chrom: &Chromosome, i: usize, j: usize) -> Result<Chromosome> {
    let n = chrom.n();
    if i == j || i < 1 || j < 1 || i > n || j > n {
        return Err(Error::InvalidSwap { i, j, n });
    }
    let mut out = chrom.clone();
    out.swap_genes(i, j);
    Ok(out)
}

/// Mutation policy: with probability `mutation_prob` apply one swap at random
/// distinct positions; independently, with probability `double_mutation_prob`,
/// apply a second swap at fresh positions. Boards of size 1 pass through
/// unchanged (no distinct positions exist).
pub fn apply_mutation_policy(
    chrom: &Chromosome,
    params: &OperatorParams,
    rng: &mut impl Rng,
) -> Chromosome {
    let n = chrom.n();
    if n < 2 {
        return chrom.clone();
    }
    let mut out = chrom.clone();
    if gate(params.mutation_prob, rng) {
        let (i, j) = distinct_positions(n, rng);
        out.swap_genes(i, j);
    }
    if gate(params.double_mutation_prob, rng) {
        let (i, j) = distinct_positions(n, rng);
        out.swap_genes(i, j);
    }
    out
}

/// Rank-based truncation selection: the population is ranked by ascending
/// fitness (ties keep their original order), and `count` parents are drawn
/// uniformly with replacement from the best half (rounded up).
pub fn rank_select<'a>(
    population: &'a [Individual],
    count: usize,
    rng: &mut impl Rng,
) -> Result<Vec<&'a Chromosome>> {
    if population.is_empty() {
        return Err(Error::EmptyPopulation);
    }
    if count > population.len() {
        return Err(Error::SelectionCountTooLarge {
            count,
            size: population.len(),
        });
    }
    let mut ranked: Vec<usize> = (0..population.len()).collect();
    ranked.sort_by_key(|&i| population[i].fitness); // stable: ties keep order
    let top = ranked.len().div_ceil(2);
    let mut selected = Vec::with_capacity(count);
    for _ in 0..count {
        let pick = ranked[rng.gen_range(0..top)];
        selected.push(&population[pick].chromosome);
    }
    Ok(selected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fitness::FitnessValue;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn chrom(genes: &[u32]) -> Chromosome {
        Chromosome::try_new(genes.to_vec()).unwrap()
    }

    #[test]
    fn order1_reproduces_published_child() {
        let p1 = chrom(&[5, 2, 3, 1, 6, 4, 8, 7]);
        let p2 = chrom(&[4, 8, 6, 1, 7, 5, 3, 2]);
        let child = order1_crossover(&p1, &p2, CutPair::new(3, 6).unwrap()).unwrap();
        assert_eq!(child.genes(), &[8, 7, 3, 1, 6, 4, 5, 2]);
    }

    #[test]
    fn order1_identical_parents_is_identity() {
        let p = chrom(&[3, 1, 4, 2, 5]);
        for (lo, hi) in [(1, 1), (2, 4), (1, 5), (5, 5)] {
            let child = order1_crossover(&p, &p, CutPair::new(lo, hi).unwrap()).unwrap();
            assert_eq!(child, p);
        }
    }

    #[test]
    fn order1_hand_traced_fill() {
        let p1 = chrom(&[1, 2, 3, 4]);
        let p2 = chrom(&[4, 3, 2, 1]);
        let child = order1_crossover(&p1, &p2, CutPair::new(2, 3).unwrap()).unwrap();
        assert_eq!(child.genes(), &[4, 2, 3, 1]);
    }

    #[test]
    fn order1_rejects_bad_input() {
        let p1 = chrom(&[1, 2, 3]);
        let p2 = chrom(&[2, 1, 4, 3]);
        let cuts = CutPair::new(1, 2).unwrap();
        assert_eq!(
            order1_crossover(&p1, &p2, cuts).unwrap_err(),
            Error::LengthMismatch { left: 3, right: 4 }
        );
        let over = CutPair::new(2, 5).unwrap();
        assert!(matches!(
            order1_crossover(&p1, &chrom(&[3, 1, 2]), over).unwrap_err(),
            Error::InvalidCuts { .. }
        ));
        assert!(CutPair::new(3, 2).is_err());
        assert!(CutPair::new(0, 2).is_err());
    }

    #[test]
    fn pair_produces_both_directions() {
        let a = chrom(&[1, 2, 3, 4]);
        let b = chrom(&[4, 3, 2, 1]);
        let cuts = CutPair::new(2, 3).unwrap();
        let (c1, c2) = crossover_pair(&a, &b, cuts, cuts).unwrap();
        assert_eq!(c1.genes(), &[4, 2, 3, 1]);
        assert_eq!(c2.genes(), &[1, 3, 2, 4]);
    }

    #[test]
    fn swap_reproduces_published_mutation() {
        let before = chrom(&[2, 6, 8, 3, 4, 1, 7, 5]);
        let after = swap_mutation(&before, 3, 7).unwrap();
        assert_eq!(after.genes(), &[2, 6, 7, 3, 4, 1, 8, 5]);
    }

    #[test]
    fn swap_is_involution() {
        let p = chrom(&[3, 1, 2]);
        let once = swap_mutation(&p, 1, 3).unwrap();
        assert_eq!(once.genes(), &[2, 1, 3]);
        assert_eq!(swap_mutation(&once, 1, 3).unwrap(), p);
    }

    #[test]
    fn swap_rejects_equal_or_out_of_range() {
        let p = chrom(&[1, 2, 3]);
        assert!(matches!(
            swap_mutation(&p, 2, 2),
            Err(Error::InvalidSwap { .. })
        ));
        assert!(matches!(
            swap_mutation(&p, 0, 1),
            Err(Error::InvalidSwap { .. })
        ));
        assert!(matches!(
            swap_mutation(&p, 1, 4),
            Err(Error::InvalidSwap { .. })
        ));
    }

    #[test]
    fn mutation_policy_zero_probs_is_identity() {
        let params = OperatorParams {
            crossover_prob: 0.9,
            mutation_prob: 0.0,
            double_mutation_prob: 0.0,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let p = chrom(&[4, 1, 3, 2, 5]);
        for _ in 0..50 {
            assert_eq!(apply_mutation_policy(&p, &params, &mut rng), p);
        }
    }

    #[test]
    fn mutation_policy_forced_single_changes_two_positions() {
        let params = OperatorParams {
            crossover_prob: 0.9,
            mutation_prob: 1.0,
            double_mutation_prob: 0.0,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let p = chrom(&[4, 1, 3, 2, 5]);
        for _ in 0..100 {
            let out = apply_mutation_policy(&p, &params, &mut rng);
            let diffs = p
                .genes()
                .iter()
                .zip(out.genes())
                .filter(|(a, b)| a != b)
                .count();
            assert_eq!(diffs, 2);
        }
    }

    #[test]
    fn mutation_policy_double_changes_up_to_four_positions() {
        let params = OperatorParams {
            crossover_prob: 0.9,
            mutation_prob: 1.0,
            double_mutation_prob: 1.0,
        };
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let p = chrom(&[4, 1, 3, 2, 5, 6, 8, 7]);
        let mut observed = std::collections::BTreeSet::new();
        for _ in 0..2000 {
            let out = apply_mutation_policy(&p, &params, &mut rng);
            let diffs = p
                .genes()
                .iter()
                .zip(out.genes())
                .filter(|(a, b)| a != b)
                .count();
            observed.insert(diffs);
        }
        // Two transpositions compose to the identity (0 moved points), a
        // 3-cycle (3), or two disjoint transpositions (4); parity rules out 2.
        for d in &observed {
            assert!(matches!(d, 0 | 3 | 4), "unexpected diff count {d}");
        }
        assert!(observed.contains(&3) && observed.contains(&4));
    }

    #[test]
    fn mutation_policy_single_gene_board_is_noop() {
        let params = OperatorParams::default();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let p = chrom(&[1]);
        assert_eq!(apply_mutation_policy(&p, &params, &mut rng), p);
    }

    #[test]
    fn rank_select_draws_only_from_best_half() {
        let pop: Vec<Individual> = [3u32, 0, 2, 1]
            .iter()
            .map(|&f| Individual {
                chromosome: chrom(&[1, 2]),
                fitness: FitnessValue(f),
            })
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let picked = rank_select(&pop, 1, &mut rng).unwrap();
            let f = pop
                .iter()
                .find(|ind| std::ptr::eq(&ind.chromosome, picked[0]))
                .unwrap()
                .fitness;
            assert!(f.value() <= 1, "selected fitness {f} outside best half");
        }
    }

    #[test]
    fn rank_select_singleton_returns_it() {
        let pop = vec![Individual {
            chromosome: chrom(&[1]),
            fitness: FitnessValue(0),
        }];
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let picked = rank_select(&pop, 1, &mut rng).unwrap();
        assert_eq!(picked[0], &pop[0].chromosome);
    }

    #[test]
    fn rank_select_breaks_ties_by_original_order() {
        // Fitnesses [5,5,5,0]: the best half is the 0 and the first 5.
        let chroms = [
            chrom(&[1, 2, 3, 4]),
            chrom(&[2, 1, 3, 4]),
            chrom(&[3, 1, 2, 4]),
            chrom(&[4, 1, 2, 3]),
        ];
        let pop: Vec<Individual> = chroms
            .iter()
            .zip([5u32, 5, 5, 0])
            .map(|(c, f)| Individual {
                chromosome: c.clone(),
                fitness: FitnessValue(f),
            })
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let mut seen_zero = false;
        for _ in 0..200 {
            for picked in rank_select(&pop, 2, &mut rng).unwrap() {
                assert!(
                    picked == &chroms[3] || picked == &chroms[0],
                    "selection must come from {{fitness 0, first fitness 5}}"
                );
                seen_zero |= picked == &chroms[3];
            }
        }
        assert!(seen_zero);
    }

    #[test]
    fn rank_select_rejects_empty_and_oversized() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        assert_eq!(
            rank_select(&[], 1, &mut rng).unwrap_err(),
            Error::EmptyPopulation
        );
        let pop = vec![Individual {
            chromosome: chrom(&[1]),
            fitness: FitnessValue(0),
        }];
        assert!(matches!(
            rank_select(&pop, 2, &mut rng).unwrap_err(),
            Error::SelectionCountTooLarge { .. }
        ));
    }

    #[test]
    fn params_validation_bounds() {
        let mut p = OperatorParams::default();
        assert!(p.validate().is_ok());
        p.mutation_prob = 1.2;
        assert!(p.validate().is_err());
        p.mutation_prob = -0.1;
        assert!(p.validate().is_err());
    }
}
