//! Seeded corpus sampling for randomized test suites.
//!
//! Everything here is deterministic for a given seed, so property suites
//! are reproducible run to run.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::domain::Domain;
use crate::order::{AltId, AlternativeSet, LinearOrder};

/// Fixed default seed used by the randomized suites.
pub const DEFAULT_SEED: u64 = 0xC0DE_2024;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random linear order on `0..n-1`.
pub fn random_order(n: usize, rng: &mut ChaCha8Rng) -> LinearOrder {
    let mut ranking: Vec<AltId> = (0..n).map(|i| i as AltId).collect();
    ranking.shuffle(rng);
    LinearOrder::new(ranking).expect("shuffled identity is a permutation")
}

/// A random domain of at most `size` distinct orders.
pub fn random_domain(alts: &AlternativeSet, size: usize, rng: &mut ChaCha8Rng) -> Domain {
    let orders: Vec<LinearOrder> = (0..size).map(|_| random_order(alts.len(), rng)).collect();
    Domain::new(alts.clone(), orders).expect("orders over the given set")
}

/// A random Condorcet domain grown greedily: starting from one random
/// order, candidate orders are admitted while the domain stays Condorcet.
/// Stops at `target` orders or after `attempts` rejected candidates.
pub fn random_condorcet_domain(
    alts: &AlternativeSet,
    target: usize,
    attempts: usize,
    rng: &mut ChaCha8Rng,
) -> Domain {
    let mut domain = Domain::new(alts.clone(), vec![random_order(alts.len(), rng)])
        .expect("singleton domain");
    let mut rejected = 0;
    while domain.len() < target && rejected < attempts {
        let candidate = random_order(alts.len(), rng);
        if domain.contains(&candidate) {
            rejected += 1;
            continue;
        }
        let grown = domain
            .with_order(candidate)
            .expect("candidate over the same set");
        if grown.is_condorcet() {
            domain = grown;
        } else {
            rejected += 1;
        }
    }
    domain
}

/// Seed for the randomized suites: `CONDORCET_TEST_SEED` when set, else
/// [`DEFAULT_SEED`].
pub fn suite_seed() -> u64 {
    std::env::var("CONDORCET_TEST_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

/// Convenience: a random size in `1..=max`.
pub fn random_size(max: usize, rng: &mut ChaCha8Rng) -> usize {
    rng.gen_range(1..=max)
}
