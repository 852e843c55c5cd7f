//! Deterministic workloads shared by the criterion benches.

use gotas_core::oracle::random_space;
use gotas_core::Gotas;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A reproducible random space on `n` points.
pub fn seeded_space(n: usize, seed: u64) -> Gotas {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_space(&mut rng, n)
}
