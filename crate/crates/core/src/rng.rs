//! Seeded random streams.
//!
//! Every randomized routine takes an explicit 64-bit seed. Independent pieces
//! of work (a restart, a sample, a graph row) draw from their own ChaCha
//! stream keyed by `(seed, stream index)`, so results do not depend on the
//! order or the thread in which the pieces run.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type StreamRng = ChaCha8Rng;

/// The random stream with index `stream` under `seed`.
pub fn stream(seed: u64, stream: u64) -> StreamRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Derives an unrelated seed from `(seed, domain)`; used to separate the
/// randomness of consecutive pipeline stages.
pub fn derive_seed(seed: u64, domain: u64) -> u64 {
    use rand::RngCore;
    stream(seed, domain.wrapping_add(1 << 63)).next_u64()
}
