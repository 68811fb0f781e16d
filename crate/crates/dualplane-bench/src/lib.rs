//! Shared input generation for the pipeline benchmarks.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

/// A reproducible pseudorandom message of `len` bytes.
pub fn sample_message(len: usize, seed: u64) -> Vec<u8> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut out = vec![0u8; len];
    rng.fill_bytes(&mut out);
    out
}
