//! Seed derivation.
//!
//! Every random decision in the engine draws from a stream whose seed is
//! derived by folding identifying integers (timestamp, start node, walk
//! index, ...) into a base seed. Derived seeds are independent of worker
//! count and iteration order, which is what makes parallel walk generation
//! reproduce the sequential corpus bit for bit.

/// splitmix64 finalizer; full-period mixing of a 64-bit word.
fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Folds `parts` into `seed`, one splitmix64 round per part.
pub fn mix64(seed: u64, parts: &[u64]) -> u64 {
    let mut acc = splitmix64(seed);
    for &p in parts {
        acc = splitmix64(acc ^ p.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    }
    acc
}
