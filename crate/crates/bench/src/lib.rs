//! Shared inputs for the criterion benchmarks.

use shiftchain_core::{construct_non_polychromatic, random_shift_chain, Limits, ShiftChain};

/// The recursive construction at uniformity `m`.
pub fn construction(m: usize) -> ShiftChain {
    construct_non_polychromatic(m, &Limits::default())
        .expect("benchmark sizes are within limits")
        .0
}

/// A fixed random chain with the maximum number of edges.
pub fn dense_random_chain(n: usize, m: usize, seed: u64) -> ShiftChain {
    let target = m * (n - m) + 1;
    random_shift_chain(n, m, target, seed).expect("valid benchmark parameters")
}
