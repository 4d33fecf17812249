//! Small exact combinatorial helpers shared across the crate.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::subset::Subset;

/// Exact binomial coefficient `C(n, k)`; zero for `k > n` or negative-style
/// out-of-range arguments expressed through `usize` wraparound avoidance.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C(n, k)` as `u64`, panicking on overflow. Convenient for loop bounds.
pub fn binomial_u64(n: usize, k: usize) -> u64 {
    u64::try_from(&binomial(n, k)).expect("binomial exceeds u64")
}

/// Iterate over all `k`-element subsets of `{0, ..., n-1}` in increasing
/// mask order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Subset> {
    assert!(n <= 64);
    let limit = Subset::full(n).mask();
    let mut cur = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let v = cur?;
        if v > limit {
            cur = None;
            return None;
        }
        // Advance to the next mask with the same popcount.
        cur = if v == 0 {
            None
        } else {
            let c = v & v.wrapping_neg();
            let r = v.wrapping_add(c);
            if r == 0 {
                None
            } else {
                Some((((r ^ v) >> 2) / c) | r)
            }
        };
        Some(Subset::from_mask(v))
    })
}

/// A tiny deterministic PRNG (SplitMix64). Used for randomized validation
/// sampling and for seeded test corpora; we want bit-for-bit reproducible
/// streams independent of external crates.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (`bound > 0`).
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        // Rejection sampling keeps the distribution exactly uniform.
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }
}
