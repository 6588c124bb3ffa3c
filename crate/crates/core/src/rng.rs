//! Deterministic 64-bit pseudo-random generator.
//!
//! Every randomized piece of this crate (tree sampling, random graph and
//! weight generation) draws from [`SplitMix64`] so that a (seed, call
//! sequence) pair reproduces bit-identical results on any platform and in
//! any port of this library. The generator is fully specified here:
//!
//! * state update: `state = state + 0x9E3779B97F4A7C15 (mod 2^64)`
//! * output: `z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
//!   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)`
//!   with all multiplications mod 2^64.
//!
//! Bounded draws use rejection sampling (below), so they are unbiased and
//! reproducible as long as ports consume the stream in the same order.

use num_bigint::BigUint;
use num_traits::Zero;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// splitmix64 generator state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    /// Seeds the generator. The first output is the mix of `seed + gamma`.
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Derives the generator for an independent stream: stream `index` of
    /// seed `s` is `SplitMix64::new(first output of SplitMix64::new(s + index))`,
    /// with the addition mod 2^64.
    pub fn stream(seed: u64, index: u64) -> Self {
        let mut root = SplitMix64::new(seed.wrapping_add(index));
        SplitMix64::new(root.next_u64())
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in `[0, bound)` by rejection: draws `x = next_u64()`
    /// until `x < bound * floor(2^64 / bound)`, then returns `x mod bound`.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "bound must be positive");
        // Largest multiple of `bound` representable in the draw range.
        let zone = bound.wrapping_mul(u64::MAX / bound);
        loop {
            let x = self.next_u64();
            if zone == 0 || x < zone {
                return x % bound;
            }
        }
    }

    /// Uniform draw in `[lo, hi]` inclusive.
    pub fn next_in_range(&mut self, lo: u64, hi: u64) -> u64 {
        assert!(lo <= hi, "empty range");
        lo + self.next_below(hi - lo + 1)
    }

    /// Uniform draw in `[0, bound)` for an arbitrary-precision bound:
    /// repeatedly draws `ceil(bits/64)` words little-endian, masks the top
    /// word down to `bits = bit length of bound`, and accepts the first
    /// value below the bound.
    pub fn next_biguint_below(&mut self, bound: &BigUint) -> BigUint {
        assert!(!bound.is_zero(), "bound must be positive");
        let bits = bound.bits();
        let words = bits.div_ceil(64) as usize;
        let top_bits = bits - 64 * (words as u64 - 1);
        let mask = if top_bits == 64 {
            u64::MAX
        } else {
            (1u64 << top_bits) - 1
        };
        loop {
            let mut digits = Vec::with_capacity(words);
            for _ in 0..words {
                digits.push(self.next_u64());
            }
            *digits.last_mut().expect("words >= 1") &= mask;
            let candidate = BigUint::from_slice_u64(&digits);
            if &candidate < bound {
                return candidate;
            }
        }
    }
}

// num-bigint exposes u32 digits; assemble u64 words pairwise.
trait FromU64Slice {
    fn from_slice_u64(digits: &[u64]) -> BigUint;
}

impl FromU64Slice for BigUint {
    fn from_slice_u64(digits: &[u64]) -> BigUint {
        let mut u32_digits = Vec::with_capacity(digits.len() * 2);
        for d in digits {
            u32_digits.push(*d as u32);
            u32_digits.push((*d >> 32) as u32);
        }
        BigUint::from_slice(&u32_digits)
    }
}
