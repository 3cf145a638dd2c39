//! Philox 4x64-10 counter-based generator.
//!
//! A keyed bijection on a 256-bit counter: every (key, counter) pair maps to
//! four statistically independent 64-bit words. Distinct keys give distinct,
//! non-overlapping output streams, which is what makes stream derivation a
//! pure function of the seed specification — no jump-ahead bookkeeping and
//! no shared mutable state.
//!
//! The block function matches the reference Random123 definition (and
//! therefore NumPy's `Philox` bit generator, which emits the block for
//! counter `c + 1` first when initialized with counter `c`).

use crate::math;

const MULTIPLIER_0: u64 = 0xD2E7470EE14C6C93;
const MULTIPLIER_1: u64 = 0xCA5A826395121157;
const KEY_WEYL_0: u64 = 0x9E3779B97F4A7C15;
const KEY_WEYL_1: u64 = 0xBB67AE8584CAA73B;
const ROUNDS: usize = 10;

#[inline]
fn mul_hi_lo(a: u64, b: u64) -> (u64, u64) {
    let wide = (a as u128) * (b as u128);
    ((wide >> 64) as u64, wide as u64)
}

#[inline]
fn round(counter: [u64; 4], key: [u64; 2]) -> [u64; 4] {
    let (hi0, lo0) = mul_hi_lo(MULTIPLIER_0, counter[0]);
    let (hi1, lo1) = mul_hi_lo(MULTIPLIER_1, counter[2]);
    [hi1 ^ counter[1] ^ key[0], lo1, hi0 ^ counter[3] ^ key[1], lo0]
}

/// One keyed block: 256 counter bits in, 256 output bits out.
pub fn block(counter: [u64; 4], key: [u64; 2]) -> [u64; 4] {
    let mut state = counter;
    let mut key = key;
    for r in 0..ROUNDS {
        state = round(state, key);
        if r + 1 < ROUNDS {
            key[0] = key[0].wrapping_add(KEY_WEYL_0);
            key[1] = key[1].wrapping_add(KEY_WEYL_1);
        }
    }
    state
}

/// A single derived random stream.
///
/// Holds a fixed 128-bit key and a 256-bit block counter starting at zero;
/// output is buffered four words at a time. Streams are single-owner by
/// construction: the type is deliberately not `Clone`, so two tasks cannot
/// consume the same stream.
#[derive(Debug)]
pub struct StreamRng {
    key: [u64; 2],
    counter: [u64; 4],
    buf: [u64; 4],
    pos: usize,
}

impl StreamRng {
    pub fn from_key(key: [u64; 2]) -> Self {
        StreamRng {
            key,
            counter: [0; 4],
            buf: [0; 4],
            pos: 4,
        }
    }

    #[inline]
    fn refill(&mut self) {
        self.buf = block(self.counter, self.key);
        self.pos = 0;
        // 256-bit increment; the carry chain is unreachable in practice but
        // keeps the counter a true 2^256 cycle.
        for word in self.counter.iter_mut() {
            let (next, carry) = word.overflowing_add(1);
            *word = next;
            if !carry {
                break;
            }
        }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        if self.pos == 4 {
            self.refill();
        }
        let value = self.buf[self.pos];
        self.pos += 1;
        value
    }

    /// Uniform draw in `[0, 1)` with the full 53-bit mantissa.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform draw in `(0, 1]`; safe to pass through `ln`.
    #[inline]
    fn next_f64_open(&mut self) -> f64 {
        ((self.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Unbiased uniform integer in `[0, bound)` (Lemire's method).
    #[inline]
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let mut wide = (self.next_u64() as u128) * (bound as u128);
        let mut low = wide as u64;
        if low < bound {
            let threshold = bound.wrapping_neg() % bound;
            while low < threshold {
                wide = (self.next_u64() as u128) * (bound as u128);
                low = wide as u64;
            }
        }
        (wide >> 64) as u64
    }

    /// Two independent standard-normal draws (Box–Muller).
    pub fn standard_normal_pair(&mut self) -> (f64, f64) {
        let radial = self.next_f64_open();
        let angular = self.next_f64();
        let r = math::sqrt(-2.0 * math::ln(radial));
        let t = 2.0 * core::f64::consts::PI * angular;
        (r * math::cos(t), r * math::sin(t))
    }

    /// Poisson draw with unit mean, by CDF inversion.
    pub fn poisson_unit(&mut self) -> u32 {
        // exp(-1), nearest f64.
        const EXP_NEG_ONE: f64 = 0.36787944117144233;
        let u = self.next_f64();
        let mut k = 0u32;
        let mut pmf = EXP_NEG_ONE;
        let mut cdf = pmf;
        while u >= cdf {
            k += 1;
            pmf /= k as f64;
            cdf += pmf;
            if k >= 64 {
                // cdf reaches 1.0 in double precision long before this.
                break;
            }
        }
        k
    }
}
