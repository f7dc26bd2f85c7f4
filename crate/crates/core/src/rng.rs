//! Seeded generator used for every randomized sample this crate produces.
//!
//! It is a plain 64-bit linear congruential generator, so fixtures can be
//! reproduced by any reimplementation:
//!
//! ```text
//! state' = state * 6364136223846793005 + 1442695040888963407   (mod 2^64)
//! output = state' >> 33                                         (31 bits)
//! ```
//!
//! The initial state is the seed itself. Scalars are drawn as follows:
//! GF(p) takes `output mod p`; Q takes an integer in `-3..=3`
//! (`output mod 7 - 3`); Q(i) draws the real part, then the imaginary part,
//! the same way.

use crate::field::{FieldTag, Scalar};

pub const MULTIPLIER: u64 = 6364136223846793005;
pub const INCREMENT: u64 = 1442695040888963407;

/// Half-width of the integer range drawn for Q and Q(i) coefficients.
pub const SMALL_INT_RADIUS: i64 = 3;

#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        (self.state >> 33) as u32
    }

    /// Uniform-ish integer in `0..bound` (modulo bias is accepted).
    pub fn below(&mut self, bound: u32) -> u32 {
        assert!(bound > 0, "empty range");
        self.next_u32() % bound
    }

    /// Integer in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range");
        lo + self.below((hi - lo + 1) as u32) as i64
    }

    pub fn scalar(&mut self, field: FieldTag) -> Scalar {
        let width = (2 * SMALL_INT_RADIUS + 1) as u32;
        match field {
            FieldTag::PrimeField(p) => field.from_i64(self.below(p.get()) as i64),
            FieldTag::Rationals => field.from_i64(self.below(width) as i64 - SMALL_INT_RADIUS),
            FieldTag::GaussianRationals => {
                let re = self.below(width) as i64 - SMALL_INT_RADIUS;
                let im = self.below(width) as i64 - SMALL_INT_RADIUS;
                let i = field.imaginary_unit().expect("Q(i) has i");
                field.from_i64(re) + i * field.from_i64(im)
            }
        }
    }
}
