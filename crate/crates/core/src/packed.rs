//! Word-packed sequences and a bit-parallel autocorrelation kernel.
//!
//! Elements map to bits as +1 -> 0, -1 -> 1; bit `i` of the word holds
//! element x_{i+1}. A product x_i x_{i+k} is +1 exactly when the two bits
//! agree, so
//!
//! ```text
//! c_k = (n - k) - 2 * popcount((w ^ (w >> k)) & mask(n - k))
//! ```
//!
//! This is the kernel the exhaustive searches lean on; the naive loop in
//! [`crate::seq::autocorrelation`] is the independent reference it is
//! checked against.

use crate::error::{Error, Result};
use crate::seq::{BinarySequence, Sign};

pub const MAX_PACKED_LEN: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PackedSequence {
    bits: u64,
    len: usize,
}

impl PackedSequence {
    /// Packs a raw word; bits at or above `len` are cleared.
    pub fn from_word(bits: u64, len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptySequence);
        }
        if len > MAX_PACKED_LEN {
            return Err(Error::LengthOutOfRange {
                n: len,
                min: 1,
                max: MAX_PACKED_LEN,
            });
        }
        let bits = if len < 64 { bits & ((1u64 << len) - 1) } else { bits };
        Ok(PackedSequence { bits, len })
    }

    pub fn from_sequence(x: &BinarySequence) -> Result<Self> {
        let mut bits = 0u64;
        if x.len() > MAX_PACKED_LEN {
            return Err(Error::LengthOutOfRange {
                n: x.len(),
                min: 1,
                max: MAX_PACKED_LEN,
            });
        }
        for (idx, &s) in x.signs().iter().enumerate() {
            if s == Sign::Minus {
                bits |= 1u64 << idx;
            }
        }
        Ok(PackedSequence { bits, len: x.len() })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn word(&self) -> u64 {
        self.bits
    }

    /// Element x_i for 1 <= i <= len.
    pub fn sign_at(&self, i: usize) -> Sign {
        assert!(i >= 1 && i <= self.len, "index {i} out of range 1..={}", self.len);
        if (self.bits >> (i - 1)) & 1 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// Bit-parallel c_k.
    pub fn autocorrelation(&self, k: usize) -> Result<i64> {
        if k >= self.len {
            return Err(Error::ShiftOutOfRange { k, n: self.len });
        }
        let m = self.len - k;
        let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let disagreements = ((self.bits ^ (self.bits >> k)) & mask).count_ones() as i64;
        Ok(m as i64 - 2 * disagreements)
    }

    pub fn is_barker(&self) -> bool {
        (1..self.len).all(|k| {
            let c = self.autocorrelation(k).expect("k < len");
            (-1..=1).contains(&c)
        })
    }

    pub fn to_sequence(&self) -> BinarySequence {
        let signs = (1..=self.len).map(|i| self.sign_at(i)).collect();
        BinarySequence::new(signs).expect("len >= 1")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::autocorrelation;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn packing_round_trips() {
        let x: BinarySequence = "+-++---+".parse().unwrap();
        let packed = PackedSequence::from_sequence(&x).unwrap();
        assert_eq!(packed.to_sequence(), x);
        assert_eq!(packed.sign_at(1), Sign::Plus);
        assert_eq!(packed.sign_at(2), Sign::Minus);
    }

    #[test]
    fn word_construction_masks_high_bits() {
        let packed = PackedSequence::from_word(u64::MAX, 3).unwrap();
        assert_eq!(packed.word(), 0b111);
        assert_eq!(packed.to_sequence().to_string(), "---");
    }

    #[test]
    fn rejects_unpackable_lengths() {
        assert_eq!(
            PackedSequence::from_word(0, 0).unwrap_err(),
            Error::EmptySequence
        );
        assert!(matches!(
            PackedSequence::from_word(0, 65).unwrap_err(),
            Error::LengthOutOfRange { n: 65, .. }
        ));
    }

    #[test]
    fn agrees_with_naive_loop_on_random_sequences() {
        // The two c_k routes must agree everywhere; this is the word-level
        // half of the dual-route check.
        let mut rng = StdRng::seed_from_u64(0x5e9);
        for _ in 0..1000 {
            let n = rng.random_range(1..=64);
            let word: u64 = rng.random();
            let packed = PackedSequence::from_word(word, n).unwrap();
            let seq = packed.to_sequence();
            for k in 0..n {
                assert_eq!(
                    packed.autocorrelation(k).unwrap(),
                    autocorrelation(&seq, k).unwrap(),
                    "n={n} k={k} word={word:#x}"
                );
            }
        }
    }

    #[test]
    fn full_width_sequences_work() {
        let packed = PackedSequence::from_word(0xDEAD_BEEF_0123_4567, 64).unwrap();
        let seq = packed.to_sequence();
        for k in [0, 1, 31, 63] {
            assert_eq!(
                packed.autocorrelation(k).unwrap(),
                autocorrelation(&seq, k).unwrap()
            );
        }
    }
}
