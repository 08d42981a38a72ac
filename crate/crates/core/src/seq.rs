//! Binary ±1 sequences, their aperiodic autocorrelation, and the Barker
//! property.
//!
//! A sequence x = (x_1, ..., x_n) has elements in {+1, -1} and is addressed
//! with 1-based subscripts at every public boundary, matching the usual
//! convention for these objects. Storage is 0-based internally; the
//! conversion happens only inside [`BinarySequence::at`] and
//! [`BinarySequence::get`].
//!
//! The text form of a sequence is a string over `{'+', '-'}`, one character
//! per element, e.g. `"+++---++++++---++--"`.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// One element of a binary sequence.
///
/// `Plus` orders before `Minus`, so the derived lexicographic order on
/// sequences ranks +1 ahead of -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The element as an integer, +1 or -1.
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self.flipped()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A non-empty ±1 sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinarySequence {
    signs: Vec<Sign>,
}

impl BinarySequence {
    pub fn new(signs: Vec<Sign>) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(BinarySequence { signs })
    }

    /// Builds a sequence from ±1 integer values.
    pub fn from_values(values: &[i64]) -> Result<Self> {
        let signs = values
            .iter()
            .enumerate()
            .map(|(idx, &v)| {
                Sign::from_value(v).ok_or(Error::InvalidElement {
                    index: idx + 1,
                    value: v,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(signs)
    }

    /// A constant sequence of `n` copies of `sign`.
    pub fn repeated(sign: Sign, n: usize) -> Result<Self> {
        Self::new(vec![sign; n])
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    /// Always false: sequences are non-empty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Element x_i for 1 <= i <= n.
    ///
    /// Panics when `i` is 0 or exceeds the length; use [`get`](Self::get)
    /// for a checked lookup.
    pub fn at(&self, i: usize) -> Sign {
        assert!(
            i >= 1 && i <= self.signs.len(),
            "index {i} out of range 1..={}",
            self.signs.len()
        );
        self.signs[i - 1]
    }

    /// Element x_i for 1 <= i <= n, or `None` when out of range.
    pub fn get(&self, i: usize) -> Option<Sign> {
        if i == 0 {
            None
        } else {
            self.signs.get(i - 1).copied()
        }
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn values(&self) -> Vec<i64> {
        self.signs.iter().map(|s| s.value()).collect()
    }

    /// The sequence with every element negated.
    pub fn negated(&self) -> Self {
        BinarySequence {
            signs: self.signs.iter().map(|s| s.flipped()).collect(),
        }
    }

    /// The sequence read back to front.
    pub fn reversed(&self) -> Self {
        let mut signs = self.signs.clone();
        signs.reverse();
        BinarySequence { signs }
    }

    /// The alternation map x_i -> (-1)^i x_i (1-based), which sends the
    /// autocorrelation c_k to (-1)^k c_k.
    pub fn alternated(&self) -> Self {
        BinarySequence {
            signs: self
                .signs
                .iter()
                .enumerate()
                .map(|(idx, &s)| if (idx + 1) % 2 == 1 { s.flipped() } else { s })
                .collect(),
        }
    }

    /// Extends the sequence to length `target` with copies of `fill`.
    pub fn padded_to(&self, target: usize, fill: Sign) -> Result<Self> {
        if target < self.signs.len() {
            return Err(Error::PadTargetTooSmall {
                target,
                n: self.signs.len(),
            });
        }
        let mut signs = self.signs.clone();
        signs.resize(target, fill);
        Ok(BinarySequence { signs })
    }
}

impl FromStr for BinarySequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptySequence);
        }
        let signs = s
            .chars()
            .enumerate()
            .map(|(idx, c)| {
                Sign::from_char(c).ok_or(Error::InvalidSequenceChar {
                    found: c,
                    position: idx + 1,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BinarySequence { signs })
    }
}

impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl Serialize for BinarySequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BinarySequence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(D::Error::custom)
    }
}

/// Aperiodic autocorrelation c_k = sum_{i=1}^{n-k} x_i x_{i+k}.
///
/// Defined for 0 <= k <= n-1; c_0 = n.
pub fn autocorrelation(x: &BinarySequence, k: usize) -> Result<i64> {
    let n = x.len();
    if k >= n {
        return Err(Error::ShiftOutOfRange { k, n });
    }
    let signs = x.signs();
    Ok(signs[..n - k]
        .iter()
        .zip(&signs[k..])
        .map(|(&a, &b)| (a * b).value())
        .sum())
}

/// True when every off-peak autocorrelation satisfies |c_k| <= 1.
///
/// Vacuously true for a single-element sequence (there are no off-peak
/// shifts to test).
pub fn is_barker(x: &BinarySequence) -> bool {
    (1..x.len()).all(|k| {
        let c = autocorrelation(x, k).expect("k < n");
        c.abs() <= 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> BinarySequence {
        s.parse().expect("valid literal")
    }

    #[test]
    fn literal_parses_and_displays() {
        let x = seq("+-+");
        assert_eq!(x.values(), vec![1, -1, 1]);
        assert_eq!(x.to_string(), "+-+");
        assert_eq!(x.at(1), Sign::Plus);
        assert_eq!(x.at(2), Sign::Minus);
        assert_eq!(x.get(4), None);
        assert_eq!(x.get(0), None);
    }

    #[test]
    fn literal_rejects_bad_char() {
        let err = "+x+".parse::<BinarySequence>().unwrap_err();
        assert_eq!(
            err,
            Error::InvalidSequenceChar {
                found: 'x',
                position: 2
            }
        );
        assert_eq!("".parse::<BinarySequence>().unwrap_err(), Error::EmptySequence);
    }

    #[test]
    fn from_values_validates() {
        assert!(BinarySequence::from_values(&[1, -1]).is_ok());
        assert_eq!(
            BinarySequence::from_values(&[1, 0]).unwrap_err(),
            Error::InvalidElement { index: 2, value: 0 }
        );
    }

    #[test]
    fn autocorrelation_constant_sequence() {
        // c_k = n - k for the all-ones sequence.
        let x = BinarySequence::repeated(Sign::Plus, 5).unwrap();
        assert_eq!(autocorrelation(&x, 2).unwrap(), 3);
        assert_eq!(autocorrelation(&x, 0).unwrap(), 5);
    }

    #[test]
    fn autocorrelation_mixed() {
        // x_1 x_3 + x_2 x_4 = 1 - 1 = 0
        let x = seq("+++-");
        assert_eq!(autocorrelation(&x, 2).unwrap(), 0);
    }

    #[test]
    fn autocorrelation_rejects_out_of_range() {
        let x = seq("+++-");
        assert_eq!(
            autocorrelation(&x, 4).unwrap_err(),
            Error::ShiftOutOfRange { k: 4, n: 4 }
        );
    }

    #[test]
    fn barker_13_is_barker() {
        let x = seq("+++++--++-+-+");
        for k in 1..x.len() {
            let c = autocorrelation(&x, k).unwrap();
            assert!(c == 0 || c == 1, "c_{k} = {c}");
        }
        assert!(is_barker(&x));
    }

    #[test]
    fn all_ones_is_not_barker() {
        let x = BinarySequence::repeated(Sign::Plus, 4).unwrap();
        assert!(!is_barker(&x)); // c_1 = 3
    }

    #[test]
    fn short_barker() {
        // c_1 = 1, c_2 = 0, c_3 = -1
        let x = seq("+++-");
        assert_eq!(autocorrelation(&x, 1).unwrap(), 1);
        assert_eq!(autocorrelation(&x, 2).unwrap(), 0);
        assert_eq!(autocorrelation(&x, 3).unwrap(), -1);
        assert!(is_barker(&x));
    }

    #[test]
    fn endpoint_identities() {
        for lit in ["+-++-", "--+", "+", "++--+-+"] {
            let x = seq(lit);
            let n = x.len();
            assert_eq!(autocorrelation(&x, 0).unwrap(), n as i64);
            if n > 1 {
                assert_eq!(
                    autocorrelation(&x, n - 1).unwrap(),
                    (x.at(1) * x.at(n)).value()
                );
            }
        }
    }

    #[test]
    fn transforms() {
        let x = seq("++-");
        assert_eq!(x.negated().to_string(), "--+");
        assert_eq!(x.reversed().to_string(), "-++");
        // positions 1 and 3 flip
        assert_eq!(x.alternated().to_string(), "-++");
        assert_eq!(x.padded_to(5, Sign::Plus).unwrap().to_string(), "++-++");
        assert_eq!(
            x.padded_to(2, Sign::Plus).unwrap_err(),
            Error::PadTargetTooSmall { target: 2, n: 3 }
        );
    }

    #[test]
    fn lexicographic_order_puts_plus_first() {
        let a = seq("++-");
        let b = seq("+-+");
        assert!(a < b);
        let mut v = vec![b.clone(), a.clone()];
        v.sort();
        assert_eq!(v, vec![a, b]);
    }

    #[test]
    fn serde_uses_literal_form() {
        let x = seq("+-+");
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, "\"+-+\"");
        let back: BinarySequence = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }
}
