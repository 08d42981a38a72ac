//! Run-length encoding of ±1 sequences.
//!
//! A sequence is described by the sign of its first element plus the lengths
//! of its maximal constant runs; the signs of later runs alternate by
//! construction, so `(+, [3,3,6,3,2,2])` decodes to
//! `"+++---++++++---++--"`.
//!
//! Text form: a sign character followed by comma-separated positive
//! integers, e.g. `"+3,3,6,3,2,2"`. Parsing through [`RunLengthEncoding`]'s
//! `FromStr` requires the sign to be explicit; [`parse_with_default_sign`]
//! exists for front ends that want a signless shorthand.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::seq::{BinarySequence, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RunLengthEncoding {
    leading_sign: Sign,
    runs: Vec<usize>,
}

impl RunLengthEncoding {
    pub fn new(leading_sign: Sign, runs: Vec<usize>) -> Result<Self> {
        if runs.is_empty() {
            return Err(Error::EmptyRuns);
        }
        for (idx, &run) in runs.iter().enumerate() {
            if run == 0 {
                return Err(Error::InvalidRunLength {
                    index: idx + 1,
                    value: 0,
                });
            }
        }
        Ok(RunLengthEncoding { leading_sign, runs })
    }

    pub fn leading_sign(&self) -> Sign {
        self.leading_sign
    }

    pub fn runs(&self) -> &[usize] {
        &self.runs
    }

    /// Total number of elements in the decoded sequence.
    pub fn total_len(&self) -> usize {
        self.runs.iter().sum()
    }

    /// Expands the encoding into the sequence it describes.
    pub fn decode(&self) -> BinarySequence {
        let mut signs = Vec::with_capacity(self.total_len());
        let mut sign = self.leading_sign;
        for &run in &self.runs {
            signs.extend(std::iter::repeat_n(sign, run));
            sign = sign.flipped();
        }
        BinarySequence::new(signs).expect("runs are non-empty")
    }

    /// Encodes a sequence as its maximal constant runs.
    pub fn encode(x: &BinarySequence) -> Self {
        let signs = x.signs();
        let mut runs = Vec::new();
        let mut current = signs[0];
        let mut count = 0usize;
        for &s in signs {
            if s == current {
                count += 1;
            } else {
                runs.push(count);
                current = s;
                count = 1;
            }
        }
        runs.push(count);
        RunLengthEncoding {
            leading_sign: signs[0],
            runs,
        }
    }
}

pub fn rle_decode(rle: &RunLengthEncoding) -> BinarySequence {
    rle.decode()
}

pub fn rle_encode(x: &BinarySequence) -> RunLengthEncoding {
    RunLengthEncoding::encode(x)
}

/// Parses run-length text whose sign character may be omitted, substituting
/// `default_sign` when it is. Core callers should prefer the strict
/// `FromStr` form; this is the entry point for command-line shorthand.
pub fn parse_with_default_sign(text: &str, default_sign: Sign) -> Result<RunLengthEncoding> {
    let (sign, rest, offset) = match text.chars().next() {
        Some(c) if Sign::from_char(c).is_some() => {
            (Sign::from_char(c).unwrap(), &text[1..], 1usize)
        }
        _ => (default_sign, text, 0usize),
    };
    parse_runs(rest, offset).and_then(|runs| RunLengthEncoding::new(sign, runs))
}

fn parse_runs(text: &str, offset: usize) -> Result<Vec<usize>> {
    if text.is_empty() {
        return Err(Error::EmptyRuns);
    }
    let mut runs = Vec::new();
    let mut position = offset + 1; // 1-based position of the current token
    for token in text.split(',') {
        let value: i64 = token.trim().parse().map_err(|_| Error::InvalidRunToken {
            token: token.to_string(),
            position,
        })?;
        if value <= 0 {
            return Err(Error::InvalidRunLength {
                index: runs.len() + 1,
                value,
            });
        }
        runs.push(value as usize);
        position += token.len() + 1;
    }
    Ok(runs)
}

impl FromStr for RunLengthEncoding {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let sign = chars
            .next()
            .and_then(Sign::from_char)
            .ok_or(Error::InvalidRunToken {
                token: s.chars().take(1).collect(),
                position: 1,
            })?;
        let runs = parse_runs(chars.as_str(), 1)?;
        RunLengthEncoding::new(sign, runs)
    }
}

impl fmt::Display for RunLengthEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.leading_sign.as_char())?;
        for (idx, run) in self.runs.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{run}")?;
        }
        Ok(())
    }
}

impl Serialize for RunLengthEncoding {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RunLengthEncoding {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn decode_known_encoding() {
        let rle: RunLengthEncoding = "+3,3,6,3,2,2".parse().unwrap();
        let x = rle.decode();
        assert_eq!(x.to_string(), "+++---++++++---++--");
        assert_eq!(x.len(), 19);
        assert_eq!(RunLengthEncoding::encode(&x), rle);
    }

    #[test]
    fn decode_single_run() {
        let rle = RunLengthEncoding::new(Sign::Plus, vec![1]).unwrap();
        assert_eq!(rle.decode().to_string(), "+");
    }

    #[test]
    fn decode_alternating_signs() {
        let rle = RunLengthEncoding::new(Sign::Minus, vec![2, 1]).unwrap();
        assert_eq!(rle.decode().values(), vec![-1, -1, 1]);
    }

    #[test]
    fn encode_constant_and_alternating() {
        let c = BinarySequence::repeated(Sign::Plus, 5).unwrap();
        assert_eq!(RunLengthEncoding::encode(&c).to_string(), "+5");
        let a: BinarySequence = "-+-".parse().unwrap();
        let rle = RunLengthEncoding::encode(&a);
        assert_eq!(rle.leading_sign(), Sign::Minus);
        assert_eq!(rle.runs(), &[1, 1, 1]);
    }

    #[test]
    fn constructor_rejects_bad_runs() {
        assert_eq!(
            RunLengthEncoding::new(Sign::Plus, vec![]).unwrap_err(),
            Error::EmptyRuns
        );
        assert_eq!(
            RunLengthEncoding::new(Sign::Plus, vec![3, 0]).unwrap_err(),
            Error::InvalidRunLength { index: 2, value: 0 }
        );
    }

    #[test]
    fn text_parsing_errors_carry_positions() {
        let err = "+3,x,2".parse::<RunLengthEncoding>().unwrap_err();
        assert_eq!(
            err,
            Error::InvalidRunToken {
                token: "x".to_string(),
                position: 4
            }
        );
        let err = "+0,3".parse::<RunLengthEncoding>().unwrap_err();
        assert_eq!(err, Error::InvalidRunLength { index: 1, value: 0 });
        let err = "3,3".parse::<RunLengthEncoding>().unwrap_err();
        assert!(matches!(err, Error::InvalidRunToken { position: 1, .. }));
    }

    #[test]
    fn default_sign_only_fills_missing_sign() {
        let rle = parse_with_default_sign("3,3,6,3,2,2", Sign::Plus).unwrap();
        assert_eq!(rle.to_string(), "+3,3,6,3,2,2");
        let rle = parse_with_default_sign("-2,1", Sign::Plus).unwrap();
        assert_eq!(rle.leading_sign(), Sign::Minus);
    }

    proptest! {
        #[test]
        fn round_trip_from_sequence(lit in "[+-]{1,64}") {
            let x: BinarySequence = lit.parse().unwrap();
            let rle = RunLengthEncoding::encode(&x);
            prop_assert_eq!(rle.decode(), x);
        }

        #[test]
        fn round_trip_from_encoding(sign in prop::bool::ANY, runs in prop::collection::vec(1usize..6, 1..8)) {
            let sign = if sign { Sign::Plus } else { Sign::Minus };
            let rle = RunLengthEncoding::new(sign, runs).unwrap();
            prop_assert_eq!(RunLengthEncoding::encode(&rle.decode()), rle);
        }
    }
}
