use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence must contain at least one element")]
    EmptySequence,

    #[error("element {index} is {value}, expected +1 or -1")]
    InvalidElement { index: usize, value: i64 },

    #[error("unexpected character {found:?} at position {position} in sequence literal (expected '+' or '-')")]
    InvalidSequenceChar { found: char, position: usize },

    #[error("run-length encoding must contain at least one run")]
    EmptyRuns,

    #[error("run {index} has length {value}; run lengths must be positive")]
    InvalidRunLength { index: usize, value: i64 },

    #[error("invalid run length token {token:?} at position {position} in run-length text")]
    InvalidRunToken { token: String, position: usize },

    #[error("shift k={k} out of range for a sequence of length {n}")]
    ShiftOutOfRange { k: usize, n: usize },

    #[error("equation index k must be positive")]
    ZeroEquationIndex,

    #[error("equation ({k}) needs 2k+1={needed} elements, sequence has {n}")]
    EquationOutOfRange { k: usize, needed: usize, n: usize },

    #[error("sequence does not start with +1")]
    NoLeadingPlusRun,

    #[error("subsample stride p={p} out of range 1..={n}")]
    StrideOutOfRange { p: usize, n: usize },

    #[error("cannot pad to {target} elements: sequence already has {n}")]
    PadTargetTooSmall { target: usize, n: usize },

    #[error("length n={n} outside the supported range {min}..={max}")]
    LengthOutOfRange { n: usize, min: usize, max: usize },

    #[error("p={p} must be odd and at least 3")]
    InvalidFamilyParameter { p: usize },

    #[error("p={p} must be at least 3")]
    InvalidSearchParameter { p: usize },

    #[error("not a counterexample for p={p}: {reason}")]
    FalsificationFailure { p: usize, reason: String },

    #[error("record is structurally invalid: {reason}")]
    MalformedRecord { reason: String },

    #[error("record fails re-audit: expected failing k {expected:?}, observed {observed:?}")]
    RecordMismatch {
        expected: Vec<usize>,
        observed: Vec<usize>,
    },
}
