//! Verification and search toolkit for the combinatorics behind Barker
//! sequences and Theorem 1 of Turyn and Storer's "On Binary Sequences"
//! (1961).
//!
//! The pieces:
//!
//! * [`seq`] / [`rle`] — ±1 sequences, aperiodic autocorrelation, the
//!   Barker property, and a run-length codec with text formats for both.
//! * [`packed`] — word-packed sequences with a popcount-based c_k kernel,
//!   the second, independent route to the same autocorrelation values.
//! * [`eqk`] — the equation (k) identity, its strict domain bound, and
//!   the maximal t a sequence satisfies.
//! * [`theorem1`] — executable checkers for the Theorem 1 premise and its
//!   four claims, bundled into an audit report.
//! * [`falsify`] — known counterexamples to claim (iv), the
//!   (p, p, 2p, p, p-1, p-1) family, and an exhaustive pruned search for
//!   all counterexamples at a given (p, t).
//! * [`barker`] — exhaustive Barker sequence search and the odd-length
//!   nonexistence scan.
//!
//! Everything is a pure function of immutable inputs; searches fan out
//! over worker threads but produce output independent of the thread
//! count.

pub mod barker;
pub mod eqk;
pub mod error;
pub mod falsify;
pub mod packed;
mod parallel;
pub mod rle;
pub mod seq;
pub mod theorem1;

pub use barker::{
    barker_search, barker_search_threaded, odd_nonexistence_scan, BarkerSearchResult,
    MAX_BARKER_N, MIN_BARKER_N,
};
pub use eqk::{eq_k_lhs, eq_k_profile, eq_k_rhs, k_max, max_t, satisfies_eq_k};
pub use error::{Error, Result};
pub use falsify::{
    catalog, family_counterexample, search, tabular_export, verify_record, CounterexampleRecord,
    RecordSource, SearchConfig,
};
pub use packed::{PackedSequence, MAX_PACKED_LEN};
pub use rle::{parse_with_default_sign, rle_decode, rle_encode, RunLengthEncoding};
pub use seq::{autocorrelation, is_barker, BinarySequence, Sign};
pub use theorem1::{
    check_claim_i, check_claim_ii, check_claim_iii, check_claim_iv, derived_sequence, leading_run,
    theorem1_audit, ClaimCheck, PremiseFailure, Theorem1Context, Theorem1Report,
};
