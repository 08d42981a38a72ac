//! Exhaustive Barker sequence search.
//!
//! The search places elements from both ends inward: after step j the
//! positions 1..j and n+1-j..n are set, which fully determines c_{n-j}
//! and sharpens the bound |c_k| <= 1 + (number of unset terms) for every
//! other shift. Branches die the moment any shift can no longer land in
//! {-1, 0, 1}. Completed sequences are re-checked with the bit-parallel
//! kernel before being admitted.
//!
//! Exhaustiveness is contractual, not incidental: for n <= 16 the output
//! is cross-checked against a naive filter of all 2^n sequences in the
//! test suite.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::packed::PackedSequence;
use crate::parallel::run_ordered;
use crate::seq::BinarySequence;

/// Largest length the exhaustive search accepts.
pub const MAX_BARKER_N: usize = 32;

/// Smallest length the search accepts; a single element has no off-peak
/// shift and the Barker property would be vacuous.
pub const MIN_BARKER_N: usize = 2;

/// Everything an exhaustive run of one length produces.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BarkerSearchResult {
    pub n: usize,
    /// All Barker sequences of length n, lexicographically ordered with
    /// +1 before -1.
    pub sequences: Vec<BinarySequence>,
    pub count: usize,
    #[serde(skip, default)]
    pub elapsed: Duration,
}

/// Exhaustive single-threaded search; see [`barker_search_threaded`].
pub fn barker_search(n: usize) -> Result<BarkerSearchResult> {
    barker_search_threaded(n, 1)
}

/// Finds every Barker sequence of length n. Output is independent of
/// `threads`; workers only split the prefix tree.
pub fn barker_search_threaded(n: usize, threads: usize) -> Result<BarkerSearchResult> {
    if !(MIN_BARKER_N..=MAX_BARKER_N).contains(&n) {
        return Err(Error::LengthOutOfRange {
            n,
            min: MIN_BARKER_N,
            max: MAX_BARKER_N,
        });
    }
    let started = Instant::now();
    let threads = threads.max(1);

    let words = if threads == 1 {
        let mut state = EndsState::new(n);
        let mut words = Vec::new();
        state.run(1, usize::MAX, &mut |w| words.push(w));
        words
    } else {
        // Fan out over the surviving states a few steps down.
        let split_step = steps_for(n).min(4);
        let mut tasks = Vec::new();
        EndsState::new(n).collect_frontier(1, split_step, &mut tasks);
        let chunks = run_ordered(tasks, threads, |placements| {
            let mut state = EndsState::new(n);
            for (pos, value) in placements {
                let ok = state.place(pos, value);
                debug_assert!(ok, "frontier states are feasible");
            }
            let mut words = Vec::new();
            state.run(split_step, usize::MAX, &mut |w| words.push(w));
            words
        });
        chunks.into_iter().flatten().collect()
    };

    let mut sequences: Vec<BinarySequence> = words
        .into_iter()
        .map(|w| {
            let packed = PackedSequence::from_word(w, n).expect("n <= 64");
            assert!(packed.is_barker(), "leaf check must agree with the DFS bounds");
            packed.to_sequence()
        })
        .collect();
    sequences.sort();

    Ok(BarkerSearchResult {
        n,
        count: sequences.len(),
        sequences,
        elapsed: started.elapsed(),
    })
}

/// Runs [`barker_search`] for every odd 13 < n <= n_max and reports the
/// counts. Any nonzero count would be a finding worth shouting about;
/// the scan reports data, it does not assert impossibility.
pub fn odd_nonexistence_scan(n_max: usize) -> Result<Vec<(usize, usize)>> {
    if n_max > MAX_BARKER_N {
        return Err(Error::LengthOutOfRange {
            n: n_max,
            min: MIN_BARKER_N,
            max: MAX_BARKER_N,
        });
    }
    let mut table = Vec::new();
    let mut n = 15;
    while n <= n_max {
        table.push((n, barker_search(n)?.count));
        n += 2;
    }
    Ok(table)
}

/// Number of placement steps: each step sets the pair (j, n+1-j); an odd
/// middle position is its own final step.
fn steps_for(n: usize) -> usize {
    n.div_ceil(2)
}

/// Incremental both-ends search state over positions 1..=n.
struct EndsState {
    n: usize,
    values: Vec<i64>,      // 0 = unset, else ±1; 0-based
    placed: Vec<usize>,    // 1-based positions in placement order
    partial: Vec<i64>,     // partial[k] = sum of known terms of c_k
    unknown: Vec<i64>,     // unknown[k] = number of unknown terms of c_k
}

impl EndsState {
    fn new(n: usize) -> Self {
        let mut unknown = vec![0i64; n];
        for (k, slot) in unknown.iter_mut().enumerate().skip(1) {
            *slot = (n - k) as i64;
        }
        EndsState {
            n,
            values: vec![0; n],
            placed: Vec::with_capacity(n),
            partial: vec![0; n],
            unknown,
        }
    }

    /// Sets position `pos` (1-based) and folds the newly-known terms into
    /// every partial sum. Returns false when some shift can no longer
    /// reach {-1, 0, 1}.
    fn place(&mut self, pos: usize, value: i64) -> bool {
        self.values[pos - 1] = value;
        for idx in 0..self.placed.len() {
            let other = self.placed[idx];
            let k = pos.abs_diff(other);
            self.partial[k] += value * self.values[other - 1];
            self.unknown[k] -= 1;
        }
        self.placed.push(pos);
        (1..self.n).all(|k| self.partial[k].abs() <= 1 + self.unknown[k])
    }

    fn unplace(&mut self, pos: usize) {
        let popped = self.placed.pop();
        debug_assert_eq!(popped, Some(pos));
        let value = self.values[pos - 1];
        for &other in &self.placed {
            let k = pos.abs_diff(other);
            self.partial[k] -= value * self.values[other - 1];
            self.unknown[k] += 1;
        }
        self.values[pos - 1] = 0;
    }

    /// DFS from `step` (1-based) up to `stop` or completion, emitting each
    /// completed sequence as a packed word.
    fn run(&mut self, step: usize, stop: usize, emit: &mut dyn FnMut(u64)) {
        let total = steps_for(self.n);
        if step > total {
            emit(self.word());
            return;
        }
        if step >= stop {
            return;
        }
        let (a, b) = (step, self.n + 1 - step);
        if a == b {
            for v in [1i64, -1] {
                if self.place(a, v) {
                    self.run(step + 1, stop, emit);
                }
                self.unplace(a);
            }
        } else {
            for (va, vb) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
                if self.place(a, va) {
                    if self.place(b, vb) {
                        self.run(step + 1, stop, emit);
                    }
                    self.unplace(b);
                }
                self.unplace(a);
            }
        }
    }

    /// Walks the tree down to `stop` collecting each surviving state as
    /// its placement list.
    fn collect_frontier(&mut self, step: usize, stop: usize, out: &mut Vec<Vec<(usize, i64)>>) {
        let total = steps_for(self.n);
        if step >= stop || step > total {
            let placements = self
                .placed
                .iter()
                .map(|&pos| (pos, self.values[pos - 1]))
                .collect();
            out.push(placements);
            return;
        }
        let (a, b) = (step, self.n + 1 - step);
        if a == b {
            for v in [1i64, -1] {
                if self.place(a, v) {
                    self.collect_frontier(step + 1, stop, out);
                }
                self.unplace(a);
            }
        } else {
            for (va, vb) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
                if self.place(a, va) {
                    if self.place(b, vb) {
                        self.collect_frontier(step + 1, stop, out);
                    }
                    self.unplace(b);
                }
                self.unplace(a);
            }
        }
    }

    fn word(&self) -> u64 {
        let mut bits = 0u64;
        for (idx, &v) in self.values.iter().enumerate() {
            debug_assert!(v == 1 || v == -1);
            if v == -1 {
                bits |= 1 << idx;
            }
        }
        bits
    }
}
