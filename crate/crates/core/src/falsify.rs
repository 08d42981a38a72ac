//! Counterexamples to Theorem 1 (iv): a catalog of known witnesses, the
//! (p, p, 2p, p, p-1, p-1) family, and an exhaustive pruned search.
//!
//! A counterexample is a prefix of length 2t+1 that satisfies the full
//! Theorem 1 premise while its derived sequence z violates equation (k)
//! for some integer k <= t/p. Since equation (k) constrains only the first
//! 2k+1 elements, a prefix witnesses the failure for every extension; the
//! canonical padding (to length 2t+2, with +1) lives in
//! [`CounterexampleRecord::padded_sequence`] and is what audits run on.
//!
//! The search enumerates prefixes depth-first. Equation (k) becomes
//! decidable the moment position 2k+1 is fixed, and because x_1 = +1 it
//! determines x_{2k+1} outright: odd positions are forced (or the branch
//! dies), so only even positions branch.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eqk::eq_k_lhs;
use crate::parallel::run_ordered;
use crate::rle::RunLengthEncoding;
use crate::seq::{BinarySequence, Sign};
use crate::theorem1::{check_claim_iv, derived_sequence, theorem1_audit, Theorem1Report};

/// Where a record came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordSource {
    Catalog,
    Family,
    Search,
}

impl std::fmt::Display for RecordSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RecordSource::Catalog => write!(f, "catalog"),
            RecordSource::Family => write!(f, "family"),
            RecordSource::Search => write!(f, "search"),
        }
    }
}

/// One counterexample to Theorem 1 (iv).
///
/// `rle` encodes the 2t+1-element prefix. `failing_k` lists every integer
/// k <= floor(t/p) at which the derived sequence violates equation (k);
/// it is non-empty by construction. The claim (i)-(iii) verdicts are
/// attached so search runs double as an empirical probe of those claims.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleRecord {
    pub rle: RunLengthEncoding,
    pub t: usize,
    pub p: usize,
    pub z_prefix: BinarySequence,
    pub failing_k: Vec<usize>,
    pub claim_i_ok: bool,
    pub claim_ii_ok: bool,
    pub claim_iii_ok: bool,
    pub source: RecordSource,
}

impl CounterexampleRecord {
    /// Builds a record from a premise-shaped prefix of length 2t+1,
    /// auditing the padded sequence to populate the verdict fields.
    /// Errors when the audit does not confirm a claim (iv) failure.
    pub fn from_prefix(
        prefix: &BinarySequence,
        p: usize,
        t: usize,
        source: RecordSource,
    ) -> Result<Self> {
        if prefix.len() != 2 * t + 1 {
            return Err(Error::MalformedRecord {
                reason: format!(
                    "prefix has {} elements, expected 2t+1 = {}",
                    prefix.len(),
                    2 * t + 1
                ),
            });
        }
        let padded = prefix.padded_to(2 * t + 2, Sign::Plus)?;
        let report = theorem1_audit(&padded, t);
        if !report.premise_ok {
            return Err(Error::FalsificationFailure {
                p,
                reason: format!(
                    "premise fails: {}",
                    report
                        .premise_failure
                        .as_ref()
                        .expect("failure recorded when premise_ok is false")
                ),
            });
        }
        if report.p != Some(p) {
            return Err(Error::FalsificationFailure {
                p,
                reason: format!("leading run is {:?}, expected p={p}", report.p),
            });
        }
        if report.claim_iv_ok != Some(false) {
            return Err(Error::FalsificationFailure {
                p,
                reason: "claim (iv) holds, nothing to falsify".to_string(),
            });
        }
        let z_prefix = derived_sequence(&padded, p).expect("p < n");
        Ok(CounterexampleRecord {
            rle: RunLengthEncoding::encode(prefix),
            t,
            p,
            z_prefix,
            failing_k: report.failing_iv_k,
            claim_i_ok: report.claim_i_ok == Some(true),
            claim_ii_ok: report.claim_ii_ok == Some(true),
            claim_iii_ok: report.claim_iii_ok == Some(true),
            source,
        })
    }

    /// The decoded prefix padded to its canonical audit length 2t+2.
    pub fn padded_sequence(&self) -> Result<BinarySequence> {
        if self.rle.total_len() != 2 * self.t + 1 {
            return Err(Error::MalformedRecord {
                reason: format!(
                    "rle decodes to {} elements, expected 2t+1 = {}",
                    self.rle.total_len(),
                    2 * self.t + 1
                ),
            });
        }
        self.rle.decode().padded_to(2 * self.t + 2, Sign::Plus)
    }

    /// One line of the tabular export: rle, t, p, failing_k.
    pub fn tabular_line(&self) -> String {
        let ks: Vec<String> = self.failing_k.iter().map(|k| k.to_string()).collect();
        format!("{}\t{}\t{}\t{}", self.rle, self.t, self.p, ks.join(","))
    }
}

/// Renders records in the line-oriented tabular format.
pub fn tabular_export(records: &[CounterexampleRecord]) -> String {
    let mut out = String::from("# rle\tt\tp\tfailing_k\n");
    for record in records {
        out.push_str(&record.tabular_line());
        out.push('\n');
    }
    out
}

/// The four known explicit counterexamples to Theorem 1 (iv), with
/// (t, p, failing k) = (9, 3, {3}), (16, 5, {3}), (26, 5, {5}), (26, 5, {5}).
pub fn catalog() -> Vec<CounterexampleRecord> {
    let entries: [(&[usize], usize, usize); 4] = [
        (&[3, 3, 6, 3, 2, 2], 9, 3),
        (&[5, 5, 10, 5, 4, 4], 16, 5),
        (&[5, 5, 5, 5, 10, 10, 9, 4], 26, 5),
        (&[5, 5, 10, 5, 15, 5, 4, 1, 3], 26, 5),
    ];
    entries
        .iter()
        .map(|&(runs, t, p)| {
            let rle = RunLengthEncoding::new(Sign::Plus, runs.to_vec())
                .expect("catalog runs are positive");
            CounterexampleRecord::from_prefix(&rle.decode(), p, t, RecordSource::Catalog)
                .expect("catalog entries audit as counterexamples")
        })
        .collect()
}

/// The (p, p, 2p, p, p-1, p-1) family member for an odd p >= 3. The runs
/// total 7p-2 = 2t+1, so t = (7p-3)/2, and the derived sequence is
/// (+1, -1, +1, +1, -1, +1, -1), which fails equation (3).
///
/// The audit re-verifies everything; a pattern that does not actually
/// falsify claim (iv) comes back as an error, so probing the family's
/// range of validity is just a matter of calling this.
pub fn family_counterexample(p: usize) -> Result<CounterexampleRecord> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(Error::InvalidFamilyParameter { p });
    }
    let t = (7 * p - 3) / 2;
    let rle = RunLengthEncoding::new(Sign::Plus, vec![p, p, 2 * p, p, p - 1, p - 1])
        .expect("family runs are positive for p >= 3");
    let record = CounterexampleRecord::from_prefix(&rle.decode(), p, t, RecordSource::Family)?;
    if !record.failing_k.contains(&3) {
        return Err(Error::FalsificationFailure {
            p,
            reason: format!(
                "claim (iv) fails at {:?} but not at k=3",
                record.failing_k
            ),
        });
    }
    Ok(record)
}

/// Parameters for the exhaustive prefix search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub p: usize,
    pub t: usize,
    /// The leading-run premise frame is always enforced; the search is
    /// only meaningful against Theorem 1 with it in place.
    pub require_premise: bool,
    pub max_results: Option<usize>,
    pub thread_count: Option<usize>,
}

impl SearchConfig {
    pub fn new(p: usize, t: usize) -> Result<Self> {
        if p < 3 {
            return Err(Error::InvalidSearchParameter { p });
        }
        Ok(SearchConfig {
            p,
            t,
            require_premise: true,
            max_results: None,
            thread_count: None,
        })
    }

    pub fn with_max_results(mut self, max: usize) -> Self {
        self.max_results = Some(max);
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.thread_count = Some(threads);
        self
    }
}

/// Exhaustive search for all length-(2t+1) prefixes x with
/// x_1..x_p = +1, x_{p+1} = -1 that satisfy equation (k) for 1 <= k <= t
/// and fail claim (iv). Results come back in lexicographic order
/// (+1 before -1); an empty list is a valid outcome.
pub fn search(config: &SearchConfig) -> Vec<CounterexampleRecord> {
    assert!(
        config.require_premise,
        "searching without the premise frame is not supported"
    );
    let p = config.p;
    let t = config.t;
    if t < p {
        // floor(t/p) = 0: claim (iv) is vacuous, nothing can fail it.
        return Vec::new();
    }
    let n = 2 * t + 1;
    let mut x = vec![Sign::Plus; n];
    x[p] = Sign::Minus; // x_{p+1}

    // Equations whose window sits entirely inside the fixed prefix.
    let fixed = p + 1;
    for k in 1..=t {
        if 2 * k + 1 > fixed {
            break;
        }
        if !prefix_satisfies_eq_k(&x, k) {
            return Vec::new();
        }
    }

    let first_free = fixed + 1; // 1-based position
    let threads = config.thread_count.unwrap_or(1).max(1);

    let mut found = if threads == 1 {
        let mut out = Vec::new();
        let budget = config.max_results.unwrap_or(usize::MAX);
        dfs(&mut x, first_free, n + 1, t, &mut |prefix| {
            collect_leaf(prefix, p, t, &mut out);
            out.len() < budget
        });
        out
    } else {
        // Partition at a fixed shallow depth, then fan the subtrees out.
        let cutoff = (first_free + 16).min(n + 1);
        let mut tasks: Vec<Vec<Sign>> = Vec::new();
        dfs(&mut x, first_free, cutoff, t, &mut |prefix| {
            tasks.push(prefix.to_vec());
            true
        });
        let chunks = run_ordered(tasks, threads, |task| {
            let mut x = task;
            x.resize(n, Sign::Plus); // placeholders; the walk overwrites them
            let mut out = Vec::new();
            dfs(&mut x, cutoff, n + 1, t, &mut |prefix| {
                collect_leaf(prefix, p, t, &mut out);
                true
            });
            out
        });
        let mut out: Vec<CounterexampleRecord> = chunks.into_iter().flatten().collect();
        if let Some(max) = config.max_results {
            out.truncate(max);
        }
        out
    };

    if let Some(max) = config.max_results {
        found.truncate(max);
    }
    found
}

fn collect_leaf(prefix: &[Sign], p: usize, t: usize, out: &mut Vec<CounterexampleRecord>) {
    let seq = BinarySequence::new(prefix.to_vec()).expect("prefix is non-empty");
    let iv = check_claim_iv(&seq, p, t).expect("prefix of length 2t+1 is long enough");
    if !iv.holds() {
        let record = CounterexampleRecord::from_prefix(&seq, p, t, RecordSource::Search)
            .expect("premise holds along every surviving branch");
        out.push(record);
    }
}

/// Depth-first extension of positions `from..stop` (1-based). Even
/// positions branch +1 then -1; an odd position 2k+1 is solved from
/// equation (k). The sink sees each completed state and returns false to
/// stop the walk early.
fn dfs(x: &mut [Sign], from: usize, stop: usize, t: usize, sink: &mut dyn FnMut(&[Sign]) -> bool) -> bool {
    if from == stop {
        return sink(&x[..from - 1]);
    }
    if from % 2 == 1 {
        let k = (from - 1) / 2;
        debug_assert!(k >= 1 && k <= t);
        match forced_value(x, k) {
            Some(v) => {
                x[from - 1] = v;
                dfs(x, from + 1, stop, t, sink)
            }
            None => true,
        }
    } else {
        for v in [Sign::Plus, Sign::Minus] {
            x[from - 1] = v;
            if !dfs(x, from + 1, stop, t, sink) {
                return false;
            }
        }
        true
    }
}

/// Solves equation (k) for x_{2k+1} given x_1..x_{2k}. The i=1 term is
/// x_1 x_{2k+1} with x_1 = +1, so x_{2k+1} = lhs - (rest of the sum);
/// no solution when that difference is not ±1.
fn forced_value(x: &[Sign], k: usize) -> Option<Sign> {
    let mut rest = 0i64;
    for i in 2..=k {
        let term = (x[i - 1] * x[2 * k + 1 - i]).value();
        rest += if i % 2 == 1 { term } else { -term };
    }
    Sign::from_value(eq_k_lhs(k) - rest)
}

fn prefix_satisfies_eq_k(x: &[Sign], k: usize) -> bool {
    let mut sum = 0i64;
    for i in 1..=k {
        let term = (x[i - 1] * x[2 * k + 1 - i]).value();
        sum += if i % 2 == 1 { term } else { -term };
    }
    sum == eq_k_lhs(k)
}

/// Re-audits a record end to end: decodes, pads to 2t+2, runs the full
/// audit, and insists the stored failing k set matches what the audit
/// observes. A mismatch is reported, never silently corrected.
pub fn verify_record(record: &CounterexampleRecord) -> Result<Theorem1Report> {
    let padded = record.padded_sequence()?;
    let report = theorem1_audit(&padded, record.t);
    if !report.premise_ok {
        return Err(Error::RecordMismatch {
            expected: record.failing_k.clone(),
            observed: vec![],
        });
    }
    if report.failing_iv_k != record.failing_k {
        return Err(Error::RecordMismatch {
            expected: record.failing_k.clone(),
            observed: report.failing_iv_k,
        });
    }
    let z = derived_sequence(&padded, record.p).expect("p < n");
    if z != record.z_prefix {
        return Err(Error::MalformedRecord {
            reason: format!(
                "stored derived sequence {} disagrees with recomputed {}",
                record.z_prefix, z
            ),
        });
    }
    Ok(report)
}
