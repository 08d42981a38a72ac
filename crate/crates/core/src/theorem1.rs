//! Executable checkers for the premise and the four claims of Theorem 1
//! of Turyn and Storer's "On Binary Sequences" (1961).
//!
//! The theorem: let x satisfy equation (k) for 1 <= k <= t, let
//! x_i = 1 for 1 <= i <= p with x_{p+1} = -1 and p > 1. Then
//!
//! * (i)   x_i x_{i+1} = x_{2i} x_{2i+1} for 1 <= i <= t;
//! * (ii)  p <= 2t+1 implies p is odd;
//! * (iii) pj+r <= 2t+1, 1 <= r <= p implies x_{p(j-1)+r} = x_{p(j-1)+1};
//! * (iv)  z_j = x_{p(j-1)+1} satisfies equation (k) for k <= t/p.
//!
//! Claim (iv) is known to be false; [`crate::falsify`] reproduces and
//! searches for sequences that witness this. The checkers here are
//! premise-agnostic pure functions; [`theorem1_audit`] bundles them with
//! the premise test into a single report.

use serde::{Deserialize, Serialize};

use crate::eqk::satisfies_eq_k;
use crate::error::{Error, Result};
use crate::seq::{BinarySequence, Sign};

/// Length of the maximal leading run of +1's.
///
/// This is the p of the Theorem 1 premise; callers enforcing the premise
/// additionally require p > 1 and p < n.
pub fn leading_run(x: &BinarySequence) -> Result<usize> {
    if x.at(1) != Sign::Plus {
        return Err(Error::NoLeadingPlusRun);
    }
    Ok(x.signs()
        .iter()
        .take_while(|&&s| s == Sign::Plus)
        .count())
}

/// The subsampled sequence z with z_j = x_{p(j-1)+1}, of length
/// floor((n-1)/p) + 1 (every index that stays within x).
pub fn derived_sequence(x: &BinarySequence, p: usize) -> Result<BinarySequence> {
    let n = x.len();
    if p == 0 || p > n {
        return Err(Error::StrideOutOfRange { p, n });
    }
    let len = (n - 1) / p + 1;
    let signs = (1..=len).map(|j| x.at(p * (j - 1) + 1)).collect();
    BinarySequence::new(signs)
}

/// Outcome of checking one claim: the claim holds exactly when the list
/// of failures is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimCheck<T> {
    pub failures: Vec<T>,
}

impl<T> ClaimCheck<T> {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Claim (i): x_i x_{i+1} = x_{2i} x_{2i+1} for 1 <= i <= t.
/// Returns the indices i at which the identity fails, in increasing order.
pub fn check_claim_i(x: &BinarySequence, t: usize) -> Result<ClaimCheck<usize>> {
    let needed = 2 * t + 1;
    if needed > x.len() {
        return Err(Error::EquationOutOfRange {
            k: t,
            needed,
            n: x.len(),
        });
    }
    let failures = (1..=t)
        .filter(|&i| x.at(i) * x.at(i + 1) != x.at(2 * i) * x.at(2 * i + 1))
        .collect();
    Ok(ClaimCheck { failures })
}

/// Claim (ii): p <= 2t+1 implies p is odd.
pub fn check_claim_ii(p: usize, t: usize) -> bool {
    p > 2 * t + 1 || p % 2 == 1
}

/// Claim (iii): pj+r <= 2t+1 with 1 <= r <= p implies
/// x_{p(j-1)+r} = x_{p(j-1)+1}. Returns the failing (j, r) pairs.
pub fn check_claim_iii(x: &BinarySequence, p: usize, t: usize) -> Result<ClaimCheck<(usize, usize)>> {
    let bound = 2 * t + 1;
    if bound > x.len() {
        return Err(Error::EquationOutOfRange {
            k: t,
            needed: bound,
            n: x.len(),
        });
    }
    if p == 0 {
        return Err(Error::StrideOutOfRange { p, n: x.len() });
    }
    let mut failures = Vec::new();
    for j in 1..=(2 * t) / p {
        let base = x.at(p * (j - 1) + 1);
        for r in 1..=p {
            if p * j + r > bound {
                break;
            }
            if x.at(p * (j - 1) + r) != base {
                failures.push((j, r));
            }
        }
    }
    Ok(ClaimCheck { failures })
}

/// Claim (iv): the derived sequence z satisfies equation (k) for every
/// integer 1 <= k <= floor(t/p). Returns the failing k values.
///
/// Vacuously holds when t < p. Errors when z is too short to evaluate
/// the largest required equation.
pub fn check_claim_iv(x: &BinarySequence, p: usize, t: usize) -> Result<ClaimCheck<usize>> {
    if p == 0 {
        return Err(Error::StrideOutOfRange { p, n: x.len() });
    }
    let k_bound = t / p;
    if k_bound == 0 {
        return Ok(ClaimCheck { failures: vec![] });
    }
    let z = derived_sequence(x, p)?;
    let needed = 2 * k_bound + 1;
    if needed > z.len() {
        return Err(Error::EquationOutOfRange {
            k: k_bound,
            needed,
            n: z.len(),
        });
    }
    let failures = (1..=k_bound)
        .filter(|&k| !satisfies_eq_k(&z, k).expect("z is long enough"))
        .collect();
    Ok(ClaimCheck { failures })
}

/// Why the Theorem 1 premise does not hold for a given (x, t).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PremiseFailure {
    /// 2t+1 exceeds the sequence length, so the equations up to t are not
    /// all evaluable.
    TooShort { needed: usize, n: usize },
    /// x_1 = -1.
    LeadingSignNegative,
    /// The sequence is constant +1, so x_{p+1} does not exist.
    NoSignChange,
    /// p = 1; the premise assumes p > 1.
    LeadingRunTooShort,
    /// Equation (k) fails for this k <= t.
    EquationFails { k: usize },
}

impl std::fmt::Display for PremiseFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PremiseFailure::TooShort { needed, n } => {
                write!(f, "equations up to t need {needed} elements, sequence has {n}")
            }
            PremiseFailure::LeadingSignNegative => write!(f, "x_1 = -1"),
            PremiseFailure::NoSignChange => write!(f, "sequence is constant +1, no x_(p+1)"),
            PremiseFailure::LeadingRunTooShort => write!(f, "leading run has p = 1, premise needs p > 1"),
            PremiseFailure::EquationFails { k } => write!(f, "equation ({k}) fails"),
        }
    }
}

/// A validated Theorem 1 premise: the sequence, the equation bound t, the
/// leading run length p, and the derived sequence z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Context {
    x: BinarySequence,
    t: usize,
    p: usize,
    z: BinarySequence,
}

impl Theorem1Context {
    /// Checks the premise: equations (1)..(t) hold, x starts with a run of
    /// p > 1 ones followed by -1.
    pub fn new(x: &BinarySequence, t: usize) -> std::result::Result<Self, PremiseFailure> {
        let n = x.len();
        let needed = 2 * t + 1;
        if needed > n {
            return Err(PremiseFailure::TooShort { needed, n });
        }
        if x.at(1) != Sign::Plus {
            return Err(PremiseFailure::LeadingSignNegative);
        }
        let p = leading_run(x).expect("x_1 = +1");
        if p == n {
            return Err(PremiseFailure::NoSignChange);
        }
        if p == 1 {
            return Err(PremiseFailure::LeadingRunTooShort);
        }
        for k in 1..=t {
            if !satisfies_eq_k(x, k).expect("2k+1 <= 2t+1 <= n") {
                return Err(PremiseFailure::EquationFails { k });
            }
        }
        let z = derived_sequence(x, p).expect("1 <= p < n");
        Ok(Theorem1Context {
            x: x.clone(),
            t,
            p,
            z,
        })
    }

    pub fn sequence(&self) -> &BinarySequence {
        &self.x
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn derived(&self) -> &BinarySequence {
        &self.z
    }
}

/// Verdicts for the premise and all four claims. Claim verdicts are `None`
/// when the premise failed (the claims are then not applicable).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Report {
    pub n: usize,
    pub t: usize,
    pub premise_ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub premise_failure: Option<PremiseFailure>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    pub claim_i_ok: Option<bool>,
    pub claim_ii_ok: Option<bool>,
    pub claim_iii_ok: Option<bool>,
    pub claim_iv_ok: Option<bool>,
    pub failing_i: Vec<usize>,
    pub failing_iii: Vec<(usize, usize)>,
    pub failing_iv_k: Vec<usize>,
}

impl Theorem1Report {
    /// Premise holds and every claim verdict is true.
    pub fn all_claims_hold(&self) -> bool {
        self.premise_ok
            && [self.claim_i_ok, self.claim_ii_ok, self.claim_iii_ok, self.claim_iv_ok]
                .iter()
                .all(|v| *v == Some(true))
    }

    /// Premise holds and at least one claim fails: the sequence is a
    /// counterexample to the theorem.
    pub fn falsified(&self) -> bool {
        self.premise_ok
            && [self.claim_i_ok, self.claim_ii_ok, self.claim_iii_ok, self.claim_iv_ok]
                .contains(&Some(false))
    }
}

/// Audits the premise and, when it holds, all four claims. Failures are
/// encoded in the report; this never errors.
pub fn theorem1_audit(x: &BinarySequence, t: usize) -> Theorem1Report {
    let n = x.len();
    match Theorem1Context::new(x, t) {
        Err(failure) => {
            let p = leading_run(x).ok().filter(|&p| p < n && p > 1);
            Theorem1Report {
                n,
                t,
                premise_ok: false,
                premise_failure: Some(failure),
                p,
                claim_i_ok: None,
                claim_ii_ok: None,
                claim_iii_ok: None,
                claim_iv_ok: None,
                failing_i: vec![],
                failing_iii: vec![],
                failing_iv_k: vec![],
            }
        }
        Ok(ctx) => {
            let p = ctx.p();
            let claim_i = check_claim_i(x, t).expect("2t+1 <= n by premise");
            let claim_ii = check_claim_ii(p, t);
            let claim_iii = check_claim_iii(x, p, t).expect("2t+1 <= n by premise");
            let claim_iv = check_claim_iv(x, p, t)
                .expect("z of a premise-satisfying sequence is long enough");
            Theorem1Report {
                n,
                t,
                premise_ok: true,
                premise_failure: None,
                p: Some(p),
                claim_i_ok: Some(claim_i.holds()),
                claim_ii_ok: Some(claim_ii),
                claim_iii_ok: Some(claim_iii.holds()),
                claim_iv_ok: Some(claim_iv.holds()),
                failing_i: claim_i.failures,
                failing_iii: claim_iii.failures,
                failing_iv_k: claim_iv.failures,
            }
        }
    }
}
