//! Equation (k): the Turyn-Storer identity
//!
//! ```text
//! (1 + (-1)^(k+1)) / 2  =  sum_{i=1}^{k} (-1)^(i+1) x_i x_{2k+2-i}
//! ```
//!
//! The right-hand side touches x_1 through x_{2k+1} only, so whether a
//! sequence satisfies equation (k) is a property of its first 2k+1
//! elements ("prefix locality"). Evaluating the identity needs just
//! 2k+1 <= n; the stricter textbook domain k < (n-1)/2 is exposed as
//! [`k_max`] and enforced only where a maximal t is being derived.

use crate::error::{Error, Result};
use crate::seq::BinarySequence;

/// Left-hand side of equation (k): 1 for odd k, 0 for even k.
pub fn eq_k_lhs(k: usize) -> i64 {
    if k % 2 == 1 {
        1
    } else {
        0
    }
}

/// Right-hand side of equation (k): sum_{i=1}^{k} (-1)^(i+1) x_i x_{2k+2-i}.
pub fn eq_k_rhs(x: &BinarySequence, k: usize) -> Result<i64> {
    if k == 0 {
        return Err(Error::ZeroEquationIndex);
    }
    let needed = 2 * k + 1;
    if needed > x.len() {
        return Err(Error::EquationOutOfRange {
            k,
            needed,
            n: x.len(),
        });
    }
    let mut sum = 0i64;
    for i in 1..=k {
        let term = (x.at(i) * x.at(2 * k + 2 - i)).value();
        sum += if i % 2 == 1 { term } else { -term };
    }
    Ok(sum)
}

/// True when x satisfies equation (k). Needs 2k+1 <= n.
pub fn satisfies_eq_k(x: &BinarySequence, k: usize) -> Result<bool> {
    Ok(eq_k_rhs(x, k)? == eq_k_lhs(k))
}

/// Largest k with k < (n-1)/2, i.e. floor((n-2)/2); 0 when no equation
/// fits the strict domain.
pub fn k_max(n: usize) -> usize {
    n.saturating_sub(2) / 2
}

/// The largest t such that x satisfies equation (k) for all 1 <= k <= t,
/// capped at [`k_max`] of the length. Returns 0 when equation (1) already
/// fails.
pub fn max_t(x: &BinarySequence) -> usize {
    let cap = k_max(x.len());
    for k in 1..=cap {
        if !satisfies_eq_k(x, k).expect("k <= k_max(n) is evaluable") {
            return k - 1;
        }
    }
    cap
}

/// Every k in 1..=k_max(n) for which x satisfies equation (k).
pub fn eq_k_profile(x: &BinarySequence) -> Vec<usize> {
    (1..=k_max(x.len()))
        .filter(|&k| satisfies_eq_k(x, k).expect("k <= k_max(n) is evaluable"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rle::RunLengthEncoding;
    use crate::seq::Sign;

    fn seq(s: &str) -> BinarySequence {
        s.parse().unwrap()
    }

    #[test]
    fn lhs_alternates() {
        assert_eq!(eq_k_lhs(1), 1);
        assert_eq!(eq_k_lhs(2), 0);
        assert_eq!(eq_k_lhs(9), 1);
    }

    #[test]
    fn smallest_equation() {
        // Equation (1) reads x_1 x_3 = 1.
        assert!(satisfies_eq_k(&seq("+++"), 1).unwrap());
        assert!(!satisfies_eq_k(&seq("++-"), 1).unwrap());
    }

    #[test]
    fn counterexample_prefix_satisfies_eq_3() {
        let x = "+3,3,6,3,2,2"
            .parse::<RunLengthEncoding>()
            .unwrap()
            .decode()
            .padded_to(20, Sign::Plus)
            .unwrap();
        assert!(satisfies_eq_k(&x, 3).unwrap());
    }

    #[test]
    fn derived_z_fails_eq_3() {
        let z = seq("+-++-+-");
        assert_eq!(eq_k_rhs(&z, 3).unwrap(), -1);
        assert_eq!(eq_k_lhs(3), 1);
        assert!(!satisfies_eq_k(&z, 3).unwrap());
    }

    #[test]
    fn rhs_domain_checks() {
        let x = seq("+++++");
        assert_eq!(eq_k_rhs(&x, 0).unwrap_err(), Error::ZeroEquationIndex);
        assert_eq!(
            eq_k_rhs(&x, 3).unwrap_err(),
            Error::EquationOutOfRange {
                k: 3,
                needed: 7,
                n: 5
            }
        );
    }

    #[test]
    fn k_max_values() {
        assert_eq!(k_max(3), 0);
        assert_eq!(k_max(8), 3);
        assert_eq!(k_max(20), 9);
        assert_eq!(k_max(1), 0);
    }

    #[test]
    fn max_t_of_counterexample_prefix_is_9() {
        let x = "+3,3,6,3,2,2"
            .parse::<RunLengthEncoding>()
            .unwrap()
            .decode()
            .padded_to(20, Sign::Plus)
            .unwrap();
        assert_eq!(max_t(&x), 9);
    }

    #[test]
    fn max_t_of_constant_sequence_hits_cap() {
        // On the all-ones sequence the alternating sum telescopes to the
        // left-hand side, so every equation holds and the cap binds.
        for n in 3..=16 {
            let x = BinarySequence::repeated(Sign::Plus, n).unwrap();
            assert_eq!(max_t(&x), k_max(n), "n={n}");
        }
    }

    #[test]
    fn max_t_zero_when_eq_1_fails() {
        assert_eq!(max_t(&seq("++-++++")), 0);
    }

    #[test]
    fn profile_of_constant_sequence() {
        let x = BinarySequence::repeated(Sign::Plus, 8).unwrap();
        assert_eq!(eq_k_profile(&x), vec![1, 2, 3]);
    }

    #[test]
    fn profile_of_short_sequence_is_empty() {
        // k_max(3) = 0: no k lies in the strict domain.
        assert_eq!(eq_k_profile(&seq("++-")), Vec::<usize>::new());
    }

    #[test]
    fn barker_13_satisfies_every_equation_in_domain() {
        // Regression value from direct evaluation: the classic length-13
        // Barker sequence satisfies every equation the strict domain allows.
        let x = seq("+++++--++-+-+");
        assert_eq!(eq_k_profile(&x), vec![1, 2, 3, 4, 5]);
        assert_eq!(max_t(&x), k_max(13));
    }

    #[test]
    fn max_t_bounds_every_smaller_equation() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..200 {
            let n = rng.random_range(3..=32);
            let signs = (0..n)
                .map(|_| if rng.random::<bool>() { Sign::Plus } else { Sign::Minus })
                .collect();
            let x = BinarySequence::new(signs).unwrap();
            let t = max_t(&x);
            for k in 1..=t {
                assert!(satisfies_eq_k(&x, k).unwrap(), "k={k} <= max_t={t} on {x}");
            }
            if t < k_max(n) {
                assert!(!satisfies_eq_k(&x, t + 1).unwrap(), "max_t={t} not maximal on {x}");
            }
        }
    }
}
