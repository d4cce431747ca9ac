//! Exact evaluation of the Takacs series for the strict-lead probability.
//!
//! The series expresses P through rational coefficients `C_0, C_1, ...`
//! defined by a recurrence in which the floor of `k * mu` enters each
//! denominator. Everything here is exact rational arithmetic.

use num::bigint::BigInt;

use crate::ballot::BallotSpec;
use crate::binomial::binomial_big;
use crate::error::{Error, Result};
use crate::ratio::Ratio;

/// The coefficient prefix `C_0 ..= C_m` for a fixed ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TakacsCoefficients {
    pub mu: Ratio,
    values: Vec<Ratio>,
}

impl TakacsCoefficients {
    pub fn values(&self) -> &[Ratio] {
        &self.values
    }

    /// Left-hand side of the defining recurrence at index `k`:
    /// `sum_{j=0..k} C_j * C(k, j) / C(floor(k*mu) + k - 1, j)`.
    /// Zero for every `1 <= k <= m` when the coefficients are correct.
    pub fn residual(&self, k: u64) -> Ratio {
        assert!(k >= 1, "the recurrence has no instance at k = 0");
        assert!(
            (k as usize) < self.values.len(),
            "residual index {k} out of computed range"
        );
        let n_k = pivot_row(&self.mu, k);
        let mut sum = Ratio::zero();
        for j in 0..=k {
            sum = sum + series_term(&self.values[j as usize], k, j, &n_k);
        }
        sum
    }
}

/// Row index `floor(k*mu) + k - 1` whose binomials divide the k-th
/// recurrence instance.
fn pivot_row(mu: &Ratio, k: u64) -> BigInt {
    (Ratio::from(k) * mu).floor() + BigInt::from(k) - BigInt::from(1)
}

/// `c * C(k, j) / C(n, j)`, exact. `n >= k` is guaranteed by the callers.
fn series_term(c: &Ratio, k: u64, j: u64, n: &BigInt) -> Ratio {
    let num = binomial_big(&BigInt::from(k), j as i64);
    let den = binomial_big(n, j as i64);
    debug_assert!(den > BigInt::from(0));
    c * &Ratio::from(num) / Ratio::from(den)
}

/// Solve the recurrence for `C_0 ..= C_m`.
///
/// Requires `mu >= 1`: below one, `floor(k*mu)` vanishes at `k = 1` and
/// the pivot binomial `C(floor(k*mu) + k - 1, k)` is zero, so the
/// recurrence cannot be solved for `C_k`.
pub fn takacs_coefficients(mu: &Ratio, m: u64) -> Result<TakacsCoefficients> {
    let mut values = vec![Ratio::one()];
    for k in 1..=m {
        let n_k = pivot_row(mu, k);
        let pivot = binomial_big(&n_k, k as i64);
        if pivot == BigInt::from(0) {
            return Err(Error::DegenerateRecurrence { k });
        }
        let mut acc = Ratio::zero();
        for j in 0..k {
            acc = acc + series_term(&values[j as usize], k, j, &n_k);
        }
        values.push(-(acc * Ratio::from(pivot)));
    }
    Ok(TakacsCoefficients {
        mu: mu.clone(),
        values,
    })
}

/// Exact strict-lead probability via the series
/// `P = a/(a+b) * sum_{j=0..b} C_j * C(b, j) / C(a+b-1, j)`.
///
/// Requires `mu >= 1` (coefficient recurrence) and `a >= 1` (the series
/// denominators `C(a+b-1, j)` must not vanish for `j <= b`).
pub fn takacs_probability(spec: &BallotSpec) -> Result<Ratio> {
    if spec.a == 0 {
        return Err(Error::Precondition(
            "series evaluation requires a >= 1".into(),
        ));
    }
    let coefficients = takacs_coefficients(&spec.mu, spec.b)?;
    let row = BigInt::from(spec.total_votes() - 1);
    let mut sum = Ratio::zero();
    for j in 0..=spec.b {
        sum = sum + series_term(&coefficients.values()[j as usize], spec.b, j, &row);
    }
    let prefactor = Ratio::new(spec.a.into(), spec.total_votes().into()).expect("a + b >= 1");
    Ok(prefactor * sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::count_exact;

    fn r(s: &str) -> Ratio {
        s.parse().unwrap()
    }

    fn spec(a: u64, b: u64, mu: &str) -> BallotSpec {
        BallotSpec::new(a, b, r(mu)).unwrap()
    }

    fn values(mu: &str, m: u64) -> Vec<Ratio> {
        takacs_coefficients(&r(mu), m).unwrap().values().to_vec()
    }

    #[test]
    fn coefficients_by_hand() {
        assert_eq!(values("2", 2), vec![r("1"), r("-2"), r("-2")]);
        assert_eq!(values("3/2", 2), vec![r("1"), r("-1"), r("-3")]);
        assert_eq!(values("7", 0), vec![r("1")]);
        assert_eq!(values("1", 1), vec![r("1"), r("-1")]);
    }

    #[test]
    fn residuals_vanish() {
        for mu in ["1", "4/3", "3/2", "2", "7/3", "3", "10"] {
            let coeffs = takacs_coefficients(&r(mu), 8).unwrap();
            for k in 1..=8 {
                assert!(coeffs.residual(k).is_zero(), "mu={mu} k={k}");
            }
        }
    }

    #[test]
    fn degenerate_below_one() {
        let err = takacs_coefficients(&r("1/2"), 3).unwrap_err();
        assert_eq!(err, Error::DegenerateRecurrence { k: 1 });
        let err = takacs_probability(&spec(5, 2, "2/3")).unwrap_err();
        assert_eq!(err, Error::DegenerateRecurrence { k: 1 });
        // mu = 1 is the smallest admissible ratio.
        assert!(takacs_coefficients(&r("1"), 5).is_ok());
    }

    #[test]
    fn probability_anchors() {
        assert_eq!(takacs_probability(&spec(5, 2, "2")).unwrap(), r("1/7"));
        assert_eq!(takacs_probability(&spec(5, 2, "3/2")).unwrap(), r("1/3"));
        assert_eq!(takacs_probability(&spec(1, 0, "9/2")).unwrap(), r("1"));
    }

    #[test]
    fn matches_oracle_on_spot_checks() {
        for (a, b, mu) in [(5u64, 2u64, "3/2"), (4, 3, "1"), (7, 3, "2"), (6, 2, "5/2")] {
            let s = spec(a, b, mu);
            let series = takacs_probability(&s).unwrap();
            let oracle = count_exact(&s).unwrap().p;
            assert_eq!(series, oracle, "a={a} b={b} mu={mu}");
        }
    }

    #[test]
    fn zero_a_rejected() {
        let err = takacs_probability(&spec(0, 2, "1")).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn huge_ratio_stays_exact() {
        // floor(k*mu) pushes the pivot row far beyond u64 territory.
        let mu = r("123456789012345678901234567890");
        let coeffs = takacs_coefficients(&mu, 3).unwrap();
        for k in 1..=3 {
            assert!(coeffs.residual(k).is_zero(), "k={k}");
        }
    }
}
