//! Arbitrary-precision binomial and multinomial coefficients.

use num::bigint::{BigInt, BigUint};
use num::traits::{One, Zero};

/// Binomial coefficient `C(n, k)` with the usual counting convention:
/// zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut result = BigUint::one();
    for i in 0..k {
        // Exact at every step: result holds C(n, i) and C(n, i+1) divides evenly.
        result = result * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    result
}

/// `C(n, k)` for an arbitrary-precision nonnegative `n`. Needed by the
/// coefficient recurrence, where `n` grows with the ratio.
pub(crate) fn binomial_big(n: &BigInt, k: i64) -> BigInt {
    debug_assert!(n >= &BigInt::zero());
    if k < 0 || BigInt::from(k) > *n {
        return BigInt::zero();
    }
    let mut result = BigInt::one();
    for i in 0..k as u64 {
        result = result * (n - BigInt::from(i)) / BigInt::from(i + 1);
    }
    result
}

/// Number of distinct arrangements of a multiset with the given group
/// sizes: `(sum counts)! / prod(counts!)`, evaluated without factorials.
pub fn multinomial(counts: &[u64]) -> BigUint {
    let mut result = BigUint::one();
    let mut placed = 0u64;
    for &c in counts {
        placed += c;
        // Choose positions for this group among the slots used so far.
        result *= binomial(placed, c as i64);
    }
    result
}
