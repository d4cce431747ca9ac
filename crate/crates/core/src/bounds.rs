//! Probability bounds and closed forms.
//!
//! The floor-sandwich bounds for the strict-lead probability P and the
//! weak-lead probability P*, the classical integer-ratio closed forms,
//! the weighted-variant bounds, the prefix-replacement counting
//! inequalities as checkable predicates, and a tightness scanner.

use num::bigint::{BigInt, BigUint};

use crate::ballot::BallotSpec;
use crate::binomial::binomial;
use crate::enumeration::{count_exact_with_budget, ExactCounts, WeightedBallotSpec};
use crate::error::{Error, Result};
use crate::ratio::Ratio;

/// A lower/upper pair of exact bounds on a probability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundPair {
    pub lower: Ratio,
    pub upper: Ratio,
}

/// Floor-sandwich bounds for the strict-lead probability:
/// `(a - floor(mu*b)) / (a+b) <= P <= (a - floor(mu)*b) / (a+b)`.
///
/// Stated on the domain `a > mu*b`; outside it P is zero and the upper
/// bound can go negative, so the instance is rejected instead.
pub fn theorem1_bounds(spec: &BallotSpec) -> Result<BoundPair> {
    if !spec.strict_lead() {
        return Err(Error::DomainViolation("theorem 1 requires a > mu*b"));
    }
    let n = BigInt::from(spec.total_votes());
    let a = BigInt::from(spec.a);
    let mu_b = (&spec.mu * Ratio::from(spec.b)).floor();
    let lower = Ratio::new(&a - mu_b, n.clone()).expect("n >= 1");
    let upper = Ratio::new(&a - spec.mu.floor() * BigInt::from(spec.b), n).expect("n >= 1");
    Ok(BoundPair { lower, upper })
}

/// Floor-sandwich bounds for the weak-lead probability:
/// `floor(a - mu*b + 1) / (a+b) <= P* <= (a + 1 - mu*b) / (a+1)`.
///
/// Stated on the domain `a >= mu*b`. With `b = 0` the raw floor
/// expression evaluates to `(a+1)/a`, above any probability, so the lower
/// bound is clamped to the trivial bound 1 there; for `b >= 1` the clamp
/// never engages.
pub fn theorem2_bounds(spec: &BallotSpec) -> Result<BoundPair> {
    if !spec.weak_lead() {
        return Err(Error::DomainViolation("theorem 2 requires a >= mu*b"));
    }
    let n = BigInt::from(spec.total_votes());
    let raw = (spec.final_sum() + Ratio::one()).floor();
    let lower = Ratio::new(raw, n).expect("n >= 1").min(Ratio::one());
    let upper = (Ratio::from(spec.a) + Ratio::one() - &spec.mu * Ratio::from(spec.b))
        / Ratio::from(spec.a + 1);
    Ok(BoundPair { lower, upper })
}

/// The integer-ratio closed forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForms {
    pub p: Ratio,
    pub p_star: Ratio,
}

/// For integer `mu`, the probabilities are known exactly:
/// `P = (a - mu*b)/(a+b)` on `a > mu*b` (zero otherwise) and
/// `P* = (a - mu*b + 1)/(a+1)` on `a >= mu*b` (zero otherwise).
/// Returns `None` for non-integer `mu`.
pub fn classical_closed_forms(spec: &BallotSpec) -> Option<ClosedForms> {
    if !spec.mu.is_integer() {
        return None;
    }
    let lead = spec.final_sum();
    let p = if lead.is_positive() {
        &lead / Ratio::from(spec.total_votes())
    } else {
        Ratio::zero()
    };
    let p_star = if !lead.is_negative() {
        (lead + Ratio::one()) / Ratio::from(spec.a + 1)
    } else {
        Ratio::zero()
    };
    Some(ClosedForms { p, p_star })
}

/// Bounds for the weighted variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedBounds {
    /// `(a - floor(mu*b)) / (a + b')`, clamped at zero.
    pub lower: Ratio,
    /// `a / (a + b')`: every strict-lead order starts with an A vote.
    pub upper: Ratio,
    /// `(a - floor(mu)*b) / (a + b')`, reported only when `mu` and every
    /// weight are integers; meaningful as an upper bound when `a > mu*b`.
    pub integer_upper: Option<Ratio>,
}

/// Bounds on the strict-lead probability when B's votes carry weights
/// summing to `b`.
pub fn weighted_bounds(wspec: &WeightedBallotSpec) -> WeightedBounds {
    let slots = Ratio::from(wspec.total_votes());
    let b = wspec.b();
    let raw = Ratio::from(BigInt::from(wspec.a) - (&wspec.mu * &b).floor()) / &slots;
    let lower = raw.max(Ratio::zero());
    let upper = Ratio::from(wspec.a) / &slots;
    let integer_upper = (wspec.mu.is_integer() && wspec.integer_weights()).then(|| {
        Ratio::from(BigInt::from(wspec.a) - wspec.mu.floor() * b.numer()) / &slots
    });
    WeightedBounds {
        lower,
        upper,
        integer_upper,
    }
}

/// One side-by-side inequality evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityCheck {
    pub lhs: Ratio,
    pub rhs: Ratio,
    /// `lhs >= rhs`.
    pub holds: bool,
}

impl InequalityCheck {
    fn at_least(lhs: Ratio, rhs: Ratio) -> InequalityCheck {
        let holds = lhs >= rhs;
        InequalityCheck { lhs, rhs, holds }
    }
}

/// Outcome of the prefix-replacement counting inequalities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionReport {
    /// For `a > mu*b`: number of non-strict-lead orders vs
    /// `(floor(mu)+1) * C(a+b-1, b-1)`. `None` when the domain condition
    /// fails.
    pub undesirable: Option<InequalityCheck>,
    /// For `a >= mu*b`: number of non-weak-lead orders vs
    /// `mu * C(a+b, b-1)`. `None` when the domain condition fails.
    pub ugly: Option<InequalityCheck>,
    /// Both applicable inequalities hold.
    pub passed: bool,
}

/// Check the counting inequalities behind the two upper bounds against
/// oracle counts for the same instance.
pub fn reflection_counting_check(spec: &BallotSpec, counts: &ExactCounts) -> ReflectionReport {
    let b = spec.b as i64;
    let undesirable = spec.strict_lead().then(|| {
        let lhs = Ratio::from(counts.total - counts.desirable);
        let factor = spec.mu.floor() + BigInt::from(1);
        let rhs = Ratio::from(factor * BigInt::from(binomial(spec.total_votes() - 1, b - 1)));
        InequalityCheck::at_least(lhs, rhs)
    });
    let ugly = spec.weak_lead().then(|| {
        let lhs = Ratio::from(counts.total - counts.cute);
        let rhs = &spec.mu * Ratio::from(BigInt::from(binomial(spec.total_votes(), b - 1)));
        InequalityCheck::at_least(lhs, rhs)
    });
    let passed = undesirable.iter().chain(ugly.iter()).all(|c| c.holds);
    ReflectionReport {
        undesirable,
        ugly,
        passed,
    }
}

/// Scan result for one instance.
#[derive(Debug, Clone)]
pub struct TightnessRecord {
    pub spec: BallotSpec,
    pub outcome: TightnessOutcome,
}

#[derive(Debug, Clone)]
pub enum TightnessOutcome {
    Evaluated(Box<TightnessReport>),
    /// Instance skipped: enumeration would exceed the budget.
    Skipped { needed: BigUint, budget: u64 },
}

/// Oracle values next to every applicable bound, with exact-equality
/// tightness flags.
#[derive(Debug, Clone)]
pub struct TightnessReport {
    pub counts: ExactCounts,
    pub theorem1: Option<BoundPair>,
    pub theorem2: Option<BoundPair>,
    pub t1_lower_tight: bool,
    pub t1_upper_tight: bool,
    pub t2_lower_tight: bool,
    pub t2_upper_tight: bool,
}

/// Evaluate oracle probabilities and both bound pairs over a grid of
/// instances, flagging exact equalities. Instances beyond the enumeration
/// budget are reported as skipped rather than aborting the scan; the
/// invalid corner `a = b = 0` is left out.
pub fn tightness_scan(
    a_range: impl IntoIterator<Item = u64> + Clone,
    b_range: impl IntoIterator<Item = u64> + Clone,
    mu_set: &[Ratio],
    budget: u64,
) -> Vec<TightnessRecord> {
    let mut records = Vec::new();
    for a in a_range {
        for b in b_range.clone() {
            if a + b == 0 {
                continue;
            }
            for mu in mu_set {
                let spec = BallotSpec::new(a, b, mu.clone()).expect("validated grid");
                let outcome = match count_exact_with_budget(&spec, budget) {
                    Ok(counts) => {
                        TightnessOutcome::Evaluated(Box::new(tightness_report(&spec, counts)))
                    }
                    Err(Error::BudgetExceeded { needed, budget }) => {
                        TightnessOutcome::Skipped { needed, budget }
                    }
                    Err(other) => unreachable!("oracle only fails on budget: {other}"),
                };
                records.push(TightnessRecord { spec: spec.clone(), outcome });
            }
        }
    }
    records
}

fn tightness_report(spec: &BallotSpec, counts: ExactCounts) -> TightnessReport {
    let theorem1 = theorem1_bounds(spec).ok();
    let theorem2 = theorem2_bounds(spec).ok();
    let t1_lower_tight = theorem1.as_ref().is_some_and(|p| p.lower == counts.p);
    let t1_upper_tight = theorem1.as_ref().is_some_and(|p| p.upper == counts.p);
    let t2_lower_tight = theorem2.as_ref().is_some_and(|p| p.lower == counts.p_star);
    let t2_upper_tight = theorem2.as_ref().is_some_and(|p| p.upper == counts.p_star);
    TightnessReport {
        counts,
        theorem1,
        theorem2,
        t1_lower_tight,
        t1_upper_tight,
        t2_lower_tight,
        t2_upper_tight,
    }
}
