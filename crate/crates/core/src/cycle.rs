//! Rotation machinery for counting sequences.
//!
//! Any sequence with nonnegative final sum can be rotated into a weak-lead
//! sequence by cutting at the first minimum of its partial sums. On a
//! weak-lead base, the offsets whose rotation stays weak-lead are exactly
//! the positions whose partial sum is a weak suffix minimum; counting them
//! gives the rotation lower bounds that drive the probability bounds.

use crate::ballot::{partial_tallies, Vote, VoteSequence, WeightedWalk};
use crate::enumeration::{
    count_exact_with_budget, is_cute, is_desirable, vote_sequences, ExactCounts,
    DEFAULT_ENUM_BUDGET,
};
use crate::error::{Error, Result};
use crate::ratio::{big_to_u64, Ratio};
use crate::BallotSpec;

/// A canonically rotated sequence together with its rotation structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationAnalysis {
    /// The canonical weak-lead rotation of the input.
    pub base_sequence: VoteSequence,
    /// How far the input was rotated to produce the base.
    pub pivot_index: u64,
    /// Partial sums of the base sequence.
    pub prefix_sums: Vec<Ratio>,
    /// Offsets `r` in `[1, a+b]` whose rotation of the base is cute;
    /// `r = a+b` is the identity, so the base itself appears here.
    pub cute_rotation_offsets: Vec<u64>,
    /// Offsets whose rotation of the base is desirable.
    pub desirable_rotation_offsets: Vec<u64>,
}

fn prefix_sums(seq: &VoteSequence, mu: &Ratio) -> Vec<Ratio> {
    partial_tallies(seq, mu).into_iter().map(|t| t.s_r).collect()
}

/// Rotate `seq` at the first minimum of its partial sums, producing a cute
/// sequence. Fails when the final sum `a - mu*b` is negative: then every
/// rotation ends below zero and none can be cute.
pub fn canonical_cute_rotation(seq: &VoteSequence, mu: &Ratio) -> Result<(u64, VoteSequence)> {
    let sums = prefix_sums(seq, mu);
    if sums.last().expect("nonempty sequence").is_negative() {
        return Err(Error::NotRotatableToCute);
    }
    let mut pivot = 1;
    for (i, s) in sums.iter().enumerate().skip(1) {
        if s < &sums[pivot - 1] {
            pivot = i + 1;
        }
    }
    let rotated = seq.rotate(pivot);
    debug_assert!(is_cute(&rotated, mu));
    Ok((pivot as u64, rotated))
}

/// The offsets `r` in `[1, a+b]` whose rotation of a cute base sequence is
/// again cute: exactly those with `S'_r <= S'_t` for every `t > r`.
///
/// Fails when the base is not cute; the suffix-minimum characterization
/// only holds from a cute base.
pub fn cute_rotation_offsets(base: &VoteSequence, mu: &Ratio) -> Result<Vec<u64>> {
    let sums = prefix_sums(base, mu);
    if sums.iter().any(Ratio::is_negative) {
        return Err(Error::Precondition(
            "rotation offsets need a cute base sequence".into(),
        ));
    }
    let mut offsets = Vec::new();
    let mut suffix_min: Option<&Ratio> = None;
    for (i, s) in sums.iter().enumerate().rev() {
        if suffix_min.is_none_or(|m| s <= m) {
            offsets.push(i as u64 + 1);
            suffix_min = Some(s);
        }
    }
    offsets.reverse();
    Ok(offsets)
}

/// Analyze all rotations of `seq`: canonical rotation, then the cute and
/// desirable offset sets of the resulting base.
pub fn analyze_rotations(seq: &VoteSequence, mu: &Ratio) -> Result<RotationAnalysis> {
    let (pivot_index, base_sequence) = canonical_cute_rotation(seq, mu)?;
    let prefix_sums = prefix_sums(&base_sequence, mu);
    let cute_rotation_offsets = cute_rotation_offsets(&base_sequence, mu)?;
    let desirable_rotation_offsets = (1..=base_sequence.len() as u64)
        .filter(|&r| is_desirable(&base_sequence.rotate(r as usize), mu))
        .collect();
    Ok(RotationAnalysis {
        base_sequence,
        pivot_index,
        prefix_sums,
        cute_rotation_offsets,
        desirable_rotation_offsets,
    })
}

/// Rotation counts of one sequence next to their lower bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationCountReport {
    /// Number of rotations examined: one per offset in `[1, a+b]`.
    pub total_rotations: u64,
    pub cute_rotations: u64,
    pub desirable_rotations: u64,
    /// `min(floor(a - mu*b + 1), a+b)`, present when `a >= mu*b`.
    pub cute_bound: Option<u64>,
    /// `a - floor(mu*b)`, present when `a > mu*b`.
    pub desirable_bound: Option<u64>,
    /// Every applicable bound holds.
    pub passed: bool,
}

/// Count the cute and desirable rotations of `seq` by direct evaluation
/// and compare them against the rotation lower bounds. The cute bound is
/// clamped by the number of rotations, which only matters for `b = 0`
/// where the raw floor is `a + 1`.
pub fn rotation_count_bounds_check(seq: &VoteSequence, mu: &Ratio) -> RotationCountReport {
    let spec = seq
        .spec_with(mu.clone())
        .expect("sequence counts make a valid spec");
    let n = spec.total_votes();
    let mut cute_rotations = 0;
    let mut desirable_rotations = 0;
    for r in 1..=n {
        let rotated = seq.rotate(r as usize);
        if is_desirable(&rotated, mu) {
            desirable_rotations += 1;
        }
        if is_cute(&rotated, mu) {
            cute_rotations += 1;
        }
    }
    let cute_bound = spec.weak_lead().then(|| {
        let raw = (spec.final_sum() + Ratio::one()).floor();
        big_to_u64(&raw).expect("floor of a + 1 fits u64").min(n)
    });
    let desirable_bound = spec.strict_lead().then(|| {
        let floored = (&spec.mu * Ratio::from(spec.b)).floor();
        spec.a - big_to_u64(&floored).expect("floor below a fits u64")
    });
    let passed = cute_bound.is_none_or(|bound| cute_rotations >= bound)
        && desirable_bound.is_none_or(|bound| desirable_rotations >= bound);
    RotationCountReport {
        total_rotations: n,
        cute_rotations,
        desirable_rotations,
        cute_bound,
        desirable_bound,
        passed,
    }
}

/// Aggregate rotation counts over every sequence of an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationAverageReport {
    pub counts: ExactCounts,
    /// Sum over all sequences of their cute rotation count.
    pub cute_rotation_sum: u64,
    pub desirable_rotation_sum: u64,
    /// Both sums equal `(a+b)` times the corresponding sequence count.
    pub holds: bool,
}

/// Verify the averaging identity behind the rotation bounds: summing cute
/// rotations over all sequences counts each cute sequence once per offset,
/// so the sum is `(a+b)` times the number of cute sequences; likewise for
/// desirable.
pub fn rotation_average_identity_check(spec: &BallotSpec) -> Result<RotationAverageReport> {
    rotation_average_identity_check_with_budget(spec, DEFAULT_ENUM_BUDGET)
}

pub fn rotation_average_identity_check_with_budget(
    spec: &BallotSpec,
    budget: u64,
) -> Result<RotationAverageReport> {
    let counts = count_exact_with_budget(spec, budget)?;
    let n = spec.total_votes();
    let mut cute_rotation_sum = 0u64;
    let mut desirable_rotation_sum = 0u64;
    let mut walk = WeightedWalk::new(&spec.mu, n);
    let mut rotated: Vec<Vote> = Vec::with_capacity(n as usize);
    for seq in vote_sequences(spec.a, spec.b) {
        for r in 1..=n as usize {
            rotated.clear();
            rotated.extend_from_slice(&seq.votes()[r..]);
            rotated.extend_from_slice(&seq.votes()[..r]);
            let class = crate::ballot::classify_votes(&mut walk, rotated.iter().copied());
            if class.desirable {
                desirable_rotation_sum += 1;
            }
            if class.cute {
                cute_rotation_sum += 1;
            }
        }
    }
    let holds = cute_rotation_sum == n * counts.cute
        && desirable_rotation_sum == n * counts.desirable;
    Ok(RotationAverageReport {
        counts,
        cute_rotation_sum,
        desirable_rotation_sum,
        holds,
    })
}
