//! Problem instances, vote sequences, and weighted partial sums.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ratio::Ratio;

/// A single vote in a counting order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Vote {
    A,
    B,
}

/// A problem instance: `a` unit votes for A, `b` unit votes for B, and the
/// lead ratio `mu` that A must maintain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallotSpec {
    pub a: u64,
    pub b: u64,
    pub mu: Ratio,
}

impl BallotSpec {
    /// Requires at least one vote and a nonnegative ratio.
    pub fn new(a: u64, b: u64, mu: Ratio) -> Result<Self> {
        if a + b == 0 {
            return Err(Error::Precondition("a + b must be at least 1".into()));
        }
        if mu.is_negative() {
            return Err(Error::Precondition("mu must be nonnegative".into()));
        }
        Ok(BallotSpec { a, b, mu })
    }

    pub fn total_votes(&self) -> u64 {
        self.a + self.b
    }

    /// `a - mu * b`: the final weighted sum shared by every counting order.
    pub fn final_sum(&self) -> Ratio {
        Ratio::from(self.a) - &self.mu * Ratio::from(self.b)
    }

    /// True when `a > mu * b` (a strict overall lead is possible).
    pub fn strict_lead(&self) -> bool {
        self.final_sum().is_positive()
    }

    /// True when `a >= mu * b`.
    pub fn weak_lead(&self) -> bool {
        !self.final_sum().is_negative()
    }
}

/// An ordered counting of votes; positions are 1-based in all reports.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VoteSequence {
    votes: Vec<Vote>,
}

impl VoteSequence {
    pub fn new(votes: Vec<Vote>) -> Result<Self> {
        if votes.is_empty() {
            return Err(Error::Precondition("sequence must be nonempty".into()));
        }
        Ok(VoteSequence { votes })
    }

    pub fn votes(&self) -> &[Vote] {
        &self.votes
    }

    pub fn len(&self) -> usize {
        self.votes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.votes.is_empty()
    }

    pub fn count_a(&self) -> u64 {
        self.votes.iter().filter(|v| **v == Vote::A).count() as u64
    }

    pub fn count_b(&self) -> u64 {
        self.len() as u64 - self.count_a()
    }

    /// The instance this sequence realizes under the given ratio.
    pub fn spec_with(&self, mu: Ratio) -> Result<BallotSpec> {
        BallotSpec::new(self.count_a(), self.count_b(), mu)
    }

    /// Rotation by `r`: erase the first `r` votes and attach them at the
    /// end. `r = len` (and `r = 0`) is the identity.
    pub fn rotate(&self, r: usize) -> VoteSequence {
        let r = r % self.votes.len();
        let mut votes = Vec::with_capacity(self.votes.len());
        votes.extend_from_slice(&self.votes[r..]);
        votes.extend_from_slice(&self.votes[..r]);
        VoteSequence { votes }
    }
}

impl FromStr for VoteSequence {
    type Err = Error;

    /// Canonical text form: a nonempty string over `{A, B}`.
    fn from_str(s: &str) -> Result<Self> {
        let votes = s
            .chars()
            .map(|c| match c {
                'A' => Ok(Vote::A),
                'B' => Ok(Vote::B),
                other => Err(Error::Parse(format!(
                    "invalid vote `{other}`: expected `A` or `B`"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        VoteSequence::new(votes)
    }
}

impl fmt::Display for VoteSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.votes {
            f.write_str(match v {
                Vote::A => "A",
                Vote::B => "B",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for VoteSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VoteSequence({self})")
    }
}

/// State after counting the `r`-th vote: running tallies and the weighted
/// partial sum `S_r = a_r - mu * b_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialTally {
    /// 1-based position.
    pub r: u64,
    pub a_r: u64,
    pub b_r: u64,
    pub s_r: Ratio,
}

/// Weighted partial sums for every prefix of `seq`, computed exactly.
pub fn partial_tallies(seq: &VoteSequence, mu: &Ratio) -> Vec<PartialTally> {
    let mut tallies = Vec::with_capacity(seq.len());
    let mut a_r = 0u64;
    let mut b_r = 0u64;
    let mut s_r = Ratio::zero();
    for (i, vote) in seq.votes().iter().enumerate() {
        match vote {
            Vote::A => {
                a_r += 1;
                s_r = s_r + Ratio::one();
            }
            Vote::B => {
                b_r += 1;
                s_r = s_r - mu;
            }
        }
        tallies.push(PartialTally {
            r: i as u64 + 1,
            a_r,
            b_r,
            s_r: s_r.clone(),
        });
    }
    tallies
}

/// Incremental sign tracker for the weighted partial sum.
///
/// Scales the walk by the denominator of `mu = p/q`, so each step is an
/// integer add: `w_r = q*a_r - p*b_r` has the same sign as `S_r`. Uses
/// native `i128` arithmetic when `p` and `q` are small enough that the walk
/// cannot overflow at the stated length, and heap integers otherwise; the
/// two paths are both exact and agree bit for bit.
#[derive(Debug, Clone)]
pub(crate) enum WeightedWalk {
    Native { p: i128, q: i128, w: i128 },
    Big { p: BigInt, q: BigInt, w: BigInt },
}

impl WeightedWalk {
    /// `mu` must be nonnegative; `max_len` bounds how many steps will run.
    pub(crate) fn new(mu: &Ratio, max_len: u64) -> WeightedWalk {
        debug_assert!(!mu.is_negative());
        let p = mu.numer().to_u64();
        let q = mu.denom().to_u64();
        if let (Some(p), Some(q)) = (p, q) {
            let step = p.max(q) as u128;
            if (max_len as u128).checked_mul(step).is_some_and(|m| m < i128::MAX as u128) {
                return WeightedWalk::Native {
                    p: p as i128,
                    q: q as i128,
                    w: 0,
                };
            }
        }
        WeightedWalk::Big {
            p: mu.numer().clone(),
            q: mu.denom().clone(),
            w: BigInt::zero(),
        }
    }

    pub(crate) fn reset(&mut self) {
        match self {
            WeightedWalk::Native { w, .. } => *w = 0,
            WeightedWalk::Big { w, .. } => w.set_zero(),
        }
    }

    pub(crate) fn step(&mut self, vote: Vote) {
        match self {
            WeightedWalk::Native { p, q, w } => match vote {
                Vote::A => *w += *q,
                Vote::B => *w -= *p,
            },
            WeightedWalk::Big { p, q, w } => match vote {
                Vote::A => *w += &*q,
                Vote::B => *w -= &*p,
            },
        }
    }

    pub(crate) fn is_positive(&self) -> bool {
        match self {
            WeightedWalk::Native { w, .. } => *w > 0,
            WeightedWalk::Big { w, .. } => w.is_positive(),
        }
    }

    pub(crate) fn is_negative(&self) -> bool {
        match self {
            WeightedWalk::Native { w, .. } => *w < 0,
            WeightedWalk::Big { w, .. } => w.is_negative(),
        }
    }
}

/// Outcome of classifying one counting order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Classification {
    pub desirable: bool,
    pub cute: bool,
}

/// Classify the votes produced by `iter` in counting order. Desirable
/// means the weighted sum stays strictly positive at every prefix; cute
/// means it never goes negative.
pub(crate) fn classify_votes(
    walk: &mut WeightedWalk,
    iter: impl IntoIterator<Item = Vote>,
) -> Classification {
    walk.reset();
    let mut desirable = true;
    for vote in iter {
        walk.step(vote);
        if walk.is_negative() {
            return Classification {
                desirable: false,
                cute: false,
            };
        }
        if !walk.is_positive() {
            desirable = false;
        }
    }
    Classification {
        desirable,
        cute: true,
    }
}
