//! Brute-force exact oracle.
//!
//! Classifies every counting order of an instance by direct evaluation of
//! its weighted partial sums. Deliberately free of closed-form shortcuts:
//! the point of this module is to be independent of the formulas and
//! bounds it is used to validate.

use num::bigint::BigUint;
use num::traits::ToPrimitive;

use crate::ballot::{classify_votes, BallotSpec, Vote, VoteSequence, WeightedWalk};
use crate::binomial::{binomial, multinomial};
use crate::error::{Error, Result};
use crate::ratio::Ratio;

/// Default cap on the number of arrangements an exhaustive call may visit.
pub const DEFAULT_ENUM_BUDGET: u64 = 10_000_000;

/// True when A stays strictly ahead of `mu` times B at every prefix,
/// including the full count.
pub fn is_desirable(seq: &VoteSequence, mu: &Ratio) -> bool {
    let mut walk = WeightedWalk::new(mu, seq.len() as u64);
    classify_votes(&mut walk, seq.votes().iter().copied()).desirable
}

/// True when A never falls behind `mu` times B at any prefix.
pub fn is_cute(seq: &VoteSequence, mu: &Ratio) -> bool {
    let mut walk = WeightedWalk::new(mu, seq.len() as u64);
    classify_votes(&mut walk, seq.votes().iter().copied()).cute
}

/// Exhaustive classification result for one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactCounts {
    /// Number of distinct counting orders.
    pub total: u64,
    /// Orders in which A leads strictly throughout.
    pub desirable: u64,
    /// Orders in which A leads weakly throughout.
    pub cute: u64,
    /// `desirable / total`, exact.
    pub p: Ratio,
    /// `cute / total`, exact.
    pub p_star: Ratio,
}

impl ExactCounts {
    fn from_tallies(total: u64, desirable: u64, cute: u64) -> ExactCounts {
        ExactCounts {
            total,
            desirable,
            cute,
            p: Ratio::new(desirable.into(), total.into()).expect("total >= 1"),
            p_star: Ratio::new(cute.into(), total.into()).expect("total >= 1"),
        }
    }
}

/// Iterator over every counting order of `a` A-votes and `b` B-votes, in
/// lexicographic order of the A-vote positions. The space is binomial in
/// size; pair with a budget check before walking large instances.
pub fn vote_sequences(a: u64, b: u64) -> impl Iterator<Item = VoteSequence> {
    Combinations::new(a, a + b).map(move |positions| {
        let n = (a + b) as usize;
        let mut votes = vec![Vote::B; n];
        for &p in &positions {
            votes[p as usize] = Vote::A;
        }
        VoteSequence::new(votes).expect("n >= 1")
    })
}

/// Lexicographic k-subsets of `0..n`, emitted as sorted index vectors.
struct Combinations {
    k: u64,
    n: u64,
    state: Option<Vec<u64>>,
}

impl Combinations {
    fn new(k: u64, n: u64) -> Combinations {
        debug_assert!(k <= n);
        Combinations {
            k,
            n,
            state: Some((0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.state.take()?;
        let mut next = current.clone();
        let k = self.k as usize;
        let mut i = k;
        loop {
            if i == 0 {
                // current was the last combination.
                return Some(current);
            }
            i -= 1;
            // Largest value slot i may hold.
            if next[i] < self.n - (self.k - i as u64) {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.state = Some(next);
                return Some(current);
            }
        }
    }
}

/// Classify every counting order of `spec` under the default budget.
pub fn count_exact(spec: &BallotSpec) -> Result<ExactCounts> {
    count_exact_with_budget(spec, DEFAULT_ENUM_BUDGET)
}

/// Classify every counting order of `spec`, refusing instances whose
/// arrangement count exceeds `budget`.
pub fn count_exact_with_budget(spec: &BallotSpec, budget: u64) -> Result<ExactCounts> {
    let n = spec.total_votes();
    let needed = binomial(n, spec.a as i64);
    let total = checked_budget(&needed, budget)?;

    let mut walk = WeightedWalk::new(&spec.mu, n);
    let mut visited = 0u64;
    let mut desirable = 0u64;
    let mut cute = 0u64;
    let n_usize = n as usize;
    for positions in Combinations::new(spec.a, n) {
        let mut next_a = 0usize;
        let c = classify_votes(
            &mut walk,
            (0..n_usize).map(|r| {
                if next_a < positions.len() && positions[next_a] == r as u64 {
                    next_a += 1;
                    Vote::A
                } else {
                    Vote::B
                }
            }),
        );
        visited += 1;
        desirable += c.desirable as u64;
        cute += c.cute as u64;
    }
    debug_assert_eq!(visited, total);
    Ok(ExactCounts::from_tallies(visited, desirable, cute))
}

fn checked_budget(needed: &BigUint, budget: u64) -> Result<u64> {
    match needed.to_u64() {
        Some(t) if t <= budget => Ok(t),
        _ => Err(Error::BudgetExceeded {
            needed: needed.clone(),
            budget,
        }),
    }
}

/// Instance in which B's votes carry positive weights: A casts `a` unit
/// votes, B casts `weights.len()` votes summing to `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedBallotSpec {
    pub a: u64,
    /// B's vote weights, kept sorted ascending; all strictly positive.
    weights: Vec<Ratio>,
    pub mu: Ratio,
}

impl WeightedBallotSpec {
    pub fn new(a: u64, mut weights: Vec<Ratio>, mu: Ratio) -> Result<Self> {
        if a as usize + weights.len() == 0 {
            return Err(Error::Precondition("a + b' must be at least 1".into()));
        }
        if mu.is_negative() {
            return Err(Error::Precondition("mu must be nonnegative".into()));
        }
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::Precondition(
                "all weights must be strictly positive".into(),
            ));
        }
        weights.sort();
        Ok(WeightedBallotSpec { a, weights, mu })
    }

    pub fn weights(&self) -> &[Ratio] {
        &self.weights
    }

    /// Total B weight (the `b` of the unweighted problem).
    pub fn b(&self) -> Ratio {
        self.weights
            .iter()
            .fold(Ratio::zero(), |acc, w| acc + w)
    }

    /// Number of B votes.
    pub fn b_prime(&self) -> u64 {
        self.weights.len() as u64
    }

    pub fn total_votes(&self) -> u64 {
        self.a + self.b_prime()
    }

    /// True when every weight is an integer.
    pub fn integer_weights(&self) -> bool {
        self.weights.iter().all(|w| w.is_integer())
    }

    /// Distinct weight values with multiplicities, ascending.
    fn grouped_weights(&self) -> Vec<(Ratio, u64)> {
        let mut groups: Vec<(Ratio, u64)> = Vec::new();
        for w in &self.weights {
            match groups.last_mut() {
                Some((value, count)) if value == w => *count += 1,
                _ => groups.push((w.clone(), 1)),
            }
        }
        groups
    }

    /// Number of distinct arrangements of the a + b' votes.
    pub fn arrangement_count(&self) -> BigUint {
        let mut counts = vec![self.a];
        counts.extend(self.grouped_weights().iter().map(|(_, c)| *c));
        multinomial(&counts)
    }
}

/// Classify every arrangement of a weighted instance under the default
/// budget.
pub fn count_exact_weighted(wspec: &WeightedBallotSpec) -> Result<ExactCounts> {
    count_exact_weighted_with_budget(wspec, DEFAULT_ENUM_BUDGET)
}

/// Weighted analogue of [`count_exact_with_budget`].
///
/// All a + b' votes are distinguishable and counted in uniform random
/// order. Equal weights make orderings collide on the same arrangement in
/// equal numbers (`a! * prod(multiplicity!)` orderings each), so the
/// distinct arrangements are themselves equally likely and it suffices to
/// enumerate each one once.
pub fn count_exact_weighted_with_budget(
    wspec: &WeightedBallotSpec,
    budget: u64,
) -> Result<ExactCounts> {
    let needed = wspec.arrangement_count();
    checked_budget(&needed, budget)?;

    // Symbol 0 is an A-vote; the rest are the distinct B weights.
    let groups = wspec.grouped_weights();
    let mut remaining = Vec::with_capacity(groups.len() + 1);
    let mut steps = Vec::with_capacity(groups.len() + 1);
    remaining.push(wspec.a);
    steps.push(Ratio::one());
    for (value, count) in &groups {
        remaining.push(*count);
        steps.push(-(&wspec.mu * value));
    }

    let mut enumerator = WeightedEnumerator {
        remaining,
        steps,
        total: 0,
        desirable: 0,
        cute: 0,
    };
    enumerator.run(wspec.total_votes(), &Ratio::zero(), true, true);
    debug_assert_eq!(BigUint::from(enumerator.total), needed);
    Ok(ExactCounts::from_tallies(
        enumerator.total,
        enumerator.desirable,
        enumerator.cute,
    ))
}

struct WeightedEnumerator {
    remaining: Vec<u64>,
    steps: Vec<Ratio>,
    total: u64,
    desirable: u64,
    cute: u64,
}

impl WeightedEnumerator {
    /// Depth-first walk over arrangements in lexicographic symbol order,
    /// carrying the running weighted sum and both prefix verdicts. Every
    /// leaf is visited; nothing is pruned or counted by formula.
    fn run(&mut self, depth: u64, sum: &Ratio, desirable: bool, cute: bool) {
        if depth == 0 {
            self.total += 1;
            self.desirable += desirable as u64;
            self.cute += cute as u64;
            return;
        }
        for i in 0..self.remaining.len() {
            if self.remaining[i] == 0 {
                continue;
            }
            let next = sum + &self.steps[i];
            let desirable = desirable && next.is_positive();
            let cute = cute && !next.is_negative();
            self.remaining[i] -= 1;
            self.run(depth - 1, &next, desirable, cute);
            self.remaining[i] += 1;
        }
    }
}
