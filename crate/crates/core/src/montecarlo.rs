//! Sampling estimator for instances beyond the enumeration budget.
//!
//! Sequences are drawn uniformly over the C(a+b, a) arrangements by urn
//! sampling: at each position, a fair draw from the remaining votes. The
//! generator is ChaCha8 seeded from a 64-bit master seed, with one stream
//! per worker, so a given (spec, n, seed, workers) always reproduces the
//! same estimate on every platform. Each sample consumes exactly a + b
//! uniform draws; a draw takes one or more generator words via rejection.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::ballot::{classify_votes, Vote, WeightedWalk};
use crate::error::{Error, Result};
use crate::BallotSpec;

/// Estimated probabilities with their sampling parameters.
///
/// The success counts are exact; only the derived rates and standard
/// errors are decimal.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleEstimate {
    pub n: u64,
    pub seed: u64,
    pub workers: u64,
    /// Samples with a strict lead throughout.
    pub desirable: u64,
    /// Samples with a weak lead throughout.
    pub cute: u64,
    pub p_hat: f64,
    pub p_star_hat: f64,
    pub std_err_p: f64,
    pub std_err_p_star: f64,
}

/// Uniform draw from `[0, m)` by rejection, so every residue is equally
/// likely.
fn uniform_below(rng: &mut ChaCha8Rng, m: u64) -> u64 {
    debug_assert!(m > 0);
    let excess = (u64::MAX % m).wrapping_add(1) % m;
    loop {
        let x = rng.next_u64();
        if excess == 0 || x <= u64::MAX - excess {
            return x % m;
        }
    }
}

fn run_worker(spec: &BallotSpec, samples: u64, seed: u64, stream: u64) -> (u64, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let total = spec.total_votes();
    let mut walk = WeightedWalk::new(&spec.mu, total);
    let mut buf: Vec<Vote> = Vec::with_capacity(total as usize);
    let mut desirable = 0;
    let mut cute = 0;
    for _ in 0..samples {
        buf.clear();
        let mut rem_a = spec.a;
        let mut rem_b = spec.b;
        while rem_a + rem_b > 0 {
            if uniform_below(&mut rng, rem_a + rem_b) < rem_a {
                rem_a -= 1;
                buf.push(Vote::A);
            } else {
                rem_b -= 1;
                buf.push(Vote::B);
            }
        }
        let class = classify_votes(&mut walk, buf.iter().copied());
        if class.desirable {
            desirable += 1;
        }
        if class.cute {
            cute += 1;
        }
    }
    (desirable, cute)
}

/// Estimate both probabilities from `n` random sequences on a single
/// worker stream.
pub fn sample_probability(spec: &BallotSpec, n: u64, seed: u64) -> Result<SampleEstimate> {
    sample_probability_with_workers(spec, n, seed, 1)
}

/// Estimate with the samples split across `workers` independent generator
/// streams, run on that many threads. Worker `w` draws from stream `w` of
/// the master seed and takes `n / workers` samples, plus one of the
/// remainder for the lowest-numbered workers; changing the worker count
/// changes the streams and hence the estimate, but any fixed
/// (spec, n, seed, workers) is fully reproducible.
pub fn sample_probability_with_workers(
    spec: &BallotSpec,
    n: u64,
    seed: u64,
    workers: u64,
) -> Result<SampleEstimate> {
    if n == 0 {
        return Err(Error::Precondition("sample count must be positive".into()));
    }
    if workers == 0 {
        return Err(Error::Precondition("worker count must be positive".into()));
    }
    let workers = workers.min(n);
    let (mut desirable, mut cute) = (0, 0);
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let samples = n / workers + u64::from(w < n % workers);
                scope.spawn(move || run_worker(spec, samples, seed, w))
            })
            .collect();
        for handle in handles {
            let (d, c) = handle.join().expect("sampling worker panicked");
            desirable += d;
            cute += c;
        }
    });
    let p_hat = desirable as f64 / n as f64;
    let p_star_hat = cute as f64 / n as f64;
    Ok(SampleEstimate {
        n,
        seed,
        workers,
        desirable,
        cute,
        p_hat,
        p_star_hat,
        std_err_p: binomial_std_err(p_hat, n),
        std_err_p_star: binomial_std_err(p_star_hat, n),
    })
}

fn binomial_std_err(p: f64, n: u64) -> f64 {
    (p * (1.0 - p) / n as f64).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::count_exact;
    use crate::ratio::Ratio;

    fn spec(a: u64, b: u64, mu: &str) -> BallotSpec {
        BallotSpec::new(a, b, mu.parse::<Ratio>().unwrap()).unwrap()
    }

    #[test]
    fn single_sequence_instance_is_exact() {
        let est = sample_probability(&spec(1, 0, "1"), 100, 42).unwrap();
        assert_eq!(est.desirable, 100);
        assert_eq!(est.cute, 100);
        assert_eq!(est.p_hat, 1.0);
        assert_eq!(est.std_err_p, 0.0);
    }

    #[test]
    fn estimates_land_near_oracle() {
        let s = spec(5, 2, "3/2");
        let exact = count_exact(&s).unwrap();
        let p = exact.p.to_f64();
        let est = sample_probability(&s, 100_000, 7).unwrap();
        assert!(
            (est.p_hat - p).abs() <= 3.0 * est.std_err_p,
            "p_hat {} vs oracle {p}",
            est.p_hat
        );

        let s = spec(2, 2, "1");
        let exact = count_exact(&s).unwrap();
        let p_star = exact.p_star.to_f64();
        let est = sample_probability(&s, 100_000, 7).unwrap();
        assert!(
            (est.p_star_hat - p_star).abs() <= 3.0 * est.std_err_p_star,
            "p_star_hat {} vs oracle {p_star}",
            est.p_star_hat
        );
    }

    #[test]
    fn per_sample_implication_holds_in_counts() {
        for seed in 0..5 {
            let est = sample_probability(&spec(3, 2, "4/3"), 2_000, seed).unwrap();
            assert!(est.desirable <= est.cute);
        }
    }

    #[test]
    fn identical_parameters_reproduce_identically() {
        let s = spec(6, 3, "5/3");
        let first = sample_probability_with_workers(&s, 10_000, 99, 4).unwrap();
        let second = sample_probability_with_workers(&s, 10_000, 99, 4).unwrap();
        assert_eq!(first, second);
        let single = sample_probability(&s, 10_000, 99).unwrap();
        let rerun = sample_probability_with_workers(&s, 10_000, 99, 1).unwrap();
        assert_eq!(single, rerun);
    }

    #[test]
    fn worker_split_covers_all_samples() {
        let s = spec(4, 3, "1");
        for workers in [1, 2, 3, 7, 10] {
            let est = sample_probability_with_workers(&s, 1_001, 5, workers).unwrap();
            assert_eq!(est.n, 1_001);
            assert!(est.cute <= est.n);
        }
    }

    #[test]
    fn zero_samples_or_workers_rejected() {
        let s = spec(1, 1, "1");
        assert!(sample_probability(&s, 0, 1).is_err());
        assert!(sample_probability_with_workers(&s, 10, 1, 0).is_err());
    }
}
