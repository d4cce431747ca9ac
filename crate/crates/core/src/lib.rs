//! Exact analysis of a generalized ballot problem.
//!
//! Candidate A receives `a` votes and candidate B receives `b` votes,
//! counted in a uniformly random order. For a rational ratio `mu`, the
//! running score after `r` votes is `S_r = a_r - mu * b_r`. A counting
//! order is *desirable* when `S_r > 0` at every step and *cute* when
//! `S_r >= 0` at every step; `P` and `P*` are the probabilities of these
//! events.
//!
//! The crate computes both probabilities exactly by enumeration
//! ([`enumeration`]), evaluates the series expansion of `P` for `mu >= 1`
//! ([`takacs`]), brackets both probabilities with floor-expression bounds
//! and checks the counting inequalities behind them ([`bounds`]), exposes
//! the rotation machinery that proves the lower bounds ([`cycle`]),
//! handles B-votes with unequal weights ([`enumeration`], [`bounds`]),
//! and estimates both probabilities by reproducible sampling when
//! enumeration is out of reach ([`montecarlo`]).
//!
//! All probability arithmetic is exact: values are [`Ratio`]s, never
//! floats, except for the clearly marked decimal estimates produced by
//! sampling.

pub mod ballot;
pub mod binomial;
pub mod bounds;
pub mod cycle;
pub mod enumeration;
pub mod error;
pub mod montecarlo;
pub mod ratio;
pub mod takacs;

pub use ballot::{partial_tallies, BallotSpec, PartialTally, Vote, VoteSequence};
pub use error::{Error, Result};
pub use ratio::Ratio;
