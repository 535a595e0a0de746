//! Exact analysis of divisor distributions through Dyck words.
//!
//! Given a finite set `S` of positive rationals (typically the divisors of
//! an integer) and an exact scale factor `λ > 1`, this crate builds the word
//! that reads off how `S` interleaves with `λS`, factors it into irreducible
//! Dyck words, and uses the factorization to answer distribution questions:
//!
//! - how many connected components the union of intervals
//!   `[ln s, ln s + ln λ]` has ([`topology::components`]), which always
//!   equals the number of irreducible factors of the class word;
//! - the largest number of divisors of `n` in any window `]R/λ, R]`
//!   ([`divisor::delta`]), which is the height of the word's lattice path;
//! - whether `n` is λ-densely divisible ([`divisor::is_densely_divisible`]),
//!   which holds exactly when the class word is irreducible.
//!
//! Every scalar is an arbitrary-precision rational and every comparison is
//! exact, so regular and singular scale factors (those where `S` and `λS`
//! collide) are distinguished reliably. All types are immutable and all
//! operations are pure functions.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod class;
pub mod divisor;
pub mod error;
pub mod rational;
pub mod set;
pub mod topology;
pub mod word;

pub use class::{hooley_class, is_regular, lambda_class, right_limit_class, ClassWordBundle};
pub use divisor::{
    class_word_of_int, delta, delta_bruteforce, divisors, is_densely_divisible,
    is_densely_divisible_sweep, is_densely_divisible_via_word, DivisorProfile,
};
pub use error::{Error, Result};
pub use rational::Rational;
pub use set::{Membership, PositiveSet};
pub use topology::{
    components, components_graph_oracle, step_function, ComponentReport, StepFunctionReport,
};
pub use word::{BalancedWord, Factorization, Step, TriStep, TriWord};
