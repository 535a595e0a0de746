//! Turning a set and a scale factor into words.
//!
//! Reading the sorted symmetric difference `S △ λS` and writing `a` for an
//! element of `S` and `b` for an element of `λS` yields a Dyck word, the
//! λ-class of `S`. Reading the full sorted union `S ∪ λS` with `c` for the
//! shared elements yields the three-letter companion word, which lives in
//! the Hooley-Dyck language. Erasing its `c`s recovers the λ-class; splitting
//! each `c` into `ab` gives the λ′-class for every λ′ slightly above λ.

use alloc::vec::Vec;

use crate::error::Result;
use crate::rational::Rational;
use crate::set::{Membership, PositiveSet};
use crate::word::{BalancedWord, Step, TriStep, TriWord};

/// The word reading `S △ λS`: `a` on elements of `S`, `b` on elements of `λS`.
///
/// Requires `λ > 1`. Always a Dyck word; empty for the empty set.
pub fn lambda_class(set: &PositiveSet, lambda: &Rational) -> Result<BalancedWord> {
    let merged = set.tagged_merge(lambda)?;
    Ok(BalancedWord::new(
        merged
            .into_iter()
            .filter_map(|(_, tag)| match tag {
                Membership::SetOnly => Some(Step::Up),
                Membership::ScaledOnly => Some(Step::Down),
                Membership::Both => None,
            })
            .collect(),
    ))
}

/// The word reading `S ∪ λS`: `a` on `S \ λS`, `b` on `λS \ S`, `c` on `S ∩ λS`.
///
/// Requires `λ > 1`. Always a Hooley-Dyck word.
pub fn hooley_class(set: &PositiveSet, lambda: &Rational) -> Result<TriWord> {
    let merged = set.tagged_merge(lambda)?;
    Ok(TriWord::new(
        merged
            .into_iter()
            .map(|(_, tag)| match tag {
                Membership::SetOnly => TriStep::Up,
                Membership::ScaledOnly => TriStep::Down,
                Membership::Both => TriStep::Flat,
            })
            .collect(),
    ))
}

/// True iff `S` and `λS` are disjoint. Requires `λ > 1`.
pub fn is_regular(set: &PositiveSet, lambda: &Rational) -> Result<bool> {
    let merged = set.tagged_merge(lambda)?;
    Ok(merged.iter().all(|(_, tag)| *tag != Membership::Both))
}

/// The λ′-class of `S` for λ′ just above λ, computed symbolically.
///
/// Equals `lambda_class(set, λ′)` for every λ′ strictly between λ and the
/// next singular value of the set; no sampled λ′ is involved.
pub fn right_limit_class(set: &PositiveSet, lambda: &Rational) -> Result<BalancedWord> {
    Ok(hooley_class(set, lambda)?.split_flats())
}

/// Everything the word constructions say about one `(S, λ)` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassWordBundle {
    pub set: PositiveSet,
    pub lambda: Rational,
    pub class_word: BalancedWord,
    pub hooley_word: TriWord,
    pub regular: bool,
}

impl ClassWordBundle {
    /// Requires `λ > 1`.
    pub fn build(set: PositiveSet, lambda: Rational) -> Result<Self> {
        let merged = set.tagged_merge(&lambda)?;
        let mut class_steps = Vec::new();
        let mut hooley_steps = Vec::with_capacity(merged.len());
        let mut regular = true;
        for (_, tag) in merged {
            match tag {
                Membership::SetOnly => {
                    class_steps.push(Step::Up);
                    hooley_steps.push(TriStep::Up);
                }
                Membership::ScaledOnly => {
                    class_steps.push(Step::Down);
                    hooley_steps.push(TriStep::Down);
                }
                Membership::Both => {
                    hooley_steps.push(TriStep::Flat);
                    regular = false;
                }
            }
        }
        Ok(ClassWordBundle {
            set,
            lambda,
            class_word: BalancedWord::new(class_steps),
            hooley_word: TriWord::new(hooley_steps),
            regular,
        })
    }
}
