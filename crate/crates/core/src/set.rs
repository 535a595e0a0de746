//! Finite sets of positive rationals and their interaction with scaling.
//!
//! The central question everywhere below is how a set `S` relates to its
//! scaled copy `λS`: which elements sit only in `S`, only in `λS`, or in
//! both. The answer, read off the sorted union, is what the word
//! constructions in [`crate::class`] turn into letters.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::slice;

use crate::error::{Error, Result};
use crate::rational::{require_above_one, Rational};

/// Where a value of the union `S ∪ λS` comes from.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// In `S` but not in `λS`.
    SetOnly,
    /// In `λS` but not in `S`.
    ScaledOnly,
    /// In both.
    Both,
}

/// A finite set of strictly positive rationals, stored sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PositiveSet {
    elements: Vec<Rational>,
}

impl PositiveSet {
    /// Sorts and deduplicates; rejects elements that are not strictly positive.
    pub fn new(values: impl IntoIterator<Item = Rational>) -> Result<Self> {
        let mut elements: Vec<Rational> = values.into_iter().collect();
        if elements.iter().any(|v| !v.is_positive()) {
            return Err(Error::NonPositiveElement);
        }
        elements.sort();
        elements.dedup();
        Ok(PositiveSet { elements })
    }

    pub fn empty() -> Self {
        PositiveSet {
            elements: Vec::new(),
        }
    }

    pub fn elements(&self) -> &[Rational] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Rational> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> slice::Iter<'_, Rational> {
        self.elements.iter()
    }

    pub fn contains(&self, value: &Rational) -> bool {
        self.elements.binary_search(value).is_ok()
    }

    /// The set `{factor·s : s ∈ S}`; the factor must be strictly positive.
    pub fn scale(&self, factor: &Rational) -> Result<PositiveSet> {
        if !factor.is_positive() {
            return Err(Error::NonPositiveScale);
        }
        Ok(PositiveSet {
            elements: self.elements.iter().map(|s| factor * s).collect(),
        })
    }

    /// The sorted union `S ∪ λS`, each value tagged by membership.
    ///
    /// Requires `λ > 1`.
    pub fn tagged_merge(&self, lambda: &Rational) -> Result<Vec<(Rational, Membership)>> {
        require_above_one(lambda)?;
        let scaled = self.scale(lambda)?;
        let mut merged = Vec::with_capacity(2 * self.len());
        let mut plain = self.elements.iter().peekable();
        let mut scaled = scaled.elements.into_iter().peekable();
        loop {
            match (plain.peek(), scaled.peek()) {
                (Some(&p), Some(s)) => match p.cmp(s) {
                    Ordering::Less => {
                        merged.push((plain.next().unwrap().clone(), Membership::SetOnly));
                    }
                    Ordering::Greater => {
                        merged.push((scaled.next().unwrap(), Membership::ScaledOnly));
                    }
                    Ordering::Equal => {
                        plain.next();
                        merged.push((scaled.next().unwrap(), Membership::Both));
                    }
                },
                (Some(_), None) => {
                    merged.push((plain.next().unwrap().clone(), Membership::SetOnly));
                }
                (None, Some(_)) => {
                    merged.push((scaled.next().unwrap(), Membership::ScaledOnly));
                }
                (None, None) => break,
            }
        }
        Ok(merged)
    }

    /// Every quotient `s′/s` of elements with `s′ > s`, sorted and deduplicated.
    ///
    /// These are exactly the scale factors `λ > 1` for which `S` and `λS`
    /// intersect (the singular values of `S`).
    pub fn singular_values(&self) -> PositiveSet {
        let mut quotients = Vec::new();
        for (i, small) in self.elements.iter().enumerate() {
            for large in &self.elements[i + 1..] {
                quotients.push(large / small);
            }
        }
        PositiveSet::new(quotients).expect("quotients of positive elements are positive")
    }

    /// The smallest singular value strictly greater than `lambda`, if any.
    pub fn next_singular_above(&self, lambda: &Rational) -> Option<Rational> {
        self.singular_values()
            .into_elements()
            .into_iter()
            .find(|q| q > lambda)
    }
}

impl<'a> IntoIterator for &'a PositiveSet {
    type Item = &'a Rational;
    type IntoIter = slice::Iter<'a, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}
