//! Words over `{a, b}` and `{a, b, c}` and their path combinatorics.
//!
//! Reading `a` as an up-step, `b` as a down-step and `c` as a level step
//! turns a word into a lattice path. The Dyck words are the two-letter
//! words whose path ends on the axis without ever dipping below it; the
//! Hooley-Dyck words additionally carry level steps, all of which must sit
//! strictly above the axis. Both languages are freely generated by their
//! irreducible members, which is what makes the factorization (and the
//! factor-counting morphisms `omega` and `theta`) well defined.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A letter of the two-letter alphabet: `a` rises, `b` falls.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::Up => 'a',
            Step::Down => 'b',
        }
    }

    pub fn rise(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }
}

/// A letter of the three-letter alphabet: `a` rises, `b` falls, `c` stays level.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum TriStep {
    Up,
    Down,
    Flat,
}

impl TriStep {
    pub fn letter(self) -> char {
        match self {
            TriStep::Up => 'a',
            TriStep::Down => 'b',
            TriStep::Flat => 'c',
        }
    }

    pub fn rise(self) -> i64 {
        match self {
            TriStep::Up => 1,
            TriStep::Down => -1,
            TriStep::Flat => 0,
        }
    }
}

/// A word over `{a, b}`, not necessarily Dyck.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BalancedWord {
    steps: Vec<Step>,
}

/// A word over `{a, b, c}`, not necessarily Hooley-Dyck.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TriWord {
    steps: Vec<TriStep>,
}

/// The factors of a word of a free monoid, in order.
///
/// Produced only by the factorization operations, so concatenating the
/// factors reproduces the input and every factor is irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<W> {
    factors: Vec<W>,
}

impl<W> Factorization<W> {
    pub fn factors(&self) -> &[W] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, W> {
        self.factors.iter()
    }

    pub fn into_factors(self) -> Vec<W> {
        self.factors
    }
}

impl BalancedWord {
    pub fn new(steps: Vec<Step>) -> Self {
        BalancedWord { steps }
    }

    pub fn empty() -> Self {
        BalancedWord { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        BalancedWord { steps }
    }

    /// True iff every prefix has at least as many `a` as `b` and the totals match.
    pub fn is_dyck(&self) -> bool {
        let mut sum = 0i64;
        for step in &self.steps {
            sum += step.rise();
            if sum < 0 {
                return false;
            }
        }
        sum == 0
    }

    /// Maximum prefix height of a Dyck word.
    pub fn height(&self) -> Result<usize> {
        if !self.is_dyck() {
            return Err(Error::NotDyck);
        }
        let mut sum = 0i64;
        let mut max = 0i64;
        for step in &self.steps {
            sum += step.rise();
            max = max.max(sum);
        }
        Ok(max as usize)
    }

    /// The unique factorization of a Dyck word into irreducible Dyck words,
    /// obtained by cutting at every return of the path to the axis.
    pub fn irreducible_factors(&self) -> Result<Factorization<BalancedWord>> {
        if !self.is_dyck() {
            return Err(Error::NotDyck);
        }
        let mut factors = Vec::new();
        let mut sum = 0i64;
        let mut start = 0;
        for (i, step) in self.steps.iter().enumerate() {
            sum += step.rise();
            if sum == 0 {
                factors.push(BalancedWord::new(self.steps[start..=i].to_vec()));
                start = i + 1;
            }
        }
        Ok(Factorization { factors })
    }

    /// Number of irreducible factors of a Dyck word; additive under
    /// concatenation, zero on the empty word.
    pub fn omega(&self) -> Result<usize> {
        if !self.is_dyck() {
            return Err(Error::NotDyck);
        }
        let mut sum = 0i64;
        let mut returns = 0;
        for step in &self.steps {
            sum += step.rise();
            if sum == 0 {
                returns += 1;
            }
        }
        Ok(returns)
    }
}

impl TriWord {
    pub fn new(steps: Vec<TriStep>) -> Self {
        TriWord { steps }
    }

    pub fn empty() -> Self {
        TriWord { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[TriStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        TriWord { steps }
    }

    /// Schröder-path criterion: the path never dips below the axis, ends on
    /// it, and every level step sits at height at least one.
    pub fn is_hooley_dyck(&self) -> bool {
        let mut sum = 0i64;
        for step in &self.steps {
            if *step == TriStep::Flat && sum < 1 {
                return false;
            }
            sum += step.rise();
            if sum < 0 {
                return false;
            }
        }
        sum == 0
    }

    /// Normal form under the length-reducing rewrites `ab → ε`, `acb → ab`
    /// and `cc → c`, applying the leftmost redex until none remains.
    ///
    /// A word belongs to the Hooley-Dyck language exactly when its normal
    /// form is empty; this is kept as an oracle independent of
    /// [`TriWord::is_hooley_dyck`].
    pub fn reduce(&self) -> TriWord {
        use TriStep::{Down, Flat, Up};
        let mut word = self.steps.clone();
        loop {
            let mut redex = None;
            for i in 0..word.len() {
                match &word[i..] {
                    [Up, Down, ..] => {
                        redex = Some((i, Rewrite::CancelPair));
                        break;
                    }
                    [Up, Flat, Down, ..] => {
                        redex = Some((i, Rewrite::AbsorbFlat));
                        break;
                    }
                    [Flat, Flat, ..] => {
                        redex = Some((i, Rewrite::MergeFlats));
                        break;
                    }
                    _ => {}
                }
            }
            match redex {
                Some((i, Rewrite::CancelPair)) => {
                    word.drain(i..i + 2);
                }
                Some((i, Rewrite::AbsorbFlat)) => {
                    word.remove(i + 1);
                }
                Some((i, Rewrite::MergeFlats)) => {
                    word.remove(i);
                }
                None => break,
            }
        }
        TriWord { steps: word }
    }

    /// The unique factorization of a Hooley-Dyck word into irreducible ones,
    /// obtained by cutting at every return of the path to the axis.
    pub fn irreducible_factors(&self) -> Result<Factorization<TriWord>> {
        if !self.is_hooley_dyck() {
            return Err(Error::NotHooleyDyck);
        }
        let mut factors = Vec::new();
        let mut sum = 0i64;
        let mut start = 0;
        for (i, step) in self.steps.iter().enumerate() {
            sum += step.rise();
            if sum == 0 {
                factors.push(TriWord::new(self.steps[start..=i].to_vec()));
                start = i + 1;
            }
        }
        Ok(Factorization { factors })
    }

    /// Number of irreducible factors of a Hooley-Dyck word.
    pub fn theta(&self) -> Result<usize> {
        if !self.is_hooley_dyck() {
            return Err(Error::NotHooleyDyck);
        }
        let mut sum = 0i64;
        let mut returns = 0;
        for step in &self.steps {
            sum += step.rise();
            if sum == 0 {
                returns += 1;
            }
        }
        Ok(returns)
    }

    /// Deletes every level step, keeping rises and falls in order.
    pub fn erase_flats(&self) -> BalancedWord {
        BalancedWord::new(
            self.steps
                .iter()
                .filter_map(|step| match step {
                    TriStep::Up => Some(Step::Up),
                    TriStep::Down => Some(Step::Down),
                    TriStep::Flat => None,
                })
                .collect(),
        )
    }

    /// Replaces every level step by an up-down pair.
    pub fn split_flats(&self) -> BalancedWord {
        let mut steps = Vec::with_capacity(self.steps.len());
        for step in &self.steps {
            match step {
                TriStep::Up => steps.push(Step::Up),
                TriStep::Down => steps.push(Step::Down),
                TriStep::Flat => {
                    steps.push(Step::Up);
                    steps.push(Step::Down);
                }
            }
        }
        BalancedWord::new(steps)
    }
}

enum Rewrite {
    CancelPair,
    AbsorbFlat,
    MergeFlats,
}

impl fmt::Display for BalancedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(f, "{}", step.letter())?;
        }
        Ok(())
    }
}

impl fmt::Debug for BalancedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl fmt::Display for TriWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(f, "{}", step.letter())?;
        }
        Ok(())
    }
}

impl fmt::Debug for TriWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for BalancedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(position, letter)| match letter {
                'a' => Ok(Step::Up),
                'b' => Ok(Step::Down),
                _ => Err(Error::InvalidLetter { position, letter }),
            })
            .collect::<Result<Vec<_>>>()
            .map(BalancedWord::new)
    }
}

impl FromStr for TriWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(position, letter)| match letter {
                'a' => Ok(TriStep::Up),
                'b' => Ok(TriStep::Down),
                'c' => Ok(TriStep::Flat),
                _ => Err(Error::InvalidLetter { position, letter }),
            })
            .collect::<Result<Vec<_>>>()
            .map(TriWord::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(s: &str) -> BalancedWord {
        s.parse().unwrap()
    }

    fn abc(s: &str) -> TriWord {
        s.parse().unwrap()
    }

    #[test]
    fn dyck_membership() {
        assert!(ab("aabaababbabb").is_dyck());
        assert!(ab("").is_dyck());
        assert!(!ab("ba").is_dyck());
        assert!(!ab("aab").is_dyck());
    }

    #[test]
    fn heights() {
        assert_eq!(ab("aabaababbabb").height().unwrap(), 3);
        assert_eq!(ab("").height().unwrap(), 0);
        assert_eq!(ab("abab").height().unwrap(), 1);
        assert_eq!(ab("ba").height(), Err(Error::NotDyck));
    }

    #[test]
    fn factorization_cuts_at_returns_to_the_axis() {
        let f = ab("abab").irreducible_factors().unwrap();
        assert_eq!(f.factors(), &[ab("ab"), ab("ab")]);

        let f = ab("aabaababbabb").irreducible_factors().unwrap();
        assert_eq!(f.factors(), &[ab("aabaababbabb")]);

        assert!(ab("").irreducible_factors().unwrap().is_empty());
        assert_eq!(ab("ba").irreducible_factors().err(), Some(Error::NotDyck));
    }

    #[test]
    fn omega_counts_factors() {
        assert_eq!(ab("aabaababbabb").omega().unwrap(), 1);
        assert_eq!(ab("abab").omega().unwrap(), 2);
        assert_eq!(ab("").omega().unwrap(), 0);
    }

    #[test]
    fn hooley_membership() {
        assert!(abc("acabcaabccabbcabcb").is_hooley_dyck());
        assert!(!abc("c").is_hooley_dyck());
        assert!(abc("acb").is_hooley_dyck());
        assert!(!abc("cab").is_hooley_dyck());
        assert!(abc("").is_hooley_dyck());
    }

    #[test]
    fn rewriting_reaches_the_expected_normal_forms() {
        assert_eq!(abc("acb").reduce(), abc(""));
        assert_eq!(abc("acabcb").reduce(), abc(""));
        assert_eq!(abc("cab").reduce(), abc("c"));
        assert_eq!(abc("acabcaabccabbcabcb").reduce(), abc(""));
        assert_eq!(abc("cc").reduce(), abc("c"));
    }

    #[test]
    fn hooley_factorization() {
        let f = abc("acabcb").irreducible_factors().unwrap();
        assert_eq!(f.factors(), &[abc("acabcb")]);

        let f = abc("acbacb").irreducible_factors().unwrap();
        assert_eq!(f.factors(), &[abc("acb"), abc("acb")]);

        assert!(abc("").irreducible_factors().unwrap().is_empty());
        assert_eq!(
            abc("cab").irreducible_factors().err(),
            Some(Error::NotHooleyDyck)
        );
    }

    #[test]
    fn theta_counts_factors() {
        assert_eq!(abc("acabcb").theta().unwrap(), 1);
        assert_eq!(abc("acbacb").theta().unwrap(), 2);
        assert_eq!(abc("").theta().unwrap(), 0);
        assert_eq!(abc("c").theta(), Err(Error::NotHooleyDyck));
    }

    #[test]
    fn erase_flats_projects_onto_two_letters() {
        assert_eq!(abc("acabcb").erase_flats(), ab("aabb"));
        assert_eq!(
            abc("acabcaabccabbcabcb").erase_flats(),
            ab("aabaababbabb")
        );
        assert_eq!(abc("ccc").erase_flats(), ab(""));
    }

    #[test]
    fn split_flats_substitutes_peaks() {
        assert_eq!(abc("acb").split_flats(), ab("aabb"));
        assert_eq!(abc("acabcb").split_flats(), ab("aabababb"));
        assert_eq!(
            abc("acabcaabccabbcabcb").split_flats(),
            ab("aabababaababababbabababb")
        );
    }

    #[test]
    fn word_parsing_rejects_foreign_letters() {
        assert_eq!(
            "abc".parse::<BalancedWord>().err(),
            Some(Error::InvalidLetter {
                position: 2,
                letter: 'c'
            })
        );
        assert_eq!(
            "abd".parse::<TriWord>().err(),
            Some(Error::InvalidLetter {
                position: 2,
                letter: 'd'
            })
        );
    }
}
