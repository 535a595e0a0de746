//! Seeded random generators shared by the integration suites.

use dyckdiv::{PositiveSet, Rational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A rational with numerator and denominator in `1..=max`.
pub fn random_rational(rng: &mut ChaCha8Rng, max: i64) -> Rational {
    let num = rng.random_range(1..=max);
    let den = rng.random_range(1..=max);
    Rational::new(num, den).unwrap()
}

/// A set of at most `max_len` rationals with parts bounded by `max_part`.
pub fn random_set(rng: &mut ChaCha8Rng, max_len: usize, max_part: i64) -> PositiveSet {
    let len = rng.random_range(0..=max_len);
    PositiveSet::new((0..len).map(|_| random_rational(rng, max_part))).unwrap()
}

/// Like [`random_set`] but never empty (and with at least `min_len` elements
/// after deduplication).
pub fn random_set_at_least(
    rng: &mut ChaCha8Rng,
    min_len: usize,
    max_len: usize,
    max_part: i64,
) -> PositiveSet {
    loop {
        let set = random_set(rng, max_len, max_part);
        if set.len() >= min_len {
            return set;
        }
    }
}

/// A rational strictly greater than 1 with parts bounded by 50.
pub fn random_lambda(rng: &mut ChaCha8Rng) -> Rational {
    let den = rng.random_range(1..=49);
    let num = rng.random_range(den + 1..=50);
    Rational::new(num, den).unwrap()
}

/// A uniformly chosen singular value of the set, when it has any.
pub fn random_singular(rng: &mut ChaCha8Rng, set: &PositiveSet) -> Option<Rational> {
    let singulars = set.singular_values().into_elements();
    if singulars.is_empty() {
        return None;
    }
    let idx = rng.random_range(0..singulars.len());
    Some(singulars[idx].clone())
}
