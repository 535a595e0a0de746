//! Connected components of the union of intervals `[ln s, ln s + ln λ]`,
//! computed without ever taking a logarithm.
//!
//! Logarithms of rationals are irrational, so connectivity is decided in the
//! multiplicative domain instead: the intervals of consecutive elements
//! `s < s′` overlap or touch exactly when `λ·s ≥ s′`, an exact rational
//! comparison. Touching closed intervals count as connected.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rational::{require_above_one, Rational};
use crate::set::PositiveSet;

/// The connected components, described multiplicatively: a span `(u, v)`
/// stands for the log-interval `[ln u, ln v + ln λ]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    count: usize,
    spans: Vec<(Rational, Rational)>,
}

impl ComponentReport {
    pub fn count(&self) -> usize {
        self.count
    }

    /// Maximal runs of the sorted set whose consecutive intervals chain up;
    /// each span is (first element, last element) of a run.
    pub fn spans(&self) -> &[(Rational, Rational)] {
        &self.spans
    }
}

/// Components of `⋃_{s∈S} [ln s, ln s + ln λ]`. Requires `λ > 1`.
pub fn components(set: &PositiveSet, lambda: &Rational) -> Result<ComponentReport> {
    require_above_one(lambda)?;
    let elements = set.elements();
    let mut spans = Vec::new();
    if let Some(first) = elements.first() {
        let mut run_start = first.clone();
        let mut prev = first;
        for next in &elements[1..] {
            if lambda * prev < *next {
                spans.push((run_start, prev.clone()));
                run_start = next.clone();
            }
            prev = next;
        }
        spans.push((run_start, prev.clone()));
    }
    Ok(ComponentReport {
        count: spans.len(),
        spans,
    })
}

/// Component count obtained from the pairwise interval-overlap graph,
/// as an oracle for [`components`]: vertices are the intervals
/// `[s, λs]`, edges join intersecting ones, and the answer is the number of
/// graph components found by union–find.
pub fn components_graph_oracle(set: &PositiveSet, lambda: &Rational) -> Result<usize> {
    require_above_one(lambda)?;
    let elements = set.elements();
    let m = elements.len();
    let mut parent: Vec<usize> = (0..m).collect();

    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }

    for i in 0..m {
        for j in i + 1..m {
            // [s_i, λs_i] meets [s_j, λs_j] iff s_j ≤ λs_i and s_i ≤ λs_j.
            let meets = elements[j] <= lambda * &elements[i]
                && elements[i] <= lambda * &elements[j];
            if meets {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
    }

    Ok((0..m).filter(|&x| find(&mut parent, x) == x).count())
}

/// The component count as a step function of `λ` on `(1, ∞)`.
///
/// `values` has one entry per interval: `values[0]` on `(1, b_0)`, then
/// `values[i+1]` on `[b_i, b_{i+1})`, the last on `[b_last, ∞)`. The count
/// can only change at singular values of the set, and is right-continuous,
/// so the value at a breakpoint is the value of the interval it opens.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepFunctionReport {
    breakpoints: Vec<Rational>,
    values: Vec<usize>,
}

impl StepFunctionReport {
    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The component count at `lambda`, or `None` when `lambda ≤ 1`.
    pub fn value_at(&self, lambda: &Rational) -> Option<usize> {
        if *lambda <= Rational::one() {
            return None;
        }
        let idx = self.breakpoints.partition_point(|b| b <= lambda);
        Some(self.values[idx])
    }
}

/// Evaluates the λ ↦ component-count step function of a nonempty set, with
/// one breakpoint per singular value.
pub fn step_function(set: &PositiveSet) -> Result<StepFunctionReport> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let breakpoints = set.singular_values().into_elements();
    let one = Rational::one();
    let mut values = Vec::with_capacity(breakpoints.len() + 1);

    let first_probe = match breakpoints.first() {
        Some(b) => Rational::midpoint(&one, b),
        None => Rational::from_integer(2),
    };
    values.push(components(set, &first_probe)?.count());
    for b in &breakpoints {
        values.push(components(set, b)?.count());
    }

    Ok(StepFunctionReport {
        breakpoints,
        values,
    })
}
