//! The cross-check battery behind the `check` subcommand.
//!
//! For every integer up to the bound and every requested λ (plus every
//! singular value of the integer's divisor set), all identities the library
//! promises are recomputed both ways and compared. Any mismatch is a bug,
//! never an expected outcome.

use dyckdiv::{
    components, components_graph_oracle, delta, delta_bruteforce, divisors, hooley_class,
    is_densely_divisible, is_densely_divisible_sweep, is_densely_divisible_via_word, lambda_class,
    right_limit_class, Rational,
};
use rayon::prelude::*;

pub struct CheckOutcome {
    pub checks: u64,
    pub failures: Vec<String>,
}

pub fn run(n_max: u64, lambdas: &[Rational]) -> CheckOutcome {
    let per_n: Vec<(u64, Vec<String>)> = (1..=n_max)
        .into_par_iter()
        .map(|n| check_integer(n, lambdas))
        .collect();

    let mut checks = 0;
    let mut failures = Vec::new();
    for (count, mut found) in per_n {
        checks += count;
        failures.append(&mut found);
    }
    CheckOutcome { checks, failures }
}

fn check_integer(n: u64, base_lambdas: &[Rational]) -> (u64, Vec<String>) {
    let profile = divisors(n).expect("n >= 1");
    let set = profile.divisors();

    let mut lambdas = base_lambdas.to_vec();
    lambdas.extend(set.singular_values().into_elements());
    lambdas.sort();
    lambdas.dedup();

    let mut checks = 0u64;
    let mut failures = Vec::new();
    let mut verify = |ok: bool, lambda: &Rational, what: &str| {
        checks += 1;
        if !ok {
            failures.push(format!("n = {n}, lambda = {lambda}: {what}"));
        }
    };

    for lambda in &lambdas {
        let class = lambda_class(set, lambda).expect("lambda > 1");
        let hooley = hooley_class(set, lambda).expect("lambda > 1");
        let right = right_limit_class(set, lambda).expect("lambda > 1");

        verify(class.is_dyck(), lambda, "class word is not Dyck");
        verify(
            hooley.is_hooley_dyck(),
            lambda,
            "hooley word is not Hooley-Dyck",
        );
        verify(
            hooley.erase_flats() == class,
            lambda,
            "erasing flats does not give the class word",
        );

        let omega = class.omega().expect("checked Dyck");
        let theta = hooley.theta().expect("checked Hooley-Dyck");
        verify(theta == omega, lambda, "theta != omega of class word");
        verify(
            right.omega().ok() == Some(omega),
            lambda,
            "omega not right-continuous",
        );

        let count = components(set, lambda).expect("lambda > 1").count();
        verify(count == omega, lambda, "component count != omega");
        verify(
            components_graph_oracle(set, lambda).expect("lambda > 1") == count,
            lambda,
            "graph oracle disagrees with component scan",
        );

        let dense_ratio = is_densely_divisible(n, lambda).expect("lambda > 1");
        verify(
            is_densely_divisible_sweep(n, lambda).expect("lambda > 1") == dense_ratio,
            lambda,
            "sweep decider disagrees with ratio decider",
        );
        verify(
            is_densely_divisible_via_word(n, lambda).expect("lambda > 1") == dense_ratio,
            lambda,
            "word decider disagrees with ratio decider",
        );
        verify(
            dense_ratio == (count == 1),
            lambda,
            "dense divisibility != connectedness",
        );

        verify(
            delta(n, lambda).expect("lambda > 1")
                == delta_bruteforce(n, lambda).expect("lambda > 1"),
            lambda,
            "delta height disagrees with window maximum",
        );

        let next = set
            .next_singular_above(lambda)
            .unwrap_or_else(|| lambda + &Rational::one());
        let just_above = Rational::midpoint(lambda, &next);
        verify(
            lambda_class(set, &just_above).expect("lambda > 1") == right,
            lambda,
            "right limit does not match the class just above",
        );
    }

    (checks, failures)
}
