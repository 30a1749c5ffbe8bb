//! Cross-module consistency checks, run by `twgr verify`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::braidchar::braiding_character;
use crate::extalg::{ext_dim, verify_sym_ext_identity};
use crate::graded::Twist;
use crate::oracle::{projector_dim, trace_at_class, GradedVectorSpace};
use crate::symgroup::{factorial, partitions};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, failures: Vec<String>, total: usize) -> Check {
    Check {
        name,
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{total} cases")
        } else {
            format!("{} of {total} cases failed, first: {}", failures.len(), failures[0])
        },
    }
}

fn twists() -> [Twist<BigInt>; 2] {
    [Twist::Trivial, Twist::Koszul]
}

/// Closed-form characters against explicit traces, `m ≤ 5`, `d ≤ 3`.
pub fn characters_match_oracle() -> Check {
    let mut failures = Vec::new();
    let mut total = 0;
    for tw in twists() {
        for d in 1..=3usize {
            for m in 0..=5 {
                let table = braiding_character(&tw, &BigInt::from(d), m).expect("m within cap");
                for row in &table.rows {
                    total += 1;
                    match trace_at_class(&row.partition, d, &tw) {
                        Ok(t) if t == row.value => {}
                        other => failures.push(format!(
                            "{tw} d={d} {}: {} vs {other:?}",
                            row.partition, row.value
                        )),
                    }
                }
            }
        }
    }
    check("character-vs-oracle", failures, total)
}

/// Averaged dimensions against projector ranks, `d ≤ 3`, `n ≤ 5`.
pub fn ext_dims_match_projectors() -> Check {
    let mut failures = Vec::new();
    let mut total = 0;
    for tw in twists() {
        for d in 0..=3usize {
            for n in 0..=5 {
                total += 1;
                let closed = ext_dim(&tw, &BigInt::from(d), n).map(BigRational::from_integer);
                let brute = projector_dim(&GradedVectorSpace::concentrated(d, 1), n, &tw);
                if closed != brute {
                    failures.push(format!("{tw} d={d} n={n}: {closed:?} vs {brute:?}"));
                }
            }
        }
    }
    check("ext-dim-vs-projector", failures, total)
}

pub fn generating_function_identity() -> Check {
    let mut failures = Vec::new();
    for d in 0..=4u64 {
        match verify_sym_ext_identity(d, 10) {
            Ok(c) if c.holds => {}
            other => failures.push(format!("d={d}: {other:?}")),
        }
    }
    check("sym-ext-identity", failures, 5)
}

pub fn class_sizes_sum_to_factorial() -> Check {
    let mut failures = Vec::new();
    for m in 0..=8 {
        let sum: num_bigint::BigUint = partitions(m)
            .expect("m within cap")
            .iter()
            .map(|l| l.class_size())
            .sum();
        if sum != factorial(m) {
            failures.push(format!("m={m}: {sum}"));
        }
    }
    check("class-sizes", failures, 9)
}

pub fn run_all() -> Vec<Check> {
    vec![
        class_sizes_sum_to_factorial(),
        characters_match_oracle(),
        ext_dims_match_projectors(),
        generating_function_identity(),
    ]
}
