//! Invariants that tie several modules together.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use twgr_core::braidchar::{braiding_character, character_to_series_row};
use twgr_core::chromatic::{chromatic_character, chromatic_decision, StemGroup};
use twgr_core::extalg::ext_dim;
use twgr_core::graded::Twist;
use twgr_core::oracle::{all_permutations, categorical_trace_of, GradedVectorSpace};
use twgr_core::symgroup::{factorial, partitions};

fn twist(koszul: bool) -> Twist<BigInt> {
    if koszul {
        Twist::Koszul
    } else {
        Twist::Trivial
    }
}

#[test]
fn every_permutation_matches_its_class_value() {
    // element-wise rather than via canonical representatives
    for koszul in [false, true] {
        let tw = twist(koszul);
        for d in 1..=3usize {
            let space = GradedVectorSpace::concentrated(d, 1);
            for m in 0..=4u32 {
                let table = braiding_character(&tw, &BigInt::from(d), m).unwrap();
                for sigma in all_permutations(m as usize) {
                    let expected = table.value(&sigma.cycle_type()).unwrap();
                    let trace = categorical_trace_of(&sigma, &space, m, &tw).unwrap();
                    assert_eq!(trace, BigRational::from_integer(expected.clone()));
                }
            }
        }
    }
}

#[test]
fn averaged_character_at_t_equals_one_is_ext_dim() {
    for koszul in [false, true] {
        let tw = twist(koszul);
        for d in -3i64..=4 {
            for m in 0..=9u32 {
                let table = braiding_character(&tw, &BigInt::from(d), m).unwrap();
                let rows = character_to_series_row(&table);
                let sum: BigRational = table
                    .rows
                    .iter()
                    .zip(&rows)
                    .map(|(row, (_, laurent))| {
                        assert_eq!(laurent.offset, i64::from(m));
                        BigRational::from_integer(BigInt::from(row.class_size.clone()) * laurent.at_one())
                    })
                    .sum();
                let avg = sum / BigRational::from_integer(BigInt::from(factorial(m)));
                assert_eq!(avg, BigRational::from_integer(ext_dim(&tw, &BigInt::from(d), m).unwrap()));
            }
        }
    }
}

#[test]
fn chromatic_tables_delegate_to_height_zero() {
    for (p, n, orders) in [(2u64, 1u32, vec![2u64]), (2, 2, vec![8]), (2, 2, vec![2, 4]), (3, 2, vec![3])] {
        let group = StemGroup::new(p, n, orders).unwrap();
        let gen = group.generator();
        for alpha in [group.zero(), gen.clone(), group.scale(&gen, 2).unwrap()] {
            let omega = chromatic_decision(&group, &alpha).unwrap().omega;
            for m in 0..=5 {
                let chrom = chromatic_character(&group, &alpha, m).unwrap();
                let direct = braiding_character(
                    &Twist::unit(BigInt::from(omega.to_i64())).unwrap(),
                    &BigInt::from(1),
                    m,
                )
                .unwrap();
                assert_eq!(chrom, direct);
                for row in &chrom.rows {
                    assert_eq!(row.value, BigInt::from(omega.pow(row.cycles as u64).to_i64()));
                }
                let ones = chrom.row(&twgr_core::Partition::ones(m)).unwrap();
                assert_eq!(ones.value, BigInt::from(omega.pow(u64::from(m)).to_i64()));
            }
        }
    }
}

proptest! {
    #[test]
    fn table_degrees_equal_the_tensor_power(m in 0u32..=12, d in -5i64..=5, koszul in any::<bool>()) {
        let table = braiding_character(&twist(koszul), &BigInt::from(d), m).unwrap();
        prop_assert_eq!(table.rows.len(), partitions(m).unwrap().len());
        for (_, laurent) in character_to_series_row(&table) {
            prop_assert_eq!(laurent.offset, i64::from(m));
        }
    }
}
