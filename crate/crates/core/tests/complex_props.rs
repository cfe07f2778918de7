use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;
use tatebal::abgroup::{FpGroup, GroupType};
use tatebal::complex::{hom_into_module, Complex, Convention, Support};
use tatebal::snf::IntMatrix;

/// A complex with interesting homology: either `ℤ^a → ℤ^b` placed at
/// degrees 1, 0, or a period-1 complex `ℤ/m -·s→ ℤ/m` with `s² ≡ 0`.
#[derive(Clone, Debug)]
enum Shape {
    Map { rows: usize, cols: usize, entries: Vec<i64> },
    Square { modulus: u64, scalar: u64 },
}

fn build(shape: &Shape) -> Complex {
    match shape {
        Shape::Map { rows, cols, entries } => Complex::new(
            Convention::Homological,
            0,
            Support::Window { lo: 0, hi: 1, zero_outside: true },
            vec![Arc::new(FpGroup::free(0, *rows)), Arc::new(FpGroup::free(0, *cols))],
            BTreeMap::from([(1, IntMatrix::from_fn(*rows, *cols, |i, j| BigInt::from(entries[i * cols + j])))]),
        )
        .unwrap(),
        Shape::Square { modulus, scalar } => Complex::new(
            Convention::Homological,
            *modulus,
            Support::Periodic { period: 1 },
            vec![Arc::new(FpGroup::free(*modulus, 1))],
            BTreeMap::from([(0, IntMatrix::from_rows(&[vec![*scalar as i64]], 1))]),
        )
        .unwrap(),
    }
}

fn map_shape() -> impl Strategy<Value = Shape> {
    (0usize..=3, 0usize..=3).prop_flat_map(|(rows, cols)| {
        prop::collection::vec(-6i64..=6, rows * cols).prop_map(move |entries| Shape::Map { rows, cols, entries })
    })
}

/// Two squares over a common modulus.
fn square_pair() -> impl Strategy<Value = (Shape, Shape)> {
    (2u64..=36).prop_flat_map(|m| {
        let ok: Vec<u64> = (0..m).filter(|s| (s * s) % m == 0).collect();
        (prop::sample::select(ok.clone()), prop::sample::select(ok)).prop_map(move |(a, b)| {
            (Shape::Square { modulus: m, scalar: a }, Shape::Square { modulus: m, scalar: b })
        })
    })
}

fn square_shape() -> impl Strategy<Value = Shape> {
    square_pair().prop_map(|(a, _)| a)
}

fn sum_type(a: &GroupType, b: &GroupType) -> GroupType {
    let mut factors: Vec<BigInt> = a.torsion.iter().chain(&b.torsion).cloned().collect();
    factors.extend(std::iter::repeat(BigInt::from(0)).take(a.free_rank + b.free_rank));
    GroupType::from_factors(&factors)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn boundaries_are_cycles(shape in prop_oneof![map_shape(), square_shape()]) {
        let c = build(&shape);
        for n in -2..=3 {
            prop_assert!(c.cycles(n).unwrap().contains_subgroup(&c.boundaries(n).unwrap()));
        }
    }

    #[test]
    fn periodic_homology_repeats(shape in square_shape(), n in -20i64..20) {
        let c = build(&shape);
        prop_assert_eq!(c.homology_type(n).unwrap(), c.homology_type(n + 1).unwrap());
        let doubled = c.direct_sum(&c).unwrap();
        prop_assert_eq!(doubled.homology_type(n).unwrap(), doubled.homology_type(n + 7).unwrap());
    }

    #[test]
    fn homology_of_sums(a in map_shape(), b in map_shape(), n in -1i64..=2) {
        let (a, b) = (build(&a), build(&b));
        let sum = a.direct_sum(&b).unwrap();
        prop_assert_eq!(
            sum.homology_type(n).unwrap(),
            sum_type(&a.homology_type(n).unwrap(), &b.homology_type(n).unwrap())
        );
        let target = Arc::new(FpGroup::cyclic(0, &[6, 0]));
        let hom = |c: &Complex| hom_into_module(c, &target).unwrap().homology_type(n).unwrap();
        prop_assert_eq!(hom(&sum), sum_type(&hom(&a), &hom(&b)));
    }

    #[test]
    fn square_sums_commute_with_hom(pair in square_pair(), n in -3i64..=3) {
        let (a, b) = (build(&pair.0), build(&pair.1));
        let m = a.modulus();
        let sum = a.direct_sum(&b).unwrap();
        prop_assert_eq!(
            sum.homology_type(n).unwrap(),
            sum_type(&a.homology_type(n).unwrap(), &b.homology_type(n).unwrap())
        );
        let target = Arc::new(FpGroup::cyclic(m, &[m]));
        let hom = |c: &Complex| hom_into_module(c, &target).unwrap().homology_type(n).unwrap();
        prop_assert_eq!(hom(&sum), sum_type(&hom(&a), &hom(&b)));
    }

    #[test]
    fn reindexing_negates_degrees(shape in prop_oneof![map_shape(), square_shape()], n in -2i64..=3) {
        let c = build(&shape);
        let r = c.reindexed();
        prop_assert_eq!(r.convention(), Convention::Cohomological);
        prop_assert_eq!(c.homology_type(n).unwrap(), r.homology_type(-n).unwrap());
        prop_assert_eq!(r.reindexed().homology_type(n).unwrap(), c.homology_type(n).unwrap());
    }
}
