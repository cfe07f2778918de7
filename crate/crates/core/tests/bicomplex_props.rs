use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;
use tatebal::abgroup::FpGroup;
use tatebal::bicomplex::{Bicomplex, Direction, IteratedOrder};
use tatebal::complex::{hom_from_module, hom_into_module, Complex, Convention};
use tatebal::constructions::{
    complete_injective_resolution, complete_projective_resolution, hom_bicomplex, random_exact_complex,
    tensor_bicomplex, zprime_witness, zsecond_witness, RandomComplexParams, RandomShape,
};

const MODULI: [u64; 4] = [4, 8, 9, 12];

#[derive(Clone, Copy, Debug)]
struct Spec {
    modulus: u64,
    seed: u64,
    periodic: bool,
    summands: usize,
}

fn spec() -> impl Strategy<Value = Spec> {
    (prop::sample::select(MODULI.to_vec()), any::<u64>(), prop::bool::weighted(0.8), 1usize..=2)
        .prop_map(|(modulus, seed, periodic, summands)| Spec { modulus, seed, periodic, summands })
}

fn complex(s: Spec, modulus: u64, convention: Convention) -> Complex {
    let shape = if s.periodic { RandomShape::Periodic } else { RandomShape::Window { lo: -2, hi: 2 } };
    random_exact_complex(modulus, s.seed, RandomComplexParams { shape, summands: s.summands, convention }).unwrap()
}

/// Hom bicomplex of two random exact complexes over a common modulus.
fn hom_pair(a: Spec, b: Spec) -> (Complex, Complex, Bicomplex) {
    let c = complex(a, a.modulus, Convention::Homological);
    let d = complex(b, a.modulus, Convention::Cohomological);
    let x = hom_bicomplex(&c, &d).unwrap();
    (c, d, x)
}

fn tensor_pair(a: Spec, b: Spec) -> Bicomplex {
    let c = complex(a, a.modulus, Convention::Homological);
    let d = complex(b, a.modulus, Convention::Homological);
    tensor_bicomplex(&c, &d).unwrap()
}

fn check_core(x: &Bicomplex, i: i64, j: i64) -> Result<(), TestCaseError> {
    prop_assert!(x.core_equality_check(i, j).unwrap());
    prop_assert_eq!(
        x.core_homology(i, j).unwrap().group().group_type(),
        x.core_homology_via_dsecond(i, j).unwrap().group().group_type()
    );
    let gens = x.core_generators(i, j).unwrap();
    for dir in [Direction::Plus, Direction::Minus] {
        for a in &gens {
            let there = x.diagonal_shift(a, dir).unwrap();
            prop_assert_eq!(there.bidegree(), (i + dir.offset().0, j + dir.offset().1));
            prop_assert!(x.diagonal_shift(&there, dir.reversed()).unwrap() == *a);
            for b in &gens {
                let sum = x.diagonal_shift(&a.add(b).unwrap(), dir).unwrap();
                let parts = x.diagonal_shift(a, dir).unwrap().add(&x.diagonal_shift(b, dir).unwrap()).unwrap();
                prop_assert!(sum == parts);
            }
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hom_and_tensor_of_exact_complexes_are_exact(a in spec(), b in spec()) {
        let (_, _, x) = hom_pair(a, b);
        prop_assert!(x.check_exact_grid(-2..=2, -2..=2).unwrap().is_empty());
        prop_assert!(tensor_pair(a, b).check_exact_grid(-2..=2, -2..=2).unwrap().is_empty());
    }

    #[test]
    fn core_invariant_and_shift(a in spec(), b in spec(), i in -3i64..=3, j in -3i64..=3) {
        check_core(&hom_pair(a, b).2, i, j)?;
        check_core(&tensor_pair(a, b), i, j)?;
    }

    #[test]
    fn iterated_homology_vanishes_on_exact_grids(a in spec(), b in spec(), i in -2i64..=2, j in -2i64..=2) {
        let (_, _, x) = hom_pair(a, b);
        prop_assert!(x.check_exact_grid(i - 1..=i + 1, j - 1..=j + 1).unwrap().is_empty());
        for order in [IteratedOrder::FirstThenSecond, IteratedOrder::SecondThenFirst] {
            prop_assert!(x.iterated_homology(i, j, order).unwrap().is_trivial());
        }
    }

    #[test]
    fn sign_conversion_is_an_involution(a in spec(), b in spec(), i in -1i64..=1, j in -1i64..=1) {
        let (_, _, x) = hom_pair(a, b);
        let window = || -3..=3;
        let dc = x.to_double_complex(window(), window()).unwrap();
        let back = dc.to_bicomplex(window(), window()).unwrap();
        for (p, q) in [(i, j), (i + 1, j), (i, j + 1)] {
            prop_assert!(back.dprime(p, q).unwrap().equals(&x.dprime(p, q).unwrap()));
            prop_assert!(back.dsecond(p, q).unwrap().equals(&x.dsecond(p, q).unwrap()));
            let expected = if p.rem_euclid(2) == 1 { x.dsecond(p, q).unwrap().negate() } else { x.dsecond(p, q).unwrap() };
            prop_assert!(dc.data().dsecond(p, q).unwrap().equals(&expected));
        }
        prop_assert_eq!(
            back.core_homology(i, j).unwrap().group().group_type(),
            x.core_homology(i, j).unwrap().group().group_type()
        );
    }

    #[test]
    fn witnesses_and_hom_of_cycles(a in spec(), b in spec(), i in -3i64..=3, j in -3i64..=3) {
        let (c, d, x) = hom_pair(a, b);
        prop_assert!(zprime_witness(&c, &d, (i, j)).unwrap().is_isomorphism().unwrap());
        prop_assert!(zsecond_witness(&c, &d, (i, j)).unwrap().is_isomorphism().unwrap());
        let core = x.core_homology(i, j).unwrap().group().group_type();
        let cycles = c.cycles(i - 1).unwrap().as_group().0;
        prop_assert_eq!(&core, &hom_from_module(&cycles, &d).unwrap().homology_type(j).unwrap());
        let cocycles = d.cycles(j).unwrap().as_group().0;
        prop_assert_eq!(&core, &hom_into_module(&c, &cocycles).unwrap().homology_type(i).unwrap());
    }

    #[test]
    fn complete_resolutions(m in prop::sample::select(MODULI.to_vec()), picks in prop::collection::vec(0usize..100, 0..=3)) {
        let divisors: Vec<u64> = (1..=m).filter(|d| m % d == 0).collect();
        let orders: Vec<BigInt> = picks.iter().map(|k| BigInt::from(divisors[k % divisors.len()])).collect();
        let module = Arc::new(FpGroup::cyclic(m, &orders));
        for r in [complete_projective_resolution(m, &module).unwrap(), complete_injective_resolution(m, &module).unwrap()] {
            prop_assert!(r.complex().is_exact().unwrap());
            let (cycles, _, _) = r.cycle_isomorphism().unwrap();
            prop_assert_eq!(cycles.group_type(), module.group_type());
        }
    }
}
