use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use super::*;
use crate::abgroup::{Element, GroupType};
use crate::complex::hom_into_module;
use crate::snf::IntMatrix;

fn cyc(m: u64, orders: &[i64]) -> Arc<FpGroup> {
    Arc::new(FpGroup::cyclic(m, orders))
}

fn strand(m: u64, d: i64) -> Complex {
    complete_projective_resolution(m, &cyc(m, &[d])).unwrap().complex().clone()
}

fn zero_complex(m: u64, convention: Convention) -> Complex {
    Complex::new(
        convention,
        m,
        Support::Periodic { period: 1 },
        vec![Arc::new(FpGroup::zero(m))],
        BTreeMap::new(),
    )
    .unwrap()
}

fn scalar_of(f: &Morphism) -> BigInt {
    assert_eq!(f.matrix().shape(), (1, 1));
    f.matrix()[(0, 0)].clone()
}

/// Sets of kernel and image elements computed by evaluating on every element.
fn brute_ker_im(f: &Morphism) -> (BTreeSet<Vec<BigInt>>, BTreeSet<Vec<BigInt>>) {
    let norm = |e: &Element| e.normalized().coords().to_vec();
    let ker = f.source().elements().iter().filter(|x| f.apply(x).is_zero()).map(norm).collect();
    let im = f.source().elements().iter().map(|x| norm(&f.apply(x))).collect();
    (ker, im)
}

#[test]
fn hom_bicomplex_of_zero() {
    let x = hom_bicomplex(
        &zero_complex(4, Convention::Homological),
        &zero_complex(4, Convention::Cohomological),
    )
    .unwrap();
    assert!(x.cell(0, 0).unwrap().is_trivial() && x.cell(-3, 5).unwrap().is_trivial());
    assert!(tensor_bicomplex(&strand(4, 2), &zero_complex(4, Convention::Homological))
        .unwrap()
        .cell(1, 1)
        .unwrap()
        .is_trivial());
}

#[test]
fn hom_rows_are_hom_into_cells() {
    let c = strand(4, 2);
    let d = complete_injective_resolution(4, &cyc(4, &[2])).unwrap().complex().clone();
    let x = hom_bicomplex(&c, &d).unwrap();
    for j in -1..=1 {
        let row = hom_into_module(&c, &d.cell(j).unwrap()).unwrap();
        for i in -1..=1 {
            assert_eq!(row.cell(i).unwrap().group_type(), x.cell(i, j).unwrap().group_type());
            assert_eq!(row.diff(i).unwrap().matrix(), x.dprime(i, j).unwrap().matrix());
        }
    }
}

#[test]
fn tensor_of_z4_strands() {
    let x = tensor_bicomplex(&strand(4, 2), &strand(4, 2)).unwrap();
    for (i, j) in [(0, 0), (2, -1)] {
        let cell = x.cell(i, j).unwrap();
        assert_eq!(cell.group_type(), GroupType::cyclic(4));
        let g = &cell.generators()[0];
        assert_eq!(x.dprime(i, j).unwrap().apply(g), g.scale(&BigInt::from(2)));
        assert_eq!(x.dsecond(i, j).unwrap().apply(g), g.scale(&BigInt::from(2)));
    }
    assert!(x.check_exact_grid(-2..=2, -2..=2).unwrap().is_empty());
}

#[test]
fn tensor_with_disc_has_exact_rows() {
    let disc = Complex::new(
        Convention::Homological,
        0,
        Support::Window { lo: 0, hi: 1, zero_outside: true },
        vec![Arc::new(FpGroup::free(0, 1)), Arc::new(FpGroup::free(0, 1))],
        BTreeMap::from([(1, IntMatrix::identity(1))]),
    )
    .unwrap();
    let other = Complex::new(
        Convention::Homological,
        0,
        Support::Window { lo: 0, hi: 0, zero_outside: true },
        vec![cyc(0, &[6, 0])],
        BTreeMap::new(),
    )
    .unwrap();
    let x = tensor_bicomplex(&disc, &other).unwrap();
    for i in -3..=2 {
        for j in -2..=2 {
            assert!(x.exactness_at(i, j).unwrap().0);
        }
    }
}

#[test]
fn projective_resolution_examples() {
    let p = complete_projective_resolution(4, &cyc(4, &[2])).unwrap();
    assert_eq!(p.complex().support(), Support::Periodic { period: 1 });
    assert_eq!(scalar_of(&p.complex().diff(0).unwrap()), BigInt::from(2));
    let (ker, im) = brute_ker_im(&p.complex().diff(0).unwrap());
    let expected: BTreeSet<Vec<BigInt>> = [0, 2].iter().map(|&v| vec![BigInt::from(v)]).collect();
    assert_eq!(ker, expected);
    assert_eq!(im, expected);
    let (z, _, _) = p.cycle_isomorphism().unwrap();
    assert_eq!(z.group_type(), GroupType::cyclic(2));

    let free = complete_projective_resolution(4, &cyc(4, &[4])).unwrap();
    assert_eq!(free.complex().support(), Support::Periodic { period: 2 });
    assert_eq!(scalar_of(&free.complex().diff(0).unwrap()), BigInt::from(0));
    assert_eq!(scalar_of(&free.complex().diff(1).unwrap()), BigInt::from(1));
    assert!(free.complex().is_exact().unwrap());
    assert_eq!(free.cycle_isomorphism().unwrap().0.group_type(), GroupType::cyclic(4));

    let nine = complete_projective_resolution(9, &cyc(9, &[3])).unwrap();
    assert_eq!(nine.complex().support(), Support::Periodic { period: 1 });
    assert_eq!(scalar_of(&nine.complex().diff(0).unwrap()), BigInt::from(3));
    let (ker, _) = brute_ker_im(&nine.complex().diff(0).unwrap());
    assert_eq!(ker.len(), 3);
    assert_eq!(nine.cycle_isomorphism().unwrap().0.group_type(), GroupType::cyclic(3));
}

#[test]
fn injective_resolution_examples() {
    let e = complete_injective_resolution(4, &cyc(4, &[2])).unwrap();
    assert_eq!(e.complex().convention(), Convention::Cohomological);
    assert_eq!(scalar_of(&e.complex().diff(0).unwrap()), BigInt::from(2));
    assert_eq!(e.cycle_isomorphism().unwrap().0.group_type(), GroupType::cyclic(2));

    let zero = complete_injective_resolution(4, &Arc::new(FpGroup::zero(4))).unwrap();
    assert!(zero.complex().cell(0).unwrap().is_trivial());

    let six = complete_injective_resolution(6, &cyc(6, &[2, 3])).unwrap();
    let d0 = six.complex().diff(0).unwrap();
    let d1 = six.complex().diff(1).unwrap();
    assert_eq!(d0.matrix(), &IntMatrix::diagonal(2, 2, &[2, 3]));
    assert_eq!(d1.matrix(), &IntMatrix::diagonal(2, 2, &[3, 2]));
    let (ker0, im0) = brute_ker_im(&d0);
    let (ker1, im1) = brute_ker_im(&d1);
    assert_eq!(ker0, im1);
    assert_eq!(ker1, im0);
    assert_eq!(ker0.len(), 6);
    assert_eq!(six.cycle_isomorphism().unwrap().0.group_type(), GroupType::cyclic(6));
}

#[test]
fn resolution_errors() {
    assert!(matches!(
        complete_projective_resolution(4, &cyc(0, &[3])),
        Err(Error::NotAModule { modulus: 4, .. })
    ));
    assert!(matches!(
        complete_projective_resolution(4, &cyc(0, &[0])),
        Err(Error::NotAModule { .. })
    ));
    assert_eq!(
        complete_projective_resolution(1, &cyc(0, &[])).unwrap_err(),
        Error::InvalidModulus(1)
    );
}

#[test]
fn elementary_divisor_split() {
    assert_eq!(elementary_divisors(12), vec![4, 3]);
    assert_eq!(elementary_divisors(9), vec![9]);
    assert_eq!(elementary_divisors(1), Vec::<u64>::new());
}

fn window(summands: usize) -> RandomComplexParams {
    RandomComplexParams {
        shape: RandomShape::Window { lo: -2, hi: 2 },
        summands,
        convention: Convention::Homological,
    }
}

#[test]
fn random_complexes() {
    let zero = random_exact_complex(4, 1, window(0)).unwrap();
    assert!((-2..=2).all(|n| zero.cell(n).unwrap().is_trivial()));

    let c = random_exact_complex(4, 11, window(3)).unwrap();
    assert!(c.is_exact_on(-4, 4).unwrap());
    let again = random_exact_complex(4, 11, window(3)).unwrap();
    let same = |a: &Complex, b: &Complex| (-1..=2).all(|n| a.diff(n).unwrap().matrix() == b.diff(n).unwrap().matrix());
    assert!(same(&c, &again));

    let periodic = |seed| {
        random_exact_complex(
            12,
            seed,
            RandomComplexParams {
                shape: RandomShape::Periodic,
                summands: 3,
                convention: Convention::Homological,
            },
        )
        .unwrap()
    };
    let (a, b) = (periodic(1), periodic(2));
    assert!(a.is_exact().unwrap() && b.is_exact().unwrap());
    assert!(!same(&a, &b));

    let coh = random_exact_complex(
        9,
        3,
        RandomComplexParams {
            shape: RandomShape::Periodic,
            summands: 2,
            convention: Convention::Cohomological,
        },
    )
    .unwrap();
    assert_eq!(coh.convention(), Convention::Cohomological);
}

#[test]
fn witnesses_on_strands() {
    let c = strand(4, 2);
    let d = complete_injective_resolution(4, &cyc(4, &[2])).unwrap().complex().clone();
    for (i, j) in [(0, 0), (1, -2), (-3, 1)] {
        let w = zprime_witness(&c, &d, (i, j)).unwrap();
        assert_eq!(w.cocycles.group_type(), GroupType::cyclic(2));
        assert_eq!(w.hom.group_type(), GroupType::cyclic(2));
        assert!(w.is_isomorphism().unwrap());
        let v = zsecond_witness(&c, &d, (i, j)).unwrap();
        assert_eq!(v.cocycles.group_type(), v.hom.group_type());
        assert!(v.is_isomorphism().unwrap());
    }
    let zero = zero_complex(4, Convention::Cohomological);
    let w = zprime_witness(&c, &zero, (0, 0)).unwrap();
    assert!(w.cocycles.is_trivial() && w.hom.is_trivial());
    assert!(w.is_isomorphism().unwrap());
}

#[test]
fn witness_needs_exactness() {
    let lone = Complex::new(
        Convention::Homological,
        0,
        Support::Window { lo: 0, hi: 0, zero_outside: true },
        vec![cyc(0, &[2])],
        BTreeMap::new(),
    )
    .unwrap();
    let d = zero_complex(0, Convention::Cohomological);
    assert!(matches!(zprime_witness(&lone, &d, (1, 0)), Err(Error::HypothesisViolated { .. })));
}
