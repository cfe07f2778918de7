use std::sync::Arc;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::abgroup::{hom_group, Element, GroupType};
use crate::constructions::{complete_injective_resolution, complete_projective_resolution, hom_bicomplex, tensor_bicomplex};
use crate::complex::{Complex, Convention};
use crate::snf::IntMatrix;
use crate::Error;

fn strand_hom(m: u64, d: i64) -> Bicomplex {
    let module = Arc::new(FpGroup::cyclic(m, &[d]));
    let p = complete_projective_resolution(m, &module).unwrap();
    let e = complete_injective_resolution(m, &module).unwrap();
    hom_bicomplex(p.complex(), e.complex()).unwrap()
}

fn one(x: i64) -> IntMatrix {
    IntMatrix::from_rows(&[vec![x]], 0)
}

#[test]
fn zero_differentials() {
    let mut g = Grid::new(0, 0..=0, 0..=0);
    g.set_cell(0, 0, Arc::new(FpGroup::cyclic(0, &[2]))).unwrap();
    let x = g.into_bicomplex().unwrap();
    let s = x.boundary_subgroups(0, 0).unwrap();
    let cell = x.cell(0, 0).unwrap();
    assert!(s.zprime.equals(&Subgroup::whole(cell.clone())));
    assert!(s.zsecond.equals(&Subgroup::whole(cell)));
    assert!(s.bprime.is_trivial() && s.bsecond.is_trivial());

    let defects = x.check_exact_grid(-1..=1, -1..=1).unwrap();
    assert_eq!(
        defects,
        vec![GridDefect { i: 0, j: 0, hprime_nonzero: true, hsecond_nonzero: true }]
    );
    for order in [IteratedOrder::FirstThenSecond, IteratedOrder::SecondThenFirst] {
        assert_eq!(x.iterated_homology(0, 0, order).unwrap().group_type(), GroupType::cyclic(2));
    }
    assert!(matches!(x.core_homology(0, 0), Err(Error::HypothesisViolated { i: 0, j: 0, .. })));
}

#[test]
fn zero_bicomplex() {
    let x = Grid::new(3, 0..=1, 0..=1).into_bicomplex().unwrap();
    assert!(x.check_exact_grid(-2..=2, -2..=2).unwrap().is_empty());
    assert!(x.core_equality_check(0, 0).unwrap());
    assert!(x.core_homology(1, 1).unwrap().group().is_trivial());
}

/// Elements of the Hom cell that are killed by `− ∘ (·2)` on a ℤ/4 strand,
/// found by evaluating each homomorphism on every element.
fn brute_kernel_of_times_two(x: &Bicomplex) -> Vec<Element> {
    let cell = x.cell(0, 0).unwrap();
    let hom = hom_group(&Arc::new(FpGroup::free(4, 1)), &Arc::new(FpGroup::free(4, 1)));
    assert_eq!(cell.group_type(), hom.group().group_type());
    cell.elements()
        .into_iter()
        .filter(|f| {
            let fm = x.dprime(0, 0).unwrap().apply(f);
            fm.is_zero()
        })
        .collect()
}

#[test]
fn z4_strand_hom_bicomplex() {
    let x = strand_hom(4, 2);
    for (i, j) in [(0, 0), (1, -1), (-2, 3)] {
        assert_eq!(x.cell(i, j).unwrap().group_type(), GroupType::cyclic(4));
        let two = BigInt::from(2);
        let g = x.cell(i, j).unwrap().generators()[0].clone();
        assert_eq!(x.dprime(i, j).unwrap().apply(&g), g.scale(&two));
        assert_eq!(x.dsecond(i, j).unwrap().apply(&g), g.scale(&two));
    }
    let killed = brute_kernel_of_times_two(&x);
    assert_eq!(killed.len(), 2);
    let s = x.boundary_subgroups(0, 0).unwrap();
    let brute = Subgroup::new(x.cell(0, 0).unwrap(), killed);
    assert!(s.zprime.equals(&brute) && s.zsecond.equals(&brute));

    assert!(x.check_exact_grid(-2..=2, -2..=2).unwrap().is_empty());
    for i in -2..=2 {
        for j in -2..=2 {
            assert!(x.core_equality_check(i, j).unwrap());
            assert_eq!(x.core_homology(i, j).unwrap().group().group_type(), GroupType::cyclic(2));
            for order in [IteratedOrder::FirstThenSecond, IteratedOrder::SecondThenFirst] {
                assert!(x.iterated_homology(i, j, order).unwrap().is_trivial());
            }
        }
    }
}

#[test]
fn z9_strand_core_homology() {
    let x = strand_hom(9, 3);
    for (i, j) in [(0, 0), (4, -7)] {
        assert_eq!(x.core_homology(i, j).unwrap().group().group_type(), GroupType::cyclic(3));
        assert_eq!(
            x.core_homology_via_dsecond(i, j).unwrap().group().group_type(),
            GroupType::cyclic(3)
        );
    }
}

#[test]
fn diagonal_shift_on_strand() {
    let x = strand_hom(4, 2);
    let c = x.core_generators(0, 0).unwrap().remove(0);
    assert!(!c.is_zero());
    let up = x.diagonal_shift(&c, Direction::Plus).unwrap();
    assert_eq!(up.bidegree(), (1, -1));
    assert!(!up.is_zero());
    assert_eq!(x.diagonal_shift(&up, Direction::Minus).unwrap(), c);

    let zero = x.class(0, 0, x.cell(0, 0).unwrap().zero_element()).unwrap();
    assert!(x.diagonal_shift(&zero, Direction::Plus).unwrap().is_zero());

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for dir in [Direction::Plus, Direction::Minus] {
        assert!(x.shift_is_well_defined(&c, dir, 8, &mut rng).unwrap());
    }
}

fn square(anti: bool) -> Grid {
    let mut g = Grid::new(0, 0..=1, 0..=1);
    for (i, j) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        g.set_cell(i, j, Arc::new(FpGroup::free(0, 1))).unwrap();
    }
    g.set_dprime(0, 0, one(2)).unwrap();
    g.set_dprime(0, 1, one(2)).unwrap();
    g.set_dsecond(0, 0, one(3)).unwrap();
    g.set_dsecond(1, 0, one(if anti { -3 } else { 3 })).unwrap();
    g
}

fn same_maps(a: &Bicomplex, b: &Bicomplex) -> bool {
    (-1..=2).all(|i| {
        (-1..=2).all(|j| {
            a.dprime(i, j).unwrap().equals(&b.dprime(i, j).unwrap())
                && a.dsecond(i, j).unwrap().equals(&b.dsecond(i, j).unwrap())
        })
    })
}

#[test]
fn sign_conversion() {
    let x = square(false).into_bicomplex().unwrap();
    let dc = x.to_double_complex(-1..=2, -1..=2).unwrap();
    assert!(dc.data().dsecond(1, 0).unwrap().equals(&x.dsecond(1, 0).unwrap().negate()));
    assert!(dc.data().dsecond(0, 0).unwrap().equals(&x.dsecond(0, 0).unwrap()));
    let back = Bicomplex::from_double_complex(&dc, -1..=2, -1..=2).unwrap();
    assert!(same_maps(&back, &x));

    let direct = DoubleComplex::from_grid(square(true)).unwrap();
    assert!(same_maps(direct.data(), dc.data()));
    assert!(matches!(square(true).into_bicomplex(), Err(Error::ConventionViolation { .. })));
    assert!(matches!(DoubleComplex::from_grid(square(false)), Err(Error::ConventionViolation { .. })));

    // zero d'' is a fixed point
    let mut g = Grid::new(0, 0..=1, 0..=0);
    g.set_cell(0, 0, Arc::new(FpGroup::free(0, 1))).unwrap();
    g.set_cell(1, 0, Arc::new(FpGroup::free(0, 1))).unwrap();
    g.set_dprime(0, 0, one(5)).unwrap();
    let y = g.into_bicomplex().unwrap();
    assert!(same_maps(y.to_double_complex(-1..=2, -1..=2).unwrap().data(), &y));
}

#[test]
fn conversion_preserves_core_homology() {
    let x = strand_hom(4, 2);
    let dc = x.to_double_complex(-2..=2, -2..=2).unwrap();
    let y = dc.to_bicomplex(-2..=2, -2..=2).unwrap();
    for (i, j) in [(0, 0), (1, 2), (-1, 0)] {
        assert_eq!(
            x.core_homology(i, j).unwrap().group().group_type(),
            y.core_homology(i, j).unwrap().group().group_type()
        );
    }
}

fn disc() -> Complex {
    let cells = vec![Arc::new(FpGroup::free(0, 1)), Arc::new(FpGroup::free(0, 1))];
    Complex::new(
        Convention::Homological,
        0,
        crate::complex::Support::Window { lo: 0, hi: 1, zero_outside: true },
        cells,
        std::collections::BTreeMap::from([(1, one(1))]),
    )
    .unwrap()
}

#[test]
fn disc_tensor_disc() {
    let x = tensor_bicomplex(&disc(), &disc()).unwrap();
    assert!(x.bprime(0, 0).unwrap().equals(&Subgroup::whole(x.cell(0, 0).unwrap())));
    assert!(x.check_exact_grid(-3..=2, -3..=2).unwrap().is_empty());
    assert!(x.core_homology(0, 0).unwrap().group().is_trivial());
}

#[test]
fn chase_failure_is_loud() {
    // a column that is not exact: the chase must refuse before solving
    let mut g = Grid::new(0, 0..=0, 0..=0);
    g.set_cell(0, 0, Arc::new(FpGroup::cyclic(0, &[2]))).unwrap();
    let x = g.into_bicomplex().unwrap();
    assert!(matches!(x.class(0, 0, x.cell(0, 0).unwrap().zero_element()), Err(Error::HypothesisViolated { .. })));
}
