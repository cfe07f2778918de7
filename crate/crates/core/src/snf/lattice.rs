//! Integer lattices, modular linear systems and kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::matrix::IntMatrix;
use super::normal_form::hermite_normal_form;
use crate::Modulus;

/// Column lattice of a generator matrix, kept in Hermite form together with
/// the integer combinations of the generators that produce each basis vector.
#[derive(Clone, Debug)]
pub struct Lattice {
    basis: IntMatrix,
    pivots: Vec<usize>,
    combos: IntMatrix,
}

impl Lattice {
    pub fn from_generators(gens: &IntMatrix) -> Self {
        let hnf = hermite_normal_form(gens);
        let rank = hnf.rank();
        Lattice {
            basis: hnf.h.select_columns(0..rank),
            pivots: hnf.pivots,
            combos: hnf.v.select_columns(0..rank),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Hermite basis, one column per basis vector.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// Coefficients of `x` on the Hermite basis, if `x` lies in the lattice.
    pub fn basis_coordinates(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(x.len(), self.dim(), "lattice membership dimension mismatch");
        let mut r = x.to_vec();
        let mut coeffs = Vec::with_capacity(self.rank());
        let mut row = 0;
        for (k, &p) in self.pivots.iter().enumerate() {
            if r[row..p].iter().any(|v| !v.is_zero()) {
                return None;
            }
            let (q, rem) = r[p].div_rem(&self.basis[(p, k)]);
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (i, ri) in r.iter_mut().enumerate().skip(p) {
                    *ri -= &q * &self.basis[(i, k)];
                }
            }
            coeffs.push(q);
            row = p + 1;
        }
        if r[row..].iter().any(|v| !v.is_zero()) {
            return None;
        }
        Some(coeffs)
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.basis_coordinates(x).is_some()
    }

    /// Some integer combination `y` of the original generators with `G·y = x`.
    pub fn solve(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        self.basis_coordinates(x).map(|c| self.combos.mul_vec(&c))
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis.columns().iter().all(|c| self.contains(c))
    }
}

fn with_modulus_columns(a: &IntMatrix, m: Modulus) -> IntMatrix {
    if m == 0 {
        a.clone()
    } else {
        a.hconcat(&IntMatrix::identity(a.rows()).scale(&BigInt::from(m)))
    }
}

/// Some `x` with `A·x ≡ b (mod m)`, or `None` when the system is insoluble.
/// `m = 0` solves over the integers.
pub fn solve_mod(a: &IntMatrix, b: &[BigInt], m: Modulus) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len(), "solve_mod: right-hand side length mismatch");
    let lattice = Lattice::from_generators(&with_modulus_columns(a, m));
    let y = lattice.solve(b)?;
    let modulus = BigInt::from(m);
    Some(
        y.into_iter()
            .take(a.cols())
            .map(|v| if m == 0 { v } else { v.mod_floor(&modulus) })
            .collect(),
    )
}

/// Hermite basis of the lattice spanned by the columns of `gens`.
pub fn lattice_basis(gens: &IntMatrix) -> IntMatrix {
    let hnf = hermite_normal_form(gens);
    let rank = hnf.rank();
    hnf.h.select_columns(0..rank)
}

/// Columns generate `{x : A·x ≡ 0 (mod m)}`. For `m > 0` the generators
/// `m·eᵢ` are part of the lattice being reduced.
pub fn kernel_basis(a: &IntMatrix, m: Modulus) -> IntMatrix {
    let n = a.cols();
    let full = with_modulus_columns(a, m);
    let hnf = hermite_normal_form(&full);
    let kernel = hnf
        .v
        .select_columns(hnf.rank()..full.cols())
        .select_rows(0..n);
    if m == 0 {
        lattice_basis(&kernel)
    } else {
        lattice_basis(&kernel.hconcat(&IntMatrix::identity(n).scale(&BigInt::from(m))))
    }
}

/// Generators of the intersection of two column lattices in a common ambient space.
pub fn lattice_intersect(b1: &IntMatrix, b2: &IntMatrix) -> IntMatrix {
    assert_eq!(b1.rows(), b2.rows(), "lattice_intersect: ambient rank mismatch");
    let block = b1.hconcat(&b2.neg());
    let kernel = kernel_basis(&block, 0);
    let top = kernel.select_rows(0..b1.cols());
    lattice_basis(&(b1 * &top))
}
