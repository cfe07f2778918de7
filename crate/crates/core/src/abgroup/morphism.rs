use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::group::{Element, FpGroup};
use super::subgroup::Subgroup;
use crate::snf::{kernel_basis, solve_mod, IntMatrix};
use crate::{Error, Result};

/// Homomorphism given by an integer matrix on ambient generators
/// (`target.ambient_rank × source.ambient_rank`).
#[derive(Clone)]
pub struct Morphism {
    source: Arc<FpGroup>,
    target: Arc<FpGroup>,
    matrix: IntMatrix,
}

impl Morphism {
    /// Checks that every source relator lands in the target relation lattice.
    pub fn new(source: Arc<FpGroup>, target: Arc<FpGroup>, matrix: IntMatrix) -> Result<Self> {
        if matrix.shape() != (target.ambient_rank(), source.ambient_rank()) {
            return Err(Error::Shape(format!(
                "morphism matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.ambient_rank(),
                source.ambient_rank()
            )));
        }
        let images = &matrix * source.relations();
        for k in 0..images.cols() {
            if !target.is_zero_coords(&images.column(k)) {
                return Err(Error::IllDefined { relator: k });
            }
        }
        Ok(Self::new_unchecked(source, target, matrix))
    }

    /// For matrices that are well defined by construction.
    pub(crate) fn new_unchecked(source: Arc<FpGroup>, target: Arc<FpGroup>, matrix: IntMatrix) -> Self {
        let matrix = matrix.reduce_mod(&BigInt::from(target.modulus()));
        Morphism {
            source,
            target,
            matrix,
        }
    }

    pub fn identity(g: Arc<FpGroup>) -> Self {
        let n = g.ambient_rank();
        Morphism::new_unchecked(g.clone(), g, IntMatrix::identity(n))
    }

    pub fn zero(source: Arc<FpGroup>, target: Arc<FpGroup>) -> Self {
        let m = IntMatrix::zeros(target.ambient_rank(), source.ambient_rank());
        Morphism::new_unchecked(source, target, m)
    }

    pub fn source(&self) -> &Arc<FpGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FpGroup> {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply_coords(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.target.reduce(self.matrix.mul_vec(x))
    }

    pub fn apply(&self, x: &Element) -> Element {
        assert!(
            x.group().same_as(&self.source),
            "morphism applied to an element of another group"
        );
        self.target.element(self.apply_coords(x.coords()))
    }

    /// `self ∘ first`
    pub fn compose(&self, first: &Morphism) -> Result<Morphism> {
        if !first.target.same_as(&self.source) {
            return Err(Error::Shape("composition of non-composable morphisms".into()));
        }
        Ok(Morphism::new_unchecked(
            first.source.clone(),
            self.target.clone(),
            &self.matrix * &first.matrix,
        ))
    }

    pub fn negate(&self) -> Morphism {
        Morphism::new_unchecked(self.source.clone(), self.target.clone(), self.matrix.neg())
    }

    /// Vanishes on every generator.
    pub fn is_zero(&self) -> bool {
        (0..self.matrix.cols()).all(|j| self.target.is_zero_coords(&self.matrix.column(j)))
    }

    /// Agrees with `other` on every generator.
    pub fn equals(&self, other: &Morphism) -> bool {
        self.source.same_as(&other.source)
            && self.target.same_as(&other.target)
            && (0..self.matrix.cols()).all(|j| {
                let d: Vec<BigInt> = self
                    .matrix
                    .column(j)
                    .iter()
                    .zip(other.matrix.column(j))
                    .map(|(a, b)| a - b)
                    .collect();
                self.target.is_zero_coords(&d)
            })
    }

    /// Full preimage of the target relations.
    pub fn kernel(&self) -> Subgroup {
        let block = self.matrix.hconcat(&self.target.relations().neg());
        let k = kernel_basis(&block, 0).select_rows(0..self.source.ambient_rank());
        Subgroup::from_matrix(self.source.clone(), &k)
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::from_matrix(self.target.clone(), &self.matrix)
    }

    pub fn kernel_image(&self) -> (Subgroup, Subgroup) {
        (self.kernel(), self.image())
    }

    pub fn image_of(&self, s: &Subgroup) -> Subgroup {
        assert!(s.parent().same_as(&self.source), "image of a foreign subgroup");
        Subgroup::from_matrix(self.target.clone(), &(&self.matrix * s.generator_matrix()))
    }

    /// `{x : f(x) ∈ t}`
    pub fn preimage_of(&self, t: &Subgroup) -> Subgroup {
        assert!(t.parent().same_as(&self.target), "preimage of a foreign subgroup");
        let block = self.matrix.hconcat(&t.lifted_basis().neg());
        let k = kernel_basis(&block, 0).select_rows(0..self.source.ambient_rank());
        Subgroup::from_matrix(self.source.clone(), &k)
    }

    /// Some `g` with `f(g) = h`, if `h` lies in the image.
    pub fn preimage_element(&self, h: &Element) -> Option<Element> {
        assert!(h.group().same_as(&self.target), "preimage of a foreign element");
        let system = self.matrix.hconcat(self.target.relations());
        let sol = solve_mod(&system, h.coords(), 0)?;
        let g = self.source.element(sol[..self.source.ambient_rank()].to_vec());
        debug_assert!(self.apply(&g) == *h);
        Some(g)
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({:?})", self.matrix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u64, orders: &[i64]) -> Arc<FpGroup> {
        Arc::new(FpGroup::cyclic(m, orders))
    }

    fn mat(x: i64) -> IntMatrix {
        IntMatrix::from_rows(&[vec![x]], 0)
    }

    fn el(g: &Arc<FpGroup>, x: i64) -> Element {
        g.element(vec![BigInt::from(x)])
    }

    #[test]
    fn well_definedness() {
        let z4 = Arc::new(FpGroup::free(4, 1));
        let z2 = Arc::new(FpGroup::free(2, 1));
        assert!(Morphism::new(z4.clone(), z4.clone(), mat(2)).is_ok());
        assert!(matches!(
            Morphism::new(z2.clone(), z4.clone(), mat(1)),
            Err(Error::IllDefined { .. })
        ));
        assert!(Morphism::new(z2, z4, mat(2)).is_ok());
    }

    #[test]
    fn kernel_and_image() {
        let z4 = z(0, &[4]);
        let f = Morphism::new(z4.clone(), z4.clone(), mat(2)).unwrap();
        let (k, i) = f.kernel_image();
        let half = Subgroup::new(z4.clone(), vec![el(&z4, 2)]);
        assert!(k.equals(&half) && i.equals(&half));

        let z6 = z(6, &[0]);
        let id = Morphism::identity(z6.clone());
        assert!(id.kernel().is_trivial());
        assert!(id.image().equals(&Subgroup::whole(z6)));

        let zz = z(0, &[0]);
        let six = Morphism::new(zz.clone(), zz.clone(), mat(6)).unwrap();
        assert!(six.kernel().is_trivial());
        assert!(six.image().equals(&Subgroup::new(zz.clone(), vec![el(&zz, 6)])));
    }

    #[test]
    fn preimages() {
        let z4 = z(4, &[0]);
        let f = Morphism::new(z4.clone(), z4.clone(), mat(2)).unwrap();
        let g = f.preimage_element(&el(&z4, 2)).unwrap();
        assert!(g == el(&z4, 1) || g == el(&z4, 3));
        assert!(f.preimage_element(&el(&z4, 1)).is_none());
        let zero = Morphism::zero(z4.clone(), z4.clone());
        assert!(zero.preimage_element(&el(&z4, 0)).unwrap().is_zero());
    }

    #[test]
    fn composition_is_associative() {
        let g = z(0, &[12]);
        let a = Morphism::new(g.clone(), g.clone(), mat(5)).unwrap();
        let b = Morphism::new(g.clone(), g.clone(), mat(7)).unwrap();
        let c = Morphism::new(g.clone(), g.clone(), mat(-3)).unwrap();
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        assert!(left.equals(&right));
        assert!(a.compose(&Morphism::identity(g.clone())).unwrap().equals(&a));
    }
}
