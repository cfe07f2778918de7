use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::group::{modulus_gcd, Element, FpGroup};
use super::morphism::Morphism;
use crate::snf::IntMatrix;
use crate::{Error, Result};

/// `G ⊗ H`, generated by `cᵢ ⊗ c'ⱼ` over the cyclic generators of both
/// factors with `ℤ/a ⊗ ℤ/b = ℤ/gcd(a, b)`.
#[derive(Clone, Debug)]
pub struct TensorGroup {
    group: Arc<FpGroup>,
    left: Arc<FpGroup>,
    right: Arc<FpGroup>,
    pairs: Vec<(usize, usize)>,
}

impl TensorGroup {
    pub fn new(left: Arc<FpGroup>, right: Arc<FpGroup>) -> Self {
        let mut pairs = Vec::new();
        let mut orders = Vec::new();
        for (s, a) in left.invariant_factors().iter().enumerate() {
            for (t, b) in right.invariant_factors().iter().enumerate() {
                let g = a.gcd(b);
                if !g.is_one() {
                    pairs.push((s, t));
                    orders.push(g);
                }
            }
        }
        let modulus = modulus_gcd(left.modulus(), right.modulus());
        TensorGroup {
            group: Arc::new(FpGroup::cyclic(modulus, &orders)),
            left,
            right,
            pairs,
        }
    }

    pub fn group(&self) -> &Arc<FpGroup> {
        &self.group
    }

    pub fn left(&self) -> &Arc<FpGroup> {
        &self.left
    }

    pub fn right(&self) -> &Arc<FpGroup> {
        &self.right
    }

    /// `x ⊗ y`
    pub fn pure(&self, x: &Element, y: &Element) -> Element {
        assert!(x.group().same_as(&self.left) && y.group().same_as(&self.right));
        self.group.element(self.pure_coords(x.coords(), y.coords()))
    }

    fn pure_coords(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        let cx = self.left.to_cyclic(x);
        let cy = self.right.to_cyclic(y);
        self.pairs.iter().map(|&(s, t)| &cx[s] * &cy[t]).collect()
    }

    /// `f ⊗ g : self → target` for `f: left → target.left`, `g: right → target.right`.
    pub fn map(&self, f: &Morphism, g: &Morphism, target: &TensorGroup) -> Result<Morphism> {
        if !f.source().same_as(&self.left)
            || !g.source().same_as(&self.right)
            || !f.target().same_as(&target.left)
            || !g.target().same_as(&target.right)
        {
            return Err(Error::Shape("tensor of mismatched morphisms".into()));
        }
        let cols: Vec<Vec<BigInt>> = self
            .pairs
            .iter()
            .map(|&(s, t)| {
                let x = f.apply_coords(&self.left.cyclic_generator(s));
                let y = g.apply_coords(&self.right.cyclic_generator(t));
                target.pure_coords(&x, &y)
            })
            .collect();
        let m = IntMatrix::from_columns(target.group.ambient_rank(), &cols);
        Ok(Morphism::new_unchecked(self.group.clone(), target.group.clone(), m))
    }
}

/// `G ⊗ H` together with the bilinear map `(x, y) ↦ x ⊗ y`.
pub fn tensor_group(g: &Arc<FpGroup>, h: &Arc<FpGroup>) -> TensorGroup {
    TensorGroup::new(g.clone(), h.clone())
}
