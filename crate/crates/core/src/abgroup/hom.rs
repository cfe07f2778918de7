use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::group::{modulus_gcd, Element, FpGroup};
use super::morphism::Morphism;
use crate::snf::IntMatrix;
use crate::{Error, Result};

/// One cyclic summand `Hom(ℤ/a, ℤ/b)` of a Hom group: the generator sends
/// cyclic generator `src` of the source to `scale ×` cyclic generator `tgt`
/// of the target.
#[derive(Clone, Debug)]
struct HomSummand {
    src: usize,
    tgt: usize,
    scale: BigInt,
}

/// `Hom(G, H)` as a finitely presented group, with the bijection between its
/// elements and homomorphisms `G → H`.
#[derive(Clone, Debug)]
pub struct HomGroup {
    group: Arc<FpGroup>,
    source: Arc<FpGroup>,
    target: Arc<FpGroup>,
    summands: Vec<HomSummand>,
}

/// Order and generator scale of `Hom(ℤ/a, ℤ/b)`; `0` stands for ℤ.
fn cyclic_hom(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    match (a.is_zero(), b.is_zero()) {
        (true, _) => (b.clone(), BigInt::one()),
        (false, true) => (BigInt::one(), BigInt::zero()),
        (false, false) => {
            let g = a.gcd(b);
            (g.clone(), b / g)
        }
    }
}

impl HomGroup {
    pub fn new(source: Arc<FpGroup>, target: Arc<FpGroup>) -> Self {
        let mut summands = Vec::new();
        let mut orders = Vec::new();
        for (s, a) in source.invariant_factors().iter().enumerate() {
            for (t, b) in target.invariant_factors().iter().enumerate() {
                let (order, scale) = cyclic_hom(a, b);
                if !order.is_one() {
                    summands.push(HomSummand { src: s, tgt: t, scale });
                    orders.push(order);
                }
            }
        }
        let modulus = modulus_gcd(source.modulus(), target.modulus());
        let group = Arc::new(FpGroup::cyclic(modulus, &orders));
        HomGroup {
            group,
            source,
            target,
            summands,
        }
    }

    pub fn group(&self) -> &Arc<FpGroup> {
        &self.group
    }

    pub fn source(&self) -> &Arc<FpGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FpGroup> {
        &self.target
    }

    /// The homomorphism an element of `Hom(G, H)` stands for.
    pub fn realize(&self, x: &Element) -> Morphism {
        assert!(x.group().same_as(&self.group), "realize: foreign element");
        self.realize_coords(x.coords())
    }

    pub fn realize_coords(&self, coords: &[BigInt]) -> Morphism {
        let mut cyc = IntMatrix::zeros(self.target.cyclic_rank(), self.source.cyclic_rank());
        for (k, s) in self.summands.iter().enumerate() {
            cyc[(s.tgt, s.src)] += &coords[k] * &s.scale;
        }
        let m = &(self.target.from_cyclic_matrix() * &cyc) * self.source.to_cyclic_matrix();
        Morphism::new_unchecked(self.source.clone(), self.target.clone(), m)
    }

    /// Inverse of [`HomGroup::realize`].
    pub fn element_of(&self, f: &Morphism) -> Result<Element> {
        if !f.source().same_as(&self.source) || !f.target().same_as(&self.target) {
            return Err(Error::ParentMismatch);
        }
        let mut images = Vec::with_capacity(self.source.cyclic_rank());
        for s in 0..self.source.cyclic_rank() {
            let y = f.apply_coords(&self.source.cyclic_generator(s));
            images.push(self.target.to_cyclic(&y));
        }
        let coords = self
            .summands
            .iter()
            .map(|s| {
                let c = &images[s.src][s.tgt];
                let (q, r) = c.div_rem(&s.scale);
                debug_assert!(r.is_zero(), "image of a torsion generator has wrong order");
                q
            })
            .collect();
        Ok(self.group.element(coords))
    }

    /// `Hom(G, H) → Hom(G', H)`, `f ↦ f ∘ g` for `g: G' → G`.
    pub fn precompose_map(&self, g: &Morphism, target: &HomGroup) -> Result<Morphism> {
        if !g.target().same_as(&self.source)
            || !target.source.same_as(g.source())
            || !target.target.same_as(&self.target)
        {
            return Err(Error::Shape("precomposition between mismatched Hom groups".into()));
        }
        self.induced_map(target, |f| f.compose(g))
    }

    /// `Hom(G, H) → Hom(G, H')`, `f ↦ h ∘ f` for `h: H → H'`.
    pub fn postcompose_map(&self, h: &Morphism, target: &HomGroup) -> Result<Morphism> {
        if !h.source().same_as(&self.target)
            || !target.target.same_as(h.target())
            || !target.source.same_as(&self.source)
        {
            return Err(Error::Shape("postcomposition between mismatched Hom groups".into()));
        }
        self.induced_map(target, |f| h.compose(f))
    }

    fn induced_map(
        &self,
        target: &HomGroup,
        op: impl Fn(&Morphism) -> Result<Morphism>,
    ) -> Result<Morphism> {
        let n = self.group.ambient_rank();
        let mut cols = Vec::with_capacity(n);
        for k in 0..n {
            let mut e = vec![BigInt::zero(); n];
            e[k] = BigInt::one();
            let f = op(&self.realize_coords(&e))?;
            cols.push(target.element_of(&f)?.coords().to_vec());
        }
        let m = IntMatrix::from_columns(target.group.ambient_rank(), &cols);
        Ok(Morphism::new_unchecked(self.group.clone(), target.group.clone(), m))
    }
}

/// `Hom(G, H)` together with its realization map.
pub fn hom_group(g: &Arc<FpGroup>, h: &Arc<FpGroup>) -> HomGroup {
    HomGroup::new(g.clone(), h.clone())
}
