//! Builders for the bicomplexes and complexes the rest of the crate runs on.

mod random;
mod resolution;
mod witness;

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::abgroup::{hom_group, tensor_group, FpGroup, HomGroup, Morphism, TensorGroup};
use crate::bicomplex::{Bicomplex, BicomplexSource, Bidegree};
use crate::complex::{Complex, Convention, Support};
use crate::memo::Memo;
use crate::{Error, Modulus, Result};

pub use random::{random_exact_complex, RandomComplexParams, RandomShape};
pub use resolution::{complete_injective_resolution, complete_projective_resolution, elementary_divisors, Resolution};
pub use witness::{zprime_witness, zsecond_witness, Witness};

fn canon(support: Support, n: i64) -> i64 {
    match support {
        Support::Periodic { period } => n.mod_floor(&(period as i64)),
        Support::Window { .. } => n,
    }
}

/// `Hom(C, D)` with cells `Hom(Cᵢ, Dʲ)`, `d' = − ∘ d_C`, `d'' = d_D ∘ −`.
struct HomSource {
    c: Complex,
    d: Complex,
    homs: Memo<Bidegree, Arc<HomGroup>>,
}

impl HomSource {
    fn hom(&self, i: i64, j: i64) -> Result<Arc<HomGroup>> {
        let k = self.canonical(i, j);
        self.homs
            .get_or_try_insert(k, || Ok(Arc::new(hom_group(&self.c.cell(k.0)?, &self.d.cell(k.1)?))))
    }
}

impl fmt::Debug for HomSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hom").field("c", &self.c).field("d", &self.d).finish()
    }
}

impl BicomplexSource for HomSource {
    fn modulus(&self) -> Modulus {
        self.c.modulus().gcd(&self.d.modulus())
    }

    fn supports(&self) -> (Support, Support) {
        (self.c.support(), self.d.support())
    }

    fn canonical(&self, i: i64, j: i64) -> Bidegree {
        (canon(self.c.support(), i), canon(self.d.support(), j))
    }

    fn cell(&self, i: i64, j: i64) -> Result<Arc<FpGroup>> {
        Ok(self.hom(i, j)?.group().clone())
    }

    fn dprime(&self, i: i64, j: i64) -> Result<Morphism> {
        let (from, to) = (self.hom(i, j)?, self.hom(i + 1, j)?);
        from.precompose_map(&self.c.diff(i + 1)?, &to)
    }

    fn dsecond(&self, i: i64, j: i64) -> Result<Morphism> {
        let (from, to) = (self.hom(i, j)?, self.hom(i, j + 1)?);
        from.postcompose_map(&self.d.diff(j)?, &to)
    }
}

/// `C ⊗ D` read with cells `C₋ᵢ ⊗ D₋ⱼ` so both differentials raise degree.
struct TensorSource {
    c: Complex,
    d: Complex,
    tensors: Memo<Bidegree, Arc<TensorGroup>>,
}

impl TensorSource {
    fn tensor(&self, i: i64, j: i64) -> Result<Arc<TensorGroup>> {
        let k = self.canonical(i, j);
        self.tensors
            .get_or_try_insert(k, || Ok(Arc::new(tensor_group(&self.c.cell(-k.0)?, &self.d.cell(-k.1)?))))
    }
}

impl fmt::Debug for TensorSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Tensor").field("c", &self.c).field("d", &self.d).finish()
    }
}

impl BicomplexSource for TensorSource {
    fn modulus(&self) -> Modulus {
        self.c.modulus().gcd(&self.d.modulus())
    }

    fn supports(&self) -> (Support, Support) {
        let flip = |s: Support| match s {
            Support::Window { lo, hi, zero_outside } => Support::Window {
                lo: -hi,
                hi: -lo,
                zero_outside,
            },
            p => p,
        };
        (flip(self.c.support()), flip(self.d.support()))
    }

    fn canonical(&self, i: i64, j: i64) -> Bidegree {
        (-canon(self.c.support(), -i), -canon(self.d.support(), -j))
    }

    fn cell(&self, i: i64, j: i64) -> Result<Arc<FpGroup>> {
        Ok(self.tensor(i, j)?.group().clone())
    }

    fn dprime(&self, i: i64, j: i64) -> Result<Morphism> {
        let (from, to) = (self.tensor(i, j)?, self.tensor(i + 1, j)?);
        let id = Morphism::identity(from.right().clone());
        from.map(&self.c.diff(-i)?, &id, &to)
    }

    fn dsecond(&self, i: i64, j: i64) -> Result<Morphism> {
        let (from, to) = (self.tensor(i, j)?, self.tensor(i, j + 1)?);
        let id = Morphism::identity(from.left().clone());
        from.map(&id, &self.d.diff(-j)?, &to)
    }
}

fn expect(c: &Complex, convention: Convention, what: &str) -> Result<()> {
    if c.convention() != convention {
        return Err(Error::Shape(format!("{what} must be {convention:?}")));
    }
    Ok(())
}

/// The Hom bicomplex of a homological `C` and a cohomological `D`.
pub fn hom_bicomplex(c: &Complex, d: &Complex) -> Result<Bicomplex> {
    expect(c, Convention::Homological, "first argument of hom_bicomplex")?;
    expect(d, Convention::Cohomological, "second argument of hom_bicomplex")?;
    Ok(Bicomplex::from_source(Arc::new(HomSource {
        c: c.clone(),
        d: d.clone(),
        homs: Memo::new(),
    })))
}

/// The tensor bicomplex of two homological complexes, `X^{(i,j)} = C₋ᵢ ⊗ D₋ⱼ`.
pub fn tensor_bicomplex(c: &Complex, d: &Complex) -> Result<Bicomplex> {
    expect(c, Convention::Homological, "first argument of tensor_bicomplex")?;
    expect(d, Convention::Homological, "second argument of tensor_bicomplex")?;
    Ok(Bicomplex::from_source(Arc::new(TensorSource {
        c: c.clone(),
        d: d.clone(),
        tensors: Memo::new(),
    })))
}

#[cfg(test)]
mod tests;
