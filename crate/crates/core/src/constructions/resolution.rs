use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::abgroup::{FpGroup, Morphism};
use crate::complex::{Complex, Convention, Support};
use crate::snf::IntMatrix;
use crate::{Error, Modulus, Result};

/// A complete resolution of a module together with the embedding of the
/// module onto the degree-0 cycles.
#[derive(Clone, Debug)]
pub struct Resolution {
    complex: Complex,
    module: Arc<FpGroup>,
    witness: Morphism,
}

impl Resolution {
    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn module(&self) -> &Arc<FpGroup> {
        &self.module
    }

    /// `M → cell(0)`, injective with image the degree-0 cycles.
    pub fn witness(&self) -> &Morphism {
        &self.witness
    }

    /// The cycles `Z₀` as a group with mutually inverse maps `M → Z₀`
    /// and `Z₀ → M`. Both composites are checked against the identity.
    pub fn cycle_isomorphism(&self) -> Result<(Arc<FpGroup>, Morphism, Morphism)> {
        let bad = |reason: &str| Error::InvalidComplex {
            degree: 0,
            reason: reason.into(),
        };
        let (z, incl) = self.complex.cycles(0)?.as_group();
        let mut fwd = Vec::new();
        for g in self.module.generators() {
            let y = incl
                .preimage_element(&self.witness.apply(&g))
                .ok_or_else(|| bad("witness leaves the cycles"))?;
            fwd.push(y.coords().to_vec());
        }
        let forward = Morphism::new(
            self.module.clone(),
            z.clone(),
            IntMatrix::from_columns(z.ambient_rank(), &fwd),
        )?;
        let mut back = Vec::new();
        for g in z.generators() {
            let x = self
                .witness
                .preimage_element(&incl.apply(&g))
                .ok_or_else(|| bad("witness misses part of the cycles"))?;
            back.push(x.coords().to_vec());
        }
        let backward = Morphism::new(
            z.clone(),
            self.module.clone(),
            IntMatrix::from_columns(self.module.ambient_rank(), &back),
        )?;
        if !backward.compose(&forward)?.equals(&Morphism::identity(self.module.clone()))
            || !forward.compose(&backward)?.equals(&Morphism::identity(z.clone()))
        {
            return Err(bad("witness is not an isomorphism onto the cycles"));
        }
        Ok((z, forward, backward))
    }
}

/// Prime-power orders of the cyclic decomposition, one list per invariant factor.
pub fn elementary_divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            let mut q = 1;
            while rest % p == 0 {
                rest /= p;
                q *= p;
            }
            out.push(q);
        }
        p += 1;
    }
    if rest > 1 {
        out.push(rest);
    }
    out
}

/// Orders of the strands: the elementary divisors of every invariant factor.
fn strand_orders(m: Modulus, module: &FpGroup) -> Result<Vec<Vec<u64>>> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    let not_a_module = |d: &BigInt| Error::NotAModule {
        factor: d.clone(),
        modulus: m,
    };
    module
        .invariant_factors()
        .iter()
        .map(|d| {
            if d.is_zero() {
                return Err(not_a_module(d));
            }
            let v = d.to_u64().ok_or_else(|| not_a_module(d))?;
            if m % v != 0 {
                return Err(not_a_module(d));
            }
            Ok(elementary_divisors(v))
        })
        .collect()
}

/// Complete projective resolution of a `ℤ/m`-module `M` with `Z₀(P) ≅ M`.
///
/// Each elementary divisor `q` of `M` contributes the strand
/// `⋯ → ℤ/m -·q→ ℤ/m -·(m/q)→ ℤ/m -·q→ ⋯` with `d₀ = ·q`.
pub fn complete_projective_resolution(m: Modulus, module: &Arc<FpGroup>) -> Result<Resolution> {
    let orders = strand_orders(m, module)?;
    let flat: Vec<u64> = orders.iter().flatten().copied().collect();
    let k = flat.len();
    let period = if flat.iter().all(|&q| q * q == m) { 1 } else { 2 };
    let cell = Arc::new(FpGroup::free(m, k));
    let even = IntMatrix::diagonal(k, k, &flat);
    let odd: Vec<u64> = flat.iter().map(|q| m / q).collect();
    let mut diffs = BTreeMap::from([(0, even)]);
    if period == 2 {
        diffs.insert(1, IntMatrix::diagonal(k, k, &odd));
    }
    let complex = Complex::new(
        Convention::Homological,
        m,
        Support::Periodic { period },
        vec![cell.clone(); period],
        diffs,
    )?;

    // cyclic generator of order d goes to Σ (m/q)·e_q over its prime powers q
    let mut cyc = IntMatrix::zeros(k, module.cyclic_rank());
    let mut row = 0;
    for (col, qs) in orders.iter().enumerate() {
        for q in qs {
            cyc[(row, col)] = BigInt::from(m / q);
            row += 1;
        }
    }
    let witness = Morphism::new(module.clone(), cell, &cyc * module.to_cyclic_matrix())?;
    let nonexact = complex.exactness_report()?;
    if let Some(&n) = nonexact.first() {
        return Err(Error::InvalidComplex {
            degree: n,
            reason: "resolution is not exact".into(),
        });
    }
    Ok(Resolution {
        complex,
        module: module.clone(),
        witness,
    })
}

/// Complete injective resolution with `Z⁰(E) ≅ N`: over `ℤ/m` free modules
/// are injective, so this is the projective one read cohomologically.
pub fn complete_injective_resolution(m: Modulus, module: &Arc<FpGroup>) -> Result<Resolution> {
    let p = complete_projective_resolution(m, module)?;
    Ok(Resolution {
        complex: p.complex.reindexed(),
        module: p.module,
        witness: p.witness,
    })
}
