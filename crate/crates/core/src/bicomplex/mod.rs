//! Bicomplexes in the commuting convention: `d': (i,j) → (i+1,j)`,
//! `d'': (i,j) → (i,j+1)`, `d'∘d' = 0`, `d''∘d'' = 0`, `d''∘d' = d'∘d''`.
//!
//! Cells and differentials come from a [`BicomplexSource`] and are evaluated
//! lazily. Everything derived from them (cycles, boundaries, exactness
//! verdicts, core homology) is memoized per bidegree, keyed by the source's
//! canonical representative so periodic sources only ever materialize one
//! period.

mod core;
mod double;
mod grid;

use std::fmt;
use std::sync::Arc;

use crate::abgroup::{FpGroup, Morphism, Subgroup, Subquotient};
use crate::complex::Support;
use crate::memo::Memo;
use crate::{Modulus, Result};

pub use self::core::{BiClass, Direction, IteratedOrder};
pub use double::DoubleComplex;
pub use grid::Grid;

pub type Bidegree = (i64, i64);

/// Lazily evaluated cell and differential data.
pub trait BicomplexSource: Send + Sync + fmt::Debug {
    fn modulus(&self) -> Modulus;

    /// Supports of the first and second grading.
    fn supports(&self) -> (Support, Support);

    /// Representative bidegree with identical cells and outgoing maps.
    fn canonical(&self, i: i64, j: i64) -> Bidegree {
        (i, j)
    }

    fn cell(&self, i: i64, j: i64) -> Result<Arc<FpGroup>>;

    /// `d'` leaving `(i, j)`.
    fn dprime(&self, i: i64, j: i64) -> Result<Morphism>;

    /// `d''` leaving `(i, j)`.
    fn dsecond(&self, i: i64, j: i64) -> Result<Morphism>;
}

/// Which of `H'` and `H''` fail to vanish at a bidegree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridDefect {
    pub i: i64,
    pub j: i64,
    pub hprime_nonzero: bool,
    pub hsecond_nonzero: bool,
}

/// `Z'`, `B'`, `Z''`, `B''` at one bidegree.
#[derive(Clone, Debug)]
pub struct BoundarySubgroups {
    pub zprime: Subgroup,
    pub bprime: Subgroup,
    pub zsecond: Subgroup,
    pub bsecond: Subgroup,
}

#[derive(Default)]
struct Caches {
    cells: Memo<Bidegree, Arc<FpGroup>>,
    dprime: Memo<Bidegree, Morphism>,
    dsecond: Memo<Bidegree, Morphism>,
    zprime: Memo<Bidegree, Subgroup>,
    zsecond: Memo<Bidegree, Subgroup>,
    bprime: Memo<Bidegree, Subgroup>,
    bsecond: Memo<Bidegree, Subgroup>,
    hprime: Memo<Bidegree, Arc<Subquotient>>,
    hsecond: Memo<Bidegree, Arc<Subquotient>>,
    exact: Memo<Bidegree, (bool, bool)>,
    core: Memo<(Bidegree, bool), Arc<Subquotient>>,
}

/// A bicomplex with memoized evaluation. Cheap to clone; clones share caches.
#[derive(Clone)]
pub struct Bicomplex {
    source: Arc<dyn BicomplexSource>,
    caches: Arc<Caches>,
}

impl fmt::Debug for Bicomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Bicomplex").field("source", &self.source).finish()
    }
}

impl Bicomplex {
    /// Wraps a source without checking the axioms. Sources built by this
    /// crate satisfy them by construction; use [`Bicomplex::check_axioms`]
    /// to certify a window.
    pub fn from_source(source: Arc<dyn BicomplexSource>) -> Self {
        Bicomplex {
            source,
            caches: Arc::new(Caches::default()),
        }
    }

    pub fn source(&self) -> &Arc<dyn BicomplexSource> {
        &self.source
    }

    pub fn modulus(&self) -> Modulus {
        self.source.modulus()
    }

    pub fn supports(&self) -> (Support, Support) {
        self.source.supports()
    }

    fn key(&self, i: i64, j: i64) -> Bidegree {
        self.source.canonical(i, j)
    }

    pub fn cell(&self, i: i64, j: i64) -> Result<Arc<FpGroup>> {
        let k = self.key(i, j);
        self.caches.cells.get_or_try_insert(k, || self.source.cell(k.0, k.1))
    }

    pub fn dprime(&self, i: i64, j: i64) -> Result<Morphism> {
        let k = self.key(i, j);
        self.caches.dprime.get_or_try_insert(k, || self.source.dprime(k.0, k.1))
    }

    pub fn dsecond(&self, i: i64, j: i64) -> Result<Morphism> {
        let k = self.key(i, j);
        self.caches.dsecond.get_or_try_insert(k, || self.source.dsecond(k.0, k.1))
    }

    pub fn zprime(&self, i: i64, j: i64) -> Result<Subgroup> {
        let k = self.key(i, j);
        self.caches.zprime.get_or_try_insert(k, || Ok(self.dprime(i, j)?.kernel()))
    }

    pub fn zsecond(&self, i: i64, j: i64) -> Result<Subgroup> {
        let k = self.key(i, j);
        self.caches.zsecond.get_or_try_insert(k, || Ok(self.dsecond(i, j)?.kernel()))
    }

    pub fn bprime(&self, i: i64, j: i64) -> Result<Subgroup> {
        let k = self.key(i, j);
        self.caches.bprime.get_or_try_insert(k, || Ok(self.dprime(i - 1, j)?.image()))
    }

    pub fn bsecond(&self, i: i64, j: i64) -> Result<Subgroup> {
        let k = self.key(i, j);
        self.caches.bsecond.get_or_try_insert(k, || Ok(self.dsecond(i, j - 1)?.image()))
    }

    pub fn boundary_subgroups(&self, i: i64, j: i64) -> Result<BoundarySubgroups> {
        Ok(BoundarySubgroups {
            zprime: self.zprime(i, j)?,
            bprime: self.bprime(i, j)?,
            zsecond: self.zsecond(i, j)?,
            bsecond: self.bsecond(i, j)?,
        })
    }

    /// Homology along `d'` at `(i, j)`.
    pub fn hprime(&self, i: i64, j: i64) -> Result<Arc<Subquotient>> {
        let k = self.key(i, j);
        self.caches.hprime.get_or_try_insert(k, || {
            Ok(Arc::new(Subquotient::new(self.zprime(i, j)?, self.bprime(i, j)?)?))
        })
    }

    /// Homology along `d''` at `(i, j)`.
    pub fn hsecond(&self, i: i64, j: i64) -> Result<Arc<Subquotient>> {
        let k = self.key(i, j);
        self.caches.hsecond.get_or_try_insert(k, || {
            Ok(Arc::new(Subquotient::new(self.zsecond(i, j)?, self.bsecond(i, j)?)?))
        })
    }

    /// `(H' = 0, H'' = 0)` at `(i, j)`.
    pub fn exactness_at(&self, i: i64, j: i64) -> Result<(bool, bool)> {
        let k = self.key(i, j);
        self.caches.exact.get_or_try_insert(k, || {
            let row = self.bprime(i, j)?.contains_subgroup(&self.zprime(i, j)?);
            let col = self.bsecond(i, j)?.contains_subgroup(&self.zsecond(i, j)?);
            Ok((row, col))
        })
    }

    /// Every bidegree of the window where `H'` or `H''` is nonzero.
    pub fn check_exact_grid(&self, is: std::ops::RangeInclusive<i64>, js: std::ops::RangeInclusive<i64>) -> Result<Vec<GridDefect>> {
        let mut out = Vec::new();
        for i in is {
            for j in js.clone() {
                let (row, col) = self.exactness_at(i, j)?;
                if !(row && col) {
                    out.push(GridDefect {
                        i,
                        j,
                        hprime_nonzero: !row,
                        hsecond_nonzero: !col,
                    });
                }
            }
        }
        Ok(out)
    }

    /// Checks `d'd' = 0`, `d''d'' = 0` and `d''d' = d'd''` on a window.
    /// Returns the first offending bidegree and a description.
    pub fn check_axioms(
        &self,
        is: std::ops::RangeInclusive<i64>,
        js: std::ops::RangeInclusive<i64>,
    ) -> Result<Option<(Bidegree, String)>> {
        for i in is {
            for j in js.clone() {
                if let Some(what) = self.square_defect(i, j, false)? {
                    return Ok(Some(((i, j), what)));
                }
            }
        }
        Ok(None)
    }

    /// Axiom failures at `(i, j)`; `anti` selects the anticommuting square.
    fn square_defect(&self, i: i64, j: i64, anti: bool) -> Result<Option<String>> {
        let dp = self.dprime(i, j)?;
        let ds = self.dsecond(i, j)?;
        if !self.dprime(i + 1, j)?.compose(&dp)?.is_zero() {
            return Ok(Some("d'∘d' ≠ 0".into()));
        }
        if !self.dsecond(i, j + 1)?.compose(&ds)?.is_zero() {
            return Ok(Some("d''∘d'' ≠ 0".into()));
        }
        let a = self.dsecond(i + 1, j)?.compose(&dp)?;
        let b = self.dprime(i, j + 1)?.compose(&ds)?;
        let ok = if anti { a.equals(&b.negate()) } else { a.equals(&b) };
        if !ok {
            return Ok(Some(if anti { "d'd'' + d''d' ≠ 0" } else { "d''d' ≠ d'd''" }.into()));
        }
        Ok(None)
    }
}

#[cfg(test)]
pub(crate) mod tests;
