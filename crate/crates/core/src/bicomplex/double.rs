use std::ops::RangeInclusive;
use std::sync::Arc;

use super::{Bicomplex, BicomplexSource, Bidegree, Grid};
use crate::abgroup::{FpGroup, Morphism};
use crate::complex::Support;
use crate::{Error, Modulus, Result};

/// Bigraded data in the anticommuting convention `d'd'' + d''d' = 0`.
#[derive(Clone, Debug)]
pub struct DoubleComplex {
    data: Bicomplex,
}

/// `d''` negated on cells with odd first index. Applying it twice is the
/// identity, and it swaps the commuting and anticommuting conventions.
#[derive(Debug)]
struct SignTwist {
    inner: Bicomplex,
}

impl BicomplexSource for SignTwist {
    fn modulus(&self) -> Modulus {
        self.inner.modulus()
    }

    fn supports(&self) -> (Support, Support) {
        self.inner.supports()
    }

    fn canonical(&self, i: i64, j: i64) -> Bidegree {
        let (ci, cj) = self.inner.source().canonical(i, j);
        // the twist has period 2 in i, so only even shifts are safe
        if (ci - i).rem_euclid(2) == 0 {
            (ci, cj)
        } else {
            (i, j)
        }
    }

    fn cell(&self, i: i64, j: i64) -> Result<Arc<FpGroup>> {
        self.inner.cell(i, j)
    }

    fn dprime(&self, i: i64, j: i64) -> Result<Morphism> {
        self.inner.dprime(i, j)
    }

    fn dsecond(&self, i: i64, j: i64) -> Result<Morphism> {
        let d = self.inner.dsecond(i, j)?;
        Ok(if i.rem_euclid(2) == 1 { d.negate() } else { d })
    }
}

fn twist(x: &Bicomplex) -> Bicomplex {
    Bicomplex::from_source(Arc::new(SignTwist { inner: x.clone() }))
}

impl DoubleComplex {
    /// Anticommuting data from a source, checked on the given window.
    pub fn from_source(
        source: Arc<dyn BicomplexSource>,
        is: RangeInclusive<i64>,
        js: RangeInclusive<i64>,
    ) -> Result<Self> {
        let data = Bicomplex::from_source(source);
        for i in is {
            for j in js.clone() {
                if let Some(detail) = data.square_defect(i, j, true)? {
                    return Err(Error::ConventionViolation { i, j, detail });
                }
            }
        }
        Ok(DoubleComplex { data })
    }

    pub fn from_grid(grid: Grid) -> Result<Self> {
        let (is, js) = grid.padded_window();
        Self::from_source(Arc::new(grid), is, js)
    }

    /// Raw access to the anticommuting data.
    pub fn data(&self) -> &Bicomplex {
        &self.data
    }

    /// Converts to the commuting convention, certifying the window.
    pub fn to_bicomplex(&self, is: RangeInclusive<i64>, js: RangeInclusive<i64>) -> Result<Bicomplex> {
        let x = twist(&self.data);
        if let Some(((i, j), detail)) = x.check_axioms(is, js)? {
            return Err(Error::ConventionViolation { i, j, detail });
        }
        Ok(x)
    }
}

impl Bicomplex {
    /// Converts a commuting bicomplex to a double complex, certifying the window.
    pub fn to_double_complex(&self, is: RangeInclusive<i64>, js: RangeInclusive<i64>) -> Result<DoubleComplex> {
        if let Some(((i, j), detail)) = self.check_axioms(is.clone(), js.clone())? {
            return Err(Error::ConventionViolation { i, j, detail });
        }
        DoubleComplex::from_source(Arc::new(SignTwist { inner: self.clone() }), is, js)
    }

    /// Inverse of [`Bicomplex::to_double_complex`].
    pub fn from_double_complex(
        x: &DoubleComplex,
        is: RangeInclusive<i64>,
        js: RangeInclusive<i64>,
    ) -> Result<Bicomplex> {
        x.to_bicomplex(is, js)
    }
}
