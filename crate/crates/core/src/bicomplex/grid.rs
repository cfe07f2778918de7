use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::sync::Arc;

use super::{Bicomplex, BicomplexSource, Bidegree};
use crate::abgroup::{FpGroup, Morphism};
use crate::complex::Support;
use crate::snf::IntMatrix;
use crate::{Error, Modulus, Result};

/// Finitely supported bicomplex data entered cell by cell. Unset cells are
/// zero, unset differentials are zero maps, and everything outside the
/// window is zero.
#[derive(Clone, Debug)]
pub struct Grid {
    modulus: Modulus,
    is: RangeInclusive<i64>,
    js: RangeInclusive<i64>,
    cells: BTreeMap<Bidegree, Arc<FpGroup>>,
    dprime: BTreeMap<Bidegree, IntMatrix>,
    dsecond: BTreeMap<Bidegree, IntMatrix>,
    zero: Arc<FpGroup>,
}

impl Grid {
    pub fn new(modulus: Modulus, is: RangeInclusive<i64>, js: RangeInclusive<i64>) -> Self {
        Grid {
            modulus,
            is,
            js,
            cells: BTreeMap::new(),
            dprime: BTreeMap::new(),
            dsecond: BTreeMap::new(),
            zero: Arc::new(FpGroup::zero(modulus)),
        }
    }

    fn inside(&self, i: i64, j: i64) -> Result<()> {
        if !self.is.contains(&i) {
            return Err(Error::OutOfWindow { degree: i });
        }
        if !self.js.contains(&j) {
            return Err(Error::OutOfWindow { degree: j });
        }
        Ok(())
    }

    pub fn set_cell(&mut self, i: i64, j: i64, g: Arc<FpGroup>) -> Result<&mut Self> {
        self.inside(i, j)?;
        self.cells.insert((i, j), g);
        Ok(self)
    }

    /// Matrix of `d'` leaving `(i, j)`; checked once the grid is wrapped.
    pub fn set_dprime(&mut self, i: i64, j: i64, m: IntMatrix) -> Result<&mut Self> {
        self.inside(i, j)?;
        self.dprime.insert((i, j), m);
        Ok(self)
    }

    pub fn set_dsecond(&mut self, i: i64, j: i64, m: IntMatrix) -> Result<&mut Self> {
        self.inside(i, j)?;
        self.dsecond.insert((i, j), m);
        Ok(self)
    }

    pub fn window(&self) -> (RangeInclusive<i64>, RangeInclusive<i64>) {
        (self.is.clone(), self.js.clone())
    }

    /// Window grown by one in every direction, enough to see every square
    /// touching the support.
    pub(crate) fn padded_window(&self) -> (RangeInclusive<i64>, RangeInclusive<i64>) {
        (
            self.is.start() - 1..=self.is.end() + 1,
            self.js.start() - 1..=self.js.end() + 1,
        )
    }

    fn map(&self, entries: &BTreeMap<Bidegree, IntMatrix>, from: Bidegree, to: Bidegree) -> Result<Morphism> {
        let src = self.cell(from.0, from.1)?;
        let tgt = self.cell(to.0, to.1)?;
        match entries.get(&from) {
            Some(m) => Morphism::new(src, tgt, m.clone()).map_err(|e| Error::ConventionViolation {
                i: from.0,
                j: from.1,
                detail: e.to_string(),
            }),
            None => Ok(Morphism::zero(src, tgt)),
        }
    }

    /// The commuting bicomplex on this data, with every axiom checked.
    pub fn into_bicomplex(self) -> Result<Bicomplex> {
        let (is, js) = self.padded_window();
        let x = Bicomplex::from_source(Arc::new(self));
        if let Some(((i, j), detail)) = x.check_axioms(is, js)? {
            return Err(Error::ConventionViolation { i, j, detail });
        }
        Ok(x)
    }
}

impl BicomplexSource for Grid {
    fn modulus(&self) -> Modulus {
        self.modulus
    }

    fn supports(&self) -> (Support, Support) {
        let w = |r: &RangeInclusive<i64>| Support::Window {
            lo: *r.start(),
            hi: *r.end(),
            zero_outside: true,
        };
        (w(&self.is), w(&self.js))
    }

    fn cell(&self, i: i64, j: i64) -> Result<Arc<FpGroup>> {
        Ok(self.cells.get(&(i, j)).cloned().unwrap_or_else(|| self.zero.clone()))
    }

    fn dprime(&self, i: i64, j: i64) -> Result<Morphism> {
        self.map(&self.dprime, (i, j), (i + 1, j))
    }

    fn dsecond(&self, i: i64, j: i64) -> Result<Morphism> {
        self.map(&self.dsecond, (i, j), (i, j + 1))
    }
}
