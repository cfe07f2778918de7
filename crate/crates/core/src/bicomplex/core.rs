use std::sync::Arc;

use num_bigint::BigInt;
use rand::Rng;

use super::{Bicomplex, Bidegree};
use crate::abgroup::{Element, FpGroup, Subgroup, Subquotient};
use crate::{Error, Result};

/// Direction of the diagonal isomorphism: `Plus` has bidegree `(1,-1)`,
/// `Minus` is its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Plus,
    Minus,
}

impl Direction {
    pub fn offset(self) -> Bidegree {
        match self {
            Direction::Plus => (1, -1),
            Direction::Minus => (-1, 1),
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Direction::Plus => Direction::Minus,
            Direction::Minus => Direction::Plus,
        }
    }
}

/// Order of the iterated (E2) homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IteratedOrder {
    /// `H''(H'(X))`: homology along `d'` first.
    FirstThenSecond,
    /// `H'(H''(X))`
    SecondThenFirst,
}

/// A class of the core invariant at one bidegree.
#[derive(Clone, Debug)]
pub struct BiClass {
    bidegree: Bidegree,
    homology: Arc<Subquotient>,
    representative: Element,
}

impl BiClass {
    pub fn bidegree(&self) -> Bidegree {
        self.bidegree
    }

    pub fn representative(&self) -> &Element {
        &self.representative
    }

    /// The core homology group this class belongs to.
    pub fn homology(&self) -> &Arc<Subquotient> {
        &self.homology
    }

    pub fn class(&self) -> Element {
        self.homology
            .project(&self.representative)
            .expect("representative checked at construction")
    }

    pub fn is_zero(&self) -> bool {
        self.class().is_zero()
    }

    pub fn add(&self, other: &BiClass) -> Result<BiClass> {
        if self.bidegree != other.bidegree {
            return Err(Error::Shape("sum of classes in different bidegrees".into()));
        }
        Ok(BiClass {
            bidegree: self.bidegree,
            homology: self.homology.clone(),
            representative: &self.representative + &other.representative,
        })
    }
}

impl PartialEq for BiClass {
    fn eq(&self, other: &Self) -> bool {
        self.bidegree == other.bidegree && self.class() == other.class()
    }
}

impl Bicomplex {
    /// Exactness of rows and columns at each bidegree, as an error.
    pub fn require_exact(&self, cells: &[Bidegree]) -> Result<()> {
        for &(i, j) in cells {
            let (row, col) = self.exactness_at(i, j)?;
            if !(row && col) {
                let detail = match (row, col) {
                    (false, false) => "H' ≠ 0 and H'' ≠ 0",
                    (false, true) => "H' ≠ 0",
                    _ => "H'' ≠ 0",
                };
                return Err(Error::HypothesisViolated {
                    i,
                    j,
                    detail: detail.into(),
                });
            }
        }
        Ok(())
    }

    /// Cells whose exactness the core invariant at `(i, j)` relies on.
    fn core_hypothesis(&self, i: i64, j: i64) -> Result<()> {
        self.require_exact(&[(i, j), (i - 1, j), (i, j - 1)])
    }

    /// `Z' ∩ Z''` at `(i, j)`.
    pub fn core_numerator(&self, i: i64, j: i64) -> Result<Subgroup> {
        self.zprime(i, j)?.intersect(&self.zsecond(i, j)?)
    }

    /// `d'(Z'')` landing in `(i, j)`.
    pub fn dprime_of_zsecond(&self, i: i64, j: i64) -> Result<Subgroup> {
        Ok(self.dprime(i - 1, j)?.image_of(&self.zsecond(i - 1, j)?))
    }

    /// `d''(Z')` landing in `(i, j)`.
    pub fn dsecond_of_zprime(&self, i: i64, j: i64) -> Result<Subgroup> {
        Ok(self.dsecond(i, j - 1)?.image_of(&self.zprime(i, j - 1)?))
    }

    /// Whether `d'(Z'') = d''(Z')` at `(i, j)`. Refuses to answer when the
    /// rows or columns are not exact near `(i, j)`.
    pub fn core_equality_check(&self, i: i64, j: i64) -> Result<bool> {
        self.core_hypothesis(i, j)?;
        Ok(self.dprime_of_zsecond(i, j)?.equals(&self.dsecond_of_zprime(i, j)?))
    }

    /// `(Z' ∩ Z'') / d'(Z'')` at `(i, j)`.
    pub fn core_homology(&self, i: i64, j: i64) -> Result<Arc<Subquotient>> {
        self.core_homology_by(i, j, false)
    }

    /// `(Z' ∩ Z'') / d''(Z')` at `(i, j)`.
    pub fn core_homology_via_dsecond(&self, i: i64, j: i64) -> Result<Arc<Subquotient>> {
        self.core_homology_by(i, j, true)
    }

    fn core_homology_by(&self, i: i64, j: i64, via_dsecond: bool) -> Result<Arc<Subquotient>> {
        self.core_hypothesis(i, j)?;
        let key = (self.key(i, j), via_dsecond);
        self.caches.core.get_or_try_insert(key, || {
            let den = if via_dsecond {
                self.dsecond_of_zprime(i, j)?
            } else {
                self.dprime_of_zsecond(i, j)?
            };
            Ok(Arc::new(Subquotient::new(self.core_numerator(i, j)?, den)?))
        })
    }

    /// The class of a representative in `Z' ∩ Z''` at `(i, j)`.
    pub fn class(&self, i: i64, j: i64, representative: Element) -> Result<BiClass> {
        let homology = self.core_homology(i, j)?;
        homology.project(&representative)?;
        Ok(BiClass {
            bidegree: (i, j),
            homology,
            representative,
        })
    }

    /// Classes of the generators of the core homology at `(i, j)`.
    pub fn core_generators(&self, i: i64, j: i64) -> Result<Vec<BiClass>> {
        let homology = self.core_homology(i, j)?;
        homology
            .group()
            .generators()
            .iter()
            .map(|g| self.class(i, j, homology.lift(g)))
            .collect()
    }

    /// The diagonal isomorphism. `Plus` solves `d''(y) = x` and returns the
    /// class of `d'(y)` at `(i+1, j-1)`; `Minus` swaps the roles of `d'`
    /// and `d''`.
    pub fn diagonal_shift(&self, c: &BiClass, direction: Direction) -> Result<BiClass> {
        let (_, image) = self.chase(c.bidegree, c.representative(), direction)?;
        let (di, dj) = direction.offset();
        self.class(c.bidegree.0 + di, c.bidegree.1 + dj, image)
    }

    /// One chase step: the preimage `y` and its image across the diagonal.
    fn chase(&self, (i, j): Bidegree, x: &Element, direction: Direction) -> Result<(Element, Element)> {
        let (solve, push) = match direction {
            Direction::Plus => (self.dsecond(i, j - 1)?, self.dprime(i, j - 1)?),
            Direction::Minus => (self.dprime(i - 1, j)?, self.dsecond(i - 1, j)?),
        };
        let y = solve.preimage_element(x).ok_or_else(|| Error::InternalChaseFailure {
            i,
            j,
            detail: format!("no preimage for the {direction:?} shift of a cycle"),
        })?;
        let image = push.apply(&y);
        Ok((y, image))
    }

    /// Re-derives well-definedness of one shift: perturbs the representative
    /// by boundaries and the chosen preimage by cycles, `samples` times, and
    /// checks that the resulting class never changes.
    pub fn shift_is_well_defined<R: Rng>(
        &self,
        c: &BiClass,
        direction: Direction,
        samples: usize,
        rng: &mut R,
    ) -> Result<bool> {
        let expected = self.diagonal_shift(c, direction)?;
        let (i, j) = c.bidegree;
        let boundaries = c.homology.denominator().generators();
        let (ambiguity, push) = match direction {
            Direction::Plus => (self.zsecond(i, j - 1)?.generators(), self.dprime(i, j - 1)?),
            Direction::Minus => (self.zprime(i - 1, j)?.generators(), self.dsecond(i - 1, j)?),
        };
        for _ in 0..samples {
            let x = random_combination(c.representative(), &boundaries, rng);
            let (y, _) = self.chase(c.bidegree, &x, direction)?;
            let y = random_combination(&y, &ambiguity, rng);
            let target = (i + direction.offset().0, j + direction.offset().1);
            if self.class(target.0, target.1, push.apply(&y))? != expected {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Homology in one direction of the homology in the other, at `(i, j)`.
    pub fn iterated_homology(&self, i: i64, j: i64, order: IteratedOrder) -> Result<Arc<FpGroup>> {
        let (prev, here, next, into, out) = match order {
            IteratedOrder::FirstThenSecond => (
                self.hprime(i, j - 1)?,
                self.hprime(i, j)?,
                self.hprime(i, j + 1)?,
                self.dsecond(i, j - 1)?,
                self.dsecond(i, j)?,
            ),
            IteratedOrder::SecondThenFirst => (
                self.hsecond(i - 1, j)?,
                self.hsecond(i, j)?,
                self.hsecond(i + 1, j)?,
                self.dprime(i - 1, j)?,
                self.dprime(i, j)?,
            ),
        };
        let incoming = prev.induced(&into, &here)?;
        let outgoing = here.induced(&out, &next)?;
        let q = Subquotient::new(outgoing.kernel(), incoming.image())?;
        Ok(q.group().clone())
    }
}

fn random_combination<R: Rng>(base: &Element, gens: &[Element], rng: &mut R) -> Element {
    gens.iter().fold(base.clone(), |acc, g| {
        let k = BigInt::from(rng.gen_range(-3i64..=3));
        &acc + &g.scale(&k)
    })
}
