//! ℤ-graded complexes of finitely presented groups.
//!
//! A complex is either supported on a finite window of degrees or is exactly
//! periodic. Window complexes either declare themselves zero outside the
//! window or refuse (`OutOfWindow`) any query that needs a cell beyond it.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::abgroup::{
    hom_group, tensor_group, Element, FpGroup, GroupType, HomGroup, Morphism, Subgroup, Subquotient,
    TensorGroup,
};
use crate::snf::IntMatrix;
use crate::{Error, Modulus, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `d: Cₙ → Cₙ₋₁`
    Homological,
    /// `d: Cⁿ → Cⁿ⁺¹`
    Cohomological,
}

impl Convention {
    /// Degree of the differential.
    pub fn step(self) -> i64 {
        match self {
            Convention::Homological => -1,
            Convention::Cohomological => 1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Convention::Homological => Convention::Cohomological,
            Convention::Cohomological => Convention::Homological,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Support {
    /// Cells `lo..=hi`. With `zero_outside`, every other cell is the zero group.
    Window { lo: i64, hi: i64, zero_outside: bool },
    /// `cell(n) = cell(n mod period)`, likewise for differentials.
    Periodic { period: usize },
}

#[derive(Clone)]
pub struct Complex {
    convention: Convention,
    modulus: Modulus,
    support: Support,
    cells: Vec<Arc<FpGroup>>,
    diffs: BTreeMap<i64, Morphism>,
    zero: Arc<FpGroup>,
}

impl Complex {
    /// Builds a complex from cells and differential matrices, checking
    /// well-definedness, composability and `d∘d = 0`.
    ///
    /// Window cells are listed for `lo..=hi`, periodic cells for
    /// `0..period`. `diffs` is keyed by source degree; a missing entry is the
    /// zero map. For windows only differentials with both ends inside the
    /// window may be given.
    pub fn new(
        convention: Convention,
        modulus: Modulus,
        support: Support,
        cells: Vec<Arc<FpGroup>>,
        diffs: BTreeMap<i64, IntMatrix>,
    ) -> Result<Self> {
        Self::from_matrices(convention, modulus, support, cells, diffs, true)
    }

    /// As [`Complex::new`] but without the `d∘d = 0` check. Exists so that
    /// verification suites can be fed deliberately corrupted input.
    pub fn new_unchecked(
        convention: Convention,
        modulus: Modulus,
        support: Support,
        cells: Vec<Arc<FpGroup>>,
        diffs: BTreeMap<i64, IntMatrix>,
    ) -> Result<Self> {
        Self::from_matrices(convention, modulus, support, cells, diffs, false)
    }

    fn from_matrices(
        convention: Convention,
        modulus: Modulus,
        support: Support,
        cells: Vec<Arc<FpGroup>>,
        mut diffs: BTreeMap<i64, IntMatrix>,
        check: bool,
    ) -> Result<Self> {
        let skeleton = Self::skeleton(convention, modulus, support, cells)?;
        let mut morphisms = BTreeMap::new();
        for n in skeleton.diff_degrees() {
            let src = skeleton.cell(n)?;
            let tgt = skeleton.cell(n + convention.step())?;
            let m = diffs
                .remove(&n)
                .unwrap_or_else(|| IntMatrix::zeros(tgt.ambient_rank(), src.ambient_rank()));
            let f = Morphism::new(src, tgt, m).map_err(|e| Error::InvalidComplex {
                degree: n,
                reason: e.to_string(),
            })?;
            morphisms.insert(n, f);
        }
        if let Some((&n, _)) = diffs.iter().next() {
            return Err(Error::InvalidComplex {
                degree: n,
                reason: "differential given outside the support".into(),
            });
        }
        Self::assemble(skeleton, morphisms, check)
    }

    fn skeleton(
        convention: Convention,
        modulus: Modulus,
        support: Support,
        cells: Vec<Arc<FpGroup>>,
    ) -> Result<Self> {
        let expected = match support {
            Support::Window { lo, hi, .. } => {
                if hi < lo {
                    return Err(Error::InvalidComplex {
                        degree: lo,
                        reason: format!("empty window {lo}..{hi}"),
                    });
                }
                (hi - lo + 1) as usize
            }
            Support::Periodic { period } => {
                if period == 0 {
                    return Err(Error::InvalidComplex {
                        degree: 0,
                        reason: "period must be positive".into(),
                    });
                }
                period
            }
        };
        if cells.len() != expected {
            return Err(Error::InvalidComplex {
                degree: 0,
                reason: format!("{} cells given, support needs {expected}", cells.len()),
            });
        }
        Ok(Complex {
            convention,
            modulus,
            support,
            cells,
            diffs: BTreeMap::new(),
            zero: Arc::new(FpGroup::zero(modulus)),
        })
    }

    fn assemble(mut skeleton: Complex, diffs: BTreeMap<i64, Morphism>, check: bool) -> Result<Self> {
        for n in skeleton.diff_degrees() {
            let f = diffs.get(&n).ok_or_else(|| Error::InvalidComplex {
                degree: n,
                reason: "missing differential".into(),
            })?;
            let src = skeleton.cell(n)?;
            let tgt = skeleton.cell(n + skeleton.convention.step())?;
            if !f.source().same_as(&src) || !f.target().same_as(&tgt) {
                return Err(Error::InvalidComplex {
                    degree: n,
                    reason: "differential does not match its cells".into(),
                });
            }
        }
        skeleton.diffs = diffs;
        if check {
            skeleton.check_square_zero()?;
        }
        Ok(skeleton)
    }

    /// Re-checks `d∘d = 0` at every stored degree.
    pub fn check_square_zero(&self) -> Result<()> {
        let step = self.convention.step();
        for n in self.diff_degrees() {
            let next = match self.diff(n + step) {
                Ok(f) => f,
                Err(Error::OutOfWindow { .. }) => continue,
                Err(e) => return Err(e),
            };
            if !next.compose(&self.diff(n)?)?.is_zero() {
                return Err(Error::InvalidComplex {
                    degree: n,
                    reason: "d∘d ≠ 0".into(),
                });
            }
        }
        Ok(())
    }

    /// Source degrees of the stored differentials.
    fn diff_degrees(&self) -> Vec<i64> {
        match self.support {
            Support::Periodic { period } => (0..period as i64).collect(),
            Support::Window { lo, hi, .. } => {
                let step = self.convention.step();
                (lo..=hi).filter(|n| (lo..=hi).contains(&(n + step))).collect()
            }
        }
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn support(&self) -> Support {
        self.support
    }

    /// Degrees that carry the stored data: the window, or one period.
    pub fn stored_degrees(&self) -> std::ops::RangeInclusive<i64> {
        match self.support {
            Support::Window { lo, hi, .. } => lo..=hi,
            Support::Periodic { period } => 0..=(period as i64 - 1),
        }
    }

    /// Cells in the order [`Complex::new`] takes them.
    pub fn stored_cells(&self) -> &[Arc<FpGroup>] {
        &self.cells
    }

    /// Differential matrices keyed by source degree, as [`Complex::new`] takes them.
    pub fn stored_diffs(&self) -> BTreeMap<i64, IntMatrix> {
        self.diffs.iter().map(|(&n, f)| (n, f.matrix().clone())).collect()
    }

    pub fn cell(&self, n: i64) -> Result<Arc<FpGroup>> {
        match self.support {
            Support::Periodic { period } => Ok(self.cells[n.mod_floor(&(period as i64)) as usize].clone()),
            Support::Window { lo, hi, zero_outside } => {
                if (lo..=hi).contains(&n) {
                    Ok(self.cells[(n - lo) as usize].clone())
                } else if zero_outside {
                    Ok(self.zero.clone())
                } else {
                    Err(Error::OutOfWindow { degree: n })
                }
            }
        }
    }

    /// Differential leaving degree `n`.
    pub fn diff(&self, n: i64) -> Result<Morphism> {
        match self.support {
            Support::Periodic { period } => Ok(self.diffs[&n.mod_floor(&(period as i64))].clone()),
            Support::Window { .. } => {
                if let Some(f) = self.diffs.get(&n) {
                    return Ok(f.clone());
                }
                let src = self.cell(n)?;
                let tgt = self.cell(n + self.convention.step())?;
                Ok(Morphism::zero(src, tgt))
            }
        }
    }

    /// Differential arriving at degree `n`.
    pub fn incoming(&self, n: i64) -> Result<Morphism> {
        self.diff(n - self.convention.step())
    }

    pub fn cycles(&self, n: i64) -> Result<Subgroup> {
        Ok(self.diff(n)?.kernel())
    }

    pub fn boundaries(&self, n: i64) -> Result<Subgroup> {
        Ok(self.incoming(n)?.image())
    }

    pub fn homology(&self, n: i64) -> Result<Arc<Subquotient>> {
        Ok(Arc::new(Subquotient::new(self.cycles(n)?, self.boundaries(n)?)?))
    }

    pub fn homology_type(&self, n: i64) -> Result<GroupType> {
        Ok(self.homology(n)?.group().group_type())
    }

    /// Degrees in `lo..=hi` where homology is nonzero. For periodic complexes
    /// one period decides exactness everywhere; see [`Complex::exactness_report`].
    pub fn nonexact_degrees(&self, lo: i64, hi: i64) -> Result<Vec<i64>> {
        let mut out = Vec::new();
        for n in lo..=hi {
            if !self.homology(n)?.group().is_trivial() {
                out.push(n);
            }
        }
        Ok(out)
    }

    pub fn is_exact_on(&self, lo: i64, hi: i64) -> Result<bool> {
        Ok(self.nonexact_degrees(lo, hi)?.is_empty())
    }

    /// Nonexact degrees over the whole stored support (one period, or the window).
    pub fn exactness_report(&self) -> Result<Vec<i64>> {
        let r = self.stored_degrees();
        self.nonexact_degrees(*r.start(), *r.end())
    }

    pub fn is_exact(&self) -> Result<bool> {
        Ok(self.exactness_report()?.is_empty())
    }

    /// The same data read in the other convention: `Cₙ = C⁻ⁿ`.
    pub fn reindexed(&self) -> Complex {
        let support = match self.support {
            Support::Window { lo, hi, zero_outside } => Support::Window {
                lo: -hi,
                hi: -lo,
                zero_outside,
            },
            p @ Support::Periodic { .. } => p,
        };
        let mut cells = Vec::with_capacity(self.cells.len());
        let degrees: Vec<i64> = match support {
            Support::Window { lo, hi, .. } => (lo..=hi).collect(),
            Support::Periodic { period } => (0..period as i64).collect(),
        };
        for &k in &degrees {
            cells.push(self.cell(-k).expect("reindexed cell inside support"));
        }
        let mut skeleton =
            Self::skeleton(self.convention.flipped(), self.modulus, support, cells).expect("same shape");
        let diffs = skeleton
            .diff_degrees()
            .into_iter()
            .map(|k| (k, self.diff(-k).expect("reindexed differential")))
            .collect();
        skeleton.diffs = diffs;
        skeleton
    }

    /// Degreewise direct sum. Periodic summands combine with the lcm of their
    /// periods; window summands must both be zero outside their windows.
    pub fn direct_sum(&self, other: &Complex) -> Result<Complex> {
        if self.convention != other.convention {
            return Err(Error::Shape("direct sum of complexes with different conventions".into()));
        }
        let support = match (self.support, other.support) {
            (Support::Periodic { period: a }, Support::Periodic { period: b }) => {
                Support::Periodic { period: a.lcm(&b) }
            }
            (
                Support::Window { lo: a, hi: b, zero_outside: true },
                Support::Window { lo: c, hi: d, zero_outside: true },
            ) => Support::Window {
                lo: a.min(c),
                hi: b.max(d),
                zero_outside: true,
            },
            _ => return Err(Error::Shape("direct sum needs matching, globally defined supports".into())),
        };
        if self.modulus != other.modulus {
            return Err(Error::Shape("direct sum of complexes over different rings".into()));
        }
        let modulus = self.modulus;
        let degrees: Vec<i64> = match support {
            Support::Window { lo, hi, .. } => (lo..=hi).collect(),
            Support::Periodic { period } => (0..period as i64).collect(),
        };
        let mut cells = Vec::new();
        for &n in &degrees {
            let (a, b) = (self.cell(n)?, other.cell(n)?);
            cells.push(Arc::new(direct_sum_group(&a, &b)?));
        }
        let skeleton = Self::skeleton(self.convention, modulus, support, cells)?;
        let mut diffs = BTreeMap::new();
        for n in skeleton.diff_degrees() {
            let f = self.diff(n)?;
            let g = other.diff(n)?;
            let m = block_diagonal(f.matrix(), g.matrix());
            diffs.insert(n, Morphism::new(skeleton.cell(n)?, skeleton.cell(n + skeleton.convention.step())?, m)?);
        }
        Self::assemble(skeleton, diffs, true)
    }

    /// Rebuilds the complex degreewise from new cells and differentials.
    /// `cell(n)` supplies the cell at `n`, `diff(n, src, tgt)` the
    /// differential leaving `n` in the output convention.
    pub(crate) fn derive(
        &self,
        convention: Convention,
        modulus: Modulus,
        mut cell: impl FnMut(i64) -> Result<Arc<FpGroup>>,
        mut diff: impl FnMut(i64, &Arc<FpGroup>, &Arc<FpGroup>) -> Result<Morphism>,
    ) -> Result<Complex> {
        let degrees: Vec<i64> = self.stored_degrees().collect();
        let cells = degrees.iter().map(|&n| cell(n)).collect::<Result<Vec<_>>>()?;
        let skeleton = Self::skeleton(convention, modulus, self.support, cells)?;
        let mut diffs = BTreeMap::new();
        for n in skeleton.diff_degrees() {
            let src = skeleton.cell(n)?;
            let tgt = skeleton.cell(n + convention.step())?;
            diffs.insert(n, diff(n, &src, &tgt)?);
        }
        Self::assemble(skeleton, diffs, true)
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Complex")
            .field("convention", &self.convention)
            .field("modulus", &self.modulus)
            .field("support", &self.support)
            .field("cells", &self.cells)
            .field("diffs", &self.diffs)
            .finish()
    }
}

pub(crate) fn block_diagonal(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let (r1, c1) = a.shape();
    let (r2, c2) = b.shape();
    IntMatrix::from_fn(r1 + r2, c1 + c2, |i, j| {
        if i < r1 && j < c1 {
            a[(i, j)].clone()
        } else if i >= r1 && j >= c1 {
            b[(i - r1, j - c1)].clone()
        } else {
            Default::default()
        }
    })
}

pub fn direct_sum_group(a: &FpGroup, b: &FpGroup) -> Result<FpGroup> {
    if a.modulus() != b.modulus() {
        return Err(Error::Shape("direct sum of groups over different rings".into()));
    }
    let rel = block_diagonal(a.relations(), b.relations());
    FpGroup::new(a.modulus(), a.ambient_rank() + b.ambient_rank(), rel)
}

/// A homology class: a cycle up to boundaries.
#[derive(Clone, Debug)]
pub struct HClass {
    degree: i64,
    homology: Arc<Subquotient>,
    representative: Element,
}

impl HClass {
    pub fn new(degree: i64, homology: Arc<Subquotient>, representative: Element) -> Result<Self> {
        homology.project(&representative)?;
        Ok(HClass {
            degree,
            homology,
            representative,
        })
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn representative(&self) -> &Element {
        &self.representative
    }

    pub fn homology(&self) -> &Arc<Subquotient> {
        &self.homology
    }

    /// The class as an element of the homology group.
    pub fn class(&self) -> Element {
        self.homology.project(&self.representative).expect("checked at construction")
    }
}

impl PartialEq for HClass {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.homology.group().same_as(other.homology.group())
            && self.class() == other.class()
    }
}

/// `Hom(C, N)` with `Hom(C, N)ⁱ = Hom(Cᵢ, N)` and differential `f ↦ f∘d`.
pub fn hom_into_module(c: &Complex, n: &Arc<FpGroup>) -> Result<Complex> {
    require(c, Convention::Homological, "hom_into_module")?;
    let homs = HomCache::new(|i| Ok(hom_group(&c.cell(i)?, n)));
    c.derive(
        Convention::Cohomological,
        c.modulus().gcd(&n.modulus()),
        |i| Ok(homs.get(i)?.group().clone()),
        |i, _, _| {
            let (from, to) = (homs.get(i)?, homs.get(i + 1)?);
            from.precompose_map(&c.diff(i + 1)?, &to)
        },
    )
}

/// `Hom(M, D)` with `Hom(M, D)ʲ = Hom(M, Dʲ)` and differential `f ↦ d∘f`.
pub fn hom_from_module(m: &Arc<FpGroup>, d: &Complex) -> Result<Complex> {
    require(d, Convention::Cohomological, "hom_from_module")?;
    let homs = HomCache::new(|j| Ok(hom_group(m, &d.cell(j)?)));
    d.derive(
        Convention::Cohomological,
        d.modulus().gcd(&m.modulus()),
        |j| Ok(homs.get(j)?.group().clone()),
        |j, _, _| {
            let (from, to) = (homs.get(j)?, homs.get(j + 1)?);
            from.postcompose_map(&d.diff(j)?, &to)
        },
    )
}

/// `C ⊗ N` with differential `d ⊗ id`.
pub fn tensor_with_module(c: &Complex, n: &Arc<FpGroup>) -> Result<Complex> {
    let step = c.convention().step();
    let tens = TensorCache::new(|i| Ok(tensor_group(&c.cell(i)?, n)));
    let id = Morphism::identity(n.clone());
    c.derive(
        c.convention(),
        c.modulus().gcd(&n.modulus()),
        |i| Ok(tens.get(i)?.group().clone()),
        |i, _, _| {
            let (from, to) = (tens.get(i)?, tens.get(i + step)?);
            from.map(&c.diff(i)?, &id, &to)
        },
    )
}

/// `M ⊗ D` with differential `id ⊗ d`.
pub fn module_tensor_with(m: &Arc<FpGroup>, d: &Complex) -> Result<Complex> {
    let step = d.convention().step();
    let tens = TensorCache::new(|j| Ok(tensor_group(m, &d.cell(j)?)));
    let id = Morphism::identity(m.clone());
    d.derive(
        d.convention(),
        d.modulus().gcd(&m.modulus()),
        |j| Ok(tens.get(j)?.group().clone()),
        |j, _, _| {
            let (from, to) = (tens.get(j)?, tens.get(j + step)?);
            from.map(&id, &d.diff(j)?, &to)
        },
    )
}

fn require(c: &Complex, convention: Convention, what: &str) -> Result<()> {
    if c.convention() != convention {
        return Err(Error::Shape(format!("{what} expects a {convention:?} complex")));
    }
    Ok(())
}

struct DegreeCache<T, F> {
    memo: crate::memo::Memo<i64, Arc<T>>,
    build: F,
}

impl<T, F: Fn(i64) -> Result<T>> DegreeCache<T, F> {
    fn new(build: F) -> Self {
        DegreeCache {
            memo: crate::memo::Memo::new(),
            build,
        }
    }

    fn get(&self, n: i64) -> Result<Arc<T>> {
        self.memo.get_or_try_insert(n, || (self.build)(n).map(Arc::new))
    }
}

type HomCache<F> = DegreeCache<HomGroup, F>;
type TensorCache<F> = DegreeCache<TensorGroup, F>;

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    pub(crate) fn strand(m: u64, d: i64) -> Complex {
        let cell = Arc::new(FpGroup::free(m, 1));
        let diffs = BTreeMap::from([(0, IntMatrix::from_rows(&[vec![d]], 0))]);
        Complex::new(Convention::Homological, m, Support::Periodic { period: 1 }, vec![cell], diffs).unwrap()
    }

    fn window(m: u64, cells: Vec<FpGroup>, lo: i64, diffs: &[(i64, i64)], zero_outside: bool) -> Result<Complex> {
        let hi = lo + cells.len() as i64 - 1;
        let diffs = diffs
            .iter()
            .map(|&(n, x)| (n, IntMatrix::from_rows(&[vec![x]], 0)))
            .collect();
        Complex::new(
            Convention::Homological,
            m,
            Support::Window { lo, hi, zero_outside },
            cells.into_iter().map(Arc::new).collect(),
            diffs,
        )
    }

    #[test]
    fn disc_complex() {
        let c = window(0, vec![FpGroup::free(0, 1), FpGroup::free(0, 1)], 0, &[(1, 1)], true).unwrap();
        assert!(c.cycles(1).unwrap().is_trivial());
        assert!(c.is_exact().unwrap());
        assert!(c.is_exact_on(-3, 4).unwrap());
    }

    #[test]
    fn z4_strand_cycles_equal_boundaries() {
        let c = strand(4, 2);
        let g = c.cell(0).unwrap();
        let half = Subgroup::new(g.clone(), vec![g.element(vec![BigInt::from(2)])]);
        for n in -2..=2 {
            assert!(c.cycles(n).unwrap().equals(&half));
            assert!(c.boundaries(n).unwrap().equals(&half));
        }
        assert!(c.is_exact().unwrap());
    }

    #[test]
    fn homology_examples() {
        let two = window(0, vec![FpGroup::free(0, 1), FpGroup::free(0, 1)], 0, &[(1, 2)], true).unwrap();
        assert_eq!(two.homology_type(0).unwrap(), GroupType::cyclic(2));
        assert!(two.homology(1).unwrap().group().is_trivial());

        let trunc = window(4, vec![FpGroup::free(4, 1), FpGroup::free(4, 1)], 0, &[(1, 2)], true).unwrap();
        assert_eq!(trunc.homology_type(0).unwrap(), GroupType::cyclic(2));
        assert_eq!(trunc.homology_type(1).unwrap(), GroupType::cyclic(2));

        let zero = window(0, vec![FpGroup::zero(0)], 0, &[], true).unwrap();
        assert!(zero.cycles(0).unwrap().is_trivial() && zero.boundaries(0).unwrap().is_trivial());
    }

    #[test]
    fn exactness_reports() {
        let lone = window(0, vec![FpGroup::cyclic(0, &[2])], 3, &[], true).unwrap();
        assert_eq!(lone.exactness_report().unwrap(), vec![3]);

        let cell = Arc::new(FpGroup::free(9, 1));
        let diffs = BTreeMap::from([
            (0, IntMatrix::from_rows(&[vec![3]], 0)),
            (1, IntMatrix::from_rows(&[vec![3]], 0)),
        ]);
        let nine = Complex::new(
            Convention::Homological,
            9,
            Support::Periodic { period: 2 },
            vec![cell.clone(), cell],
            diffs,
        )
        .unwrap();
        assert!(nine.is_exact().unwrap());
    }

    #[test]
    fn out_of_window_is_loud() {
        let c = window(0, vec![FpGroup::free(0, 1), FpGroup::free(0, 1)], 0, &[(1, 1)], false).unwrap();
        assert_eq!(c.cycles(0).unwrap_err(), Error::OutOfWindow { degree: -1 });
        assert!(c.homology(1).is_err());
    }

    #[test]
    fn rejects_nonzero_square() {
        let cell = Arc::new(FpGroup::free(0, 1));
        let diffs = BTreeMap::from([(0, IntMatrix::from_rows(&[vec![1]], 0))]);
        let err = Complex::new(Convention::Homological, 0, Support::Periodic { period: 1 }, vec![cell], diffs)
            .unwrap_err();
        assert!(matches!(err, Error::InvalidComplex { degree: 0, .. }));
    }

    #[test]
    fn hom_into_module_examples() {
        let c = strand(4, 2);
        let z2 = Arc::new(FpGroup::cyclic(4, &[2]));
        let h = hom_into_module(&c, &z2).unwrap();
        assert_eq!(h.cell(0).unwrap().group_type(), GroupType::cyclic(2));
        assert!(h.diff(0).unwrap().is_zero());

        let zero = Arc::new(FpGroup::zero(4));
        let h0 = hom_into_module(&c, &zero).unwrap();
        assert!(h0.cell(3).unwrap().is_trivial());

        let disc = window(0, vec![FpGroup::free(0, 1), FpGroup::free(0, 1)], 0, &[(1, 1)], true).unwrap();
        let hd = hom_into_module(&disc, &Arc::new(FpGroup::free(0, 1))).unwrap();
        assert_eq!(hd.convention(), Convention::Cohomological);
        assert!(hd.is_exact_on(-2, 3).unwrap());
        assert_eq!(hd.cell(1).unwrap().group_type(), GroupType { torsion: vec![], free_rank: 1 });
    }

    #[test]
    fn hom_from_module_examples() {
        let d = strand(4, 2).reindexed();
        let z = Arc::new(FpGroup::free(0, 1));
        let h = hom_from_module(&z, &d).unwrap();
        for n in 0..2 {
            assert_eq!(h.homology_type(n).unwrap(), d.homology_type(n).unwrap());
            assert_eq!(h.cell(n).unwrap().group_type(), d.cell(n).unwrap().group_type());
        }
        let z2 = Arc::new(FpGroup::cyclic(4, &[2]));
        assert!(hom_from_module(&z2, &d).unwrap().diff(0).unwrap().is_zero());
        assert!(hom_from_module(&Arc::new(FpGroup::zero(0)), &d).unwrap().cell(0).unwrap().is_trivial());
    }

    #[test]
    fn tensor_with_module_examples() {
        let c = strand(4, 2);
        let t = tensor_with_module(&c, &Arc::new(FpGroup::free(0, 1))).unwrap();
        assert_eq!(t.cell(0).unwrap().group_type(), GroupType::cyclic(4));
        assert!(t.is_exact().unwrap());
        let t2 = tensor_with_module(&c, &Arc::new(FpGroup::cyclic(0, &[2]))).unwrap();
        assert_eq!(t2.cell(0).unwrap().group_type(), GroupType::cyclic(2));
        assert!(t2.diff(0).unwrap().is_zero());
        assert!(tensor_with_module(&c, &Arc::new(FpGroup::zero(0))).unwrap().cell(0).unwrap().is_trivial());
        let t3 = module_tensor_with(&Arc::new(FpGroup::cyclic(0, &[2])), &c).unwrap();
        assert!(t3.diff(0).unwrap().is_zero());
    }

    #[test]
    fn reindexing_matches_homology() {
        let c = window(0, vec![FpGroup::free(0, 1), FpGroup::free(0, 1), FpGroup::free(0, 1)], -1, &[(0, 3), (1, 0)], true)
            .unwrap();
        let r = c.reindexed();
        assert_eq!(r.convention(), Convention::Cohomological);
        for n in -3..=3 {
            assert_eq!(c.homology_type(n).unwrap(), r.homology_type(-n).unwrap());
        }
    }
}
