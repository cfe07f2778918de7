use std::sync::Arc;

use crate::abgroup::{hom_group, FpGroup, HomGroup, Morphism, Subgroup};
use crate::bicomplex::Bidegree;
use crate::complex::{Complex, Convention};
use crate::snf::IntMatrix;
use crate::{Error, Result};

/// A pair of maps between a cocycle group of a Hom bicomplex and the Hom
/// group it is identified with.
#[derive(Clone, Debug)]
pub struct Witness {
    pub bidegree: Bidegree,
    /// The cocycle subgroup of `Hom(Cᵢ, Dʲ)` as a group.
    pub cocycles: Arc<FpGroup>,
    /// The Hom group it is identified with.
    pub hom: Arc<FpGroup>,
    pub forward: Morphism,
    pub backward: Morphism,
}

impl Witness {
    /// Both composites are the identity.
    pub fn is_isomorphism(&self) -> Result<bool> {
        let there_and_back = self.backward.compose(&self.forward)?;
        let back_and_there = self.forward.compose(&self.backward)?;
        Ok(there_and_back.equals(&Morphism::identity(self.cocycles.clone()))
            && back_and_there.equals(&Morphism::identity(self.hom.clone())))
    }
}

fn check_pair(c: &Complex, d: &Complex) -> Result<()> {
    if c.convention() != Convention::Homological || d.convention() != Convention::Cohomological {
        return Err(Error::Shape("witnesses need a homological C and a cohomological D".into()));
    }
    Ok(())
}

/// Matrix whose columns are `f(generator)` for each ambient generator.
fn tabulate(source: &Arc<FpGroup>, rows: usize, mut f: impl FnMut(&crate::abgroup::Element) -> Result<Vec<num_bigint::BigInt>>) -> Result<IntMatrix> {
    let cols = source.generators().iter().map(&mut f).collect::<Result<Vec<_>>>()?;
    Ok(IntMatrix::from_columns(rows, &cols))
}

fn chase_failure(i: i64, j: i64, detail: &str) -> Error {
    Error::InternalChaseFailure {
        i,
        j,
        detail: detail.into(),
    }
}

/// Identifies `ker(d')` in `Hom(Cᵢ, Dʲ)` with `Hom(Zᵢ₋₁(C), Dʲ)`.
///
/// A cocycle kills `Bᵢ`, so it factors through `Cᵢ/Bᵢ`, which the
/// differential carries isomorphically onto `Zᵢ₋₁` when `C` is exact at
/// `i-1`.
pub fn zprime_witness(c: &Complex, d: &Complex, (i, j): Bidegree) -> Result<Witness> {
    check_pair(c, d)?;
    if !c.homology(i - 1)?.group().is_trivial() {
        return Err(Error::HypothesisViolated {
            i,
            j,
            detail: format!("C is not exact in degree {}", i - 1),
        });
    }
    let cell: HomGroup = hom_group(&c.cell(i)?, &d.cell(j)?);
    let next = hom_group(&c.cell(i + 1)?, &d.cell(j)?);
    let diff_in = c.diff(i + 1)?;
    let diff_out = c.diff(i)?;
    let kernel: Subgroup = cell.precompose_map(&diff_in, &next)?.kernel();
    let (cocycles, cocycle_incl) = kernel.as_group();
    let (cycles, cycle_incl) = c.cycles(i - 1)?.as_group();
    let target = d.cell(j)?;
    let hom = hom_group(&cycles, &target);

    // d restricted in its target: Cᵢ → Zᵢ₋₁
    let ci = c.cell(i)?;
    let corestricted = Morphism::new(
        ci.clone(),
        cycles.clone(),
        tabulate(&ci, cycles.ambient_rank(), |x| {
            cycle_incl
                .preimage_element(&diff_out.apply(x))
                .map(|y| y.coords().to_vec())
                .ok_or_else(|| chase_failure(i, j, "boundary outside the cycles"))
        })?,
    )?;

    let forward = Morphism::new(
        cocycles.clone(),
        hom.group().clone(),
        tabulate(&cocycles, hom.group().ambient_rank(), |z| {
            let f = cell.realize(&cocycle_incl.apply(z));
            let g = Morphism::new(
                cycles.clone(),
                target.clone(),
                tabulate(&cycles, target.ambient_rank(), |u| {
                    let x = diff_out
                        .preimage_element(&cycle_incl.apply(u))
                        .ok_or_else(|| chase_failure(i, j, "cycle without a preimage"))?;
                    Ok(f.apply(&x).coords().to_vec())
                })?,
            )?;
            Ok(hom.element_of(&g)?.coords().to_vec())
        })?,
    )?;

    let backward = Morphism::new(
        hom.group().clone(),
        cocycles.clone(),
        tabulate(hom.group(), cocycles.ambient_rank(), |g| {
            let f = hom.realize(g).compose(&corestricted)?;
            cocycle_incl
                .preimage_element(&cell.element_of(&f)?)
                .map(|y| y.coords().to_vec())
                .ok_or_else(|| chase_failure(i, j, "pulled-back map is not a cocycle"))
        })?,
    )?;

    Ok(Witness {
        bidegree: (i, j),
        cocycles,
        hom: hom.group().clone(),
        forward,
        backward,
    })
}

/// Identifies `ker(d'')` in `Hom(Cᵢ, Dʲ)` with `Hom(Cᵢ, Zʲ(D))`.
pub fn zsecond_witness(c: &Complex, d: &Complex, (i, j): Bidegree) -> Result<Witness> {
    check_pair(c, d)?;
    let ci = c.cell(i)?;
    let cell = hom_group(&ci, &d.cell(j)?);
    let next = hom_group(&ci, &d.cell(j + 1)?);
    let kernel = cell.postcompose_map(&d.diff(j)?, &next)?.kernel();
    let (cocycles, cocycle_incl) = kernel.as_group();
    let (cycles, cycle_incl) = d.cycles(j)?.as_group();
    let hom = hom_group(&ci, &cycles);

    let forward = Morphism::new(
        cocycles.clone(),
        hom.group().clone(),
        tabulate(&cocycles, hom.group().ambient_rank(), |z| {
            let f = cell.realize(&cocycle_incl.apply(z));
            let g = Morphism::new(
                ci.clone(),
                cycles.clone(),
                tabulate(&ci, cycles.ambient_rank(), |x| {
                    cycle_incl
                        .preimage_element(&f.apply(x))
                        .map(|y| y.coords().to_vec())
                        .ok_or_else(|| chase_failure(i, j, "cocycle value outside the cycles"))
                })?,
            )?;
            Ok(hom.element_of(&g)?.coords().to_vec())
        })?,
    )?;

    let backward = Morphism::new(
        hom.group().clone(),
        cocycles.clone(),
        tabulate(hom.group(), cocycles.ambient_rank(), |g| {
            let f = cycle_incl.compose(&hom.realize(g))?;
            cocycle_incl
                .preimage_element(&cell.element_of(&f)?)
                .map(|y| y.coords().to_vec())
                .ok_or_else(|| chase_failure(i, j, "pushed-forward map is not a cocycle"))
        })?,
    )?;

    Ok(Witness {
        bidegree: (i, j),
        cocycles,
        hom: hom.group().clone(),
        forward,
        backward,
    })
}
