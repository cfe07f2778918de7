use std::sync::Arc;

use num_bigint::BigInt;

use super::group::{Element, FpGroup};
use super::morphism::Morphism;
use crate::snf::{kernel_basis, lattice_intersect, IntMatrix, Lattice};
use crate::{Error, Result};

/// Subgroup of an [`FpGroup`] given by generators.
///
/// Membership is decided in the lifted lattice `⟨generators⟩ + relations`
/// of ℤ^r, held in Hermite form. The stored generator list is the Hermite
/// basis of that lattice minus the vectors that are zero in the group, so it
/// never exceeds the ambient rank.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: Arc<FpGroup>,
    gens: IntMatrix,
    lifted: Lattice,
}

impl Subgroup {
    pub fn from_matrix(parent: Arc<FpGroup>, gens: &IntMatrix) -> Self {
        assert_eq!(gens.rows(), parent.ambient_rank(), "subgroup generator length");
        let lifted = Lattice::from_generators(&gens.hconcat(parent.relations()));
        let keep: Vec<usize> = (0..lifted.rank())
            .filter(|&k| !parent.is_zero_coords(&lifted.basis().column(k)))
            .collect();
        let gens = lifted.basis().select_columns(keep);
        Subgroup {
            parent,
            gens,
            lifted,
        }
    }

    pub fn new(parent: Arc<FpGroup>, gens: Vec<Element>) -> Self {
        let cols: Vec<Vec<BigInt>> = gens
            .iter()
            .map(|g| {
                assert!(g.group().same_as(&parent), "generator from another group");
                g.coords().to_vec()
            })
            .collect();
        let m = IntMatrix::from_columns(parent.ambient_rank(), &cols);
        Self::from_matrix(parent, &m)
    }

    pub fn zero(parent: Arc<FpGroup>) -> Self {
        let r = parent.ambient_rank();
        Self::from_matrix(parent, &IntMatrix::zeros(r, 0))
    }

    pub fn whole(parent: Arc<FpGroup>) -> Self {
        let r = parent.ambient_rank();
        Self::from_matrix(parent, &IntMatrix::identity(r))
    }

    pub fn parent(&self) -> &Arc<FpGroup> {
        &self.parent
    }

    /// Generators as columns.
    pub fn generator_matrix(&self) -> &IntMatrix {
        &self.gens
    }

    pub fn generators(&self) -> Vec<Element> {
        self.gens
            .columns()
            .into_iter()
            .map(|c| self.parent.element(c))
            .collect()
    }

    /// Hermite basis of the lifted lattice (contains the relation lattice).
    pub(crate) fn lifted_basis(&self) -> &IntMatrix {
        self.lifted.basis()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.cols() == 0
    }

    pub fn contains_coords(&self, x: &[BigInt]) -> bool {
        self.lifted.contains(x)
    }

    pub fn contains(&self, x: &Element) -> bool {
        x.group().same_as(&self.parent) && self.contains_coords(x.coords())
    }

    pub fn contains_subgroup(&self, other: &Subgroup) -> bool {
        self.parent.same_as(&other.parent) && self.lifted.contains_lattice(&other.lifted)
    }

    pub fn equals(&self, other: &Subgroup) -> bool {
        self.contains_subgroup(other) && other.contains_subgroup(self)
    }

    pub fn intersect(&self, other: &Subgroup) -> Result<Subgroup> {
        if !self.parent.same_as(&other.parent) {
            return Err(Error::ParentMismatch);
        }
        let gens = lattice_intersect(self.lifted.basis(), other.lifted.basis());
        Ok(Subgroup::from_matrix(self.parent.clone(), &gens))
    }

    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        if !self.parent.same_as(&other.parent) {
            return Err(Error::ParentMismatch);
        }
        Ok(Subgroup::from_matrix(self.parent.clone(), &self.gens.hconcat(&other.gens)))
    }

    /// The subgroup as a group in its own right, with its inclusion.
    pub fn as_group(&self) -> (Arc<FpGroup>, Morphism) {
        let sq = Subquotient::new(self.clone(), Subgroup::zero(self.parent.clone()))
            .expect("zero subgroup is contained in every subgroup");
        let inclusion = sq.lift_morphism();
        (sq.group().clone(), inclusion)
    }
}

/// `num / den` for subgroups `den ⊆ num` of a common group.
///
/// Ambient generators of the quotient are the generators of `num`; its
/// relations are the integer combinations of them that land in `den`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    num: Subgroup,
    den: Subgroup,
    group: Arc<FpGroup>,
    solver: Lattice,
}

impl Subquotient {
    pub fn new(num: Subgroup, den: Subgroup) -> Result<Self> {
        if !num.parent.same_as(&den.parent) {
            return Err(Error::ParentMismatch);
        }
        if !num.contains_subgroup(&den) {
            return Err(Error::NotContained);
        }
        let parent = num.parent.clone();
        let k = num.gens.cols();
        let block = num.gens.hconcat(&den.lifted.basis().neg());
        let relations = kernel_basis(&block, 0).select_rows(0..k);
        let group = Arc::new(FpGroup::new(parent.modulus(), k, relations)?);
        let solver = Lattice::from_generators(&num.gens.hconcat(parent.relations()));
        Ok(Subquotient {
            num,
            den,
            group,
            solver,
        })
    }

    pub fn ambient(&self) -> &Arc<FpGroup> {
        self.num.parent()
    }

    pub fn numerator(&self) -> &Subgroup {
        &self.num
    }

    pub fn denominator(&self) -> &Subgroup {
        &self.den
    }

    /// The quotient as a finitely presented group.
    pub fn group(&self) -> &Arc<FpGroup> {
        &self.group
    }

    /// Class of an ambient element lying in the numerator.
    pub fn project(&self, x: &Element) -> Result<Element> {
        if !x.group().same_as(self.ambient()) {
            return Err(Error::ParentMismatch);
        }
        self.project_coords(x.coords())
    }

    pub fn project_coords(&self, x: &[BigInt]) -> Result<Element> {
        let sol = self.solver.solve(x).ok_or(Error::NotAMember)?;
        Ok(self.group.element(sol[..self.num.gens.cols()].to_vec()))
    }

    /// A representative in the ambient group.
    pub fn lift(&self, c: &Element) -> Element {
        assert!(c.group().same_as(&self.group), "lift of a foreign class");
        self.ambient()
            .element(self.num.gens.mul_vec(c.coords()))
    }

    /// Quotient generators → ambient group.
    pub fn lift_morphism(&self) -> Morphism {
        Morphism::new_unchecked(self.group.clone(), self.ambient().clone(), self.num.gens.clone())
    }

    /// Map `self → target` induced by an ambient morphism carrying numerator
    /// into numerator and denominator into denominator.
    pub fn induced(&self, f: &Morphism, target: &Subquotient) -> Result<Morphism> {
        if !f.source().same_as(self.ambient()) || !f.target().same_as(target.ambient()) {
            return Err(Error::ParentMismatch);
        }
        let cols = (0..self.num.gens.cols())
            .map(|k| {
                let img = f.apply_coords(&self.num.gens.column(k));
                target.project_coords(&img).map(|e| e.coords().to_vec())
            })
            .collect::<Result<Vec<_>>>()?;
        let m = IntMatrix::from_columns(target.group.ambient_rank(), &cols);
        Morphism::new(self.group.clone(), target.group.clone(), m)
    }
}
