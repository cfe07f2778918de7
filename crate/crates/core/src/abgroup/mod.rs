//! Finitely presented abelian groups (modules over ℤ or ℤ/n), their
//! morphisms, subgroups, subquotients, Hom and tensor products.
//!
//! A ℤ/n-module is an abelian group with the implicit relators `n·eᵢ`;
//! Hom and ⊗ over ℤ/n agree with the abelian-group versions for such
//! modules, so one presentation type covers every ring in scope.

mod group;
mod hom;
mod morphism;
mod subgroup;
mod tensor;

pub use group::{Element, FpGroup, GroupType};
pub use hom::{hom_group, HomGroup};
pub use morphism::Morphism;
pub use subgroup::{Subgroup, Subquotient};
pub use tensor::{tensor_group, TensorGroup};

/// `num / den` inside their common parent; see [`Subquotient`].
pub fn subquotient(num: &Subgroup, den: &Subgroup) -> crate::Result<Subquotient> {
    Subquotient::new(num.clone(), den.clone())
}
