//! Exact integer linear algebra: Smith/Hermite normal forms, modular
//! solving, kernels and lattice intersection.

mod lattice;
mod matrix;
mod normal_form;

pub use lattice::{kernel_basis, lattice_basis, lattice_intersect, solve_mod, Lattice};
pub use matrix::IntMatrix;
pub use normal_form::{hermite_normal_form, smith_normal_form, HnfResult, SnfResult};
