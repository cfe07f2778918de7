//! Exact computational homological algebra over ℤ and ℤ/n.
//!
//! The crate computes the invariant `H(X) = (Z'∩Z'')/d'(Z'')` of a bicomplex
//! with exact rows and columns, runs the diagonal isomorphism
//! `H(X)^{(i,j)} → H(X)^{(i+1,j-1)}` by explicit diagram chase, and uses both
//! to check balance of Tate cohomology and Tate homology over `ℤ/m`.
//!
//! Layers, bottom to top:
//!
//! * [`snf`]: integer matrices, Smith/Hermite forms, lattices.
//! * [`abgroup`]: finitely presented abelian groups, morphisms, Hom and ⊗.
//! * [`complex`]: graded complexes with windowed or periodic support.
//! * [`bicomplex`]: lazily evaluated bicomplexes and the core invariant.
//! * [`constructions`]: Hom/⊗ bicomplexes, complete resolutions, random instances.
//! * [`tate`]: Ext-hat and Tor-hat by two routes each, and balance reports.
//! * [`verify`]: randomized verification suites with independent oracles.

pub mod abgroup;
pub mod bicomplex;
pub mod complex;
pub mod constructions;
mod error;
mod memo;
pub mod snf;
pub mod tate;
pub mod verify;

pub use error::{Error, Result};

/// Ring context: `0` is ℤ, `m ≥ 2` is ℤ/m.
pub type Modulus = u64;
