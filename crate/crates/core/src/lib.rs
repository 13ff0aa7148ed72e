//! Exact computer algebra for finite-dimensional Hopf algebras.
//!
//! Algebras are given by structure constants over ℚ or a cyclotomic field.
//! The crate computes integrals, the modular element, the modular
//! automorphisms and the scaling constant, builds the dual with its pairing
//! and actions, and checks the identities relating all of these, ending with
//! the formula for the fourth power of the antipode:
//!
//! ```text
//! S⁴(a) = δ⁻¹ (δ̂ ⇀ a ↼ δ̂⁻¹) δ
//! ```
//!
//! Every comparison is an exact equality.

pub mod algebra_file;
pub mod catalog;
pub mod dsl;
pub mod duality;
pub mod hopf;
pub mod linalg;
pub mod modular;
pub mod report;
pub mod scalar;
pub mod verification;

pub use algebra_file::{read_algebra, write_algebra, AlgebraFile, FileError};
pub use catalog::{build_function_algebra, build_group_algebra, build_sweedler, build_taft, GroupPresentation};
pub use duality::{build_dual, PairedSystem};
pub use hopf::{Bialgebra, HopfAlgebra, HopfError, ValidationReport};
pub use linalg::{Matrix, Tensor3, Vector};
pub use modular::ModularData;
pub use scalar::{Field, FieldSpec, Rational, Scalar};
pub use verification::{IdentityResult, VerificationReport};
