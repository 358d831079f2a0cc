//! Finite fields, polynomials, matrices, matrix groups and their modules.

pub mod field;
pub mod group;
pub mod hom;
pub mod mat;
pub mod meataxe;
pub mod module;
pub mod poly;
pub mod subspace;

pub use field::{Elem, Field, FieldRef};
pub use group::FinMatGroup;
pub use mat::Mat;
pub use meataxe::MeatAxeConfig;
pub use module::ModuleRep;
pub use poly::Poly;
pub use subspace::Subspace;
