//! Exact computer algebra for measurings and bimeasurings of bialgebras,
//! abelianization and cocommutative parts, finite duals, matched pairs with
//! bismash products, and the fundamental isomorphisms of Hopf modules.
//!
//! All arithmetic is exact, over the rationals or a prime field. Carriers are
//! finite-dimensional structure-constant tables, theorems become executable
//! checks, and every failed check reports an algebraic counterexample.

pub mod algebra;
pub mod catalog;
pub mod duality;
pub mod enumerate;
pub mod field;
pub mod hopf_modules;
pub mod linalg;
pub mod matched_pair;
pub mod measuring;
pub mod schema;
pub mod structure_ops;

pub use algebra::{Algebra, Bialgebra, BilinearPairing, Coalgebra, Counterexample, HopfAlgebra};
pub use field::{FieldSpec, Scalar};
pub use linalg::{Matrix, Subspace, Tensor3};
