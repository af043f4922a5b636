//! Independent linear-algebra oracle.
//!
//! Everything here works with explicit matrix representations of bound
//! quivers over an exact field and knows nothing about the grid
//! combinatorics, so it can serve as a cross-check for it — and it is
//! not restricted to type A, which is what the counterexample scripts
//! in [`section5`] rely on.

pub mod algebra;
pub mod ext;
pub mod field;
pub mod matrix;
pub mod rep;
pub mod section5;
pub mod typea;

pub use algebra::{BoundQuiver, OracleError, Path};
pub use ext::{ext1_basis, ext1_dim, ext_dim, extension_realization, proj_cover, syzygy, ExplicitSes};
pub use field::{Field, Fp, Rat, F101};
pub use matrix::Matrix;
pub use rep::{decompose, end_dim, hom_basis, hom_dim, kernel_rep, cokernel_rep, Morphism, Rep};
