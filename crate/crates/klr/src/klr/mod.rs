//! The KLR algebra engine and finite-dimensional modules over it.

pub mod algebra;
pub mod induce;
pub mod module;
pub mod perm;
pub mod poly;
pub mod polyrep;
pub mod quotient;
pub mod sub;
pub mod verify;

pub use algebra::{Element, Gen, KlrAlgebra, Term};
pub use induce::{induce, induction_product, DEFAULT_INDUCE_GUARD};
pub use module::{BasisVector, FiniteModule, Matrix, ModGen, Truncation, Vector};
pub use poly::{q_poly, Coeff, QPoly, YPoly};
pub use polyrep::poly_rep;
pub use quotient::quotient_module;
pub use verify::{verify_relations, RelationReport, Witness};
