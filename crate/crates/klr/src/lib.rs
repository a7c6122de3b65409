//! Cuspidal modules over Khovanov-Lauda-Rouquier algebras of finite type.
//!
//! The crate builds up from exact arithmetic in `Z[q, q^-1]` to explicit
//! finite-dimensional graded modules:
//!
//! * [`laurent`] Laurent polynomials and rational functions in `q`.
//! * [`cartan`] Cartan data, positive roots, letter orderings.
//! * [`words`] words, lexicographic order, Lyndon factorisation.
//! * [`shuffle`] the quantum shuffle algebra and its distinguished subspace.
//! * [`goodlyndon`] good Lyndon words, Kostant partitions, good words.
//! * [`homog`] homogeneous modules from weight-graph components.
//! * [`klr`] the algebra itself, finite modules, induction and a relation checker.
//! * [`cuspidal`] the catalogue of cuspidal modules and standard characters.
//! * [`json`] the exchange formats.

pub mod cartan;
pub mod cuspidal;
pub mod error;
pub mod goodlyndon;
pub mod homog;
pub mod json;
pub mod klr;
pub mod laurent;
pub mod shuffle;
pub mod words;

pub use cartan::{CartanDatum, CartanType, RootVector};
pub use error::{KlrError, Result};
pub use laurent::{LaurentPoly, RatFunc};
pub use shuffle::WordSum;
pub use words::Word;
