//! Quiver Hecke (KLR) algebras of a Dynkin quiver.

pub mod algebra;
pub mod center;
pub mod graded;
pub mod nilhecke;
pub mod parse;
pub mod perm;
pub mod poly;
pub mod polyrep;

pub use algebra::{sequences, Degree, KlrAlgebra, KlrElement, KlrElementJson, KlrTermJson, KlrWord};
pub use center::{center_embed, elementary_inputs};
pub use graded::{graded_dim_pbw, graded_dim_span, induct_dim, stdh_ledger, StdhEntry};
pub use nilhecke::{check_nilhecke, matrix_algebra_dim, nilhecke_em, nilhecke_pbw_dim, NilHeckeReport};
pub use parse::parse_expression;
pub use perm::Perm;
pub use poly::Poly;
pub use polyrep::{PolyRep, PolyVec};
