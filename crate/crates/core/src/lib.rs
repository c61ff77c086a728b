//! Exact computations for ADE quivers: root systems, Auslander-Reiten
//! quivers, ℓ-weights, Kostant partitions and quiver Hecke algebras.
//!
//! Vertices are 0-based throughout the library; the JSON forms and the
//! command line use 1-based labels.

pub mod arq;
pub mod error;
pub mod klr;
pub mod linalg;
pub mod lweight;
pub mod quiver;
pub mod reflect;
pub mod repmod;
pub mod rootsys;
pub mod verify;

pub use arq::{ArQuiver, ArVertex, PhiEntry};
pub use error::{Error, Result};
pub use klr::{Degree, KlrAlgebra, KlrElement, KlrElementJson, KlrWord, Perm, Poly, PolyRep};
pub use linalg::{Matrix, Rational};
pub use lweight::{LRootCombination, LWeight, WindowReport};
pub use quiver::{HeightFunction, OrientedQuiver, QuiverJson};
pub use reflect::{FCompatReport, ReflectionPair, Side};
pub use repmod::{HomTable, KostantPartition, KostantPartitionJson, KpPoset, OrderReport, QuiverRep};
pub use rootsys::{CartanDatum, DynkinType, WeightVector, WeylElement, WeylWord};
pub use verify::{Failure, Suite, SuiteReport};
