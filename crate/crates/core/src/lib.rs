//! Exact lattice, root-system and chamber computations for symplectic forms on
//! the rational surfaces `CP² # k(-CP²)`, `k ≤ 8`, and `S² × S² # n(-CP²)`.
//!
//! All arithmetic is exact: classes are integer vectors, forms are vectors of
//! arbitrary-precision rationals.

pub mod braid;
pub mod cone;
pub mod curves;
pub mod dynkin;
pub mod error;
pub mod invariants;
pub mod lattice;
pub mod packing;
pub mod published;
pub mod reduction;
pub mod roots;
pub mod sample;

pub use error::{Error, Result};
pub use lattice::{BasisTag, FormClass, HomologyClass, Rational};
