//! Exact-arithmetic invariants of complete flag bundles over the projective
//! line: Dynkin diagrams and their Cartan matrices, root systems, Weyl groups,
//! tag-admissibility lattices, line-bundle cohomology on `G/B`, and the word
//! combinatorics of Bott-Samelson varieties.
//!
//! Everything is integer or exact-rational arithmetic; there is no floating
//! point anywhere in the crate.

pub mod bottsam;
pub mod bundle;
pub mod cli;
pub mod cohom;
pub mod diagrams;
pub mod lattice;
pub mod mat;
pub mod rootsys;
pub mod snf;
pub mod weyl;

mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
