//! Hypergraph trees, cross-cuts, embeddings and extremal constructions.
//!
//! The crate is organised around a single carrier type, [`Hypergraph`], and a
//! set of pure operations on it:
//!
//! * [`ops`]: shadows, degrees, kernel degrees, links, traces, Kruskal–Katona.
//! * [`tree`]: recognition of hypergraph trees and the certified transformations
//!   (tightening, compression, hosting trees, limbs, cross-cut deletion, reductions).
//! * [`covers`]: exact vertex-cover and cross-cut numbers.
//! * [`embedding`]: subhypergraph search and the guaranteed greedy embeddings.
//! * [`extremal`]: lower-bound constructions, the exact Turán oracle and
//!   checks for the structural lemmas.

pub mod combinatorics;
pub mod covers;
pub mod embedding;
mod error;
pub mod extremal;
mod hypergraph;
pub mod ops;
mod set;
mod sunflower;
#[cfg(test)]
mod testutil;
pub mod tree;

pub use error::{Error, Result};
pub use hypergraph::Hypergraph;
pub use ops::{product, KkReport};
pub use set::{Vertex, VertexSet, MAX_SEARCH_VERTICES};
