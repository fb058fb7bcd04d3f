//! Fixing subgraphs and Hamiltonian cycle multiplicities.
//!
//! A spanning subgraph `U` of `G` is *fixing* when `G` contains exactly
//! `|A(G)| / |A(U) ∩ A(G)|` copies of it, i.e. every copy is an image of `U`
//! under an automorphism of `G`; it is *strong fixing* when in addition
//! `A(U) ⊆ A(G)`. This crate computes the quantities involved (subgraph
//! counts, similarity counts, extension counts), applies them to Hamiltonian
//! cycles, and checks the resulting claims for cages and generalized
//! Petersen graphs.

pub mod census;
pub mod error;
pub mod fixing;
pub mod graph;
pub mod group;
pub mod hamilton;
pub mod petersen;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, SpanningSubgraph};
pub use group::{CanonicalForm, Perm, PermutationGroup};
