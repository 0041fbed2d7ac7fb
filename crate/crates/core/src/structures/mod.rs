//! Finite relational structures, graphs and the homomorphism predicate.
//!
//! Every structure stores its universe as an insertion-ordered list of opaque
//! string identifiers and its relations as deduplicated, insertion-ordered
//! tuple sets over element indices. Algorithms work on indices; names only
//! matter at the I/O boundary.

mod generate;
mod graph;
mod homomorphism;
pub mod io;
pub mod names;
mod signature;
mod structure;

pub use generate::{clique, clique_graph, grid, grid_graph, random_graph, typed_grid, Family};
pub use graph::Graph;
pub use homomorphism::{is_homomorphism, is_homomorphism_named, Homomorphism};
pub use signature::{Signature, Symbol};
pub use structure::{Relation, Structure};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("unknown relation symbol `{0}`")]
    UnknownSymbol(String),
    #[error("relation `{symbol}` has arity {expected}, got a tuple of length {found}")]
    ArityMismatch {
        symbol: String,
        expected: usize,
        found: usize,
    },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("duplicate relation symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("relation symbol `{0}` has arity 0")]
    ZeroArity(String),
    #[error("structures are not similar (different signatures)")]
    DissimilarStructures,
    #[error("map is partial: defined on {found} of {expected} elements")]
    PartialMap { expected: usize, found: usize },
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("structure is not an undirected graph: {0}")]
    NotAGraph(String),
    #[error("parse error: {0}")]
    Parse(String),
}
