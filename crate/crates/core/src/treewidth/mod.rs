//! Tree decompositions and treewidth.

mod decomposition;
mod exact;
mod heuristic;

pub use decomposition::{
    decomposition_from_ordering, grid_decomposition, validate_decomposition, width, TreeDecomposition,
};
pub use exact::{exact_treewidth, structure_treewidth, EXACT_LIMIT};
pub use heuristic::{heuristic_decomposition, min_fill_ordering};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreewidthError {
    #[error("decomposition tree is not a tree: {0}")]
    MalformedTree(String),
    #[error("graph has {0} vertices; exact treewidth is limited to {EXACT_LIMIT}")]
    TooLarge(usize),
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("malformed decomposition document: {0}")]
    Parse(String),
}
