//! Minor maps, grid-minor search and grid-like mappings.

mod gridlike;
mod map;
mod search;

pub use gridlike::{minor_map_to_gridlike, validate_gridlike, CellMap};
pub use map::{is_onto, make_onto, validate_minor_map, MinorMap};
pub use search::{find_grid_minor, find_minor_map, SEARCH_LIMIT};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MinorError {
    #[error("target graph has {0} vertices; minor search is limited to {SEARCH_LIMIT}")]
    TooLarge(usize),
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("minor map is not onto its target")]
    NotOnto,
    #[error("source of the minor map is not a square grid")]
    NotAGridSource,
    #[error("target graph is not connected")]
    NotConnected,
    #[error("minor map does not validate")]
    InvalidMinorMap,
    #[error("minor map target is not the Gaifman graph of the structure")]
    TargetMismatch,
    #[error("invalid grid dimension: {0}")]
    InvalidDimension(usize),
    #[error("malformed minor map document: {0}")]
    Parse(String),
}
