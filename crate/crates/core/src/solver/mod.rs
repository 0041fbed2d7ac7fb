//! Homomorphism search.
//!
//! [`find_hom`] is a backtracking search maintaining generalized arc
//! consistency with a smallest-domain-first variable order. [`enumerate_homs`]
//! lists every homomorphism in lexicographic order of the map.
//! [`find_hom_td`] decides existence by dynamic programming over a tree
//! decomposition of the source, in time polynomial in the target for bounded
//! width.

mod backtrack;
mod budget;
mod clique;
mod csp;
mod enumerate;
mod td;

pub use backtrack::find_hom;
pub(crate) use budget::BudgetMeter;
pub use budget::SearchBudget;
pub use clique::{clique_number, find_clique, has_k_clique};
pub use enumerate::{count_homs, enumerate_homs, HomIter};
pub use td::find_hom_td;

use thiserror::Error;

use crate::structures::{Homomorphism, StructureError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomSearchResult {
    Found(Homomorphism),
    NoneExists,
    BudgetExceeded,
}

impl HomSearchResult {
    pub fn is_found(&self) -> bool {
        matches!(self, HomSearchResult::Found(_))
    }

    pub fn into_found(self) -> Option<Homomorphism> {
        match self {
            HomSearchResult::Found(h) => Some(h),
            _ => None,
        }
    }

    /// `Some(true)` for Found, `Some(false)` for NoneExists, `None` when the
    /// budget ran out.
    pub fn decision(&self) -> Option<bool> {
        match self {
            HomSearchResult::Found(_) => Some(true),
            HomSearchResult::NoneExists => Some(false),
            HomSearchResult::BudgetExceeded => None,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("structures are not similar (different signatures)")]
    DissimilarStructures,
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("budget limits must be positive")]
    InvalidBudget,
}

impl From<StructureError> for SolverError {
    fn from(e: StructureError) -> Self {
        match e {
            StructureError::DissimilarStructures => SolverError::DissimilarStructures,
            other => SolverError::InvalidDecomposition(other.to_string()),
        }
    }
}
