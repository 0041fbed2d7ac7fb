//! Reductions from clique problems to homomorphism problems, with the
//! templates and checkers used to exercise them.
//!
//! * [`grohe_construct`]: the gadget `M(A, μ, G)` with `A → M` iff `G` has a
//!   `k`-clique, for a core `A` carrying a `k x K` grid minor.
//! * [`pcsp_construct`]: the promise gadget `X` with `B → X` when `G` has a
//!   `k`-clique and `A ↛ X` when it has none.
//! * [`clique_amplify`]: joined copies of a graph, turning a gap-clique
//!   instance for `k` into one for `l`.
//! * [`relaxation_map`]: moving an instance to a relaxing template pair.

mod amplify;
mod grohe;
mod pairs;
mod pcsp;
mod relax;
mod templates;
mod verify;

pub use amplify::{clique_amplify, copy_clique, gap_condition, gap_pairs, largest_copy_clique};
pub use grohe::{grohe_construct, GroheElement, GroheInstance};
pub use pairs::PairIndexer;
pub use pcsp::{pcsp_construct, PcspElement, PcspInstance};
pub use relax::{relaxation_map, PromiseInstance, RelaxedInstance};
pub use templates::{make_core_template, make_grid_template, HardnessTemplate, StarWitness, TemplatePair};
pub use verify::{all_graphs, verify_amplify, verify_grohe, verify_pcsp, Counterexample, Outcome, VerificationReport};

use thiserror::Error;

use crate::cores::CoreError;
use crate::minors::MinorError;
use crate::solver::SolverError;
use crate::structures::StructureError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("minor map is not onto the structure")]
    NotOnto,
    #[error("structure is not connected")]
    NotConnected,
    #[error("bad grid dimensions: {0}")]
    BadGridDimensions(String),
    #[error("minor map target is not the Gaifman graph of the structure")]
    TargetMismatch,
    #[error("minor map does not validate")]
    InvalidMinorMap,
    #[error("structures are not similar (different signatures)")]
    DissimilarStructures,
    #[error("missing homomorphism witness for the relaxation: {0}")]
    RelaxationWitnessMissing(&'static str),
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("core has no {0}x{0} grid minor")]
    NoGridMinor(usize),
    #[error("composed endomorphism of the core has no right inverse")]
    NoRightInverse,
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("invalid template: {0}")]
    InvalidTemplate(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Solver(SolverError),
    #[error(transparent)]
    Minor(MinorError),
}

impl From<SolverError> for ReductionError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::DissimilarStructures => ReductionError::DissimilarStructures,
            other => ReductionError::Solver(other),
        }
    }
}

impl From<MinorError> for ReductionError {
    fn from(e: MinorError) -> Self {
        match e {
            MinorError::BudgetExceeded => ReductionError::BudgetExceeded,
            MinorError::NotOnto => ReductionError::NotOnto,
            MinorError::NotConnected => ReductionError::NotConnected,
            other => ReductionError::Minor(other),
        }
    }
}

impl From<CoreError> for ReductionError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::BudgetExceeded => ReductionError::BudgetExceeded,
            CoreError::DissimilarStructures => ReductionError::DissimilarStructures,
            CoreError::Solver(s) => ReductionError::Solver(s),
            CoreError::TooLarge(n) => ReductionError::InvalidTemplate(format!("core of {n} elements")),
        }
    }
}

/// Calls `emit` for every tuple choosing one entry from each of `fibers`
/// whose entries are pairwise `compatible`, in lexicographic order.
pub(crate) fn preimage_tuples<C, E>(fibers: &[&[usize]], compatible: C, mut emit: E)
where
    C: Fn(usize, usize) -> bool,
    E: FnMut(&[usize]),
{
    fn go<C: Fn(usize, usize) -> bool, E: FnMut(&[usize])>(
        fibers: &[&[usize]],
        compatible: &C,
        emit: &mut E,
        chosen: &mut Vec<usize>,
    ) {
        let j = chosen.len();
        if j == fibers.len() {
            emit(chosen);
            return;
        }
        for &x in fibers[j] {
            if chosen.iter().all(|&y| compatible(x, y) && compatible(y, x)) {
                chosen.push(x);
                go(fibers, compatible, emit, chosen);
                chosen.pop();
            }
        }
    }
    let mut chosen = Vec::with_capacity(fibers.len());
    go(fibers, &compatible, &mut emit, &mut chosen);
}
