//! Cores, homomorphic equivalence and isomorphism of small structures.

use thiserror::Error;

use crate::solver::{find_hom, HomSearchResult, SearchBudget, SolverError};
use crate::structures::{Homomorphism, Structure};

/// Largest structure accepted by [`is_isomorphic`].
pub const ISOMORPHISM_LIMIT: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("structures are not similar (different signatures)")]
    DissimilarStructures,
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("structure has {0} elements; isomorphism testing is limited to {ISOMORPHISM_LIMIT}")]
    TooLarge(usize),
    #[error(transparent)]
    Solver(SolverError),
}

impl From<SolverError> for CoreError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::DissimilarStructures => CoreError::DissimilarStructures,
            other => CoreError::Solver(other),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreResult {
    /// Induced substructure of the input; element names are kept.
    pub core: Structure,
    /// Input → core.
    pub retraction: Homomorphism,
    /// Core → input, the identity on element names.
    pub inclusion: Homomorphism,
}

fn decide(r: HomSearchResult) -> Result<Option<Homomorphism>, CoreError> {
    match r {
        HomSearchResult::Found(h) => Ok(Some(h)),
        HomSearchResult::NoneExists => Ok(None),
        HomSearchResult::BudgetExceeded => Err(CoreError::BudgetExceeded),
    }
}

fn without(n: usize, a: usize) -> Vec<usize> {
    (0..n).filter(|&x| x != a).collect()
}

/// Finds a homomorphism from `a` into `a` minus one element, trying elements
/// in universe order. Returns the removed element and the map.
fn fold_step(a: &Structure, budget: SearchBudget) -> Result<Option<(Vec<usize>, Homomorphism)>, CoreError> {
    for x in 0..a.len() {
        let rest = without(a.len(), x);
        let sub = a
            .induced_substructure(&rest)
            .expect("indices are in range and distinct");
        if let Some(h) = decide(find_hom(a, &sub, budget)?)? {
            return Ok(Some((rest, h)));
        }
    }
    Ok(None)
}

/// True iff no homomorphism maps `a` into a proper substructure of itself.
pub fn is_core(a: &Structure, budget: SearchBudget) -> Result<bool, CoreError> {
    Ok(fold_step(a, budget)?.is_none())
}

/// Retracts `a` onto a core by repeatedly folding it into itself minus one
/// element and restricting to the image.
pub fn core_of(a: &Structure, budget: SearchBudget) -> Result<CoreResult, CoreError> {
    // `keep`: current substructure as ascending input indices.
    let mut keep: Vec<usize> = (0..a.len()).collect();
    let mut retraction: Vec<usize> = (0..a.len()).collect();
    let mut current = a.clone();
    while let Some((rest, h)) = fold_step(&current, budget)? {
        let mut position = vec![usize::MAX; a.len()];
        for (i, &x) in keep.iter().enumerate() {
            position[x] = i;
        }
        for r in retraction.iter_mut() {
            *r = keep[rest[h.apply(position[*r])]];
        }
        let mut image: Vec<usize> = h.image().into_iter().map(|i| keep[rest[i]]).collect();
        image.sort_unstable();
        keep = image;
        current = a.induced_substructure(&keep).expect("valid subset");
    }
    let mut position = vec![usize::MAX; a.len()];
    for (i, &x) in keep.iter().enumerate() {
        position[x] = i;
    }
    let retraction = Homomorphism::new(retraction.iter().map(|&r| position[r]).collect());
    let inclusion = Homomorphism::new(keep);
    debug_assert!(retraction.is_valid(a, &current));
    debug_assert!(inclusion.is_valid(&current, a));
    Ok(CoreResult {
        core: current,
        retraction,
        inclusion,
    })
}

/// `a → b` and `b → a`.
pub fn are_hom_equivalent(a: &Structure, b: &Structure, budget: SearchBudget) -> Result<bool, CoreError> {
    if !a.is_similar(b) {
        return Err(CoreError::DissimilarStructures);
    }
    Ok(decide(find_hom(a, b, budget)?)?.is_some() && decide(find_hom(b, a, budget)?)?.is_some())
}

/// Per element: how often it occurs at each position of each relation.
fn signatures(a: &Structure) -> Vec<Vec<usize>> {
    let width: usize = a.relations().iter().map(|r| r.arity()).sum();
    let mut out = vec![vec![0; width]; a.len()];
    let mut offset = 0;
    for rel in a.relations() {
        for t in rel.tuples() {
            for (p, &e) in t.iter().enumerate() {
                out[e][offset + p] += 1;
            }
        }
        offset += rel.arity();
    }
    out
}

/// Searches for a bijection mapping the tuples of `a` exactly onto those of
/// `b`, pruning by per-element occurrence counts.
pub fn is_isomorphic(a: &Structure, b: &Structure, budget: SearchBudget) -> Result<bool, CoreError> {
    if !a.is_similar(b) {
        return Err(CoreError::DissimilarStructures);
    }
    let n = a.len();
    if n.max(b.len()) > ISOMORPHISM_LIMIT {
        return Err(CoreError::TooLarge(n.max(b.len())));
    }
    if n != b.len() || a.relations().iter().zip(b.relations()).any(|(x, y)| x.len() != y.len()) {
        return Ok(false);
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return Ok(false);
    }
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| sig_a[x] == sig_b[y]).collect())
        .collect();
    // tuples are checked once their largest element is mapped
    let mut closing: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (r, rel) in a.relations().iter().enumerate() {
        for (i, t) in rel.tuples().enumerate() {
            if let Some(&m) = t.iter().max() {
                closing[m].push((r, i));
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut meter = budget.start();
    let found = extend(a, b, &candidates, &closing, 0, &mut map, &mut used, &mut meter)?;
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Structure,
    b: &Structure,
    candidates: &[Vec<usize>],
    closing: &[Vec<(usize, usize)>],
    x: usize,
    map: &mut [usize],
    used: &mut [bool],
    meter: &mut crate::solver::BudgetMeter,
) -> Result<bool, CoreError> {
    if x == map.len() {
        return Ok(true);
    }
    for &y in &candidates[x] {
        if used[y] {
            continue;
        }
        if meter.tick() {
            return Err(CoreError::BudgetExceeded);
        }
        map[x] = y;
        let consistent = closing[x].iter().all(|&(r, i)| {
            let image: Vec<usize> = a.relation(r).tuple(i).iter().map(|&e| map[e]).collect();
            b.relation(r).contains(&image)
        });
        if consistent {
            used[y] = true;
            if extend(a, b, candidates, closing, x + 1, map, used, meter)? {
                return Ok(true);
            }
            used[y] = false;
        }
    }
    map[x] = usize::MAX;
    Ok(false)
}
