use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use super::SolverError;
use crate::structures::{Homomorphism, Structure};

pub(crate) type Domains = Vec<FixedBitSet>;

/// One source tuple viewed as a constraint on its distinct elements.
pub(crate) struct Constraint {
    pub rel: usize,
    pub scope: Box<[usize]>,
    /// Distinct variables with every position they occupy.
    pub vars: Vec<(usize, Vec<usize>)>,
}

/// The homomorphism problem source → target as a CSP: variables are source
/// elements, values are target elements.
pub(crate) struct Csp<'a> {
    pub target: &'a Structure,
    pub constraints: Vec<Constraint>,
    pub var_constraints: Vec<Vec<usize>>,
    pub n_vars: usize,
    pub n_vals: usize,
}

impl<'a> Csp<'a> {
    pub fn new(source: &'a Structure, target: &'a Structure) -> Result<Self, SolverError> {
        if !source.is_similar(target) {
            return Err(SolverError::DissimilarStructures);
        }
        let mut constraints = Vec::new();
        let mut var_constraints = vec![Vec::new(); source.len()];
        for (r, rel) in source.relations().iter().enumerate() {
            for t in rel.tuples() {
                let mut vars: Vec<(usize, Vec<usize>)> = Vec::new();
                for (pos, &v) in t.iter().enumerate() {
                    match vars.iter_mut().find(|(w, _)| *w == v) {
                        Some((_, positions)) => positions.push(pos),
                        None => vars.push((v, vec![pos])),
                    }
                }
                let id = constraints.len();
                for (v, _) in &vars {
                    var_constraints[*v].push(id);
                }
                constraints.push(Constraint {
                    rel: r,
                    scope: t.into(),
                    vars,
                });
            }
        }
        Ok(Csp {
            target,
            constraints,
            var_constraints,
            n_vars: source.len(),
            n_vals: target.len(),
        })
    }

    pub fn full_domains(&self) -> Domains {
        let mut full = FixedBitSet::with_capacity(self.n_vals);
        full.insert_range(..);
        vec![full; self.n_vars]
    }

    /// Restricts the domains of every constraint's variables to supported
    /// values. Returns `false` on a wipeout.
    fn revise(&self, c: &Constraint, domains: &mut Domains, changed: &mut Vec<usize>) -> bool {
        let rel = self.target.relation(c.rel);
        let mut support: Vec<FixedBitSet> = c.vars.iter().map(|_| FixedBitSet::with_capacity(self.n_vals)).collect();
        for t in rel.tuples() {
            let consistent = c.vars.iter().all(|(v, positions)| {
                let x = t[positions[0]];
                domains[*v].contains(x) && positions[1..].iter().all(|&p| t[p] == x)
            });
            if consistent {
                for (i, (_, positions)) in c.vars.iter().enumerate() {
                    support[i].insert(t[positions[0]]);
                }
            }
        }
        for (i, (v, _)) in c.vars.iter().enumerate() {
            if support[i] != domains[*v] {
                if support[i].is_clear() {
                    return false;
                }
                domains[*v] = std::mem::take(&mut support[i]);
                changed.push(*v);
            }
        }
        true
    }

    /// Generalized arc consistency starting from the given constraints.
    pub fn propagate<I>(&self, domains: &mut Domains, seeds: I) -> bool
    where
        I: IntoIterator<Item = usize>,
    {
        let mut queued = vec![false; self.constraints.len()];
        let mut queue = VecDeque::new();
        for c in seeds {
            if !queued[c] {
                queued[c] = true;
                queue.push_back(c);
            }
        }
        let mut changed = Vec::new();
        while let Some(c) = queue.pop_front() {
            queued[c] = false;
            changed.clear();
            if !self.revise(&self.constraints[c], domains, &mut changed) {
                return false;
            }
            for &v in &changed {
                for &d in &self.var_constraints[v] {
                    if d != c && !queued[d] {
                        queued[d] = true;
                        queue.push_back(d);
                    }
                }
            }
        }
        true
    }

    pub fn propagate_all(&self, domains: &mut Domains) -> bool {
        if domains.iter().any(|d| d.is_clear()) {
            return false;
        }
        self.propagate(domains, 0..self.constraints.len())
    }

    pub fn propagate_from(&self, domains: &mut Domains, var: usize) -> bool {
        self.propagate(domains, self.var_constraints[var].clone())
    }

    /// Reads off the map once every domain is a singleton.
    pub fn solution(domains: &Domains) -> Homomorphism {
        Homomorphism::new(
            domains
                .iter()
                .map(|d| d.ones().next().expect("singleton domain"))
                .collect(),
        )
    }
}

pub(crate) fn assign(domains: &mut Domains, var: usize, value: usize) {
    domains[var].clear();
    domains[var].insert(value);
}
