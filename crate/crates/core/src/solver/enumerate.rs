use super::csp::{assign, Csp, Domains};
use super::SolverError;
use crate::structures::{Homomorphism, Structure};

struct Frame {
    var: usize,
    domains: Domains,
    next_value: usize,
}

/// Lazy iterator over all homomorphisms, in lexicographic order of the map
/// (source elements in universe order, target values ascending).
pub struct HomIter<'a> {
    csp: Csp<'a>,
    stack: Vec<Frame>,
    state: State,
}

enum State {
    Fresh,
    Running,
    Done,
}

pub fn enumerate_homs<'a>(source: &'a Structure, target: &'a Structure) -> Result<HomIter<'a>, SolverError> {
    Ok(HomIter {
        csp: Csp::new(source, target)?,
        stack: Vec::new(),
        state: State::Fresh,
    })
}

pub fn count_homs(source: &Structure, target: &Structure) -> Result<u64, SolverError> {
    Ok(enumerate_homs(source, target)?.count() as u64)
}

impl Iterator for HomIter<'_> {
    type Item = Homomorphism;

    fn next(&mut self) -> Option<Homomorphism> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                self.state = State::Running;
                if self.csp.n_vars == 0 {
                    self.state = State::Done;
                    return Some(Homomorphism::new(vec![]));
                }
                let mut domains = self.csp.full_domains();
                if !self.csp.propagate_all(&mut domains) {
                    self.state = State::Done;
                    return None;
                }
                self.stack.push(Frame {
                    var: 0,
                    domains,
                    next_value: 0,
                });
            }
            State::Running => {}
        }
        loop {
            let Some(frame) = self.stack.last_mut() else {
                self.state = State::Done;
                return None;
            };
            let var = frame.var;
            let Some(value) = frame.domains[var].ones().find(|&x| x >= frame.next_value) else {
                self.stack.pop();
                continue;
            };
            frame.next_value = value + 1;
            let mut next = frame.domains.clone();
            assign(&mut next, var, value);
            if !self.csp.propagate_from(&mut next, var) {
                continue;
            }
            if var + 1 == self.csp.n_vars {
                return Some(Csp::solution(&next));
            }
            self.stack.push(Frame {
                var: var + 1,
                domains: next,
                next_value: 0,
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{clique, is_homomorphism, typed_grid};

    /// All `|target|^|source|` maps filtered by the homomorphism predicate,
    /// generated in lexicographic order.
    fn brute_force(source: &Structure, target: &Structure) -> Vec<Vec<usize>> {
        let (n, m) = (source.len(), target.len());
        let total = (m as u64).pow(n as u32);
        (0..total)
            .map(|mut code| {
                let mut map = vec![0; n];
                for slot in map.iter_mut().rev() {
                    *slot = (code % m as u64) as usize;
                    code /= m as u64;
                }
                map
            })
            .filter(|map| is_homomorphism(source, target, map).unwrap())
            .collect()
    }

    #[test]
    fn clique_counts() {
        assert_eq!(count_homs(&clique(2).unwrap(), &clique(3).unwrap()).unwrap(), 6);
        assert_eq!(count_homs(&clique(3).unwrap(), &clique(2).unwrap()).unwrap(), 0);
    }

    #[test]
    fn typed_grid_translations_match_brute_force() {
        let a = typed_grid(2, 2).unwrap();
        let b = typed_grid(3, 3).unwrap();
        let oracle = brute_force(&a, &b);
        assert_eq!(oracle.len(), 4);
        let found: Vec<Vec<usize>> = enumerate_homs(&a, &b).unwrap().map(|h| h.map().to_vec()).collect();
        assert_eq!(found, oracle);
    }

    #[test]
    fn order_is_lexicographic() {
        let homs: Vec<Homomorphism> = enumerate_homs(&clique(2).unwrap(), &clique(3).unwrap())
            .unwrap()
            .collect();
        assert!(homs.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(homs[0].map(), &[0, 1]);
    }
}
