use super::csp::{assign, Csp, Domains};
use super::{BudgetMeter, HomSearchResult, SearchBudget, SolverError};
use crate::structures::Structure;

enum Step {
    Solved(Domains),
    Dead,
    OutOfBudget,
}

/// Searches for a homomorphism `source → target`.
///
/// `NoneExists` is only returned after the search space is exhausted;
/// running out of budget yields `BudgetExceeded`.
pub fn find_hom(source: &Structure, target: &Structure, budget: SearchBudget) -> Result<HomSearchResult, SolverError> {
    let csp = Csp::new(source, target)?;
    if csp.n_vars == 0 {
        return Ok(HomSearchResult::Found(crate::structures::Homomorphism::new(vec![])));
    }
    let mut domains = csp.full_domains();
    if !csp.propagate_all(&mut domains) {
        return Ok(HomSearchResult::NoneExists);
    }
    let mut meter = budget.start();
    Ok(match search(&csp, domains, &mut meter) {
        Step::Solved(d) => {
            let h = Csp::solution(&d);
            debug_assert!(h.is_valid(source, target));
            HomSearchResult::Found(h)
        }
        Step::Dead => HomSearchResult::NoneExists,
        Step::OutOfBudget => HomSearchResult::BudgetExceeded,
    })
}

/// Smallest domain first, lowest index on ties.
fn select(domains: &Domains) -> Option<usize> {
    domains
        .iter()
        .enumerate()
        .map(|(v, d)| (d.count_ones(..), v))
        .filter(|&(size, _)| size > 1)
        .min()
        .map(|(_, v)| v)
}

fn search(csp: &Csp<'_>, domains: Domains, meter: &mut BudgetMeter) -> Step {
    let Some(var) = select(&domains) else {
        return Step::Solved(domains);
    };
    for value in domains[var].ones() {
        if meter.tick() {
            return Step::OutOfBudget;
        }
        let mut next = domains.clone();
        assign(&mut next, var, value);
        if !csp.propagate_from(&mut next, var) {
            continue;
        }
        match search(csp, next, meter) {
            Step::Dead => {}
            done => return done,
        }
    }
    Step::Dead
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{clique, Graph, Signature};

    fn cycle(n: usize) -> Structure {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_index_edges(n, &edges).unwrap().to_structure()
    }

    /// Every map `source → target`, by counting in base |target|.
    fn brute_force_exists(source: &Structure, target: &Structure) -> bool {
        let (n, m) = (source.len(), target.len());
        if n == 0 {
            return true;
        }
        if m == 0 {
            return false;
        }
        let mut map = vec![0usize; n];
        loop {
            if crate::structures::is_homomorphism(source, target, &map).unwrap() {
                return true;
            }
            let mut i = 0;
            while i < n && map[i] + 1 == m {
                map[i] = 0;
                i += 1;
            }
            if i == n {
                return false;
            }
            map[i] += 1;
        }
    }

    #[test]
    fn cliques() {
        let k3 = clique(3).unwrap();
        let k2 = clique(2).unwrap();
        let found = find_hom(&k3, &k3, SearchBudget::UNLIMITED).unwrap();
        let h = found.into_found().unwrap();
        assert!(h.is_injective() && h.is_valid(&k3, &k3));
        assert_eq!(
            find_hom(&k3, &k2, SearchBudget::UNLIMITED).unwrap(),
            HomSearchResult::NoneExists
        );
    }

    #[test]
    fn five_cycle_is_three_colorable() {
        let c5 = cycle(5);
        let k3 = clique(3).unwrap();
        assert!(brute_force_exists(&c5, &k3));
        assert!(find_hom(&c5, &k3, SearchBudget::UNLIMITED).unwrap().is_found());
        assert!(!brute_force_exists(&c5, &clique(2).unwrap()));
    }

    #[test]
    fn budget_is_reported_not_conflated() {
        // K_7 → K_6 has no homomorphism but needs search to refute.
        let r = find_hom(&clique(7).unwrap(), &clique(6).unwrap(), SearchBudget::nodes(5)).unwrap();
        assert_eq!(r, HomSearchResult::BudgetExceeded);
    }

    #[test]
    fn empty_cases() {
        let empty = Structure::empty(Signature::graph(), Vec::<String>::new());
        let k2 = clique(2).unwrap();
        assert!(find_hom(&empty, &k2, SearchBudget::UNLIMITED).unwrap().is_found());
        assert_eq!(
            find_hom(&k2, &empty, SearchBudget::UNLIMITED).unwrap(),
            HomSearchResult::NoneExists
        );
        let isolated = Structure::empty(Signature::graph(), ["x", "y"]);
        assert!(find_hom(
            &isolated,
            &Structure::empty(Signature::graph(), ["p"]),
            SearchBudget::UNLIMITED
        )
        .unwrap()
        .is_found());
    }

    #[test]
    fn loops_and_repeated_variables() {
        let looped = Structure::build(Signature::graph(), ["a"], [("E", vec![vec!["a", "a"]])]).unwrap();
        let k3 = clique(3).unwrap();
        assert_eq!(
            find_hom(&looped, &k3, SearchBudget::UNLIMITED).unwrap(),
            HomSearchResult::NoneExists
        );
        assert!(find_hom(&k3, &looped, SearchBudget::UNLIMITED).unwrap().is_found());
    }
}
