use rayon::prelude::*;
use serde::Serialize;

use super::{
    clique_amplify, copy_clique, gap_pairs, grohe_construct, largest_copy_clique, pcsp_construct, HardnessTemplate,
    ReductionError,
};
use crate::cores::is_core;
use crate::minors::MinorMap;
use crate::solver::{find_clique, find_hom, has_k_clique, HomSearchResult, SearchBudget};
use crate::structures::{is_homomorphism, Graph, Structure};

/// Every labelled graph on `1..=max_n` vertices `0..n`, by vertex count and
/// then by edge bitmask over the lexicographic pair order.
pub fn all_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        for mask in 0u64..1 << pairs.len() {
            let mut g = Graph::with_order(n);
            for (i, &(a, b)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(a, b);
                }
            }
            out.push(g);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Counterexample,
    Inconclusive,
}

/// A failing or undecided instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub id: usize,
    pub graph: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub kind: String,
    pub instances: usize,
    pub passed: usize,
    pub counterexamples: Vec<Counterexample>,
    pub inconclusive: Vec<Counterexample>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn collect(kind: &str, graphs: &[Graph], results: Vec<Result<(), Finding>>, notes: Vec<String>) -> Self {
        let mut report = VerificationReport {
            kind: kind.to_string(),
            instances: graphs.len(),
            passed: 0,
            counterexamples: Vec::new(),
            inconclusive: Vec::new(),
            notes,
        };
        for (id, r) in results.into_iter().enumerate() {
            match r {
                Ok(()) => report.passed += 1,
                Err(Finding::Counterexample(detail)) => report.counterexamples.push(Counterexample {
                    id,
                    graph: describe(&graphs[id]),
                    detail,
                }),
                Err(Finding::Inconclusive(detail)) => report.inconclusive.push(Counterexample {
                    id,
                    graph: describe(&graphs[id]),
                    detail,
                }),
            }
        }
        report
    }

    pub fn outcome(&self) -> Outcome {
        if !self.counterexamples.is_empty() {
            Outcome::Counterexample
        } else if !self.inconclusive.is_empty() {
            Outcome::Inconclusive
        } else {
            Outcome::Pass
        }
    }

    /// 0 all pass, 1 counterexample found, 3 inconclusive instances present.
    pub fn exit_code(&self) -> i32 {
        match self.outcome() {
            Outcome::Pass => 0,
            Outcome::Counterexample => 1,
            Outcome::Inconclusive => 3,
        }
    }
}

enum Finding {
    Counterexample(String),
    Inconclusive(String),
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g
        .edges()
        .map(|(a, b)| format!("{}-{}", g.vertex(a), g.vertex(b)))
        .collect();
    format!("n={} edges=[{}]", g.len(), edges.join(","))
}

fn fail(detail: impl Into<String>) -> Result<(), Finding> {
    Err(Finding::Counterexample(detail.into()))
}

fn decide(r: HomSearchResult, what: &str) -> Result<Option<crate::structures::Homomorphism>, Finding> {
    match r {
        HomSearchResult::Found(h) => Ok(Some(h)),
        HomSearchResult::NoneExists => Ok(None),
        HomSearchResult::BudgetExceeded => Err(Finding::Inconclusive(format!("budget exceeded deciding {what}"))),
    }
}

fn is_clique(g: &Graph, vertices: &[usize]) -> bool {
    vertices
        .iter()
        .enumerate()
        .all(|(i, &a)| vertices[i + 1..].iter().all(|&b| a != b && g.has_edge(a, b)))
}

fn run_sweep<F>(graphs: &[Graph], check: F) -> Result<Vec<Result<(), Finding>>, ReductionError>
where
    F: Fn(&Graph) -> Result<Result<(), Finding>, ReductionError> + Sync + Send,
{
    graphs.par_iter().map(check).collect()
}

/// Checks `A → M(A, μ, G)` against `G` having a `k`-clique for every graph.
/// Completeness is always checked, including the explicit clique witness;
/// soundness only when `a` is a core.
pub fn verify_grohe(
    a: &Structure,
    mu: &MinorMap,
    k: usize,
    graphs: &[Graph],
    budget: SearchBudget,
) -> Result<VerificationReport, ReductionError> {
    let core = match is_core(a, budget) {
        Ok(c) => Some(c),
        Err(crate::cores::CoreError::BudgetExceeded) => None,
        Err(e) => return Err(e.into()),
    };
    let mut notes = Vec::new();
    match core {
        Some(false) => notes.push("source is not a core; soundness not checked".to_string()),
        None => notes.push("core test ran out of budget; soundness undecided".to_string()),
        Some(true) => {}
    }
    let results = run_sweep(graphs, |g| {
        let inst = grohe_construct(a, mu, g, k)?;
        let clique = find_clique(g, k);
        let found = match decide(find_hom(a, &inst.m, budget)?, "A -> M") {
            Ok(h) => h,
            Err(f) => return Ok(Err(f)),
        };
        if !is_homomorphism(&inst.m, a, inst.projection.map()).unwrap_or(false) {
            return Ok(fail("projection M -> A is not a homomorphism"));
        }
        if let Some(c) = &clique {
            if found.is_none() {
                return Ok(fail("graph has a k-clique but A -/-> M"));
            }
            if !inst.clique_witness(c).is_some_and(|w| w.is_valid(a, &inst.m)) {
                return Ok(fail("clique witness is not a homomorphism A -> M"));
            }
        }
        if found.is_some() && clique.is_none() {
            match core {
                Some(true) => return Ok(fail("A -> M but the graph has no k-clique")),
                None => {
                    return Ok(Err(Finding::Inconclusive(
                        "A -> M without a k-clique, core status unknown".into(),
                    )))
                }
                Some(false) => {}
            }
        }
        Ok(Ok(()))
    })?;
    Ok(VerificationReport::collect("grohe", graphs, results, notes))
}

/// Checks the promise gadget for every graph: `|X|` within its bound, the
/// projection, completeness (`k`-clique ⇒ `B → X`) with the explicit witness,
/// and soundness (`A → X` ⇒ `k`-clique), decoding the clique from the
/// homomorphism found.
pub fn verify_pcsp(
    template: &HardnessTemplate,
    graphs: &[Graph],
    budget: SearchBudget,
) -> Result<VerificationReport, ReductionError> {
    let (a, b, k) = (&template.pair.a, &template.pair.b, template.k);
    let results = run_sweep(graphs, |g| {
        let inst = pcsp_construct(&template.pair, &template.rhos, g)?;
        let clique = find_clique(g, k);
        let b_found = match decide(find_hom(b, &inst.x, budget)?, "B -> X") {
            Ok(h) => h,
            Err(f) => return Ok(Err(f)),
        };
        let a_found = match decide(find_hom(a, &inst.x, budget)?, "A -> X") {
            Ok(h) => h,
            Err(f) => return Ok(Err(f)),
        };
        if (inst.x.len() as u128) > inst.size_bound() {
            return Ok(fail(format!("|X| = {} exceeds {}", inst.x.len(), inst.size_bound())));
        }
        if !is_homomorphism(&inst.x, b, inst.projection.map()).unwrap_or(false) {
            return Ok(fail("projection X -> B is not a homomorphism"));
        }
        if let Some(c) = &clique {
            if b_found.is_none() {
                return Ok(fail("graph has a k-clique but B -/-> X"));
            }
            if !inst.clique_witness(c).is_some_and(|w| w.is_valid(b, &inst.x)) {
                return Ok(fail("clique witness is not a homomorphism B -> X"));
            }
        }
        if let Some(alpha) = a_found {
            if clique.is_none() {
                return Ok(fail("A -> X but the graph has no k-clique"));
            }
            match inst.decode_clique(template, &alpha)? {
                Some(vs) if is_clique(g, &vs) => {}
                _ => return Ok(fail("clique decoded from A -> X is not a k-clique")),
            }
        }
        Ok(Ok(()))
    })?;
    Ok(VerificationReport::collect("pcsp", graphs, results, Vec::new()))
}

/// Checks both directions of the amplification for every graph: a
/// `k`-clique gives an `mk`-clique and hence an `l`-clique in `H`; and for
/// every gap pair `(f, g)`, a `g`-clique in `H` leaves a clique of size
/// `⌈g/m⌉ ≥ f` inside one copy.
pub fn verify_amplify(k: usize, l: usize, graphs: &[Graph]) -> Result<VerificationReport, ReductionError> {
    let pairs = gap_pairs(k, l);
    let notes = vec![format!(
        "gap pairs (f, g): {}",
        pairs
            .iter()
            .map(|(f, g)| format!("({f}, {g})"))
            .collect::<Vec<_>>()
            .join(" ")
    )];
    let results = run_sweep(graphs, |g| {
        let (h, m) = clique_amplify(g, k, l)?;
        let n = g.len();
        Ok((|| {
            if let Some(c) = find_clique(g, k) {
                if !is_clique(&h, &copy_clique(&c, n, m)) {
                    return fail("copied clique is not an mk-clique of H");
                }
                if !has_k_clique(&h, l) {
                    return fail("graph has a k-clique but H has no l-clique");
                }
            }
            for &(f, gv) in &pairs {
                if let Some(c) = find_clique(&h, gv) {
                    let part = largest_copy_clique(&c, n, m);
                    if part.len() < gv.div_ceil(m) || !is_clique(g, &part) {
                        return fail(format!(
                            "{gv}-clique of H leaves no {}-clique in a copy",
                            gv.div_ceil(m)
                        ));
                    }
                    if !has_k_clique(g, f) {
                        return fail(format!("H has a {gv}-clique but the graph has no {f}-clique"));
                    }
                }
            }
            Ok(())
        })())
    })?;
    Ok(VerificationReport::collect("amplify", graphs, results, notes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::make_grid_template;
    use crate::structures::typed_grid;

    #[test]
    fn graph_counts() {
        assert_eq!(all_graphs(3).len(), 1 + 2 + 8);
        assert_eq!(all_graphs(5).len(), 1099);
    }

    #[test]
    fn small_sweeps_pass() {
        let graphs = all_graphs(4);
        let a = typed_grid(3, 3).unwrap();
        let mu = MinorMap::identity(&a.gaifman_graph());
        let r = verify_grohe(&a, &mu, 3, &graphs, SearchBudget::UNLIMITED).unwrap();
        assert_eq!(r.exit_code(), 0, "{r:?}");
        let t = make_grid_template(2, 3).unwrap();
        let r = verify_pcsp(&t, &graphs, SearchBudget::UNLIMITED).unwrap();
        assert_eq!(r.exit_code(), 0, "{r:?}");
        let r = verify_amplify(3, 5, &graphs).unwrap();
        assert_eq!(r.exit_code(), 0, "{r:?}");
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let graphs = vec![crate::structures::clique_graph(4).unwrap()];
        let a = typed_grid(3, 3).unwrap();
        let mu = MinorMap::identity(&a.gaifman_graph());
        let r = verify_grohe(&a, &mu, 3, &graphs, SearchBudget::nodes(1)).unwrap_or_else(|e| panic!("{e}"));
        assert_eq!(r.exit_code(), 3);
        assert_eq!(r.inconclusive.len(), 1);
    }
}
