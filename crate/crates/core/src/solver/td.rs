use std::collections::HashSet;

use super::csp::Csp;
use super::{HomSearchResult, SolverError};
use crate::structures::{Homomorphism, Structure};
use crate::treewidth::{validate_decomposition, TreeDecomposition};

enum Kind {
    Leaf,
    Introduce { var: usize, child: usize },
    Forget { var: usize, child: usize },
    Join { left: usize, right: usize },
}

struct NiceNode {
    bag: Vec<usize>,
    kind: Kind,
}

/// Nice decomposition: leaves with empty bags, single-vertex introduce and
/// forget steps, binary joins over equal bags, and a root with an empty bag.
/// Children always precede their parent in `nodes`.
struct Nice {
    nodes: Vec<NiceNode>,
    root: usize,
}

impl Nice {
    fn build(d: &TreeDecomposition, adjacency: &[Vec<usize>]) -> Nice {
        let mut nice = Nice {
            nodes: Vec::new(),
            root: 0,
        };
        // parent-first order from tree node 0
        let m = d.node_count();
        let mut parent = vec![usize::MAX; m];
        let mut order = vec![0];
        let mut seen = vec![false; m];
        seen[0] = true;
        let mut i = 0;
        while i < order.len() {
            let t = order[i];
            for &u in &adjacency[t] {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = t;
                    order.push(u);
                }
            }
            i += 1;
        }
        let mut top = vec![usize::MAX; m];
        for &t in order.iter().rev() {
            let bag = d.bag(t);
            let chains: Vec<usize> = adjacency[t]
                .iter()
                .filter(|&&c| parent[c] == t)
                .map(|&c| nice.chain(top[c], bag))
                .collect();
            top[t] = match chains.split_first() {
                None => {
                    let leaf = nice.push(Vec::new(), Kind::Leaf);
                    nice.chain(leaf, bag)
                }
                Some((&first, rest)) => rest.iter().fold(first, |acc, &next| {
                    nice.push(bag.to_vec(), Kind::Join { left: acc, right: next })
                }),
            };
        }
        nice.root = nice.chain(top[0], &[]);
        nice
    }

    fn push(&mut self, bag: Vec<usize>, kind: Kind) -> usize {
        self.nodes.push(NiceNode { bag, kind });
        self.nodes.len() - 1
    }

    /// Forget then introduce single vertices to move from `from`'s bag to
    /// `target`.
    fn chain(&mut self, from: usize, target: &[usize]) -> usize {
        let mut current = from;
        let start = self.nodes[from].bag.clone();
        for &v in start.iter().filter(|v| target.binary_search(v).is_err()) {
            let mut bag = self.nodes[current].bag.clone();
            bag.retain(|&w| w != v);
            current = self.push(bag, Kind::Forget { var: v, child: current });
        }
        for &v in target.iter().filter(|v| start.binary_search(v).is_err()) {
            let mut bag = self.nodes[current].bag.clone();
            let pos = bag.partition_point(|&w| w < v);
            bag.insert(pos, v);
            current = self.push(bag, Kind::Introduce { var: v, child: current });
        }
        current
    }
}

fn with_inserted(assignment: &[usize], pos: usize, value: usize) -> Box<[usize]> {
    let mut out = Vec::with_capacity(assignment.len() + 1);
    out.extend_from_slice(&assignment[..pos]);
    out.push(value);
    out.extend_from_slice(&assignment[pos..]);
    out.into_boxed_slice()
}

fn without(assignment: &[usize], pos: usize) -> Box<[usize]> {
    let mut out = assignment.to_vec();
    out.remove(pos);
    out.into_boxed_slice()
}

/// Decides `source → target` by dynamic programming over a tree
/// decomposition of the source's Gaifman graph.
///
/// Each table holds the bag assignments that extend to a homomorphism of the
/// part of the source below that node. Every source tuple is checked at an
/// introduce node whose bag covers it. A witness is reconstructed top-down.
pub fn find_hom_td(
    source: &Structure,
    target: &Structure,
    decomposition: &TreeDecomposition,
) -> Result<HomSearchResult, SolverError> {
    let csp = Csp::new(source, target)?;
    let gaifman = source.gaifman_graph();
    match validate_decomposition(&gaifman, decomposition) {
        Ok(true) => {}
        Ok(false) => {
            return Err(SolverError::InvalidDecomposition(
                "decomposition does not cover the source's Gaifman graph".into(),
            ))
        }
        Err(e) => return Err(SolverError::InvalidDecomposition(e.to_string())),
    }
    let adjacency = decomposition
        .tree_adjacency()
        .map_err(|e| SolverError::InvalidDecomposition(e.to_string()))?;
    let mut domains = csp.full_domains();
    if !csp.propagate_all(&mut domains) {
        return Ok(HomSearchResult::NoneExists);
    }
    let candidates: Vec<Vec<usize>> = domains.iter().map(|d| d.ones().collect()).collect();
    let nice = Nice::build(decomposition, &adjacency);

    let satisfied = |bag: &[usize], assignment: &[usize], var: usize| -> bool {
        csp.var_constraints[var].iter().all(|&c| {
            let constraint = &csp.constraints[c];
            let mut image = Vec::with_capacity(constraint.scope.len());
            for &w in constraint.scope.iter() {
                match bag.binary_search(&w) {
                    Ok(p) => image.push(assignment[p]),
                    Err(_) => return true,
                }
            }
            target.relation(constraint.rel).contains(&image)
        })
    };

    let mut tables: Vec<HashSet<Box<[usize]>>> = Vec::with_capacity(nice.nodes.len());
    for node in &nice.nodes {
        let table = match node.kind {
            Kind::Leaf => HashSet::from([Box::from([])]),
            Kind::Introduce { var, child } => {
                let pos = node.bag.binary_search(&var).expect("introduced var in bag");
                let mut table = HashSet::new();
                for assignment in &tables[child] {
                    for &x in &candidates[var] {
                        let extended = with_inserted(assignment, pos, x);
                        if satisfied(&node.bag, &extended, var) {
                            table.insert(extended);
                        }
                    }
                }
                table
            }
            Kind::Forget { var, child } => {
                let pos = nice.nodes[child]
                    .bag
                    .binary_search(&var)
                    .expect("forgotten var in child bag");
                tables[child].iter().map(|a| without(a, pos)).collect()
            }
            Kind::Join { left, right } => tables[left].intersection(&tables[right]).cloned().collect(),
        };
        tables.push(table);
    }
    if tables[nice.root].is_empty() {
        return Ok(HomSearchResult::NoneExists);
    }

    let mut values: Vec<Option<usize>> = vec![None; source.len()];
    let mut stack: Vec<(usize, Box<[usize]>)> = vec![(nice.root, Box::from([]))];
    while let Some((id, assignment)) = stack.pop() {
        let node = &nice.nodes[id];
        match node.kind {
            Kind::Leaf => {}
            Kind::Introduce { var, child } => {
                let pos = node.bag.binary_search(&var).expect("introduced var in bag");
                values[var] = Some(assignment[pos]);
                stack.push((child, without(&assignment, pos)));
            }
            Kind::Forget { var, child } => {
                let pos = nice.nodes[child]
                    .bag
                    .binary_search(&var)
                    .expect("forgotten var in child bag");
                let extended = candidates[var]
                    .iter()
                    .map(|&x| with_inserted(&assignment, pos, x))
                    .find(|e| tables[child].contains(e))
                    .expect("table entries extend downwards");
                stack.push((child, extended));
            }
            Kind::Join { left, right } => {
                stack.push((right, assignment.clone()));
                stack.push((left, assignment));
            }
        }
    }
    let map: Vec<usize> = values
        .into_iter()
        .map(|v| v.expect("every element lies in some bag"))
        .collect();
    let h = Homomorphism::new(map);
    debug_assert!(h.is_valid(source, target));
    Ok(HomSearchResult::Found(h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{clique, grid, Graph};
    use crate::treewidth::grid_decomposition;

    #[test]
    fn path_into_edge() {
        let path = Graph::from_index_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])
            .unwrap()
            .to_structure();
        let d = TreeDecomposition::path((0..5).map(|i| vec![i, i + 1]).collect());
        let r = find_hom_td(&path, &clique(2).unwrap(), &d).unwrap();
        assert!(r.into_found().unwrap().is_valid(&path, &clique(2).unwrap()));
    }

    #[test]
    fn grid_with_canonical_decomposition() {
        let g = grid(3, 3).unwrap();
        let d = grid_decomposition(3, 3).unwrap();
        assert!(find_hom_td(&g, &clique(2).unwrap(), &d).unwrap().is_found());
        let k3 = clique(3).unwrap();
        let d3 = TreeDecomposition::single_bag(3);
        assert!(find_hom_td(&k3, &k3, &d3).unwrap().is_found());
        assert_eq!(
            find_hom_td(&k3, &clique(2).unwrap(), &d3).unwrap(),
            HomSearchResult::NoneExists
        );
    }

    #[test]
    fn rejects_invalid_decompositions() {
        let g = grid(3, 3).unwrap();
        let d = TreeDecomposition::single_bag(4);
        assert!(matches!(
            find_hom_td(&g, &clique(2).unwrap(), &d),
            Err(SolverError::InvalidDecomposition(_))
        ));
    }

    #[test]
    fn branching_tree_with_joins() {
        // star K_{1,3} decomposed with the center in every bag
        let star = Graph::from_index_edges(4, &[(0, 1), (0, 2), (0, 3)])
            .unwrap()
            .to_structure();
        let d = TreeDecomposition::new(
            vec![vec![0], vec![0, 1], vec![0, 2], vec![0, 3]],
            vec![(0, 1), (0, 2), (0, 3)],
        );
        let h = find_hom_td(&star, &clique(2).unwrap(), &d)
            .unwrap()
            .into_found()
            .unwrap();
        assert!(h.is_valid(&star, &clique(2).unwrap()));
    }
}
