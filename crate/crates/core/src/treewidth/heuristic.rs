use super::{decomposition_from_ordering, TreeDecomposition};
use crate::structures::Graph;

/// Greedy min-fill elimination ordering; ties go to the lowest vertex index.
pub fn min_fill_ordering(g: &Graph) -> Vec<usize> {
    let n = g.len();
    let mut adjacent: Vec<Vec<bool>> = vec![vec![false; n]; n];
    for (a, b) in g.edges() {
        adjacent[a][b] = true;
        adjacent[b][a] = true;
    }
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(usize, usize)> = None;
        for v in (0..n).filter(|&v| alive[v]) {
            let nbrs: Vec<usize> = (0..n).filter(|&w| alive[w] && adjacent[v][w]).collect();
            let mut fill = 0;
            for (i, &a) in nbrs.iter().enumerate() {
                fill += nbrs[i + 1..].iter().filter(|&&b| !adjacent[a][b]).count();
            }
            if best.is_none_or(|(f, _)| fill < f) {
                best = Some((fill, v));
            }
        }
        let (_, v) = best.expect("some vertex is alive");
        let nbrs: Vec<usize> = (0..n).filter(|&w| alive[w] && adjacent[v][w]).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                adjacent[a][b] = true;
                adjacent[b][a] = true;
            }
        }
        alive[v] = false;
        order.push(v);
    }
    order
}

/// Upper-bound decomposition from the min-fill ordering.
pub fn heuristic_decomposition(g: &Graph) -> TreeDecomposition {
    decomposition_from_ordering(g, &min_fill_ordering(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{clique_graph, grid_graph};
    use crate::treewidth::{exact_treewidth, validate_decomposition};

    #[test]
    fn exact_on_trees_and_cliques() {
        let tree = Graph::from_index_edges(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let d = heuristic_decomposition(&tree);
        assert_eq!(d.width(), 1);
        assert_eq!(validate_decomposition(&tree, &d), Ok(true));
        let k6 = clique_graph(6).unwrap();
        assert_eq!(heuristic_decomposition(&k6).width(), 5);
    }

    #[test]
    fn grid_upper_bound() {
        let g = grid_graph(3, 3).unwrap();
        let d = heuristic_decomposition(&g);
        assert_eq!(validate_decomposition(&g, &d), Ok(true));
        assert!(d.width() >= exact_treewidth(&g).unwrap().0);
    }
}
