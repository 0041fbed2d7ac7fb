use num_rational::Ratio;

use super::ReductionError;
use crate::structures::names::encode;
use crate::structures::Graph;

/// `m = ⌈l / k⌉` copies of `g`, with every pair of vertices in different
/// copies joined. Vertex `v` of copy `c` has index `c·|g| + v`.
pub fn clique_amplify(g: &Graph, k: usize, l: usize) -> Result<(Graph, usize), ReductionError> {
    if k == 0 || l == 0 {
        return Err(ReductionError::InvalidDimension(format!(
            "need k, l >= 1, got k={k}, l={l}"
        )));
    }
    let m = l.div_ceil(k);
    let n = g.len();
    let mut h = Graph::with_vertices(
        (0..m).flat_map(|c| g.vertices().iter().map(move |v| encode(&[c.to_string().as_str(), v]))),
    );
    for c in 0..m {
        for (a, b) in g.edges() {
            h.add_edge(c * n + a, c * n + b);
        }
        for d in c + 1..m {
            for a in 0..n {
                for b in 0..n {
                    h.add_edge(c * n + a, d * n + b);
                }
            }
        }
    }
    Ok((h, m))
}

/// `g ≥ (l/k + 1)·f`, in exact arithmetic.
pub fn gap_condition(k: usize, l: usize, f: usize, g: usize) -> bool {
    let k = Ratio::from_integer(k as u64);
    let l = Ratio::from_integer(l as u64);
    Ratio::from_integer(g as u64) >= (l / k + 1) * Ratio::from_integer(f as u64)
}

/// All `(f, g)` with `1 ≤ f < k`, `1 ≤ g < l` meeting [`gap_condition`].
pub fn gap_pairs(k: usize, l: usize) -> Vec<(usize, usize)> {
    if k == 0 {
        return Vec::new();
    }
    (1..k)
        .flat_map(|f| (1..l).map(move |g| (f, g)))
        .filter(|&(f, g)| gap_condition(k, l, f, g))
        .collect()
}

/// The same clique taken in each of the `m` copies.
pub fn copy_clique(clique: &[usize], n: usize, m: usize) -> Vec<usize> {
    (0..m).flat_map(|c| clique.iter().map(move |&v| c * n + v)).collect()
}

/// The largest intersection of a clique of the amplified graph with a single
/// copy, as vertices of the original graph.
pub fn largest_copy_clique(clique: &[usize], n: usize, m: usize) -> Vec<usize> {
    let mut per_copy = vec![Vec::new(); m];
    for &x in clique {
        per_copy[x / n].push(x % n);
    }
    per_copy
        .into_iter()
        .enumerate()
        .max_by_key(|(c, s)| (s.len(), std::cmp::Reverse(*c)))
        .map(|(_, s)| s)
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{find_clique, has_k_clique};
    use crate::structures::clique_graph;

    #[test]
    fn two_triangles_make_k6() {
        let (h, m) = clique_amplify(&clique_graph(3).unwrap(), 3, 5).unwrap();
        assert_eq!(m, 2);
        assert_eq!(h.len(), 6);
        assert_eq!(h.edge_count(), 15);
    }

    #[test]
    fn equal_parameters_copy_once() {
        let g = Graph::from_index_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let (h, m) = clique_amplify(&g, 3, 3).unwrap();
        assert_eq!(m, 1);
        assert_eq!(h.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn clique_in_every_copy() {
        let g = Graph::from_index_edges(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let (h, m) = clique_amplify(&g, 3, 7).unwrap();
        let c = find_clique(&g, 3).unwrap();
        let big = copy_clique(&c, g.len(), m);
        assert_eq!(big.len(), 9);
        assert!(has_k_clique(&h, 9));
        let back = largest_copy_clique(&big, g.len(), m);
        assert_eq!(back.len(), 3);
    }

    #[test]
    fn gap_arithmetic() {
        assert!(gap_condition(3, 5, 1, 3));
        assert!(!gap_condition(3, 5, 1, 2));
        assert_eq!(gap_pairs(3, 5), vec![(1, 3), (1, 4)]);
        assert_eq!(gap_pairs(2, 5), vec![(1, 4)]);
        assert_eq!(gap_pairs(3, 3), vec![(1, 2)]);
    }
}
