use super::{decomposition_from_ordering, TreeDecomposition, TreewidthError};
use crate::structures::{Graph, Structure};

/// Largest graph accepted by [`exact_treewidth`].
pub const EXACT_LIMIT: usize = 18;

/// Exact treewidth by dynamic programming over vertex subsets.
///
/// `TW(S)` is the best width achievable when the vertices of `S` are
/// eliminated first; `TW(S) = min_{v ∈ S} max(TW(S∖v), |Q(S∖v, v)|)` where
/// `Q(S, v)` is the set of vertices outside `S ∪ {v}` reachable from `v`
/// through `S`. The optimal ordering is read back from the argmin table.
pub fn exact_treewidth(g: &Graph) -> Result<(i64, TreeDecomposition), TreewidthError> {
    let n = g.len();
    if n > EXACT_LIMIT {
        return Err(TreewidthError::TooLarge(n));
    }
    if n == 0 {
        return Ok((-1, TreeDecomposition::single_bag(0)));
    }
    let adjacency: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let full = (1u32 << n) - 1;
    let mut best = vec![i16::MAX; 1 << n];
    let mut choice = vec![u8::MAX; 1 << n];
    best[0] = -1;
    for set in 1..=full {
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prefix = set & !(1 << v);
            let q = reach_outside(&adjacency, prefix, v).count_ones() as i16;
            let cost = best[prefix as usize].max(q);
            if cost < best[set as usize] {
                best[set as usize] = cost;
                choice[set as usize] = v as u8;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut set = full;
    while set != 0 {
        let v = choice[set as usize] as usize;
        order.push(v);
        set &= !(1 << v);
    }
    order.reverse();
    let decomposition = decomposition_from_ordering(g, &order);
    let tw = best[full as usize] as i64;
    debug_assert_eq!(decomposition.width(), tw);
    Ok((tw, decomposition))
}

/// Vertices outside `prefix ∪ {v}` reachable from `v` via paths whose
/// interior lies in `prefix`.
fn reach_outside(adjacency: &[u32], prefix: u32, v: usize) -> u32 {
    let mut visited = (1u32 << v) | adjacency[v];
    let mut frontier = adjacency[v] & prefix;
    while frontier != 0 {
        let w = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adjacency[w] & !visited;
        visited |= fresh;
        frontier |= fresh & prefix;
    }
    visited & !prefix & !(1u32 << v)
}

/// Treewidth of a structure's Gaifman graph.
pub fn structure_treewidth(a: &Structure) -> Result<(i64, TreeDecomposition), TreewidthError> {
    exact_treewidth(&a.gaifman_graph())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{clique_graph, grid_graph};
    use crate::treewidth::validate_decomposition;

    #[test]
    fn small_families() {
        let path = Graph::from_index_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(exact_treewidth(&path).unwrap().0, 1);
        let star = Graph::from_index_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(exact_treewidth(&star).unwrap().0, 1);
        assert_eq!(exact_treewidth(&clique_graph(4).unwrap()).unwrap().0, 3);
        assert_eq!(exact_treewidth(&Graph::with_order(3)).unwrap().0, 0);
        let cycle = Graph::from_index_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(exact_treewidth(&cycle).unwrap().0, 2);
    }

    #[test]
    fn grid_three_by_three() {
        let g = grid_graph(3, 3).unwrap();
        let (tw, d) = exact_treewidth(&g).unwrap();
        assert_eq!(tw, 3);
        assert_eq!(validate_decomposition(&g, &d), Ok(true));
        assert_eq!(d.width(), 3);
    }

    #[test]
    fn too_large() {
        assert_eq!(
            exact_treewidth(&Graph::with_order(19)),
            Err(TreewidthError::TooLarge(19))
        );
    }
}
