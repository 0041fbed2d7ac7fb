use crate::structures::Graph;

/// Exhaustive search for a `k`-clique; returns its vertices in increasing
/// order. The empty set is a 0-clique.
pub fn find_clique(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let mut chosen = Vec::with_capacity(k);
    let candidates: Vec<usize> = (0..g.len()).collect();
    extend(g, k, &mut chosen, &candidates).then_some(chosen)
}

fn extend(g: &Graph, k: usize, chosen: &mut Vec<usize>, candidates: &[usize]) -> bool {
    if chosen.len() == k {
        return true;
    }
    if chosen.len() + candidates.len() < k {
        return false;
    }
    for (i, &v) in candidates.iter().enumerate() {
        let next: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&w| g.has_edge(v, w))
            .collect();
        chosen.push(v);
        if extend(g, k, chosen, &next) {
            return true;
        }
        chosen.pop();
    }
    false
}

pub fn has_k_clique(g: &Graph, k: usize) -> bool {
    find_clique(g, k).is_some()
}

/// Size of a largest clique.
pub fn clique_number(g: &Graph) -> usize {
    let mut k = 0;
    while has_k_clique(g, k + 1) {
        k += 1;
    }
    k
}
