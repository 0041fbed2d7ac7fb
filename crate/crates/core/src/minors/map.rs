use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::MinorError;
use crate::structures::Graph;

/// Assigns to every vertex of `source` a branch set of `target` vertices.
/// Branch sets are stored sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorMap {
    source: Graph,
    target: Graph,
    branch_sets: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct MinorMapDoc {
    assignment: IndexMap<String, Vec<String>>,
}

impl MinorMap {
    pub fn new(source: Graph, target: Graph, branch_sets: Vec<Vec<usize>>) -> Self {
        let branch_sets = branch_sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s
            })
            .collect();
        MinorMap {
            source,
            target,
            branch_sets,
        }
    }

    /// Every vertex of `g` mapped to itself.
    pub fn identity(g: &Graph) -> Self {
        MinorMap::new(g.clone(), g.clone(), (0..g.len()).map(|v| vec![v]).collect())
    }

    /// Builds a map from vertex names; unknown names are an error.
    pub fn from_names<S: AsRef<str>>(
        source: Graph,
        target: Graph,
        assignment: &[(S, Vec<S>)],
    ) -> Result<Self, MinorError> {
        let mut sets = vec![Vec::new(); source.len()];
        for (h, gs) in assignment {
            let hv = source
                .index_of(h.as_ref())
                .ok_or_else(|| MinorError::Parse(format!("unknown source vertex `{}`", h.as_ref())))?;
            sets[hv] = gs
                .iter()
                .map(|g| {
                    target
                        .index_of(g.as_ref())
                        .ok_or_else(|| MinorError::Parse(format!("unknown target vertex `{}`", g.as_ref())))
                })
                .collect::<Result<_, _>>()?;
        }
        Ok(MinorMap::new(source, target, sets))
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn branch_sets(&self) -> &[Vec<usize>] {
        &self.branch_sets
    }

    pub fn branch_set(&self, v: usize) -> &[usize] {
        &self.branch_sets[v]
    }

    pub fn to_value(&self) -> serde_json::Value {
        let doc = MinorMapDoc {
            assignment: self
                .branch_sets
                .iter()
                .enumerate()
                .map(|(h, set)| {
                    (
                        self.source.vertex(h).to_string(),
                        set.iter().map(|&g| self.target.vertex(g).to_string()).collect(),
                    )
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("serializable")
    }

    pub fn from_value(value: serde_json::Value, source: Graph, target: Graph) -> Result<Self, MinorError> {
        let doc: MinorMapDoc = serde_json::from_value(value).map_err(|e| MinorError::Parse(e.to_string()))?;
        let pairs: Vec<(String, Vec<String>)> = doc.assignment.into_iter().collect();
        MinorMap::from_names(source, target, &pairs)
    }
}

/// Branch sets are nonempty, connected and pairwise disjoint, and every
/// source edge is realised by a target edge between the two branch sets.
pub fn validate_minor_map(m: &MinorMap) -> bool {
    let g = &m.target;
    if m.branch_sets.len() != m.source.len() {
        return false;
    }
    let mut owner = vec![usize::MAX; g.len()];
    for (h, set) in m.branch_sets.iter().enumerate() {
        if !g.is_connected_subset(set) {
            return false;
        }
        for &v in set {
            if owner[v] != usize::MAX {
                return false;
            }
            owner[v] = h;
        }
    }
    m.source.edges().all(|(a, b)| {
        m.branch_sets[a]
            .iter()
            .any(|&x| g.neighbors(x).iter().any(|&y| owner[y] == b))
    })
}

/// The branch sets cover the whole target.
pub fn is_onto(m: &MinorMap) -> bool {
    let mut covered = vec![false; m.target.len()];
    for &v in m.branch_sets.iter().flatten() {
        if let Some(c) = covered.get_mut(v) {
            *c = true;
        }
    }
    covered.into_iter().all(|c| c)
}

/// Extends a valid map to an onto map by absorbing each uncovered target
/// vertex into the branch set of its lowest covered neighbour.
pub fn make_onto(m: &MinorMap) -> Result<MinorMap, MinorError> {
    if !validate_minor_map(m) {
        return Err(MinorError::InvalidMinorMap);
    }
    let g = &m.target;
    let mut owner = vec![usize::MAX; g.len()];
    for (h, set) in m.branch_sets.iter().enumerate() {
        for &v in set {
            owner[v] = h;
        }
    }
    let mut sets = m.branch_sets.clone();
    loop {
        let next = (0..g.len()).find_map(|v| {
            if owner[v] != usize::MAX {
                return None;
            }
            g.neighbors(v)
                .iter()
                .find(|&&w| owner[w] != usize::MAX)
                .map(|&w| (v, owner[w]))
        });
        match next {
            Some((v, h)) => {
                owner[v] = h;
                sets[h].push(v);
            }
            None => break,
        }
    }
    if owner.contains(&usize::MAX) {
        return Err(MinorError::NotConnected);
    }
    Ok(MinorMap::new(m.source.clone(), m.target.clone(), sets))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_index_edges(n, &edges).unwrap()
    }

    #[test]
    fn identity_is_valid_and_onto() {
        let g = path(4);
        let m = MinorMap::identity(&g);
        assert!(validate_minor_map(&m));
        assert!(is_onto(&m));
    }

    #[test]
    fn contraction_of_a_path() {
        let h = path(2);
        let g = path(5);
        let m = MinorMap::new(h.clone(), g.clone(), vec![vec![0, 1], vec![2]]);
        assert!(validate_minor_map(&m));
        assert!(!is_onto(&m));
        let onto = make_onto(&m).unwrap();
        assert!(validate_minor_map(&onto));
        assert!(is_onto(&onto));
        assert_eq!(onto.branch_set(1), &[2, 3, 4]);
        let gap = MinorMap::new(h.clone(), g.clone(), vec![vec![0], vec![2]]);
        assert!(!validate_minor_map(&gap));
        let split = MinorMap::new(h, g, vec![vec![0, 2], vec![1]]);
        assert!(!validate_minor_map(&split));
    }

    #[test]
    fn onto_needs_connected_target() {
        let h = path(1);
        let g = Graph::with_order(2);
        let m = MinorMap::new(h, g, vec![vec![0]]);
        assert_eq!(make_onto(&m), Err(MinorError::NotConnected));
    }

    #[test]
    fn json_round_trip() {
        let h = path(2);
        let g = path(3);
        let m = MinorMap::new(h.clone(), g.clone(), vec![vec![1, 0], vec![2]]);
        let back = MinorMap::from_value(m.to_value(), h, g).unwrap();
        assert_eq!(back, m);
    }
}
