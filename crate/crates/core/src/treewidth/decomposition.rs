use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::TreewidthError;
use crate::structures::Graph;

/// A tree on nodes `0..bags.len()` with one bag of graph-vertex indices per
/// node. Bags are stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    tree_edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct DecompositionDoc {
    tree_edges: Vec<(usize, usize)>,
    bags: IndexMap<String, Vec<String>>,
}

impl TreeDecomposition {
    pub fn new(bags: Vec<Vec<usize>>, tree_edges: Vec<(usize, usize)>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        TreeDecomposition { bags, tree_edges }
    }

    /// One node holding every vertex.
    pub fn single_bag(n: usize) -> Self {
        TreeDecomposition::new(vec![(0..n).collect()], vec![])
    }

    /// A path of bags.
    pub fn path(bags: Vec<Vec<usize>>) -> Self {
        let edges = (1..bags.len()).map(|i| (i - 1, i)).collect();
        TreeDecomposition::new(bags, edges)
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn bag(&self, t: usize) -> &[usize] {
        &self.bags[t]
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    /// Largest bag size minus one; −1 when every bag is empty.
    pub fn width(&self) -> i64 {
        self.bags.iter().map(|b| b.len() as i64).max().unwrap_or(0) - 1
    }

    /// Tree adjacency lists, after checking the node/edge lists form a tree.
    pub fn tree_adjacency(&self) -> Result<Vec<Vec<usize>>, TreewidthError> {
        let m = self.bags.len();
        if m == 0 {
            return Err(TreewidthError::MalformedTree("no nodes".into()));
        }
        let mut tree = Graph::with_order(m);
        for &(a, b) in &self.tree_edges {
            if a >= m || b >= m {
                return Err(TreewidthError::MalformedTree(format!(
                    "edge ({a}, {b}) references a missing node"
                )));
            }
            if a == b {
                return Err(TreewidthError::MalformedTree(format!("loop at node {a}")));
            }
            if !tree.add_edge(a, b) {
                return Err(TreewidthError::MalformedTree(format!("parallel edge ({a}, {b})")));
            }
        }
        if !tree.is_tree() {
            return Err(TreewidthError::MalformedTree(
                "tree edges must form a connected acyclic graph".into(),
            ));
        }
        Ok((0..m).map(|t| tree.neighbors(t).to_vec()).collect())
    }

    pub fn to_value(&self, g: &Graph) -> serde_json::Value {
        let doc = DecompositionDoc {
            tree_edges: self.tree_edges.clone(),
            bags: self
                .bags
                .iter()
                .enumerate()
                .map(|(t, bag)| (t.to_string(), bag.iter().map(|&v| g.vertex(v).to_string()).collect()))
                .collect(),
        };
        serde_json::to_value(doc).expect("serializable")
    }

    pub fn from_value(value: serde_json::Value, g: &Graph) -> Result<Self, TreewidthError> {
        let doc: DecompositionDoc = serde_json::from_value(value).map_err(|e| TreewidthError::Parse(e.to_string()))?;
        let mut bags = vec![None; doc.bags.len()];
        for (key, names) in doc.bags {
            let t: usize = key
                .parse()
                .ok()
                .filter(|&t| t < bags.len())
                .ok_or_else(|| TreewidthError::Parse(format!("bad node id `{key}`")))?;
            let bag = names
                .iter()
                .map(|n| {
                    g.index_of(n)
                        .ok_or_else(|| TreewidthError::Parse(format!("unknown vertex `{n}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            bags[t] = Some(bag);
        }
        let bags = bags
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| TreewidthError::Parse("node ids must be 0..n".into()))?;
        Ok(TreeDecomposition::new(bags, doc.tree_edges))
    }
}

pub fn width(d: &TreeDecomposition) -> i64 {
    d.width()
}

/// Checks that every vertex occurs in a nonempty connected set of bags and
/// every edge lies inside some bag. A malformed tree is an error; any other
/// violation gives `Ok(false)`.
pub fn validate_decomposition(g: &Graph, d: &TreeDecomposition) -> Result<bool, TreewidthError> {
    let adjacency = d.tree_adjacency()?;
    let n = g.len();
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (t, bag) in d.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return Ok(false);
            }
            holders[v].push(t);
        }
    }
    let mut inside = vec![false; d.node_count()];
    for nodes in &holders {
        let Some(&start) = nodes.first() else {
            return Ok(false);
        };
        for &t in nodes {
            inside[t] = true;
        }
        let mut seen = vec![false; d.node_count()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(t) = stack.pop() {
            for &u in &adjacency[t] {
                if inside[u] && !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
        for &t in nodes {
            inside[t] = false;
        }
        if reached != nodes.len() {
            return Ok(false);
        }
    }
    for (a, b) in g.edges() {
        let covered = holders[a].iter().any(|&t| d.bags[t].binary_search(&b).is_ok());
        if !covered {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds the decomposition induced by eliminating vertices in `order`: each
/// vertex gets the bag of itself plus its later neighbours in the fill graph,
/// hung below the bag of the earliest of those neighbours.
pub fn decomposition_from_ordering(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.len();
    assert_eq!(order.len(), n, "ordering must list every vertex once");
    if n == 0 {
        return TreeDecomposition::single_bag(0);
    }
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut adjacent: Vec<Vec<bool>> = vec![vec![false; n]; n];
    for (a, b) in g.edges() {
        adjacent[a][b] = true;
        adjacent[b][a] = true;
    }
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n - 1);
    let mut last_root: Option<usize> = None;
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = (0..n).filter(|&w| adjacent[v][w] && position[w] > i).collect();
        for (x, &a) in later.iter().enumerate() {
            for &b in &later[x + 1..] {
                adjacent[a][b] = true;
                adjacent[b][a] = true;
            }
        }
        match later.iter().map(|&w| position[w]).min() {
            Some(parent) => edges.push((i, parent)),
            None => {
                if let Some(root) = last_root {
                    edges.push((root, i));
                }
                last_root = Some(i);
            }
        }
        let mut bag = later;
        bag.push(v);
        bags.push(bag);
    }
    TreeDecomposition::new(bags, edges)
}

/// Path decomposition of the `k x l` grid (`k ≤ l`) of width `k`, over the
/// vertex numbering of [`crate::structures::grid_graph`]: windows of `k + 1`
/// consecutive vertices along lines of length `k`. For square grids the
/// lines are rows.
pub fn grid_decomposition(k: usize, l: usize) -> Result<TreeDecomposition, TreewidthError> {
    if k == 0 || k > l {
        return Err(TreewidthError::InvalidDimension(format!(
            "need 1 <= k <= l, got {k}x{l}"
        )));
    }
    let sequence: Vec<usize> = if k == l {
        (0..k * l).collect()
    } else {
        (0..l).flat_map(|j| (0..k).map(move |i| i * l + j)).collect()
    };
    let windows = (k * l).saturating_sub(k).max(1);
    let bags = (0..windows)
        .map(|t| sequence[t..(t + k + 1).min(sequence.len())].to_vec())
        .collect();
    Ok(TreeDecomposition::path(bags))
}
