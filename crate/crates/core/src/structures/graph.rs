use indexmap::IndexSet;

use super::{Signature, Structure, StructureError};

/// A finite loop-free undirected graph with named vertices.
///
/// Edges are unordered pairs stored as `(min, max)` index pairs in insertion
/// order; adjacency lists are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    vertices: IndexSet<String>,
    edges: IndexSet<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn with_vertices<I, S>(vertices: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vertices: IndexSet<String> = vertices.into_iter().map(Into::into).collect();
        let adjacency = vec![Vec::new(); vertices.len()];
        Graph {
            vertices,
            edges: IndexSet::new(),
            adjacency,
        }
    }

    /// Vertices named `0..n`.
    pub fn with_order(n: usize) -> Self {
        Graph::with_vertices((0..n).map(|i| i.to_string()))
    }

    /// Builds a graph from named vertices and named edges. Duplicate edges
    /// collapse; loops are rejected.
    pub fn new<V, S, E, T>(vertices: V, edges: E) -> Result<Self, StructureError>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
    {
        let mut names = IndexSet::new();
        for v in vertices {
            let v = v.into();
            if !names.insert(v.clone()) {
                return Err(StructureError::DuplicateElement(v));
            }
        }
        let mut g = Graph::with_vertices(names);
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = g
                .index_of(a)
                .ok_or_else(|| StructureError::UnknownElement(a.to_string()))?;
            let ib = g
                .index_of(b)
                .ok_or_else(|| StructureError::UnknownElement(b.to_string()))?;
            g.try_add_edge(ia, ib)?;
        }
        Ok(g)
    }

    /// Vertices `0..n` with index edges.
    pub fn from_index_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, StructureError> {
        let mut g = Graph::with_order(n);
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(StructureError::UnknownElement(format!("#{}", a.max(b))));
            }
            g.try_add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn try_add_edge(&mut self, a: usize, b: usize) -> Result<bool, StructureError> {
        if a == b {
            return Err(StructureError::SelfLoop(self.vertices[a].clone()));
        }
        Ok(self.add_edge(a, b))
    }

    /// Adds `{a, b}`. Panics if `a == b`.
    pub fn add_edge(&mut self, a: usize, b: usize) -> bool {
        assert_ne!(a, b, "loops are not allowed in undirected graphs");
        let key = (a.min(b), a.max(b));
        if !self.edges.insert(key) {
            return false;
        }
        for (x, y) in [(a, b), (b, a)] {
            let adj = &mut self.adjacency[x];
            let pos = adj.partition_point(|&w| w < y);
            adj.insert(pos, y);
        }
        true
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &IndexSet<String> {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vertices.get_index_of(name)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                for &w in &self.adjacency[comp[i]] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Whether `set` is nonempty and induces a connected subgraph.
    pub fn is_connected_subset(&self, set: &[usize]) -> bool {
        let Some(&start) = set.first() else {
            return false;
        };
        let mut inside = vec![false; self.len()];
        for &v in set {
            if v >= self.len() {
                return false;
            }
            inside[v] = true;
        }
        let mut seen = vec![false; self.len()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        let distinct = inside.iter().filter(|&&b| b).count();
        reached == distinct
    }

    /// Connected and acyclic (the empty graph is not a tree).
    pub fn is_tree(&self) -> bool {
        !self.is_empty() && self.edge_count() + 1 == self.len() && self.is_connected()
    }

    /// The subgraph induced on `subset`, vertices in the given order.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Graph {
        let mut position = vec![usize::MAX; self.len()];
        for (i, &v) in subset.iter().enumerate() {
            position[v] = i;
        }
        let mut g = Graph::with_vertices(subset.iter().map(|&v| self.vertices[v].clone()));
        for &(a, b) in &self.edges {
            if position[a] != usize::MAX && position[b] != usize::MAX {
                g.add_edge(position[a], position[b]);
            }
        }
        g
    }

    /// Same graph with new vertex names; names must stay distinct.
    pub fn renamed<F: FnMut(&str) -> String>(&self, mut rename: F) -> Result<Graph, StructureError> {
        let names: Vec<String> = self.vertices.iter().map(|v| rename(v)).collect();
        let mut g = Graph::with_vertices(names.iter().cloned());
        if g.len() != names.len() {
            return Err(StructureError::DuplicateElement("renamed vertex".into()));
        }
        for &(a, b) in &self.edges {
            g.add_edge(a, b);
        }
        Ok(g)
    }

    /// The symmetric binary structure with both orientations of every edge.
    pub fn to_structure(&self) -> Structure {
        let mut s = Structure::empty(Signature::graph(), self.vertices.iter().cloned());
        for &(a, b) in &self.edges {
            s.add_tuple(0, vec![a, b]).expect("edge endpoints are vertices");
            s.add_tuple(0, vec![b, a]).expect("edge endpoints are vertices");
        }
        s
    }
}
