use std::collections::HashMap;

use super::{preimage_tuples, PairIndexer, ReductionError};
use crate::minors::{is_onto, validate_minor_map, MinorMap};
use crate::structures::names::encode;
use crate::structures::{grid_graph, Graph, Homomorphism, Structure};

/// An element `(v, e, i, p, a)` of the clique gadget: `v` a vertex and `e`
/// an edge index of the input graph, `(i, p)` the grid cell whose branch set
/// holds the source element `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroheElement {
    pub v: usize,
    pub e: usize,
    pub i: usize,
    pub p: usize,
    pub a: usize,
}

/// The gadget `M` built from a source structure, a minor map from the
/// `k x K` grid onto it, and a graph.
#[derive(Debug, Clone)]
pub struct GroheInstance {
    pub m: Structure,
    /// `M → A`, reading off the last component.
    pub projection: Homomorphism,
    pub elements: Vec<GroheElement>,
    pub k: usize,
    pub pairs: PairIndexer,
    index: HashMap<GroheElement, usize>,
    graph: Graph,
    cells: Vec<(usize, usize)>,
}

/// Builds `M(A, μ, G)`.
///
/// `μ` must be a valid map from the `k x K` grid (row-major numbering,
/// `K = k(k-1)/2`) onto the Gaifman graph of `a`, and `a` must be
/// connected. Columns of the grid are read as pairs of rows through the
/// lexicographic [`PairIndexer`].
pub fn grohe_construct(a: &Structure, mu: &MinorMap, g: &Graph, k: usize) -> Result<GroheInstance, ReductionError> {
    let pairs = PairIndexer::new(k);
    let big_k = pairs.len();
    if k < 2 {
        return Err(ReductionError::BadGridDimensions(format!(
            "k must be at least 2, got {k}"
        )));
    }
    let grid = grid_graph(k, big_k).expect("positive dimensions");
    let source = mu.source();
    if source.len() != grid.len()
        || source.edge_count() != grid.edge_count()
        || grid.edges().any(|(x, y)| !source.has_edge(x, y))
    {
        return Err(ReductionError::BadGridDimensions(format!(
            "minor map source must be the {k}x{big_k} grid"
        )));
    }
    let gaifman = a.gaifman_graph();
    if mu.target() != &gaifman {
        return Err(ReductionError::TargetMismatch);
    }
    if !validate_minor_map(mu) {
        return Err(ReductionError::InvalidMinorMap);
    }
    if !is_onto(mu) {
        return Err(ReductionError::NotOnto);
    }
    if !a.is_connected() {
        return Err(ReductionError::NotConnected);
    }
    let mut cells = vec![(0, 0); a.len()];
    for (cell, set) in mu.branch_sets().iter().enumerate() {
        for &x in set {
            cells[x] = (cell / big_k, cell % big_k);
        }
    }

    let edge_names: Vec<String> = g.edges().map(|(x, y)| encode(&[g.vertex(x), g.vertex(y)])).collect();
    let mut elements = Vec::new();
    let mut names = Vec::new();
    let mut fibers: Vec<Vec<usize>> = vec![Vec::new(); a.len()];
    for (x, &(i, p)) in cells.iter().enumerate() {
        for v in 0..g.len() {
            for (e, (e0, e1)) in g.edges().enumerate() {
                if (v == e0 || v == e1) != pairs.contains(p, i) {
                    continue;
                }
                fibers[x].push(elements.len());
                elements.push(GroheElement { v, e, i, p, a: x });
                names.push(encode(&[
                    g.vertex(v),
                    edge_names[e].as_str(),
                    &i.to_string(),
                    &p.to_string(),
                    a.element(x),
                ]));
            }
        }
    }
    let mut m = Structure::empty(a.signature().clone(), names);
    for (r, rel) in a.relations().iter().enumerate() {
        for t in rel.tuples() {
            let choices: Vec<&[usize]> = t.iter().map(|&x| fibers[x].as_slice()).collect();
            preimage_tuples(
                &choices,
                |x, y| {
                    let (s, t) = (&elements[x], &elements[y]);
                    (s.i != t.i || s.v == t.v) && (s.p != t.p || s.e == t.e)
                },
                |tuple| {
                    m.add_tuple(r, tuple.to_vec()).expect("indices in range");
                },
            );
        }
    }
    let projection = Homomorphism::new(elements.iter().map(|el| el.a).collect());
    let index = elements.iter().enumerate().map(|(n, &el)| (el, n)).collect();
    Ok(GroheInstance {
        m,
        projection,
        elements,
        k,
        pairs,
        index,
        graph: g.clone(),
        cells,
    })
}

impl GroheInstance {
    /// The homomorphism `A → M` induced by a `k`-clique `clique[0..k]` of the
    /// graph: `a ↦ (v_i, e_p, i, p, a)` with `v_i = clique[i]` and `e_p` the
    /// edge between the two clique vertices named by `p`.
    pub fn clique_witness(&self, clique: &[usize]) -> Option<Homomorphism> {
        if clique.len() != self.k {
            return None;
        }
        let map = self
            .cells
            .iter()
            .enumerate()
            .map(|(x, &(i, p))| {
                let (s, t) = self.pairs.pair(p);
                let e = edge_index(&self.graph, clique[s], clique[t])?;
                let el = GroheElement {
                    v: clique[i],
                    e,
                    i,
                    p,
                    a: x,
                };
                self.index.get(&el).copied()
            })
            .collect::<Option<Vec<usize>>>()?;
        Some(Homomorphism::new(map))
    }
}

fn edge_index(g: &Graph, x: usize, y: usize) -> Option<usize> {
    let key = (x.min(y), x.max(y));
    g.edges().position(|e| e == key)
}
