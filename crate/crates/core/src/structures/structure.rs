use indexmap::IndexSet;

use super::graph::Graph;
use super::names;
use super::{Signature, StructureError};

/// Interpretation of one relation symbol: a set of tuples over element
/// indices, kept in first-insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    arity: usize,
    tuples: IndexSet<Box<[usize]>>,
}

impl Relation {
    pub(crate) fn new(arity: usize) -> Self {
        Relation {
            arity,
            tuples: IndexSet::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuples(&self) -> impl ExactSizeIterator<Item = &[usize]> + '_ {
        self.tuples.iter().map(|t| &**t)
    }

    pub fn tuple(&self, index: usize) -> &[usize] {
        &self.tuples[index]
    }

    pub fn contains(&self, tuple: &[usize]) -> bool {
        self.tuples.contains(tuple)
    }

    /// Inserts a tuple; duplicates are ignored. Returns whether it was new.
    pub(crate) fn insert(&mut self, tuple: Box<[usize]>) -> bool {
        debug_assert_eq!(tuple.len(), self.arity);
        self.tuples.insert(tuple)
    }
}

/// A finite relational structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    signature: Signature,
    elements: IndexSet<String>,
    relations: Vec<Relation>,
}

impl Structure {
    /// Builds a structure from named elements and named tuples.
    ///
    /// Symbols missing from `relations` are interpreted as empty relations.
    /// Duplicate tuples are dropped silently.
    pub fn build<U, S, R, T, E>(signature: Signature, universe: U, relations: R) -> Result<Self, StructureError>
    where
        U: IntoIterator<Item = S>,
        S: Into<String>,
        R: IntoIterator<Item = (T, Vec<Vec<E>>)>,
        T: AsRef<str>,
        E: AsRef<str>,
    {
        let mut elements = IndexSet::new();
        for e in universe {
            let e = e.into();
            if elements.contains(&e) {
                return Err(StructureError::DuplicateElement(e));
            }
            elements.insert(e);
        }
        let mut out = Structure::empty(signature, elements);
        for (symbol, tuples) in relations {
            let symbol = symbol.as_ref();
            let r = out
                .signature
                .index_of(symbol)
                .ok_or_else(|| StructureError::UnknownSymbol(symbol.to_string()))?;
            for tuple in tuples {
                let indices = tuple
                    .iter()
                    .map(|e| {
                        out.index_of(e.as_ref())
                            .ok_or_else(|| StructureError::UnknownElement(e.as_ref().to_string()))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                out.add_tuple(r, indices)?;
            }
        }
        Ok(out)
    }

    /// A structure with the given universe and all relations empty.
    pub fn empty<I, S>(signature: Signature, universe: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let relations = signature.symbols().iter().map(|s| Relation::new(s.arity)).collect();
        Structure {
            signature,
            elements: universe.into_iter().map(Into::into).collect(),
            relations,
        }
    }

    /// Builds a structure from index tuples. Element names must be unique.
    pub fn from_indices(
        signature: Signature,
        universe: Vec<String>,
        relations: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self, StructureError> {
        let n = universe.len();
        let elements: IndexSet<String> = universe.into_iter().collect();
        if elements.len() != n {
            let mut seen = IndexSet::new();
            for e in &elements {
                if !seen.insert(e) {
                    return Err(StructureError::DuplicateElement(e.clone()));
                }
            }
        }
        if relations.len() != signature.len() {
            return Err(StructureError::Parse(format!(
                "expected {} relations, got {}",
                signature.len(),
                relations.len()
            )));
        }
        let mut out = Structure::empty(signature, elements);
        for (r, tuples) in relations.into_iter().enumerate() {
            for t in tuples {
                out.add_tuple(r, t)?;
            }
        }
        Ok(out)
    }

    /// Adds a tuple to relation `r`, validating arity and element bounds.
    pub fn add_tuple(&mut self, r: usize, tuple: Vec<usize>) -> Result<bool, StructureError> {
        let symbol = self
            .signature
            .symbols()
            .get(r)
            .ok_or_else(|| StructureError::UnknownSymbol(format!("#{r}")))?;
        if tuple.len() != symbol.arity {
            return Err(StructureError::ArityMismatch {
                symbol: symbol.name.clone(),
                expected: symbol.arity,
                found: tuple.len(),
            });
        }
        if let Some(&bad) = tuple.iter().find(|&&e| e >= self.elements.len()) {
            return Err(StructureError::UnknownElement(format!("#{bad}")));
        }
        Ok(self.relations[r].insert(tuple.into_boxed_slice()))
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    /// Number of universe elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &IndexSet<String> {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &str {
        &self.elements[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.get_index_of(name)
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn relation(&self, r: usize) -> &Relation {
        &self.relations[r]
    }

    pub fn relation_by_name(&self, name: &str) -> Option<&Relation> {
        self.signature.index_of(name).map(|r| &self.relations[r])
    }

    /// Total number of tuples over all relations.
    pub fn tuple_count(&self) -> usize {
        self.relations.iter().map(Relation::len).sum()
    }

    pub fn is_similar(&self, other: &Structure) -> bool {
        self.signature == other.signature
    }

    /// Encoding size `|σ| + |A| + Σ_R |R^A|·ar(R)`.
    pub fn size(&self) -> usize {
        self.signature.len() + self.len() + self.relations.iter().map(|r| r.len() * r.arity()).sum::<usize>()
    }

    /// The Gaifman (primal) graph: distinct elements are adjacent when they
    /// occur together in some tuple.
    pub fn gaifman_graph(&self) -> Graph {
        let mut g = Graph::with_vertices(self.elements.iter().cloned());
        for rel in &self.relations {
            for t in rel.tuples() {
                for (i, &a) in t.iter().enumerate() {
                    for &b in &t[i + 1..] {
                        if a != b {
                            g.add_edge(a, b);
                        }
                    }
                }
            }
        }
        g
    }

    /// Gaifman-connected components, each sorted by element index, ordered
    /// by their first element.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.gaifman_graph().connected_components()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Disjoint union; elements are tagged `0|a` and `1|b`.
    pub fn disjoint_union(&self, other: &Structure) -> Result<Structure, StructureError> {
        if !self.is_similar(other) {
            return Err(StructureError::DissimilarStructures);
        }
        let offset = self.len();
        let universe: Vec<String> = self
            .elements
            .iter()
            .map(|e| names::encode(&["0", e]))
            .chain(other.elements.iter().map(|e| names::encode(&["1", e])))
            .collect();
        let mut out = Structure::empty(self.signature.clone(), universe);
        for (r, rel) in out.relations.iter_mut().enumerate() {
            for t in self.relations[r].tuples() {
                rel.insert(t.into());
            }
            for t in other.relations[r].tuples() {
                rel.insert(t.iter().map(|&e| e + offset).collect());
            }
        }
        Ok(out)
    }

    /// The substructure induced on `subset` (element indices, kept in the
    /// given order). Every tuple with all entries inside the subset survives.
    pub fn induced_substructure(&self, subset: &[usize]) -> Result<Structure, StructureError> {
        let mut position = vec![usize::MAX; self.len()];
        for (i, &e) in subset.iter().enumerate() {
            if e >= self.len() {
                return Err(StructureError::UnknownElement(format!("#{e}")));
            }
            if position[e] != usize::MAX {
                return Err(StructureError::DuplicateElement(self.element(e).to_string()));
            }
            position[e] = i;
        }
        let mut out = Structure::empty(self.signature.clone(), subset.iter().map(|&e| self.elements[e].clone()));
        for (r, rel) in self.relations.iter().enumerate() {
            for t in rel.tuples() {
                if t.iter().all(|&e| position[e] != usize::MAX) {
                    out.relations[r].insert(t.iter().map(|&e| position[e]).collect());
                }
            }
        }
        Ok(out)
    }

    pub fn induced_by_names<S: AsRef<str>>(&self, subset: &[S]) -> Result<Structure, StructureError> {
        let indices = subset
            .iter()
            .map(|s| {
                self.index_of(s.as_ref())
                    .ok_or_else(|| StructureError::UnknownElement(s.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.induced_substructure(&indices)
    }

    /// The same structure with the universe listed in `order` (a permutation
    /// of element indices). Tuple order follows the original.
    pub fn reordered(&self, order: &[usize]) -> Result<Structure, StructureError> {
        if order.len() != self.len() {
            return Err(StructureError::PartialMap {
                expected: self.len(),
                found: order.len(),
            });
        }
        self.induced_substructure(order)
    }

    /// Renames every element through `rename`; names must stay distinct.
    pub fn renamed<F: FnMut(&str) -> String>(&self, mut rename: F) -> Result<Structure, StructureError> {
        let universe: Vec<String> = self.elements.iter().map(|e| rename(e)).collect();
        let relations = self
            .relations
            .iter()
            .map(|r| r.tuples().map(|t| t.to_vec()).collect())
            .collect();
        Structure::from_indices(self.signature.clone(), universe, relations)
    }

    /// Interprets a single-symbol symmetric loop-free binary structure as an
    /// undirected graph.
    pub fn to_graph(&self) -> Result<Graph, StructureError> {
        if self.signature.len() != 1 || self.signature.symbol(0).arity != 2 {
            return Err(StructureError::NotAGraph(
                "signature must be a single binary symbol".into(),
            ));
        }
        let rel = &self.relations[0];
        let mut g = Graph::with_vertices(self.elements.iter().cloned());
        for t in rel.tuples() {
            let (a, b) = (t[0], t[1]);
            if a == b {
                return Err(StructureError::SelfLoop(self.element(a).to_string()));
            }
            if !rel.contains(&[b, a]) {
                return Err(StructureError::NotAGraph(format!(
                    "edge ({}, {}) has no reverse",
                    self.element(a),
                    self.element(b)
                )));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{clique, grid, typed_grid};

    fn k2() -> Structure {
        Structure::build(
            Signature::graph(),
            ["a", "b"],
            [("E", vec![vec!["a", "b"], vec!["b", "a"]])],
        )
        .unwrap()
    }

    #[test]
    fn build_k2() {
        let s = k2();
        assert_eq!(s.len(), 2);
        assert_eq!(s.tuple_count(), 2);
        assert_eq!(s.size(), 7);
    }

    #[test]
    fn build_errors() {
        let err = Structure::build(Signature::graph(), ["a"], [("E", vec![vec!["a", "b"]])]);
        assert_eq!(err, Err(StructureError::UnknownElement("b".into())));
        let err = Structure::build(Signature::graph(), ["a", "a"], Vec::<(&str, Vec<Vec<&str>>)>::new());
        assert_eq!(err, Err(StructureError::DuplicateElement("a".into())));
        let err = Structure::build(Signature::graph(), ["a"], [("F", vec![vec!["a", "a"]])]);
        assert_eq!(err, Err(StructureError::UnknownSymbol("F".into())));
        let err = Structure::build(Signature::graph(), ["a"], [("E", vec![vec!["a"]])]);
        assert!(matches!(
            err,
            Err(StructureError::ArityMismatch {
                expected: 2,
                found: 1,
                ..
            })
        ));
    }

    #[test]
    fn duplicate_tuples_are_deduplicated() {
        let s = Structure::build(
            Signature::graph(),
            ["a", "b"],
            [("E", vec![vec!["a", "b"], vec!["a", "b"]])],
        )
        .unwrap();
        assert_eq!(s.tuple_count(), 1);
    }

    #[test]
    fn size_formula() {
        let empty = Structure::empty(Signature::graph(), ["x", "y", "z"]);
        assert_eq!(empty.size(), 4);
        // 12 grid edges, both orientations
        assert_eq!(grid(3, 3).unwrap().size(), 1 + 9 + 24 * 2);
    }

    #[test]
    fn gaifman_cases() {
        let sig = Signature::new([("T", 3)]).unwrap();
        let s = Structure::build(sig, ["a", "b", "c"], [("T", vec![vec!["a", "b", "c"]])]).unwrap();
        assert_eq!(s.gaifman_graph().edge_count(), 3);

        let loops = Structure::build(
            Signature::graph(),
            ["a", "b"],
            [("E", vec![vec!["a", "a"], vec!["b", "b"]])],
        )
        .unwrap();
        assert_eq!(loops.gaifman_graph().edge_count(), 0);

        let g = grid(3, 3).unwrap();
        assert_eq!(g.gaifman_graph(), g.to_graph().unwrap());
    }

    #[test]
    fn components() {
        assert_eq!(clique(3).unwrap().connected_components().len(), 1);
        let u = clique(3).unwrap().disjoint_union(&clique(2).unwrap()).unwrap();
        let sizes: Vec<usize> = u.connected_components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 2]);
        let e = Structure::empty(Signature::graph(), ["1", "2", "3", "4"]);
        assert_eq!(e.connected_components().len(), 4);
    }

    #[test]
    fn union_and_induced() {
        let u = k2().disjoint_union(&k2()).unwrap();
        assert_eq!((u.len(), u.tuple_count()), (4, 4));
        let with_empty = k2()
            .disjoint_union(&Structure::empty(Signature::graph(), Vec::<String>::new()))
            .unwrap();
        assert_eq!((with_empty.len(), with_empty.tuple_count()), (2, 2));
        assert!(k2().disjoint_union(&typed_grid(1, 2).unwrap()).is_err());

        let k4 = clique(4).unwrap();
        let k3 = k4.induced_substructure(&[0, 1, 2]).unwrap();
        assert_eq!(k3, clique(3).unwrap());
        let all: Vec<usize> = (0..4).collect();
        assert_eq!(k4.induced_substructure(&all).unwrap(), k4);
        assert!(k4.induced_substructure(&[7]).is_err());
    }
}
