//! JSON structure documents and DIMACS edge files.
//!
//! Structure JSON:
//! `{"signature":[{"name":"E","arity":2}],"universe":["a","b"],"relations":{"E":[["a","b"]]}}`

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::{Graph, Signature, Structure, StructureError};

#[derive(Debug, Serialize, Deserialize)]
struct SymbolDoc {
    name: String,
    arity: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct StructureDoc {
    signature: Vec<SymbolDoc>,
    universe: Vec<String>,
    #[serde(default)]
    relations: IndexMap<String, Vec<Vec<String>>>,
}

pub fn structure_from_json(text: &str) -> Result<Structure, StructureError> {
    let doc: StructureDoc = serde_json::from_str(text).map_err(|e| StructureError::Parse(e.to_string()))?;
    structure_from_doc(doc)
}

pub fn structure_from_value(value: serde_json::Value) -> Result<Structure, StructureError> {
    let doc: StructureDoc = serde_json::from_value(value).map_err(|e| StructureError::Parse(e.to_string()))?;
    structure_from_doc(doc)
}

fn structure_from_doc(doc: StructureDoc) -> Result<Structure, StructureError> {
    let signature = Signature::new(doc.signature.into_iter().map(|s| (s.name, s.arity)))?;
    Structure::build(signature, doc.universe, doc.relations)
}

pub fn structure_to_value(s: &Structure) -> serde_json::Value {
    let doc = StructureDoc {
        signature: s
            .signature()
            .symbols()
            .iter()
            .map(|sym| SymbolDoc {
                name: sym.name.clone(),
                arity: sym.arity,
            })
            .collect(),
        universe: s.elements().iter().cloned().collect(),
        relations: s
            .signature()
            .symbols()
            .iter()
            .zip(s.relations())
            .map(|(sym, rel)| {
                let tuples = rel
                    .tuples()
                    .map(|t| t.iter().map(|&e| s.element(e).to_string()).collect())
                    .collect();
                (sym.name.clone(), tuples)
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("structure documents always serialize")
}

pub fn structure_to_json(s: &Structure) -> String {
    serde_json::to_string_pretty(&structure_to_value(s)).expect("serializable")
}

/// Parses `p edge n m` / `e u v` text. Vertices are named `1..=n`; loops are
/// rejected, repeated edges collapse.
pub fn graph_from_dimacs(text: &str) -> Result<Graph, StructureError> {
    let mut graph: Option<Graph> = None;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        let mut parts = line.split_ascii_whitespace();
        let err = |msg: &str| StructureError::Parse(format!("line {}: {msg}", lineno + 1));
        match parts.next() {
            None | Some("c") => continue,
            Some("p") => {
                if graph.is_some() {
                    return Err(err("duplicate problem line"));
                }
                let kind = parts.next().ok_or_else(|| err("missing format"))?;
                if kind != "edge" && kind != "col" {
                    return Err(err("expected `p edge n m`"));
                }
                let n: usize = parts
                    .next()
                    .and_then(|x| x.parse().ok())
                    .ok_or_else(|| err("bad vertex count"))?;
                graph = Some(Graph::with_vertices((1..=n).map(|i| i.to_string())));
            }
            Some("e") => {
                let g = graph.as_mut().ok_or_else(|| err("edge before problem line"))?;
                let mut endpoint = || -> Result<usize, StructureError> {
                    let v: usize = parts
                        .next()
                        .and_then(|x| x.parse().ok())
                        .ok_or_else(|| err("bad edge"))?;
                    if v == 0 || v > g.len() {
                        return Err(err(&format!("vertex {v} out of range")));
                    }
                    Ok(v - 1)
                };
                let a = endpoint()?;
                let b = endpoint()?;
                g.try_add_edge(a, b)?;
            }
            Some(other) => {
                if !other.starts_with('c') {
                    return Err(err(&format!("unexpected line type `{other}`")));
                }
            }
        }
    }
    graph.ok_or_else(|| StructureError::Parse("missing `p edge` line".into()))
}

/// Writes the graph in DIMACS edge format, numbering vertices by position.
pub fn graph_to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.len(), g.edge_count());
    for (a, b) in g.edges() {
        out.push_str(&format!("e {} {}\n", a + 1, b + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{grid_graph, typed_grid};

    #[test]
    fn json_round_trip() {
        let s = typed_grid(2, 3).unwrap();
        let text = structure_to_json(&s);
        assert_eq!(structure_from_json(&text).unwrap(), s);
    }

    #[test]
    fn json_errors() {
        let bad = r#"{"signature":[{"name":"E","arity":2}],"universe":["a"],"relations":{"E":[["a","b"]]}}"#;
        assert_eq!(
            structure_from_json(bad),
            Err(StructureError::UnknownElement("b".into()))
        );
        assert!(matches!(structure_from_json("{"), Err(StructureError::Parse(_))));
    }

    #[test]
    fn dimacs() {
        let g = graph_from_dimacs("c hi\np edge 3 3\ne 1 2\ne 2 1\ne 2 3\n").unwrap();
        assert_eq!((g.len(), g.edge_count()), (3, 2));
        assert!(matches!(
            graph_from_dimacs("p edge 2 1\ne 1 1\n"),
            Err(StructureError::SelfLoop(_))
        ));
        assert!(graph_from_dimacs("e 1 2\n").is_err());
        assert!(graph_from_dimacs("p edge 2 1\ne 1 3\n").is_err());
        let grid = grid_graph(3, 3).unwrap();
        let back = graph_from_dimacs(&graph_to_dimacs(&grid)).unwrap();
        assert_eq!(back.edge_count(), 12);
    }
}
