use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, Signature, Structure, StructureError};

fn check_dims(k: usize, l: usize) -> Result<(), StructureError> {
    if k == 0 || l == 0 {
        return Err(StructureError::InvalidDimension(format!(
            "dimensions must be at least 1, got {k}x{l}"
        )));
    }
    Ok(())
}

pub(crate) fn cell_name(i: usize, j: usize) -> String {
    format!("{i},{j}")
}

/// The complete graph on `0..k` as a graph.
pub fn clique_graph(k: usize) -> Result<Graph, StructureError> {
    check_dims(k, 1)?;
    let mut g = Graph::with_order(k);
    for a in 0..k {
        for b in a + 1..k {
            g.add_edge(a, b);
        }
    }
    Ok(g)
}

/// The clique `K_k`: the disequality relation on `0..k`.
pub fn clique(k: usize) -> Result<Structure, StructureError> {
    Ok(clique_graph(k)?.to_structure())
}

/// The `k x l` grid graph on cells `i,j` (0-based), row-major.
pub fn grid_graph(k: usize, l: usize) -> Result<Graph, StructureError> {
    check_dims(k, l)?;
    let mut g = Graph::with_vertices((0..k).flat_map(|i| (0..l).map(move |j| cell_name(i, j))));
    for i in 0..k {
        for j in 0..l {
            let v = i * l + j;
            if j + 1 < l {
                g.add_edge(v, v + 1);
            }
            if i + 1 < k {
                g.add_edge(v, v + l);
            }
        }
    }
    Ok(g)
}

/// The `k x l` grid as a symmetric binary structure.
pub fn grid(k: usize, l: usize) -> Result<Structure, StructureError> {
    Ok(grid_graph(k, l)?.to_structure())
}

/// Directed grid with separate horizontal and vertical symbols:
/// `H = {((i,j),(i,j+1))}` and `V = {((i,j),(i+1,j))}`. Its Gaifman graph is
/// the plain `k x l` grid, and for every `k, l` it is a core.
pub fn typed_grid(k: usize, l: usize) -> Result<Structure, StructureError> {
    check_dims(k, l)?;
    let sig = Signature::new([("H", 2), ("V", 2)])?;
    let mut s = Structure::empty(sig, (0..k).flat_map(|i| (0..l).map(move |j| cell_name(i, j))));
    for i in 0..k {
        for j in 0..l {
            let v = i * l + j;
            if j + 1 < l {
                s.add_tuple(0, vec![v, v + 1])?;
            }
            if i + 1 < k {
                s.add_tuple(1, vec![v, v + l])?;
            }
        }
    }
    Ok(s)
}

/// Erdős–Rényi `G(n, p)` on vertices `0..n`, deterministic in `seed`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::with_order(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// Named built-in families: `clique:k`, `grid:k:l`, `typed_grid:k[:l]`,
/// `random:n:p:seed`.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Clique(usize),
    Grid(usize, usize),
    TypedGrid(usize, usize),
    Random { n: usize, p: f64, seed: u64 },
}

impl Family {
    pub fn structure(&self) -> Result<Structure, StructureError> {
        match *self {
            Family::Clique(k) => clique(k),
            Family::Grid(k, l) => grid(k, l),
            Family::TypedGrid(k, l) => typed_grid(k, l),
            Family::Random { n, p, seed } => Ok(random_graph(n, p, seed).to_structure()),
        }
    }
}

impl FromStr for Family {
    type Err = StructureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || StructureError::Parse(format!("invalid generator `{s}`"));
        let int = |x: &str| x.parse::<usize>().map_err(|_| bad());
        match parts.as_slice() {
            ["clique", k] => Ok(Family::Clique(int(k)?)),
            ["grid", k] => Ok(Family::Grid(int(k)?, int(k)?)),
            ["grid", k, l] => Ok(Family::Grid(int(k)?, int(l)?)),
            ["typed_grid" | "typed-grid", k] => Ok(Family::TypedGrid(int(k)?, int(k)?)),
            ["typed_grid" | "typed-grid", k, l] => Ok(Family::TypedGrid(int(k)?, int(l)?)),
            ["random", n, p, seed] => Ok(Family::Random {
                n: int(n)?,
                p: p.parse().map_err(|_| bad())?,
                seed: seed.parse().map_err(|_| bad())?,
            }),
            _ => Err(bad()),
        }
    }
}
