use super::{is_onto, validate_minor_map, MinorError, MinorMap};
use crate::structures::{Homomorphism, Structure};

/// A map from element indices to cells of `[k] x [k]` (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellMap {
    k: usize,
    cells: Vec<(usize, usize)>,
}

impl CellMap {
    pub fn new(k: usize, cells: Vec<(usize, usize)>) -> Self {
        CellMap { k, cells }
    }

    /// Builds the map cell by cell from `f`.
    pub fn from_fn<F: FnMut(usize) -> (usize, usize)>(k: usize, n: usize, f: F) -> Self {
        CellMap::new(k, (0..n).map(f).collect())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn cell(&self, x: usize) -> (usize, usize) {
        self.cells[x]
    }

    pub fn left(&self, x: usize) -> usize {
        self.cells[x].0
    }

    pub fn right(&self, x: usize) -> usize {
        self.cells[x].1
    }

    /// `self ∘ h`: the cell of `h(c)` for every element `c` of the source of
    /// `h`.
    pub fn after(&self, h: &Homomorphism) -> CellMap {
        CellMap::new(self.k, h.map().iter().map(|&x| self.cells[x]).collect())
    }
}

/// Surjective onto `[k] x [k]`, and for every `i` both the left and the right
/// preimage of `i` are connected in the Gaifman graph of `c`.
pub fn validate_gridlike(c: &Structure, rho: &CellMap) -> bool {
    let k = rho.k;
    if rho.cells.len() != c.len() || k == 0 {
        return false;
    }
    let mut hit = vec![false; k * k];
    for &(i, j) in &rho.cells {
        if i >= k || j >= k {
            return false;
        }
        hit[i * k + j] = true;
    }
    if hit.contains(&false) {
        return false;
    }
    let gaifman = c.gaifman_graph();
    (0..k).all(|i| {
        let rows: Vec<usize> = (0..c.len()).filter(|&x| rho.left(x) == i).collect();
        let cols: Vec<usize> = (0..c.len()).filter(|&x| rho.right(x) == i).collect();
        gaifman.is_connected_subset(&rows) && gaifman.is_connected_subset(&cols)
    })
}

/// The grid-like mapping sending each element of `c` to the grid cell whose
/// branch set contains it. `m` must be a valid onto minor map from the
/// `k x k` grid (row-major numbering) to the Gaifman graph of `c`.
pub fn minor_map_to_gridlike(m: &MinorMap, c: &Structure) -> Result<CellMap, MinorError> {
    let n = m.source().len();
    let k = (0..=n).find(|k| k * k >= n).unwrap_or(0);
    if k == 0 || k * k != n {
        return Err(MinorError::NotAGridSource);
    }
    let grid = crate::structures::grid_graph(k, k).expect("k is positive");
    let same_grid =
        grid.edge_count() == m.source().edge_count() && grid.edges().all(|(a, b)| m.source().has_edge(a, b));
    if !same_grid {
        return Err(MinorError::NotAGridSource);
    }
    let target = m.target();
    let gaifman = c.gaifman_graph();
    let same_target = target.len() == c.len()
        && (0..c.len()).all(|x| target.vertex(x) == c.element(x))
        && target.edge_count() == gaifman.edge_count()
        && gaifman.edges().all(|(a, b)| target.has_edge(a, b));
    if !same_target {
        return Err(MinorError::TargetMismatch);
    }
    if !validate_minor_map(m) {
        return Err(MinorError::InvalidMinorMap);
    }
    if !is_onto(m) {
        return Err(MinorError::NotOnto);
    }
    let mut cells = vec![(0, 0); c.len()];
    for (v, set) in m.branch_sets().iter().enumerate() {
        for &x in set {
            cells[x] = (v / k, v % k);
        }
    }
    Ok(CellMap::new(k, cells))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::typed_grid;

    #[test]
    fn coordinate_map_on_typed_grid() {
        let c = typed_grid(3, 3).unwrap();
        let m = MinorMap::identity(&c.gaifman_graph());
        let rho = minor_map_to_gridlike(&m, &c).unwrap();
        assert_eq!(rho, CellMap::from_fn(3, 9, |x| (x / 3, x % 3)));
        assert!(validate_gridlike(&c, &rho));
    }

    #[test]
    fn rejects_non_surjective_and_disconnected() {
        let c = typed_grid(2, 2).unwrap();
        assert!(!validate_gridlike(&c, &CellMap::new(2, vec![(0, 0); 4])));
        // rows swapped diagonally: row 0 = {(0,0),(1,1)} is not connected
        let twisted = CellMap::new(2, vec![(0, 0), (1, 1), (1, 0), (0, 1)]);
        assert!(!validate_gridlike(&c, &twisted));
    }

    #[test]
    fn errors() {
        let c = typed_grid(2, 2).unwrap();
        let g = c.gaifman_graph();
        let partial = MinorMap::new(crate::structures::grid_graph(1, 1).unwrap(), g.clone(), vec![vec![0]]);
        assert_eq!(minor_map_to_gridlike(&partial, &c), Err(MinorError::NotOnto));
        let path = crate::structures::grid_graph(1, 4).unwrap();
        let m = MinorMap::new(path, g, vec![vec![0], vec![1], vec![3], vec![2]]);
        assert_eq!(minor_map_to_gridlike(&m, &c), Err(MinorError::NotAGridSource));
    }
}
