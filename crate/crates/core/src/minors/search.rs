use super::{MinorError, MinorMap};
use crate::solver::{BudgetMeter, SearchBudget};
use crate::structures::{grid_graph, Graph};

/// Largest target graph accepted by the minor search.
pub const SEARCH_LIMIT: usize = 64;

fn bit(v: usize) -> u64 {
    1u64 << v
}

fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !0u64 << (v + 1)
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let v = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(v)
    })
}

/// Every connected subset of `allowed` with `size` vertices, each listed
/// once, grouped by smallest vertex.
fn connected_subsets(adj: &[u64], allowed: u64, size: usize) -> Vec<u64> {
    #[allow(clippy::too_many_arguments)]
    fn extend(
        adj: &[u64],
        allowed: u64,
        size: usize,
        root: usize,
        sub: u64,
        closed: u64,
        mut ext: u64,
        out: &mut Vec<u64>,
    ) {
        if sub.count_ones() as usize == size {
            out.push(sub);
            return;
        }
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let fresh = adj[w] & allowed & above(root) & !closed;
            extend(
                adj,
                allowed,
                size,
                root,
                sub | bit(w),
                closed | adj[w] | bit(w),
                ext | fresh,
                out,
            );
        }
    }
    let mut out = Vec::new();
    if size == 0 {
        return out;
    }
    for v in bits(allowed) {
        let ext = adj[v] & allowed & above(v);
        extend(adj, allowed, size, v, bit(v), adj[v] | bit(v), ext, &mut out);
    }
    out
}

struct Search<'a> {
    h: &'a Graph,
    adj: Vec<u64>,
    order: Vec<usize>,
    position: Vec<usize>,
    sets: Vec<u64>,
    meter: BudgetMeter,
}

impl Search<'_> {
    fn neighborhood(&self, mask: u64) -> u64 {
        bits(mask).fold(0, |acc, v| acc | self.adj[v])
    }

    fn place(&mut self, idx: usize, used: u64, all: u64) -> Result<bool, MinorError> {
        if idx == self.order.len() {
            return Ok(true);
        }
        let hv = self.order[idx];
        let free = all & !used;
        let remaining = self.order.len() - idx;
        let Some(max_size) = (free.count_ones() as usize + 1).checked_sub(remaining) else {
            return Ok(false);
        };
        let placed: Vec<usize> = self
            .h
            .neighbors(hv)
            .iter()
            .copied()
            .filter(|&w| self.position[w] < idx)
            .collect();
        for size in 1..=max_size {
            for set in connected_subsets(&self.adj, free, size) {
                if self.meter.tick() {
                    return Err(MinorError::BudgetExceeded);
                }
                let border = self.neighborhood(set);
                if placed.iter().any(|&w| border & self.sets[w] == 0) {
                    continue;
                }
                self.sets[hv] = set;
                let used_next = used | set;
                let free_next = all & !used_next;
                let open = self.order[..=idx].iter().all(|&x| {
                    let pending = self.h.neighbors(x).iter().any(|&y| self.position[y] > idx);
                    !pending || self.neighborhood(self.sets[x]) & free_next != 0
                });
                if open && self.place(idx + 1, used_next, all)? {
                    return Ok(true);
                }
                self.sets[hv] = 0;
            }
        }
        Ok(false)
    }
}

/// Breadth-first order over each component of `h`, lowest start first.
fn bfs_order(h: &Graph) -> Vec<usize> {
    let mut seen = vec![false; h.len()];
    let mut order = Vec::with_capacity(h.len());
    for start in 0..h.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let first = order.len();
        order.push(start);
        let mut i = first;
        while i < order.len() {
            for &w in h.neighbors(order[i]) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    order
}

/// Exhaustive branch-set search for a minor map `h → g`. Branch sets are
/// assigned in breadth-first order of `h`, smallest sets first.
pub fn find_minor_map(h: &Graph, g: &Graph, budget: SearchBudget) -> Result<Option<MinorMap>, MinorError> {
    if g.len() > SEARCH_LIMIT {
        return Err(MinorError::TooLarge(g.len()));
    }
    if h.len() > g.len() || h.edge_count() > g.edge_count() {
        return Ok(None);
    }
    let adj: Vec<u64> = (0..g.len())
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | bit(w)))
        .collect();
    let order = bfs_order(h);
    let mut position = vec![0; h.len()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut search = Search {
        h,
        adj,
        order,
        position,
        sets: vec![0; h.len()],
        meter: budget.start(),
    };
    let all = if g.len() == 64 { !0 } else { bit(g.len()) - 1 };
    if !search.place(0, 0, all)? {
        return Ok(None);
    }
    let sets = search.sets.iter().map(|&m| bits(m).collect()).collect();
    let m = MinorMap::new(h.clone(), g.clone(), sets);
    debug_assert!(super::validate_minor_map(&m));
    Ok(Some(m))
}

/// Searches for the `k x k` grid as a minor of `g`.
pub fn find_grid_minor(g: &Graph, k: usize, budget: SearchBudget) -> Result<Option<MinorMap>, MinorError> {
    let grid = grid_graph(k, k).map_err(|_| MinorError::InvalidDimension(k))?;
    find_minor_map(&grid, g, budget)
}
