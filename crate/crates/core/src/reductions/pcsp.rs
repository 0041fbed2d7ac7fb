use std::collections::HashMap;

use super::{preimage_tuples, HardnessTemplate, ReductionError, TemplatePair};
use crate::minors::CellMap;
use crate::structures::names::encode;
use crate::structures::{Graph, Homomorphism, Structure};

/// An element `(b, (u_i, v_i)_i)` of the promise gadget.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PcspElement {
    pub b: usize,
    pub pairs: Vec<(usize, usize)>,
}

/// The gadget `X` for a template pair, cell maps `rhos` on `B`, and a graph.
#[derive(Debug, Clone)]
pub struct PcspInstance {
    pub x: Structure,
    /// `X → B`, reading off the first component.
    pub projection: Homomorphism,
    pub elements: Vec<PcspElement>,
    pub k: usize,
    rhos: Vec<CellMap>,
    index: HashMap<PcspElement, usize>,
    b_len: usize,
    graph_len: usize,
}

/// Vertex pairs allowed at one coordinate: equal when the cell lies on the
/// diagonal, adjacent otherwise.
fn coordinate_options(g: &Graph, (left, right): (usize, usize)) -> Vec<(usize, usize)> {
    if left == right {
        (0..g.len()).map(|u| (u, u)).collect()
    } else {
        (0..g.len())
            .flat_map(|u| g.neighbors(u).iter().map(move |&v| (u, v)))
            .collect()
    }
}

/// Builds the gadget `X`. Every `R`-tuple of `B` contributes the tuples of
/// its preimage whose entries agree on `u_i` wherever the left cells agree
/// and on `v_i` wherever the right cells agree.
pub fn pcsp_construct(pair: &TemplatePair, rhos: &[CellMap], g: &Graph) -> Result<PcspInstance, ReductionError> {
    let b = &pair.b;
    let Some(k) = rhos.first().map(CellMap::k) else {
        return Err(ReductionError::InvalidTemplate(
            "at least one cell map is required".into(),
        ));
    };
    for rho in rhos {
        if rho.k() != k || rho.len() != b.len() || rho.cells().iter().any(|&(i, j)| i >= k || j >= k) {
            return Err(ReductionError::InvalidTemplate(format!(
                "cell maps must send all {} elements of b into [{k}]x[{k}]",
                b.len()
            )));
        }
    }
    let mut elements = Vec::new();
    let mut names = Vec::new();
    let mut fibers: Vec<Vec<usize>> = vec![Vec::new(); b.len()];
    for (y, fiber) in fibers.iter_mut().enumerate() {
        let options: Vec<Vec<(usize, usize)>> = rhos.iter().map(|rho| coordinate_options(g, rho.cell(y))).collect();
        if options.iter().any(Vec::is_empty) {
            continue;
        }
        let mut choice = vec![0; rhos.len()];
        'product: loop {
            let pairs: Vec<(usize, usize)> = choice.iter().zip(&options).map(|(&c, o)| o[c]).collect();
            let mut parts = vec![b.element(y).to_string()];
            for &(u, v) in &pairs {
                parts.push(g.vertex(u).to_string());
                parts.push(g.vertex(v).to_string());
            }
            fiber.push(elements.len());
            names.push(encode(&parts));
            elements.push(PcspElement { b: y, pairs });
            for pos in (0..rhos.len()).rev() {
                choice[pos] += 1;
                if choice[pos] < options[pos].len() {
                    continue 'product;
                }
                choice[pos] = 0;
            }
            break;
        }
    }
    let mut x = Structure::empty(b.signature().clone(), names);
    for (r, rel) in b.relations().iter().enumerate() {
        for t in rel.tuples() {
            let choices: Vec<&[usize]> = t.iter().map(|&y| fibers[y].as_slice()).collect();
            preimage_tuples(
                &choices,
                |s, t| {
                    let (s, t) = (&elements[s], &elements[t]);
                    rhos.iter().enumerate().all(|(i, rho)| {
                        let (cs, ct) = (rho.cell(s.b), rho.cell(t.b));
                        (cs.0 != ct.0 || s.pairs[i].0 == t.pairs[i].0) && (cs.1 != ct.1 || s.pairs[i].1 == t.pairs[i].1)
                    })
                },
                |tuple| {
                    x.add_tuple(r, tuple.to_vec()).expect("indices in range");
                },
            );
        }
    }
    let projection = Homomorphism::new(elements.iter().map(|e| e.b).collect());
    let index = elements.iter().enumerate().map(|(n, e)| (e.clone(), n)).collect();
    Ok(PcspInstance {
        x,
        projection,
        elements,
        k,
        rhos: rhos.to_vec(),
        index,
        b_len: b.len(),
        graph_len: g.len(),
    })
}

impl PcspInstance {
    /// Number of cell maps.
    pub fn arity(&self) -> usize {
        self.rhos.len()
    }

    /// `|B| · |G|^(2L)`, saturating.
    pub fn size_bound(&self) -> u128 {
        let exp = u32::try_from(2 * self.rhos.len()).unwrap_or(u32::MAX);
        (self.graph_len as u128)
            .checked_pow(exp)
            .and_then(|p| p.checked_mul(self.b_len as u128))
            .unwrap_or(u128::MAX)
    }

    /// The homomorphism `B → X` induced by a `k`-clique `clique[0..k]`:
    /// `b ↦ (b, (clique[left_i(b)], clique[right_i(b)])_i)`.
    pub fn clique_witness(&self, clique: &[usize]) -> Option<Homomorphism> {
        if clique.len() != self.k {
            return None;
        }
        let map = (0..self.b_len)
            .map(|b| {
                let pairs = self
                    .rhos
                    .iter()
                    .map(|rho| (clique[rho.left(b)], clique[rho.right(b)]))
                    .collect();
                self.index.get(&PcspElement { b, pairs }).copied()
            })
            .collect::<Option<Vec<usize>>>()?;
        Some(Homomorphism::new(map))
    }

    /// Reads a candidate clique off a homomorphism `alpha: A → X`: with the
    /// star witness `(C, h, l)` for `Π ∘ alpha`, vertex `i` is the `v_l`
    /// component of `alpha(h(c))` for any `c` whose right cell is `i`.
    /// Returns `None` if some column is not hit.
    pub fn decode_clique(
        &self,
        template: &HardnessTemplate,
        alpha: &Homomorphism,
    ) -> Result<Option<Vec<usize>>, ReductionError> {
        let g = alpha.then(&self.projection);
        let w = template.star_witness(&g)?;
        let composed = w.h.then(alpha);
        let rho = &self.rhos[w.l];
        let mut column = vec![None; self.k];
        for c in 0..w.c.len() {
            let el = &self.elements[composed.apply(c)];
            column[rho.right(el.b)].get_or_insert(el.pairs[w.l].1);
        }
        Ok(column.into_iter().collect())
    }
}
