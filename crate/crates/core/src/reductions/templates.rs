use super::ReductionError;
use crate::cores::core_of;
use crate::minors::{find_grid_minor, make_onto, minor_map_to_gridlike, validate_gridlike, CellMap, MinorMap};
use crate::solver::{enumerate_homs, SearchBudget};
use crate::structures::{typed_grid, Homomorphism, Structure};

/// Similar structures `a`, `b` with a homomorphism `a → b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemplatePair {
    pub a: Structure,
    pub b: Structure,
    pub witness: Homomorphism,
}

impl TemplatePair {
    pub fn new(a: Structure, b: Structure, witness: Homomorphism) -> Result<Self, ReductionError> {
        if !a.is_similar(&b) {
            return Err(ReductionError::DissimilarStructures);
        }
        if !witness.is_valid(&a, &b) {
            return Err(ReductionError::InvalidTemplate(
                "witness is not a homomorphism a → b".into(),
            ));
        }
        Ok(TemplatePair { a, b, witness })
    }
}

/// A structure `c` and `h: c → a` such that `rhos[l] ∘ g ∘ h` is grid-like
/// for the homomorphism `g: a → b` it was produced for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarWitness {
    pub c: Structure,
    pub h: Homomorphism,
    pub l: usize,
}

#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
enum WitnessFactory {
    Identity,
    Core {
        retraction: Homomorphism,
        inclusion: Homomorphism,
        core: Structure,
        component: Vec<usize>,
        component_structure: Structure,
    },
}

/// A template pair with cell maps `rhos` on `b` and a way to produce a
/// [`StarWitness`] for every homomorphism `a → b`.
#[derive(Debug, Clone)]
pub struct HardnessTemplate {
    pub pair: TemplatePair,
    pub rhos: Vec<CellMap>,
    pub k: usize,
    factory: WitnessFactory,
}

impl HardnessTemplate {
    pub fn star_witness(&self, g: &Homomorphism) -> Result<StarWitness, ReductionError> {
        match &self.factory {
            WitnessFactory::Identity => Ok(StarWitness {
                c: self.pair.a.clone(),
                h: Homomorphism::identity(self.pair.a.len()),
                l: 0,
            }),
            WitnessFactory::Core {
                retraction,
                inclusion,
                core,
                component,
                component_structure,
            } => {
                // φ = α ∘ g ∘ β on the core, γ a right inverse of φ
                let phi = inclusion.then(g).then(retraction);
                let gamma = enumerate_homs(core, core)?
                    .find(|gamma| (0..core.len()).all(|x| phi.apply(gamma.apply(x)) == x))
                    .ok_or(ReductionError::NoRightInverse)?;
                let h = Homomorphism::new(component.iter().map(|&c| inclusion.apply(gamma.apply(c))).collect());
                Ok(StarWitness {
                    c: component_structure.clone(),
                    h,
                    l: 0,
                })
            }
        }
    }

    /// Checks `w` against `g`: `h` is a homomorphism `c → a` and
    /// `rhos[l] ∘ g ∘ h` is grid-like.
    pub fn check_star(&self, g: &Homomorphism, w: &StarWitness) -> bool {
        w.l < self.rhos.len()
            && w.h.is_valid(&w.c, &self.pair.a)
            && g.is_valid(&self.pair.a, &self.pair.b)
            && validate_gridlike(&w.c, &self.rhos[w.l].after(g).after(&w.h))
    }
}

/// The pair (`k x k` typed grid, `f x f` typed grid) with the single cell
/// map `(i, j) ↦ (i mod k, j mod k)` on the larger grid.
pub fn make_grid_template(k: usize, f: usize) -> Result<HardnessTemplate, ReductionError> {
    if k == 0 || f < k {
        return Err(ReductionError::InvalidDimension(format!(
            "need 1 <= k <= f, got k={k}, f={f}"
        )));
    }
    let a = typed_grid(k, k)?;
    let b = typed_grid(f, f)?;
    let witness = Homomorphism::new((0..k * k).map(|x| (x / k) * f + x % k).collect());
    let rho = CellMap::from_fn(k, f * f, |x| ((x / f) % k, (x % f) % k));
    Ok(HardnessTemplate {
        pair: TemplatePair::new(a, b, witness)?,
        rhos: vec![rho],
        k,
        factory: WitnessFactory::Identity,
    })
}

/// The CSP pair `(a, a)`. The cell map is `ν ∘ α`, where `α` retracts `a`
/// onto its core and `ν` is the grid-like map induced by a `k x k` grid minor
/// of the core, made onto its component and sent to `(0, 0)` elsewhere.
pub fn make_core_template(a: &Structure, k: usize, budget: SearchBudget) -> Result<HardnessTemplate, ReductionError> {
    let core = core_of(a, budget)?;
    let gaifman = core.core.gaifman_graph();
    let mu = find_grid_minor(&gaifman, k, budget)?.ok_or(ReductionError::NoGridMinor(k))?;
    let anchor = mu.branch_set(0)[0];
    let component = gaifman
        .connected_components()
        .into_iter()
        .find(|c| c.binary_search(&anchor).is_ok())
        .expect("every vertex lies in a component");
    let component_structure = core.core.induced_substructure(&component)?;
    let mut position = vec![usize::MAX; core.core.len()];
    for (i, &x) in component.iter().enumerate() {
        position[x] = i;
    }
    let local = MinorMap::new(
        mu.source().clone(),
        component_structure.gaifman_graph(),
        mu.branch_sets()
            .iter()
            .map(|set| set.iter().map(|&x| position[x]).collect())
            .collect(),
    );
    let nu = minor_map_to_gridlike(&make_onto(&local)?, &component_structure)?;
    let rho = CellMap::from_fn(k, a.len(), |x| {
        let y = position[core.retraction.apply(x)];
        if y == usize::MAX {
            (0, 0)
        } else {
            nu.cell(y)
        }
    });
    Ok(HardnessTemplate {
        pair: TemplatePair::new(a.clone(), a.clone(), Homomorphism::identity(a.len()))?,
        rhos: vec![rho],
        k,
        factory: WitnessFactory::Core {
            retraction: core.retraction,
            inclusion: core.inclusion,
            core: core.core,
            component,
            component_structure,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{clique, Graph};

    #[test]
    fn grid_template_translations() {
        let t = make_grid_template(2, 3).unwrap();
        let homs: Vec<Homomorphism> = enumerate_homs(&t.pair.a, &t.pair.b).unwrap().collect();
        assert_eq!(homs.len(), 4);
        for g in &homs {
            assert!(g.is_injective());
            let w = t.star_witness(g).unwrap();
            assert!(t.check_star(g, &w));
        }
        assert!(make_grid_template(3, 2).is_err());
    }

    #[test]
    fn square_grid_template_has_only_identity() {
        let t = make_grid_template(3, 3).unwrap();
        let homs: Vec<Homomorphism> = enumerate_homs(&t.pair.a, &t.pair.b).unwrap().collect();
        assert_eq!(homs, vec![Homomorphism::identity(9)]);
        assert_eq!(t.rhos[0], CellMap::from_fn(3, 9, |x| (x / 3, x % 3)));
    }

    #[test]
    fn core_template_on_typed_grid() {
        let a = typed_grid(3, 3).unwrap();
        let t = make_core_template(&a, 3, SearchBudget::UNLIMITED).unwrap();
        assert!(validate_gridlike(&a, &t.rhos[0]));
        let id = Homomorphism::identity(9);
        let w = t.star_witness(&id).unwrap();
        assert_eq!(w.c, a);
        assert!(t.check_star(&id, &w));
    }

    #[test]
    fn core_template_with_extra_component() {
        let grid = typed_grid(2, 2).unwrap();
        let sig = grid.signature().clone();
        let mut edge = Structure::empty(sig, ["x", "y"]);
        edge.add_tuple(0, vec![0, 1]).unwrap();
        let a = grid.disjoint_union(&edge).unwrap();
        let t = make_core_template(&a, 2, SearchBudget::UNLIMITED).unwrap();
        for g in enumerate_homs(&a, &a).unwrap() {
            let w = t.star_witness(&g).unwrap();
            assert!(t.check_star(&g, &w));
        }
    }

    #[test]
    fn trees_have_no_grid_minor() {
        let path = Graph::from_index_edges(4, &[(0, 1), (1, 2), (2, 3)])
            .unwrap()
            .to_structure();
        assert_eq!(
            make_core_template(&path, 2, SearchBudget::UNLIMITED).unwrap_err(),
            ReductionError::NoGridMinor(2)
        );
        assert!(make_core_template(&clique(4).unwrap(), 2, SearchBudget::UNLIMITED).is_ok());
    }
}
