use indexmap::IndexMap;

use super::{Structure, StructureError};

/// A total map between universes, stored as target indices per source index.
///
/// Whether it is a homomorphism depends on the pair of structures it is
/// checked against; see [`is_homomorphism`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Homomorphism {
    map: Vec<usize>,
}

impl Homomorphism {
    pub fn new(map: Vec<usize>) -> Self {
        Homomorphism { map }
    }

    pub fn identity(n: usize) -> Self {
        Homomorphism { map: (0..n).collect() }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// `next ∘ self`: apply `self` first.
    pub fn then(&self, next: &Homomorphism) -> Homomorphism {
        Homomorphism {
            map: self.map.iter().map(|&b| next.map[b]).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.map.iter().all(|b| seen.insert(*b))
    }

    /// Sorted distinct image indices.
    pub fn image(&self) -> Vec<usize> {
        let mut img = self.map.clone();
        img.sort_unstable();
        img.dedup();
        img
    }

    /// Checks validity against a source/target pair.
    pub fn is_valid(&self, source: &Structure, target: &Structure) -> bool {
        is_homomorphism(source, target, &self.map).unwrap_or(false)
    }

    pub fn to_named(&self, source: &Structure, target: &Structure) -> IndexMap<String, String> {
        self.map
            .iter()
            .enumerate()
            .map(|(a, &b)| (source.element(a).to_string(), target.element(b).to_string()))
            .collect()
    }
}

/// Whether `map` (target index per source index) preserves every tuple.
pub fn is_homomorphism(source: &Structure, target: &Structure, map: &[usize]) -> Result<bool, StructureError> {
    if !source.is_similar(target) {
        return Err(StructureError::DissimilarStructures);
    }
    if map.len() != source.len() {
        return Err(StructureError::PartialMap {
            expected: source.len(),
            found: map.len(),
        });
    }
    if let Some(&bad) = map.iter().find(|&&b| b >= target.len()) {
        return Err(StructureError::UnknownElement(format!("#{bad}")));
    }
    let mut image = Vec::new();
    for (r, rel) in source.relations().iter().enumerate() {
        let target_rel = target.relation(r);
        for t in rel.tuples() {
            image.clear();
            image.extend(t.iter().map(|&a| map[a]));
            if !target_rel.contains(&image) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Named variant of [`is_homomorphism`]; the map must be defined on every
/// source element.
pub fn is_homomorphism_named(
    source: &Structure,
    target: &Structure,
    map: &IndexMap<String, String>,
) -> Result<bool, StructureError> {
    let defined = source.elements().iter().filter(|e| map.contains_key(*e)).count();
    if defined != source.len() {
        return Err(StructureError::PartialMap {
            expected: source.len(),
            found: defined,
        });
    }
    let indices = source
        .elements()
        .iter()
        .map(|e| {
            let b = &map[e];
            target
                .index_of(b)
                .ok_or_else(|| StructureError::UnknownElement(b.clone()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    is_homomorphism(source, target, &indices)
}
