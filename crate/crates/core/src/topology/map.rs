use crate::pointset::PointSet;

use super::FiniteSpace;

/// A point assignment between two finite spaces.
///
/// Equality is pointwise equality of the assignment. Continuity is a property
/// checked against a pair of spaces, not an invariant of the value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContinuousMap {
    images: Vec<usize>,
    codomain_len: usize,
}

impl ContinuousMap {
    pub fn new(images: Vec<usize>, codomain_len: usize) -> Self {
        assert!(images.iter().all(|&y| y < codomain_len), "image out of range");
        ContinuousMap {
            images,
            codomain_len,
        }
    }

    pub fn identity(n: usize) -> Self {
        ContinuousMap::new((0..n).collect(), n)
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn domain_len(&self) -> usize {
        self.images.len()
    }

    pub fn codomain_len(&self) -> usize {
        self.codomain_len
    }

    pub fn preimage(&self, set: PointSet) -> PointSet {
        self.images
            .iter()
            .enumerate()
            .filter(|(_, &y)| set.contains(y))
            .map(|(x, _)| x)
            .collect()
    }

    pub fn image_of(&self, set: PointSet) -> PointSet {
        set.iter().map(|x| self.images[x]).collect()
    }

    fn fits(&self, source: &FiniteSpace, target: &FiniteSpace) -> bool {
        self.domain_len() == source.len() && self.codomain_len == target.len()
    }

    /// An open of `target` whose preimage is not open in `source`.
    pub fn continuity_failure(&self, source: &FiniteSpace, target: &FiniteSpace) -> Option<PointSet> {
        assert!(self.fits(source, target), "map does not fit the spaces");
        target
            .opens()
            .iter()
            .copied()
            .find(|&o| !source.is_open(self.preimage(o)))
    }

    pub fn is_continuous(&self, source: &FiniteSpace, target: &FiniteSpace) -> bool {
        self.continuity_failure(source, target).is_none()
    }

    pub fn is_bijective(&self) -> bool {
        if self.domain_len() != self.codomain_len {
            return false;
        }
        let hit: PointSet = self.images.iter().copied().collect();
        hit.len() == self.codomain_len
    }

    /// Bijective, continuous, and preimage is a bijection between the open families.
    pub fn is_homeomorphism(&self, source: &FiniteSpace, target: &FiniteSpace) -> bool {
        if !self.fits(source, target) || !self.is_bijective() {
            return false;
        }
        if source.opens().len() != target.opens().len() {
            return false;
        }
        let mut pulled: Vec<PointSet> = target.opens().iter().map(|&o| self.preimage(o)).collect();
        pulled.sort_by_key(|s| s.sort_key());
        pulled.dedup();
        pulled == source.opens()
    }

    /// `then . self`.
    pub fn then(&self, then: &ContinuousMap) -> ContinuousMap {
        assert_eq!(self.codomain_len, then.domain_len());
        ContinuousMap::new(
            self.images.iter().map(|&y| then.images[y]).collect(),
            then.codomain_len,
        )
    }
}
