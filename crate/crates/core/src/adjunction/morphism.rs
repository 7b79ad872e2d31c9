use crate::lattice::{Elem, FiniteIdealLattice};
use crate::report::Check;
use crate::topology::{zariski_spectrum, ContinuousMap};

use super::AdjunctionError;

/// A map between ideal lattices, meant to preserve all joins, the top and products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeMorphism<'a> {
    pub source: &'a FiniteIdealLattice,
    pub target: &'a FiniteIdealLattice,
    map: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismReport {
    /// Witness `[]` when the empty join (bottom) is not preserved, `[a, b]` for a binary join.
    pub joins: Check<Vec<Elem>>,
    pub unit: Check<()>,
    pub products: Check<(Elem, Elem)>,
}

impl MorphismReport {
    pub fn is_valid(&self) -> bool {
        self.joins.holds() && self.unit.holds() && self.products.holds()
    }
}

impl<'a> LatticeMorphism<'a> {
    pub fn new(source: &'a FiniteIdealLattice, target: &'a FiniteIdealLattice, map: Vec<Elem>) -> Self {
        assert_eq!(map.len(), source.len(), "morphism must assign every element");
        assert!(map.iter().all(|&b| b < target.len()), "image out of range");
        LatticeMorphism { source, target, map }
    }

    pub fn identity(lattice: &'a FiniteIdealLattice) -> Self {
        LatticeMorphism::new(lattice, lattice, lattice.elements().collect())
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a]
    }
}

/// Checks join preservation (empty and binary joins, which at finite size
/// covers every subset), unit preservation and multiplicativity.
pub fn verify_morphism(phi: &LatticeMorphism<'_>) -> MorphismReport {
    let (l, m) = (phi.source, phi.target);
    let f = |a: Elem| phi.apply(a);
    let pairs = || l.elements().flat_map(|a| l.elements().map(move |b| (a, b)));
    let joins = if f(l.bottom()) != m.bottom() {
        Some(Vec::new())
    } else {
        pairs()
            .find(|&(a, b)| f(l.join2(a, b)) != m.join2(f(a), f(b)))
            .map(|(a, b)| vec![a, b])
    };
    let unit = (f(l.top()) != m.top()).then_some(());
    let products = pairs().find(|&(a, b)| f(l.mul(a, b)) != m.mul(f(a), f(b)));
    MorphismReport {
        joins: Check::from_witness(joins),
        unit: Check::from_witness(unit),
        products: Check::from_witness(products),
    }
}

pub(crate) fn require_morphism(phi: &LatticeMorphism<'_>) -> Result<(), AdjunctionError> {
    let report = verify_morphism(phi);
    if report.is_valid() {
        Ok(())
    } else {
        Err(AdjunctionError::InvalidMorphism(report))
    }
}

/// `Spec phi: Spec(target) -> Spec(source)`, `p -> sup{a : phi(a) <= p}`.
pub fn spec_of_morphism(phi: &LatticeMorphism<'_>) -> Result<ContinuousMap, AdjunctionError> {
    require_morphism(phi)?;
    let (l, m) = (phi.source, phi.target);
    let images = m
        .spec_set()
        .iter()
        .map(|&p| {
            let q = l.join(l.elements().filter(|&a| m.leq(phi.apply(a), p)));
            l.point_of(q).expect("the pullback of a prime along a morphism is prime")
        })
        .collect();
    let map = ContinuousMap::new(images, l.spec_set().len());
    debug_assert!(map.is_continuous(&zariski_spectrum(m), &zariski_spectrum(l)));
    Ok(map)
}
