use std::fmt;

use crate::adjunction::SupportDatum;
use crate::lattice::{Elem, FiniteIdealLattice};
use crate::pointset::PointSet;
use crate::report::Check;
use crate::topology::FiniteSpace;

use super::{
    closure_sublattice, semiring_ideal_lattice, ClosureSublattice, ClosureSystem, FiniteSemiring,
    InstanceError, SemiringIdealLattice,
};

/// Thick tensor ideals of a tensor semiring, modelled as a closure system on
/// its ideal lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThickLattice {
    pub semiring: FiniteSemiring,
    pub ideals: SemiringIdealLattice,
    pub thick: ClosureSublattice,
    /// `generator[x]` is the thick lattice element `<x>`.
    pub generator: Vec<Elem>,
}

impl ThickLattice {
    pub fn lattice(&self) -> &FiniteIdealLattice {
        &self.thick.lattice
    }

    /// `<x>`, the smallest thick ideal containing `x`.
    pub fn generated(&self, x: usize) -> Elem {
        self.generator[x]
    }

    /// The objects of the thick ideal `a`.
    pub fn objects(&self, a: Elem) -> PointSet {
        self.ideals.ideals[self.thick.carrier_element(a)]
    }

    /// Checks `<x + y> = <x> v <y>` for all objects. This holds when thick
    /// ideals are closed under summands; it can fail for other closure systems.
    pub fn summand_check(&self) -> Check<(usize, usize)> {
        let s = &self.semiring;
        let l = self.lattice();
        let pairs = (0..s.len()).flat_map(|x| (0..s.len()).map(move |y| (x, y)));
        Check::from_witness(pairs.into_iter().find(|&(x, y)| {
            self.generated(s.add(x, y)) != l.join2(self.generated(x), self.generated(y))
        }))
    }
}

/// Builds the thick lattice from the ideal lattice of `semiring` and the
/// members (ideal-lattice elements) chosen by `members`.
pub fn tensor_semiring_thick_lattice(
    semiring: &FiniteSemiring,
    members: impl FnOnce(&FiniteIdealLattice) -> Vec<Elem>,
) -> Result<ThickLattice, InstanceError> {
    let ideals = semiring_ideal_lattice(semiring)?;
    let chosen = members(&ideals.lattice);
    let thick = closure_sublattice(&ClosureSystem::new(&ideals.lattice, chosen))?;
    let generator = (0..semiring.len())
        .map(|x| thick.project(ideals.principal(semiring, x)))
        .collect();
    Ok(ThickLattice {
        semiring: semiring.clone(),
        ideals,
        thick,
        generator,
    })
}

/// First violated axiom of an object-level support assignment `tau`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TauFailure {
    NotClosed { x: usize },
    /// `tau(x)` differs from the union of `tau` over `<x>`.
    Generated { x: usize },
    Sum { x: usize, y: usize },
    Unit,
    Product { x: usize, y: usize },
    /// The zero object has non-empty support.
    Zero,
}

impl fmt::Display for TauFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TauFailure::NotClosed { x } => write!(f, "support of object #{x} is not closed"),
            TauFailure::Generated { x } => {
                write!(f, "support of object #{x} is not the union over the ideal it generates")
            }
            TauFailure::Sum { x, y } => write!(f, "support of #{x} + #{y} is not the union"),
            TauFailure::Unit => write!(f, "the unit object does not have full support"),
            TauFailure::Product { x, y } => write!(f, "support of #{x} * #{y} is not the intersection"),
            TauFailure::Zero => write!(f, "the zero object has non-empty support"),
        }
    }
}

pub fn tau_failure(thick: &ThickLattice, space: &FiniteSpace, tau: &[PointSet]) -> Option<TauFailure> {
    let s = &thick.semiring;
    let n = s.len();
    assert_eq!(tau.len(), n, "tau must assign every object");
    if let Some(x) = (0..n).find(|&x| !space.is_closed(tau[x])) {
        return Some(TauFailure::NotClosed { x });
    }
    if !tau[s.zero()].is_empty() {
        return Some(TauFailure::Zero);
    }
    let generated = |x: usize| {
        thick
            .objects(thick.generated(x))
            .iter()
            .fold(PointSet::EMPTY, |acc, y| acc.union(tau[y]))
    };
    if let Some(x) = (0..n).find(|&x| generated(x) != tau[x]) {
        return Some(TauFailure::Generated { x });
    }
    let pairs = || (0..n).flat_map(|x| (0..n).map(move |y| (x, y)));
    if let Some((x, y)) = pairs().find(|&(x, y)| tau[s.add(x, y)] != tau[x].union(tau[y])) {
        return Some(TauFailure::Sum { x, y });
    }
    if tau[s.one()] != space.full() {
        return Some(TauFailure::Unit);
    }
    pairs()
        .find(|&(x, y)| tau[s.mul(x, y)] != tau[x].intersection(tau[y]))
        .map(|(x, y)| TauFailure::Product { x, y })
}

/// `sigma(<x>) = tau(x)`, extended to every thick ideal `a` as the union of
/// `tau(x)` over the objects `x` of `a`; the result is validated as a support datum.
pub fn sigma_from_tau(
    thick: &ThickLattice,
    space: &FiniteSpace,
    tau: &[PointSet],
) -> Result<Vec<PointSet>, InstanceError> {
    if let Some(f) = tau_failure(thick, space, tau) {
        return Err(InstanceError::InvalidObjectSupport(f));
    }
    let s = &thick.semiring;
    for x in 0..s.len() {
        for y in 0..x {
            if thick.generated(x) == thick.generated(y) && tau[x] != tau[y] {
                return Err(InstanceError::IllDefined { x: y, y: x });
            }
        }
    }
    let l = thick.lattice();
    let sigma: Vec<PointSet> = l
        .elements()
        .map(|a| {
            thick
                .objects(a)
                .iter()
                .fold(PointSet::EMPTY, |acc, x| acc.union(tau[x]))
        })
        .collect();
    if let Some(f) = SupportDatum::new(l, space, sigma.clone()).failure() {
        return Err(InstanceError::InvalidDatum(f));
    }
    Ok(sigma)
}

/// `tau(x) = sigma(<x>)` for a support datum on the thick lattice.
pub fn tau_from_sigma(
    thick: &ThickLattice,
    space: &FiniteSpace,
    sigma: &[PointSet],
) -> Result<Vec<PointSet>, InstanceError> {
    if let Some(f) = SupportDatum::new(thick.lattice(), space, sigma.to_vec()).failure() {
        return Err(InstanceError::InvalidDatum(f));
    }
    let tau: Vec<PointSet> = thick.generator.iter().map(|&a| sigma[a]).collect();
    if let Some(f) = tau_failure(thick, space, &tau) {
        return Err(InstanceError::InvalidObjectSupport(f));
    }
    Ok(tau)
}
