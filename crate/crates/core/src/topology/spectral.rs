use crate::pointset::PointSet;
use crate::report::Check;

use super::{FiniteSpace, TopologyError};

/// Spectrality of a finite space, condition by condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralReport {
    /// Witness: two distinct points with equal closures.
    pub t0: Check<(usize, usize)>,
    pub quasi_compact: Check<()>,
    /// Quasi-compact opens form a basis closed under finite intersections.
    pub compact_open_basis: Check<()>,
    /// Witness: a non-empty irreducible closed set without exactly one generic point.
    pub sober: Check<PointSet>,
}

impl SpectralReport {
    pub fn is_spectral(&self) -> bool {
        self.t0.holds()
            && self.quasi_compact.holds()
            && self.compact_open_basis.holds()
            && self.sober.holds()
    }
}

/// Checks the four conditions for a spectral space. For finite spaces every
/// open is quasi-compact, so the compactness conditions follow from the open
/// family being a topology; T0 and generic points are checked exhaustively.
pub fn verify_spectral(space: &FiniteSpace) -> SpectralReport {
    let t0 = Check::from_witness(space.t0_failure());
    let sober_failure = space.closed_sets().into_iter().find(|&c| {
        if !space.is_irreducible(c) {
            return false;
        }
        c.iter().filter(|&p| space.closure(p) == c).count() != 1
    });
    SpectralReport {
        t0,
        quasi_compact: Check::Implied("a finite space is quasi-compact"),
        compact_open_basis: Check::Implied(
            "every open of a finite space is quasi-compact and opens are closed under intersection",
        ),
        sober: Check::from_witness(sober_failure),
    }
}

pub(crate) fn require_spectral(space: &FiniteSpace) -> Result<(), TopologyError> {
    let report = verify_spectral(space);
    if report.is_spectral() {
        Ok(())
    } else {
        Err(TopologyError::NotSpectral(Box::new(report)))
    }
}

/// The Hochster dual: same points, opens are the closed sets of `space`.
pub fn hochster_dual(space: &FiniteSpace) -> Result<FiniteSpace, TopologyError> {
    require_spectral(space)?;
    Ok(FiniteSpace::from_valid(space.names().to_vec(), space.closed_sets()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn sierpinski_is_spectral_and_dual_swaps_open_point() {
        let s = FiniteSpace::new(names(2), [PointSet::EMPTY, PointSet::singleton(1), PointSet::full(2)])
            .unwrap();
        assert!(verify_spectral(&s).is_spectral());
        let d = hochster_dual(&s).unwrap();
        assert_eq!(d.opens(), &[PointSet::EMPTY, PointSet::singleton(0), PointSet::full(2)]);
        assert_eq!(hochster_dual(&d).unwrap(), s);
    }

    #[test]
    fn indiscrete_fails_t0() {
        let i = FiniteSpace::indiscrete(names(2));
        let report = verify_spectral(&i);
        assert_eq!(report.t0, Check::Fail((0, 1)));
        assert!(report.sober.is_fail());
        assert!(matches!(hochster_dual(&i), Err(TopologyError::NotSpectral(_))));
    }

    #[test]
    fn empty_space_is_spectral() {
        let e = FiniteSpace::new(vec![], [PointSet::EMPTY]).unwrap();
        assert!(verify_spectral(&e).is_spectral());
        assert_eq!(hochster_dual(&e).unwrap(), e);
    }

    #[test]
    fn discrete_is_self_dual() {
        let d = FiniteSpace::discrete(names(2));
        assert_eq!(hochster_dual(&d).unwrap(), d);
    }

    #[test]
    fn chain_topology_dualizes_to_reversed_chain() {
        let up = FiniteSpace::from_order(names(3), |a, b| a <= b);
        let down = FiniteSpace::from_order(names(3), |a, b| a >= b);
        assert_eq!(hochster_dual(&up).unwrap(), down);
    }
}
