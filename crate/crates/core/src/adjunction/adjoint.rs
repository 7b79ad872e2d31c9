use crate::lattice::FiniteIdealLattice;
use crate::topology::{zariski_spectrum, ContinuousMap, FiniteSpace, OpenLattice};

use super::datum::{universal_spectrum_map, SpectrumDatum};
use super::morphism::{require_morphism, LatticeMorphism};
use super::AdjunctionError;

fn check_open_lattice(open_lattice: &OpenLattice, space: &FiniteSpace) -> Result<(), AdjunctionError> {
    if open_lattice.opens != space.opens() {
        return Err(AdjunctionError::SpaceMismatch);
    }
    Ok(())
}

/// `Sigma phi: X -> Spec L`, `x -> sup{c : x not in phi(c)}`, for a morphism
/// `phi: L -> L_open(X)`.
pub fn sigma_adjunct(
    phi: &LatticeMorphism<'_>,
    open_lattice: &OpenLattice,
    space: &FiniteSpace,
) -> Result<ContinuousMap, AdjunctionError> {
    if phi.target != &open_lattice.lattice {
        return Err(AdjunctionError::LatticeMismatch);
    }
    check_open_lattice(open_lattice, space)?;
    require_morphism(phi)?;
    let delta = phi.map().iter().map(|&u| open_lattice.open(u)).collect();
    universal_spectrum_map(&SpectrumDatum::new(phi.source, space, delta))
}

/// `Lambda f: L -> L_open(X)`, `a -> f^-1(D(a))`, for a continuous `f: X -> Spec L`.
pub fn lambda_adjunct<'a>(
    lattice: &'a FiniteIdealLattice,
    open_lattice: &'a OpenLattice,
    space: &FiniteSpace,
    f: &ContinuousMap,
) -> Result<LatticeMorphism<'a>, AdjunctionError> {
    check_open_lattice(open_lattice, space)?;
    let spectrum = zariski_spectrum(lattice);
    if f.domain_len() != space.len() {
        return Err(AdjunctionError::SizeMismatch {
            expected: space.len(),
            found: f.domain_len(),
        });
    }
    if f.codomain_len() != spectrum.len() {
        return Err(AdjunctionError::SizeMismatch {
            expected: spectrum.len(),
            found: f.codomain_len(),
        });
    }
    if let Some(open) = f.continuity_failure(space, &spectrum) {
        return Err(AdjunctionError::NotContinuous(spectrum.render(open)));
    }
    let map = lattice
        .elements()
        .map(|a| {
            open_lattice
                .element_of(f.preimage(lattice.d_points(a)))
                .expect("preimage of an open under a continuous map is open")
        })
        .collect();
    Ok(LatticeMorphism::new(lattice, &open_lattice.lattice, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjunction::verify_morphism;
    use crate::lattice::build_lattice;
    use crate::pointset::PointSet;
    use crate::topology::{canonical_homeo, open_lattice};

    fn sierpinski() -> FiniteSpace {
        let names = vec!["0".to_string(), "1".to_string()];
        FiniteSpace::new(names, [PointSet::EMPTY, PointSet::singleton(1), PointSet::full(2)]).unwrap()
    }

    #[test]
    fn sigma_of_identity_is_canonical_homeo() {
        let s = sierpinski();
        let ol = open_lattice(&s).unwrap();
        let id = LatticeMorphism::identity(&ol.lattice);
        let f = sigma_adjunct(&id, &ol, &s).unwrap();
        assert_eq!(f, canonical_homeo(&s).unwrap().map);
    }

    #[test]
    fn lambda_of_identity_is_d() {
        let l = build_lattice(
            "elements: 0 m 1\nleq: 0<m<1\n\
             mul: 0*0=0 0*m=0 0*1=0 m*0=0 m*m=m m*1=m 1*0=0 1*m=m 1*1=1\ntop: 1\nbottom: 0\n",
        )
        .unwrap();
        let x = zariski_spectrum(&l);
        let ol = open_lattice(&x).unwrap();
        let id = ContinuousMap::identity(x.len());
        let phi = lambda_adjunct(&l, &ol, &x, &id).unwrap();
        assert!(verify_morphism(&phi).is_valid());
        for a in l.elements() {
            assert_eq!(ol.open(phi.apply(a)), l.d_points(a));
        }
        assert_eq!(sigma_adjunct(&phi, &ol, &x).unwrap(), id);
    }

    #[test]
    fn lambda_rejects_discontinuous_maps() {
        let s = sierpinski();
        let ol = open_lattice(&s).unwrap();
        // the spectrum of the open lattice is again Sierpinski, and only one bijection is continuous
        let l = &ol.lattice;
        let canon = canonical_homeo(&s).unwrap().map;
        let swap = ContinuousMap::new(canon.images().iter().rev().copied().collect(), 2);
        assert!(lambda_adjunct(l, &ol, &s, &canon).is_ok());
        assert!(matches!(
            lambda_adjunct(l, &ol, &s, &swap),
            Err(AdjunctionError::NotContinuous(_))
        ));
    }
}
