use crate::lattice::{Elem, FiniteIdealLattice, LatticeData};
use crate::pointset::PointSet;

use super::spectral::{hochster_dual, require_spectral};
use super::{ContinuousMap, FiniteSpace, TopologyError};

/// `Spec L` with the Zariski topology. Point `i` is the prime `L.spec_set()[i]`
/// and the opens are exactly the sets `D(a)`.
pub fn zariski_spectrum(lattice: &FiniteIdealLattice) -> FiniteSpace {
    let names = lattice
        .spec_set()
        .iter()
        .map(|&p| lattice.name(p).to_string())
        .collect();
    let opens = lattice.elements().map(|a| lattice.d_points(a)).collect();
    FiniteSpace::from_valid(names, opens)
}

/// `Spec* L`: the Hochster dual of the Zariski spectrum, on which `supp(a) = D(a)` is closed.
pub fn spec_star(lattice: &FiniteIdealLattice) -> FiniteSpace {
    hochster_dual(&zariski_spectrum(lattice)).expect("the Zariski spectrum is spectral")
}

/// `supp(a) = {p : a not below p}` as points of `Spec* L`.
pub fn support(lattice: &FiniteIdealLattice, a: Elem) -> PointSet {
    lattice.d_points(a)
}

/// The lattice of open sets of a space with intersection as product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenLattice {
    pub lattice: FiniteIdealLattice,
    /// `opens[a]` is the open set represented by element `a`.
    pub opens: Vec<PointSet>,
}

impl OpenLattice {
    pub fn element_of(&self, set: PointSet) -> Option<Elem> {
        self.opens.iter().position(|&o| o == set)
    }

    pub fn open(&self, a: Elem) -> PointSet {
        self.opens[a]
    }
}

/// Element names used for open sets: `[a|b]`, with `[]` for the empty set.
pub fn open_set_name(space: &FiniteSpace, set: PointSet) -> String {
    let members: Vec<&str> = set.iter().map(|p| space.name(p)).collect();
    format!("[{}]", members.join("|"))
}

pub fn open_lattice(space: &FiniteSpace) -> Result<OpenLattice, TopologyError> {
    require_spectral(space)?;
    let opens: Vec<PointSet> = space.opens().to_vec();
    let n = opens.len();
    let names = opens.iter().map(|&o| open_set_name(space, o)).collect();
    let index = |set: PointSet| opens.iter().position(|&o| o == set).expect("open family is a topology");
    let mut pairs = Vec::new();
    let mut mul = Vec::with_capacity(n * n);
    for &u in &opens {
        for &v in &opens {
            if u.is_subset(v) {
                pairs.push((index(u), index(v)));
            }
            mul.push(index(u.intersection(v)));
        }
    }
    let data = LatticeData::new(names, &pairs, mul, n - 1, 0);
    let lattice = FiniteIdealLattice::from_data(data)?;
    Ok(OpenLattice { lattice, opens })
}

/// The homeomorphism `x -> X \ closure(x)` onto the spectrum of the open lattice.
#[derive(Clone, Debug)]
pub struct CanonicalHomeo {
    pub open_lattice: OpenLattice,
    pub spectrum: FiniteSpace,
    pub map: ContinuousMap,
}

impl CanonicalHomeo {
    pub fn is_homeomorphism(&self, space: &FiniteSpace) -> bool {
        self.map.is_homeomorphism(space, &self.spectrum)
    }
}

pub fn canonical_homeo(space: &FiniteSpace) -> Result<CanonicalHomeo, TopologyError> {
    let open_lattice = open_lattice(space)?;
    let spectrum = zariski_spectrum(&open_lattice.lattice);
    let images = (0..space.len())
        .map(|x| {
            let u = space.closure(x).complement(space.len());
            let elem = open_lattice.element_of(u).expect("complement of a closure is open");
            open_lattice
                .lattice
                .point_of(elem)
                .expect("complement of a point closure is prime in a spectral space")
        })
        .collect();
    let map = ContinuousMap::new(images, spectrum.len());
    Ok(CanonicalHomeo {
        open_lattice,
        spectrum,
        map,
    })
}
