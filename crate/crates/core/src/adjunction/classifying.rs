use crate::lattice::{Elem, FiniteIdealLattice};
use crate::pointset::PointSet;
use crate::report::Check;
use crate::topology::{spec_star, verify_spectral, BijectionReport, ContinuousMap, FiniteSpace};

use super::datum::{universal_support_map, SupportDatum};
use super::AdjunctionError;

/// Both characterizations of a classifying support datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyingReport {
    /// The canonical map to `Spec* L`.
    pub map: ContinuousMap,
    /// Whether the canonical map is a homeomorphism.
    pub homeomorphism: bool,
    /// The assignments `a -> sigma(a)` and `Y -> sup{b : sigma(b) in Y}`
    /// between semiprimes and closed sets of `X`.
    pub assignments: BijectionReport,
}

impl ClassifyingReport {
    pub fn is_classifying(&self) -> bool {
        self.homeomorphism && self.assignments.is_bijection()
    }

    /// The two criteria are equivalent; a disagreement means a bug or a bad input.
    pub fn criteria_agree(&self) -> bool {
        self.homeomorphism == self.assignments.is_bijection()
    }
}

fn assignment_report(lattice: &FiniteIdealLattice, space: &FiniteSpace, sigma: &[PointSet]) -> BijectionReport {
    // sigma preserves joins, so the union of sigma(b) over b <= a is sigma(a)
    let forward = |a: Elem| sigma[a];
    let inverse = |y: PointSet| lattice.join(lattice.elements().filter(|&b| sigma[b].is_subset(y)));
    let targets = space.closed_sets();
    let semiprimes = lattice.semiprimes();

    let injective = semiprimes.iter().enumerate().find_map(|(i, &a)| {
        semiprimes[i + 1..]
            .iter()
            .find(|&&b| forward(a) == forward(b))
            .map(|&b| (a, b))
    });
    let surjective = targets
        .iter()
        .copied()
        .find(|&t| !semiprimes.iter().any(|&a| forward(a) == t));
    let left_inverse = semiprimes.iter().copied().find(|&a| inverse(forward(a)) != a);
    let right_inverse = targets.iter().copied().find(|&t| {
        let b = inverse(t);
        !lattice.is_semiprime(b) || forward(b) != t
    });
    let monotone = semiprimes.iter().find_map(|&a| {
        semiprimes
            .iter()
            .find(|&&b| lattice.leq(a, b) != forward(a).is_subset(forward(b)))
            .map(|&b| (a, b))
    });
    BijectionReport {
        injective: Check::from_witness(injective),
        surjective: Check::from_witness(surjective),
        left_inverse: Check::from_witness(left_inverse),
        right_inverse: Check::from_witness(right_inverse),
        monotone: Check::from_witness(monotone),
    }
}

/// Decides whether a support datum on a spectral space is classifying, by
/// both the homeomorphism criterion and the assignment criterion.
pub fn is_classifying(datum: &SupportDatum<'_>) -> Result<ClassifyingReport, AdjunctionError> {
    datum.validate()?;
    let spectral = verify_spectral(datum.space);
    if !spectral.is_spectral() {
        return Err(AdjunctionError::NotSpectral(Box::new(spectral)));
    }
    let map = universal_support_map(datum)?;
    let homeomorphism = map.is_homeomorphism(datum.space, &spec_star(datum.lattice));
    let assignments = assignment_report(datum.lattice, datum.space, &datum.sigma);
    Ok(ClassifyingReport {
        map,
        homeomorphism,
        assignments,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportMorphismReport {
    /// An open of the target space whose preimage is not open.
    pub continuous: Check<PointSet>,
    /// An element with `sigma(a) != f^-1(sigma'(a))`.
    pub preimages: Check<Elem>,
    pub source_classifying: bool,
    pub target_classifying: bool,
    /// Set when both data are classifying.
    pub homeomorphism: Option<bool>,
}

impl SupportMorphismReport {
    pub fn is_morphism(&self) -> bool {
        self.continuous.holds() && self.preimages.holds()
    }

    /// A morphism between classifying data that is not a homeomorphism.
    pub fn is_contradiction(&self) -> bool {
        self.is_morphism() && self.homeomorphism == Some(false)
    }
}

fn classifying_or_false(datum: &SupportDatum<'_>) -> bool {
    is_classifying(datum).map(|r| r.is_classifying()).unwrap_or(false)
}

/// Checks whether `f: X -> X'` is a morphism of support data `(X, sigma) -> (X', sigma')`.
pub fn support_morphism_check(
    f: &ContinuousMap,
    source: &SupportDatum<'_>,
    target: &SupportDatum<'_>,
) -> Result<SupportMorphismReport, AdjunctionError> {
    if source.lattice != target.lattice {
        return Err(AdjunctionError::LatticeMismatch);
    }
    for (expected, found) in [
        (source.space.len(), f.domain_len()),
        (target.space.len(), f.codomain_len()),
    ] {
        if expected != found {
            return Err(AdjunctionError::SizeMismatch { expected, found });
        }
    }
    source.validate()?;
    target.validate()?;
    let continuous = f.continuity_failure(source.space, target.space);
    let preimages = source
        .lattice
        .elements()
        .find(|&a| source.sigma[a] != f.preimage(target.sigma[a]));
    let source_classifying = classifying_or_false(source);
    let target_classifying = classifying_or_false(target);
    let homeomorphism = (source_classifying && target_classifying)
        .then(|| f.is_homeomorphism(source.space, target.space));
    Ok(SupportMorphismReport {
        continuous: Check::from_witness(continuous),
        preimages: Check::from_witness(preimages),
        source_classifying,
        target_classifying,
        homeomorphism,
    })
}
