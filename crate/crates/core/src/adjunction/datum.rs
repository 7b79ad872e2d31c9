use std::fmt;

use crate::lattice::{Elem, FiniteIdealLattice};
use crate::pointset::PointSet;
use crate::topology::{spec_star, zariski_spectrum, ContinuousMap, FiniteSpace};

use super::AdjunctionError;

/// First violated condition of a spectrum or support datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DatumFailure {
    /// The assigned set has the wrong type (not open for a spectrum datum, not closed for a support datum).
    WrongKind { element: Elem },
    /// The bottom (empty join) is not sent to the empty set.
    EmptyJoin,
    Join { a: Elem, b: Elem },
    Top,
    Product { a: Elem, b: Elem },
}

impl fmt::Display for DatumFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DatumFailure::WrongKind { element } => write!(f, "value at element #{element} has the wrong kind of set"),
            DatumFailure::EmptyJoin => write!(f, "bottom is not sent to the empty set"),
            DatumFailure::Join { a, b } => write!(f, "join of #{a} and #{b} is not sent to the union"),
            DatumFailure::Top => write!(f, "top is not sent to the whole space"),
            DatumFailure::Product { a, b } => {
                write!(f, "product of #{a} and #{b} is not sent to the intersection")
            }
        }
    }
}

/// Checks that `sets` turns joins into unions (including the empty join),
/// the top into the whole space and products into intersections.
pub(crate) fn assignment_failure(
    lattice: &FiniteIdealLattice,
    space: &FiniteSpace,
    sets: &[PointSet],
    admissible: impl Fn(PointSet) -> bool,
) -> Option<DatumFailure> {
    assert_eq!(sets.len(), lattice.len(), "datum must assign every element");
    if let Some(element) = (0..sets.len()).find(|&a| !admissible(sets[a])) {
        return Some(DatumFailure::WrongKind { element });
    }
    if !sets[lattice.bottom()].is_empty() {
        return Some(DatumFailure::EmptyJoin);
    }
    let pairs = || lattice.elements().flat_map(|a| lattice.elements().map(move |b| (a, b)));
    if let Some((a, b)) = pairs().find(|&(a, b)| sets[lattice.join2(a, b)] != sets[a].union(sets[b])) {
        return Some(DatumFailure::Join { a, b });
    }
    if sets[lattice.top()] != space.full() {
        return Some(DatumFailure::Top);
    }
    pairs()
        .find(|&(a, b)| sets[lattice.mul(a, b)] != sets[a].intersection(sets[b]))
        .map(|(a, b)| DatumFailure::Product { a, b })
}

/// `f(x) = sup{c : x not in sets[c]}` for every point, as a point of `Spec L`.
pub(crate) fn universal_point_map(lattice: &FiniteIdealLattice, space: &FiniteSpace, sets: &[PointSet]) -> ContinuousMap {
    let images = (0..space.len())
        .map(|x| {
            let p = lattice.join(
                lattice
                    .compact_elements()
                    .into_iter()
                    .filter(|&c| !sets[c].contains(x)),
            );
            lattice.point_of(p).expect("universal map lands on primes for a valid datum")
        })
        .collect();
    ContinuousMap::new(images, lattice.spec_set().len())
}

/// A spectrum datum `(X, delta)`: every element gets an open set of `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumDatum<'a> {
    pub lattice: &'a FiniteIdealLattice,
    pub space: &'a FiniteSpace,
    pub delta: Vec<PointSet>,
}

impl<'a> SpectrumDatum<'a> {
    pub fn new(lattice: &'a FiniteIdealLattice, space: &'a FiniteSpace, delta: Vec<PointSet>) -> Self {
        assert_eq!(delta.len(), lattice.len());
        SpectrumDatum { lattice, space, delta }
    }

    pub fn failure(&self) -> Option<DatumFailure> {
        assignment_failure(self.lattice, self.space, &self.delta, |s| self.space.is_open(s))
    }

    pub fn validate(&self) -> Result<(), AdjunctionError> {
        match self.failure() {
            None => Ok(()),
            Some(f) => Err(AdjunctionError::InvalidDatum(f)),
        }
    }
}

/// A support datum `(X, sigma)`: every (compact, which at finite size is every)
/// element gets a closed set of `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportDatum<'a> {
    pub lattice: &'a FiniteIdealLattice,
    pub space: &'a FiniteSpace,
    pub sigma: Vec<PointSet>,
}

impl<'a> SupportDatum<'a> {
    pub fn new(lattice: &'a FiniteIdealLattice, space: &'a FiniteSpace, sigma: Vec<PointSet>) -> Self {
        assert_eq!(sigma.len(), lattice.len());
        SupportDatum { lattice, space, sigma }
    }

    /// `(Spec* L, supp)`; `space` must be `spec_star(lattice)`.
    pub fn tautological(lattice: &'a FiniteIdealLattice, space: &'a FiniteSpace) -> Self {
        let sigma = lattice.elements().map(|a| lattice.d_points(a)).collect();
        SupportDatum::new(lattice, space, sigma)
    }

    pub fn failure(&self) -> Option<DatumFailure> {
        assignment_failure(self.lattice, self.space, &self.sigma, |s| self.space.is_closed(s))
    }

    pub fn validate(&self) -> Result<(), AdjunctionError> {
        match self.failure() {
            None => Ok(()),
            Some(f) => Err(AdjunctionError::InvalidDatum(f)),
        }
    }

    /// The datum restricted to a subspace: `sigma'(a) = sigma(a) ∩ points`,
    /// re-indexed as in [`FiniteSpace::subspace`].
    pub fn restricted_sigma(&self, points: PointSet) -> Vec<PointSet> {
        let kept: Vec<usize> = points.iter().filter(|&p| p < self.space.len()).collect();
        self.sigma
            .iter()
            .map(|s| {
                kept.iter()
                    .enumerate()
                    .filter(|(_, &p)| s.contains(p))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect()
    }
}

/// The unique map `f: X -> Spec L` with `delta(a) = f^-1(D(a))`.
pub fn universal_spectrum_map(datum: &SpectrumDatum<'_>) -> Result<ContinuousMap, AdjunctionError> {
    datum.validate()?;
    let f = universal_point_map(datum.lattice, datum.space, &datum.delta);
    debug_assert!(f.is_continuous(datum.space, &zariski_spectrum(datum.lattice)));
    Ok(f)
}

/// The unique map `f: X -> Spec* L` with `sigma(a) = f^-1(supp(a))`.
pub fn universal_support_map(datum: &SupportDatum<'_>) -> Result<ContinuousMap, AdjunctionError> {
    datum.validate()?;
    let f = universal_point_map(datum.lattice, datum.space, &datum.sigma);
    debug_assert!(f.is_continuous(datum.space, &spec_star(datum.lattice)));
    Ok(f)
}

/// Outcome of the brute-force uniqueness search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Uniqueness {
    /// Exactly one map satisfies the preimage identity; `checked` maps were examined.
    Unique { checked: u128 },
    /// The search space exceeds the limit.
    Skipped { candidates: u128 },
    /// Solutions other than the expected one exist (or none do).
    Violated { solutions: Vec<ContinuousMap> },
}

/// Enumerates every point map `X -> Spec L` and keeps those with
/// `sets[a] = f^-1(D(a))` for all `a`. Runs only if `|Spec L|^|X| <= limit`.
pub fn preimage_solutions(
    lattice: &FiniteIdealLattice,
    space: &FiniteSpace,
    sets: &[PointSet],
    limit: u128,
) -> Result<Vec<ContinuousMap>, u128> {
    let k = lattice.spec_set().len() as u128;
    let n = space.len();
    let candidates = (0..n).try_fold(1u128, |acc, _| acc.checked_mul(k)).unwrap_or(u128::MAX);
    if candidates > limit {
        return Err(candidates);
    }
    let mut solutions = Vec::new();
    if k == 0 && n > 0 {
        return Ok(solutions);
    }
    let mut images = vec![0usize; n];
    loop {
        let f = ContinuousMap::new(images.clone(), k as usize);
        if lattice
            .elements()
            .all(|a| f.preimage(lattice.d_points(a)) == sets[a])
        {
            solutions.push(f);
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == n {
                return Ok(solutions);
            }
            images[i] += 1;
            if (images[i] as u128) < k {
                break;
            }
            images[i] = 0;
            i += 1;
        }
    }
}

pub(crate) fn uniqueness(
    lattice: &FiniteIdealLattice,
    space: &FiniteSpace,
    sets: &[PointSet],
    expected: &ContinuousMap,
    limit: u128,
) -> Uniqueness {
    match preimage_solutions(lattice, space, sets, limit) {
        Err(candidates) => Uniqueness::Skipped { candidates },
        Ok(solutions) => {
            if solutions.len() == 1 && &solutions[0] == expected {
                let k = lattice.spec_set().len() as u128;
                Uniqueness::Unique {
                    checked: k.pow(space.len() as u32),
                }
            } else {
                Uniqueness::Violated { solutions }
            }
        }
    }
}

pub fn spectrum_uniqueness(datum: &SpectrumDatum<'_>, limit: u128) -> Result<Uniqueness, AdjunctionError> {
    let f = universal_spectrum_map(datum)?;
    Ok(uniqueness(datum.lattice, datum.space, &datum.delta, &f, limit))
}

pub fn support_uniqueness(datum: &SupportDatum<'_>, limit: u128) -> Result<Uniqueness, AdjunctionError> {
    let f = universal_support_map(datum)?;
    Ok(uniqueness(datum.lattice, datum.space, &datum.sigma, &f, limit))
}
