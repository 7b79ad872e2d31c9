//! The three classifications of semiprime elements: by closed sets of the
//! Zariski spectrum, by its open sets, and by closed sets of `Spec* L`.

use crate::lattice::{Elem, FiniteIdealLattice};
use crate::pointset::PointSet;
use crate::report::Check;

use super::{spec_star, zariski_spectrum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassificationKind {
    /// `a -> V(a)` onto Zariski-closed sets; inverse `Y -> inf Y`; order reversing.
    Closed,
    /// `a -> D(a)` onto Zariski-open sets; inverse `Y -> sup{b : D(b) in Y}`; order preserving.
    Open,
    /// `a -> supp(a)` onto closed sets of `Spec* L`; inverse `Y -> sup{b : supp(b) in Y}`; order preserving.
    Support,
}

impl ClassificationKind {
    pub fn label(self) -> &'static str {
        match self {
            ClassificationKind::Closed => "closed",
            ClassificationKind::Open => "open",
            ClassificationKind::Support => "support",
        }
    }

    pub fn order_reversing(self) -> bool {
        self == ClassificationKind::Closed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    /// Two semiprimes sent to the same set.
    pub injective: Check<(Elem, Elem)>,
    /// A target set not hit.
    pub surjective: Check<PointSet>,
    /// A semiprime not recovered by the inverse assignment.
    pub left_inverse: Check<Elem>,
    /// A target set not recovered.
    pub right_inverse: Check<PointSet>,
    /// A pair where the stated monotonicity fails (as an equivalence).
    pub monotone: Check<(Elem, Elem)>,
}

impl BijectionReport {
    pub fn is_bijection(&self) -> bool {
        self.injective.holds()
            && self.surjective.holds()
            && self.left_inverse.holds()
            && self.right_inverse.holds()
            && self.monotone.holds()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationTable {
    pub kind: ClassificationKind,
    /// `(semiprime, its set)` in element order.
    pub pairs: Vec<(Elem, PointSet)>,
    /// The target family, in canonical order.
    pub targets: Vec<PointSet>,
    pub report: BijectionReport,
}

impl ClassificationTable {
    pub fn set_of(&self, a: Elem) -> Option<PointSet> {
        self.pairs.iter().find(|(b, _)| *b == a).map(|(_, s)| *s)
    }

    pub fn element_of(&self, set: PointSet) -> Option<Elem> {
        self.pairs.iter().find(|(_, s)| *s == set).map(|(b, _)| *b)
    }
}

fn forward(lattice: &FiniteIdealLattice, kind: ClassificationKind, a: Elem) -> PointSet {
    match kind {
        ClassificationKind::Closed => lattice.v_points(a),
        ClassificationKind::Open | ClassificationKind::Support => lattice.d_points(a),
    }
}

/// The inverse assignment, computed from its own formula rather than by
/// inverting the table.
pub fn inverse_assignment(lattice: &FiniteIdealLattice, kind: ClassificationKind, set: PointSet) -> Elem {
    match kind {
        ClassificationKind::Closed => lattice.meet_of_points(set),
        ClassificationKind::Open | ClassificationKind::Support => lattice.join(
            lattice
                .compact_elements()
                .into_iter()
                .filter(|&b| lattice.d_points(b).is_subset(set)),
        ),
    }
}

pub fn classify(lattice: &FiniteIdealLattice, kind: ClassificationKind) -> ClassificationTable {
    let targets = match kind {
        ClassificationKind::Closed => zariski_spectrum(lattice).closed_sets(),
        ClassificationKind::Open => zariski_spectrum(lattice).opens().to_vec(),
        ClassificationKind::Support => spec_star(lattice).closed_sets(),
    };
    let semiprimes = lattice.semiprimes();
    let pairs: Vec<(Elem, PointSet)> = semiprimes.iter().map(|&a| (a, forward(lattice, kind, a))).collect();

    let mut injective = None;
    'inj: for (i, &(a, sa)) in pairs.iter().enumerate() {
        for &(b, sb) in &pairs[i + 1..] {
            if sa == sb {
                injective = Some((a, b));
                break 'inj;
            }
        }
    }
    let surjective = targets
        .iter()
        .copied()
        .find(|t| !pairs.iter().any(|(_, s)| s == t));
    let outside = pairs.iter().find(|(_, s)| !targets.contains(s)).map(|(_, s)| *s);
    let left_inverse = pairs
        .iter()
        .find(|&&(a, s)| inverse_assignment(lattice, kind, s) != a)
        .map(|(a, _)| *a);
    let right_inverse = targets.iter().copied().find(|&t| {
        let b = inverse_assignment(lattice, kind, t);
        !lattice.is_semiprime(b) || forward(lattice, kind, b) != t
    });
    let mut monotone = None;
    'mono: for &(a, sa) in &pairs {
        for &(b, sb) in &pairs {
            let expected = if kind.order_reversing() {
                sb.is_subset(sa)
            } else {
                sa.is_subset(sb)
            };
            if lattice.leq(a, b) != expected {
                monotone = Some((a, b));
                break 'mono;
            }
        }
    }
    let report = BijectionReport {
        injective: Check::from_witness(injective),
        surjective: Check::from_witness(surjective.or(outside)),
        left_inverse: Check::from_witness(left_inverse),
        right_inverse: Check::from_witness(right_inverse),
        monotone: Check::from_witness(monotone),
    };
    ClassificationTable {
        kind,
        pairs,
        targets,
        report,
    }
}

pub fn classify_closed(lattice: &FiniteIdealLattice) -> ClassificationTable {
    classify(lattice, ClassificationKind::Closed)
}

pub fn classify_open(lattice: &FiniteIdealLattice) -> ClassificationTable {
    classify(lattice, ClassificationKind::Open)
}

pub fn classify_supp(lattice: &FiniteIdealLattice) -> ClassificationTable {
    classify(lattice, ClassificationKind::Support)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_lattice;

    #[test]
    fn one_element_lattice_single_pair() {
        let l = build_lattice("elements: z\nmul: z*z=z\ntop: z\nbottom: z").unwrap();
        for kind in [ClassificationKind::Closed, ClassificationKind::Open, ClassificationKind::Support] {
            let t = classify(&l, kind);
            assert_eq!(t.pairs, vec![(0, PointSet::EMPTY)]);
            assert!(t.report.is_bijection());
        }
    }
}
