//! Decomposition of semiprime elements along the finest partition of their
//! supports.

use petgraph::unionfind::UnionFind;
use thiserror::Error;

use crate::lattice::{Elem, FiniteIdealLattice};
use crate::pointset::PointSet;
use crate::topology::{inverse_assignment, spec_star, ClassificationKind};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("`{0}` is not semiprime")]
    NotSemiprime(String),
    #[error("family is not closed under intersection: {a:?} and {b:?}")]
    NotIntersectionClosed { a: PointSet, b: PointSet },
    #[error("point {0} of the set lies in no member of the family inside the set")]
    NotCoverable(usize),
}

/// The lexicographically smallest pair `(a1, a2)` of elements strictly below
/// `a` with `a = a1 v a2`. Both parts are then non-zero.
pub fn decomposition_witness(lattice: &FiniteIdealLattice, a: Elem) -> Option<(Elem, Elem)> {
    let below = || lattice.elements().filter(|&b| b != a && lattice.leq(b, a));
    below().find_map(|b| below().find(|&c| lattice.join2(b, c) == a).map(|c| (b, c)))
}

/// Non-zero and not the join of two elements strictly below it. The trivial
/// splitting `a = a v a` is not counted, otherwise nothing would qualify.
pub fn is_indecomposable(lattice: &FiniteIdealLattice, a: Elem) -> bool {
    a != lattice.bottom() && decomposition_witness(lattice, a).is_none()
}

/// Two semiprimes with disjoint non-empty supports whose join is `a`.
pub fn semiprime_split(lattice: &FiniteIdealLattice, a: Elem) -> Option<(Elem, Elem)> {
    let semiprimes = lattice.semiprimes();
    let nonempty: Vec<Elem> = semiprimes
        .into_iter()
        .filter(|&b| !lattice.d_points(b).is_empty())
        .collect();
    nonempty.iter().find_map(|&b| {
        nonempty
            .iter()
            .find(|&&c| lattice.d_points(b).is_disjoint(lattice.d_points(c)) && lattice.join2(b, c) == a)
            .map(|&c| (b, c))
    })
}

/// Semiprime, with non-empty support, and not split by [`semiprime_split`].
pub fn is_semiprime_indecomposable(lattice: &FiniteIdealLattice, a: Elem) -> bool {
    lattice.is_semiprime(a) && !lattice.d_points(a).is_empty() && semiprime_split(lattice, a).is_none()
}

/// The finest partition of `set` into non-empty unions of members of `family`.
///
/// Each point's block contains the smallest member through it, so blocks are
/// the connected components of the overlap graph of these smallest members.
/// Blocks are listed by their first point.
pub fn finest_partition(set: PointSet, family: &[PointSet]) -> Result<Vec<PointSet>, DecompositionError> {
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            if !family.contains(&a.intersection(b)) {
                return Err(DecompositionError::NotIntersectionClosed { a, b });
            }
        }
    }
    let points: Vec<usize> = set.iter().collect();
    let mut closures = Vec::with_capacity(points.len());
    for &x in &points {
        let closure = family
            .iter()
            .copied()
            .filter(|m| m.contains(x) && m.is_subset(set))
            .min_by_key(|m| m.len())
            .ok_or(DecompositionError::NotCoverable(x))?;
        closures.push(closure);
    }
    let mut uf = UnionFind::<usize>::new(points.len());
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if !closures[i].is_disjoint(closures[j]) {
                uf.union(i, j);
            }
        }
    }
    let mut blocks: Vec<(usize, PointSet)> = Vec::new();
    for (i, &x) in points.iter().enumerate() {
        let root = uf.find(i);
        match blocks.iter_mut().find(|(r, _)| *r == root) {
            Some((_, block)) => block.insert(x),
            None => blocks.push((root, PointSet::singleton(x))),
        }
    }
    Ok(blocks.into_iter().map(|(_, b)| b).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub element: Elem,
    /// The support, as points of `Spec* L`.
    pub support: PointSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub target: Elem,
    pub blocks: Vec<Block>,
    /// Whether the join of the blocks is the target.
    pub join_is_target: bool,
    /// The common value of the pairwise meets of distinct blocks, if any pair exists.
    pub pairwise_meet: Option<Elem>,
    /// Distinct blocks meet in the radical of the bottom, which differs from
    /// the bottom when the bottom is not semiprime.
    pub meet_above_bottom: bool,
    /// The target has empty support, so there are no blocks.
    pub degenerate: bool,
}

/// Splits a semiprime `a` into semiprime blocks whose supports form the
/// finest partition of `supp(a)` into closed subsets of `Spec* L`.
pub fn decompose_semiprime(lattice: &FiniteIdealLattice, a: Elem) -> Result<Decomposition, DecompositionError> {
    if !lattice.is_semiprime(a) {
        return Err(DecompositionError::NotSemiprime(lattice.name(a).to_string()));
    }
    let space = spec_star(lattice);
    let parts = finest_partition(lattice.d_points(a), &space.closed_sets())?;
    let blocks: Vec<Block> = parts
        .into_iter()
        .map(|support| Block {
            element: inverse_assignment(lattice, ClassificationKind::Support, support),
            support,
        })
        .collect();
    debug_assert!(blocks
        .iter()
        .all(|b| lattice.is_semiprime(b.element) && lattice.d_points(b.element) == b.support));
    let join = lattice.join(blocks.iter().map(|b| b.element));
    let mut meets = Vec::new();
    for (i, x) in blocks.iter().enumerate() {
        for y in &blocks[i + 1..] {
            meets.push(lattice.meet2(x.element, y.element));
        }
    }
    let pairwise_meet = meets.first().copied();
    debug_assert!(meets.iter().all(|&m| Some(m) == pairwise_meet));
    Ok(Decomposition {
        target: a,
        join_is_target: join == a,
        meet_above_bottom: pairwise_meet.is_some_and(|m| m != lattice.bottom()),
        pairwise_meet,
        degenerate: blocks.is_empty(),
        blocks,
    })
}
