use std::fmt::Write as _;

use crate::parse::{lookup, parse_braced, parse_names, ParseError, Sections};
use crate::pointset::{PointSet, MAX_POINTS};

use super::TopologyError;

/// A finite topological space given by its full family of open sets.
///
/// Opens are kept deduplicated and sorted by size, then by bit pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpace {
    names: Vec<String>,
    opens: Vec<PointSet>,
}

pub(crate) fn render_set(names: &[String], set: PointSet) -> String {
    let members: Vec<&str> = set.iter().map(|p| names[p].as_str()).collect();
    format!("{{{}}}", members.join(","))
}

fn canonical(mut family: Vec<PointSet>) -> Vec<PointSet> {
    family.sort_by_key(|s| s.sort_key());
    family.dedup();
    family
}

impl FiniteSpace {
    pub fn new<I>(names: Vec<String>, opens: I) -> Result<Self, TopologyError>
    where
        I: IntoIterator<Item = PointSet>,
    {
        let n = names.len();
        if n > MAX_POINTS {
            return Err(TopologyError::TooManyPoints(n));
        }
        let full = PointSet::full(n);
        let opens = canonical(opens.into_iter().collect());
        if let Some(bad) = opens.iter().find(|o| !o.is_subset(full)) {
            return Err(TopologyError::PointOutOfRange(format!("{bad:?}")));
        }
        if opens.first() != Some(&PointSet::EMPTY) {
            return Err(TopologyError::MissingEmptyOpen);
        }
        if opens.last() != Some(&full) {
            return Err(TopologyError::MissingFullOpen);
        }
        for (i, &u) in opens.iter().enumerate() {
            for &v in &opens[i + 1..] {
                let witness = || (render_set(&names, u), render_set(&names, v));
                if opens.binary_search_by_key(&u.union(v).sort_key(), |s| s.sort_key()).is_err() {
                    let (a, b) = witness();
                    return Err(TopologyError::NotUnionClosed { a, b });
                }
                if opens
                    .binary_search_by_key(&u.intersection(v).sort_key(), |s| s.sort_key())
                    .is_err()
                {
                    let (a, b) = witness();
                    return Err(TopologyError::NotIntersectionClosed { a, b });
                }
            }
        }
        Ok(FiniteSpace { names, opens })
    }

    /// Builds a space from a family that is already known to be a topology.
    pub(crate) fn from_valid(names: Vec<String>, opens: Vec<PointSet>) -> Self {
        debug_assert!(FiniteSpace::new(names.clone(), opens.clone()).is_ok());
        FiniteSpace {
            names,
            opens: canonical(opens),
        }
    }

    pub fn discrete(names: Vec<String>) -> Self {
        let full = PointSet::full(names.len());
        let opens = full.subsets().collect();
        FiniteSpace::from_valid(names, opens)
    }

    pub fn indiscrete(names: Vec<String>) -> Self {
        let full = PointSet::full(names.len());
        FiniteSpace::from_valid(names, vec![PointSet::EMPTY, full])
    }

    /// Alexandrov topology of a preorder: the opens are the down-closed sets,
    /// so the closure of `x` is everything above `x`.
    pub fn from_order(names: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Self {
        let n = names.len();
        let opens = PointSet::full(n)
            .subsets()
            .filter(|s| s.iter().all(|y| (0..n).all(|x| !leq(x, y) || s.contains(x))))
            .collect();
        FiniteSpace::from_valid(names, opens)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, p: usize) -> &str {
        &self.names[p]
    }

    pub fn point(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    /// Closed sets, in the same canonical order as opens.
    pub fn closed_sets(&self) -> Vec<PointSet> {
        canonical(self.opens.iter().map(|o| o.complement(self.len())).collect())
    }

    pub fn is_open(&self, set: PointSet) -> bool {
        self.opens
            .binary_search_by_key(&set.sort_key(), |s| s.sort_key())
            .is_ok()
    }

    pub fn is_closed(&self, set: PointSet) -> bool {
        set.is_subset(self.full()) && self.is_open(set.complement(self.len()))
    }

    /// Smallest closed set containing `set`.
    pub fn closure_of(&self, set: PointSet) -> PointSet {
        let full = self.full();
        self.opens
            .iter()
            .map(|o| o.complement(self.len()))
            .filter(|c| set.is_subset(*c))
            .fold(full, PointSet::intersection)
    }

    pub fn closure(&self, p: usize) -> PointSet {
        self.closure_of(PointSet::singleton(p))
    }

    /// Two distinct points with the same closure, if the space is not T0.
    pub fn t0_failure(&self) -> Option<(usize, usize)> {
        let closures: Vec<PointSet> = (0..self.len()).map(|p| self.closure(p)).collect();
        (0..self.len())
            .flat_map(|a| (a + 1..self.len()).map(move |b| (a, b)))
            .find(|&(a, b)| closures[a] == closures[b])
    }

    /// `Ok` when `set` is a non-empty irreducible closed set. An `Err(Some(..))`
    /// carries two proper closed subsets covering it.
    pub fn irreducibility_failure(&self, set: PointSet) -> Result<(), Option<(PointSet, PointSet)>> {
        if set.is_empty() {
            return Err(None);
        }
        let proper: Vec<PointSet> = self
            .closed_sets()
            .into_iter()
            .filter(|c| c.is_subset(set) && *c != set)
            .collect();
        for (i, &a) in proper.iter().enumerate() {
            for &b in &proper[i..] {
                if a.union(b) == set {
                    return Err(Some((a, b)));
                }
            }
        }
        Ok(())
    }

    pub fn is_irreducible(&self, set: PointSet) -> bool {
        self.irreducibility_failure(set).is_ok()
    }

    /// The unique point whose closure is the irreducible closed set `set`.
    pub fn generic_point(&self, set: PointSet) -> Result<usize, TopologyError> {
        if !self.is_closed(set) {
            return Err(TopologyError::NotClosed(self.render(set)));
        }
        match self.irreducibility_failure(set) {
            Ok(()) => {}
            Err(None) => return Err(TopologyError::EmptyClosedSet),
            Err(Some((a, b))) => {
                return Err(TopologyError::NotIrreducible {
                    set: self.render(set),
                    first: self.render(a),
                    second: self.render(b),
                })
            }
        }
        let mut generic = set.iter().filter(|&p| self.closure(p) == set);
        match (generic.next(), generic.next()) {
            (Some(p), None) => Ok(p),
            _ => Err(TopologyError::NoUniqueGenericPoint(self.render(set))),
        }
    }

    /// Subspace topology on `points`; point `i` of the result is the
    /// `i`-th smallest member of `points`.
    pub fn subspace(&self, points: PointSet) -> FiniteSpace {
        let kept: Vec<usize> = points.iter().filter(|&p| p < self.len()).collect();
        let names = kept.iter().map(|&p| self.names[p].clone()).collect();
        let restrict = |o: PointSet| -> PointSet {
            kept.iter()
                .enumerate()
                .filter(|(_, &p)| o.contains(p))
                .map(|(i, _)| i)
                .collect()
        };
        FiniteSpace::from_valid(names, self.opens.iter().map(|&o| restrict(o)).collect())
    }

    /// Pairs `(x, y)` with `x != y` and `y` in the closure of `x`.
    pub fn specialization_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for x in 0..self.len() {
            let c = self.closure(x);
            edges.extend(c.iter().filter(|&y| y != x).map(|y| (x, y)));
        }
        edges
    }

    pub fn render(&self, set: PointSet) -> String {
        render_set(&self.names, set)
    }

    pub fn set_names(&self, set: PointSet) -> Vec<String> {
        set.iter().map(|p| self.names[p].clone()).collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "points: {}", self.names.join(" "));
        let opens: Vec<String> = self.opens.iter().map(|&o| self.render(o)).collect();
        let _ = writeln!(out, "opens: {}", opens.join(" "));
        out
    }
}

/// Parses space source text: `points: a b c` and `opens: {} {a} {a,b} *`.
pub fn parse_space(text: &str) -> Result<FiniteSpace, TopologyError> {
    let mut sections = Sections::parse(text, &["points", "opens"])?;
    let points = sections.require("points")?;
    let names = parse_names(&points, "point")?;
    if names.len() > MAX_POINTS {
        return Err(TopologyError::TooManyPoints(names.len()));
    }
    let opens_sec = sections.require("opens")?;
    let mut opens = Vec::with_capacity(opens_sec.tokens.len());
    for tok in &opens_sec.tokens {
        if tok.text == "*" {
            opens.push(PointSet::full(names.len()));
            continue;
        }
        let members = parse_braced(tok)?;
        let set = members
            .iter()
            .map(|m| lookup(&names, m, tok.line, "point"))
            .collect::<Result<PointSet, ParseError>>()?;
        opens.push(set);
    }
    FiniteSpace::new(names, opens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    pub(crate) fn sierpinski() -> FiniteSpace {
        FiniteSpace::new(names(2), [PointSet::EMPTY, PointSet::singleton(1), PointSet::full(2)]).unwrap()
    }

    #[test]
    fn sierpinski_closures_and_generic_point() {
        let s = sierpinski();
        assert_eq!(s.closure(1), PointSet::full(2));
        assert_eq!(s.closure(0), PointSet::singleton(0));
        assert_eq!(s.generic_point(s.full()).unwrap(), 1);
        assert_eq!(s.t0_failure(), None);
        assert_eq!(s.specialization_edges(), vec![(1, 0)]);
    }

    #[test]
    fn discrete_closures_are_points() {
        let d = FiniteSpace::discrete(names(3));
        for p in 0..3 {
            assert_eq!(d.closure(p), PointSet::singleton(p));
        }
        assert_eq!(d.opens().len(), 8);
        let err = d.generic_point(PointSet::from_iter([0, 1])).unwrap_err();
        assert!(matches!(err, TopologyError::NotIrreducible { .. }));
    }

    #[test]
    fn indiscrete_is_not_t0() {
        let i = FiniteSpace::indiscrete(names(2));
        assert_eq!(i.t0_failure(), Some((0, 1)));
        assert!(matches!(
            i.generic_point(i.full()),
            Err(TopologyError::NoUniqueGenericPoint(_))
        ));
    }

    #[test]
    fn rejects_non_topologies() {
        let err = FiniteSpace::new(
            names(2),
            [PointSet::EMPTY, PointSet::singleton(0), PointSet::singleton(1), PointSet::full(2)]
                .into_iter()
                .filter(|s| *s != PointSet::singleton(1)),
        );
        assert!(err.is_ok());
        let missing_union = FiniteSpace::new(
            names(3),
            [
                PointSet::EMPTY,
                PointSet::singleton(0),
                PointSet::singleton(1),
                PointSet::full(3),
            ],
        );
        assert_eq!(
            missing_union.unwrap_err(),
            TopologyError::NotUnionClosed { a: "{0}".into(), b: "{1}".into() }
        );
        assert_eq!(
            FiniteSpace::new(names(1), [PointSet::full(1)]).unwrap_err(),
            TopologyError::MissingEmptyOpen
        );
    }

    #[test]
    fn parse_with_star_and_round_trip() {
        let s = parse_space("points: a b\nopens: {} {b} *\n").unwrap();
        assert_eq!(s.opens().len(), 3);
        assert_eq!(parse_space(&s.to_text()).unwrap(), s);
        assert!(parse_space("points: a\nopens: {} {q} *").is_err());
    }

    #[test]
    fn empty_space() {
        let e = FiniteSpace::new(vec![], [PointSet::EMPTY]).unwrap();
        assert_eq!(e.opens(), &[PointSet::EMPTY]);
        assert_eq!(e.t0_failure(), None);
    }

    #[test]
    fn subspace_topology() {
        let s = sierpinski();
        let sub = s.subspace(PointSet::singleton(1));
        assert_eq!(sub.names(), &["1".to_string()]);
        assert_eq!(sub.opens().len(), 2);
    }

    #[test]
    fn order_topology_has_up_closures() {
        // chain 0 <= 1 <= 2
        let c = FiniteSpace::from_order(names(3), |a, b| a <= b);
        assert_eq!(c.closure(0), PointSet::full(3));
        assert_eq!(c.closure(2), PointSet::singleton(2));
        assert_eq!(c.opens().len(), 4);
    }
}
