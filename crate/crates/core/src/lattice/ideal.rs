use crate::pointset::{PointSet, MAX_POINTS};

use super::data::{bound_tables, verify_axioms, Axiom, AxiomReport, LatticeData};
use super::{Elem, LatticeError};

/// A finite ideal lattice: a finite lattice with an associative product that
/// distributes over joins, has the top as unit and the bottom as zero.
///
/// Every element of a finite lattice is compact, so the compactness
/// conditions hold trivially and [`is_compact`](Self::is_compact) is constant.
/// Join/meet tables, the prime elements and each element's `V(a)` are cached
/// at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteIdealLattice {
    data: LatticeData,
    join: Vec<Elem>,
    meet: Vec<Elem>,
    primes: Vec<Elem>,
    point_of: Vec<Option<usize>>,
    above: Vec<PointSet>,
}

/// Why an element fails to be prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimeFailure {
    IsTop,
    /// `ab <= p` but neither `a <= p` nor `b <= p`.
    Pair(Elem, Elem),
}

impl FiniteIdealLattice {
    pub fn from_data(data: LatticeData) -> Result<Self, LatticeError> {
        let report = verify_axioms(&data);
        if let Some((axiom, w)) = report.first_failure() {
            return Err(axiom_error(&data, axiom, w));
        }
        let (join, meet) = bound_tables(&data).expect("L1 verified");
        let n = data.len();
        let mut lattice = FiniteIdealLattice {
            data,
            join,
            meet,
            primes: Vec::new(),
            point_of: vec![None; n],
            above: Vec::new(),
        };
        let primes: Vec<Elem> = (0..n).filter(|&p| lattice.prime_failure(p).is_none()).collect();
        if primes.len() > MAX_POINTS {
            return Err(LatticeError::TooManyPrimes { count: primes.len() });
        }
        for (i, &p) in primes.iter().enumerate() {
            lattice.point_of[p] = Some(i);
        }
        lattice.above = (0..n)
            .map(|a| {
                primes
                    .iter()
                    .enumerate()
                    .filter(|&(_, &p)| lattice.leq(a, p))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        lattice.primes = primes;
        Ok(lattice)
    }

    pub fn data(&self) -> &LatticeData {
        &self.data
    }

    pub fn verify_axioms(&self) -> AxiomReport {
        verify_axioms(&self.data)
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.len()
    }

    pub fn names(&self) -> &[String] {
        &self.data.names
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.data.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<Elem> {
        self.data.names.iter().position(|n| n == name)
    }

    pub fn element(&self, name: &str) -> Result<Elem, LatticeError> {
        self.index_of(name)
            .ok_or_else(|| LatticeError::UnknownElement(name.to_string()))
    }

    pub fn top(&self) -> Elem {
        self.data.top
    }

    pub fn bottom(&self) -> Elem {
        self.data.bottom
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.data.leq(a, b)
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.data.mul(a, b)
    }

    pub fn join2(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.len() + b]
    }

    pub fn meet2(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.len() + b]
    }

    /// Supremum of a set; the empty join is the bottom.
    pub fn join<I: IntoIterator<Item = Elem>>(&self, elems: I) -> Elem {
        elems
            .into_iter()
            .fold(self.bottom(), |acc, x| self.join2(acc, x))
    }

    /// Infimum of a set; the empty meet is the top.
    pub fn meet<I: IntoIterator<Item = Elem>>(&self, elems: I) -> Elem {
        elems.into_iter().fold(self.top(), |acc, x| self.meet2(acc, x))
    }

    /// Always true: finite lattices are algebraic with every element compact.
    pub fn is_compact(&self, _a: Elem) -> bool {
        true
    }

    pub fn compact_elements(&self) -> Vec<Elem> {
        self.elements().filter(|&a| self.is_compact(a)).collect()
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let between = (0..n).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn prime_failure(&self, p: Elem) -> Option<PrimeFailure> {
        self.prime_failure_over(p, self.elements())
    }

    /// Primality tested only against products of the given elements.
    pub fn prime_failure_over<I>(&self, p: Elem, candidates: I) -> Option<PrimeFailure>
    where
        I: IntoIterator<Item = Elem>,
        I::IntoIter: Clone,
    {
        if p == self.top() {
            return Some(PrimeFailure::IsTop);
        }
        let candidates = candidates.into_iter();
        for a in candidates.clone() {
            if self.leq(a, p) {
                continue;
            }
            for b in candidates.clone() {
                if !self.leq(b, p) && self.leq(self.mul(a, b), p) {
                    return Some(PrimeFailure::Pair(a, b));
                }
            }
        }
        None
    }

    pub fn is_prime(&self, p: Elem) -> bool {
        self.point_of[p].is_some()
    }

    /// The prime elements, in element order. Point `i` of the spectrum is `spec_set()[i]`.
    pub fn spec_set(&self) -> &[Elem] {
        &self.primes
    }

    /// Position of a prime in [`spec_set`](Self::spec_set).
    pub fn point_of(&self, p: Elem) -> Option<usize> {
        self.point_of[p]
    }

    pub fn prime_at(&self, point: usize) -> Elem {
        self.primes[point]
    }

    /// `V(a)` as spectrum points.
    pub fn v_points(&self, a: Elem) -> PointSet {
        self.above[a]
    }

    /// `D(a)` as spectrum points; this is also `supp(a)`.
    pub fn d_points(&self, a: Elem) -> PointSet {
        self.above[a].complement(self.primes.len())
    }

    pub fn v_set(&self, a: Elem) -> Vec<Elem> {
        self.v_points(a).iter().map(|i| self.primes[i]).collect()
    }

    pub fn d_set(&self, a: Elem) -> Vec<Elem> {
        self.d_points(a).iter().map(|i| self.primes[i]).collect()
    }

    /// Meet of the primes indexed by `points`.
    pub fn meet_of_points(&self, points: PointSet) -> Elem {
        self.meet(points.iter().map(|i| self.primes[i]))
    }

    /// Some `b` with `bb <= a` but `b` not below `a`.
    pub fn semiprime_failure(&self, a: Elem) -> Option<Elem> {
        self.elements()
            .find(|&b| !self.leq(b, a) && self.leq(self.mul(b, b), a))
    }

    pub fn is_semiprime(&self, a: Elem) -> bool {
        self.semiprime_failure(a).is_none()
    }

    pub fn semiprimes(&self) -> Vec<Elem> {
        self.elements().filter(|&a| self.is_semiprime(a)).collect()
    }

    /// The smallest semiprime above `a`: the meet of `V(a)`.
    pub fn radical(&self, a: Elem) -> Elem {
        self.meet_of_points(self.v_points(a))
    }

    /// Checks that `set` is non-empty and closed under the product.
    pub fn check_multiplicative(&self, set: &[Elem]) -> Result<(), LatticeError> {
        if set.is_empty() {
            return Err(LatticeError::EmptyMultiplicativeSet);
        }
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &s in &sorted {
            for &t in &sorted {
                if sorted.binary_search(&self.mul(s, t)).is_err() {
                    return Err(LatticeError::NotMultiplicative {
                        a: self.name(s).to_string(),
                        b: self.name(t).to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    /// A prime above `a` avoiding the multiplicative set `set`.
    ///
    /// Returns `None` when some member of `set` lies below `a`. Otherwise the
    /// result is the smallest-index maximal element of
    /// `{x : a <= x and s is not below x for every s in set}`.
    pub fn prime_avoidance(&self, a: Elem, set: &[Elem]) -> Result<Option<Elem>, LatticeError> {
        self.check_multiplicative(set)?;
        if set.iter().any(|&s| self.leq(s, a)) {
            return Ok(None);
        }
        let avoiding: Vec<Elem> = self
            .elements()
            .filter(|&x| self.leq(a, x) && set.iter().all(|&s| !self.leq(s, x)))
            .collect();
        let maximal = avoiding
            .iter()
            .copied()
            .find(|&x| avoiding.iter().all(|&y| y == x || !self.leq(x, y)))
            .expect("non-empty finite set has a maximal element");
        Ok(Some(maximal))
    }
}

fn axiom_error(data: &LatticeData, axiom: Axiom, w: &[Elem]) -> LatticeError {
    let name = |i: usize| data.names[w[i]].clone();
    match axiom {
        Axiom::PartialOrder => LatticeError::NotAntisymmetric { a: name(0), b: name(1) },
        Axiom::Complete => LatticeError::MissingBound { a: name(0), b: name(1) },
        Axiom::Bounds => LatticeError::WrongBound {
            role: if w[0] == data.top && !data.leq(w[1], w[0]) { "top" } else { "bottom" },
            declared: name(0),
            witness: name(1),
        },
        Axiom::Associativity => LatticeError::NotAssociative { a: name(0), b: name(1), c: name(2) },
        Axiom::Distributivity => LatticeError::NotDistributive { a: name(0), b: name(1), c: name(2) },
        Axiom::Unit => LatticeError::UnitFailure { a: name(0) },
        Axiom::Annihilation => LatticeError::AnnihilationFailure { a: name(0) },
        Axiom::CompactlyGenerated | Axiom::CompactProducts => {
            unreachable!("compactness axioms are implied or skipped, never failed")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::parse_lattice;

    fn chain3() -> FiniteIdealLattice {
        let text = "elements: 0 a 1\nleq: 0<a a<1\n\
                    mul: 0*0=0 0*a=0 0*1=0 a*0=0 a*a=a a*1=a 1*0=0 1*a=a 1*1=1\n\
                    top: 1\nbottom: 0\n";
        FiniteIdealLattice::from_data(parse_lattice(text).unwrap()).unwrap()
    }

    fn powerset3() -> FiniteIdealLattice {
        // elements indexed by bitmask over {x,y,z}; product is intersection
        let names: Vec<String> = (0..8u32)
            .map(|m| {
                let s: String = ['x', 'y', 'z']
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| m & (1 << i) != 0)
                    .map(|(_, c)| *c)
                    .collect();
                if s.is_empty() { "e".into() } else { s }
            })
            .collect();
        let mut pairs = Vec::new();
        for a in 0..8usize {
            for b in 0..8usize {
                if a & !b == 0 {
                    pairs.push((a, b));
                }
            }
        }
        let mul = (0..64).map(|i| (i / 8) & (i % 8)).collect();
        FiniteIdealLattice::from_data(LatticeData::new(names, &pairs, mul, 7, 0)).unwrap()
    }

    #[test]
    fn chain_with_meet_product() {
        let l = chain3();
        assert_eq!(l.top(), 2);
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.spec_set(), &[0, 1]);
        assert!(l.verify_axioms().all_hold());
        assert_eq!(l.covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn empty_join_and_meet() {
        let l = chain3();
        assert_eq!(l.join([]), l.bottom());
        assert_eq!(l.meet([]), l.top());
        assert_eq!(l.join([0, 1]), 1);
        assert_eq!(l.meet([1, 2]), 1);
    }

    #[test]
    fn top_is_never_prime() {
        let l = chain3();
        assert_eq!(l.prime_failure(l.top()), Some(PrimeFailure::IsTop));
        assert!(!l.is_prime(l.top()));
    }

    #[test]
    fn powerset_primes_are_coatoms() {
        let l = powerset3();
        let names: Vec<&str> = l.spec_set().iter().map(|&p| l.name(p)).collect();
        assert_eq!(names, ["xy", "xz", "yz"]);
        assert_eq!(l.semiprimes().len(), 8);
        assert_eq!(l.radical(0), 0);
    }

    #[test]
    fn one_element_lattice() {
        let l = FiniteIdealLattice::from_data(LatticeData::new(vec!["0".into()], &[], vec![0], 0, 0))
            .unwrap();
        assert!(l.verify_axioms().all_hold());
        assert!(l.spec_set().is_empty());
        assert_eq!(l.radical(0), 0);
        assert!(l.is_semiprime(0));
    }

    #[test]
    fn prime_avoidance_cases() {
        let l = chain3();
        // a = bottom, S = {top}: maximal avoiding element is the coatom
        assert_eq!(l.prime_avoidance(0, &[2]).unwrap(), Some(1));
        // S contains an element below a
        assert_eq!(l.prime_avoidance(1, &[1, 2]).unwrap(), None);
        assert_eq!(
            l.prime_avoidance(0, &[]).unwrap_err(),
            LatticeError::EmptyMultiplicativeSet
        );
        let p = powerset3();
        // {x} and {y} multiply to the empty set, which is not in S
        let err = p.prime_avoidance(0, &[1, 2]).unwrap_err();
        assert_eq!(err, LatticeError::NotMultiplicative { a: "x".into(), b: "y".into() });
    }

    #[test]
    fn distributivity_failure_has_witness() {
        // diamond 0 < p,q < 1 with a product that breaks a(b v c) = ab v ac
        let names = ["0", "p", "q", "1"].map(String::from).to_vec();
        let pairs = [(0, 1), (0, 2), (1, 3), (2, 3)];
        #[rustfmt::skip]
        let mul = vec![
            0, 0, 0, 0,
            0, 1, 0, 1,
            0, 0, 0, 2,
            0, 1, 2, 3,
        ];
        let data = LatticeData::new(names, &pairs, mul, 3, 0);
        let report = verify_axioms(&data);
        // (p v q)q = 1q = q, but pq v qq = 0 v 0 = 0
        assert_eq!(report.get(Axiom::Distributivity), &crate::report::Check::Fail(vec![1, 2, 2]));
        assert!(matches!(
            FiniteIdealLattice::from_data(data),
            Err(LatticeError::NotDistributive { .. })
        ));
    }

    #[test]
    fn missing_join_reported_as_l1() {
        // 0 < a, b with a and b maximal: no join, no top
        let names = ["0", "a", "b", "c"].map(String::from).to_vec();
        let pairs = [(0, 1), (0, 2), (0, 3), (3, 1), (3, 2)];
        let mul = vec![0; 16];
        let report = verify_axioms(&LatticeData::new(names, &pairs, mul, 1, 0));
        assert_eq!(report.get(Axiom::Complete), &crate::report::Check::Fail(vec![1, 2]));
        assert!(!report.get(Axiom::CompactlyGenerated).holds());
        assert!(!report.get(Axiom::CompactProducts).holds());
    }

    #[test]
    fn antisymmetry_failure() {
        let names = ["a", "b"].map(String::from).to_vec();
        let data = LatticeData::new(names, &[(0, 1), (1, 0)], vec![0, 1, 1, 1], 1, 0);
        assert!(matches!(
            FiniteIdealLattice::from_data(data),
            Err(LatticeError::NotAntisymmetric { .. })
        ));
    }
}
