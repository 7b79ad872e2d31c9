use crate::report::Check;

use super::Elem;

/// Raw lattice description: an order (saturated to its reflexive-transitive
/// closure), a full product table and the declared top and bottom.
///
/// Nothing beyond index ranges is validated here; see [`verify_axioms`] and
/// [`super::FiniteIdealLattice::from_data`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeData {
    pub(crate) names: Vec<String>,
    pub(crate) leq: Vec<bool>,
    pub(crate) mul: Vec<Elem>,
    pub(crate) top: Elem,
    pub(crate) bottom: Elem,
}

impl LatticeData {
    /// `pairs` may be covering pairs or any generating set of the order; the
    /// reflexive-transitive closure is taken. `mul` is row-major: `mul[a * n + b] = ab`.
    pub fn new(
        names: Vec<String>,
        pairs: &[(Elem, Elem)],
        mul: Vec<Elem>,
        top: Elem,
        bottom: Elem,
    ) -> Self {
        let n = names.len();
        assert!(n > 0, "a lattice has at least one element");
        assert_eq!(mul.len(), n * n, "product table must be n x n");
        assert!(top < n && bottom < n);
        assert!(mul.iter().all(|&c| c < n), "product value out of range");
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
        }
        for &(a, b) in pairs {
            assert!(a < n && b < n, "order pair out of range");
            leq[a * n + b] = true;
        }
        transitive_closure(&mut leq, n);
        LatticeData {
            names,
            leq,
            mul,
            top,
            bottom,
        }
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

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.len() + b]
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.len() + b]
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }
}

pub(crate) fn transitive_closure(rel: &mut [bool], n: usize) {
    for k in 0..n {
        for i in 0..n {
            if !rel[i * n + k] {
                continue;
            }
            for j in 0..n {
                if rel[k * n + j] {
                    rel[i * n + j] = true;
                }
            }
        }
    }
}

/// The least element of `candidates` under `leq`, if one exists.
pub(crate) fn least(candidates: &[Elem], leq: impl Fn(Elem, Elem) -> bool) -> Option<Elem> {
    candidates
        .iter()
        .copied()
        .find(|&u| candidates.iter().all(|&v| leq(u, v)))
}

/// Binary join and meet tables, or the first pair lacking one.
pub(crate) fn bound_tables(data: &LatticeData) -> Result<(Vec<Elem>, Vec<Elem>), (Elem, Elem)> {
    let n = data.len();
    let mut join = vec![0; n * n];
    let mut meet = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let uppers: Vec<Elem> = (0..n).filter(|&u| data.leq(a, u) && data.leq(b, u)).collect();
            let lowers: Vec<Elem> = (0..n).filter(|&l| data.leq(l, a) && data.leq(l, b)).collect();
            let j = least(&uppers, |x, y| data.leq(x, y));
            let m = least(&lowers, |x, y| data.leq(y, x));
            match (j, m) {
                (Some(j), Some(m)) => {
                    join[a * n + b] = j;
                    meet[a * n + b] = m;
                }
                _ => return Err((a, b)),
            }
        }
    }
    Ok((join, meet))
}

/// The axioms checked for a finite ideal lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// The order relation is antisymmetric (reflexivity and transitivity are imposed by saturation).
    PartialOrder,
    /// (L1) every subset has a supremum and an infimum.
    Complete,
    /// The declared top and bottom are the greatest and least elements.
    Bounds,
    /// (L2) compactly generated.
    CompactlyGenerated,
    Associativity,
    /// (L3) the product distributes over binary joins on both sides.
    Distributivity,
    /// (L4) the top is compact and a two-sided unit.
    Unit,
    /// bottom is a two-sided zero: the empty-join instance of (L3).
    Annihilation,
    /// (L5) products of compact elements are compact.
    CompactProducts,
}

impl Axiom {
    pub fn label(self) -> &'static str {
        match self {
            Axiom::PartialOrder => "partial-order",
            Axiom::Complete => "L1",
            Axiom::Bounds => "bounds",
            Axiom::CompactlyGenerated => "L2",
            Axiom::Associativity => "associativity",
            Axiom::Distributivity => "L3",
            Axiom::Unit => "L4",
            Axiom::Annihilation => "annihilation",
            Axiom::CompactProducts => "L5",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Axiom::PartialOrder => "order is antisymmetric",
            Axiom::Complete => "every pair has a join and a meet",
            Axiom::Bounds => "declared top/bottom are the greatest/least elements",
            Axiom::CompactlyGenerated => "every element is a join of compact elements",
            Axiom::Associativity => "(ab)c = a(bc)",
            Axiom::Distributivity => "a(b v c) = ab v ac and (a v b)c = ac v bc",
            Axiom::Unit => "1a = a = a1",
            Axiom::Annihilation => "0a = 0 = a0",
            Axiom::CompactProducts => "products of compact elements are compact",
        }
    }
}

const FINITE_COMPACT: &str = "every element of a finite complete lattice is compact";

/// Pass/fail per axiom, witnesses as element tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub entries: Vec<(Axiom, Check<Vec<Elem>>)>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|(_, c)| c.holds())
    }

    pub fn get(&self, axiom: Axiom) -> &Check<Vec<Elem>> {
        &self
            .entries
            .iter()
            .find(|(a, _)| *a == axiom)
            .expect("every axiom is reported")
            .1
    }

    /// First failing axiom in report order.
    pub fn first_failure(&self) -> Option<(Axiom, &[Elem])> {
        self.entries
            .iter()
            .find_map(|(a, c)| c.witness().map(|w| (*a, w.as_slice())))
    }
}

/// Checks every axiom of a finite ideal lattice, including the two that hold
/// automatically at finite size. Witnesses are lexicographically smallest.
pub fn verify_axioms(data: &LatticeData) -> AxiomReport {
    let n = data.len();
    let mut entries = Vec::with_capacity(9);

    let antisym = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| a != b && data.leq(a, b) && data.leq(b, a));
    let order_ok = antisym.is_none();
    entries.push((
        Axiom::PartialOrder,
        Check::from_witness(antisym.map(|(a, b)| vec![a, b])),
    ));

    let tables = if order_ok {
        match bound_tables(data) {
            Ok(t) => {
                entries.push((Axiom::Complete, Check::Pass));
                Some(t)
            }
            Err((a, b)) => {
                entries.push((Axiom::Complete, Check::Fail(vec![a, b])));
                None
            }
        }
    } else {
        entries.push((Axiom::Complete, Check::Skipped("order is not a partial order")));
        None
    };

    if order_ok {
        let bad_top = (0..n).find(|&x| !data.leq(x, data.top)).map(|x| vec![data.top, x]);
        let bad_bottom = (0..n)
            .find(|&x| !data.leq(data.bottom, x))
            .map(|x| vec![data.bottom, x]);
        entries.push((Axiom::Bounds, Check::from_witness(bad_top.or(bad_bottom))));
    } else {
        entries.push((Axiom::Bounds, Check::Skipped("order is not a partial order")));
    }

    if tables.is_some() {
        entries.push((Axiom::CompactlyGenerated, Check::Implied(FINITE_COMPACT)));
    } else {
        entries.push((Axiom::CompactlyGenerated, Check::Skipped("L1 does not hold")));
    }

    let mut assoc = None;
    'assoc: for a in 0..n {
        for b in 0..n {
            let ab = data.mul(a, b);
            for c in 0..n {
                if data.mul(ab, c) != data.mul(a, data.mul(b, c)) {
                    assoc = Some(vec![a, b, c]);
                    break 'assoc;
                }
            }
        }
    }
    entries.push((Axiom::Associativity, Check::from_witness(assoc)));

    match &tables {
        Some((join, _)) => {
            let j = |x: Elem, y: Elem| join[x * n + y];
            let mut dist = None;
            'dist: for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        let left = data.mul(a, j(b, c)) == j(data.mul(a, b), data.mul(a, c));
                        let right = data.mul(j(a, b), c) == j(data.mul(a, c), data.mul(b, c));
                        if !(left && right) {
                            dist = Some(vec![a, b, c]);
                            break 'dist;
                        }
                    }
                }
            }
            entries.push((Axiom::Distributivity, Check::from_witness(dist)));
        }
        None => entries.push((Axiom::Distributivity, Check::Skipped("joins are not defined"))),
    }

    let unit = (0..n).find(|&a| data.mul(data.top, a) != a || data.mul(a, data.top) != a);
    entries.push((Axiom::Unit, Check::from_witness(unit.map(|a| vec![a]))));

    let annihilation = (0..n)
        .find(|&a| data.mul(data.bottom, a) != data.bottom || data.mul(a, data.bottom) != data.bottom);
    entries.push((Axiom::Annihilation, Check::from_witness(annihilation.map(|a| vec![a]))));

    if tables.is_some() {
        entries.push((Axiom::CompactProducts, Check::Implied(FINITE_COMPACT)));
    } else {
        entries.push((Axiom::CompactProducts, Check::Skipped("L1 does not hold")));
    }

    AxiomReport { entries }
}
