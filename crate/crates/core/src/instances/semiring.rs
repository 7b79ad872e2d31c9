use std::collections::{BTreeMap, VecDeque};

use crate::lattice::{Elem, FiniteIdealLattice, LatticeData};
use crate::parse::{lookup, parse_names, parse_table, Sections};
use crate::pointset::{PointSet, MAX_POINTS};

use super::InstanceError;

/// A finite semiring: commutative associative addition with neutral `zero`,
/// associative multiplication with two-sided unit `one`, both distributive laws.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemiring {
    names: Vec<String>,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
}

fn law(law: &'static str, names: &[String], witness: &[usize]) -> InstanceError {
    InstanceError::SemiringLaw {
        law,
        witness: witness.iter().map(|&x| names[x].clone()).collect(),
    }
}

impl FiniteSemiring {
    /// Tables are row-major. Fails with the lexicographically smallest witness.
    pub fn new(
        names: Vec<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> Result<Self, InstanceError> {
        let n = names.len();
        if n == 0 {
            return Err(InstanceError::EmptySemiring);
        }
        if n > MAX_POINTS {
            return Err(InstanceError::TooLarge { size: n, max: MAX_POINTS });
        }
        assert_eq!(add.len(), n * n);
        assert_eq!(mul.len(), n * n);
        assert!(zero < n && one < n);
        assert!(add.iter().chain(&mul).all(|&x| x < n));
        let s = FiniteSemiring { names, add, mul, zero, one };
        s.check()?;
        Ok(s)
    }

    fn check(&self) -> Result<(), InstanceError> {
        let n = self.len();
        let names = &self.names;
        let (p, m) = (|a, b| self.add(a, b), |a, b| self.mul(a, b));
        for a in 0..n {
            if p(self.zero, a) != a || p(a, self.zero) != a {
                return Err(law("zero is neutral for addition", names, &[a]));
            }
            if m(self.one, a) != a || m(a, self.one) != a {
                return Err(law("one is a unit for multiplication", names, &[a]));
            }
            for b in 0..n {
                if p(a, b) != p(b, a) {
                    return Err(law("addition is commutative", names, &[a, b]));
                }
                for c in 0..n {
                    if p(p(a, b), c) != p(a, p(b, c)) {
                        return Err(law("addition is associative", names, &[a, b, c]));
                    }
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(law("multiplication is associative", names, &[a, b, c]));
                    }
                    if m(a, p(b, c)) != p(m(a, b), m(a, c)) || m(p(a, b), c) != p(m(a, c), m(b, c)) {
                        return Err(law("multiplication distributes over addition", names, &[a, b, c]));
                    }
                }
            }
        }
        Ok(())
    }

    /// `Z/n` with names `0..n-1`.
    pub fn zn(n: usize) -> Result<Self, InstanceError> {
        if n == 0 {
            return Err(InstanceError::ZeroModulus);
        }
        let names = (0..n).map(|i| i.to_string()).collect();
        let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        let mul = (0..n * n).map(|i| (i / n) * (i % n) % n).collect();
        FiniteSemiring::new(names, add, mul, 0, 1 % n)
    }

    /// `{0, 1}` with `1 + 1 = 1`.
    pub fn boolean() -> Self {
        let names = vec!["0".to_string(), "1".to_string()];
        FiniteSemiring::new(names, vec![0, 1, 1, 1], vec![0, 0, 0, 1], 0, 1).expect("boolean semiring")
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

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.len() + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b]
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.len()).all(|a| (0..self.len()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Whether `set` contains zero, is closed under sums and absorbs products on both sides.
    pub fn is_ideal(&self, set: PointSet) -> bool {
        let all = 0..self.len();
        set.contains(self.zero)
            && set.iter().all(|x| {
                set.iter().all(|y| set.contains(self.add(x, y)))
                    && all.clone().all(|a| set.contains(self.mul(x, a)) && set.contains(self.mul(a, x)))
            })
    }

    /// The smallest ideal containing `set`.
    pub fn ideal_closure(&self, set: PointSet) -> PointSet {
        let mut ideal = set;
        ideal.insert(self.zero);
        loop {
            let mut next = ideal;
            for x in ideal.iter() {
                for y in ideal.iter() {
                    next.insert(self.add(x, y));
                }
                for a in 0..self.len() {
                    next.insert(self.mul(x, a));
                    next.insert(self.mul(a, x));
                }
            }
            if next == ideal {
                return ideal;
            }
            ideal = next;
        }
    }

    /// The ideal generated by all products `xy` with `x` in `i`, `y` in `j`.
    pub fn ideal_product(&self, i: PointSet, j: PointSet) -> PointSet {
        let products = i.iter().flat_map(|x| j.iter().map(move |y| (x, y)));
        self.ideal_closure(products.map(|(x, y)| self.mul(x, y)).collect())
    }

    pub fn to_text(&self) -> String {
        let n = self.len();
        let mut out = format!("elements: {}\n", self.names.join(" "));
        for (key, op, table) in [("add", '+', &self.add), ("mul", '*', &self.mul)] {
            out.push_str(key);
            out.push(':');
            for a in 0..n {
                out.push_str("\n ");
                for b in 0..n {
                    out.push_str(&format!(" {}{op}{}={}", self.names[a], self.names[b], self.names[table[a * n + b]]));
                }
            }
            out.push('\n');
        }
        out.push_str(&format!("zero: {}\none: {}\n", self.names[self.zero], self.names[self.one]));
        out
    }
}

/// Parses semiring source text: `elements:`, `add: a+b=c ...`, `mul: a*b=c ...`, `zero:`, `one:`.
pub fn parse_semiring(text: &str) -> Result<FiniteSemiring, InstanceError> {
    let mut sections = Sections::parse(text, &["elements", "add", "mul", "zero", "one"])?;
    let elements = sections.require("elements")?;
    let names = parse_names(&elements, "element")?;
    if names.len() > MAX_POINTS {
        return Err(InstanceError::TooLarge { size: names.len(), max: MAX_POINTS });
    }
    let add = parse_table(&sections.require("add")?, &names, '+', "add")?;
    let mul = parse_table(&sections.require("mul")?, &names, '*', "mul")?;
    let zero = sections.single("zero")?;
    let zero = lookup(&names, &zero.text, zero.line, "element")?;
    let one = sections.single("one")?;
    let one = lookup(&names, &one.text, one.line, "element")?;
    FiniteSemiring::new(names, add, mul, zero, one)
}

/// The ideal lattice of a semiring together with the dictionary between
/// lattice elements and ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiringIdealLattice {
    pub lattice: FiniteIdealLattice,
    /// `ideals[a]` is the ideal represented by element `a`.
    pub ideals: Vec<PointSet>,
    /// A smallest generating set of each ideal (first found in breadth-first order).
    pub generators: Vec<Vec<usize>>,
}

impl SemiringIdealLattice {
    pub fn element_of(&self, ideal: PointSet) -> Option<Elem> {
        self.ideals.iter().position(|&i| i == ideal)
    }

    /// The lattice element of the principal ideal generated by `x`.
    pub fn principal(&self, semiring: &FiniteSemiring, x: usize) -> Elem {
        self.element_of(semiring.ideal_closure(PointSet::singleton(x)))
            .expect("every ideal is enumerated")
    }
}

/// Every ideal, found by closing ideals under adjoining one more generator.
fn enumerate_ideals(semiring: &FiniteSemiring) -> BTreeMap<(usize, u64), (PointSet, Vec<usize>)> {
    let bottom = semiring.ideal_closure(PointSet::EMPTY);
    let mut found = BTreeMap::new();
    found.insert(bottom.sort_key(), (bottom, Vec::new()));
    let mut queue = VecDeque::from([(bottom, Vec::new())]);
    while let Some((ideal, gens)) = queue.pop_front() {
        for x in 0..semiring.len() {
            if ideal.contains(x) {
                continue;
            }
            let mut with_x = ideal;
            with_x.insert(x);
            let next = semiring.ideal_closure(with_x);
            if let std::collections::btree_map::Entry::Vacant(slot) = found.entry(next.sort_key()) {
                let mut g: Vec<usize> = gens.clone();
                g.push(x);
                slot.insert((next, g.clone()));
                queue.push_back((next, g));
            }
        }
    }
    found
}

fn ideal_name(semiring: &FiniteSemiring, gens: &[usize]) -> String {
    let shown: Vec<&str> = if gens.is_empty() {
        vec![semiring.name(semiring.zero())]
    } else {
        gens.iter().map(|&g| semiring.name(g)).collect()
    };
    format!("({})", shown.join("|"))
}

/// All ideals ordered by inclusion with the ideal product. Elements are
/// sorted by size, so the smallest ideal comes first and the whole semiring last.
pub fn semiring_ideal_lattice(semiring: &FiniteSemiring) -> Result<SemiringIdealLattice, InstanceError> {
    let found = enumerate_ideals(semiring);
    let (ideals, generators): (Vec<PointSet>, Vec<Vec<usize>>) = found.into_values().unzip();
    let n = ideals.len();
    let index = |set: PointSet| ideals.iter().position(|&i| i == set).expect("closed under products");
    let mut pairs = Vec::new();
    let mut mul = Vec::with_capacity(n * n);
    for (a, &i) in ideals.iter().enumerate() {
        for (b, &j) in ideals.iter().enumerate() {
            if i.is_subset(j) {
                pairs.push((a, b));
            }
            mul.push(index(semiring.ideal_product(i, j)));
        }
    }
    let names = generators.iter().map(|g| ideal_name(semiring, g)).collect();
    let data = LatticeData::new(names, &pairs, mul, n - 1, 0);
    let lattice = FiniteIdealLattice::from_data(data)?;
    Ok(SemiringIdealLattice {
        lattice,
        ideals,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle: all subsets filtered by the ideal conditions.
    fn brute_ideals(s: &FiniteSemiring) -> Vec<PointSet> {
        let mut v: Vec<PointSet> = PointSet::full(s.len()).subsets().filter(|&x| s.is_ideal(x)).collect();
        v.sort_by_key(|x| x.sort_key());
        v
    }

    #[test]
    fn z12_has_six_ideals() {
        let s = FiniteSemiring::zn(12).unwrap();
        let l = semiring_ideal_lattice(&s).unwrap();
        assert_eq!(l.ideals, brute_ideals(&s));
        assert_eq!(l.lattice.len(), 6);
        let names: Vec<&str> = l.lattice.names().iter().map(String::as_str).collect();
        assert_eq!(names, ["(0)", "(6)", "(4)", "(3)", "(2)", "(1)"]);
        let primes: Vec<&str> = l.lattice.spec_set().iter().map(|&p| l.lattice.name(p)).collect();
        assert_eq!(primes, ["(3)", "(2)"]);
    }

    #[test]
    fn boolean_semiring_is_a_two_chain() {
        let s = FiniteSemiring::boolean();
        let l = semiring_ideal_lattice(&s).unwrap();
        assert_eq!(l.ideals, brute_ideals(&s));
        assert_eq!(l.lattice.len(), 2);
    }

    #[test]
    fn z4_radical_of_zero() {
        let s = FiniteSemiring::zn(4).unwrap();
        let l = semiring_ideal_lattice(&s).unwrap();
        let lat = &l.lattice;
        assert_eq!(lat.len(), 3);
        assert_eq!(lat.name(lat.radical(lat.bottom())), "(2)");
    }

    #[test]
    fn text_round_trip() {
        let s = FiniteSemiring::zn(3).unwrap();
        assert_eq!(parse_semiring(&s.to_text()).unwrap(), s);
    }

    #[test]
    fn rejects_broken_laws() {
        let names = vec!["0".to_string(), "1".to_string()];
        // 1 + 1 = 0 but 1 * 1 = 0: one is not a unit
        let err = FiniteSemiring::new(names, vec![0, 1, 1, 0], vec![0, 0, 0, 0], 0, 1).unwrap_err();
        assert!(matches!(err, InstanceError::SemiringLaw { law: "one is a unit for multiplication", .. }));
        assert!(matches!(FiniteSemiring::zn(0), Err(InstanceError::ZeroModulus)));
    }

    #[test]
    fn z1_is_the_one_element_lattice() {
        let s = FiniteSemiring::zn(1).unwrap();
        let l = semiring_ideal_lattice(&s).unwrap();
        assert_eq!(l.lattice.len(), 1);
        assert!(l.lattice.spec_set().is_empty());
    }
}
