//! Exhaustive enumeration of hom-sets for small instances: lattice
//! morphisms, spectrum and support data, and continuous maps.

use crate::lattice::{Elem, FiniteIdealLattice};
use crate::pointset::PointSet;
use crate::topology::{ContinuousMap, FiniteSpace};

use super::morphism::LatticeMorphism;

/// The constraint `value[result] = op(value[a], value[b])`.
#[derive(Clone, Copy)]
enum Rule {
    Join(Elem, Elem, Elem),
    Mul(Elem, Elem, Elem),
}

struct Search<'s, T> {
    values: &'s [T],
    fixed: Vec<Option<T>>,
    /// Rules to check once element `k` (the largest index involved) is assigned.
    rules: Vec<Vec<Rule>>,
    join: &'s dyn Fn(T, T) -> T,
    mul: &'s dyn Fn(T, T) -> T,
}

impl<T: Copy + PartialEq> Search<'_, T> {
    fn run(&self, current: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        let k = current.len();
        if k == self.fixed.len() {
            out.push(current.clone());
            return;
        }
        let candidates: Vec<T> = match self.fixed[k] {
            Some(v) => vec![v],
            None => self.values.to_vec(),
        };
        for v in candidates {
            current.push(v);
            let ok = self.rules[k].iter().all(|rule| match *rule {
                Rule::Join(a, b, r) => current[r] == (self.join)(current[a], current[b]),
                Rule::Mul(a, b, r) => current[r] == (self.mul)(current[a], current[b]),
            });
            if ok {
                self.run(current, out);
            }
            current.pop();
        }
    }
}

/// Every assignment `L -> values` sending bottom and top to the given values
/// and joins and products to `join` and `mul`.
fn homomorphisms<T: Copy + PartialEq>(
    lattice: &FiniteIdealLattice,
    values: &[T],
    bottom: T,
    top: T,
    join: &dyn Fn(T, T) -> T,
    mul: &dyn Fn(T, T) -> T,
) -> Vec<Vec<T>> {
    let n = lattice.len();
    let mut fixed = vec![None; n];
    fixed[lattice.bottom()] = Some(bottom);
    fixed[lattice.top()] = Some(top);
    if lattice.bottom() == lattice.top() && bottom != top {
        return Vec::new();
    }
    let mut rules = vec![Vec::new(); n];
    for a in lattice.elements() {
        for b in lattice.elements() {
            let j = lattice.join2(a, b);
            rules[a.max(b).max(j)].push(Rule::Join(a, b, j));
            let m = lattice.mul(a, b);
            rules[a.max(b).max(m)].push(Rule::Mul(a, b, m));
        }
    }
    let search = Search {
        values,
        fixed,
        rules,
        join,
        mul,
    };
    let mut out = Vec::new();
    search.run(&mut Vec::with_capacity(n), &mut out);
    out
}

/// All morphisms `source -> target`.
pub fn lattice_morphisms<'a>(
    source: &'a FiniteIdealLattice,
    target: &'a FiniteIdealLattice,
) -> Vec<LatticeMorphism<'a>> {
    let values: Vec<Elem> = target.elements().collect();
    let join = |a, b| target.join2(a, b);
    let mul = |a, b| target.mul(a, b);
    homomorphisms(source, &values, target.bottom(), target.top(), &join, &mul)
        .into_iter()
        .map(|map| LatticeMorphism::new(source, target, map))
        .collect()
}

/// All assignments into `family` turning joins into unions, products into
/// intersections, bottom into the empty set and top into `full`.
pub fn set_assignments(lattice: &FiniteIdealLattice, family: &[PointSet], full: PointSet) -> Vec<Vec<PointSet>> {
    homomorphisms(
        lattice,
        family,
        PointSet::EMPTY,
        full,
        &|a: PointSet, b| a.union(b),
        &|a: PointSet, b| a.intersection(b),
    )
}

/// All spectrum data `delta` on `space`.
pub fn spectrum_data(lattice: &FiniteIdealLattice, space: &FiniteSpace) -> Vec<Vec<PointSet>> {
    set_assignments(lattice, space.opens(), space.full())
}

/// All support data `sigma` on `space`.
pub fn support_data(lattice: &FiniteIdealLattice, space: &FiniteSpace) -> Vec<Vec<PointSet>> {
    set_assignments(lattice, &space.closed_sets(), space.full())
}

/// All continuous maps `source -> target`, in lexicographic order of images.
pub fn continuous_maps(source: &FiniteSpace, target: &FiniteSpace) -> Vec<ContinuousMap> {
    let (n, k) = (source.len(), target.len());
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(ContinuousMap::new(Vec::new(), 0));
        }
        return out;
    }
    let mut images = vec![0usize; n];
    loop {
        let f = ContinuousMap::new(images.clone(), k);
        if f.is_continuous(source, target) {
            out.push(f);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            images[i] += 1;
            if images[i] < k {
                break;
            }
            images[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjunction::{verify_morphism, SpectrumDatum};
    use crate::lattice::build_lattice;
    use crate::topology::{open_lattice, zariski_spectrum};

    const CHAIN: &str = "elements: 0 m 1\nleq: 0<m<1\n\
        mul: 0*0=0 0*m=0 0*1=0 m*0=0 m*m=m m*1=m 1*0=0 1*m=m 1*1=1\ntop: 1\nbottom: 0\n";

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn morphisms_match_brute_force() {
        let l = build_lattice(CHAIN).unwrap();
        let m = open_lattice(&FiniteSpace::discrete(names(2))).unwrap().lattice;
        let found: Vec<Vec<Elem>> = lattice_morphisms(&l, &m).iter().map(|p| p.map().to_vec()).collect();
        let mut brute = Vec::new();
        for code in 0..m.len().pow(l.len() as u32) {
            let map: Vec<Elem> = (0..l.len()).map(|i| code / m.len().pow(i as u32) % m.len()).collect();
            if verify_morphism(&LatticeMorphism::new(&l, &m, map.clone())).is_valid() {
                brute.push(map);
            }
        }
        brute.sort();
        let mut sorted = found.clone();
        sorted.sort();
        assert_eq!(sorted, brute);
        // 0 -> [], 1 -> [0|1], m -> any of the four opens that is idempotent: all are
        assert_eq!(found.len(), 4);
    }

    #[test]
    fn spectrum_data_are_valid() {
        let l = build_lattice(CHAIN).unwrap();
        let x = FiniteSpace::discrete(names(2));
        let data = spectrum_data(&l, &x);
        assert_eq!(data.len(), 4);
        for delta in data {
            assert!(SpectrumDatum::new(&l, &x, delta).failure().is_none());
        }
    }

    #[test]
    fn continuous_maps_into_sierpinski() {
        let l = build_lattice(CHAIN).unwrap();
        let s = zariski_spectrum(&l);
        // maps from a 2-point discrete space: all 4
        assert_eq!(continuous_maps(&FiniteSpace::discrete(names(2)), &s).len(), 4);
        // from the indiscrete space only the constant maps
        assert_eq!(continuous_maps(&FiniteSpace::indiscrete(names(2)), &s).len(), 2);
    }
}
