use crate::lattice::{Elem, FiniteIdealLattice};

/// Why a map between lattices is not an isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoFailure {
    NotBijective,
    /// `a <= b` in the source differs from `f(a) <= f(b)` in the target.
    Order(Elem, Elem),
    Product(Elem, Elem),
}

/// Checks that `map` is a bijection that preserves and reflects the order
/// and preserves products.
pub fn isomorphism_failure(l: &FiniteIdealLattice, m: &FiniteIdealLattice, map: &[Elem]) -> Option<IsoFailure> {
    if l.len() != m.len() || map.len() != l.len() {
        return Some(IsoFailure::NotBijective);
    }
    let mut hit = vec![false; m.len()];
    for &b in map {
        if b >= m.len() || std::mem::replace(&mut hit[b], true) {
            return Some(IsoFailure::NotBijective);
        }
    }
    for a in l.elements() {
        for b in l.elements() {
            if l.leq(a, b) != m.leq(map[a], map[b]) {
                return Some(IsoFailure::Order(a, b));
            }
        }
    }
    for a in l.elements() {
        for b in l.elements() {
            if map[l.mul(a, b)] != m.mul(map[a], map[b]) {
                return Some(IsoFailure::Product(a, b));
            }
        }
    }
    None
}

/// Some isomorphism `l -> m`, if one exists (backtracking search).
pub fn find_isomorphism(l: &FiniteIdealLattice, m: &FiniteIdealLattice) -> Option<Vec<Elem>> {
    if l.len() != m.len() || l.spec_set().len() != m.spec_set().len() {
        return None;
    }
    let down = |lat: &FiniteIdealLattice, a: Elem| lat.elements().filter(|&b| lat.leq(b, a)).count();
    let mut current = Vec::with_capacity(l.len());
    let mut used = vec![false; m.len()];
    fn go(
        l: &FiniteIdealLattice,
        m: &FiniteIdealLattice,
        down: &dyn Fn(&FiniteIdealLattice, Elem) -> usize,
        current: &mut Vec<Elem>,
        used: &mut [bool],
    ) -> bool {
        let k = current.len();
        if k == l.len() {
            return true;
        }
        for c in m.elements() {
            if used[c] || down(l, k) != down(m, c) || l.is_prime(k) != m.is_prime(c) {
                continue;
            }
            current.push(c);
            let ok = (0..=k).all(|a| {
                l.leq(a, k) == m.leq(current[a], c)
                    && l.leq(k, a) == m.leq(c, current[a])
                    && [(a, k), (k, a)].iter().all(|&(x, y)| {
                        let p = l.mul(x, y);
                        p > k || current[p] == m.mul(current[x], current[y])
                    })
            }) && (0..k).all(|a| {
                (0..k).all(|b| {
                    let p = l.mul(a, b);
                    p != k || c == m.mul(current[a], current[b])
                })
            });
            if ok {
                used[c] = true;
                if go(l, m, down, current, used) {
                    return true;
                }
                used[c] = false;
            }
            current.pop();
        }
        false
    }
    go(l, m, &down, &mut current, &mut used).then_some(current)
}
