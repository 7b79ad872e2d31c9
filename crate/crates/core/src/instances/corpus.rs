//! Standard families of small lattices and spaces used by the checks.

use crate::lattice::FiniteIdealLattice;
use crate::topology::{open_lattice, FiniteSpace};

use super::{closure_sublattice, divisor_lattice, semiring_ideal_lattice, ClosureSystem, FiniteSemiring};

const ATOMS: [&str; 8] = ["x", "y", "z", "u", "v", "w", "s", "t"];

/// Subsets of a `k`-element set (atoms `x, y, z, u, ...`) with intersection as product.
pub fn powerset_lattice(k: usize) -> FiniteIdealLattice {
    assert!(k <= ATOMS.len(), "at most {} atoms", ATOMS.len());
    let names = ATOMS[..k].iter().map(|s| s.to_string()).collect();
    open_lattice(&FiniteSpace::discrete(names))
        .expect("discrete spaces are spectral")
        .lattice
}

fn point_names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Every preorder on `n` labelled points, as a relation matrix.
fn preorders(n: usize) -> Vec<Vec<bool>> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    assert!(off.len() < 32, "too many points to enumerate");
    let mut out = Vec::new();
    for mask in 0u32..(1 << off.len()) {
        let mut rel = vec![false; n * n];
        for a in 0..n {
            rel[a * n + a] = true;
        }
        for (i, &(a, b)) in off.iter().enumerate() {
            if mask >> i & 1 == 1 {
                rel[a * n + b] = true;
            }
        }
        let transitive = (0..n).all(|a| {
            (0..n).all(|b| !rel[a * n + b] || (0..n).all(|c| !rel[b * n + c] || rel[a * n + c]))
        });
        if transitive {
            out.push(rel);
        }
    }
    out
}

/// Every topology on `n` labelled points `0..n` (finite topologies are
/// exactly the Alexandrov topologies of preorders).
pub fn all_topologies(n: usize) -> Vec<FiniteSpace> {
    preorders(n)
        .into_iter()
        .map(|rel| FiniteSpace::from_order(point_names(n), |a, b| rel[a * n + b]))
        .collect()
}

/// Every T0 topology on `n` labelled points; for finite spaces these are
/// exactly the spectral ones.
pub fn t0_spaces(n: usize) -> Vec<FiniteSpace> {
    all_topologies(n)
        .into_iter()
        .filter(|s| s.t0_failure().is_none())
        .collect()
}

/// A named lattice of the standard corpus.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub lattice: FiniteIdealLattice,
}

fn entry(name: String, lattice: FiniteIdealLattice) -> CorpusEntry {
    CorpusEntry { name, lattice }
}

/// Divisor lattices for `n = 1..=60`, powerset lattices on up to five atoms,
/// open lattices of every T0 space on up to four points, ideal lattices of
/// `Z/n` for `n = 1..=12` and of the boolean semiring, and the semiprime
/// sublattice of the divisor lattice of 12.
pub fn standard_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 1..=60u64 {
        out.push(entry(format!("divisor({n})"), divisor_lattice(n).expect("n > 0")));
    }
    for k in 0..=5 {
        out.push(entry(format!("powerset({k})"), powerset_lattice(k)));
    }
    for n in 0..=4 {
        for (i, space) in t0_spaces(n).iter().enumerate() {
            let lattice = open_lattice(space).expect("T0 finite spaces are spectral").lattice;
            out.push(entry(format!("open(t0-{n}-{i})"), lattice));
        }
    }
    for n in 1..=12 {
        let s = FiniteSemiring::zn(n).expect("n > 0");
        let l = semiring_ideal_lattice(&s).expect("ideal lattice of Z/n");
        out.push(entry(format!("ideals(Z/{n})"), l.lattice));
    }
    let boolean = semiring_ideal_lattice(&FiniteSemiring::boolean()).expect("boolean semiring");
    out.push(entry("ideals(boolean)".to_string(), boolean.lattice));
    let twelve = divisor_lattice(12).expect("n > 0");
    let sub = closure_sublattice(&ClosureSystem::semiprimes(&twelve)).expect("semiprimes form a closure system");
    out.push(entry("semiprimes(divisor(12))".to_string(), sub.lattice));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_of_finite_topologies() {
        // labelled topologies: 1, 1, 4, 29, 355; labelled T0 ones (partial orders): 1, 1, 3, 19, 219
        let all: Vec<usize> = (0..=4).map(|n| all_topologies(n).len()).collect();
        assert_eq!(all, [1, 1, 4, 29, 355]);
        let t0: Vec<usize> = (0..=4).map(|n| t0_spaces(n).len()).collect();
        assert_eq!(t0, [1, 1, 3, 19, 219]);
    }

    #[test]
    fn powerset_sizes() {
        assert_eq!(powerset_lattice(0).len(), 1);
        assert_eq!(powerset_lattice(3).len(), 8);
        assert_eq!(powerset_lattice(3).spec_set().len(), 3);
    }

    #[test]
    fn corpus_size() {
        assert_eq!(standard_corpus().len(), 60 + 6 + 243 + 12 + 1 + 1);
    }
}
