use crate::lattice::{Elem, FiniteIdealLattice, LatticeData};
use crate::pointset::PointSet;

use super::{InstanceError, SemiringIdealLattice};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// The lattice of ideals `dZ/n`, one element per divisor `d` (named `d`).
/// `d <= e` iff `e` divides `d`, and the product of `d` and `e` is `gcd(de, n)`.
/// Elements are listed by increasing divisor, so `1` (the top) comes first.
pub fn divisor_lattice(n: u64) -> Result<FiniteIdealLattice, InstanceError> {
    if n == 0 {
        return Err(InstanceError::ZeroModulus);
    }
    let divs = divisors(n);
    let k = divs.len();
    let index = |d: u64| divs.iter().position(|&x| x == d).expect("divisor");
    let mut pairs = Vec::new();
    let mut mul = Vec::with_capacity(k * k);
    for (a, &d) in divs.iter().enumerate() {
        for (b, &e) in divs.iter().enumerate() {
            if d % e == 0 {
                pairs.push((a, b));
            }
            mul.push(index(gcd(d * e, n)));
        }
    }
    let names = divs.iter().map(|d| d.to_string()).collect();
    let data = LatticeData::new(names, &pairs, mul, 0, k - 1);
    Ok(FiniteIdealLattice::from_data(data)?)
}

/// The element of the divisor lattice of `n` matching each ideal of `Z/n`:
/// an ideal `I` corresponds to the divisor `gcd(I, n)`.
pub fn divisor_dictionary(
    n: u64,
    ideals: &SemiringIdealLattice,
    divisor_lattice: &FiniteIdealLattice,
) -> Vec<Elem> {
    ideals
        .ideals
        .iter()
        .map(|&ideal| {
            let d = ideal.iter().fold(n, |g, x| gcd(g, x as u64));
            divisor_lattice
                .index_of(&d.to_string())
                .expect("gcd with n divides n")
        })
        .collect()
}

/// The ideal `dZ/n` as a subset of `Z/n`.
pub fn divisor_ideal(n: u64, d: u64) -> PointSet {
    (0..n).filter(|x| x % d == 0).map(|x| x as usize).collect()
}
