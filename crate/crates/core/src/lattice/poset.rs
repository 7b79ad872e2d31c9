use std::collections::BTreeSet;

use thiserror::Error;

use super::data::{least, transitive_closure};
use super::Elem;

/// A finite partially ordered set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    names: Vec<String>,
    leq: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("order is not antisymmetric: {a} <= {b} and {b} <= {a}")]
    NotAntisymmetric { a: String, b: String },
    #[error("{a} and {b} have no join")]
    MissingJoin { a: String, b: String },
    #[error("poset has no least element (the empty join)")]
    MissingBottom,
}

/// A non-empty, downward closed, join closed subset of a poset.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PosetIdeal {
    members: BTreeSet<Elem>,
}

impl PosetIdeal {
    pub fn members(&self) -> &BTreeSet<Elem> {
        &self.members
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(&a)
    }
}

/// The ideal completion of a poset with finite joins.
#[derive(Clone, Debug)]
pub struct Completion {
    /// All ideals, sorted by size and then members.
    pub ideals: Vec<PosetIdeal>,
    /// `embedding[a]` is the index of the principal ideal `I(a)`.
    pub embedding: Vec<usize>,
    /// Indices of the compact elements, which are the principal ideals.
    pub compact: Vec<usize>,
}

impl Completion {
    /// Inclusion order on the ideals as a poset.
    pub fn as_poset(&self) -> FinitePoset {
        let names = (0..self.ideals.len()).map(|i| format!("I{i}")).collect();
        let mut pairs = Vec::new();
        for (i, a) in self.ideals.iter().enumerate() {
            for (j, b) in self.ideals.iter().enumerate() {
                if a.members.is_subset(&b.members) {
                    pairs.push((i, j));
                }
            }
        }
        FinitePoset::new(names, &pairs).expect("inclusion is a partial order")
    }

    /// True when `a -> I(a)` is bijective and both preserves and reflects order.
    pub fn embedding_is_isomorphism(&self, poset: &FinitePoset) -> bool {
        let n = poset.len();
        let mut hit: Vec<usize> = self.embedding.clone();
        hit.sort_unstable();
        hit.dedup();
        if hit.len() != n || self.ideals.len() != n {
            return false;
        }
        (0..n).all(|a| {
            (0..n).all(|b| {
                let sub = self.ideals[self.embedding[a]]
                    .members
                    .is_subset(&self.ideals[self.embedding[b]].members);
                sub == poset.leq(a, b)
            })
        })
    }
}

impl FinitePoset {
    pub fn new(names: Vec<String>, pairs: &[(Elem, Elem)]) -> Result<Self, PosetError> {
        let n = names.len();
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
        }
        for &(a, b) in pairs {
            assert!(a < n && b < n, "order pair out of range");
            leq[a * n + b] = true;
        }
        transitive_closure(&mut leq, n);
        for a in 0..n {
            for b in 0..n {
                if a != b && leq[a * n + b] && leq[b * n + a] {
                    return Err(PosetError::NotAntisymmetric {
                        a: names[a].clone(),
                        b: names[b].clone(),
                    });
                }
            }
        }
        Ok(FinitePoset { names, leq })
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

    pub fn join2(&self, a: Elem, b: Elem) -> Option<Elem> {
        let uppers: Vec<Elem> = (0..self.len())
            .filter(|&u| self.leq(a, u) && self.leq(b, u))
            .collect();
        least(&uppers, |x, y| self.leq(x, y))
    }

    pub fn bottom(&self) -> Option<Elem> {
        (0..self.len()).find(|&b| (0..self.len()).all(|x| self.leq(b, x)))
    }

    /// `I(a) = {x : x <= a}`.
    pub fn principal_ideal(&self, a: Elem) -> PosetIdeal {
        PosetIdeal {
            members: (0..self.len()).filter(|&x| self.leq(x, a)).collect(),
        }
    }

    /// Whether `set` is a non-empty, down-closed, join-closed subset.
    pub fn is_ideal(&self, set: &BTreeSet<Elem>) -> bool {
        !set.is_empty()
            && set
                .iter()
                .all(|&b| (0..self.len()).all(|a| !self.leq(a, b) || set.contains(&a)))
            && set.iter().all(|&a| {
                set.iter()
                    .all(|&b| self.join2(a, b).is_some_and(|j| set.contains(&j)))
            })
    }

    /// Smallest ideal containing `generators` (non-empty).
    fn generated_ideal(&self, generators: &BTreeSet<Elem>) -> BTreeSet<Elem> {
        let mut set = generators.clone();
        loop {
            let mut next: BTreeSet<Elem> = set
                .iter()
                .flat_map(|&b| (0..self.len()).filter(move |&a| self.leq(a, b)))
                .collect();
            let current: Vec<Elem> = next.iter().copied().collect();
            for &a in &current {
                for &b in &current {
                    if let Some(j) = self.join2(a, b) {
                        next.insert(j);
                    }
                }
            }
            if next == set {
                return set;
            }
            set = next;
        }
    }

    /// All ideals ordered by inclusion, with the embedding `a -> I(a)`.
    ///
    /// Ideals are produced by closing the principal ideals under the ideal
    /// join (the ideal generated by a union) until nothing new appears.
    pub fn ideal_completion(&self) -> Result<Completion, PosetError> {
        let n = self.len();
        if self.bottom().is_none() {
            return Err(PosetError::MissingBottom);
        }
        for a in 0..n {
            for b in 0..n {
                if self.join2(a, b).is_none() {
                    return Err(PosetError::MissingJoin {
                        a: self.names[a].clone(),
                        b: self.names[b].clone(),
                    });
                }
            }
        }
        let principal: Vec<BTreeSet<Elem>> =
            (0..n).map(|a| self.principal_ideal(a).members).collect();
        let mut found: BTreeSet<BTreeSet<Elem>> = principal.iter().cloned().collect();
        let mut frontier: Vec<BTreeSet<Elem>> = found.iter().cloned().collect();
        while let Some(ideal) = frontier.pop() {
            for p in &principal {
                let union: BTreeSet<Elem> = ideal.union(p).copied().collect();
                let joined = self.generated_ideal(&union);
                if found.insert(joined.clone()) {
                    frontier.push(joined);
                }
            }
        }
        let mut ideals: Vec<PosetIdeal> = found.into_iter().map(|members| PosetIdeal { members }).collect();
        ideals.sort_by(|a, b| {
            (a.members.len(), &a.members).cmp(&(b.members.len(), &b.members))
        });
        let embedding: Vec<usize> = principal
            .iter()
            .map(|p| ideals.iter().position(|i| &i.members == p).expect("principal ideal found"))
            .collect();
        let mut compact = embedding.clone();
        compact.sort_unstable();
        compact.dedup();
        Ok(Completion {
            ideals,
            embedding,
            compact,
        })
    }
}
