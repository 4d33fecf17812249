//! Matroids represented by their set of bases.
//!
//! The basis list is the single source of truth; rank, closure, flats,
//! circuits, minors and all named constructions are derived from it. Bases
//! are kept sorted by bit pattern and deduplicated, so equality of matroids
//! is structural equality of `(n, bases)`.

mod construct;
mod minors;
mod relax;

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::combinatorics::{k_subsets, SplitMix64};
use crate::subset::{Subset, MAX_GROUND_SET};

pub use construct::SparsePavingSpec;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatroidError {
    #[error("a matroid must have at least one basis")]
    EmptyBases,
    #[error("bases {first} and {other} have different sizes")]
    UnequalBasisSizes { first: Subset, other: Subset },
    #[error("basis-exchange axiom fails for B1 = {b1}, B2 = {b2}, a = {element}")]
    ExchangeAxiomViolation {
        b1: Subset,
        b2: Subset,
        element: usize,
    },
    #[error("element {element} out of range for ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("ground set of size {0} exceeds the supported maximum of 64")]
    GroundSetTooLarge(usize),
    #[error("{0} is not a flat")]
    NotAFlat(Subset),
    #[error("{0} is not a circuit-hyperplane")]
    NotACircuitHyperplane(Subset),
    #[error("{0} is not a free basis")]
    NotAFreeBasis(Subset),
    #[error("circuit-hyperplanes {a} and {b} intersect in {got} elements (max allowed {max})")]
    IntersectionTooLarge {
        a: Subset,
        b: Subset,
        got: usize,
        max: usize,
    },
    #[error("flat enumeration exceeded the cap of {cap} flats")]
    FlatCountOverflow { cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// How thoroughly `Matroid::from_bases` checks the basis-exchange axiom.
///
/// The default checks all basis pairs when there are at most 5000 of them
/// and falls back to at least `10^5` randomized trials above that.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ExchangeCheck {
    #[default]
    Auto,
    Exhaustive,
    /// Randomized with the given number of trials.
    Sampled(u64),
}

const EXHAUSTIVE_PAIR_LIMIT: usize = 5000;
const MIN_SAMPLED_TRIALS: u64 = 100_000;

/// Result of [`Matroid::structure`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub loops: Subset,
    pub coloops: Subset,
    pub connected: bool,
}

#[derive(Clone)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<Subset>,
    label: Option<String>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matroid(n={}, rank={}, |bases|={}",
            self.n,
            self.rank,
            self.bases.len()
        )?;
        if let Some(l) = &self.label {
            write!(f, ", label={l:?}")?;
        }
        write!(f, ")")
    }
}

impl Matroid {
    /// Validate and build a matroid from a list of bases.
    pub fn from_bases(n: usize, bases: Vec<Subset>) -> Result<Matroid, MatroidError> {
        Matroid::from_bases_checked(n, bases, ExchangeCheck::Auto)
    }

    /// As [`Matroid::from_bases`] with an explicit validation policy.
    pub fn from_bases_checked(
        n: usize,
        mut bases: Vec<Subset>,
        check: ExchangeCheck,
    ) -> Result<Matroid, MatroidError> {
        if n > MAX_GROUND_SET {
            return Err(MatroidError::GroundSetTooLarge(n));
        }
        if bases.is_empty() {
            return Err(MatroidError::EmptyBases);
        }
        let full = Subset::full(n);
        for b in &bases {
            if !b.is_subset_of(full) {
                let element = b.difference(full).min_element().unwrap();
                return Err(MatroidError::ElementOutOfRange { element, n });
            }
        }
        bases.sort();
        bases.dedup();
        let k = bases[0].card();
        for b in &bases {
            if b.card() != k {
                return Err(MatroidError::UnequalBasisSizes {
                    first: bases[0],
                    other: *b,
                });
            }
        }
        validate_exchange(&bases, check)?;
        Ok(Matroid {
            n,
            rank: k,
            bases,
            label: None,
        })
    }

    /// Internal constructor for bases known to satisfy the axioms by
    /// construction. Still sorts and dedupes.
    pub(crate) fn new_unchecked(n: usize, mut bases: Vec<Subset>) -> Matroid {
        debug_assert!(n <= MAX_GROUND_SET && !bases.is_empty());
        bases.sort();
        bases.dedup();
        let rank = bases[0].card();
        debug_assert!(bases.iter().all(|b| b.card() == rank));
        Matroid {
            n,
            rank,
            bases,
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Matroid {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Ground set size.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Rank of the matroid (common basis cardinality).
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn ground_set(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn is_basis(&self, b: Subset) -> bool {
        self.bases.binary_search(&b).is_ok()
    }

    pub fn check_in_range(&self, a: Subset) -> Result<(), MatroidError> {
        if a.is_subset_of(self.ground_set()) {
            Ok(())
        } else {
            let element = a.difference(self.ground_set()).min_element().unwrap();
            Err(MatroidError::ElementOutOfRange { element, n: self.n })
        }
    }

    /// Rank of a subset: the largest intersection with a basis.
    pub fn rank_of(&self, a: Subset) -> usize {
        self.bases
            .iter()
            .map(|b| a.intersection(*b).card())
            .max()
            .unwrap_or(0)
    }

    pub fn is_independent(&self, a: Subset) -> bool {
        self.rank_of(a) == a.card()
    }

    pub fn is_dependent(&self, a: Subset) -> bool {
        !self.is_independent(a)
    }

    /// Closure of a subset: `a` together with every element whose addition
    /// does not raise the rank.
    ///
    /// Two passes over the bases: the rank `r` of `a`, then the union `u` of
    /// `b \ a` over bases achieving `|a ∩ b| = r`. An element raises the
    /// rank exactly when it lies in `u`, so `cl(a) = E \ u`.
    pub fn closure(&self, a: Subset) -> Subset {
        let r = self.rank_of(a);
        let mut extenders = 0u64;
        for b in &self.bases {
            if a.intersection(*b).card() == r {
                extenders |= b.difference(a).mask();
            }
        }
        self.ground_set().difference(Subset::from_mask(extenders))
    }

    pub fn is_flat(&self, a: Subset) -> bool {
        a.is_subset_of(self.ground_set()) && self.closure(a) == a
    }

    /// Elements contained in no basis.
    pub fn loops(&self) -> Subset {
        let mut union = 0u64;
        for b in &self.bases {
            union |= b.mask();
        }
        self.ground_set().difference(Subset::from_mask(union))
    }

    /// Elements contained in every basis.
    pub fn coloops(&self) -> Subset {
        let mut inter = self.ground_set().mask();
        for b in &self.bases {
            inter &= b.mask();
        }
        Subset::from_mask(inter)
    }

    pub fn is_loopless(&self) -> bool {
        self.loops().is_empty()
    }

    /// A circuit is a dependent set all of whose proper subsets are
    /// independent.
    pub fn is_circuit(&self, a: Subset) -> bool {
        if !a.is_subset_of(self.ground_set()) || self.is_independent(a) {
            return false;
        }
        a.iter().all(|e| self.is_independent(a.without(e)))
    }

    /// All circuits, smallest first. Circuits of a rank-`k` matroid have at
    /// most `k + 1` elements.
    pub fn circuits(&self) -> Vec<Subset> {
        let mut found: Vec<Subset> = Vec::new();
        for size in 1..=(self.rank + 1).min(self.n) {
            for a in k_subsets(self.n, size) {
                if found.iter().any(|c| c.is_subset_of(a)) {
                    continue;
                }
                if self.is_dependent(a) {
                    found.push(a);
                }
            }
        }
        found
    }

    /// Loops, coloops and connectivity (every pair of distinct elements in a
    /// common circuit). Matroids on at most one element are connected.
    pub fn structure(&self) -> StructureReport {
        let connected = if self.n <= 1 {
            true
        } else {
            // Union-find over the ground set, merging along circuits.
            let mut parent: Vec<usize> = (0..self.n).collect();
            fn find(parent: &mut [usize], mut x: usize) -> usize {
                while parent[x] != x {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                x
            }
            for c in self.circuits() {
                let mut it = c.iter();
                if let Some(first) = it.next() {
                    let r0 = find(&mut parent, first);
                    for e in it {
                        let r = find(&mut parent, e);
                        parent[r] = r0;
                    }
                }
            }
            let root = find(&mut parent, 0);
            (1..self.n).all(|e| find(&mut parent, e) == root)
        };
        StructureReport {
            loops: self.loops(),
            coloops: self.coloops(),
            connected,
        }
    }

    /// True when every `rank`-element subset is a basis or a
    /// circuit-hyperplane.
    pub fn is_sparse_paving(&self) -> bool {
        let k = self.rank;
        k_subsets(self.n, k).all(|a| self.is_basis(a) || self.is_circuit_hyperplane(a))
    }

    /// Detect a uniform matroid structurally: equal-size bases (guaranteed)
    /// and every `k`-subset a basis.
    pub fn as_uniform(&self) -> Option<(usize, usize)> {
        let expected = crate::combinatorics::binomial(self.n, self.rank);
        if num_bigint::BigInt::from(self.bases.len()) == expected {
            Some((self.rank, self.n))
        } else {
            None
        }
    }
}

/// Exchange-axiom validation. Exhaustive over all ordered basis pairs when
/// feasible, randomized sampling above the pair limit.
fn validate_exchange(bases: &[Subset], check: ExchangeCheck) -> Result<(), MatroidError> {
    if bases.len() < 2 {
        return Ok(());
    }
    let set: HashSet<Subset> = bases.iter().copied().collect();
    let pairs = bases.len() * (bases.len() - 1);
    let exhaustive = match check {
        ExchangeCheck::Exhaustive => true,
        ExchangeCheck::Auto => pairs <= EXHAUSTIVE_PAIR_LIMIT,
        ExchangeCheck::Sampled(_) => false,
    };
    let check_pair = |b1: Subset, b2: Subset| -> Result<(), MatroidError> {
        for a in b1.difference(b2).iter() {
            let stripped = b1.without(a);
            let ok = b2
                .difference(b1)
                .iter()
                .any(|b| set.contains(&stripped.with(b)));
            if !ok {
                return Err(MatroidError::ExchangeAxiomViolation { b1, b2, element: a });
            }
        }
        Ok(())
    };
    if exhaustive {
        for (i, &b1) in bases.iter().enumerate() {
            for (j, &b2) in bases.iter().enumerate() {
                if i != j {
                    check_pair(b1, b2)?;
                }
            }
        }
    } else {
        let trials = match check {
            ExchangeCheck::Sampled(t) => t.max(1),
            _ => MIN_SAMPLED_TRIALS,
        };
        let mut rng = SplitMix64::new(0x6d61_7472_6f69_6421);
        let m = bases.len() as u64;
        for _ in 0..trials {
            let i = rng.next_below(m) as usize;
            let j = rng.next_below(m) as usize;
            if i != j {
                check_pair(bases[i], bases[j])?;
            }
        }
    }
    Ok(())
}
