//! Circuit-hyperplanes, relaxation, free bases and the inverse operation.
//!
//! Relaxing a circuit-hyperplane `H` declares it a basis; the relaxed
//! matroid has `H` as a free basis, and removing a free basis undoes the
//! relaxation.

use super::{Matroid, MatroidError};
use crate::combinatorics::k_subsets;
use crate::subset::Subset;

impl Matroid {
    /// A circuit-hyperplane: simultaneously a circuit and a flat of rank
    /// `k - 1`; necessarily of cardinality `k`.
    pub fn is_circuit_hyperplane(&self, a: Subset) -> bool {
        a.card() == self.rank
            && a.is_subset_of(self.ground_set())
            && self.is_circuit(a)
            && self.closure(a) == a
    }

    /// All circuit-hyperplanes, in increasing mask order.
    pub fn circuit_hyperplanes(&self) -> Vec<Subset> {
        k_subsets(self.n, self.rank)
            .filter(|a| !self.is_basis(*a) && self.is_circuit_hyperplane(*a))
            .collect()
    }

    /// Relax the circuit-hyperplane `h`: the bases gain exactly `h`.
    pub fn relax(&self, h: Subset) -> Result<Matroid, MatroidError> {
        if !self.is_circuit_hyperplane(h) {
            return Err(MatroidError::NotACircuitHyperplane(h));
        }
        let mut bases = self.bases.clone();
        bases.push(h);
        Ok(Matroid::new_unchecked(self.n, bases))
    }

    /// Bases `B` such that `B ∪ {e}` is a circuit for every `e ∉ B`.
    /// Empty unless the matroid has at least two bases.
    pub fn free_bases(&self) -> Vec<Subset> {
        if self.bases.len() < 2 {
            return Vec::new();
        }
        self.bases
            .iter()
            .copied()
            .filter(|&b| self.is_free_basis_of(b))
            .collect()
    }

    fn is_free_basis_of(&self, b: Subset) -> bool {
        // B ∪ {e} is dependent of size k+1; it is a circuit exactly when
        // every k-subset (B \ {x}) ∪ {e} is a basis.
        for e in b.complement(self.n).iter() {
            for x in b.iter() {
                if !self.is_basis(b.without(x).with(e)) {
                    return false;
                }
            }
        }
        true
    }

    /// Remove the free basis `b`; the result has `b` as a
    /// circuit-hyperplane and relaxing it restores `self`.
    pub fn unrelax(&self, b: Subset) -> Result<Matroid, MatroidError> {
        if self.bases.len() < 2 || !self.is_basis(b) || !self.is_free_basis_of(b) {
            return Err(MatroidError::NotAFreeBasis(b));
        }
        let bases = self.bases.iter().copied().filter(|&x| x != b).collect();
        let m = Matroid::new_unchecked(self.n, bases);
        debug_assert!(m.is_circuit_hyperplane(b));
        Ok(m)
    }
}
