//! Restriction and contraction by a flat, and simplification.

use super::{Matroid, MatroidError};
use crate::combinatorics::k_subsets;
use crate::subset::Subset;

impl Matroid {
    /// Restriction `M^F` to a flat `F`: ground set `F` relabelled to
    /// `0..|F|-1` in element order; bases are the maximal independent
    /// subsets of `F`.
    pub fn restriction(&self, f: Subset) -> Result<Matroid, MatroidError> {
        self.check_in_range(f)?;
        if !self.is_flat(f) {
            return Err(MatroidError::NotAFlat(f));
        }
        let elems = f.elements();
        let r = self.rank_of(f);
        let mut bases = Vec::new();
        for pos in k_subsets(elems.len(), r) {
            let orig = Subset::from_elements(pos.iter().map(|i| elems[i]));
            if self.is_independent(orig) {
                bases.push(pos);
            }
        }
        Ok(Matroid::new_unchecked(elems.len(), bases))
    }

    /// Contraction `M_F` by a flat `F`: ground set `E \ F` relabelled to
    /// `0..n-|F|-1`; a set is independent when adding it to `F` raises the
    /// rank by its cardinality.
    pub fn contraction(&self, f: Subset) -> Result<Matroid, MatroidError> {
        self.check_in_range(f)?;
        if !self.is_flat(f) {
            return Err(MatroidError::NotAFlat(f));
        }
        let elems = f.complement(self.n).elements();
        let rf = self.rank_of(f);
        let r = self.rank - rf;
        let mut bases = Vec::new();
        for pos in k_subsets(elems.len(), r) {
            let orig = Subset::from_elements(pos.iter().map(|i| elems[i]));
            if self.rank_of(orig.union(f)) == r + rf {
                bases.push(pos);
            }
        }
        Ok(Matroid::new_unchecked(elems.len(), bases))
    }

    /// Remove loops and keep one representative (the smallest element) per
    /// parallel class.
    pub fn simplification(&self) -> Matroid {
        let loops = self.loops();
        let mut reps: Vec<usize> = Vec::new();
        let mut seen = Subset::EMPTY;
        for e in self.ground_set().difference(loops).iter() {
            if seen.contains(e) {
                continue;
            }
            // The parallel class of e is its closure minus the loops.
            let class = self.closure(Subset::singleton(e)).difference(loops);
            seen = seen.union(class);
            reps.push(e);
        }
        if reps.is_empty() {
            // rank 0: simplification is the empty matroid
            return Matroid::new_unchecked(0, vec![Subset::EMPTY]);
        }
        let rep_index = |e: usize| reps.binary_search(&e).ok();
        let mut rep_of = vec![usize::MAX; self.n];
        for e in self.ground_set().difference(loops).iter() {
            let class_min = self
                .closure(Subset::singleton(e))
                .difference(loops)
                .min_element()
                .unwrap();
            rep_of[e] = rep_index(class_min).unwrap();
        }
        let bases = self
            .bases
            .iter()
            .map(|b| Subset::from_elements(b.iter().map(|e| rep_of[e])))
            .collect();
        Matroid::new_unchecked(reps.len(), bases)
    }
}
