//! Subsets of a ground set `{0, ..., n-1}` with `n <= 64`, stored as bit
//! masks. All matroid-level structure (bases, flats, circuits) is built out
//! of these.

use std::fmt;

/// Maximum supported ground set size.
pub const MAX_GROUND_SET: usize = 64;

/// A subset of `{0, ..., n-1}` encoded as a 64-bit mask.
///
/// The type itself does not know `n`; membership bounds are enforced by the
/// owning [`crate::Matroid`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_mask(mask: u64) -> Self {
        Subset(mask)
    }

    /// Full ground set `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND_SET);
        if n == MAX_GROUND_SET {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        debug_assert!(e < MAX_GROUND_SET);
        Subset(1u64 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        let mut mask = 0u64;
        for e in elems {
            debug_assert!(e < MAX_GROUND_SET);
            mask |= 1u64 << e;
        }
        Subset(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, e: usize) -> bool {
        e < MAX_GROUND_SET && self.0 & (1u64 << e) != 0
    }

    pub fn with(self, e: usize) -> Self {
        debug_assert!(e < MAX_GROUND_SET);
        Subset(self.0 | (1u64 << e))
    }

    pub fn without(self, e: usize) -> Self {
        Subset(self.0 & !(1u64 << e))
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    /// Complement inside `{0, ..., n-1}`.
    pub fn complement(self, n: usize) -> Self {
        Subset(Self::full(n).0 & !self.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn symmetric_difference(self, other: Subset) -> Self {
        Subset(self.0 ^ other.0)
    }

    /// Iterate over the elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let e = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                Some(e)
            }
        })
    }

    pub fn elements(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest element, if any.
    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
