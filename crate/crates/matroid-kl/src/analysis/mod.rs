//! Exact polynomial diagnostics and the verification drivers: real-
//! rootedness via Sturm sequences, log-concavity, non-negativity,
//! non-degeneracy, the relaxation-identity verifier and the sparse paving
//! parameter scan.

mod scan;
mod sturm;
mod verify;

use num_traits::Signed;

use crate::poly::IntPoly;

pub use scan::{scan_sparse_paving, CheckSet, ScanConfig, ScanEntry, ScanReport};
pub use sturm::{count_distinct_real_roots, is_real_rooted, poly_gcd, square_free_part};
pub use verify::{verify_relaxation, RelaxationReport};

/// Log-concavity of the coefficient sequence: `c_i^2 >= c_{i-1} c_{i+1}`
/// for every internal index. No positivity or support condition beyond the
/// inequality itself.
pub fn is_log_concave(p: &IntPoly) -> bool {
    let c = p.coeffs();
    if c.len() < 3 {
        return true;
    }
    (1..c.len() - 1).all(|i| &c[i] * &c[i] >= &c[i - 1] * &c[i + 1])
}

/// Every coefficient non-negative.
pub fn is_nonnegative(p: &IntPoly) -> bool {
    p.coeffs().iter().all(|c| !c.is_negative())
}

/// A rank-`k` matroid is non-degenerate when its Kazhdan-Lusztig polynomial
/// attains the maximal degree `floor((k-1)/2)`.
pub fn is_nondegenerate(p: &IntPoly, rank: usize) -> bool {
    debug_assert!(rank >= 1);
    p.degree() == Some((rank - 1) / 2)
}
