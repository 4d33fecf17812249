//! Tutte and characteristic polynomials.
//!
//! The Tutte polynomial is the corank-nullity sum over all subsets of the
//! ground set, organized as a rank table filled by dynamic programming so
//! the cost is `O(2^n * n)` rather than `O(2^n * |bases|)`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::lattice::FlatLattice;
use crate::matroid::{Matroid, MatroidError};
use crate::poly::{BiPoly, IntPoly, PolyError};

/// Largest ground set for which the `2^n` subset sum is attempted.
pub const MAX_TUTTE_GROUND_SET: usize = 24;

/// Rank of every subset of the ground set, indexed by mask.
/// `rank(A) = |A|` if `A` is independent, else `max_e rank(A - e)`.
fn rank_table(m: &Matroid) -> Vec<u8> {
    let n = m.size();
    let size = 1usize << n;
    let mut independent = vec![false; size];
    for b in m.bases() {
        independent[b.mask() as usize] = true;
    }
    // Downward closure: subsets of independent sets are independent.
    for mask in (0..size).rev() {
        if independent[mask] {
            let mut rest = mask;
            while rest != 0 {
                let low = rest & rest.wrapping_neg();
                independent[mask ^ low] = true;
                rest ^= low;
            }
        }
    }
    let mut rank = vec![0u8; size];
    for mask in 1..size {
        if independent[mask] {
            rank[mask] = mask.count_ones() as u8;
        } else {
            let mut best = 0u8;
            let mut rest = mask;
            while rest != 0 {
                let low = rest & rest.wrapping_neg();
                best = best.max(rank[mask ^ low]);
                rest ^= low;
            }
            rank[mask] = best;
        }
    }
    rank
}

/// Exact Tutte polynomial `T_M(x, y) = sum_A (x-1)^{rk(E)-rk(A)} (y-1)^{|A|-rk(A)}`.
pub fn tutte_polynomial(m: &Matroid) -> Result<BiPoly, PolyError> {
    let n = m.size();
    if n > MAX_TUTTE_GROUND_SET {
        return Err(PolyError::GroundSetTooLargeForTutte { n });
    }
    let k = m.rank();
    let rank = rank_table(m);
    // counts[corank][nullity]
    let mut counts = vec![vec![0u64; n - k + 1]; k + 1];
    for (mask, &r) in rank.iter().enumerate() {
        let card = (mask as u64).count_ones() as usize;
        counts[k - r as usize][card - r as usize] += 1;
    }
    // Expand sum of counts[i][j] (x-1)^i (y-1)^j.
    let mut acc = BiPoly::zero();
    for (i, row) in counts.iter().enumerate() {
        let xi = IntPoly::t_minus_one_pow(i);
        for (j, &c) in row.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let yj = IntPoly::t_minus_one_pow(j);
            let c = BigInt::from(c);
            for (a, xc) in xi.coeffs().iter().enumerate() {
                for (b, yc) in yj.coeffs().iter().enumerate() {
                    acc.add_term(a, b, &(xc * yc * &c));
                }
            }
        }
    }
    Ok(acc)
}

/// Characteristic polynomial.
///
/// Zero for matroids with loops (matching the Tutte specialization
/// `(-1)^k T_M(1-t, 0)`); otherwise the Möbius-weighted sum
/// `sum_F mu(0,F) t^{k - rk F}` over the lattice of flats.
pub fn characteristic_polynomial(m: &Matroid) -> Result<IntPoly, MatroidError> {
    if !m.is_loopless() {
        return Ok(IntPoly::zero());
    }
    let lattice = FlatLattice::build(m)?;
    Ok(characteristic_from_lattice(&lattice))
}

pub(crate) fn characteristic_from_lattice(lattice: &FlatLattice) -> IntPoly {
    let k = lattice.rank();
    let mut coeffs = vec![BigInt::zero(); k + 1];
    for &(fi, mu) in &lattice.mobius_from(lattice.bottom()) {
        let r = lattice.rank_of_flat(fi as usize);
        coeffs[k - r] += BigInt::from(mu);
    }
    IntPoly::from_coeffs(coeffs)
}

/// The Tutte route `(-1)^k T_M(1-t, 0)`; agrees with
/// [`characteristic_polynomial`] on every matroid with `n <= 24`.
pub fn characteristic_via_tutte(m: &Matroid) -> Result<IntPoly, PolyError> {
    let t = tutte_polynomial(m)?;
    let x = IntPoly::from_i64s(&[1, -1]);
    let chi = t.eval_poly(&x, &IntPoly::zero());
    Ok(if m.rank().is_multiple_of(2) {
        chi
    } else {
        -&chi
    })
}
