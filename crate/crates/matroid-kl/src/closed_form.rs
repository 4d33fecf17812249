//! Closed formulas and fast recursions for uniform matroids, the
//! relaxation deltas `p_k`, `q_k`, `z_k`, and the sparse paving triple
//! `(n, k, lambda)`.
//!
//! Everything here is independent of the generic lattice engine; the two
//! routes cross-check each other in the test suites.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::combinatorics::binomial;
use crate::kl::{solve_low_degree, KlTriple};
use crate::poly::IntPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("formula produced the non-integral coefficient {value} of t^{index}")]
    NonIntegralCoefficient { index: usize, value: String },
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), ClosedFormError> {
    if cond {
        Ok(())
    } else {
        Err(ClosedFormError::InvalidParameter(msg()))
    }
}

/// Characteristic polynomial of `U_{k,n}`:
/// `sum_{j<k} (-1)^j C(n,j) t^{k-j} + (-1)^k C(n-1, k-1)`.
pub fn chi_uniform(k: usize, n: usize) -> IntPoly {
    if k == 0 {
        return if n == 0 {
            IntPoly::one()
        } else {
            IntPoly::zero()
        };
    }
    let mut coeffs = vec![BigInt::zero(); k + 1];
    for j in 0..k {
        let c = binomial(n, j);
        coeffs[k - j] = if j.is_multiple_of(2) { c } else { -c };
    }
    let tail = binomial(n - 1, k - 1);
    coeffs[0] = if k.is_multiple_of(2) { tail } else { -tail };
    IntPoly::from_coeffs(coeffs)
}

/// Kazhdan-Lusztig polynomials of the whole diagonal `U_{r, r+d}` for
/// `r = 0..=k`, computed by the uniform specialization of the defining
/// recursion: high coefficients of
/// `sum_{j=1}^{r-1} C(r+d, j) (t-1)^j P_{U_{r-j, r+d-j}} + chi_{U_{r,r+d}}`
/// determine the low coefficients of `P_{U_{r,r+d}}`.
fn uniform_p_diagonal(k: usize, d: usize) -> Vec<IntPoly> {
    let mut diag: Vec<IntPoly> = Vec::with_capacity(k + 1);
    // rank 0 on the diagonal: U_{0,d} has loops unless d = 0.
    diag.push(if d == 0 {
        IntPoly::one()
    } else {
        IntPoly::zero()
    });
    if d == 0 {
        // Booleans all the way up.
        for _ in 1..=k {
            diag.push(IntPoly::one());
        }
        return diag;
    }
    for r in 1..=k {
        let n = r + d;
        let mut rhs = chi_uniform(r, n);
        for j in 1..r {
            let term = IntPoly::t_minus_one_pow(j).scale(&binomial(n, j));
            rhs = &rhs + &(&term * &diag[r - j]);
        }
        let p = solve_low_degree(&rhs, r, false);
        debug_assert_eq!(p.reciprocal(r).unwrap(), &p + &rhs);
        diag.push(p);
    }
    diag
}

/// `P_{U_{k,n}}` via the uniform-specialized recursion.
pub fn uniform_p(k: usize, n: usize) -> Result<IntPoly, ClosedFormError> {
    require(k <= n, || {
        format!("uniform_p requires k <= n, got ({k}, {n})")
    })?;
    if k == 0 {
        return Ok(if n == 0 {
            IntPoly::one()
        } else {
            IntPoly::zero()
        });
    }
    Ok(uniform_p_diagonal(k, n - k).pop().unwrap())
}

/// `Q_{U_{k,n}}` by the closed formula
/// `C(n,k) * sum_j (n-k)(k-2j) / ((n-k+j)(n-j)) * C(k,j) t^j`.
pub fn uniform_q(k: usize, n: usize) -> Result<IntPoly, ClosedFormError> {
    require(k <= n, || {
        format!("uniform_q requires k <= n, got ({k}, {n})")
    })?;
    if k == 0 {
        return Ok(if n == 0 {
            IntPoly::one()
        } else {
            IntPoly::zero()
        });
    }
    if k == n {
        return Ok(IntPoly::one());
    }
    let cnk = BigRational::from_integer(binomial(n, k));
    let nk = n - k;
    let mut coeffs = Vec::new();
    for j in 0..=(k - 1) / 2 {
        let numer = BigInt::from(nk) * BigInt::from(k as i64 - 2 * j as i64);
        let denom = BigInt::from(nk + j) * BigInt::from(n - j);
        let value =
            &cnk * BigRational::new(numer, denom) * BigRational::from_integer(binomial(k, j));
        if !value.is_integer() {
            return Err(ClosedFormError::NonIntegralCoefficient {
                index: j,
                value: value.to_string(),
            });
        }
        coeffs.push(value.to_integer());
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// `Z_{U_{k,n}}` by the recursion
/// `t^k + sum_{j=1}^{k} C(n, k-j) t^{k-j} P_{U_{j, n-k+j}}`.
pub fn uniform_z(k: usize, n: usize) -> Result<IntPoly, ClosedFormError> {
    require(k <= n, || {
        format!("uniform_z requires k <= n, got ({k}, {n})")
    })?;
    if k == 0 {
        return Ok(IntPoly::one());
    }
    let diag = uniform_p_diagonal(k, n - k);
    let mut acc = IntPoly::monomial(k);
    for (j, p) in diag.iter().enumerate().skip(1) {
        let term = p.shift_up(k - j).scale(&binomial(n, k - j));
        acc = &acc + &term;
    }
    Ok(acc)
}

/// The exact uniform triple `(P, Q, Z)` of `U_{k,n}`.
pub fn uniform_triple(k: usize, n: usize) -> Result<KlTriple, ClosedFormError> {
    Ok(KlTriple {
        p: uniform_p(k, n)?,
        q: uniform_q(k, n)?,
        z: uniform_z(k, n)?,
        rank: k,
        size: n,
    })
}

/// The rank-only relaxation deltas for one rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSet {
    pub k: usize,
    pub p: IntPoly,
    pub q: IntPoly,
    pub z: IntPoly,
}

/// `p_k = P_{U_{k,k+1}} - P_{U_{k-1,k}}`.
pub fn delta_p(k: usize) -> Result<IntPoly, ClosedFormError> {
    require(k >= 1, || format!("delta_p requires k >= 1, got {k}"))?;
    Ok(&uniform_p(k, k + 1)? - &uniform_p(k - 1, k)?)
}

/// `q_k = Q_{U_{k,k+1}} - Q_{U_{k-1,k}}`.
pub fn delta_q(k: usize) -> Result<IntPoly, ClosedFormError> {
    require(k >= 1, || format!("delta_q requires k >= 1, got {k}"))?;
    Ok(&uniform_q(k, k + 1)? - &uniform_q(k - 1, k)?)
}

/// `z_k = Z_{U_{k,k+1}} - (1+t) Z_{U_{k-1,k}}`.
pub fn delta_z(k: usize) -> Result<IntPoly, ClosedFormError> {
    require(k >= 1, || format!("delta_z requires k >= 1, got {k}"))?;
    let one_plus_t = IntPoly::from_i64s(&[1, 1]);
    Ok(&uniform_z(k, k + 1)? - &(&one_plus_t * &uniform_z(k - 1, k)?))
}

pub fn delta_set(k: usize) -> Result<DeltaSet, ClosedFormError> {
    Ok(DeltaSet {
        k,
        p: delta_p(k)?,
        q: delta_q(k)?,
        z: delta_z(k)?,
    })
}

/// Second route for `z_k`: `sum_{j=1}^{k-1} (2/k) C(k,j+1) C(k,j-1) t^j`.
pub fn delta_z_binomial(k: usize) -> Result<IntPoly, ClosedFormError> {
    require(k >= 1, || {
        format!("delta_z_binomial requires k >= 1, got {k}")
    })?;
    let mut coeffs = vec![BigInt::zero(); k.max(1)];
    for (j, coeff) in coeffs.iter_mut().enumerate().take(k).skip(1) {
        let value = BigRational::new(
            BigInt::from(2) * binomial(k, j + 1) * binomial(k, j - 1),
            BigInt::from(k),
        );
        if !value.is_integer() {
            return Err(ClosedFormError::NonIntegralCoefficient {
                index: j,
                value: value.to_string(),
            });
        }
        *coeff = value.to_integer();
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// Third route for `z_k`: `(k-1) t^{k-1} + sum_{j=2}^{k} C(k,j) t^{k-j} p_j`.
pub fn delta_z_via_p(k: usize) -> Result<IntPoly, ClosedFormError> {
    require(k >= 1, || format!("delta_z_via_p requires k >= 1, got {k}"))?;
    let mut acc = IntPoly::monomial(k - 1).scale(&BigInt::from(k as i64 - 1));
    for j in 2..=k {
        let term = delta_p(j)?.shift_up(k - j).scale(&binomial(k, j));
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Residual of the defining functional equation for `p_k`:
/// `t^k p_k(1/t) - p_k - [k (t-1)^{k-1} - chi_{U_{k-1,k}} + (-1)^k (1-t)
///  + sum_{j=2}^{k-1} C(k,j) (t-1)^{k-j} p_j]`.
///
/// For `k = 1` the restriction to the circuit-hyperplane is the one-point
/// lattice, whose characteristic polynomial is 1 (not the loop convention 0).
pub fn delta_p_residual(k: usize) -> Result<IntPoly, ClosedFormError> {
    require(k >= 1, || {
        format!("delta_p_residual requires k >= 1, got {k}")
    })?;
    let p_k = delta_p(k)?;
    let lhs = &p_k.reciprocal(k).expect("deg p_k < k/2 by construction") - &p_k;
    let chi_restriction = if k == 1 {
        IntPoly::one()
    } else {
        chi_uniform(k - 1, k)
    };
    let mut rhs = IntPoly::t_minus_one_pow(k - 1).scale(&BigInt::from(k));
    rhs = &rhs - &chi_restriction;
    let sign_term = if k.is_multiple_of(2) {
        IntPoly::from_i64s(&[1, -1])
    } else {
        IntPoly::from_i64s(&[-1, 1])
    };
    rhs = &rhs + &sign_term;
    for j in 2..k {
        let term = &IntPoly::t_minus_one_pow(k - j).scale(&binomial(k, j)) * &delta_p(j)?;
        rhs = &rhs + &term;
    }
    Ok(&lhs - &rhs)
}

/// Residual of the defining functional equation for `q_k`:
/// `t^k q_k(1/t) - q_k - (t-1)(t^{k-1} + k - Q_{U_{k-1,k}}
///  + sum_{j=2}^{k-1} C(k,j) t^{j-1})`.
///
/// Same `k = 1` convention as [`delta_p_residual`]: the one-point lattice
/// contributes `Q = 1`.
pub fn delta_q_residual(k: usize) -> Result<IntPoly, ClosedFormError> {
    require(k >= 1, || {
        format!("delta_q_residual requires k >= 1, got {k}")
    })?;
    let q_k = delta_q(k)?;
    let lhs = &q_k.reciprocal(k).expect("deg q_k < k/2 by construction") - &q_k;
    let q_restriction = if k == 1 {
        IntPoly::one()
    } else {
        uniform_q(k - 1, k)?
    };
    let mut inner = IntPoly::monomial(k - 1);
    inner = &inner + &IntPoly::constant(k as i64);
    inner = &inner - &q_restriction;
    for j in 2..k {
        inner = &inner + &IntPoly::monomial(j - 1).scale(&binomial(k, j));
    }
    let rhs = &IntPoly::from_i64s(&[-1, 1]) * &inner;
    Ok(&lhs - &rhs)
}

/// The coarse circuit-hyperplane bound
/// `floor(C(n,k) * min(1/(k+1), 1/(n-k+1)))`.
pub fn lambda_bound(n: usize, k: usize) -> Result<BigInt, ClosedFormError> {
    require(k >= 1 && k <= n, || {
        format!("lambda_bound requires 1 <= k <= n, got ({n}, {k})")
    })?;
    let denom = BigInt::from((k + 1).max(n - k + 1));
    Ok(binomial(n, k) / denom)
}

/// Closed-form triple of any sparse paving matroid with parameters
/// `(n, k, lambda)`:
/// `P = P_{U_{k,n}} - lambda p_k`, and likewise for `Q` and `Z`.
pub fn sparse_paving_triple(n: usize, k: usize, lambda: u64) -> Result<KlTriple, ClosedFormError> {
    require(k >= 1 && k <= n, || {
        format!("sparse_paving_triple requires 1 <= k <= n, got ({n}, {k})")
    })?;
    let uniform = uniform_triple(k, n)?;
    let deltas = delta_set(k)?;
    let l = BigInt::from(lambda);
    Ok(KlTriple {
        p: &uniform.p - &deltas.p.scale(&l),
        q: &uniform.q - &deltas.q.scale(&l),
        z: &uniform.z - &deltas.z.scale(&l),
        rank: k,
        size: n,
    })
}

/// True when `lambda` exceeds [`lambda_bound`]; callers treat this as a
/// warning, not an error.
pub fn lambda_exceeds_bound(n: usize, k: usize, lambda: u64) -> Result<bool, ClosedFormError> {
    Ok(BigInt::from(lambda) > lambda_bound(n, k)?)
}

/// Coefficient `[t^j] Q_M` of a sparse paving matroid straight from the
/// explicit two-term formula.
pub fn q_sparse_coeff(
    n: usize,
    k: usize,
    lambda: u64,
    j: usize,
) -> Result<BigInt, ClosedFormError> {
    require(k >= 1 && k < n, || {
        format!("q_sparse_coeff requires 1 <= k < n, got ({n}, {k})")
    })?;
    require(2 * j < k, || {
        format!("q_sparse_coeff requires 0 <= j <= (k-1)/2, got j={j} for k={k}")
    })?;
    let uniform_part = BigRational::from_integer(binomial(n, k) * binomial(k, j))
        * BigRational::new(
            BigInt::from(n - k) * BigInt::from(k - 2 * j),
            BigInt::from(n - k + j) * BigInt::from(n - j),
        );
    let delta_first = BigRational::from_integer(binomial(k, j))
        * BigRational::new(
            BigInt::from(k + 1) * BigInt::from(k - 2 * j),
            BigInt::from(1 + j) * BigInt::from(k + 1 - j),
        );
    let delta_second = BigRational::from_integer(binomial(k - 1, j))
        * BigRational::new(
            BigInt::from(k) * BigInt::from(k as i64 - 1 - 2 * j as i64),
            BigInt::from(1 + j) * BigInt::from(k - j),
        );
    let value = uniform_part
        - BigRational::from_integer(BigInt::from(lambda)) * (delta_first - delta_second);
    if !value.is_integer() {
        return Err(ClosedFormError::NonIntegralCoefficient {
            index: j,
            value: value.to_string(),
        });
    }
    Ok(value.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Signed};

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    #[test]
    fn chi_uniform_values() {
        assert_eq!(chi_uniform(3, 6), poly(&[-10, 15, -6, 1]));
        assert_eq!(chi_uniform(2, 3), poly(&[2, -3, 1]));
        assert_eq!(chi_uniform(1, 5), poly(&[-1, 1]));
        assert_eq!(chi_uniform(0, 0), IntPoly::one());
        assert_eq!(chi_uniform(0, 2), IntPoly::zero());
        assert_eq!(chi_uniform(3, 3), poly(&[-1, 3, -3, 1]));
    }

    #[test]
    fn uniform_p_examples() {
        assert_eq!(uniform_p(3, 4).unwrap(), poly(&[1, 2]));
        assert_eq!(uniform_p(3, 6).unwrap(), poly(&[1, 9]));
        assert_eq!(uniform_p(4, 4).unwrap(), IntPoly::one());
        assert_eq!(uniform_p(2, 7).unwrap(), IntPoly::one());
        assert_eq!(uniform_p(0, 0).unwrap(), IntPoly::one());
        assert_eq!(uniform_p(0, 3).unwrap(), IntPoly::zero());
        assert!(uniform_p(4, 3).is_err());
    }

    #[test]
    fn uniform_p_matches_coefficient_formula_on_corank_one() {
        // [t^i] P_{U_{k,k+1}} = C(k-i-1, i) C(k+1, i) / (i+1)
        for k in 1..=30usize {
            let p = uniform_p(k, k + 1).unwrap();
            let mut expected = Vec::new();
            for i in 0..=(k.saturating_sub(1)) / 2 {
                let v = BigRational::new(
                    binomial(k - i - 1, i) * binomial(k + 1, i),
                    BigInt::from(i + 1),
                );
                assert!(v.is_integer());
                expected.push(v.to_integer());
            }
            assert_eq!(p, IntPoly::from_coeffs(expected), "k = {k}");
        }
    }

    #[test]
    fn uniform_q_examples() {
        assert_eq!(uniform_q(1, 2).unwrap(), IntPoly::one());
        assert_eq!(uniform_q(3, 6).unwrap(), poly(&[10, 9]));
        assert_eq!(uniform_q(3, 4).unwrap(), poly(&[3, 2]));
        assert_eq!(uniform_q(2, 3).unwrap(), poly(&[2]));
        assert_eq!(uniform_q(5, 5).unwrap(), IntPoly::one());
        assert_eq!(uniform_q(0, 4).unwrap(), IntPoly::zero());
    }

    #[test]
    fn uniform_q_constant_term_counts_corank_bases() {
        // [t^0] Q_{U_{k,n}} = C(n-1, k-1) for 1 <= k < n
        for n in 2..=12usize {
            for k in 1..n {
                assert_eq!(uniform_q(k, n).unwrap().coeff(0), binomial(n - 1, k - 1));
            }
        }
    }

    #[test]
    fn uniform_z_examples() {
        assert_eq!(uniform_z(1, 1).unwrap(), poly(&[1, 1]));
        assert_eq!(uniform_z(3, 6).unwrap(), poly(&[1, 15, 15, 1]));
        assert_eq!(uniform_z(2, 2).unwrap(), poly(&[1, 2, 1]));
        assert_eq!(uniform_z(0, 5).unwrap(), IntPoly::one());
        // palindromic of degree k
        for (k, n) in [(3usize, 8usize), (4, 9), (5, 11)] {
            let z = uniform_z(k, n).unwrap();
            assert_eq!(z.degree(), Some(k));
            assert_eq!(z.reciprocal(k).unwrap(), z);
        }
    }

    /// Table of `[t^i] p_k` for `k = 1..=12`.
    pub(crate) const P_TABLE: [&[i64]; 12] = [
        &[1],
        &[],
        &[0, 2],
        &[0, 3],
        &[0, 4, 5],
        &[0, 5, 16],
        &[0, 6, 35, 14],
        &[0, 7, 64, 70],
        &[0, 8, 105, 216, 42],
        &[0, 9, 160, 525, 288],
        &[0, 10, 231, 1100, 1155, 132],
        &[0, 11, 320, 2079, 3520, 1155],
    ];

    /// Table of `[t^i] q_k` for `k = 1..=12`.
    pub(crate) const Q_TABLE: [&[i64]; 12] = [
        &[1],
        &[1],
        &[1, 2],
        &[1, 3],
        &[1, 4, 5],
        &[1, 5, 9],
        &[1, 6, 14, 14],
        &[1, 7, 20, 28],
        &[1, 8, 27, 48, 42],
        &[1, 9, 35, 75, 90],
        &[1, 10, 44, 110, 165, 132],
        &[1, 11, 54, 154, 275, 297],
    ];

    /// Table of `[t^i] z_k` for `k = 1..=10`.
    pub(crate) const Z_TABLE: [&[i64]; 10] = [
        &[],
        &[0, 1],
        &[0, 2, 2],
        &[0, 3, 8, 3],
        &[0, 4, 20, 20, 4],
        &[0, 5, 40, 75, 40, 5],
        &[0, 6, 70, 210, 210, 70, 6],
        &[0, 7, 112, 490, 784, 490, 112, 7],
        &[0, 8, 168, 1008, 2352, 2352, 1008, 168, 8],
        &[0, 9, 240, 1890, 6048, 8820, 6048, 1890, 240, 9],
    ];

    #[test]
    fn delta_tables() {
        for (i, row) in P_TABLE.iter().enumerate() {
            assert_eq!(delta_p(i + 1).unwrap(), poly(row), "p_{}", i + 1);
        }
        for (i, row) in Q_TABLE.iter().enumerate() {
            assert_eq!(delta_q(i + 1).unwrap(), poly(row), "q_{}", i + 1);
        }
        for (i, row) in Z_TABLE.iter().enumerate() {
            assert_eq!(delta_z(i + 1).unwrap(), poly(row), "z_{}", i + 1);
        }
    }

    #[test]
    fn delta_z_three_routes_agree() {
        for k in 1..=30 {
            let a = delta_z(k).unwrap();
            let b = delta_z_binomial(k).unwrap();
            let c = delta_z_via_p(k).unwrap();
            assert_eq!(a, b, "binomial route, k = {k}");
            assert_eq!(a, c, "p-route, k = {k}");
        }
    }

    #[test]
    fn functional_equations_have_zero_residual() {
        for k in 1..=30 {
            assert!(
                delta_p_residual(k).unwrap().is_zero(),
                "p residual, k = {k}"
            );
            assert!(
                delta_q_residual(k).unwrap().is_zero(),
                "q residual, k = {k}"
            );
        }
    }

    #[test]
    fn delta_degrees_and_positivity() {
        for k in 1..=30usize {
            let p = delta_p(k).unwrap();
            let q = delta_q(k).unwrap();
            let z = delta_z(k).unwrap();
            for poly in [&p, &q, &z] {
                assert!(poly.coeffs().iter().all(|c| !c.is_negative()), "k = {k}");
            }
            // p_2 and z_1 are identically zero; all other degrees are exact.
            if k == 2 {
                assert!(p.is_zero());
            } else {
                assert_eq!(p.degree(), Some((k - 1) / 2), "deg p_{k}");
            }
            assert_eq!(q.degree(), Some((k - 1) / 2), "deg q_{k}");
            if k == 1 {
                assert!(z.is_zero());
            } else {
                assert_eq!(z.degree(), Some(k - 1), "deg z_{k}");
            }
            // constant terms
            if k > 1 {
                assert!(p.coeff(0).is_zero());
            }
            assert!(q.coeff(0).is_one());
        }
    }

    #[test]
    fn lambda_bound_examples() {
        assert_eq!(lambda_bound(6, 3).unwrap(), BigInt::from(5));
        assert_eq!(lambda_bound(4, 2).unwrap(), BigInt::from(2));
        for k in 1..=10 {
            assert_eq!(lambda_bound(k + 1, k).unwrap(), BigInt::one());
        }
        assert_eq!(lambda_bound(30, 15).unwrap(), BigInt::from(9694845));
        assert!(lambda_bound(3, 0).is_err());
    }

    #[test]
    fn sparse_paving_triple_examples() {
        let t = sparse_paving_triple(6, 3, 4).unwrap();
        assert_eq!(t.p, poly(&[1, 1]));
        assert_eq!(t.q, poly(&[6, 1]));
        assert_eq!(t.z, poly(&[1, 7, 7, 1]));

        let t0 = sparse_paving_triple(7, 3, 0).unwrap();
        assert_eq!(t0.p, uniform_p(3, 7).unwrap());
        assert_eq!(t0.q, uniform_q(3, 7).unwrap());
        assert_eq!(t0.z, uniform_z(3, 7).unwrap());

        let t1 = sparse_paving_triple(10, 5, 1).unwrap();
        assert_eq!(t1.p, &uniform_p(5, 10).unwrap() - &poly(&[0, 4, 5]));
    }

    #[test]
    fn q_sparse_coeff_examples() {
        assert_eq!(q_sparse_coeff(6, 3, 4, 0).unwrap(), BigInt::from(6));
        assert_eq!(q_sparse_coeff(6, 3, 4, 1).unwrap(), BigInt::from(1));
        for j in 0..=2 {
            assert_eq!(
                q_sparse_coeff(9, 5, 0, j).unwrap(),
                uniform_q(5, 9).unwrap().coeff(j)
            );
        }
        assert!(q_sparse_coeff(6, 3, 4, 2).is_err());
    }

    #[test]
    fn q_sparse_coeff_matches_triple() {
        for (n, k) in [(7usize, 3usize), (9, 4), (10, 5), (8, 6)] {
            let bound = u64::try_from(&lambda_bound(n, k).unwrap()).unwrap();
            for lambda in [0, 1, bound / 2, bound] {
                let triple = sparse_paving_triple(n, k, lambda).unwrap();
                for j in 0..=(k - 1) / 2 {
                    assert_eq!(
                        q_sparse_coeff(n, k, lambda, j).unwrap(),
                        triple.q.coeff(j),
                        "(n,k,lambda,j) = ({n},{k},{lambda},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn lambda_warning_threshold() {
        assert!(!lambda_exceeds_bound(6, 3, 5).unwrap());
        assert!(lambda_exceeds_bound(6, 3, 6).unwrap());
    }
}
