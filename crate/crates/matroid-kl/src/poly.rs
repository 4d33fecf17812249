//! Dense univariate and bivariate polynomials with exact integer or
//! rational coefficients.
//!
//! Coefficients are stored in ascending degree with no trailing zeros; the
//! zero polynomial is the empty coefficient list. Every operation produces
//! canonical output.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("degree {deg} exceeds reciprocal-transform bound {k}")]
    DegreeExceedsK { deg: usize, k: usize },
    #[error("ground set of size {n} too large for the Tutte subset sum (max 24)")]
    GroundSetTooLargeForTutte { n: usize },
}

/// Univariate polynomial over the integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        IntPoly::from_coeffs(vec![c.into()])
    }

    /// `t^d` with coefficient one.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `t^d`.
    pub fn shift_up(&self, d: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.extend_from_slice(&self.coeffs);
        IntPoly { coeffs }
    }

    /// `t^k * p(1/t)`: coefficient `i` of the input becomes coefficient
    /// `k - i` of the output. Requires `deg p <= k`.
    pub fn reciprocal(&self, k: usize) -> Result<IntPoly, PolyError> {
        if let Some(d) = self.degree() {
            if d > k {
                return Err(PolyError::DegreeExceedsK { deg: d, k });
            }
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[k - i] = c.clone();
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Greatest common divisor of all coefficients (non-negative); zero for
    /// the zero polynomial.
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide every coefficient by the content and make the leading
    /// coefficient positive. Returns zero unchanged.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.coeffs.last().unwrap().is_negative() {
            g = -g;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Exact division; panics if `divisor` does not divide `self` over the
    /// integers. Used where divisibility is guaranteed structurally.
    pub fn div_exact(&self, divisor: &IntPoly) -> IntPoly {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let dd = divisor.degree().unwrap();
        let nd = self.degree().unwrap();
        assert!(nd >= dd, "exact division with smaller dividend");
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let (q, r) = num_integer::Integer::div_rem(&rem[i + dd], lead);
            assert!(r.is_zero(), "inexact polynomial division");
            for (j, c) in divisor.coeffs.iter().enumerate() {
                let prod = &q * c;
                rem[i + j] -= prod;
            }
            quot[i] = q;
        }
        assert!(
            rem.iter().all(|c| c.is_zero()),
            "inexact polynomial division"
        );
        IntPoly::from_coeffs(quot)
    }

    /// `(t - 1)^j` expanded.
    pub fn t_minus_one_pow(j: usize) -> IntPoly {
        let base = IntPoly::from_i64s(&[-1, 1]);
        let mut acc = IntPoly::one();
        for _ in 0..j {
            acc = &acc * &base;
        }
        acc
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntPoly {
    /// Ascending display form: `1 + 11t + 5t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Univariate polynomial over the rationals, kept in canonical reduced form.
/// Only the Sturm machinery needs it.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = RatPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_int(p: &IntPoly) -> Self {
        RatPoly::from_coeffs(
            p.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Euclidean division: `(quotient, remainder)` with
    /// `self = quotient * divisor + remainder` and
    /// `deg remainder < deg divisor`.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero());
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        let qlen = self.coeffs.len().saturating_sub(dd);
        let mut quot = vec![BigRational::zero(); qlen];
        while rem.len() > dd {
            let q = rem.last().unwrap() / lead;
            let shift = rem.len() - 1 - dd;
            quot[shift] = q.clone();
            for (j, c) in divisor.coeffs.iter().enumerate() {
                let prod = &q * c;
                rem[shift + j] -= prod;
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.is_empty() {
                break;
            }
        }
        (RatPoly::from_coeffs(quot), RatPoly { coeffs: rem })
    }

    /// Remainder of Euclidean division by `divisor`.
    pub fn rem(&self, divisor: &RatPoly) -> RatPoly {
        self.div_rem(divisor).1
    }

    /// Clear denominators and divide by integer content; the result is a
    /// primitive integer polynomial that is a positive rational multiple of
    /// `self`.
    pub fn to_primitive_int(&self) -> IntPoly {
        use num_integer::Integer;
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let p = IntPoly::from_coeffs(ints);
        let mut prim = p.primitive_part();
        // primitive_part makes the leading coefficient positive; undo that
        // if the original leading sign was negative.
        if self.leading_coeff().unwrap().is_negative() {
            prim = -&prim;
        }
        prim
    }
}

/// Bivariate polynomial over the integers: `coeffs[i][j]` multiplies
/// `x^i y^j`. Canonical: no all-zero trailing rows or columns.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiPoly {
    rows: Vec<Vec<BigInt>>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { rows: Vec::new() }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let mut p = BiPoly { rows };
        p.normalize();
        p
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        BiPoly::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
                .collect(),
        )
    }

    fn normalize(&mut self) {
        for row in &mut self.rows {
            while row.last().is_some_and(|c| c.is_zero()) {
                row.pop();
            }
        }
        while self.rows.last().is_some_and(|r| r.is_empty()) {
            self.rows.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.rows
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        if self.rows.len() <= i {
            self.rows.resize(i + 1, Vec::new());
        }
        if self.rows[i].len() <= j {
            self.rows[i].resize(j + 1, BigInt::zero());
        }
        self.rows[i][j] += c;
        self.normalize();
    }

    pub fn scale(&self, c: &BigInt) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|a| a * c).collect())
                .collect(),
        }
    }

    /// Evaluate at `x = p(t)`, `y = q(t)` to get a univariate polynomial.
    pub fn eval_poly(&self, x: &IntPoly, y: &IntPoly) -> IntPoly {
        let max_i = self.rows.len();
        let max_j = self.rows.iter().map(|r| r.len()).max().unwrap_or(0);
        let mut xpow = Vec::with_capacity(max_i);
        let mut ypow = Vec::with_capacity(max_j);
        xpow.push(IntPoly::one());
        for _ in 1..max_i {
            xpow.push(xpow.last().unwrap() * x);
        }
        ypow.push(IntPoly::one());
        for _ in 1..max_j {
            ypow.push(ypow.last().unwrap() * y);
        }
        let mut acc = IntPoly::zero();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    acc = &acc + &(&xpow[i] * &ypow[j]).scale(c);
                }
            }
        }
        acc
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.rows.len().max(rhs.rows.len());
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.rows.get(i);
            let b = rhs.rows.get(i);
            let m = a.map_or(0, |r| r.len()).max(b.map_or(0, |r| r.len()));
            let mut row = Vec::with_capacity(m);
            for j in 0..m {
                row.push(self.coeff(i, j) + rhs.coeff(i, j));
            }
            rows.push(row);
        }
        BiPoly::from_rows(rows)
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let n = self.rows.len().max(rhs.rows.len());
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.rows.get(i);
            let b = rhs.rows.get(i);
            let m = a.map_or(0, |r| r.len()).max(b.map_or(0, |r| r.len()));
            let mut row = Vec::with_capacity(m);
            for j in 0..m {
                row.push(self.coeff(i, j) - rhs.coeff(i, j));
            }
            rows.push(row);
        }
        BiPoly::from_rows(rows)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let rows_a = self.rows.len();
        let rows_b = rhs.rows.len();
        let cols_a = self.rows.iter().map(|r| r.len()).max().unwrap();
        let cols_b = rhs.rows.iter().map(|r| r.len()).max().unwrap();
        let mut rows = vec![vec![BigInt::zero(); cols_a + cols_b - 1]; rows_a + rows_b - 1];
        for (i, ra) in self.rows.iter().enumerate() {
            for (j, a) in ra.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (p, rb) in rhs.rows.iter().enumerate() {
                    for (q, b) in rb.iter().enumerate() {
                        rows[i + p][j + q] += a * b;
                    }
                }
            }
        }
        BiPoly::from_rows(rows)
    }
}

impl fmt::Display for BiPoly {
    /// Terms ascending by total degree then x-degree: `x + y - xy`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(usize, usize)> = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    terms.push((i, j));
                }
            }
        }
        terms.sort_by_key(|&(i, j)| (i + j, j));
        let mut first = true;
        for (i, j) in terms {
            let c = self.coeff(i, j);
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if (i, j) == (0, 0) {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}")?;
                }
                match i {
                    0 => {}
                    1 => write!(f, "x")?,
                    _ => write!(f, "x^{i}")?,
                }
                match j {
                    0 => {}
                    1 => write!(f, "y")?,
                    _ => write!(f, "y^{j}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_examples() {
        let a = IntPoly::from_i64s(&[1, 2]);
        let b = IntPoly::from_i64s(&[-1, 1]);
        assert_eq!(&a + &b, IntPoly::from_i64s(&[0, 3]));
        let c = IntPoly::from_i64s(&[1, 1]);
        assert_eq!(&c * &c, IntPoly::from_i64s(&[1, 2, 1]));
        assert!((&a - &a).is_zero());
        assert_eq!((&a - &a).coeffs().len(), 0);
    }

    #[test]
    fn reciprocal_transform() {
        let p = IntPoly::from_i64s(&[1, 2]);
        assert_eq!(p.reciprocal(3).unwrap(), IntPoly::from_i64s(&[0, 0, 2, 1]));
        assert_eq!(IntPoly::one().reciprocal(0).unwrap(), IntPoly::one());
        let q = IntPoly::from_i64s(&[3, 0, 7, 1]);
        assert_eq!(q.reciprocal(5).unwrap().reciprocal(5).unwrap(), q);
        assert_eq!(
            q.reciprocal(2),
            Err(PolyError::DegreeExceedsK { deg: 3, k: 2 })
        );
    }

    #[test]
    fn display_uses_ascending_form() {
        assert_eq!(
            IntPoly::from_i64s(&[1, 11, 5]).to_string(),
            "1 + 11t + 5t^2"
        );
        assert_eq!(IntPoly::from_i64s(&[0, 1]).to_string(), "t");
        assert_eq!(IntPoly::from_i64s(&[1, -1]).to_string(), "1 - t");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::from_i64s(&[-2, 0, 1]).to_string(), "-2 + t^2");
    }

    #[test]
    fn exact_division() {
        let p = IntPoly::from_i64s(&[1, 2, 1]);
        let d = IntPoly::from_i64s(&[1, 1]);
        assert_eq!(p.div_exact(&d), d);
        let t2 = IntPoly::from_i64s(&[0, 0, 6]);
        assert_eq!(
            t2.div_exact(&IntPoly::from_i64s(&[0, 3])),
            IntPoly::from_i64s(&[0, 2])
        );
    }

    #[test]
    fn rat_poly_rem_and_primitive() {
        // x^2 - 1 mod (2x - 2) = 0
        let p = RatPoly::from_int(&IntPoly::from_i64s(&[-1, 0, 1]));
        let d = RatPoly::from_int(&IntPoly::from_i64s(&[-2, 2]));
        assert!(p.rem(&d).is_zero());
        // x^2 + 1 mod (x - 1) = 2
        let p = RatPoly::from_int(&IntPoly::from_i64s(&[1, 0, 1]));
        let d = RatPoly::from_int(&IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(p.rem(&d), RatPoly::from_int(&IntPoly::from_i64s(&[2])));
        // positive multiple: (1 - t)/2 scales to 1 - t, keeping the sign
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let q = RatPoly::from_coeffs(vec![half.clone(), -half]);
        assert_eq!(q.to_primitive_int(), IntPoly::from_i64s(&[1, -1]));
    }

    #[test]
    fn bipoly_ops() {
        let mut t = BiPoly::zero();
        t.add_term(1, 1, &BigInt::from(-1));
        t.add_term(1, 0, &BigInt::from(1));
        t.add_term(0, 1, &BigInt::from(1));
        assert_eq!(t.to_string(), "x + y - xy");
        // chi specialization shape: evaluate at x = 1 - t, y = 0
        let x = IntPoly::from_i64s(&[1, -1]);
        let y = IntPoly::zero();
        assert_eq!(t.eval_poly(&x, &y), IntPoly::from_i64s(&[1, -1]));
    }

    #[test]
    fn bipoly_ring_ops() {
        // (x + y)^2 = x^2 + 2xy + y^2
        let s = BiPoly::from_i64_rows(&[&[0, 1], &[1]]);
        let sq = &s * &s;
        assert_eq!(sq, BiPoly::from_i64_rows(&[&[0, 0, 1], &[0, 2], &[1]]));
        assert_eq!(sq.scale(&BigInt::from(3)).coeff(1, 1), BigInt::from(6));
        assert!((&sq - &sq).is_zero());
        // multiplicativity of Tutte over direct sums: T_{B_2} = x^2 = (T_{B_1})^2
        let b1 = BiPoly::from_i64_rows(&[&[], &[1]]);
        assert_eq!(&b1 * &b1, BiPoly::from_i64_rows(&[&[], &[], &[1]]));
    }
}
