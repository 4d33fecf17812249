//! Exact real-root counting over the whole real line.
//!
//! The chain is a Sturm sequence over the rationals in which every element
//! is replaced by a positive rational multiple of itself: each
//! pseudo-remainder is computed over the integers with a positive
//! multiplier and reduced to its primitive part. Positive scaling leaves
//! all sign evaluations unchanged, and keeps coefficient growth near
//! subresultant size, which matters in the scan where millions of chains
//! are computed.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::poly::{IntPoly, RatPoly};

/// Remainder of `|lc(g)|^m * f` divided by `g` for the minimal `m` that
/// keeps all arithmetic in the integers. The multiplier is positive, so
/// the result is a positive multiple of the true remainder.
fn pseudo_rem(f: &IntPoly, g: &IntPoly) -> IntPoly {
    let dg = g.degree().expect("pseudo_rem by zero polynomial");
    let lg = g.leading_coeff().unwrap().clone();
    let lg_abs = lg.abs();
    let mut r: Vec<BigInt> = f.coeffs().to_vec();
    while r.len() > dg {
        let lead = r.last().unwrap().clone();
        if lead.is_zero() {
            r.pop();
            continue;
        }
        let dr = r.len() - 1;
        // r <- |lc(g)| * r - sign(lc(g)) * lead * t^{dr-dg} * g
        // cancels the leading term and keeps the scale positive.
        let signed_lead = if lg.is_negative() { -lead } else { lead };
        for c in r.iter_mut() {
            *c *= &lg_abs;
        }
        for (j, gc) in g.coeffs().iter().enumerate() {
            let idx = dr - dg + j;
            r[idx] -= &signed_lead * gc;
        }
        debug_assert!(r.last().unwrap().is_zero());
        r.pop();
    }
    IntPoly::from_coeffs(r)
}

/// Positive-multiple primitive reduction.
fn primitive_keep_sign(p: &IntPoly) -> IntPoly {
    if p.is_zero() {
        return IntPoly::zero();
    }
    let content = p.content();
    IntPoly::from_coeffs(p.coeffs().iter().map(|c| c / &content).collect())
}

/// Greatest common divisor of two integer polynomials, primitive with
/// positive leading coefficient.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut f = a.primitive_part();
    let mut g = b.primitive_part();
    if f.is_zero() {
        return g;
    }
    while !g.is_zero() {
        if f.degree() < g.degree() {
            std::mem::swap(&mut f, &mut g);
            continue;
        }
        let rem = primitive_keep_sign(&pseudo_rem(&f, &g));
        f = g;
        g = rem;
    }
    f.primitive_part()
}

/// The square-free part `p / gcd(p, p')`, primitive. The division runs
/// over the rationals and the exact quotient is scaled back to a primitive
/// integer polynomial.
pub fn square_free_part(p: &IntPoly) -> IntPoly {
    let prim = p.primitive_part();
    match prim.degree() {
        None | Some(0) => prim,
        Some(_) => {
            let g = poly_gcd(&prim, &prim.derivative());
            if g.degree() == Some(0) {
                return prim;
            }
            let (quot, rem) = RatPoly::from_int(&prim).div_rem(&RatPoly::from_int(&g));
            assert!(rem.is_zero(), "gcd does not divide its polynomial");
            quot.to_primitive_int().primitive_part()
        }
    }
}

/// Sturm chain: `s0 = p`, `s1 = p'`, `s_{i+1} = -rem(s_{i-1}, s_i)` up to
/// positive factors. Runs until the remainder vanishes, so the last
/// element is a positive multiple of `gcd(p, p')`: one remainder sequence
/// yields both the square-free reduction (through the gcd degree) and the
/// sign data for root counting.
fn sturm_chain(p: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        if chain[n - 1].degree() == Some(0) {
            break;
        }
        let rem = primitive_keep_sign(&pseudo_rem(&chain[n - 2], &chain[n - 1]));
        if rem.is_zero() {
            break;
        }
        chain.push(-&rem);
    }
    chain
}

/// Count sign changes, dropping zero entries (the standard convention).
fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs {
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

fn sign_of(c: &BigInt) -> i8 {
    if c.is_positive() {
        1
    } else if c.is_negative() {
        -1
    } else {
        0
    }
}

/// Number of distinct real roots by Sturm's theorem on `(-inf, +inf)`:
/// the sign-change count at `-inf` (leading signs flipped at odd degree)
/// minus the count at `+inf` (leading signs). Valid for non-square-free
/// input as well: the shared factor `gcd(p, p')` scales every chain
/// element alike and drops out of the variation counts.
pub fn count_distinct_real_roots(p: &IntPoly) -> usize {
    match p.degree() {
        None | Some(0) => return 0,
        _ => {}
    }
    let chain = sturm_chain(p);
    let at_pos = sign_changes(chain.iter().map(|s| sign_of(s.leading_coeff().unwrap())));
    let at_neg = sign_changes(chain.iter().map(|s| {
        let lead = sign_of(s.leading_coeff().unwrap());
        if s.degree().unwrap().is_multiple_of(2) {
            lead
        } else {
            -lead
        }
    }));
    at_neg - at_pos
}

/// True when every complex root of `p` is real, decided exactly.
///
/// Strips powers of `t` (roots at zero are real), divides by the content,
/// and compares the Sturm count of distinct real roots against the degree
/// of the square-free part. Both come out of one remainder sequence: the
/// chain ends at (a positive multiple of) `gcd(p, p')`, whose degree is
/// the multiplicity excess, so `p` is real-rooted exactly when
/// `count == deg p - deg gcd(p, p')`. Zero and constant polynomials count
/// as real-rooted.
pub fn is_real_rooted(p: &IntPoly) -> bool {
    if p.is_zero() || p.degree() == Some(0) {
        return true;
    }
    let low_zeros = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let stripped = IntPoly::from_coeffs(p.coeffs()[low_zeros..].to_vec()).primitive_part();
    let deg = match stripped.degree() {
        None | Some(0) => return true,
        Some(d) => d,
    };
    let chain = sturm_chain(&stripped);
    let gcd_degree = chain.last().unwrap().degree().unwrap_or(0);
    let at_pos = sign_changes(chain.iter().map(|s| sign_of(s.leading_coeff().unwrap())));
    let at_neg = sign_changes(chain.iter().map(|s| {
        let lead = sign_of(s.leading_coeff().unwrap());
        if s.degree().unwrap().is_multiple_of(2) {
            lead
        } else {
            -lead
        }
    }));
    at_neg - at_pos == deg - gcd_degree
}
