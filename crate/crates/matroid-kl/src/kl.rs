//! The Kazhdan-Lusztig engine: `P`, `Q` and `Z` polynomials of arbitrary
//! matroids by the defining recursions over the lattice of flats.
//!
//! For a loopless matroid of rank `k` the three invariants are determined
//! by
//!
//! - `t^k P(1/t) = sum_F chi_{M^F}(t) P_{M_F}(t)` with `deg P < k/2`,
//! - `(-t)^k Q(1/t) = sum_F (-1)^{rk F} Q_{M^F}(t) t^{k - rk F}
//!    chi_{M_F}(1/t)` with `deg Q < k/2`,
//! - `Z = sum_F t^{rk F} P_{M_F}(t)`.
//!
//! Matroids with loops have `P = Q = 0`.
//!
//! The engine works entirely inside one flat lattice: `P` of a contraction
//! `M_F` is the `P` of the interval `[F, top]`, `Q` of a restriction `M^F`
//! that of `[bottom, F]`, and every interval characteristic polynomial
//! comes from one shared Möbius table. Proper intervals that are
//! structurally uniform are routed to the closed forms; the top-level
//! polynomials always come out of the generic recursion.

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::closed_form;
use crate::lattice::FlatLattice;
use crate::matroid::{Matroid, MatroidError};
use crate::poly::IntPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KlError {
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// The three invariants of one matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KlTriple {
    pub p: IntPoly,
    pub q: IntPoly,
    pub z: IntPoly,
    /// Rank of the matroid.
    pub rank: usize,
    /// Cardinality of the ground set.
    pub size: usize,
}

/// Extract the unique solution of `t^rank f(1/t) = f(t) + rhs(t)` with
/// `deg f < rank/2`: coefficient `i` of `f` equals coefficient `rank - i`
/// of `rhs` (negated when `negate` is set), for `0 <= i < rank/2`. Shared
/// by the `P` and `Q` recursions and by the uniform fast path.
pub(crate) fn solve_low_degree(rhs: &IntPoly, rank: usize, negate: bool) -> IntPoly {
    debug_assert!(rank >= 1);
    let mut coeffs = Vec::with_capacity((rank - 1) / 2 + 1);
    for i in 0..=(rank - 1) / 2 {
        let c = rhs.coeff(rank - i);
        coeffs.push(if negate { -c } else { c });
    }
    IntPoly::from_coeffs(coeffs)
}

pub fn kl_p(m: &Matroid) -> Result<IntPoly, KlError> {
    if !m.is_loopless() {
        return Ok(IntPoly::zero());
    }
    let engine = Engine::new(m, true)?;
    let p = engine.contraction_p();
    Ok(p[engine.lattice.bottom()].clone())
}

pub fn kl_q(m: &Matroid) -> Result<IntPoly, KlError> {
    if !m.is_loopless() {
        return Ok(IntPoly::zero());
    }
    let engine = Engine::new(m, true)?;
    let q = engine.restriction_q();
    Ok(q[engine.lattice.top()].clone())
}

pub fn kl_z(m: &Matroid) -> Result<IntPoly, KlError> {
    let engine = Engine::new(m, true)?;
    let p = engine.contraction_p();
    Ok(engine.z_from_contractions(&p))
}

/// Compute all three invariants sharing one lattice, one Möbius table and
/// one contraction memo.
pub fn kl_triple(m: &Matroid) -> Result<KlTriple, KlError> {
    triple_with_routing(m, true)
}

/// As [`kl_triple`] with uniform-interval routing disabled, so every
/// subproblem runs through the generic recursion. Slower; cross-checks the
/// routed engine in tests.
pub fn kl_triple_unrouted(m: &Matroid) -> Result<KlTriple, KlError> {
    triple_with_routing(m, false)
}

fn triple_with_routing(m: &Matroid, route: bool) -> Result<KlTriple, KlError> {
    let engine = Engine::new(m, route)?;
    let p_contr = engine.contraction_p();
    let z = engine.z_from_contractions(&p_contr);
    let (p, q) = if m.is_loopless() {
        let q_restr = engine.restriction_q();
        (
            p_contr[engine.lattice.bottom()].clone(),
            q_restr[engine.lattice.top()].clone(),
        )
    } else {
        (IntPoly::zero(), IntPoly::zero())
    };
    Ok(KlTriple {
        p,
        q,
        z,
        rank: m.rank(),
        size: m.size(),
    })
}

/// Rank layers smaller than this are processed serially.
const PAR_LAYER_THRESHOLD: usize = 48;

struct Engine {
    lattice: FlatLattice,
    ground_size: usize,
    route_uniform: bool,
    /// `mobius[g]` lists `(l, mu(g, l))` over the upset of `g`, sorted by
    /// flat index.
    mobius: Vec<Vec<(u32, i128)>>,
}

impl Engine {
    fn new(m: &Matroid, route_uniform: bool) -> Result<Engine, KlError> {
        let lattice = FlatLattice::build(m)?;
        let mobius = lattice.mobius_table();
        Ok(Engine {
            lattice,
            ground_size: m.size(),
            route_uniform,
            mobius,
        })
    }

    fn mu(&self, g: usize, l: u32) -> i128 {
        let row = &self.mobius[g];
        match row.binary_search_by_key(&l, |&(idx, _)| idx) {
            Ok(pos) => row[pos].1,
            Err(_) => 0,
        }
    }

    /// Is the interval `[g, top]` the lattice of a uniform matroid? True
    /// exactly when every proper flat `h` in it has `|h \ g| = rk h - rk g`;
    /// the parameters are then `(k - rk g, n - |flat g|)`.
    fn upper_interval_uniform(&self, g: usize) -> Option<(usize, usize)> {
        let l = &self.lattice;
        let gf = l.flat(g);
        let gr = l.rank_of_flat(g);
        let top = l.top();
        for &(hi, _) in &self.mobius[g] {
            let h = hi as usize;
            if h == top {
                continue;
            }
            if l.flat(h).card() - gf.card() != l.rank_of_flat(h) - gr {
                return None;
            }
        }
        Some((l.rank() - gr, self.ground_size - gf.card()))
    }

    /// Is the interval `[bottom, f]` the lattice of a uniform matroid?
    fn lower_interval_uniform(&self, f: usize) -> Option<(usize, usize)> {
        let l = &self.lattice;
        let ff = l.flat(f);
        for (i, g) in l.flats().iter().enumerate().take(f) {
            if g.is_subset_of(ff) && g.card() != l.rank_of_flat(i) {
                return None;
            }
        }
        Some((l.rank_of_flat(f), ff.card()))
    }

    /// `P` of the contraction by every flat, keyed by flat index.
    ///
    /// Processed by descending rank. For each flat `g` the right-hand side
    /// `sum_{H > g} chi_[g,H] P[H]` is assembled from the Möbius row of `g`
    /// and the running sums `W_L = sum_{H >= L} t^{rk H} P[H]`; the low
    /// coefficients of `P[g]` are the high coefficients of that sum.
    fn contraction_p(&self) -> Vec<IntPoly> {
        let l = &self.lattice;
        let nf = l.len();
        let k = l.rank();
        let mut p: Vec<IntPoly> = vec![IntPoly::zero(); nf];
        let mut w: Vec<IntPoly> = vec![IntPoly::zero(); nf];
        for r in (0..=k).rev() {
            let layer = l.layer(r);
            let results: Vec<(IntPoly, IntPoly)> = {
                let p = &p;
                let w = &w;
                let compute = move |g: usize| -> (IntPoly, IntPoly) {
                    if g == l.top() {
                        // contraction by the top flat is the empty matroid
                        return (IntPoly::one(), IntPoly::monomial(k));
                    }
                    let rel_rank = k - r;
                    // W'_g: the H = g term of W_g is the unknown P[g].
                    let mut w_known = IntPoly::zero();
                    for &(hi, _) in &self.mobius[g] {
                        let h = hi as usize;
                        if h != g {
                            w_known = &w_known + &p[h].shift_up(l.rank_of_flat(h));
                        }
                    }
                    if self.route_uniform && g != l.bottom() {
                        if let Some((ur, un)) = self.upper_interval_uniform(g) {
                            let pg = closed_form::uniform_p(ur, un)
                                .expect("uniform parameters from lattice are valid");
                            let wg = &w_known + &pg.shift_up(r);
                            return (pg, wg);
                        }
                    }
                    let mut rhs = IntPoly::zero();
                    for &(li, mu) in &self.mobius[g] {
                        let li = li as usize;
                        let wl = if li == g { &w_known } else { &w[li] };
                        rhs = &rhs + &shift_down_scaled(wl, l.rank_of_flat(li), mu);
                    }
                    let pg = solve_low_degree(&rhs, rel_rank, false);
                    assert_eq!(
                        pg.reciprocal(rel_rank).expect("deg P below rank"),
                        &pg + &rhs,
                        "P defining equation failed to close"
                    );
                    let wg = &w_known + &pg.shift_up(r);
                    (pg, wg)
                };
                if layer.len() >= PAR_LAYER_THRESHOLD {
                    layer.clone().into_par_iter().map(compute).collect()
                } else {
                    layer.clone().map(compute).collect()
                }
            };
            for (g, (pg, wg)) in layer.zip(results) {
                p[g] = pg;
                w[g] = wg;
            }
        }
        p
    }

    /// `Q` of the restriction to every flat, keyed by flat index. Only
    /// valid on loopless matroids.
    ///
    /// Processed by ascending rank, carrying
    /// `Phi_L = sum_{G <= L} (-1)^{rk G} Q[G] mu(G, L) t^{rk L - rk G}`;
    /// the defining equation for the restriction to `f` of rank `r` reads
    /// `t^r Q_f(1/t) = Q_f + (-1)^r (sum_{L < f} Phi_L + Phi_f^known)`
    /// where `Phi_f^known` is `Phi_f` without its unknown `G = f` term.
    fn restriction_q(&self) -> Vec<IntPoly> {
        let l = &self.lattice;
        let nf = l.len();
        let k = l.rank();
        let mut q: Vec<IntPoly> = vec![IntPoly::zero(); nf];
        let mut phi: Vec<IntPoly> = vec![IntPoly::zero(); nf];
        for r in 0..=k {
            let layer = l.layer(r);
            let results: Vec<(IntPoly, IntPoly)> = {
                let q = &q;
                let phi = &phi;
                let compute = move |f: usize| -> (IntPoly, IntPoly) {
                    if f == l.bottom() {
                        // loopless: the restriction to the bottom flat is empty
                        return (IntPoly::one(), IntPoly::one());
                    }
                    let ff = l.flat(f);
                    let mut phi_known = IntPoly::zero();
                    let mut phi_sum = IntPoly::zero();
                    for (g, gf) in l.flats().iter().enumerate().take(f) {
                        if !gf.is_subset_of(ff) {
                            continue;
                        }
                        let gr = l.rank_of_flat(g);
                        phi_sum = &phi_sum + &phi[g];
                        let mu = self.mu(g, f as u32);
                        if mu != 0 {
                            let signed = if gr.is_multiple_of(2) {
                                BigInt::from(mu)
                            } else {
                                -BigInt::from(mu)
                            };
                            phi_known = &phi_known + &q[g].scale(&signed).shift_up(r - gr);
                        }
                    }
                    let s = &phi_sum + &phi_known;
                    let qf = if self.route_uniform && f != l.top() {
                        match self.lower_interval_uniform(f) {
                            Some((ur, un)) => closed_form::uniform_q(ur, un)
                                .expect("uniform parameters from lattice are valid"),
                            None => solve_and_check_q(&s, r),
                        }
                    } else {
                        solve_and_check_q(&s, r)
                    };
                    let phi_f = if r.is_multiple_of(2) {
                        &phi_known + &qf
                    } else {
                        &phi_known - &qf
                    };
                    (qf, phi_f)
                };
                if layer.len() >= PAR_LAYER_THRESHOLD {
                    layer.clone().into_par_iter().map(compute).collect()
                } else {
                    layer.clone().map(compute).collect()
                }
            };
            for (f, (qf, phi_f)) in layer.zip(results) {
                q[f] = qf;
                phi[f] = phi_f;
            }
        }
        q
    }

    /// `Z = sum_F t^{rk F} P_{M_F}`.
    fn z_from_contractions(&self, p: &[IntPoly]) -> IntPoly {
        let l = &self.lattice;
        let mut z = IntPoly::zero();
        for (i, pi) in p.iter().enumerate() {
            z = &z + &pi.shift_up(l.rank_of_flat(i));
        }
        z
    }
}

/// `mu * t^{-shift} * w` where `w` is divisible by `t^shift`.
fn shift_down_scaled(w: &IntPoly, shift: usize, mu: i128) -> IntPoly {
    if mu == 0 || w.is_zero() {
        return IntPoly::zero();
    }
    let cut = shift.min(w.coeffs().len());
    debug_assert!(w.coeffs()[..cut].iter().all(num_traits::Zero::is_zero));
    let mu = BigInt::from(mu);
    IntPoly::from_coeffs(w.coeffs()[cut..].iter().map(|c| c * &mu).collect())
}

fn solve_and_check_q(s: &IntPoly, rank: usize) -> IntPoly {
    let qf = solve_low_degree(s, rank, rank % 2 == 1);
    let x = if rank.is_multiple_of(2) {
        s.clone()
    } else {
        -s
    };
    assert_eq!(
        qf.reciprocal(rank).expect("deg Q below rank"),
        &qf + &x,
        "Q defining equation failed to close"
    );
    qf
}
