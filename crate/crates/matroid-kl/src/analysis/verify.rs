//! Verification of the four relaxation identities on a concrete
//! `(matroid, circuit-hyperplane)` pair:
//!
//! 1. flats of the relaxation = (flats minus `H`) plus all
//!    `(|H|-1)`-subsets of `H`,
//! 2. `T_relaxed = T - xy + x + y` (ground sets up to 24 elements),
//! 3. `chi_relaxed - chi = (-1)^k (1 - t)`,
//! 4. `P/Q/Z` of the relaxation differ from the originals by exactly
//!    `p_k`, `q_k`, `z_k`.

use std::collections::BTreeSet;

use crate::closed_form;
use crate::kl::{kl_triple, KlError};
use crate::lattice::FlatLattice;
use crate::matroid::Matroid;
use crate::poly::IntPoly;
use crate::subset::Subset;
use crate::tutte::{characteristic_polynomial, tutte_polynomial, MAX_TUTTE_GROUND_SET};

/// Pass/fail record of one relaxation verification, with the observed
/// deltas for reporting.
#[derive(Clone, Debug)]
pub struct RelaxationReport {
    pub n: usize,
    pub rank: usize,
    pub hyperplane: Subset,
    pub flats_identity: bool,
    /// `None` when the ground set is too large for the Tutte subset sum.
    pub tutte_identity: Option<bool>,
    pub characteristic_identity: bool,
    pub p_delta_matches: bool,
    pub q_delta_matches: bool,
    pub z_delta_matches: bool,
    pub observed_p_delta: IntPoly,
    pub observed_q_delta: IntPoly,
    pub observed_z_delta: IntPoly,
}

impl RelaxationReport {
    pub fn all_pass(&self) -> bool {
        self.flats_identity
            && self.tutte_identity.unwrap_or(true)
            && self.characteristic_identity
            && self.p_delta_matches
            && self.q_delta_matches
            && self.z_delta_matches
    }
}

/// Relax `h` in `m` and check all four identity groups.
pub fn verify_relaxation(m: &Matroid, h: Subset) -> Result<RelaxationReport, KlError> {
    let relaxed = m.relax(h)?;
    let k = m.rank();

    // (1) flats identity
    let flats_m: BTreeSet<Subset> = FlatLattice::build(m)?.flats().iter().copied().collect();
    let flats_r: BTreeSet<Subset> = FlatLattice::build(&relaxed)?
        .flats()
        .iter()
        .copied()
        .collect();
    let mut expected: BTreeSet<Subset> = flats_m.clone();
    expected.remove(&h);
    for e in h.iter() {
        expected.insert(h.without(e));
    }
    let flats_identity = flats_r == expected;

    // (2) Tutte identity on small ground sets
    let tutte_identity = if m.size() <= MAX_TUTTE_GROUND_SET {
        let tm = tutte_polynomial(m).expect("size checked");
        let tr = tutte_polynomial(&relaxed).expect("size checked");
        let mut delta = crate::poly::BiPoly::zero();
        delta.add_term(1, 1, &(-1).into());
        delta.add_term(1, 0, &1.into());
        delta.add_term(0, 1, &1.into());
        Some(&tr - &tm == delta)
    } else {
        None
    };

    // (3) characteristic identity
    let chi_m = characteristic_polynomial(m)?;
    let chi_r = characteristic_polynomial(&relaxed)?;
    let expected_chi_delta = if k.is_multiple_of(2) {
        IntPoly::from_i64s(&[1, -1])
    } else {
        IntPoly::from_i64s(&[-1, 1])
    };
    let characteristic_identity = &chi_r - &chi_m == expected_chi_delta;

    // (4) P/Q/Z deltas
    let before = kl_triple(m)?;
    let after = kl_triple(&relaxed)?;
    let observed_p_delta = &after.p - &before.p;
    let observed_q_delta = &after.q - &before.q;
    let observed_z_delta = &after.z - &before.z;
    let dp = closed_form::delta_p(k).expect("rank >= 1 when a circuit-hyperplane exists");
    let dq = closed_form::delta_q(k).expect("rank >= 1");
    let dz = closed_form::delta_z(k).expect("rank >= 1");

    Ok(RelaxationReport {
        n: m.size(),
        rank: k,
        hyperplane: h,
        flats_identity,
        tutte_identity,
        characteristic_identity,
        p_delta_matches: observed_p_delta == dp,
        q_delta_matches: observed_q_delta == dq,
        z_delta_matches: observed_z_delta == dz,
        observed_p_delta,
        observed_q_delta,
        observed_z_delta,
    })
}
