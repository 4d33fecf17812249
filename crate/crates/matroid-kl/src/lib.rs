//! Exact Kazhdan-Lusztig theory of matroids.
//!
//! This crate computes the Kazhdan-Lusztig polynomial `P`, the inverse
//! Kazhdan-Lusztig polynomial `Q` and the `Z`-polynomial of a matroid from
//! the defining recursions over the lattice of flats, entirely in
//! arbitrary-precision integer arithmetic. On top of the generic engine it
//! provides:
//!
//! - circuit-hyperplane relaxation, free bases and the inverse operation,
//! - the rank-only relaxation deltas `p_k`, `q_k`, `z_k` relating the
//!   invariants of a matroid and of its relaxation,
//! - closed forms for uniform matroids and for sparse paving matroids given
//!   only `(n, k, lambda)`,
//! - exact diagnostics (Sturm real-root counting, log-concavity,
//!   non-negativity) and an exhaustive `(n, k, lambda)` scan of the sparse
//!   paving parameter space.
//!
//! All polynomial values are exact; nothing in this crate uses floating
//! point.

pub mod analysis;
pub mod closed_form;
pub mod combinatorics;
pub mod io;
pub mod kl;
pub mod lattice;
pub mod matroid;
pub mod poly;
pub mod subset;
pub mod tutte;

pub use kl::{kl_p, kl_q, kl_triple, kl_z, KlError, KlTriple};
pub use lattice::FlatLattice;
pub use matroid::{Matroid, MatroidError, SparsePavingSpec};
pub use poly::{BiPoly, IntPoly, PolyError, RatPoly};
pub use subset::Subset;
pub use tutte::{characteristic_polynomial, tutte_polynomial};
