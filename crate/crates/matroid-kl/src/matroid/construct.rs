//! Named matroid constructions: uniform and boolean matroids, graphic
//! matroids, wheels and whirls, direct sums, minimal relaxed matroids and
//! sparse paving matroids given by their circuit-hyperplanes.

use num_bigint::BigInt;

use super::{Matroid, MatroidError};
use crate::combinatorics::{binomial, k_subsets};
use crate::subset::{Subset, MAX_GROUND_SET};

/// Refuse to enumerate base sets beyond this size; closed forms cover the
/// large uniform cases without enumeration.
const MAX_ENUMERATED_BASES: u64 = 10_000_000;

impl Matroid {
    /// The uniform matroid `U_{k,n}`: every `k`-subset of an `n`-element
    /// ground set is a basis.
    pub fn uniform(k: usize, n: usize) -> Result<Matroid, MatroidError> {
        if n > MAX_GROUND_SET {
            return Err(MatroidError::GroundSetTooLarge(n));
        }
        if k > n {
            return Err(MatroidError::InvalidParameter(format!(
                "uniform matroid requires k <= n, got k={k}, n={n}"
            )));
        }
        let count = binomial(n, k);
        if count > BigInt::from(MAX_ENUMERATED_BASES) {
            return Err(MatroidError::InvalidParameter(format!(
                "refusing to enumerate {count} bases of U_{{{k},{n}}}; use the closed forms"
            )));
        }
        let bases: Vec<Subset> = k_subsets(n, k).collect();
        Ok(Matroid::new_unchecked(n, bases).with_label(format!("U_{{{k},{n}}}")))
    }

    /// The boolean matroid `B_n = U_{n,n}`.
    pub fn boolean(n: usize) -> Result<Matroid, MatroidError> {
        Ok(Matroid::uniform(n, n)?.with_label(format!("B_{n}")))
    }

    /// Cycle matroid of a graph on `vertex_count` vertices. Loops and
    /// parallel edges are allowed; edges are labelled by their index in
    /// `edges`. Bases are the maximal spanning forests.
    pub fn graphic(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Matroid, MatroidError> {
        let n = edges.len();
        if n > MAX_GROUND_SET {
            return Err(MatroidError::GroundSetTooLarge(n));
        }
        for &(a, b) in edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(MatroidError::InvalidParameter(format!(
                    "edge ({a}, {b}) out of range for {vertex_count} vertices"
                )));
            }
        }
        // Rank = vertices - components of the whole graph.
        let mut dsu = Dsu::new(vertex_count);
        for &(a, b) in edges {
            dsu.union(a, b);
        }
        let rank = vertex_count - dsu.components();
        // Enumerate acyclic edge subsets of size `rank` by backtracking.
        let mut bases = Vec::new();
        let mut chosen = Subset::EMPTY;
        let mut stack = Dsu::new(vertex_count);
        search_forests(edges, 0, rank, &mut chosen, &mut stack, &mut bases);
        if bases.is_empty() {
            // rank 0 graph (only loops or no edges): single empty basis
            bases.push(Subset::EMPTY);
        }
        Ok(Matroid::new_unchecked(n, bases))
    }

    /// The rank-`k` wheel: cycle `C_k` plus a cone vertex. Spokes are
    /// labelled `0..k-1` (spoke `i` joins rim vertex `i` to the hub), rim
    /// edges `k..2k-1` (rim edge `k + i` joins rim vertices `i` and
    /// `i + 1 mod k`).
    pub fn wheel(k: usize) -> Result<Matroid, MatroidError> {
        if k < 2 {
            return Err(MatroidError::InvalidParameter(format!(
                "wheel requires k >= 2, got {k}"
            )));
        }
        let hub = k;
        let mut edges = Vec::with_capacity(2 * k);
        for i in 0..k {
            edges.push((i, hub));
        }
        for i in 0..k {
            edges.push((i, (i + 1) % k));
        }
        Ok(Matroid::graphic(k + 1, &edges)?.with_label(format!("W_{k}")))
    }

    /// The rim cycle of [`Matroid::wheel`], `{k, ..., 2k-1}`.
    pub fn wheel_rim(k: usize) -> Subset {
        Subset::from_elements(k..2 * k)
    }

    /// The rank-`k` whirl: the wheel with its rim circuit-hyperplane
    /// relaxed.
    pub fn whirl(k: usize) -> Result<Matroid, MatroidError> {
        let wheel = Matroid::wheel(k)?;
        Ok(wheel
            .relax(Matroid::wheel_rim(k))?
            .with_label(format!("W^{k}")))
    }

    /// Disjoint union: the second summand's elements are shifted up by
    /// `self.size()`; bases are unions of a basis from each side.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid, MatroidError> {
        let n = self.n + other.n;
        if n > MAX_GROUND_SET {
            return Err(MatroidError::GroundSetTooLarge(n));
        }
        let shift = self.n;
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for b1 in &self.bases {
            for b2 in &other.bases {
                bases.push(Subset::from_mask(b1.mask() | (b2.mask() << shift)));
            }
        }
        Ok(Matroid::new_unchecked(n, bases))
    }

    /// The minimal relaxed matroid `T_{k,n}`: the relaxation of
    /// `U_{k-1,k} ⊕ U_{1,n-k}` at the first factor's ground set.
    pub fn minimal_relaxed(k: usize, n: usize) -> Result<Matroid, MatroidError> {
        if k < 1 || k + 1 > n {
            return Err(MatroidError::InvalidParameter(format!(
                "minimal relaxed matroid requires 1 <= k <= n-1, got k={k}, n={n}"
            )));
        }
        let m = Matroid::uniform(k - 1, k)?.direct_sum(&Matroid::uniform(1, n - k)?)?;
        let h = Subset::full(k);
        Ok(m.relax(h)?.with_label(format!("T_{{{k},{n}}}")))
    }

    /// Build the sparse paving matroid described by `spec`: every
    /// `k`-subset is a basis except the listed circuit-hyperplanes.
    pub fn from_sparse_paving_spec(spec: &SparsePavingSpec) -> Result<Matroid, MatroidError> {
        spec.validate()?;
        let count = binomial(spec.n, spec.k);
        if count > BigInt::from(MAX_ENUMERATED_BASES) {
            return Err(MatroidError::InvalidParameter(format!(
                "refusing to enumerate {count} k-subsets; use the closed forms"
            )));
        }
        let mut chs = spec.circuit_hyperplanes.clone();
        chs.sort();
        let bases: Vec<Subset> = k_subsets(spec.n, spec.k)
            .filter(|a| chs.binary_search(a).is_err())
            .collect();
        if bases.is_empty() {
            return Err(MatroidError::InvalidParameter(
                "every k-subset is listed as a circuit-hyperplane".into(),
            ));
        }
        Ok(Matroid::new_unchecked(spec.n, bases))
    }
}

/// A sparse paving matroid compressed to `(n, k, circuit-hyperplanes)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePavingSpec {
    pub n: usize,
    pub k: usize,
    pub circuit_hyperplanes: Vec<Subset>,
}

impl SparsePavingSpec {
    pub fn new(n: usize, k: usize, circuit_hyperplanes: Vec<Subset>) -> Self {
        SparsePavingSpec {
            n,
            k,
            circuit_hyperplanes,
        }
    }

    /// Number of listed circuit-hyperplanes.
    pub fn lambda(&self) -> usize {
        self.circuit_hyperplanes.len()
    }

    /// Check ranges, cardinalities and the pairwise intersection bound
    /// (any two circuit-hyperplanes share at most `k - 2` elements).
    pub fn validate(&self) -> Result<(), MatroidError> {
        if self.n > MAX_GROUND_SET {
            return Err(MatroidError::GroundSetTooLarge(self.n));
        }
        if self.k > self.n {
            return Err(MatroidError::InvalidParameter(format!(
                "sparse paving spec requires k <= n, got k={}, n={}",
                self.k, self.n
            )));
        }
        let full = Subset::full(self.n);
        for h in &self.circuit_hyperplanes {
            if !h.is_subset_of(full) {
                let element = h.difference(full).min_element().unwrap();
                return Err(MatroidError::ElementOutOfRange { element, n: self.n });
            }
            if h.card() != self.k {
                return Err(MatroidError::InvalidParameter(format!(
                    "circuit-hyperplane {h} does not have {} elements",
                    self.k
                )));
            }
        }
        for (i, &a) in self.circuit_hyperplanes.iter().enumerate() {
            for &b in &self.circuit_hyperplanes[i + 1..] {
                let got = a.intersection(b).card();
                if a == b || got + 2 > self.k {
                    return Err(MatroidError::IntersectionTooLarge {
                        a,
                        b,
                        got,
                        max: self.k.saturating_sub(2),
                    });
                }
            }
        }
        Ok(())
    }

    /// True when the listed count exceeds the coarse bound
    /// `C(n,k) * min(1/(k+1), 1/(n-k+1))`. A warning signal, not an error:
    /// such a spec cannot describe an actual matroid of this shape but the
    /// arithmetic downstream is still well defined.
    pub fn exceeds_lambda_bound(&self) -> bool {
        if self.k == 0 || self.k > self.n {
            return false;
        }
        let denom = (self.k + 1).max(self.n - self.k + 1);
        BigInt::from(self.lambda()) * BigInt::from(denom) > binomial(self.n, self.k)
    }

    pub fn to_matroid(&self) -> Result<Matroid, MatroidError> {
        Matroid::from_sparse_paving_spec(self)
    }
}

/// Union-find by size, used for forest enumeration. `find` must not
/// compress paths: `undo` relies on the parent array being exactly the
/// union history, and a compressed pointer through an undone edge would
/// leave a node attached to the wrong root.
struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Union without path compression side effects we cannot undo exactly;
    /// returns the (child, old_size_of_root) pair for rollback, or `None`
    /// if the edge closes a cycle.
    fn union_undoable(&mut self, a: usize, b: usize) -> Option<(usize, usize)> {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return None;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        self.components -= 1;
        Some((small, big))
    }

    fn undo(&mut self, (small, big): (usize, usize)) {
        self.parent[small] = small;
        self.size[big] -= self.size[small];
        self.components += 1;
    }

    fn union(&mut self, a: usize, b: usize) {
        self.union_undoable(a, b);
    }

    fn components(&self) -> usize {
        self.components
    }
}

fn search_forests(
    edges: &[(usize, usize)],
    from: usize,
    needed: usize,
    chosen: &mut Subset,
    dsu: &mut Dsu,
    out: &mut Vec<Subset>,
) {
    if needed == 0 {
        out.push(*chosen);
        return;
    }
    if edges.len() - from < needed {
        return;
    }
    for i in from..edges.len() {
        let (a, b) = edges[i];
        if let Some(undo) = dsu.union_undoable(a, b) {
            *chosen = chosen.with(i);
            search_forests(edges, i + 1, needed - 1, chosen, dsu, out);
            *chosen = chosen.without(i);
            dsu.undo(undo);
        }
        if edges.len() - (i + 1) < needed {
            break;
        }
    }
}
