//! The lattice of flats of a matroid.
//!
//! Flats are enumerated by breadth-first closure ascent: the rank-0 flat is
//! the closure of the empty set (the loop set), and the flats of rank
//! `r + 1` are the distinct closures of `F ∪ {e}` over rank-`r` flats `F`
//! and elements `e ∉ F`. Covering relations are recorded along the way.

use std::collections::HashMap;

use crate::matroid::{Matroid, MatroidError};
use crate::subset::Subset;

/// Default cap on the number of flats (2^26).
pub const DEFAULT_FLAT_CAP: usize = 1 << 26;

#[derive(Clone, Debug)]
pub struct FlatLattice {
    rank: usize,
    flats: Vec<Subset>,
    flat_rank: Vec<u8>,
    /// Start offset of each rank layer in `flats`; length `rank + 2`.
    rank_start: Vec<usize>,
    /// Upper covers of each flat (indices into `flats`).
    upper_covers: Vec<Vec<u32>>,
    index: HashMap<u64, u32>,
}

impl FlatLattice {
    /// Enumerate the lattice of flats with the default cap.
    pub fn build(m: &Matroid) -> Result<FlatLattice, MatroidError> {
        FlatLattice::build_with_cap(m, DEFAULT_FLAT_CAP)
    }

    pub fn build_with_cap(m: &Matroid, cap: usize) -> Result<FlatLattice, MatroidError> {
        let k = m.rank();
        let mut flats: Vec<Subset> = Vec::new();
        let mut flat_rank: Vec<u8> = Vec::new();
        let mut rank_start: Vec<usize> = Vec::with_capacity(k + 2);
        let mut upper_covers: Vec<Vec<u32>> = Vec::new();
        let mut index: HashMap<u64, u32> = HashMap::new();

        let bottom = m.closure(Subset::EMPTY);
        rank_start.push(0);
        flats.push(bottom);
        flat_rank.push(0);
        upper_covers.push(Vec::new());
        index.insert(bottom.mask(), 0);

        let mut layer: Vec<u32> = vec![0];
        for r in 0..k {
            let mut next_layer: Vec<u32> = Vec::new();
            rank_start.push(flats.len());
            for &fi in &layer {
                let f = flats[fi as usize];
                let mut covers: Vec<u32> = Vec::new();
                for e in f.complement(m.size()).iter() {
                    let g = m.closure(f.with(e));
                    let gi = match index.get(&g.mask()) {
                        Some(&gi) => gi,
                        None => {
                            if flats.len() >= cap {
                                return Err(MatroidError::FlatCountOverflow { cap });
                            }
                            let gi = flats.len() as u32;
                            flats.push(g);
                            flat_rank.push((r + 1) as u8);
                            upper_covers.push(Vec::new());
                            index.insert(g.mask(), gi);
                            next_layer.push(gi);
                            gi
                        }
                    };
                    if !covers.contains(&gi) {
                        covers.push(gi);
                    }
                }
                covers.sort_unstable();
                upper_covers[fi as usize] = covers;
            }
            // Canonical order within each rank layer: ascending mask.
            next_layer.sort_by_key(|&i| flats[i as usize].mask());
            layer = next_layer;
        }
        rank_start.push(flats.len());

        // Re-sort the whole flat list into (rank, mask) order and remap.
        let mut order: Vec<u32> = (0..flats.len() as u32).collect();
        order.sort_by_key(|&i| (flat_rank[i as usize], flats[i as usize].mask()));
        let mut remap = vec![0u32; flats.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old as usize] = new as u32;
        }
        let sorted_flats: Vec<Subset> = order.iter().map(|&i| flats[i as usize]).collect();
        let sorted_rank: Vec<u8> = order.iter().map(|&i| flat_rank[i as usize]).collect();
        let sorted_covers: Vec<Vec<u32>> = order
            .iter()
            .map(|&i| {
                let mut c: Vec<u32> = upper_covers[i as usize]
                    .iter()
                    .map(|&j| remap[j as usize])
                    .collect();
                c.sort_unstable();
                c
            })
            .collect();
        let mut sorted_index = HashMap::with_capacity(sorted_flats.len());
        for (i, f) in sorted_flats.iter().enumerate() {
            sorted_index.insert(f.mask(), i as u32);
        }
        let mut rank_start = vec![0usize; k + 2];
        for r in &sorted_rank {
            rank_start[*r as usize + 1] += 1;
        }
        for r in 0..=k {
            rank_start[r + 1] += rank_start[r];
        }

        Ok(FlatLattice {
            rank: k,
            flats: sorted_flats,
            flat_rank: sorted_rank,
            rank_start,
            upper_covers: sorted_covers,
            index: sorted_index,
        })
    }

    /// Rank of the underlying matroid (height of the lattice).
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[Subset] {
        &self.flats
    }

    pub fn flat(&self, i: usize) -> Subset {
        self.flats[i]
    }

    pub fn rank_of_flat(&self, i: usize) -> usize {
        self.flat_rank[i] as usize
    }

    pub fn flats_of_rank(&self, r: usize) -> &[Subset] {
        &self.flats[self.rank_start[r]..self.rank_start[r + 1]]
    }

    /// Indices of the flats of rank `r`.
    pub fn layer(&self, r: usize) -> std::ops::Range<usize> {
        self.rank_start[r]..self.rank_start[r + 1]
    }

    /// Number of flats of each rank (Whitney numbers of the second kind).
    pub fn whitney_numbers(&self) -> Vec<usize> {
        (0..=self.rank)
            .map(|r| self.rank_start[r + 1] - self.rank_start[r])
            .collect()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.flats.len() - 1
    }

    pub fn index_of(&self, f: Subset) -> Option<usize> {
        self.index.get(&f.mask()).map(|&i| i as usize)
    }

    /// Upper covers (indices) of flat `i`.
    pub fn upper_covers(&self, i: usize) -> &[u32] {
        &self.upper_covers[i]
    }

    /// Indices of all flats containing flat `g`, including `g`, in
    /// (rank, mask) order.
    pub fn upset(&self, g: usize) -> Vec<u32> {
        let gf = self.flats[g];
        let mut out = Vec::new();
        for (i, f) in self.flats.iter().enumerate().skip(g) {
            if gf.is_subset_of(*f) {
                out.push(i as u32);
            }
        }
        out
    }

    /// Indices of all flats contained in flat `f`, including `f`,
    /// in (rank, mask) order.
    pub fn downset(&self, f: usize) -> Vec<u32> {
        let ff = self.flats[f];
        let mut out = Vec::new();
        for (i, g) in self.flats.iter().enumerate().take(f + 1) {
            if g.is_subset_of(ff) {
                out.push(i as u32);
            }
        }
        out
    }

    /// Möbius function `mu(g, l)` for every `l` in the upset of `g`,
    /// returned as `(flat index, mu)` pairs in (rank, mask) order.
    ///
    /// Computed by the defining recursion `mu(g, g) = 1`,
    /// `mu(g, l) = -sum_{g <= h < l} mu(g, h)`.
    pub fn mobius_from(&self, g: usize) -> Vec<(u32, i128)> {
        let up = self.upset(g);
        let mut mu: Vec<(u32, i128)> = Vec::with_capacity(up.len());
        for (pos, &li) in up.iter().enumerate() {
            let lf = self.flats[li as usize];
            let mut value: i128 = if pos == 0 { 1 } else { 0 };
            if pos > 0 {
                for &(hi, m) in &mu {
                    if self.flats[hi as usize].is_subset_of(lf) {
                        value = value.checked_sub(m).expect("mobius overflow");
                    }
                }
            }
            mu.push((li, value));
        }
        mu
    }

    /// The full Möbius table: `table[g]` lists `(l, mu(g, l))` over the
    /// upset of `g`. Layers are computed in parallel.
    pub fn mobius_table(&self) -> Vec<Vec<(u32, i128)>> {
        use rayon::prelude::*;
        (0..self.flats.len())
            .into_par_iter()
            .map(|g| self.mobius_from(g))
            .collect()
    }
}
