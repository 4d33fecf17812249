//! Shared corpus builders for the integration suites. Everything seeded
//! and deterministic.

use matroid_kl::combinatorics::{k_subsets, SplitMix64};
use matroid_kl::{Matroid, SparsePavingSpec, Subset};

/// Wheels with their rim circuit-hyperplanes, ranks 3..=6.
pub fn wheels_with_rims() -> Vec<(Matroid, Subset)> {
    (3..=6)
        .map(|k| (Matroid::wheel(k).unwrap(), Matroid::wheel_rim(k)))
        .collect()
}

pub fn k4() -> Matroid {
    Matroid::graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// `U_{k-1,k} + U_{1,n-k}` with its circuit-hyperplane `{0,...,k-1}`,
/// for all `2 <= k < n <= 9`.
pub fn minimal_pairs() -> Vec<(Matroid, Subset)> {
    let mut out = Vec::new();
    for n in 3..=9usize {
        for k in 2..n {
            let m = Matroid::uniform(k - 1, k)
                .unwrap()
                .direct_sum(&Matroid::uniform(1, n - k).unwrap())
                .unwrap();
            out.push((m, Subset::full(k)));
        }
    }
    out
}

/// A random sparse paving spec with at least one circuit-hyperplane,
/// `5 <= n <= 9`. Greedy selection keeps pairwise intersections small.
pub fn random_sparse_paving(rng: &mut SplitMix64) -> SparsePavingSpec {
    loop {
        let n = 5 + rng.next_below(5) as usize; // 5..=9
        let k = 2 + rng.next_below((n - 2) as u64) as usize; // 2..=n-1
        let mut pool: Vec<Subset> = k_subsets(n, k).collect();
        // Fisher-Yates with the deterministic generator.
        for i in (1..pool.len()).rev() {
            let j = rng.next_below((i + 1) as u64) as usize;
            pool.swap(i, j);
        }
        let target = 1 + rng.next_below(4) as usize;
        let mut chosen: Vec<Subset> = Vec::new();
        for cand in pool {
            if chosen.len() >= target {
                break;
            }
            if chosen.iter().all(|c| c.intersection(cand).card() + 2 <= k) {
                chosen.push(cand);
            }
        }
        if chosen.is_empty() {
            continue;
        }
        let spec = SparsePavingSpec::new(n, k, chosen);
        spec.validate()
            .expect("greedy selection satisfies the intersection bound");
        return spec;
    }
}

/// A pool of direct-sum factors with `n <= 9` and modest flat lattices.
pub fn direct_sum_factor_pool() -> Vec<Matroid> {
    let mut pool = Vec::new();
    for n in 1..=7usize {
        for k in 0..=n {
            pool.push(Matroid::uniform(k, n).unwrap());
        }
    }
    for (k, n) in [(2usize, 8usize), (3, 8), (4, 8), (2, 9), (3, 9), (4, 9)] {
        pool.push(Matroid::uniform(k, n).unwrap());
    }
    pool.push(k4());
    pool.push(Matroid::wheel(3).unwrap());
    pool.push(Matroid::whirl(3).unwrap());
    pool.push(Matroid::minimal_relaxed(2, 5).unwrap());
    pool.push(Matroid::minimal_relaxed(3, 6).unwrap());
    pool
}

/// Number of flats of each factor times each other, kept under control so
/// the product lattice stays engine-friendly in test time.
pub fn lattice_size(m: &Matroid) -> usize {
    matroid_kl::FlatLattice::build(m).unwrap().len()
}

/// Loopless members of the standing corpus used for degree/positivity
/// style assertions.
pub fn loopless_corpus() -> Vec<Matroid> {
    let mut out = vec![
        Matroid::uniform(1, 1).unwrap(),
        Matroid::uniform(2, 5).unwrap(),
        Matroid::uniform(3, 6).unwrap(),
        Matroid::uniform(4, 9).unwrap(),
        Matroid::boolean(4).unwrap(),
        k4(),
        Matroid::minimal_relaxed(2, 6).unwrap(),
        Matroid::minimal_relaxed(3, 7).unwrap(),
        Matroid::minimal_relaxed(4, 8).unwrap(),
    ];
    for k in 2..=6 {
        out.push(Matroid::wheel(k).unwrap());
        out.push(Matroid::whirl(k).unwrap());
    }
    let mut rng = SplitMix64::new(0xC0FFEE);
    for _ in 0..6 {
        out.push(random_sparse_paving(&mut rng).to_matroid().unwrap());
    }
    out
}
