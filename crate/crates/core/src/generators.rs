//! Substrate systems: the cyclic-group system and seeded greedy partial
//! linear systems.

use alloc::vec;
use alloc::vec::Vec;
use rand::Rng;

use crate::hypergraph::{TripartiteLinearSystem, Triple};
use crate::rng;

/// Consecutive rejected samples after which [`random_linear`] gives up.
pub const MAX_CONSECUTIVE_REJECTIONS: u32 = 1_000_000;

/// Edges `(a, b, a + b mod m)` over `Z_m`, ordered by `a` then `b`.
///
/// Any two coordinates determine the third, so the system is linear; it has
/// `m²` edges and every vertex has degree `m`.
pub fn group_system(m: u32) -> TripartiteLinearSystem {
    let mut edges = Vec::with_capacity((m as usize) * (m as usize));
    for a in 0..m {
        for b in 0..m {
            edges.push(Triple::new(a, b, (a + b) % m));
        }
    }
    TripartiteLinearSystem::new([m, m, m], edges).expect("group system is well formed")
}

/// Greedy random partial linear system.
///
/// Samples tripartite triples uniformly and accepts one iff none of its three
/// pairs is used yet. Stops at `target_edges` accepted edges or after
/// [`MAX_CONSECUTIVE_REJECTIONS`] rejections in a row, so it may return fewer
/// edges than requested.
pub fn random_linear(n_a: u32, n_b: u32, n_c: u32, target_edges: usize, seed: u64) -> TripartiteLinearSystem {
    let sizes = [n_a, n_b, n_c];
    let mut edges = Vec::new();
    if n_a == 0 || n_b == 0 || n_c == 0 || target_edges == 0 {
        return TripartiteLinearSystem::new(sizes, edges).unwrap();
    }
    let (na, nb, nc) = (n_a as usize, n_b as usize, n_c as usize);
    let mut ab = vec![false; na * nb];
    let mut ac = vec![false; na * nc];
    let mut bc = vec![false; nb * nc];
    let mut rng = rng::seeded(seed, 0x0067_656e);
    let mut rejections = 0u32;
    while edges.len() < target_edges && rejections < MAX_CONSECUTIVE_REJECTIONS {
        let a = rng.gen_range(0..na);
        let b = rng.gen_range(0..nb);
        let c = rng.gen_range(0..nc);
        let (i, j, k) = (a * nb + b, a * nc + c, b * nc + c);
        if ab[i] || ac[j] || bc[k] {
            rejections += 1;
            continue;
        }
        ab[i] = true;
        ac[j] = true;
        bc[k] = true;
        rejections = 0;
        edges.push(Triple::new(a as u32, b as u32, c as u32));
    }
    TripartiteLinearSystem::new(sizes, edges).unwrap()
}
