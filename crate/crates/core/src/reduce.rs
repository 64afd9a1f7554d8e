//! Reduce-or-win: either a pair of vertices already carries `e` edges (a
//! trivially sparse configuration), or we extract a linear tripartite
//! subsystem with a guaranteed fraction of the edges.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::hypergraph::{Configuration, EdgeId, Hypergraph, TripartiteLinearSystem, Triple, TripleSystem};
use crate::rng;

/// Number of seeded random 3-colourings tried.
pub const COLORING_ATTEMPTS: u64 = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReduceOutcome {
    /// `pair` lies in at least `max(e, 2)` edges; `config` holds `e` of them.
    Win {
        pair: (u32, u32),
        config: Configuration,
    },
    Reduced(Reduction),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub system: TripartiteLinearSystem,
    /// Input edge id of each output edge.
    pub source_edges: Vec<EdgeId>,
    /// `parts[p][local]` is the input vertex id of part-local vertex `local`.
    pub parts: [Vec<u32>; 3],
    /// Edges rainbow under the chosen colouring.
    pub proper_edges: usize,
    pub kept_edges: usize,
    /// Largest codegree of any pair in the input.
    pub max_codegree: usize,
    /// 0 for the propagated colouring, `1..=20` for the random ones.
    pub coloring: u64,
}

impl Reduction {
    /// `kept · (3w − 5) ≥ proper` with `w = max(e, 2)`.
    pub fn retention_bound_holds(&self, e: usize) -> bool {
        let w = e.max(2);
        self.kept_edges * (3 * w - 5) >= self.proper_edges
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReduceError {
    ZeroE,
    /// No winning pair and nothing survives the reduction.
    Degenerate,
}

impl fmt::Display for ReduceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReduceError::ZeroE => f.write_str("e must be at least 1"),
            ReduceError::Degenerate => f.write_str("degenerate input: no heavy pair and the reduction is empty"),
        }
    }
}

impl core::error::Error for ReduceError {}

pub fn reduce_or_win(ts: &TripleSystem, e: usize, seed: u64) -> Result<ReduceOutcome, ReduceError> {
    if e == 0 {
        return Err(ReduceError::ZeroE);
    }
    // A pair needs codegree >= 2 to count as a win; with e = 1 any linear
    // input goes to the reduction.
    let threshold = e.max(2);
    let mut by_pair: BTreeMap<(u32, u32), Vec<EdgeId>> = BTreeMap::new();
    for (id, &[x, y, z]) in ts.edges().iter().enumerate() {
        for pair in [(x, y), (x, z), (y, z)] {
            by_pair.entry(pair).or_default().push(id as EdgeId);
        }
    }
    if let Some((&pair, ids)) = by_pair.iter().find(|(_, ids)| ids.len() >= threshold) {
        let config = Configuration::from_edges(ts, ids[..e].to_vec());
        return Ok(ReduceOutcome::Win { pair, config });
    }
    let max_codegree = by_pair.values().map(Vec::len).max().unwrap_or(0);

    let n = ts.n() as usize;
    let mut best: Option<(u64, Vec<u8>, usize)> = None;
    for attempt in 0..=COLORING_ATTEMPTS {
        let colors = if attempt == 0 {
            propagated_coloring(ts)
        } else {
            let mut r = rng::seeded(seed, 0x636f_6c00 + attempt);
            (0..n).map(|_| r.gen_range(0u8..3)).collect()
        };
        let proper = ts.edges().iter().filter(|t| is_rainbow(&colors, t)).count();
        if best.as_ref().is_none_or(|b| proper > b.2) {
            best = Some((attempt, colors, proper));
        }
    }
    let (coloring, colors, proper_edges) = best.expect("at least one colouring");

    let mut order: Vec<EdgeId> =
        (0..ts.edge_count() as EdgeId).filter(|&id| is_rainbow(&colors, &ts.edges()[id as usize])).collect();
    order.shuffle(&mut rng::seeded(seed, 0x626c_6f63));
    let mut used: BTreeMap<(u32, u32), ()> = BTreeMap::new();
    let mut kept = Vec::new();
    for id in order {
        let [x, y, z] = ts.edges()[id as usize];
        let pairs = [(x, y), (x, z), (y, z)];
        if pairs.iter().any(|p| used.contains_key(p)) {
            continue;
        }
        for p in pairs {
            used.insert(p, ());
        }
        kept.push(id);
    }
    if kept.is_empty() {
        return Err(ReduceError::Degenerate);
    }
    kept.sort_unstable();

    // Parts: non-isolated input vertices grouped by colour, in id order.
    let mut touched = vec![false; n];
    for t in ts.edges() {
        for &v in t {
            touched[v as usize] = true;
        }
    }
    let mut parts: [Vec<u32>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    let mut local = vec![0u32; n];
    for v in 0..n {
        if touched[v] {
            let p = &mut parts[colors[v] as usize];
            local[v] = p.len() as u32;
            p.push(v as u32);
        }
    }
    let edges: Vec<Triple> = kept
        .iter()
        .map(|&id| {
            let mut slot = [0u32; 3];
            for &v in &ts.edges()[id as usize] {
                slot[colors[v as usize] as usize] = local[v as usize];
            }
            Triple::new(slot[0], slot[1], slot[2])
        })
        .collect();
    let sizes = [parts[0].len() as u32, parts[1].len() as u32, parts[2].len() as u32];
    let system = TripartiteLinearSystem::new(sizes, edges).expect("reduction is well formed");
    Ok(ReduceOutcome::Reduced(Reduction {
        system,
        kept_edges: kept.len(),
        source_edges: kept,
        parts,
        proper_edges,
        max_codegree,
        coloring,
    }))
}

fn is_rainbow(colors: &[u8], t: &[u32; 3]) -> bool {
    let (x, y, z) = (colors[t[0] as usize], colors[t[1] as usize], colors[t[2] as usize]);
    x != y && x != z && y != z
}

/// Colours edges by propagation: an uncoloured edge gets colours 0, 1, 2 in
/// vertex order, and an edge with some coloured vertices receives the
/// missing colours in ascending order. A system that came from a tripartite
/// one with parts laid out `A < B < C` gets its original parts back.
fn propagated_coloring(ts: &TripleSystem) -> Vec<u8> {
    let n = ts.n() as usize;
    let mut incident: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
    for (id, t) in ts.edges().iter().enumerate() {
        for &v in t {
            incident[v as usize].push(id as EdgeId);
        }
    }
    let mut color: Vec<Option<u8>> = vec![None; n];
    let mut done = vec![false; ts.edge_count()];
    let mut stack = Vec::new();
    for start in 0..ts.edge_count() {
        if done[start] {
            continue;
        }
        stack.push(start as EdgeId);
        while let Some(id) = stack.pop() {
            if done[id as usize] {
                continue;
            }
            done[id as usize] = true;
            let t = ts.edges()[id as usize];
            let present: Vec<u8> = t.iter().filter_map(|&v| color[v as usize]).collect();
            let mut missing = (0u8..3).filter(|c| !present.contains(c));
            for &v in &t {
                if color[v as usize].is_none() {
                    // With a clash among coloured vertices fewer colours are
                    // missing; leftover vertices wait for another edge.
                    if let Some(c) = missing.next() {
                        color[v as usize] = Some(c);
                        stack.extend(incident[v as usize].iter().filter(|&&f| !done[f as usize]));
                    }
                }
            }
        }
    }
    color.into_iter().map(|c| c.unwrap_or(0)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{group_system, random_linear};
    use crate::hypergraph::{validate_linear, verify_configuration};

    #[test]
    fn tripartite_linear_input_is_returned_unchanged() {
        for sys in [group_system(4), random_linear(6, 6, 6, 20, 3)] {
            let flat = sys.to_triple_system();
            let mut seen = vec![false; sys.vertex_count()];
            flat.edges().iter().flatten().for_each(|&v| seen[v as usize] = true);
            let touched_all = seen.iter().all(|&s| s);
            for e in [1, 2, 5, 30] {
                match reduce_or_win(&flat, e, 9).unwrap() {
                    ReduceOutcome::Reduced(r) => {
                        assert_eq!(r.kept_edges, sys.edge_count());
                        assert_eq!(r.proper_edges, sys.edge_count());
                        if touched_all {
                            assert_eq!(r.system, sys);
                        }
                    }
                    ReduceOutcome::Win { .. } => panic!("linear input cannot win"),
                }
            }
        }
    }

    #[test]
    fn heavy_pair_wins() {
        let edges: Vec<[u32; 3]> = (0..5).map(|i| [0, 1, 2 + i]).collect();
        let ts = TripleSystem::new(7, edges).unwrap();
        match reduce_or_win(&ts, 5, 0).unwrap() {
            ReduceOutcome::Win { pair, config } => {
                assert_eq!(pair, (0, 1));
                assert_eq!(config.len(), 5);
                assert_eq!(config.span().len(), 7);
                assert!(verify_configuration(&ts, &config, 7, 5));
            }
            other => panic!("expected a win, got {other:?}"),
        }
    }

    #[test]
    fn random_dense_input_reduces_to_linear_tripartite() {
        let mut r = rng::seeded(1, 99);
        let mut set = alloc::collections::BTreeSet::new();
        while set.len() < 200 {
            let mut t = [r.gen_range(0..30u32), r.gen_range(0..30), r.gen_range(0..30)];
            t.sort_unstable();
            if t[0] != t[1] && t[1] != t[2] {
                set.insert(t);
            }
        }
        let ts = TripleSystem::new(30, set.into_iter().collect()).unwrap();
        match reduce_or_win(&ts, 10, 1).unwrap() {
            ReduceOutcome::Reduced(r) => {
                assert!(validate_linear(&r.system).is_ok());
                // independent recount: every output edge maps back to its
                // source edge through the part tables
                assert_eq!(r.system.edge_count(), r.kept_edges);
                for (t, &src) in r.system.edges().iter().zip(&r.source_edges) {
                    let mut back = [r.parts[0][t.a as usize], r.parts[1][t.b as usize], r.parts[2][t.c as usize]];
                    back.sort_unstable();
                    assert_eq!(back, ts.edges()[src as usize]);
                }
                let proper = ts
                    .edges()
                    .iter()
                    .filter(|t| {
                        let part = |v: u32| r.parts.iter().position(|p| p.contains(&v));
                        let (x, y, z) = (part(t[0]), part(t[1]), part(t[2]));
                        x != y && y != z && x != z
                    })
                    .count();
                assert_eq!(proper, r.proper_edges);
                assert!(r.retention_bound_holds(10));
            }
            ReduceOutcome::Win { .. } => panic!("200 random edges on 30 vertices have codegree < 10"),
        }
    }

    #[test]
    fn empty_input_is_degenerate() {
        let ts = TripleSystem::new(5, Vec::new()).unwrap();
        assert_eq!(reduce_or_win(&ts, 3, 0), Err(ReduceError::Degenerate));
        assert_eq!(reduce_or_win(&ts, 0, 0), Err(ReduceError::ZeroE));
    }
}
