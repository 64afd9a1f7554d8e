//! Bipartite graphs of large girth built from `t` isolated vertices by
//! repeatedly adding a vertex joined to exactly two earlier vertices.
//!
//! Each new vertex joins the smaller side and is attached to two vertices of
//! the other side that have degree at most 7 and no path of length at most
//! `g − 2` between them, so maximum degree stays at most 8, the sides stay
//! balanced, and every new cycle has length at least `g`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use rand::Rng;

use crate::degsearch::binomial;
use crate::graph::{Graph, Side};
use crate::rng;

/// Degree a partner may have before receiving its new edge.
pub const PARTNER_MAX_DEGREE: usize = 7;
/// Random pair draws before falling back to enumerating all valid pairs.
const SAMPLE_TRIES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthCertificate {
    pub t: usize,
    /// The initial independent set.
    pub seeds: Vec<u32>,
    /// `(vertex, u1, u2)` in insertion order.
    pub added: Vec<(u32, u32, u32)>,
    /// Side of every vertex; `None` when read from a file without sides.
    pub sides: Option<Vec<Side>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairChoice {
    /// Uniform over all valid pairs.
    Random,
    /// Lexicographically smallest valid pair.
    Smallest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepDiagnostic {
    /// Vertices of degree at most 7 on the partner side.
    pub low_degree: usize,
    /// `C(⌈(k − 1)/4⌉, 2)` for the current size `k − 1`.
    pub gate: u64,
    /// `C(low_degree, 2) ≥ gate`.
    pub gate_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Growth {
    pub graph: Graph,
    pub certificate: GrowthCertificate,
    pub diagnostics: Vec<StepDiagnostic>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthError {
    BadParameters {
        k: usize,
        t: usize,
        g: usize,
    },
    /// No valid pair when adding vertex number `step` (0-based id) to a
    /// graph on `current_k` vertices.
    Stuck {
        step: usize,
        current_k: usize,
    },
}

impl fmt::Display for GrowthError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrowthError::BadParameters { k, t, g } => {
                write!(f, "need k >= t >= 1 and g >= 3, got k = {k}, t = {t}, g = {g}")
            }
            GrowthError::Stuck { step, current_k } => {
                write!(f, "no valid pair for vertex {step} at {current_k} vertices; t is too small for this girth")
            }
        }
    }
}

impl core::error::Error for GrowthError {}

pub fn grow_girth_graph(k: usize, t: usize, g: usize, seed: u64, choice: PairChoice) -> Result<Growth, GrowthError> {
    if t == 0 || k < t || g < 3 {
        return Err(GrowthError::BadParameters { k, t, g });
    }
    let mut graph = Graph::new(t);
    let mut sides: Vec<Side> = (0..t).map(|i| if i % 2 == 0 { Side::A } else { Side::B }).collect();
    let mut counts = [t.div_ceil(2), t / 2];
    let mut added = Vec::with_capacity(k - t);
    let mut diagnostics = Vec::with_capacity(k - t);
    let mut r = rng::seeded(seed, 0x6769_7274);
    let reach = g - 2;

    for step in t..k {
        let new_side = if counts[0] <= counts[1] { Side::A } else { Side::B };
        let partner_side = new_side.other();
        let low: Vec<u32> = (0..graph.n() as u32)
            .filter(|&v| sides[v as usize] == partner_side && graph.degree(v) <= PARTNER_MAX_DEGREE)
            .collect();
        let gate = binomial((graph.n() as u128).div_ceil(4), 2) as u64;
        diagnostics.push(StepDiagnostic {
            low_degree: low.len(),
            gate,
            gate_ok: binomial(low.len() as u128, 2) >= gate as u128,
        });

        let pair = match choice {
            PairChoice::Smallest => smallest_pair(&graph, &low, reach),
            PairChoice::Random => random_pair(&graph, &low, reach, &mut r),
        };
        let Some((u, v)) = pair else {
            return Err(GrowthError::Stuck { step, current_k: graph.n() });
        };
        let x = graph.add_vertex();
        graph.add_edge(x, u);
        graph.add_edge(x, v);
        sides.push(new_side);
        counts[new_side as usize] += 1;
        added.push((x, u, v));
    }

    let certificate = GrowthCertificate { t, seeds: (0..t as u32).collect(), added, sides: Some(sides) };
    Ok(Growth { graph, certificate, diagnostics })
}

/// Vertices within distance `depth` of `source`, as a mark vector.
fn ball(graph: &Graph, source: u32, depth: usize) -> Vec<bool> {
    let mut dist = vec![usize::MAX; graph.n()];
    let mut seen = vec![false; graph.n()];
    let mut queue = VecDeque::from([source]);
    dist[source as usize] = 0;
    seen[source as usize] = true;
    while let Some(x) = queue.pop_front() {
        let d = dist[x as usize];
        if d == depth {
            continue;
        }
        for &y in graph.neighbors(x) {
            if !seen[y as usize] {
                seen[y as usize] = true;
                dist[y as usize] = d + 1;
                queue.push_back(y);
            }
        }
    }
    seen
}

/// True if some path of length at most `depth` joins `u` and `v`.
fn close(graph: &Graph, u: u32, v: u32, depth: usize) -> bool {
    ball(graph, u, depth)[v as usize]
}

fn smallest_pair(graph: &Graph, low: &[u32], reach: usize) -> Option<(u32, u32)> {
    for (i, &u) in low.iter().enumerate() {
        let near = ball(graph, u, reach);
        if let Some(&v) = low[i + 1..].iter().find(|&&v| !near[v as usize]) {
            return Some((u, v));
        }
    }
    None
}

fn random_pair(graph: &Graph, low: &[u32], reach: usize, r: &mut rng::Rng) -> Option<(u32, u32)> {
    if low.len() < 2 {
        return None;
    }
    for _ in 0..SAMPLE_TRIES {
        let i = r.gen_range(0..low.len());
        let j = r.gen_range(0..low.len() - 1);
        let j = if j >= i { j + 1 } else { j };
        let (u, v) = (low[i.min(j)], low[i.max(j)]);
        if !close(graph, u, v, reach) {
            return Some((u, v));
        }
    }
    let mut valid = Vec::new();
    for (i, &u) in low.iter().enumerate() {
        let near = ball(graph, u, reach);
        valid.extend(low[i + 1..].iter().filter(|&&v| !near[v as usize]).map(|&v| (u, v)));
    }
    if valid.is_empty() {
        None
    } else {
        Some(valid[r.gen_range(0..valid.len())])
    }
}

/// Doubles `t` from `start_t` until growth to `k` vertices succeeds.
pub fn find_t_by_doubling(
    k: usize,
    g: usize,
    seed: u64,
    start_t: usize,
    choice: PairChoice,
) -> Result<(usize, Growth), GrowthError> {
    let mut t = start_t.max(1);
    loop {
        match grow_girth_graph(k, t.min(k), g, seed, choice) {
            Ok(out) => return Ok((t.min(k), out)),
            Err(e) if t >= k => return Err(e),
            Err(GrowthError::Stuck { .. }) => t *= 2,
            Err(e) => return Err(e),
        }
    }
}

/// Length of a shortest cycle, `None` for forests. BFS from every vertex;
/// a non-tree edge `xy` met from root `r` closes a walk of length
/// `d(x) + d(y) + 1`, and the minimum over all roots is the girth.
pub fn girth_of(graph: &Graph) -> Option<usize> {
    let n = graph.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n as u32 {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        queue.clear();
        dist[root as usize] = 0;
        parent[root as usize] = u32::MAX;
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x as usize];
            if 2 * dx + 1 >= best {
                break;
            }
            for &y in graph.neighbors(x) {
                if dist[y as usize] == usize::MAX {
                    dist[y as usize] = dx + 1;
                    parent[y as usize] = x;
                    queue.push_back(y);
                } else if parent[x as usize] != y {
                    best = best.min(dx + dist[y as usize] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateError {
    SeedCount {
        expected: usize,
        found: usize,
    },
    VertexCount {
        expected: usize,
        found: usize,
    },
    UnknownVertex(u32),
    RepeatedVertex(u32),
    /// An added vertex whose neighbours are not two distinct earlier vertices.
    BadAttachment(u32),
    EdgeMismatch,
    NotBipartite,
    /// Declared sides not a proper 2-colouring.
    SideConflict(u32, u32),
}

impl fmt::Display for CertificateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateError::SeedCount { expected, found } => {
                write!(f, "expected {expected} isolated seeds, found {found}")
            }
            CertificateError::VertexCount { expected, found } => {
                write!(f, "certificate covers {found} vertices, graph has {expected}")
            }
            CertificateError::UnknownVertex(v) => write!(f, "vertex {v} not in graph"),
            CertificateError::RepeatedVertex(v) => write!(f, "vertex {v} appears twice"),
            CertificateError::BadAttachment(v) => {
                write!(f, "vertex {v} is not attached to two distinct earlier vertices")
            }
            CertificateError::EdgeMismatch => f.write_str("edge set differs from the certificate"),
            CertificateError::NotBipartite => f.write_str("graph is not bipartite"),
            CertificateError::SideConflict(x, y) => write!(f, "edge {x}-{y} stays within one side"),
        }
    }
}

impl core::error::Error for CertificateError {}

/// Replays the certificate: `t` seeds, each later vertex attached to exactly
/// two distinct earlier vertices, edge set equal to the graph's, bipartite.
pub fn check_certificate(graph: &Graph, cert: &GrowthCertificate) -> Result<(), CertificateError> {
    let n = graph.n();
    if cert.seeds.len() != cert.t {
        return Err(CertificateError::SeedCount { expected: cert.t, found: cert.seeds.len() });
    }
    if cert.t + cert.added.len() != n {
        return Err(CertificateError::VertexCount { expected: n, found: cert.t + cert.added.len() });
    }
    let mut present = vec![false; n];
    let mark = |v: u32, present: &mut Vec<bool>| -> Result<(), CertificateError> {
        let slot = present.get_mut(v as usize).ok_or(CertificateError::UnknownVertex(v))?;
        if *slot {
            return Err(CertificateError::RepeatedVertex(v));
        }
        *slot = true;
        Ok(())
    };
    for &s in &cert.seeds {
        mark(s, &mut present)?;
    }
    let mut replay = Graph::new(n);
    for &(v, u1, u2) in &cert.added {
        let earlier = |u: u32| present.get(u as usize).copied().unwrap_or(false);
        if u1 == u2 || !earlier(u1) || !earlier(u2) {
            return Err(CertificateError::BadAttachment(v));
        }
        mark(v, &mut present)?;
        replay.add_edge(v, u1);
        replay.add_edge(v, u2);
    }
    if replay.edges() != graph.edges() {
        return Err(CertificateError::EdgeMismatch);
    }
    match &cert.sides {
        Some(sides) => {
            if sides.len() != n {
                return Err(CertificateError::VertexCount { expected: n, found: sides.len() });
            }
            if let Some((x, y)) = graph.edges().into_iter().find(|&(x, y)| sides[x as usize] == sides[y as usize]) {
                return Err(CertificateError::SideConflict(x, y));
            }
        }
        None => {
            if graph.two_coloring().is_none() {
                return Err(CertificateError::NotBipartite);
            }
        }
    }
    Ok(())
}

pub fn verify_certificate(graph: &Graph, cert: &GrowthCertificate) -> bool {
    check_certificate(graph, cert).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::samples::*;

    #[test]
    fn no_additions_means_isolated_seeds() {
        let out = grow_girth_graph(7, 7, 5, 0, PairChoice::Random).unwrap();
        assert_eq!(out.graph.n(), 7);
        assert_eq!(out.graph.m(), 0);
        assert!(verify_certificate(&out.graph, &out.certificate));
    }

    #[test]
    fn one_addition_stays_acyclic() {
        for t in 3..8 {
            let out = grow_girth_graph(t + 1, t, 3, 1, PairChoice::Random).unwrap();
            assert_eq!(out.graph.m(), 2);
            assert_eq!(out.graph.degree(t as u32), 2);
            assert_eq!(girth_of(&out.graph), None);
        }
        // two seeds split 1/1 leave no pair on one side
        assert_eq!(grow_girth_graph(3, 2, 3, 0, PairChoice::Random), Err(GrowthError::Stuck { step: 2, current_k: 2 }));
    }

    #[test]
    fn medium_growth_meets_all_invariants() {
        let out = grow_girth_graph(200, 64, 6, 3, PairChoice::Random).unwrap();
        let g = &out.graph;
        assert_eq!(g.n(), 200);
        assert_eq!(g.m(), 272);
        assert!(girth_of(g).is_none_or(|x| x >= 6));
        assert!(g.max_degree() <= 8);
        let sides = out.certificate.sides.as_ref().unwrap();
        assert_eq!(sides.iter().filter(|&&s| s == Side::A).count(), 100);
        assert!(g.two_coloring().is_some());
        assert!(verify_certificate(g, &out.certificate));
        assert_eq!(out.diagnostics.len(), 136);
    }

    #[test]
    fn smallest_choice_is_deterministic() {
        let a = grow_girth_graph(60, 20, 5, 1, PairChoice::Smallest).unwrap();
        let b = grow_girth_graph(60, 20, 5, 99, PairChoice::Smallest).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.certificate.added[0], (20, 1, 3));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth_of(&cycle(6)), Some(6));
        assert_eq!(girth_of(&path(5)), None);
        assert_eq!(girth_of(&complete_bipartite(3, 3)), Some(4));
        assert_eq!(girth_of(&complete(4)), Some(3));
        assert_eq!(girth_of(&cycle(7)), Some(7));
        assert_eq!(girth_of(&Graph::new(0)), None);
    }

    #[test]
    fn certificate_replay() {
        // C4 from seeds u1 = 0, u2 = 1; v1 = 2 and v2 = 3 join both
        let g = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]);
        assert_eq!(girth_of(&g), Some(4));
        let cert = GrowthCertificate { t: 2, seeds: vec![0, 1], added: vec![(2, 0, 1), (3, 0, 1)], sides: None };
        assert!(verify_certificate(&g, &cert));

        let tri = complete(3);
        let cert = GrowthCertificate { t: 2, seeds: vec![0, 1], added: vec![(2, 0, 1)], sides: None };
        assert!(!verify_certificate(&tri, &cert));

        let late = GrowthCertificate { t: 2, seeds: vec![0, 1], added: vec![(2, 0, 3), (3, 0, 1)], sides: None };
        assert_eq!(check_certificate(&g, &late), Err(CertificateError::BadAttachment(2)));
    }

    #[test]
    fn doubling_finds_a_seed_count() {
        let (t, out) = find_t_by_doubling(120, 5, 0, 1, PairChoice::Random).unwrap();
        assert!(t >= 3);
        assert_eq!(out.graph.m(), 2 * (120 - t));
        assert!(girth_of(&out.graph).is_none_or(|x| x >= 5));
    }

    #[test]
    fn bad_parameters() {
        assert!(matches!(grow_girth_graph(5, 0, 4, 0, PairChoice::Random), Err(GrowthError::BadParameters { .. })));
        assert!(matches!(grow_girth_graph(5, 6, 4, 0, PairChoice::Random), Err(GrowthError::BadParameters { .. })));
        assert!(matches!(grow_girth_graph(5, 3, 2, 0, PairChoice::Random), Err(GrowthError::BadParameters { .. })));
    }
}
