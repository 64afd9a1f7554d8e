//! The auxiliary bipartite pair multigraph and its simple subgraph.
//!
//! Vertices on side `A` are pairs `{a1, a2}` of the first part, on side `B`
//! pairs `{b1, b2}` of the second. Every apex `c` and every two hyperedges
//! `a1 b1 c`, `a2 b2 c` through it contribute one edge `{a1,a2}–{b1,b2}`.
//! Only pairs that carry an edge are stored.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, Side};
use crate::hypergraph::{validate_linear, EdgeId, Linearity, LinearityViolation, TripartiteLinearSystem};

/// An unordered pair `{lo, hi}` (`lo < hi`) of part-local ids of part `A`
/// or `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairVertex {
    pub side: Side,
    pub lo: u32,
    pub hi: u32,
}

/// With `u = {a_lo, a_hi}` and `w = {b_lo, b_hi}`, a straight edge comes from
/// `a_lo b_lo c, a_hi b_hi c` and a crossed one from `a_lo b_hi c, a_hi b_lo c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pairing {
    Straight,
    Crossed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AuxEdge {
    /// Index into [`AuxGraph::a_vertices`].
    pub u: u32,
    /// Index into [`AuxGraph::b_vertices`].
    pub w: u32,
    pub pairing: Pairing,
    pub apex: u32,
    /// The hyperedge containing `a_lo`.
    pub h1: EdgeId,
    /// The hyperedge containing `a_hi`.
    pub h2: EdgeId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuxError {
    NotLinear(LinearityViolation),
    /// More than two edges, or two of the same pairing, between `u` and `w`.
    Multiplicity {
        u: PairVertex,
        w: PairVertex,
    },
}

impl fmt::Display for AuxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuxError::NotLinear(v) => write!(f, "{v}"),
            AuxError::Multiplicity { u, w } => {
                write!(f, "multiplicity law broken between {{{}, {}}} and {{{}, {}}}", u.lo, u.hi, w.lo, w.hi)
            }
        }
    }
}

impl core::error::Error for AuxError {}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AuxGraph {
    a_vertices: Vec<PairVertex>,
    b_vertices: Vec<PairVertex>,
    edges: Vec<AuxEdge>,
}

impl AuxGraph {
    pub fn a_vertices(&self) -> &[PairVertex] {
        &self.a_vertices
    }

    pub fn b_vertices(&self) -> &[PairVertex] {
        &self.b_vertices
    }

    /// Sorted by `(u, w, pairing, apex)`.
    pub fn edges(&self) -> &[AuxEdge] {
        &self.edges
    }

    pub fn multi_edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn u_pair(&self, e: &AuxEdge) -> PairVertex {
        self.a_vertices[e.u as usize]
    }

    pub fn w_pair(&self, e: &AuxEdge) -> PairVertex {
        self.b_vertices[e.w as usize]
    }

    /// Number of `(u, w)` pairs breaking the multiplicity law, recounted from
    /// scratch.
    pub fn multiplicity_violations(&self) -> usize {
        let mut by_pair: BTreeMap<(u32, u32), Vec<Pairing>> = BTreeMap::new();
        for e in &self.edges {
            by_pair.entry((e.u, e.w)).or_default().push(e.pairing);
        }
        by_pair.values().filter(|p| p.len() > 2 || (p.len() == 2 && p[0] == p[1])).count()
    }
}

/// `Σ_c C(d(c), 2)`.
pub fn expected_multi_edge_count(lts: &TripartiteLinearSystem) -> u64 {
    lts.apex_degrees().iter().map(|&d| (d as u64) * (d as u64).saturating_sub(1) / 2).sum()
}

/// Checks that `edge` is realized by its two hyperedges in `lts`.
pub fn aux_edge_is_valid(lts: &TripartiteLinearSystem, aux: &AuxGraph, edge: &AuxEdge) -> bool {
    let n = lts.edges().len() as EdgeId;
    if edge.h1 == edge.h2 || edge.h1 >= n || edge.h2 >= n {
        return false;
    }
    let (h1, h2) = (lts.edge(edge.h1), lts.edge(edge.h2));
    let (u, w) = (aux.u_pair(edge), aux.w_pair(edge));
    let (b1, b2) = match edge.pairing {
        Pairing::Straight => (w.lo, w.hi),
        Pairing::Crossed => (w.hi, w.lo),
    };
    h1.c == edge.apex && h2.c == edge.apex && h1.a == u.lo && h2.a == u.hi && h1.b == b1 && h2.b == b2
}

/// `(u pair, w pair, pairing, apex, h1, h2)` before vertex indexing.
type RawEdge = ((u32, u32), (u32, u32), Pairing, u32, EdgeId, EdgeId);

pub fn build_aux(lts: &TripartiteLinearSystem) -> Result<AuxGraph, AuxError> {
    if let Linearity::Violation(v) = validate_linear(lts) {
        return Err(AuxError::NotLinear(v));
    }
    let mut through: Vec<Vec<EdgeId>> = vec![Vec::new(); lts.sizes()[2] as usize];
    for (id, t) in lts.edges().iter().enumerate() {
        through[t.c as usize].push(id as EdgeId);
    }
    let mut raw: Vec<RawEdge> = Vec::new();
    for (apex, ids) in through.iter().enumerate() {
        for (i, &x) in ids.iter().enumerate() {
            for &y in &ids[i + 1..] {
                let (mut e1, mut e2) = (lts.edge(x), lts.edge(y));
                let (mut h1, mut h2) = (x, y);
                if e1.a > e2.a {
                    core::mem::swap(&mut e1, &mut e2);
                    core::mem::swap(&mut h1, &mut h2);
                }
                // linearity rules out shared a or b through one apex
                debug_assert!(e1.a != e2.a && e1.b != e2.b);
                let pairing = if e1.b < e2.b { Pairing::Straight } else { Pairing::Crossed };
                let w = (e1.b.min(e2.b), e1.b.max(e2.b));
                raw.push(((e1.a, e2.a), w, pairing, apex as u32, h1, h2));
            }
        }
    }
    let mut a_pairs: Vec<(u32, u32)> = raw.iter().map(|r| r.0).collect();
    let mut b_pairs: Vec<(u32, u32)> = raw.iter().map(|r| r.1).collect();
    a_pairs.sort_unstable();
    a_pairs.dedup();
    b_pairs.sort_unstable();
    b_pairs.dedup();
    let mut edges: Vec<AuxEdge> = raw
        .into_iter()
        .map(|(u, w, pairing, apex, h1, h2)| AuxEdge {
            u: a_pairs.binary_search(&u).unwrap() as u32,
            w: b_pairs.binary_search(&w).unwrap() as u32,
            pairing,
            apex,
            h1,
            h2,
        })
        .collect();
    edges.sort_unstable();
    let to_vertex = |side, (lo, hi): (u32, u32)| PairVertex { side, lo, hi };
    let aux = AuxGraph {
        a_vertices: a_pairs.into_iter().map(|p| to_vertex(Side::A, p)).collect(),
        b_vertices: b_pairs.into_iter().map(|p| to_vertex(Side::B, p)).collect(),
        edges,
    };
    for run in aux.edges.chunk_by(|x, y| (x.u, x.w) == (y.u, y.w)) {
        if run.len() > 2 || (run.len() == 2 && run[0].pairing == run[1].pairing) {
            return Err(AuxError::Multiplicity { u: aux.u_pair(&run[0]), w: aux.w_pair(&run[0]) });
        }
    }
    Ok(aux)
}

/// The simple bipartite graph kept from an [`AuxGraph`]: vertex `i <
/// |A'|` is `a_vertices[i]`, vertex `|A'| + j` is `b_vertices[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleAux {
    graph: Graph,
    a_count: u32,
    pairs: Vec<PairVertex>,
    /// `(min, max)` graph edge to index in [`AuxGraph::edges`].
    annotation: BTreeMap<(u32, u32), u32>,
}

impl SimpleAux {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn side(&self, v: u32) -> Side {
        if v < self.a_count {
            Side::A
        } else {
            Side::B
        }
    }

    pub fn pair(&self, v: u32) -> PairVertex {
        self.pairs[v as usize]
    }

    /// Index of the [`AuxEdge`] realizing graph edge `{x, y}`.
    pub fn aux_edge_of(&self, x: u32, y: u32) -> Option<u32> {
        self.annotation.get(&(x.min(y), x.max(y))).copied()
    }

    pub fn edge_count(&self) -> usize {
        self.annotation.len()
    }
}

/// Keeps one edge per adjacent `(u, w)`: straight before crossed (at most
/// one of each exists).
pub fn simple_subgraph(aux: &AuxGraph) -> SimpleAux {
    let a_count = aux.a_vertices.len() as u32;
    let n = aux.a_vertices.len() + aux.b_vertices.len();
    let mut graph = Graph::new(n);
    let mut annotation = BTreeMap::new();
    for (idx, e) in aux.edges.iter().enumerate() {
        let (x, y) = (e.u, a_count + e.w);
        if graph.add_edge(x, y) {
            annotation.insert((x, y), idx as u32);
        }
    }
    let pairs = aux.a_vertices.iter().chain(&aux.b_vertices).copied().collect();
    SimpleAux { graph, a_count, pairs, annotation }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{group_system, random_linear};
    use crate::hypergraph::Triple;

    #[test]
    fn group_two_has_one_double_edge() {
        let sys = group_system(2);
        let aux = build_aux(&sys).unwrap();
        assert_eq!(aux.multi_edge_count(), 2);
        assert_eq!(aux.a_vertices(), &[PairVertex { side: Side::A, lo: 0, hi: 1 }]);
        assert_eq!(aux.b_vertices(), &[PairVertex { side: Side::B, lo: 0, hi: 1 }]);
        let e = aux.edges();
        assert_eq!((e[0].pairing, e[0].apex), (Pairing::Straight, 0));
        assert_eq!((e[1].pairing, e[1].apex), (Pairing::Crossed, 1));
        assert!(e.iter().all(|x| aux_edge_is_valid(&sys, &aux, x)));

        let g = simple_subgraph(&aux);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.aux_edge_of(1, 0), Some(0));
    }

    #[test]
    fn group_three_is_k33() {
        let sys = group_system(3);
        let aux = build_aux(&sys).unwrap();
        assert_eq!(aux.multi_edge_count(), 9);
        assert_eq!(aux.a_vertices().len(), 3);
        assert_eq!(aux.b_vertices().len(), 3);
        assert_eq!(aux.multiplicity_violations(), 0);
        // 9 >= 81 / 12
        assert!(4 * 3 * aux.multi_edge_count() >= 81);
        let g = simple_subgraph(&aux);
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.graph().m(), 9);
        for x in 0..3 {
            for y in 3..6 {
                assert!(g.graph().has_edge(x, y));
            }
        }
    }

    #[test]
    fn empty_system() {
        let sys = TripartiteLinearSystem::new([3, 3, 3], Vec::new()).unwrap();
        let aux = build_aux(&sys).unwrap();
        assert_eq!(aux, AuxGraph::default());
        assert_eq!(simple_subgraph(&aux).graph().n(), 0);
    }

    #[test]
    fn non_linear_input_is_rejected() {
        let sys = TripartiteLinearSystem::new([2, 1, 2], vec![Triple::new(0, 0, 0), Triple::new(0, 0, 1)]).unwrap();
        assert!(matches!(build_aux(&sys), Err(AuxError::NotLinear(_))));
    }

    #[test]
    fn counts_match_apex_degrees() {
        for seed in 0..20 {
            let sys = random_linear(9, 8, 7, 40, seed);
            let aux = build_aux(&sys).unwrap();
            assert_eq!(aux.multi_edge_count() as u64, expected_multi_edge_count(&sys));
            assert!(aux.edges().iter().all(|x| aux_edge_is_valid(&sys, &aux, x)));
            let g = simple_subgraph(&aux);
            assert!(2 * g.edge_count() >= aux.multi_edge_count());
        }
    }
}
