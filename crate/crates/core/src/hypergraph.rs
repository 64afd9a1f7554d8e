//! Triple systems, linear tripartite systems and configurations.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

/// Index of a hyperedge in its host's edge list.
pub type EdgeId = u32;

/// Read-only view shared by [`TripleSystem`] and [`TripartiteLinearSystem`].
///
/// Vertices are reported as global ids in `0..vertex_count()`; triples are
/// sorted ascending.
pub trait Hypergraph {
    fn vertex_count(&self) -> usize;
    fn edge_count(&self) -> usize;
    fn triple(&self, id: EdgeId) -> [u32; 3];

    fn triples(&self) -> TripleIter<'_, Self>
    where
        Self: Sized,
    {
        TripleIter { host: self, next: 0 }
    }
}

#[derive(Debug)]
pub struct TripleIter<'a, H> {
    host: &'a H,
    next: usize,
}

impl<H: Hypergraph> Iterator for TripleIter<'_, H> {
    type Item = [u32; 3];

    fn next(&mut self) -> Option<[u32; 3]> {
        if self.next >= self.host.edge_count() {
            return None;
        }
        let t = self.host.triple(self.next as EdgeId);
        self.next += 1;
        Some(t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SystemError {
    VertexOutOfRange { edge: usize, vertex: u32 },
    RepeatedVertex { edge: usize },
    DuplicateEdge { first: usize, second: usize },
    NotLinear(LinearityViolation),
}

impl fmt::Display for SystemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemError::VertexOutOfRange { edge, vertex } => {
                write!(f, "edge {edge}: vertex {vertex} out of range")
            }
            SystemError::RepeatedVertex { edge } => {
                write!(f, "edge {edge}: vertices are not pairwise distinct")
            }
            SystemError::DuplicateEdge { first, second } => {
                write!(f, "edges {first} and {second} are identical")
            }
            SystemError::NotLinear(v) => write!(f, "{v}"),
        }
    }
}

impl core::error::Error for SystemError {}

/// A 3-uniform hypergraph on global vertex ids `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleSystem {
    n: u32,
    edges: Vec<[u32; 3]>,
}

impl TripleSystem {
    /// Each triple is stored sorted; input order of edges is kept.
    pub fn new(n: u32, edges: Vec<[u32; 3]>) -> Result<Self, SystemError> {
        let mut seen: BTreeMap<[u32; 3], usize> = BTreeMap::new();
        let mut sorted = Vec::with_capacity(edges.len());
        for (i, mut t) in edges.into_iter().enumerate() {
            if let Some(&v) = t.iter().find(|&&v| v >= n) {
                return Err(SystemError::VertexOutOfRange { edge: i, vertex: v });
            }
            t.sort_unstable();
            if t[0] == t[1] || t[1] == t[2] {
                return Err(SystemError::RepeatedVertex { edge: i });
            }
            if let Some(&first) = seen.get(&t) {
                return Err(SystemError::DuplicateEdge { first, second: i });
            }
            seen.insert(t, i);
            sorted.push(t);
        }
        Ok(TripleSystem { n, edges: sorted })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[[u32; 3]] {
        &self.edges
    }
}

impl Hypergraph for TripleSystem {
    fn vertex_count(&self) -> usize {
        self.n as usize
    }

    fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn triple(&self, id: EdgeId) -> [u32; 3] {
        self.edges[id as usize]
    }
}

/// One hyperedge of a tripartite system, in part-local coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl Triple {
    pub const fn new(a: u32, b: u32, c: u32) -> Self {
        Triple { a, b, c }
    }
}

/// A 3-partite 3-graph with parts of sizes `sizes[0..3]` and part-local
/// vertex ids. Globally, part `A` occupies `0..nA`, `B` follows, then `C`.
///
/// Construction checks ranges and duplicates. Linearity is checked by
/// [`TripartiteLinearSystem::new_linear`] or [`validate_linear`]; readers may
/// hold a non-linear system so that downstream operations can report the
/// violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripartiteLinearSystem {
    sizes: [u32; 3],
    edges: Vec<Triple>,
}

impl TripartiteLinearSystem {
    pub fn new(sizes: [u32; 3], edges: Vec<Triple>) -> Result<Self, SystemError> {
        let mut seen: BTreeMap<Triple, usize> = BTreeMap::new();
        for (i, t) in edges.iter().enumerate() {
            for (v, size) in [(t.a, sizes[0]), (t.b, sizes[1]), (t.c, sizes[2])] {
                if v >= size {
                    return Err(SystemError::VertexOutOfRange { edge: i, vertex: v });
                }
            }
            if let Some(&first) = seen.get(t) {
                return Err(SystemError::DuplicateEdge { first, second: i });
            }
            seen.insert(*t, i);
        }
        Ok(TripartiteLinearSystem { sizes, edges })
    }

    pub fn new_linear(sizes: [u32; 3], edges: Vec<Triple>) -> Result<Self, SystemError> {
        let sys = Self::new(sizes, edges)?;
        match validate_linear(&sys) {
            Linearity::Ok => Ok(sys),
            Linearity::Violation(v) => Err(SystemError::NotLinear(v)),
        }
    }

    pub fn sizes(&self) -> [u32; 3] {
        self.sizes
    }

    pub fn edges(&self) -> &[Triple] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Triple {
        self.edges[id as usize]
    }

    /// Global id of a vertex of part `A`, `B` or `C` (0, 1, 2).
    pub fn global(&self, part: usize, local: u32) -> u32 {
        match part {
            0 => local,
            1 => self.sizes[0] + local,
            _ => self.sizes[0] + self.sizes[1] + local,
        }
    }

    /// `d(c)` for every apex `c` of part `C`.
    pub fn apex_degrees(&self) -> Vec<u32> {
        let mut deg = alloc::vec![0u32; self.sizes[2] as usize];
        for t in &self.edges {
            deg[t.c as usize] += 1;
        }
        deg
    }

    /// Same vertices, keeping only the listed edges (in the given order).
    pub fn restrict(&self, keep: &[EdgeId]) -> Self {
        TripartiteLinearSystem { sizes: self.sizes, edges: keep.iter().map(|&id| self.edges[id as usize]).collect() }
    }

    /// The same hypergraph with global ids and identical edge order.
    pub fn to_triple_system(&self) -> TripleSystem {
        TripleSystem {
            n: self.sizes.iter().sum(),
            edges: (0..self.edges.len() as EdgeId).map(|id| self.triple(id)).collect(),
        }
    }
}

impl Hypergraph for TripartiteLinearSystem {
    fn vertex_count(&self) -> usize {
        self.sizes.iter().map(|&s| s as usize).sum()
    }

    fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn triple(&self, id: EdgeId) -> [u32; 3] {
        let t = self.edges[id as usize];
        [t.a, self.global(1, t.b), self.global(2, t.c)]
    }
}

/// Two edges sharing a vertex pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearityViolation {
    /// Global vertex ids, `pair.0 < pair.1`.
    pub pair: (u32, u32),
    pub edges: (EdgeId, EdgeId),
}

impl fmt::Display for LinearityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "not linear: pair {{{}, {}}} lies in edges {} and {}",
            self.pair.0, self.pair.1, self.edges.0, self.edges.1
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Linearity {
    Ok,
    Violation(LinearityViolation),
}

impl Linearity {
    pub fn is_ok(&self) -> bool {
        matches!(self, Linearity::Ok)
    }
}

/// Reports the first edge (in edge order) that repeats a pair already seen.
pub fn validate_linear<H: Hypergraph>(host: &H) -> Linearity {
    let mut owner: BTreeMap<(u32, u32), EdgeId> = BTreeMap::new();
    for id in 0..host.edge_count() as EdgeId {
        let [x, y, z] = host.triple(id);
        for pair in [(x, y), (x, z), (y, z)] {
            if let Some(&first) = owner.get(&pair) {
                return Linearity::Violation(LinearityViolation { pair, edges: (first, id) });
            }
            owner.insert(pair, id);
        }
    }
    Linearity::Ok
}

/// A set of hyperedges of some host, with the union of their vertices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Configuration {
    edges: Vec<EdgeId>,
    span: Vec<u32>,
}

impl Configuration {
    /// Builds the configuration from edge ids of `host`; the span is derived.
    /// Edge order is kept as given.
    pub fn from_edges<H: Hypergraph>(host: &H, edges: Vec<EdgeId>) -> Self {
        let span = span_of(host, &edges);
        Configuration { edges, span }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Sorted global vertex ids covered by the edges.
    pub fn span(&self) -> &[u32] {
        &self.span
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Sorted union of the vertices of the listed edges.
pub fn span_of<H: Hypergraph>(host: &H, edges: &[EdgeId]) -> Vec<u32> {
    let set: BTreeSet<u32> = edges.iter().flat_map(|&id| host.triple(id)).collect();
    set.into_iter().collect()
}

/// True iff `cfg` has exactly `e` distinct edges of `host`, its stored span
/// is the union of those edges, and that span has at most `v` vertices.
pub fn verify_configuration<H: Hypergraph>(host: &H, cfg: &Configuration, v: usize, e: usize) -> bool {
    if cfg.edges.len() != e {
        return false;
    }
    if cfg.edges.iter().any(|&id| id as usize >= host.edge_count()) {
        return false;
    }
    let distinct: BTreeSet<EdgeId> = cfg.edges.iter().copied().collect();
    if distinct.len() != e {
        return false;
    }
    let span = span_of(host, &cfg.edges);
    span == cfg.span && span.len() <= v
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ts(n: u32, edges: &[[u32; 3]]) -> TripleSystem {
        TripleSystem::new(n, edges.to_vec()).unwrap()
    }

    #[test]
    fn edges_sharing_one_vertex_are_linear() {
        assert_eq!(validate_linear(&ts(5, &[[0, 1, 2], [0, 3, 4]])), Linearity::Ok);
    }

    #[test]
    fn shared_pair_is_reported() {
        match validate_linear(&ts(4, &[[0, 1, 2], [0, 1, 3]])) {
            Linearity::Violation(v) => {
                assert_eq!(v.pair, (0, 1));
                assert_eq!(v.edges, (0, 1));
            }
            Linearity::Ok => panic!("expected a violation"),
        }
    }

    #[test]
    fn malformed_systems_are_rejected() {
        assert_eq!(TripleSystem::new(3, vec![[0, 1, 1]]), Err(SystemError::RepeatedVertex { edge: 0 }));
        assert_eq!(TripleSystem::new(3, vec![[0, 1, 3]]), Err(SystemError::VertexOutOfRange { edge: 0, vertex: 3 }));
        assert_eq!(
            TripleSystem::new(3, vec![[0, 1, 2], [2, 1, 0]]),
            Err(SystemError::DuplicateEdge { first: 0, second: 1 })
        );
        assert!(TripartiteLinearSystem::new([1, 1, 1], vec![Triple::new(0, 1, 0)]).is_err());
        assert!(matches!(
            TripartiteLinearSystem::new_linear([2, 1, 2], vec![Triple::new(0, 0, 0), Triple::new(0, 0, 1)]),
            Err(SystemError::NotLinear(_))
        ));
    }

    #[test]
    fn configuration_checks() {
        let host = ts(6, &[[0, 1, 2], [3, 4, 5], [0, 3, 5]]);
        let one = Configuration::from_edges(&host, vec![0]);
        assert!(verify_configuration(&host, &one, 3, 1));
        assert!(!verify_configuration(&host, &one, 2, 1));

        let disjoint = Configuration::from_edges(&host, vec![0, 1]);
        assert_eq!(disjoint.span().len(), 6);
        assert!(!verify_configuration(&host, &disjoint, 5, 2));
        assert!(verify_configuration(&host, &disjoint, 6, 2));
        assert!(!verify_configuration(&host, &disjoint, 6, 3));

        let repeated = Configuration { edges: vec![0, 0], span: vec![0, 1, 2] };
        assert!(!verify_configuration(&host, &repeated, 9, 2));
        let foreign = Configuration { edges: vec![7], span: vec![] };
        assert!(!verify_configuration(&host, &foreign, 9, 1));
        let stale = Configuration { edges: vec![0], span: vec![0, 1] };
        assert!(!verify_configuration(&host, &stale, 9, 1));
    }

    #[test]
    fn tripartite_globals() {
        let sys = TripartiteLinearSystem::new([2, 3, 4], vec![Triple::new(1, 2, 3)]).unwrap();
        assert_eq!(sys.triple(0), [1, 4, 8]);
        assert_eq!(sys.vertex_count(), 9);
        let flat = sys.to_triple_system();
        assert_eq!(flat.edges(), &[[1, 4, 8]]);
        assert_eq!(sys.apex_degrees(), vec![0, 0, 0, 1]);
    }
}
