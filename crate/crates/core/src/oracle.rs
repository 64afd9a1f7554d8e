//! Exact minimum span of `e`-edge subfamilies on small hosts.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::degsearch::binomial;
use crate::hypergraph::{EdgeId, Hypergraph};

pub const DEFAULT_GUARD: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinSpan {
    pub span: usize,
    /// Lexicographically first `e`-subset attaining `span`.
    pub witness: Vec<EdgeId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleError {
    TooFewEdges { e: usize, edges: usize },
    GuardExceeded { subsets: u128, guard: u128 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooFewEdges { e, edges } => write!(f, "e = {e} exceeds the {edges} host edges"),
            OracleError::GuardExceeded { subsets, guard } => {
                write!(f, "{subsets} edge subsets exceed the guard of {guard}")
            }
        }
    }
}

impl core::error::Error for OracleError {}

fn check<H: Hypergraph>(host: &H, e: usize, guard: u128) -> Result<(), OracleError> {
    let m = host.edge_count();
    if e > m {
        return Err(OracleError::TooFewEdges { e, edges: m });
    }
    let subsets = binomial(m as u128, e as u128);
    if subsets > guard {
        return Err(OracleError::GuardExceeded { subsets, guard });
    }
    Ok(())
}

/// Branch-and-bound over edge subsets in lexicographic order, pruning any
/// partial choice whose union already reaches the best span found.
pub fn min_span<H: Hypergraph>(host: &H, e: usize, guard: u128) -> Result<MinSpan, OracleError> {
    check(host, e, guard)?;
    let mut search = Search::new(host, e, usize::MAX);
    search.descend(0);
    Ok(search.into_result())
}

/// Same as [`min_span`] restricted to subsets whose smallest edge is
/// `first`; `None` if no such subset exists. Splitting the search over
/// `first` and taking the minimum by `(span, witness)` reproduces
/// [`min_span`] exactly.
pub fn min_span_with_first<H: Hypergraph>(
    host: &H,
    e: usize,
    first: EdgeId,
    guard: u128,
) -> Result<Option<MinSpan>, OracleError> {
    check(host, e, guard)?;
    if e == 0 || first as usize + e > host.edge_count() {
        return Ok(None);
    }
    let mut search = Search::new(host, e, usize::MAX);
    search.push(first);
    search.descend(first as usize + 1);
    Ok(search.best.map(|(span, witness)| MinSpan { span, witness }))
}

/// True iff some `e` edges span at most `v` vertices; stops at the first
/// witness. Any `e` edges span at most `3e`, so that case needs no search.
pub fn exists_config<H: Hypergraph>(host: &H, v: usize, e: usize, guard: u128) -> Result<bool, OracleError> {
    if e > host.edge_count() {
        return Err(OracleError::TooFewEdges { e, edges: host.edge_count() });
    }
    if v >= 3 * e {
        return Ok(true);
    }
    check(host, e, guard)?;
    let mut search = Search::new(host, e, v + 1);
    search.stop_at_first = true;
    search.descend(0);
    Ok(search.best.is_some())
}

struct Search<'a, H> {
    host: &'a H,
    e: usize,
    cover: Vec<u32>,
    union: usize,
    chosen: Vec<EdgeId>,
    /// Spans must be strictly below this to be recorded.
    limit: usize,
    best: Option<(usize, Vec<EdgeId>)>,
    stop_at_first: bool,
}

impl<'a, H: Hypergraph> Search<'a, H> {
    fn new(host: &'a H, e: usize, limit: usize) -> Self {
        Search {
            host,
            e,
            cover: vec![0; host.vertex_count()],
            union: 0,
            chosen: Vec::with_capacity(e),
            limit,
            best: None,
            stop_at_first: false,
        }
    }

    fn push(&mut self, id: EdgeId) {
        for v in self.host.triple(id) {
            let c = &mut self.cover[v as usize];
            if *c == 0 {
                self.union += 1;
            }
            *c += 1;
        }
        self.chosen.push(id);
    }

    fn pop(&mut self) {
        let id = self.chosen.pop().unwrap();
        for v in self.host.triple(id) {
            let c = &mut self.cover[v as usize];
            *c -= 1;
            if *c == 0 {
                self.union -= 1;
            }
        }
    }

    fn descend(&mut self, start: usize) -> bool {
        if self.chosen.len() == self.e {
            if self.union < self.limit {
                self.limit = self.union;
                self.best = Some((self.union, self.chosen.clone()));
                return self.stop_at_first;
            }
            return false;
        }
        let m = self.host.edge_count();
        let need = self.e - self.chosen.len();
        for id in start..=(m - need) {
            self.push(id as EdgeId);
            let stop = self.union < self.limit && self.descend(id + 1);
            self.pop();
            if stop {
                return true;
            }
        }
        false
    }

    fn into_result(self) -> MinSpan {
        let (span, witness) = self.best.unwrap_or((0, Vec::new()));
        MinSpan { span, witness }
    }
}
