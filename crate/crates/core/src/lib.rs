//! Constructive reduction from sparse-configuration finding in linear
//! 3-partite 3-graphs to dense 2-degenerate subgraph finding.
//!
//! The pipeline is:
//!
//! 1. [`reduce::reduce_or_win`] turns an arbitrary triple system into a
//!    linear tripartite one (or returns a trivially sparse configuration).
//! 2. [`auxgraph::build_aux`] builds the bipartite pair multigraph whose
//!    vertices are pairs of the first two parts, with one edge per pair of
//!    hyperedges meeting at an apex of the third part.
//! 3. [`degsearch::find_dense_2deg`] looks for a 2-degenerate subgraph with
//!    `k` vertices and close to `2k` edges.
//! 4. [`unpack::unpack`] maps that subgraph back to a set of hyperedges and
//!    records the per-step vertex/edge accounting, which
//!    [`unpack::check_lemma_bounds`] and [`unpack::audit_involvement`] check.
//! 5. [`driver::find_bes_configuration`] repeats 2–4 on the residual system
//!    until exactly `e` hyperedges are collected.
//!
//! [`oracle`] gives exact minimum spans on small hosts, and [`girth`] grows
//! high-girth graphs that are built from isolated vertices by repeatedly
//! adding degree-2 vertices.
//!
//! The crate is `no_std` and only needs `alloc`. All randomness is seeded and
//! every result is deterministic in its inputs.
#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod auxgraph;
pub mod degsearch;
pub mod driver;
pub mod generators;
pub mod girth;
pub mod graph;
pub mod hypergraph;
pub mod oracle;
pub mod reduce;
pub mod unpack;

mod rng;

pub use auxgraph::{build_aux, simple_subgraph, AuxEdge, AuxGraph, PairVertex, Pairing, SimpleAux};
pub use degsearch::{
    brute_force_best_2deg, degeneracy_ordering, find_dense_2deg, Budget, CandidateF, DegeneracyOrdering, SearchOutcome,
    Strategy,
};
pub use driver::{find_bes_configuration, paper_constant_d, DriverParams, DriverReport};
pub use generators::{group_system, random_linear};
pub use girth::{girth_of, grow_girth_graph, verify_certificate, GrowthCertificate, PairChoice};
pub use graph::{Graph, Side};
pub use hypergraph::{
    validate_linear, verify_configuration, Configuration, EdgeId, Hypergraph, Linearity, TripartiteLinearSystem,
    Triple, TripleSystem,
};

pub use oracle::{exists_config, min_span, MinSpan};
pub use reduce::{reduce_or_win, ReduceOutcome};
pub use unpack::{audit_involvement, check_lemma_bounds, unpack, UnpackTrace};
