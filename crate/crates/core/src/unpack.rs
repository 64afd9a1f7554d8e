//! Unpacking a 2-degenerate subgraph of the pair graph into hyperedges.
//!
//! Vertices `v1..vk` of the subgraph are processed in certificate order.
//! Step `i` adds the two elements of the pair `vi` and, for every edge from
//! `vi` back to an earlier vertex, the apex of that edge and its two
//! hyperedges. Each step is recorded with its vertex and hyperedge growth
//! so the accounting inequalities can be checked step by step.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::auxgraph::{aux_edge_is_valid, AuxGraph, PairVertex, SimpleAux};
use crate::degsearch::{CandidateError, CandidateF};
use crate::graph::Side;
use crate::hypergraph::{Configuration, EdgeId, TripartiteLinearSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StepClass {
    /// Back-degree 0 or 1.
    Singular,
    /// Back-degree 2, no new hyperedge.
    ZeroStep,
    /// Back-degree 2, four new hyperedges and four new vertices.
    FourStep,
    /// Any other back-degree-2 step.
    GoodRegular,
}

impl StepClass {
    pub fn name(self) -> &'static str {
        match self {
            StepClass::Singular => "singular",
            StepClass::ZeroStep => "zero_step",
            StepClass::FourStep => "four_step",
            StepClass::GoodRegular => "good_regular",
        }
    }

    /// Singular and good regular steps.
    pub fn is_good(self) -> bool {
        matches!(self, StepClass::Singular | StepClass::GoodRegular)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRecord {
    /// 1-based step index.
    pub index: usize,
    pub vertex: PairVertex,
    /// Id of the pair in the simple pair graph.
    pub graph_vertex: u32,
    pub back_degree: u32,
    pub class: StepClass,
    pub delta_e: u32,
    pub delta_v: u32,
    /// Apexes of the back edges, ascending.
    pub apexes: Vec<u32>,
    /// `(h1, h2)` of each back edge, in apex order.
    pub involved_pairs: Vec<(EdgeId, EdgeId)>,
    pub new_edges: Vec<EdgeId>,
    /// Global vertex ids.
    pub new_vertices: Vec<u32>,
}

impl StepRecord {
    pub fn is_regular(&self) -> bool {
        self.back_degree == 2
    }

    pub fn involved_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.involved_pairs.iter().flat_map(|&(x, y)| [x, y])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassCounts {
    pub singular: usize,
    pub zero_step: usize,
    pub four_step: usize,
    pub good_regular: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnpackTrace {
    pub steps: Vec<StepRecord>,
    /// The hyperedges collected; its span only covers those edges.
    pub configuration: Configuration,
    /// All vertices collected, including pair elements of vertices without
    /// back edges. Sorted global ids.
    pub vertices: Vec<u32>,
    pub counts: ClassCounts,
    /// `|E| − |V|` after every step.
    pub excess: Vec<i64>,
    /// `k` of the unpacked subgraph.
    pub k: usize,
    /// `2k − |E(F)|` of the unpacked subgraph.
    pub t: i64,
    edge_apex: BTreeMap<EdgeId, u32>,
}

impl UnpackTrace {
    pub fn edge_total(&self) -> usize {
        self.configuration.len()
    }

    pub fn vertex_total(&self) -> usize {
        self.vertices.len()
    }

    /// Apex of a collected hyperedge.
    pub fn apex_of(&self, edge: EdgeId) -> Option<u32> {
        self.edge_apex.get(&edge).copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnpackError {
    InvalidCandidate(CandidateError),
    /// A subgraph edge with no pair-graph annotation.
    MissingAnnotation(u32, u32),
    /// An annotated edge whose hyperedges are absent or do not realize it.
    BrokenEdge {
        aux_edge: u32,
    },
}

impl fmt::Display for UnpackError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnpackError::InvalidCandidate(e) => write!(f, "invalid subgraph: {e}"),
            UnpackError::MissingAnnotation(x, y) => write!(f, "edge {x}-{y} has no apex annotation"),
            UnpackError::BrokenEdge { aux_edge } => {
                write!(f, "pair-graph edge {aux_edge} is not realized by hyperedges of the host")
            }
        }
    }
}

impl core::error::Error for UnpackError {}

fn pair_globals(host: &TripartiteLinearSystem, p: PairVertex) -> [u32; 2] {
    let part = match p.side {
        Side::A => 0,
        Side::B => 1,
    };
    [host.global(part, p.lo), host.global(part, p.hi)]
}

pub fn unpack(
    f: &CandidateF,
    simple: &SimpleAux,
    aux: &AuxGraph,
    host: &TripartiteLinearSystem,
) -> Result<UnpackTrace, UnpackError> {
    f.validate(simple.graph()).map_err(UnpackError::InvalidCandidate)?;
    let mut edges: BTreeSet<EdgeId> = BTreeSet::new();
    let mut edge_order: Vec<EdgeId> = Vec::new();
    let mut vertices: BTreeSet<u32> = BTreeSet::new();
    let mut edge_apex = BTreeMap::new();
    let mut steps = Vec::with_capacity(f.k());
    let mut counts = ClassCounts::default();
    let mut excess = Vec::with_capacity(f.k());

    for (i, &v) in f.vertices.iter().enumerate() {
        let pair = simple.pair(v);
        let mut back = Vec::new();
        for y in f.back_neighbors(i) {
            let idx = simple.aux_edge_of(v, y).ok_or(UnpackError::MissingAnnotation(v, y))?;
            let ae = aux.edges().get(idx as usize).ok_or(UnpackError::BrokenEdge { aux_edge: idx })?;
            if !aux_edge_is_valid(host, aux, ae) {
                return Err(UnpackError::BrokenEdge { aux_edge: idx });
            }
            back.push(*ae);
        }
        back.sort_by_key(|ae| ae.apex);

        let mut new_vertices = Vec::new();
        let mut new_edges = Vec::new();
        for x in pair_globals(host, pair) {
            if vertices.insert(x) {
                new_vertices.push(x);
            }
        }
        for ae in &back {
            let c = host.global(2, ae.apex);
            if vertices.insert(c) {
                new_vertices.push(c);
            }
            for h in [ae.h1, ae.h2] {
                if edges.insert(h) {
                    new_edges.push(h);
                    edge_order.push(h);
                    edge_apex.insert(h, ae.apex);
                }
            }
        }

        let back_degree = back.len() as u32;
        let (delta_e, delta_v) = (new_edges.len() as u32, new_vertices.len() as u32);
        let class = if back_degree <= 1 {
            counts.singular += 1;
            StepClass::Singular
        } else if delta_e == 0 {
            counts.zero_step += 1;
            StepClass::ZeroStep
        } else if delta_e == 4 && delta_v == 4 {
            counts.four_step += 1;
            StepClass::FourStep
        } else {
            counts.good_regular += 1;
            StepClass::GoodRegular
        };
        excess.push(edges.len() as i64 - vertices.len() as i64);
        steps.push(StepRecord {
            index: i + 1,
            vertex: pair,
            graph_vertex: v,
            back_degree,
            class,
            delta_e,
            delta_v,
            apexes: back.iter().map(|ae| ae.apex).collect(),
            involved_pairs: back.iter().map(|ae| (ae.h1, ae.h2)).collect(),
            new_edges,
            new_vertices,
        });
    }

    Ok(UnpackTrace {
        steps,
        configuration: Configuration::from_edges(host, edge_order),
        vertices: vertices.into_iter().collect(),
        counts,
        excess,
        k: f.k(),
        t: f.achieved_t(),
        edge_apex,
    })
}

/// Which disjunct of the second bound holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Assertion2Branch {
    /// `|E| ≥ 4k − 10⁴t³`.
    Near4k,
    /// `|E| ≥ |V| > 0`.
    SelfSustaining,
    Violated,
    /// Nothing was unpacked.
    Empty,
}

impl Assertion2Branch {
    pub fn name(self) -> &'static str {
        match self {
            Assertion2Branch::Near4k => "near_4k",
            Assertion2Branch::SelfSustaining => "self_sustaining",
            Assertion2Branch::Violated => "violated",
            Assertion2Branch::Empty => "empty",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaBoundsReport {
    pub k: i64,
    pub t: i64,
    pub vertices: i64,
    pub edges: i64,
    /// `k ≥ t ≥ 4`; the bounds are only guaranteed inside these hypotheses.
    pub within_hypotheses: bool,
    /// `|V| − 4t ≤ |E| ≤ 4k`.
    pub assertion1_ok: bool,
    pub assertion2_branch: Assertion2Branch,
    /// `6t(12t + 2)²`.
    pub s: i128,
    pub singular_count: usize,
    /// Singular plus good regular steps.
    pub good_count: usize,
    pub zero_count: usize,
    pub four_count: usize,
    /// At most `2t` singular steps.
    pub singular_bound_ok: bool,
}

/// `10⁴ t³`.
pub fn near_4k_slack(t: i64) -> i128 {
    10_000 * (t as i128).pow(3)
}

pub fn s_threshold(t: i64) -> i128 {
    let t = t as i128;
    6 * t * (12 * t + 2) * (12 * t + 2)
}

pub fn check_lemma_bounds(trace: &UnpackTrace, k: usize, t: i64) -> LemmaBoundsReport {
    let (ki, v, e) = (k as i64, trace.vertex_total() as i64, trace.edge_total() as i64);
    let assertion1_ok = v - 4 * t <= e && e <= 4 * ki;
    let assertion2_branch = if trace.steps.is_empty() {
        Assertion2Branch::Empty
    } else if e as i128 >= 4 * ki as i128 - near_4k_slack(t) {
        Assertion2Branch::Near4k
    } else if e >= v && v > 0 {
        Assertion2Branch::SelfSustaining
    } else {
        Assertion2Branch::Violated
    };
    let c = trace.counts;
    LemmaBoundsReport {
        k: ki,
        t,
        vertices: v,
        edges: e,
        within_hypotheses: t >= 4 && ki >= t,
        assertion1_ok,
        assertion2_branch,
        s: s_threshold(t),
        singular_count: c.singular,
        good_count: c.singular + c.good_regular,
        zero_count: c.zero_step,
        four_count: c.four_step,
        singular_bound_ok: (c.singular as i64) <= 2 * t,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InvolvementAudit {
    /// Steps involving each apex, ascending.
    pub apex_steps: BTreeMap<u32, Vec<usize>>,
    /// Step at which each hyperedge pair sharing an apex was involved.
    pub pair_step: BTreeMap<(EdgeId, EdgeId), usize>,
    /// Apexes involved in zero-steps.
    pub z: Vec<u32>,
    /// `|Z| ≤ 12t`.
    pub z_within_12t: bool,
    /// Zero-steps per apex of `Z`.
    pub zero_steps_per_apex: BTreeMap<u32, usize>,
    /// For each `z ∈ Z`: steps adding a new hyperedge through `z`.
    pub j_sets: BTreeMap<u32, Vec<usize>>,
    /// `min J` for each `z ∈ Z`.
    pub j0: BTreeMap<u32, usize>,
    /// The apex of `Z` with the most zero-steps (smallest id on ties).
    pub busiest_apex: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AuditFailure {
    /// `(pair, first step, second step)`.
    pub repeated_pairs: Vec<((EdgeId, EdgeId), usize, usize)>,
    /// `(zero-step, apex)` with no earlier good step involving the apex.
    pub unpreceded_zero_steps: Vec<(usize, u32)>,
}

impl fmt::Display for AuditFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "involvement audit failed:")?;
        for ((x, y), s1, s2) in &self.repeated_pairs {
            write!(f, " hyperedges {x},{y} involved at steps {s1} and {s2};")?;
        }
        for (step, apex) in &self.unpreceded_zero_steps {
            write!(f, " zero-step {step} at apex {apex} has no earlier good step;")?;
        }
        Ok(())
    }
}

impl core::error::Error for AuditFailure {}

pub fn audit_involvement(trace: &UnpackTrace) -> Result<InvolvementAudit, AuditFailure> {
    let mut audit = InvolvementAudit::default();
    let mut failure = AuditFailure::default();
    // first good step per apex
    let mut first_good: BTreeMap<u32, usize> = BTreeMap::new();

    for step in &trace.steps {
        for (&apex, &pair) in step.apexes.iter().zip(&step.involved_pairs) {
            audit.apex_steps.entry(apex).or_default().push(step.index);
            let key = (pair.0.min(pair.1), pair.0.max(pair.1));
            match audit.pair_step.get(&key) {
                Some(&earlier) if earlier != step.index => failure.repeated_pairs.push((key, earlier, step.index)),
                Some(_) => {}
                None => {
                    audit.pair_step.insert(key, step.index);
                }
            }
            if step.class == StepClass::ZeroStep {
                *audit.zero_steps_per_apex.entry(apex).or_default() += 1;
                if first_good.get(&apex).is_none_or(|&g| g >= step.index) {
                    failure.unpreceded_zero_steps.push((step.index, apex));
                }
            }
        }
        if step.class.is_good() {
            for &apex in &step.apexes {
                first_good.entry(apex).or_insert(step.index);
            }
        }
    }

    audit.z = audit.zero_steps_per_apex.keys().copied().collect();
    audit.z_within_12t = (audit.z.len() as i64) <= 12 * trace.t;
    audit.busiest_apex =
        audit.zero_steps_per_apex.iter().max_by_key(|(&apex, &n)| (n, core::cmp::Reverse(apex))).map(|(&apex, _)| apex);
    for &z in &audit.z {
        let j: Vec<usize> = trace
            .steps
            .iter()
            .filter(|s| s.new_edges.iter().any(|&h| trace.apex_of(h) == Some(z)))
            .map(|s| s.index)
            .collect();
        if let Some(&first) = j.first() {
            audit.j0.insert(z, first);
        }
        audit.j_sets.insert(z, j);
    }

    if failure.repeated_pairs.is_empty() && failure.unpreceded_zero_steps.is_empty() {
        Ok(audit)
    } else {
        Err(failure)
    }
}

/// Per-step inequalities that every trace must satisfy. Returns the index of
/// the first offending step.
pub fn check_step_law(trace: &UnpackTrace) -> Result<(), usize> {
    for s in &trace.steps {
        let (de, dv) = (s.delta_e, s.delta_v);
        let ok = de <= 2 * s.back_degree
            && if s.is_regular() {
                dv <= 4
                    && match de {
                        0 | 1 => dv == 0,
                        2 => dv <= 1,
                        3 => dv <= 2,
                        _ => true,
                    }
                    && s.apexes.len() == 2
                    && s.apexes[0] != s.apexes[1]
            } else {
                de + 2 >= dv
            };
        if !ok {
            return Err(s.index);
        }
    }
    Ok(())
}
