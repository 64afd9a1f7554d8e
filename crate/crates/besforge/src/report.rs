//! JSON shapes for reports, traces and candidates. Every numeric field is an
//! integer.

use besforge_core::degsearch::{CandidateF, SearchOutcome, Strategy};
use besforge_core::driver::{FStats, FrameReport};
use besforge_core::unpack::{InvolvementAudit, LemmaBoundsReport, StepRecord};
use besforge_core::{DriverReport, EdgeId, Side};
use serde::{Deserialize, Serialize};

pub fn strategy_name(s: Strategy) -> &'static str {
    match s {
        Strategy::Peel => "peel",
        Strategy::Grow => "grow",
        Strategy::Exhaustive => "exhaustive",
    }
}

pub fn side_name(s: Side) -> &'static str {
    match s {
        Side::A => "A",
        Side::B => "B",
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsJson {
    pub t: i64,
    pub k0: usize,
    pub tau_max: usize,
    pub base_e: usize,
    pub paper_mode: bool,
    pub strategy: String,
    pub seed: u64,
    pub budget_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FStatsJson {
    pub k: usize,
    pub edges: usize,
    pub achieved_t: i64,
    pub success: bool,
    pub steps: u64,
}

impl From<&FStats> for FStatsJson {
    fn from(f: &FStats) -> Self {
        FStatsJson { k: f.k, edges: f.edges, achieved_t: f.achieved_t, success: f.success, steps: f.steps }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnpackedJson {
    pub edges: usize,
    pub vertices: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameJson {
    pub e_prime: usize,
    pub k: Option<usize>,
    pub residual_edges: usize,
    pub residual_vertices: usize,
    pub aux_vertices: usize,
    pub aux_edges: usize,
    pub f: Option<FStatsJson>,
    pub unpacked: Option<UnpackedJson>,
    pub lemma_branch: Option<String>,
    pub branch: String,
    pub flagged: bool,
    pub added: usize,
}

impl From<&FrameReport> for FrameJson {
    fn from(fr: &FrameReport) -> Self {
        FrameJson {
            e_prime: fr.e_prime,
            k: fr.k,
            residual_edges: fr.residual_edges,
            residual_vertices: fr.residual_vertices,
            aux_vertices: fr.aux_vertices,
            aux_edges: fr.aux_edges,
            f: fr.f.as_ref().map(FStatsJson::from),
            unpacked: fr.unpacked.map(|(edges, vertices)| UnpackedJson { edges, vertices }),
            lemma_branch: fr.lemma_branch.map(|b| b.name().to_string()),
            branch: fr.branch.name().to_string(),
            flagged: fr.flagged,
            added: fr.added,
        }
    }
}

/// Result of `solve`. Edge and vertex ids refer to the input file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveJson {
    pub e: usize,
    pub span: usize,
    pub requested_e: usize,
    /// False when the residual system ran dry before `e` edges were found.
    pub complete: bool,
    /// `reduced` when the input went through reduce-or-win first, `win` when
    /// that step already found the configuration, `direct` otherwise.
    pub route: String,
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<u32>,
    pub d_achieved: i64,
    pub d_paper: Option<u128>,
    pub flagged: bool,
    pub frames: Vec<FrameJson>,
    pub params: ParamsJson,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timestamp: Option<u64>,
}

impl SolveJson {
    /// Builds the report from a driver run, translating edge and vertex ids
    /// through `edge_map` and `vertex_map` when the run was on a reduced
    /// system.
    pub fn from_driver(
        report: &DriverReport,
        complete: bool,
        route: &str,
        edge_map: Option<&[EdgeId]>,
        vertex_map: Option<&dyn Fn(u32) -> u32>,
        params: ParamsJson,
    ) -> Self {
        let mut edges: Vec<EdgeId> =
            report.configuration.edges().iter().map(|&id| edge_map.map_or(id, |m| m[id as usize])).collect();
        edges.sort_unstable();
        let mut vertices: Vec<u32> =
            report.configuration.span().iter().map(|&v| vertex_map.map_or(v, |f| f(v))).collect();
        vertices.sort_unstable();
        SolveJson {
            e: edges.len(),
            span: vertices.len(),
            requested_e: report.requested_e,
            complete,
            route: route.to_string(),
            edges,
            vertices,
            d_achieved: report.d_achieved,
            d_paper: report.d_paper,
            flagged: report.flagged(),
            frames: report.frames.iter().map(FrameJson::from).collect(),
            params,
            timestamp: None,
        }
    }
}

/// One unpacking step, with the exported field names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub i: usize,
    pub vertex: [u32; 2],
    pub side: String,
    pub d: u32,
    pub class: String,
    #[serde(rename = "dE")]
    pub d_e: u32,
    #[serde(rename = "dV")]
    pub d_v: u32,
    pub apexes: Vec<u32>,
    pub new_edges: Vec<EdgeId>,
    pub new_vertices: Vec<u32>,
}

impl From<&StepRecord> for StepJson {
    fn from(s: &StepRecord) -> Self {
        StepJson {
            i: s.index,
            vertex: [s.vertex.lo, s.vertex.hi],
            side: side_name(s.vertex.side).to_string(),
            d: s.back_degree,
            class: s.class.name().to_string(),
            d_e: s.delta_e,
            d_v: s.delta_v,
            apexes: s.apexes.clone(),
            new_edges: s.new_edges.clone(),
            new_vertices: s.new_vertices.clone(),
        }
    }
}

pub fn trace_json(steps: &[StepRecord]) -> Vec<StepJson> {
    steps.iter().map(StepJson::from).collect()
}

/// A dense 2-degenerate candidate in the simple pair graph of a system.
/// `edges` holds `[later, earlier]` vertex pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateJson {
    pub k: usize,
    pub t_target: i64,
    pub strategy: String,
    pub seed: u64,
    pub achieved_t: i64,
    pub success: bool,
    pub steps: u64,
    pub vertices: Vec<u32>,
    pub edges: Vec<[u32; 2]>,
}

impl CandidateJson {
    pub fn new(out: &SearchOutcome, t_target: i64, strategy: Strategy, seed: u64) -> Self {
        let f = &out.candidate;
        CandidateJson {
            k: f.k(),
            t_target,
            strategy: strategy_name(strategy).to_string(),
            seed,
            achieved_t: f.achieved_t(),
            success: out.success,
            steps: out.steps,
            vertices: f.vertices.clone(),
            edges: f.edges.iter().map(|&(x, y)| [x, y]).collect(),
        }
    }

    pub fn to_candidate(&self) -> CandidateF {
        CandidateF { vertices: self.vertices.clone(), edges: self.edges.iter().map(|&[x, y]| (x, y)).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaJson {
    pub within_hypotheses: bool,
    pub assertion1: bool,
    pub branch: String,
    pub s: i128,
    pub singular_count: usize,
    pub good_count: usize,
    pub zero_count: usize,
    pub four_count: usize,
    pub singular_bound_ok: bool,
}

impl From<&LemmaBoundsReport> for LemmaJson {
    fn from(r: &LemmaBoundsReport) -> Self {
        LemmaJson {
            within_hypotheses: r.within_hypotheses,
            assertion1: r.assertion1_ok,
            branch: r.assertion2_branch.name().to_string(),
            s: r.s,
            singular_count: r.singular_count,
            good_count: r.good_count,
            zero_count: r.zero_count,
            four_count: r.four_count,
            singular_bound_ok: r.singular_bound_ok,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditJson {
    pub ok: bool,
    pub z: Vec<u32>,
    pub z_within_12t: bool,
    /// `[apex, j0]` for each apex of `z`.
    pub j0: Vec<[u64; 2]>,
    pub busiest_apex: Option<u32>,
    pub repeated_pairs: usize,
    pub unpreceded_zero_steps: usize,
}

impl AuditJson {
    pub fn passed(a: &InvolvementAudit) -> Self {
        AuditJson {
            ok: true,
            z: a.z.clone(),
            z_within_12t: a.z_within_12t,
            j0: a.j0.iter().map(|(&z, &j)| [z as u64, j as u64]).collect(),
            busiest_apex: a.busiest_apex,
            repeated_pairs: 0,
            unpreceded_zero_steps: 0,
        }
    }
}

/// Output of `unpack`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnpackJson {
    pub k: usize,
    pub t: i64,
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<u32>,
    pub excess: Vec<i64>,
    pub step_law_ok: bool,
    pub lemma: LemmaJson,
    pub audit: AuditJson,
    pub steps: Vec<StepJson>,
}
