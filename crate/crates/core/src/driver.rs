//! The assembly loop: collect exactly `e` hyperedges on few vertices by
//! repeatedly finding a dense 2-degenerate pair subgraph, unpacking it, and
//! either topping up the result or removing it and continuing on the rest.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::auxgraph::{build_aux, simple_subgraph, AuxError};
use crate::degsearch::{find_dense_2deg, Budget, Strategy};
use crate::hypergraph::{validate_linear, Configuration, EdgeId, Hypergraph, Linearity, TripartiteLinearSystem};
use crate::unpack::{check_lemma_bounds, near_4k_slack, unpack, Assertion2Branch, UnpackError};

/// `max{24·k0, 3(4t + 10⁴t³)}`.
pub fn paper_constant_d(t: u64, k0: u64) -> u128 {
    let t = t as u128;
    (24 * k0 as u128).max(3 * (4 * t + 10_000 * t * t * t))
}

#[derive(Debug, Clone, Copy)]
pub struct DriverParams {
    pub t: i64,
    pub k0: usize,
    /// Largest shortfall filled by greedy top-up.
    pub tau_max: usize,
    /// Requests of at most this many edges are filled greedily.
    pub base_e: usize,
    /// Use `base_e = max{8k0, 4t + 10⁴t³}` and `tau_max = 10⁴t³ + 4`
    /// instead of the configured thresholds.
    pub paper_mode: bool,
    pub strategy: Strategy,
    pub seed: u64,
    pub budget: Budget,
}

impl Default for DriverParams {
    fn default() -> Self {
        DriverParams {
            t: 4,
            k0: 2,
            tau_max: 4,
            base_e: 4,
            paper_mode: false,
            strategy: Strategy::Grow,
            seed: 0,
            budget: Budget::default(),
        }
    }
}

impl DriverParams {
    fn thresholds(&self) -> (usize, usize) {
        if !self.paper_mode {
            return (self.base_e.max(1), self.tau_max);
        }
        let slack = near_4k_slack(self.t);
        let base = (8 * self.k0 as i128).max(4 * self.t as i128 + slack);
        let clamp = |x: i128| usize::try_from(x.max(0)).unwrap_or(usize::MAX);
        (clamp(base).max(1), clamp(slack + 4))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Base,
    TopUp,
    Recurse,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::Base => "base",
            Branch::TopUp => "top_up",
            Branch::Recurse => "recurse",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FStats {
    pub k: usize,
    pub edges: usize,
    pub achieved_t: i64,
    pub success: bool,
    pub steps: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameReport {
    /// Edges still requested when the frame started.
    pub e_prime: usize,
    pub k: Option<usize>,
    pub residual_edges: usize,
    /// Vertices of the residual system with at least one edge.
    pub residual_vertices: usize,
    pub aux_vertices: usize,
    pub aux_edges: usize,
    pub f: Option<FStats>,
    /// `(|E|, |V|)` of the unpacked configuration.
    pub unpacked: Option<(usize, usize)>,
    pub lemma_branch: Option<Assertion2Branch>,
    pub branch: Branch,
    /// The search missed its target, failed outright, or neither follow-up
    /// applied and the frame fell back to greedy selection.
    pub flagged: bool,
    /// Edges this frame contributed to the answer.
    pub added: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DriverReport {
    pub requested_e: usize,
    /// Edge ids refer to the input system.
    pub configuration: Configuration,
    pub span: usize,
    pub d_achieved: i64,
    pub d_paper: Option<u128>,
    pub frames: Vec<FrameReport>,
}

impl DriverReport {
    pub fn flagged(&self) -> bool {
        self.frames.iter().any(|f| f.flagged)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DriverError {
    ZeroE,
    NotLinear,
    TooFewEdges {
        e: usize,
        edges: usize,
    },
    /// The residual system ran out of edges; carries what was collected.
    Exhausted(Box<DriverReport>),
    Unpack(UnpackError),
}

impl fmt::Display for DriverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DriverError::ZeroE => f.write_str("e must be at least 1"),
            DriverError::NotLinear => f.write_str("input system is not linear"),
            DriverError::TooFewEdges { e, edges } => write!(f, "e = {e} exceeds the {edges} input edges"),
            DriverError::Exhausted(r) => write!(
                f,
                "residual system exhausted after collecting {} of {} edges",
                r.configuration.len(),
                r.requested_e
            ),
            DriverError::Unpack(e) => write!(f, "unpacking failed: {e}"),
        }
    }
}

impl core::error::Error for DriverError {}

/// Running selection over the input system.
struct Collector<'a> {
    host: &'a TripartiteLinearSystem,
    chosen: Vec<EdgeId>,
    taken: Vec<bool>,
    cover: Vec<bool>,
}

impl<'a> Collector<'a> {
    fn new(host: &'a TripartiteLinearSystem) -> Self {
        Collector {
            host,
            chosen: Vec::new(),
            taken: vec![false; host.edge_count()],
            cover: vec![false; host.vertex_count()],
        }
    }

    fn take(&mut self, id: EdgeId) {
        debug_assert!(!self.taken[id as usize]);
        self.taken[id as usize] = true;
        self.chosen.push(id);
        for v in self.host.triple(id) {
            self.cover[v as usize] = true;
        }
    }

    /// Greedily takes `count` edges from `pool`, each time the edge with the
    /// most vertices already covered, ties to the smallest id. Returns false
    /// if the pool ran dry.
    fn greedy(&mut self, pool: &[EdgeId], count: usize) -> bool {
        for _ in 0..count {
            let best = pool.iter().copied().filter(|&id| !self.taken[id as usize]).max_by_key(|&id| {
                let overlap = self.host.triple(id).iter().filter(|&&v| self.cover[v as usize]).count();
                (overlap, core::cmp::Reverse(id))
            });
            match best {
                Some(id) => self.take(id),
                None => return false,
            }
        }
        true
    }
}

pub fn find_bes_configuration(
    lts: &TripartiteLinearSystem,
    e: usize,
    params: &DriverParams,
) -> Result<DriverReport, DriverError> {
    if e == 0 {
        return Err(DriverError::ZeroE);
    }
    if !matches!(validate_linear(lts), Linearity::Ok) {
        return Err(DriverError::NotLinear);
    }
    if lts.edge_count() < e {
        return Err(DriverError::TooFewEdges { e, edges: lts.edge_count() });
    }
    let (base_e, tau_max) = params.thresholds();
    let mut collector = Collector::new(lts);
    let mut residual: Vec<EdgeId> = (0..lts.edge_count() as EdgeId).collect();
    let mut frames = Vec::new();
    let mut remaining = e;
    let mut exhausted = false;

    while remaining > 0 {
        let mut frame = FrameReport {
            e_prime: remaining,
            k: None,
            residual_edges: residual.len(),
            residual_vertices: residual.iter().flat_map(|&id| lts.triple(id)).collect::<BTreeSet<u32>>().len(),
            aux_vertices: 0,
            aux_edges: 0,
            f: None,
            unpacked: None,
            lemma_branch: None,
            branch: Branch::Base,
            flagged: false,
            added: 0,
        };
        if residual.len() < remaining {
            exhausted = true;
            frames.push(frame);
            break;
        }
        let k = remaining / 4;
        if remaining <= base_e || k < params.k0.max(2) {
            collector.greedy(&residual, remaining);
            frame.added = remaining;
            frames.push(frame);
            break;
        }
        frame.k = Some(k);

        let sub = lts.restrict(&residual);
        let aux = build_aux(&sub).map_err(|err| match err {
            AuxError::NotLinear(_) | AuxError::Multiplicity { .. } => DriverError::NotLinear,
        })?;
        let simple = simple_subgraph(&aux);
        frame.aux_vertices = simple.graph().n();
        frame.aux_edges = simple.edge_count();
        let frame_seed = params.seed.wrapping_add(frames.len() as u64);
        let search = find_dense_2deg(simple.graph(), k, params.t, params.strategy, frame_seed, params.budget);
        let Ok(outcome) = search else {
            // no candidate at all (e.g. fewer than k pair vertices)
            frame.flagged = true;
            collector.greedy(&residual, remaining);
            frame.added = remaining;
            frames.push(frame);
            break;
        };
        let cand = &outcome.candidate;
        frame.flagged = !outcome.success;
        frame.f = Some(FStats {
            k: cand.k(),
            edges: cand.edge_count(),
            achieved_t: cand.achieved_t(),
            success: outcome.success,
            steps: outcome.steps,
        });
        let trace = unpack(cand, &simple, &aux, &sub).map_err(DriverError::Unpack)?;
        let report = check_lemma_bounds(&trace, k, cand.achieved_t());
        let (got_e, got_v) = (trace.edge_total(), trace.vertex_total());
        frame.unpacked = Some((got_e, got_v));
        frame.lemma_branch = Some(report.assertion2_branch);
        let found: Vec<EdgeId> = trace.configuration.edges().iter().map(|&local| residual[local as usize]).collect();

        if remaining - got_e <= tau_max {
            for &id in &found {
                collector.take(id);
            }
            collector.greedy(&residual, remaining - got_e);
            frame.branch = Branch::TopUp;
            frame.added = remaining;
            frames.push(frame);
            break;
        }
        if got_e >= got_v && got_v > 0 {
            for &id in &found {
                collector.take(id);
            }
            let gone: BTreeSet<EdgeId> = found.iter().copied().collect();
            residual.retain(|id| !gone.contains(id));
            remaining -= got_e;
            frame.branch = Branch::Recurse;
            frame.added = got_e;
            frames.push(frame);
            continue;
        }
        frame.flagged = true;
        collector.greedy(&residual, remaining);
        frame.added = remaining;
        frames.push(frame);
        break;
    }

    let configuration = Configuration::from_edges(lts, collector.chosen);
    let span = configuration.span().len();
    let report = DriverReport {
        requested_e: e,
        d_achieved: span as i64 - configuration.len() as i64,
        span,
        configuration,
        d_paper: params.paper_mode.then(|| paper_constant_d(params.t.max(0) as u64, params.k0 as u64)),
        frames,
    };
    if exhausted {
        return Err(DriverError::Exhausted(Box::new(report)));
    }
    debug_assert_eq!(report.configuration.len(), e);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::group_system;
    use crate::hypergraph::{verify_configuration, Triple};

    #[test]
    fn constant_d_formula() {
        assert_eq!(paper_constant_d(4, 1), 1_920_048);
        assert_eq!(paper_constant_d(1, 1_000_000), 24_000_000);
        assert_eq!(24 * 80_002, 1_920_048);
        assert_eq!(paper_constant_d(4, 80_002), 1_920_048);
    }

    #[test]
    fn group_three_seven_edges_on_nine_vertices() {
        let g = group_system(3);
        let r = find_bes_configuration(&g, 7, &DriverParams::default()).unwrap();
        assert_eq!(r.configuration.len(), 7);
        assert_eq!(r.span, 9);
        assert_eq!(r.d_achieved, 2);
        assert!(verify_configuration(&g, &r.configuration, 9, 7));
    }

    #[test]
    fn single_edge() {
        let r = find_bes_configuration(&group_system(5), 1, &DriverParams::default()).unwrap();
        assert_eq!((r.configuration.len(), r.span, r.d_achieved), (1, 3, 2));
    }

    #[test]
    fn group_twenty_forty_edges() {
        let g = group_system(20);
        let params = DriverParams { seed: 1, ..DriverParams::default() };
        let r = find_bes_configuration(&g, 40, &params).unwrap();
        assert_eq!(r.configuration.len(), 40);
        assert!(verify_configuration(&g, &r.configuration, r.span, 40));
        assert!(r.d_achieved <= 80);
        assert!(r.frames[0].k == Some(10));
        for f in r.frames.iter().filter(|f| f.branch == Branch::Recurse) {
            let (e, v) = f.unpacked.unwrap();
            assert!(e >= v && v > 0);
        }
        assert_eq!(find_bes_configuration(&g, 40, &params).unwrap(), r);
    }

    #[test]
    fn theoretical_thresholds_short_circuit() {
        let g = group_system(10);
        let params = DriverParams { paper_mode: true, t: 4, k0: 1, ..DriverParams::default() };
        let r = find_bes_configuration(&g, 50, &params).unwrap();
        assert_eq!(r.frames.len(), 1);
        assert_eq!(r.frames[0].branch, Branch::Base);
        assert_eq!(r.d_paper, Some(1_920_048));
        assert!((r.d_achieved as i128) <= r.d_paper.unwrap() as i128);
    }

    #[test]
    fn input_errors() {
        let g = group_system(2);
        let p = DriverParams::default();
        assert_eq!(find_bes_configuration(&g, 0, &p), Err(DriverError::ZeroE));
        assert_eq!(find_bes_configuration(&g, 5, &p), Err(DriverError::TooFewEdges { e: 5, edges: 4 }));
        let bad = TripartiteLinearSystem::new([2, 1, 2], vec![Triple::new(0, 0, 0), Triple::new(0, 0, 1)]).unwrap();
        assert_eq!(find_bes_configuration(&bad, 1, &p), Err(DriverError::NotLinear));
    }
}
