//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any failed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use besforge_core::auxgraph::{expected_multi_edge_count, AuxGraph, SimpleAux};
use besforge_core::girth::{check_certificate, find_t_by_doubling};
use besforge_core::oracle::DEFAULT_GUARD;
use besforge_core::unpack::check_step_law;
use besforge_core::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

fn aux_identity() -> Verdict {
    let mut slowest = Duration::ZERO;
    for m in 2..=30u32 {
        let clock = Instant::now();
        let lts = group_system(m);
        let aux = build_aux(&lts).map_err(|e| format!("m = {m}: {e}"))?;
        let count = aux.multi_edge_count() as u64;
        let elapsed = clock.elapsed();
        slowest = slowest.max(elapsed);
        let m = m as u64;
        ensure(count == m * c2(m), || format!("m = {m}: {count} aux edges, expected {}", m * c2(m)))?;
        ensure(count == expected_multi_edge_count(&lts), || format!("m = {m}: codegree sum differs"))?;
        // |E|^2 / (4|C|) = m^4 / (4m)
        ensure(4 * m * count >= m.pow(4), || format!("m = {m}: {count} < m^4/(4m)"))?;
        ensure(elapsed < Duration::from_secs(1), || format!("m = {m} took {elapsed:?}"))?;
    }
    Ok(format!("m = 2..30, slowest {slowest:?}"))
}

/// Parallel edges between the same two pair-vertices, as `(u, w)` groups.
fn parallel_pairings_distinct(aux: &AuxGraph) -> bool {
    aux.edges()
        .chunk_by(|x, y| (x.u, x.w) == (y.u, y.w))
        .all(|group| group.len() <= 2 && (group.len() < 2 || group[0].pairing != group[1].pairing))
}

fn multiplicity_law() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut aux_edges = 0usize;
    for i in 0..1000u64 {
        let (na, nb, nc) = (rng.gen_range(1..=15), rng.gen_range(1..=15), rng.gen_range(1..=15));
        let target = rng.gen_range(1..=na as usize * nb as usize);
        let lts = random_linear(na, nb, nc, target, i);
        let aux = build_aux(&lts).map_err(|e| format!("instance {i}: {e}"))?;
        ensure(aux.multiplicity_violations() == 0, || format!("instance {i}: multiplicity above 2"))?;
        ensure(parallel_pairings_distinct(&aux), || format!("instance {i}: parallel edges share a pairing"))?;
        aux_edges += aux.multi_edge_count();
    }
    Ok(format!("1000 instances, {aux_edges} aux edges, 0 violations"))
}

struct Host {
    lts: TripartiteLinearSystem,
    aux: AuxGraph,
    simple: SimpleAux,
}

impl Host {
    fn new(lts: TripartiteLinearSystem) -> Self {
        let aux = build_aux(&lts).unwrap();
        let simple = simple_subgraph(&aux);
        Host { lts, aux, simple }
    }
}

/// A random 2-degenerate subgraph grown by attaching, when possible, a
/// vertex with two chosen neighbours.
fn random_dense_candidate(g: &Graph, k: usize, rng: &mut ChaCha8Rng) -> CandidateF {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut hits = vec![0usize; n];
    let mut order = Vec::with_capacity(k);
    while order.len() < k {
        let best = (0..n).filter(|&v| !placed[v]).map(|v| hits[v].min(2)).max().unwrap();
        let pool: Vec<usize> = (0..n).filter(|&v| !placed[v] && hits[v].min(2) == best).collect();
        let v = *pool.choose(rng).unwrap();
        placed[v] = true;
        order.push(v as u32);
        for &w in g.neighbors(v as u32) {
            hits[w as usize] += 1;
        }
    }
    CandidateF::from_order(g, order)
}

fn random_sparse_candidate(g: &Graph, k: usize, rng: &mut ChaCha8Rng) -> CandidateF {
    let mut all: Vec<u32> = (0..g.n() as u32).collect();
    all.shuffle(rng);
    all.truncate(k);
    CandidateF::from_order(g, all)
}

struct Corpus {
    runs: usize,
    failures: Vec<String>,
    audit_failures: Vec<String>,
    zero_steps: usize,
    four_steps: usize,
    elapsed: Duration,
}

fn unpack_corpus() -> Corpus {
    let clock = Instant::now();
    let mut hosts: Vec<Host> = (3..=9).map(|m| Host::new(group_system(m))).collect();
    for s in 0..8u64 {
        hosts.push(Host::new(random_linear(6 + s as u32, 7, 8, 40 + 5 * s as usize, 100 + s)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut corpus = Corpus {
        runs: 0,
        failures: Vec::new(),
        audit_failures: Vec::new(),
        zero_steps: 0,
        four_steps: 0,
        elapsed: Duration::ZERO,
    };
    let mut round = 0u64;
    while corpus.runs < 10_000 {
        for (h, host) in hosts.iter().enumerate() {
            let g = host.simple.graph();
            let k = rng.gen_range(2..=12.min(g.n()));
            let f = match round % 3 {
                0 => find_dense_2deg(g, k, 4, Strategy::Grow, round, Budget::steps(4)).unwrap().candidate,
                1 => random_dense_candidate(g, k, &mut rng),
                _ => random_sparse_candidate(g, k, &mut rng),
            };
            let tag = || format!("host {h}, round {round}, k = {k}");
            let trace = match unpack(&f, &host.simple, &host.aux, &host.lts) {
                Ok(trace) => trace,
                Err(e) => {
                    corpus.failures.push(format!("{}: {e}", tag()));
                    continue;
                }
            };
            corpus.runs += 1;
            corpus.zero_steps += trace.counts.zero_step;
            corpus.four_steps += trace.counts.four_step;
            let t = f.achieved_t();
            if let Err(i) = check_step_law(&trace) {
                corpus.failures.push(format!("{}: step {i} breaks the delta table", tag()));
            }
            let bounds = check_lemma_bounds(&trace, f.k(), t);
            if !bounds.singular_bound_ok || !bounds.assertion1_ok {
                corpus.failures.push(format!("{}: bounds {bounds:?}", tag()));
            }
            if trace.edge_total() != trace.configuration.len() {
                corpus.failures.push(format!("{}: step totals disagree with the configuration", tag()));
            }
            if let Err(fail) = audit_involvement(&trace) {
                corpus.audit_failures.push(format!("{}: {fail}", tag()));
            }
        }
        round += 1;
    }
    corpus.elapsed = clock.elapsed();
    corpus
}

fn step_law(c: &Corpus) -> Verdict {
    ensure(c.failures.is_empty(), || format!("{} violations, first: {}", c.failures.len(), c.failures[0]))?;
    ensure(c.elapsed < Duration::from_secs(60), || format!("corpus took {:?}", c.elapsed))?;
    Ok(format!(
        "{} runs ({} zero-steps, {} four-steps), 0 violations, {:?}",
        c.runs, c.zero_steps, c.four_steps, c.elapsed
    ))
}

fn involvement(c: &Corpus) -> Verdict {
    ensure(c.audit_failures.is_empty(), || {
        format!("{} violations, first: {}", c.audit_failures.len(), c.audit_failures[0])
    })?;
    Ok(format!("{} runs, 0 violations", c.runs))
}

fn oracle_dominance() -> Verdict {
    let mut hosts: Vec<TripartiteLinearSystem> = (2..=5).map(group_system).collect();
    for s in 0..6u64 {
        hosts.push(random_linear(5, 5, 5, 12 + 2 * s as usize, 200 + s));
    }
    let mut checked = 0;
    for (h, lts) in hosts.iter().enumerate() {
        assert!(lts.edge_count() <= 25);
        for e in 1..=10.min(lts.edge_count()) {
            let exact = match min_span(lts, e, DEFAULT_GUARD) {
                Ok(r) => r.span,
                Err(_) => continue,
            };
            let r = find_bes_configuration(lts, e, &DriverParams::default())
                .map_err(|err| format!("host {h}, e = {e}: {err}"))?;
            ensure(r.span >= exact, || format!("host {h}, e = {e}: driver {} below oracle {exact}", r.span))?;
            checked += 1;
        }
    }
    let g3 = find_bes_configuration(&group_system(3), 7, &DriverParams::default()).map_err(|e| e.to_string())?;
    let exact3 = min_span(&group_system(3), 7, DEFAULT_GUARD).map_err(|e| e.to_string())?.span;
    ensure(g3.span == 9 && exact3 == 9, || format!("group 3, e = 7: driver {}, oracle {exact3}", g3.span))?;
    let exact2 = min_span(&group_system(2), 4, DEFAULT_GUARD).map_err(|e| e.to_string())?.span;
    ensure(exact2 == 6, || format!("min_span(group 2, 4) = {exact2}"))?;
    Ok(format!("{checked} instances dominated; group 3 e = 7 span 9; group 2 e = 4 span 6"))
}

fn driver_contract() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for run in 0..200u64 {
        let m = rng.gen_range(2..=20u32);
        let lts = group_system(m);
        let e = rng.gen_range(1..=60.min(lts.edge_count()));
        let params = DriverParams { seed: run, ..DriverParams::default() };
        let r = find_bes_configuration(&lts, e, &params).map_err(|err| format!("run {run}: {err}"))?;
        ensure(r.configuration.len() == e, || format!("run {run}: {} edges for e = {e}", r.configuration.len()))?;
        ensure(verify_configuration(&lts, &r.configuration, r.span, e), || format!("run {run}: verifier rejects"))?;
        let again = find_bes_configuration(&lts, e, &params).unwrap();
        ensure(again == r, || format!("run {run}: report differs between identical runs"))?;
    }
    let d = paper_constant_d(4, 1);
    ensure(d == 1_920_048, || format!("paper_constant_d(4, 1) = {d}"))?;
    Ok("200 runs exact and deterministic; paper_constant_d(4, 1) = 1920048".into())
}

fn girth_growth() -> Verdict {
    let mut notes = Vec::new();
    for g in [4usize, 5, 6] {
        let (t, growth) = find_t_by_doubling(500, g, 7, 1, PairChoice::Random).map_err(|e| format!("g = {g}: {e}"))?;
        let clock = Instant::now();
        let graph = &growth.graph;
        check_certificate(graph, &growth.certificate).map_err(|e| format!("g = {g}: {e}"))?;
        let sides = graph.two_coloring().ok_or_else(|| format!("g = {g}: not bipartite"))?;
        let girth = girth_of(graph);
        let elapsed = clock.elapsed();
        let a = sides.iter().filter(|&&s| s == Side::A).count();
        let declared_a =
            growth.certificate.sides.as_ref().map(|s| s.iter().filter(|&&x| x == Side::A).count()).unwrap_or(a);
        ensure(graph.max_degree() <= 8, || format!("g = {g}: max degree {}", graph.max_degree()))?;
        ensure(declared_a == 250, || format!("g = {g}: sides {declared_a}/{}", 500 - declared_a))?;
        ensure(graph.m() == 2 * (500 - t), || format!("g = {g}: {} edges for t = {t}", graph.m()))?;
        ensure(girth.is_none_or(|x| x >= g), || format!("g = {g}: girth {girth:?}"))?;
        ensure(elapsed < Duration::from_secs(10), || format!("g = {g}: verification took {elapsed:?}"))?;
        notes.push(format!("g={g}:t={t},girth={}", girth.map_or("inf".into(), |x| x.to_string())));
    }
    Ok(notes.join(" "))
}

fn degeneracy_oracle() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut comparisons = 0;
    for i in 0..500u64 {
        let n = rng.gen_range(2..=9usize);
        let p = rng.gen_range(1..=9u32);
        let mut g = Graph::new(n);
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                if rng.gen_ratio(p, 10) {
                    g.add_edge(u, v);
                }
            }
        }
        for k in 2..=n {
            let (best, _) = brute_force_best_2deg(&g, k).map_err(|e| format!("graph {i}: {e}"))?;
            let exact = find_dense_2deg(&g, k, 0, Strategy::Exhaustive, i, Budget::default()).unwrap();
            ensure(exact.candidate.edge_count() == best, || {
                format!("graph {i}, k = {k}: exhaustive {} vs brute force {best}", exact.candidate.edge_count())
            })?;
            for s in [Strategy::Peel, Strategy::Grow] {
                let h = find_dense_2deg(&g, k, 0, s, i, Budget::default()).unwrap();
                ensure(h.candidate.validate(&g).is_ok(), || format!("graph {i}, k = {k}: {s:?} invalid"))?;
                ensure(h.candidate.edge_count() <= best, || format!("graph {i}, k = {k}: {s:?} beats brute force"))?;
            }
            comparisons += 1;
        }
    }
    Ok(format!("500 graphs, {comparisons} (graph, k) comparisons"))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |id: u32, name: &str, verdict: Verdict| match verdict {
        Ok(note) => println!("PASS {id} {name}: {note}"),
        Err(why) => {
            failed += 1;
            println!("FAIL {id} {name}: {why}");
        }
    };
    report(1, "aux-identity", aux_identity());
    report(2, "multiplicity-law", multiplicity_law());
    let corpus = unpack_corpus();
    report(3, "step-law", step_law(&corpus));
    report(4, "involvement-audit", involvement(&corpus));
    report(5, "oracle-dominance", oracle_dominance());
    report(6, "driver-contract", driver_contract());
    report(7, "girth-growth", girth_growth());
    report(8, "degeneracy-oracle", degeneracy_oracle());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
