use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use anyhow::{anyhow, Context};
use besforge::format::{self, SystemFile};
use besforge::report::{
    strategy_name, trace_json, AuditJson, CandidateJson, LemmaJson, ParamsJson, SolveJson, UnpackJson,
};
use besforge_core::degsearch::Deadline;
use besforge_core::driver::DriverError;
use besforge_core::girth::{check_certificate, find_t_by_doubling};
use besforge_core::oracle::{min_span_with_first, DEFAULT_GUARD};
use besforge_core::reduce::Reduction;
use besforge_core::unpack::check_step_law;
use besforge_core::{
    audit_involvement, build_aux, check_lemma_bounds, exists_config, find_bes_configuration, find_dense_2deg, girth_of,
    group_system, grow_girth_graph, min_span, random_linear, reduce_or_win, simple_subgraph, unpack, validate_linear,
    verify_configuration, Budget, Configuration, DriverParams, EdgeId, Hypergraph, Linearity, MinSpan, PairChoice,
    ReduceOutcome, Strategy, TripartiteLinearSystem,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "besforge", version, about = "Sparse configurations in linear 3-partite 3-graphs")]
struct Cli {
    /// Random seed; falls back to $BESFORGE_SEED, then 0.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Leave the timestamp out of JSON reports.
    #[arg(long, global = true)]
    no_timestamp: bool,
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a tripartite system.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Reduce a triple system to a linear tripartite one, or find `e` edges on a pair.
    Reduce {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        e: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the pair graph of a linear tripartite system.
    Aux {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search the pair graph for a dense 2-degenerate subgraph.
    Findf {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 4)]
        t: i64,
        #[arg(long, value_enum, default_value_t = StrategyArg::Grow)]
        strategy: StrategyArg,
        #[arg(long)]
        budget_ms: Option<u64>,
        /// Restart cap for the grow strategy.
        #[arg(long)]
        steps: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Map a candidate subgraph back to hyperedges and audit the steps.
    Unpack {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        candidate: PathBuf,
        /// Target `t` for the bound checks (default: the candidate's achieved t).
        #[arg(long)]
        t: Option<i64>,
        /// Write the step trace as a JSON array here.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Collect exactly `e` hyperedges spanning few vertices.
    Solve(SolveArgs),
    /// Exact minimum span of `e` edges on a small system.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        e: usize,
        /// Only decide whether some `e` edges span at most `v` vertices.
        #[arg(long)]
        v: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: u128,
        /// Also print the witness edge ids.
        #[arg(long)]
        witness: bool,
    },
    /// Grow or check high-girth bipartite graphs.
    Girth {
        #[command(subcommand)]
        op: GirthOp,
    },
    /// Check a configuration from a solve report against its input.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        report: PathBuf,
        /// Vertex bound (default: the report's span).
        #[arg(long)]
        v: Option<usize>,
    },
    /// Run the driver over group systems and print CSV.
    Sweep {
        #[arg(long, default_value_t = 3)]
        m_min: u32,
        #[arg(long, default_value_t = 10)]
        m_max: u32,
        /// Comma-separated edge counts.
        #[arg(long, value_delimiter = ',', default_values_t = [4usize, 8, 16])]
        e: Vec<usize>,
        #[arg(long, default_value_t = 4)]
        t: i64,
        /// Also run the exact oracle when it fits under this guard.
        #[arg(long)]
        oracle_guard: Option<u128>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Edges `(a, b, a + b mod m)` on three parts of size `m`.
    Group {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Greedy random linear system.
    Random {
        #[arg(long)]
        na: u32,
        #[arg(long)]
        nb: u32,
        #[arg(long)]
        nc: u32,
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum GirthOp {
    /// Grow from `t` isolated vertices to `k` by adding degree-2 vertices.
    Grow {
        #[arg(long)]
        k: usize,
        /// Seed count; with --double, the starting value.
        #[arg(long)]
        t: usize,
        #[arg(long)]
        g: usize,
        /// Double `t` until growth succeeds.
        #[arg(long)]
        double: bool,
        /// Take the smallest valid pair instead of a uniform one.
        #[arg(long)]
        smallest: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a certificate and report girth and degrees.
    Check {
        #[arg(long)]
        input: PathBuf,
        /// Fail unless the girth is at least this.
        #[arg(long)]
        g: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    e: usize,
    #[arg(long, default_value_t = 4)]
    t: i64,
    #[arg(long, default_value_t = 2)]
    k0: usize,
    #[arg(long, default_value_t = 4)]
    tau_max: usize,
    #[arg(long, default_value_t = 4)]
    base_e: usize,
    #[arg(long)]
    paper_mode: bool,
    #[arg(long, value_enum, default_value_t = StrategyArg::Grow)]
    strategy: StrategyArg,
    #[arg(long)]
    budget_ms: Option<u64>,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyArg {
    Peel,
    Grow,
    Exhaustive,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Peel => Strategy::Peel,
            StrategyArg::Grow => Strategy::Grow,
            StrategyArg::Exhaustive => Strategy::Exhaustive,
        }
    }
}

/// Exit status 2: bad arguments, unreadable or malformed files.
/// Exit status 1: the inputs were fine but the computation failed.
enum Failure {
    Usage(anyhow::Error),
    Domain(anyhow::Error),
}

type Outcome = Result<(), Failure>;

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Usage(e.into())
}

fn domain(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Domain(e.into())
}

struct Ctx {
    seed: u64,
    timestamp: bool,
    threads: usize,
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("BESFORGE_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| usage(anyhow!("BESFORGE_SEED must be an unsigned integer, got `{v}`"))),
        Err(_) => Ok(0),
    }
}

fn start() -> Instant {
    static START: OnceLock<Instant> = OnceLock::new();
    *START.get_or_init(Instant::now)
}

fn now_ms() -> u64 {
    start().elapsed().as_millis() as u64
}

fn budget(budget_ms: Option<u64>, steps: Option<u64>) -> Budget {
    let mut b = Budget::default();
    if let Some(s) = steps {
        b.max_steps = s;
    }
    b.deadline = budget_ms.map(|ms| Deadline { now_ms, at_ms: now_ms() + ms });
    b
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display())).map_err(usage)
}

fn read_system(path: &Path) -> Result<SystemFile, Failure> {
    let text = read_text(path)?;
    SystemFile::parse(&text).with_context(|| format!("parsing {}", path.display())).map_err(usage)
}

fn read_linear(path: &Path) -> Result<TripartiteLinearSystem, Failure> {
    let text = read_text(path)?;
    let lts = format::read_tls(&text).with_context(|| format!("parsing {}", path.display())).map_err(usage)?;
    if let Linearity::Violation(v) = validate_linear(&lts) {
        return Err(usage(anyhow!("{} is not linear: {v}", path.display())));
    }
    Ok(lts)
}

/// Writes to `path`, or to stdout when no path is given.
fn emit(path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())).map_err(usage),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report types serialize");
    s.push('\n');
    s
}

fn unix_seconds() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

fn main() -> ExitCode {
    start();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = resolve_seed(cli.seed).and_then(|seed| {
        let threads = cli.threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get())).max(1);
        let ctx = Ctx { seed, timestamp: !cli.no_timestamp, threads };
        run(cli.command, &ctx)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(e)) => {
            eprintln!("besforge: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("besforge: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, ctx: &Ctx) -> Outcome {
    match command {
        Command::Gen { kind } => cmd_gen(kind, ctx),
        Command::Reduce { input, e, out } => cmd_reduce(&input, e, out.as_deref(), ctx),
        Command::Aux { input, out } => cmd_aux(&input, out.as_deref()),
        Command::Findf { input, k, t, strategy, budget_ms, steps, out } => {
            let lts = read_linear(&input)?;
            let aux = build_aux(&lts).map_err(domain)?;
            let simple = simple_subgraph(&aux);
            let strategy = Strategy::from(strategy);
            let found =
                find_dense_2deg(simple.graph(), k, t, strategy, ctx.seed, budget(budget_ms, steps)).map_err(usage)?;
            let json = CandidateJson::new(&found, t, strategy, ctx.seed);
            emit(out.as_deref(), &to_json(&json))?;
            eprintln!("k = {}, edges = {}, achieved t = {}, target t = {t}", json.k, json.edges.len(), json.achieved_t);
            if found.success {
                Ok(())
            } else {
                Err(domain(anyhow!("no candidate with t <= {t} found")))
            }
        }
        Command::Unpack { input, candidate, t, trace, report } => {
            cmd_unpack(&input, &candidate, t, trace.as_deref(), report.as_deref())
        }
        Command::Solve(args) => cmd_solve(args, ctx),
        Command::Oracle { input, e, v, guard, witness } => cmd_oracle(&input, e, v, guard, witness, ctx),
        Command::Girth { op } => match op {
            GirthOp::Grow { k, t, g, double, smallest, out } => {
                let choice = if smallest { PairChoice::Smallest } else { PairChoice::Random };
                let growth = if double {
                    find_t_by_doubling(k, g, ctx.seed, t, choice).map(|(_, growth)| growth)
                } else {
                    grow_girth_graph(k, t, g, ctx.seed, choice)
                }
                .map_err(|e| match e {
                    besforge_core::girth::GrowthError::BadParameters { .. } => usage(e),
                    _ => domain(e),
                })?;
                emit(out.as_deref(), &format::write_grown(&growth.graph, &growth.certificate))?;
                eprintln!(
                    "k = {}, t = {}, edges = {}, max degree = {}",
                    growth.graph.n(),
                    growth.certificate.t,
                    growth.graph.m(),
                    growth.graph.max_degree()
                );
                Ok(())
            }
            GirthOp::Check { input, g } => {
                let text = read_text(&input)?;
                let (graph, cert) = format::read_grown(&text).map_err(usage)?;
                check_certificate(&graph, &cert).map_err(domain)?;
                let girth = girth_of(&graph);
                let sides = graph.two_coloring().expect("certificate check ensures bipartite");
                let a = sides.iter().filter(|&&s| s == besforge_core::Side::A).count();
                let girth_text = girth.map_or("inf".to_string(), |x| x.to_string());
                println!(
                    "ok n={} m={} t={} girth={girth_text} max_degree={} sides={}/{}",
                    graph.n(),
                    graph.m(),
                    cert.t,
                    graph.max_degree(),
                    a,
                    graph.n() - a
                );
                match (g, girth) {
                    (Some(g), Some(found)) if found < g => {
                        Err(domain(anyhow!("girth {found} is below the required {g}")))
                    }
                    _ => Ok(()),
                }
            }
        },
        Command::Verify { input, report, v } => {
            let host = read_system(&input)?.to_ts();
            let text = read_text(&report)?;
            let json: SolveJson =
                serde_json::from_str(&text).with_context(|| format!("parsing {}", report.display())).map_err(usage)?;
            if json.edges.iter().any(|&id| id as usize >= host.edge_count()) {
                return Err(domain(anyhow!("report names edges outside the input")));
            }
            let cfg = Configuration::from_edges(&host, json.edges.clone());
            let v = v.unwrap_or(json.span);
            if verify_configuration(&host, &cfg, v, json.e) && cfg.span().len() == json.span {
                println!("ok e={} span={}", json.e, json.span);
                Ok(())
            } else {
                Err(domain(anyhow!(
                    "configuration does not check out: {} edges span {} vertices, report claims e = {} and span = {}",
                    cfg.len(),
                    cfg.span().len(),
                    json.e,
                    json.span
                )))
            }
        }
        Command::Sweep { m_min, m_max, e, t, oracle_guard, out } => {
            cmd_sweep(m_min..=m_max, &e, t, oracle_guard, out.as_deref(), ctx)
        }
    }
}

fn cmd_gen(kind: GenKind, ctx: &Ctx) -> Outcome {
    let (lts, out) = match kind {
        GenKind::Group { m, out } => {
            if m == 0 {
                return Err(usage(anyhow!("--m must be positive")));
            }
            (group_system(m), out)
        }
        GenKind::Random { na, nb, nc, edges, out } => (random_linear(na, nb, nc, edges, ctx.seed), out),
    };
    emit(out.as_deref(), &format::write_tls(&lts))?;
    if out.is_some() {
        let [a, b, c] = lts.sizes();
        eprintln!("{a}+{b}+{c} vertices, {} edges", lts.edge_count());
    }
    Ok(())
}

fn cmd_reduce(input: &Path, e: usize, out: Option<&Path>, ctx: &Ctx) -> Outcome {
    let ts = read_system(input)?.to_ts();
    match reduce_or_win(&ts, e, ctx.seed).map_err(usage)? {
        ReduceOutcome::Win { pair, config } => {
            println!("win pair={} {} edges={} span={}", pair.0, pair.1, join(config.edges()), config.span().len());
            Ok(())
        }
        ReduceOutcome::Reduced(r) => {
            emit(out, &format::write_tls(&r.system))?;
            eprintln!(
                "kept {} of {} rainbow edges ({} input edges), max codegree {}, colouring {}",
                r.kept_edges,
                r.proper_edges,
                ts.edge_count(),
                r.max_codegree,
                r.coloring
            );
            if r.retention_bound_holds(e) {
                Ok(())
            } else {
                Err(domain(anyhow!("retention bound violated")))
            }
        }
    }
}

fn cmd_aux(input: &Path, out: Option<&Path>) -> Outcome {
    let lts = read_linear(input)?;
    let aux = build_aux(&lts).map_err(domain)?;
    if let Some(path) = out {
        emit(Some(path), &format::write_aux(&aux))?;
    }
    let simple = simple_subgraph(&aux);
    println!(
        "a_vertices={} b_vertices={} edges={} expected={} simple_edges={} violations={}",
        aux.a_vertices().len(),
        aux.b_vertices().len(),
        aux.multi_edge_count(),
        besforge_core::auxgraph::expected_multi_edge_count(&lts),
        simple.edge_count(),
        aux.multiplicity_violations()
    );
    Ok(())
}

fn cmd_unpack(
    input: &Path,
    candidate: &Path,
    t: Option<i64>,
    trace_out: Option<&Path>,
    report_out: Option<&Path>,
) -> Outcome {
    let lts = read_linear(input)?;
    let text = read_text(candidate)?;
    let cand: CandidateJson =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", candidate.display())).map_err(usage)?;
    let aux = build_aux(&lts).map_err(domain)?;
    let simple = simple_subgraph(&aux);
    let f = cand.to_candidate();
    let trace = unpack(&f, &simple, &aux, &lts).map_err(usage)?;
    let t = t.unwrap_or_else(|| f.achieved_t());
    let lemma = check_lemma_bounds(&trace, f.k(), t);
    let step_law = check_step_law(&trace);
    let audit = audit_involvement(&trace);
    let audit_json = match &audit {
        Ok(a) => AuditJson::passed(a),
        Err(fail) => AuditJson {
            ok: false,
            z: Vec::new(),
            z_within_12t: false,
            j0: Vec::new(),
            busiest_apex: None,
            repeated_pairs: fail.repeated_pairs.len(),
            unpreceded_zero_steps: fail.unpreceded_zero_steps.len(),
        },
    };
    let steps = trace_json(&trace.steps);
    if let Some(path) = trace_out {
        emit(Some(path), &to_json(&steps))?;
    }
    let mut edges = trace.configuration.edges().to_vec();
    edges.sort_unstable();
    let json = UnpackJson {
        k: f.k(),
        t,
        edges,
        vertices: trace.vertices.clone(),
        excess: trace.excess.clone(),
        step_law_ok: step_law.is_ok(),
        lemma: LemmaJson::from(&lemma),
        audit: audit_json,
        steps,
    };
    if let Some(path) = report_out {
        emit(Some(path), &to_json(&json))?;
    }
    println!(
        "edges={} vertices={} singular={} zero={} four={} good_regular={} branch={}",
        trace.edge_total(),
        trace.vertex_total(),
        trace.counts.singular,
        trace.counts.zero_step,
        trace.counts.four_step,
        trace.counts.good_regular,
        lemma.assertion2_branch.name()
    );
    if let Err(i) = step_law {
        return Err(domain(anyhow!("step {i} breaks the per-step law")));
    }
    if let Err(fail) = audit {
        return Err(domain(anyhow!("involvement audit failed: {fail}")));
    }
    Ok(())
}

fn cmd_solve(args: SolveArgs, ctx: &Ctx) -> Outcome {
    let file = read_system(&args.input)?;
    let strategy = Strategy::from(args.strategy);
    let params = DriverParams {
        t: args.t,
        k0: args.k0,
        tau_max: args.tau_max,
        base_e: args.base_e,
        paper_mode: args.paper_mode,
        strategy,
        seed: ctx.seed,
        budget: budget(args.budget_ms, None),
    };
    let params_json = ParamsJson {
        t: args.t,
        k0: args.k0,
        tau_max: args.tau_max,
        base_e: args.base_e,
        paper_mode: args.paper_mode,
        strategy: strategy_name(strategy).to_string(),
        seed: ctx.seed,
        budget_ms: args.budget_ms,
    };
    if args.e == 0 {
        return Err(usage(anyhow!("--e must be at least 1")));
    }
    if args.e > file.edge_count() {
        return Err(domain(anyhow!("e = {} exceeds the {} input edges", args.e, file.edge_count())));
    }

    let direct = match &file {
        SystemFile::Tls(lts) if validate_linear(lts).is_ok() => Some(lts),
        _ => None,
    };
    let (mut json, failure) = match direct {
        Some(lts) => solve_on(lts, args.e, &params, "direct", None, params_json)?,
        None => {
            let ts = file.to_ts();
            match reduce_or_win(&ts, args.e, ctx.seed).map_err(domain)? {
                ReduceOutcome::Win { config, .. } => {
                    let edges = config.edges().to_vec();
                    let span = config.span().to_vec();
                    let json = SolveJson {
                        e: edges.len(),
                        span: span.len(),
                        requested_e: args.e,
                        complete: true,
                        route: "win".into(),
                        edges,
                        vertices: span,
                        d_achieved: config.span().len() as i64 - args.e as i64,
                        d_paper: args
                            .paper_mode
                            .then(|| besforge_core::paper_constant_d(args.t.max(0) as u64, args.k0 as u64)),
                        flagged: false,
                        frames: Vec::new(),
                        params: params_json,
                        timestamp: None,
                    };
                    (json, None)
                }
                ReduceOutcome::Reduced(r) => {
                    if r.system.edge_count() < args.e {
                        return Err(domain(anyhow!(
                            "reduction kept {} edges, fewer than e = {}",
                            r.system.edge_count(),
                            args.e
                        )));
                    }
                    solve_on(&r.system, args.e, &params, "reduced", Some(&r), params_json)?
                }
            }
        }
    };
    if ctx.timestamp {
        json.timestamp = Some(unix_seconds());
    }
    if let Some(path) = &args.report {
        emit(Some(path), &to_json(&json))?;
    }
    println!(
        "e={} span={} d={} frames={} flagged={}",
        json.e,
        json.span,
        json.d_achieved,
        json.frames.len(),
        json.flagged
    );
    match failure {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

/// Runs the driver; an exhausted run still yields a (partial) report plus
/// the failure to return once the report is written.
fn solve_on(
    lts: &TripartiteLinearSystem,
    e: usize,
    params: &DriverParams,
    route: &str,
    reduction: Option<&Reduction>,
    params_json: ParamsJson,
) -> Result<(SolveJson, Option<Failure>), Failure> {
    let vertex_map = reduction.map(|r| {
        let [na, nb, _] = r.system.sizes();
        move |v: u32| {
            let (part, local) = if v < na {
                (0, v)
            } else if v < na + nb {
                (1, v - na)
            } else {
                (2, v - na - nb)
            };
            r.parts[part][local as usize]
        }
    });
    let edge_map = reduction.map(|r| r.source_edges.as_slice());
    let build = |report: &besforge_core::DriverReport, complete: bool| {
        SolveJson::from_driver(
            report,
            complete,
            route,
            edge_map,
            vertex_map.as_ref().map(|f| f as &dyn Fn(u32) -> u32),
            params_json.clone(),
        )
    };
    match find_bes_configuration(lts, e, params) {
        Ok(report) => Ok((build(&report, true), None)),
        Err(DriverError::Exhausted(report)) => {
            let failure =
                domain(anyhow!("residual system exhausted after {} of {e} edges", report.configuration.len()));
            Ok((build(&report, false), Some(failure)))
        }
        Err(err) => Err(domain(err)),
    }
}

fn cmd_oracle(input: &Path, e: usize, v: Option<usize>, guard: u128, witness: bool, ctx: &Ctx) -> Outcome {
    let ts = read_system(input)?.to_ts();
    if let Some(v) = v {
        let found = exists_config(&ts, v, e, guard).map_err(domain)?;
        println!("{found}");
        return Ok(());
    }
    let best = if ctx.threads <= 1 || ts.edge_count() < 2 {
        min_span(&ts, e, guard).map_err(domain)?
    } else {
        parallel_min_span(&ts, e, guard, ctx.threads)?
    };
    println!("{}", best.span);
    if witness {
        println!("{}", join(&best.witness));
    }
    Ok(())
}

/// Splits the search by smallest chosen edge, assigning first edges to
/// workers round-robin; the combined minimum by `(span, witness)` equals the
/// sequential answer.
fn parallel_min_span<H: Hypergraph + Sync>(
    host: &H,
    e: usize,
    guard: u128,
    threads: usize,
) -> Result<MinSpan, Failure> {
    // validates e and the guard once up front
    if e == 0 || e > host.edge_count() {
        return min_span(host, e, guard).map_err(domain);
    }
    let m = host.edge_count() as EdgeId;
    let workers = threads.min(m as usize);
    let results: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                s.spawn(move || {
                    let mut best: Option<MinSpan> = None;
                    for first in (w as EdgeId..m).step_by(workers) {
                        let found = min_span_with_first(host, e, first, guard)?;
                        if let Some(f) = found {
                            if best.as_ref().is_none_or(|b| (f.span, &f.witness) < (b.span, &b.witness)) {
                                best = Some(f);
                            }
                        }
                    }
                    Ok::<_, besforge_core::oracle::OracleError>(best)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("oracle worker panicked")).collect()
    });
    let mut best: Option<MinSpan> = None;
    for r in results {
        if let Some(f) = r.map_err(domain)? {
            if best.as_ref().is_none_or(|b| (f.span, &f.witness) < (b.span, &b.witness)) {
                best = Some(f);
            }
        }
    }
    Ok(best.expect("some subset exists when e <= m"))
}

fn cmd_sweep(
    ms: std::ops::RangeInclusive<u32>,
    es: &[usize],
    t: i64,
    oracle_guard: Option<u128>,
    out: Option<&Path>,
    ctx: &Ctx,
) -> Outcome {
    let mut csv = String::from("m,e,span,d,frames,flagged,min_span\n");
    for m in ms {
        let lts = group_system(m.max(1));
        for &e in es {
            if e == 0 || e > lts.edge_count() {
                continue;
            }
            let params = DriverParams { t, seed: ctx.seed, ..DriverParams::default() };
            let report = find_bes_configuration(&lts, e, &params).map_err(domain)?;
            let exact = match oracle_guard {
                Some(g) => min_span(&lts, e, g).ok().map(|r| r.span.to_string()),
                None => None,
            };
            csv.push_str(&format!(
                "{m},{e},{},{},{},{},{}\n",
                report.span,
                report.d_achieved,
                report.frames.len(),
                u8::from(report.flagged()),
                exact.unwrap_or_default()
            ));
        }
    }
    emit(out, &csv)
}

fn join(ids: &[u32]) -> String {
    ids.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
