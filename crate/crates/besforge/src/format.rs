//! Line-oriented text formats.
//!
//! Every format is a header line `p <kind> ...` followed by one record per
//! line. Lines starting with `#` and blank lines are ignored by the readers;
//! the writers never emit them, so `write(read(s)) == s` for writer output.

use std::fmt::Write as _;

use besforge_core::auxgraph::{AuxGraph, Pairing};
use besforge_core::hypergraph::SystemError;
use besforge_core::{Graph, GrowthCertificate, Hypergraph, TripartiteLinearSystem, Triple, TripleSystem};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `p {0}` header")]
    MissingHeader(&'static str),
    #[error("header declares {declared} records, found {found}")]
    CountMismatch { declared: usize, found: usize },
    #[error("invalid system: {0}")]
    System(SystemError),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

/// Non-comment lines with their 1-based line numbers, split into tokens.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        (!l.is_empty() && !l.starts_with('#')).then(|| (i + 1, l.split_whitespace().collect()))
    })
}

fn num<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T, FormatError> {
    tok.parse().map_err(|_| syntax(line, format!("expected a non-negative integer, found `{tok}`")))
}

/// Parses `tag` followed by exactly `N` integers.
fn fields<const N: usize>(line: usize, toks: &[&str], tag: &str) -> Result<[u64; N], FormatError> {
    if toks.first() != Some(&tag) || toks.len() != N + 1 {
        return Err(syntax(line, format!("expected `{tag}` with {N} fields")));
    }
    let mut out = [0u64; N];
    for (slot, tok) in out.iter_mut().zip(&toks[1..]) {
        *slot = num(line, tok)?;
    }
    Ok(out)
}

fn header<'a, const N: usize>(
    recs: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    kind: &'static str,
) -> Result<[u64; N], FormatError> {
    let (line, toks) = recs.next().ok_or(FormatError::MissingHeader(kind))?;
    if toks.len() < 2 || toks[0] != "p" || toks[1] != kind {
        return Err(FormatError::MissingHeader(kind));
    }
    fields::<N>(line, &toks[1..], kind)
}

fn to_u32(line: usize, x: u64) -> Result<u32, FormatError> {
    u32::try_from(x).map_err(|_| syntax(line, format!("{x} does not fit in 32 bits")))
}

fn expect_count(declared: u64, found: usize) -> Result<(), FormatError> {
    if declared as usize != found {
        return Err(FormatError::CountMismatch { declared: declared as usize, found });
    }
    Ok(())
}

pub fn read_ts(text: &str) -> Result<TripleSystem, FormatError> {
    let mut recs = records(text);
    let [n, m] = header::<2>(&mut recs, "ts")?;
    let n = to_u32(0, n)?;
    let mut edges = Vec::new();
    for (line, toks) in recs {
        let [u, v, w] = fields::<3>(line, &toks, "e")?;
        edges.push([to_u32(line, u)?, to_u32(line, v)?, to_u32(line, w)?]);
    }
    expect_count(m, edges.len())?;
    TripleSystem::new(n, edges).map_err(FormatError::System)
}

pub fn write_ts(ts: &TripleSystem) -> String {
    let mut out = format!("p ts {} {}\n", ts.n(), ts.edges().len());
    for [u, v, w] in ts.edges() {
        writeln!(out, "e {u} {v} {w}").unwrap();
    }
    out
}

/// Reads a tripartite system; linearity is not checked here.
pub fn read_tls(text: &str) -> Result<TripartiteLinearSystem, FormatError> {
    let mut recs = records(text);
    let [na, nb, nc, m] = header::<4>(&mut recs, "tls")?;
    let sizes = [to_u32(0, na)?, to_u32(0, nb)?, to_u32(0, nc)?];
    let mut edges = Vec::new();
    for (line, toks) in recs {
        let [a, b, c] = fields::<3>(line, &toks, "e")?;
        edges.push(Triple { a: to_u32(line, a)?, b: to_u32(line, b)?, c: to_u32(line, c)? });
    }
    expect_count(m, edges.len())?;
    TripartiteLinearSystem::new(sizes, edges).map_err(FormatError::System)
}

pub fn write_tls(lts: &TripartiteLinearSystem) -> String {
    let [na, nb, nc] = lts.sizes();
    let mut out = format!("p tls {na} {nb} {nc} {}\n", lts.edge_count());
    for t in lts.edges() {
        writeln!(out, "e {} {} {}", t.a, t.b, t.c).unwrap();
    }
    out
}

/// Either kind of hypergraph file, told apart by its header.
#[derive(Debug, Clone)]
pub enum SystemFile {
    Ts(TripleSystem),
    Tls(TripartiteLinearSystem),
}

impl SystemFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let kind = records(text).next().and_then(|(_, t)| t.get(1).map(|s| s.to_string()));
        match kind.as_deref() {
            Some("tls") => read_tls(text).map(SystemFile::Tls),
            _ => read_ts(text).map(SystemFile::Ts),
        }
    }

    pub fn to_ts(&self) -> TripleSystem {
        match self {
            SystemFile::Ts(ts) => ts.clone(),
            SystemFile::Tls(lts) => lts.to_triple_system(),
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            SystemFile::Ts(ts) => ts.edge_count(),
            SystemFile::Tls(lts) => lts.edge_count(),
        }
    }
}

pub fn write_aux(aux: &AuxGraph) -> String {
    let mut out = format!("p aux {} {} {}\n", aux.a_vertices().len(), aux.b_vertices().len(), aux.multi_edge_count());
    for e in aux.edges() {
        let (u, w) = (aux.u_pair(e), aux.w_pair(e));
        let tag = match e.pairing {
            Pairing::Straight => 'S',
            Pairing::Crossed => 'X',
        };
        writeln!(out, "x {} {} {} {} {} {tag}", u.lo, u.hi, w.lo, w.hi, e.apex).unwrap();
    }
    out
}

/// One `x` record of an aux dump, in part-local labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuxRecord {
    pub a: (u32, u32),
    pub b: (u32, u32),
    pub apex: u32,
    pub pairing: Pairing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxDump {
    pub a_count: usize,
    pub b_count: usize,
    pub records: Vec<AuxRecord>,
}

pub fn read_aux(text: &str) -> Result<AuxDump, FormatError> {
    let mut recs = records(text);
    let [na, nb, m] = header::<3>(&mut recs, "aux")?;
    let mut records = Vec::new();
    for (line, toks) in recs {
        if toks.len() != 7 || toks[0] != "x" {
            return Err(syntax(line, "expected `x` with 6 fields"));
        }
        let mut v = [0u32; 5];
        for (slot, tok) in v.iter_mut().zip(&toks[1..6]) {
            *slot = num(line, tok)?;
        }
        let pairing = match toks[6] {
            "S" => Pairing::Straight,
            "X" => Pairing::Crossed,
            other => return Err(syntax(line, format!("pairing must be S or X, found `{other}`"))),
        };
        records.push(AuxRecord { a: (v[0], v[1]), b: (v[2], v[3]), apex: v[4], pairing });
    }
    expect_count(m, records.len())?;
    Ok(AuxDump { a_count: na as usize, b_count: nb as usize, records })
}

pub fn write_aux_dump(dump: &AuxDump) -> String {
    let mut out = format!("p aux {} {} {}\n", dump.a_count, dump.b_count, dump.records.len());
    for r in &dump.records {
        let tag = if r.pairing == Pairing::Straight { 'S' } else { 'X' };
        writeln!(out, "x {} {} {} {} {} {tag}", r.a.0, r.a.1, r.b.0, r.b.1, r.apex).unwrap();
    }
    out
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p graph {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "g {u} {v}").unwrap();
    }
    out
}

fn parse_graph<'a>(
    recs: &mut std::iter::Peekable<impl Iterator<Item = (usize, Vec<&'a str>)>>,
) -> Result<Graph, FormatError> {
    let [n, m] = header::<2>(recs, "graph")?;
    let n = n as usize;
    let mut g = Graph::new(n);
    let mut found = 0;
    while let Some((line, toks)) = recs.next_if(|(_, t)| t.first() == Some(&"g")) {
        let [u, v] = fields::<2>(line, &toks, "g")?;
        let (u, v) = (to_u32(line, u)?, to_u32(line, v)?);
        if u as usize >= n || v as usize >= n || u == v {
            return Err(syntax(line, format!("bad edge {u}-{v} for {n} vertices")));
        }
        if !g.add_edge(u, v) {
            return Err(syntax(line, format!("repeated edge {u}-{v}")));
        }
        found += 1;
    }
    expect_count(m, found)?;
    Ok(g)
}

pub fn read_graph(text: &str) -> Result<Graph, FormatError> {
    let mut recs = records(text).peekable();
    let g = parse_graph(&mut recs)?;
    if let Some((line, _)) = recs.next() {
        return Err(syntax(line, "unexpected record after the graph"));
    }
    Ok(g)
}

/// The certificate section: `c <t>` then `a <v> <u1> <u2>` per added vertex.
/// Seeds are not listed; they are the vertices that are never added.
pub fn write_certificate(cert: &GrowthCertificate) -> String {
    let mut out = format!("c {}\n", cert.t);
    for &(v, u1, u2) in &cert.added {
        writeln!(out, "a {v} {u1} {u2}").unwrap();
    }
    out
}

/// A graph file followed by its certificate.
pub fn write_grown(g: &Graph, cert: &GrowthCertificate) -> String {
    write_graph(g) + &write_certificate(cert)
}

pub fn read_grown(text: &str) -> Result<(Graph, GrowthCertificate), FormatError> {
    let mut recs = records(text).peekable();
    let g = parse_graph(&mut recs)?;
    let (line, toks) = recs.next().ok_or(FormatError::MissingHeader("c"))?;
    let [t] = fields::<1>(line, &toks, "c")?;
    let mut added = Vec::new();
    for (line, toks) in recs {
        let [v, u1, u2] = fields::<3>(line, &toks, "a")?;
        added.push((to_u32(line, v)?, to_u32(line, u1)?, to_u32(line, u2)?));
    }
    let mut is_added = vec![false; g.n()];
    for &(v, _, _) in &added {
        if let Some(slot) = is_added.get_mut(v as usize) {
            *slot = true;
        }
    }
    let seeds = (0..g.n() as u32).filter(|&v| !is_added[v as usize]).collect();
    Ok((g, GrowthCertificate { t: t as usize, seeds, added, sides: None }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use besforge_core::{build_aux, group_system, grow_girth_graph, random_linear, PairChoice};

    #[test]
    fn tls_round_trip() {
        for lts in [group_system(4), random_linear(5, 6, 7, 20, 3)] {
            let text = write_tls(&lts);
            let back = read_tls(&text).unwrap();
            assert_eq!(back, lts);
            assert_eq!(write_tls(&back), text);
        }
    }

    #[test]
    fn ts_round_trip_and_comments() {
        let ts = group_system(3).to_triple_system();
        let text = write_ts(&ts);
        assert_eq!(write_ts(&read_ts(&text).unwrap()), text);
        let commented = format!("# host\n\n{text}# end\n");
        assert_eq!(read_ts(&commented).unwrap(), ts);
    }

    #[test]
    fn system_file_detects_kind() {
        let lts = group_system(2);
        assert!(matches!(SystemFile::parse(&write_tls(&lts)).unwrap(), SystemFile::Tls(_)));
        let ts = lts.to_triple_system();
        assert!(matches!(SystemFile::parse(&write_ts(&ts)).unwrap(), SystemFile::Ts(_)));
    }

    #[test]
    fn aux_round_trip() {
        let aux = build_aux(&group_system(3)).unwrap();
        let text = write_aux(&aux);
        assert!(text.starts_with("p aux 3 3 9\n"));
        let dump = read_aux(&text).unwrap();
        assert_eq!(dump.records.len(), 9);
        assert_eq!(write_aux_dump(&dump), text);
    }

    #[test]
    fn grown_round_trip() {
        let growth = grow_girth_graph(30, 8, 5, 1, PairChoice::Random).unwrap();
        let text = write_grown(&growth.graph, &growth.certificate);
        let (g, cert) = read_grown(&text).unwrap();
        assert_eq!(g, growth.graph);
        assert_eq!(cert.seeds, growth.certificate.seeds);
        assert_eq!(cert.added, growth.certificate.added);
        assert_eq!(write_grown(&g, &cert), text);
        assert_eq!(write_graph(&read_graph(&write_graph(&g)).unwrap()), write_graph(&g));
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(read_tls("e 0 0 0\n"), Err(FormatError::MissingHeader("tls")));
        assert_eq!(read_tls("p tls 1 1 1 2\ne 0 0 0\n"), Err(FormatError::CountMismatch { declared: 2, found: 1 }));
        assert!(matches!(read_tls("p tls 1 1 1 1\ne 0 x 0\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(read_tls("p tls 1 1 1 1\ne 0 1 0\n"), Err(FormatError::System(_))));
        assert!(matches!(read_aux("p aux 1 1 1\nx 0 1 0 1 0 Q\n"), Err(FormatError::Syntax { .. })));
        assert!(matches!(read_graph("p graph 2 1\ng 0 0\n"), Err(FormatError::Syntax { .. })));
    }
}
