//! Degeneracy orderings and the search for dense 2-degenerate subgraphs.
//!
//! A 2-degenerate subgraph on a vertex sequence `v1..vk` is obtained by
//! letting every `vi` keep at most two edges to earlier vertices, so the best
//! such subgraph on a fixed sequence has `Σ min(2, |N(vi) ∩ {v1..vi-1}|)`
//! edges. Every strategy here builds a sequence and then takes, for each
//! vertex, its (at most two) smallest-id earlier neighbours.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use rand::Rng;

use crate::graph::Graph;
use crate::rng;

/// Largest host handled by [`Strategy::Exhaustive`].
pub const EXHAUSTIVE_MAX_VERTICES: usize = 22;
/// Enumeration cap of [`brute_force_best_2deg`], in vertex subsets.
pub const BRUTE_FORCE_GUARD: u128 = 10_000_000;
/// Largest set whose ordering is re-optimized exactly by the heuristics.
const POLISH_MAX: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    /// Reverse of the min-degree removal order.
    pub order: Vec<u32>,
    /// `back_degree[i]`: neighbours of `order[i]` among `order[..i]`.
    pub back_degree: Vec<u32>,
    pub degeneracy: u32,
}

/// Min-degree peeling, ties to the smallest id.
pub fn degeneracy_ordering(g: &Graph) -> DegeneracyOrdering {
    let n = g.n();
    let mut degree: Vec<u32> = (0..n as u32).map(|v| g.degree(v) as u32).collect();
    let mut queue: BTreeSet<(u32, u32)> = (0..n as u32).map(|v| (degree[v as usize], v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut back_degree = Vec::with_capacity(n);
    while let Some((d, v)) = queue.pop_first() {
        removed[v as usize] = true;
        order.push(v);
        back_degree.push(d);
        for &w in g.neighbors(v) {
            if !removed[w as usize] {
                let dw = &mut degree[w as usize];
                queue.remove(&(*dw, w));
                *dw -= 1;
                queue.insert((*dw, w));
            }
        }
    }
    order.reverse();
    back_degree.reverse();
    let degeneracy = back_degree.iter().copied().max().unwrap_or(0);
    DegeneracyOrdering { order, back_degree, degeneracy }
}

/// A 2-degenerate subgraph with its certifying order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateF {
    /// Host vertex ids `v1..vk` in certificate order.
    pub vertices: Vec<u32>,
    /// `(later, earlier)` host ids, grouped by the later vertex in order.
    pub edges: Vec<(u32, u32)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CandidateError {
    VertexOutOfRange(u32),
    RepeatedVertex(u32),
    MissingEdge(u32, u32),
    /// An edge whose first endpoint does not come after its second.
    BackwardEdge(u32, u32),
    DuplicateEdge(u32, u32),
    BackDegree {
        vertex: u32,
        degree: usize,
    },
}

impl fmt::Display for CandidateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CandidateError::VertexOutOfRange(v) => write!(f, "vertex {v} not in host"),
            CandidateError::RepeatedVertex(v) => write!(f, "vertex {v} listed twice"),
            CandidateError::MissingEdge(x, y) => write!(f, "edge {x}-{y} not in host"),
            CandidateError::BackwardEdge(x, y) => write!(f, "edge {x}-{y} does not point backwards"),
            CandidateError::DuplicateEdge(x, y) => write!(f, "edge {x}-{y} listed twice"),
            CandidateError::BackDegree { vertex, degree } => {
                write!(f, "vertex {vertex} has back-degree {degree} > 2")
            }
        }
    }
}

impl core::error::Error for CandidateError {}

impl CandidateF {
    /// Keeps, for every vertex, its at most two smallest-id earlier
    /// neighbours in `g`.
    pub fn from_order(g: &Graph, order: Vec<u32>) -> Self {
        let mut placed = vec![false; g.n()];
        let mut edges = Vec::new();
        for &v in &order {
            let back = g.neighbors(v).iter().filter(|&&w| placed[w as usize]).take(2);
            edges.extend(back.map(|&w| (v, w)));
            placed[v as usize] = true;
        }
        CandidateF { vertices: order, edges }
    }

    pub fn k(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `2k − |E|`.
    pub fn achieved_t(&self) -> i64 {
        2 * self.k() as i64 - self.edges.len() as i64
    }

    /// Back-degree of each listed vertex, in listed order.
    pub fn back_degrees(&self) -> Vec<usize> {
        let pos = self.positions();
        let mut deg = vec![0usize; self.vertices.len()];
        for (x, _) in &self.edges {
            if let Some(&i) = pos.get(x) {
                deg[i] += 1;
            }
        }
        deg
    }

    /// Earlier neighbours of `vertices[i]` in F, in listed edge order.
    pub fn back_neighbors(&self, i: usize) -> Vec<u32> {
        let v = self.vertices[i];
        self.edges.iter().filter(|(x, _)| *x == v).map(|&(_, y)| y).collect()
    }

    fn positions(&self) -> alloc::collections::BTreeMap<u32, usize> {
        self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect()
    }

    /// Checks the certificate against the host: distinct vertices, host
    /// edges pointing backwards in the order, back-degree at most 2.
    pub fn validate(&self, g: &Graph) -> Result<(), CandidateError> {
        let mut pos = alloc::collections::BTreeMap::new();
        for (i, &v) in self.vertices.iter().enumerate() {
            if v as usize >= g.n() {
                return Err(CandidateError::VertexOutOfRange(v));
            }
            if pos.insert(v, i).is_some() {
                return Err(CandidateError::RepeatedVertex(v));
            }
        }
        let mut seen = BTreeSet::new();
        let mut deg = vec![0usize; self.vertices.len()];
        for &(x, y) in &self.edges {
            let (Some(&px), Some(&py)) = (pos.get(&x), pos.get(&y)) else {
                return Err(CandidateError::BackwardEdge(x, y));
            };
            if px <= py {
                return Err(CandidateError::BackwardEdge(x, y));
            }
            if !g.has_edge(x, y) {
                return Err(CandidateError::MissingEdge(x, y));
            }
            if !seen.insert((x.min(y), x.max(y))) {
                return Err(CandidateError::DuplicateEdge(x, y));
            }
            deg[px] += 1;
            if deg[px] > 2 {
                return Err(CandidateError::BackDegree { vertex: x, degree: deg[px] });
            }
        }
        Ok(())
    }

    /// More edges first, then the lexicographically smaller vertex sequence.
    fn better_than(&self, other: &CandidateF) -> bool {
        match self.edges.len().cmp(&other.edges.len()) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => self.vertices < other.vertices,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Strategy {
    /// Min-degree peeling down to `k` vertices.
    Peel,
    /// Seeded greedy growth with restarts.
    Grow,
    /// Exact dynamic programme over vertex subsets.
    Exhaustive,
}

/// Wall-clock cut-off supplied by a caller that has a clock.
#[derive(Debug, Clone, Copy)]
pub struct Deadline {
    pub now_ms: fn() -> u64,
    pub at_ms: u64,
}

#[derive(Debug, Clone, Copy)]
pub struct Budget {
    /// Restarts of [`Strategy::Grow`].
    pub max_steps: u64,
    pub deadline: Option<Deadline>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_steps: 64, deadline: None }
    }
}

impl Budget {
    pub fn steps(max_steps: u64) -> Self {
        Budget { max_steps, deadline: None }
    }

    fn expired(&self, steps: u64) -> bool {
        steps >= self.max_steps || self.deadline.is_some_and(|d| (d.now_ms)() >= d.at_ms)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Best candidate found, successful or not.
    pub candidate: CandidateF,
    /// `achieved_t <= t_target`.
    pub success: bool,
    pub steps: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegError {
    KTooSmall(usize),
    KTooLarge { k: usize, n: usize },
    ExhaustiveTooLarge(usize),
    GuardExceeded { subsets: u128, guard: u128 },
}

impl fmt::Display for DegError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegError::KTooSmall(k) => write!(f, "k = {k} is below 2"),
            DegError::KTooLarge { k, n } => write!(f, "k = {k} exceeds the {n} host vertices"),
            DegError::ExhaustiveTooLarge(n) => {
                write!(f, "exhaustive search supports at most {EXHAUSTIVE_MAX_VERTICES} vertices, host has {n}")
            }
            DegError::GuardExceeded { subsets, guard } => {
                write!(f, "{subsets} vertex subsets exceed the guard of {guard}")
            }
        }
    }
}

impl core::error::Error for DegError {}

pub fn find_dense_2deg(
    g: &Graph,
    k: usize,
    t_target: i64,
    strategy: Strategy,
    seed: u64,
    budget: Budget,
) -> Result<SearchOutcome, DegError> {
    if k < 2 {
        return Err(DegError::KTooSmall(k));
    }
    if k > g.n() {
        return Err(DegError::KTooLarge { k, n: g.n() });
    }
    let (candidate, steps) = match strategy {
        Strategy::Peel => (peel_candidate(g, k), 1),
        Strategy::Exhaustive => (exhaustive_candidate(g, k)?, 1),
        Strategy::Grow => grow_candidates(g, k, t_target, seed, budget),
    };
    let success = candidate.achieved_t() <= t_target;
    Ok(SearchOutcome { candidate, success, steps })
}

fn peel_candidate(g: &Graph, k: usize) -> CandidateF {
    let peel = degeneracy_ordering(g);
    // the last k removed are the first k of the reversed order
    let mut keep: Vec<u32> = peel.order[..k].to_vec();
    keep.sort_unstable();
    best_order_on(g, &keep)
}

/// Orders a fixed vertex set: exactly for small sets, by reversed
/// min-degree peeling of the induced subgraph otherwise.
fn best_order_on(g: &Graph, set: &[u32]) -> CandidateF {
    if set.len() <= POLISH_MAX {
        let (sub, _) = induced(g, set);
        let table = subset_table(&sub, set.len());
        let order = rebuild_order(&sub, &table, (1u32 << set.len()) - 1);
        return CandidateF::from_order(g, order.into_iter().map(|i| set[i as usize]).collect());
    }
    let (sub, _) = induced(g, set);
    let peel = degeneracy_ordering(&sub);
    CandidateF::from_order(g, peel.order.iter().map(|&i| set[i as usize]).collect())
}

/// Induced subgraph on `set` (sorted), relabelled `0..set.len()`.
fn induced(g: &Graph, set: &[u32]) -> (Graph, Vec<u32>) {
    let mut sub = Graph::new(set.len());
    for (i, &v) in set.iter().enumerate() {
        for &w in g.neighbors(v) {
            if let Ok(j) = set.binary_search(&w) {
                if j > i {
                    sub.add_edge(i as u32, j as u32);
                }
            }
        }
    }
    (sub, set.to_vec())
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.n() as u32).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w))).collect()
}

/// `table[mask]`: the most edges a 2-degenerate subgraph on `mask` can have,
/// i.e. the best ordering value. Masks above `max_size` bits are skipped.
fn subset_table(g: &Graph, max_size: usize) -> Vec<u8> {
    let n = g.n();
    let adj = adjacency_masks(g);
    let mut table = vec![0u8; 1usize << n];
    for mask in 1u32..(1u32 << n) {
        if mask.count_ones() as usize > max_size {
            continue;
        }
        let mut best = 0u8;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let before = mask & !(1 << v);
            let gain = (adj[v as usize] & before).count_ones().min(2) as u8;
            best = best.max(table[before as usize] + gain);
        }
        table[mask as usize] = best;
    }
    table
}

/// Recovers an ordering attaining `table[mask]`, choosing the smallest
/// feasible last vertex at every step.
fn rebuild_order(g: &Graph, table: &[u8], mut mask: u32) -> Vec<u32> {
    let adj = adjacency_masks(g);
    let mut rev = Vec::new();
    while mask != 0 {
        let mut rest = mask;
        loop {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let before = mask & !(1 << v);
            let gain = (adj[v as usize] & before).count_ones().min(2) as u8;
            if table[before as usize] + gain == table[mask as usize] {
                rev.push(v);
                mask = before;
                break;
            }
        }
    }
    rev.reverse();
    rev
}

fn exhaustive_candidate(g: &Graph, k: usize) -> Result<CandidateF, DegError> {
    let n = g.n();
    if n > EXHAUSTIVE_MAX_VERTICES {
        return Err(DegError::ExhaustiveTooLarge(n));
    }
    let table = subset_table(g, k);
    let mut best: Option<(u8, Vec<u32>, u32)> = None;
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let value = table[mask as usize];
        let set: Vec<u32> = (0..n as u32).filter(|v| mask >> v & 1 == 1).collect();
        let better = match &best {
            None => true,
            Some((bv, bset, _)) => value > *bv || (value == *bv && set < *bset),
        };
        if better {
            best = Some((value, set, mask));
        }
    }
    let (_, _, mask) = best.expect("k <= n");
    Ok(CandidateF::from_order(g, rebuild_order(g, &table, mask)))
}

fn grow_candidates(g: &Graph, k: usize, t_target: i64, seed: u64, budget: Budget) -> (CandidateF, u64) {
    let mut best: Option<CandidateF> = None;
    let mut steps = 0u64;
    let max_possible = 2 * k - 3;
    loop {
        let mut r = rng::seeded(seed, 0x6772_6f77_0000 + steps);
        let cand = grow_once(g, k, &mut r, steps == 0);
        steps += 1;
        if best.as_ref().is_none_or(|b| cand.better_than(b)) {
            best = Some(cand);
        }
        let b = best.as_ref().unwrap();
        let done = b.edge_count() == max_possible || (steps > 1 && b.achieved_t() <= t_target);
        if done || budget.expired(steps) {
            break;
        }
    }
    (best.unwrap(), steps)
}

/// One greedy growth. The first run is deterministic (start at a vertex of
/// maximum degree, ties to the smallest id); later runs start and break ties
/// at random.
fn grow_once(g: &Graph, k: usize, r: &mut rng::Rng, deterministic: bool) -> CandidateF {
    let n = g.n();
    let start = if deterministic {
        (0..n as u32).max_by_key(|&v| (g.degree(v), core::cmp::Reverse(v))).unwrap()
    } else {
        r.gen_range(0..n as u32)
    };
    let mut inside = vec![false; n];
    let mut links = vec![0u32; n];
    // frontier holds outside vertices with links > 0
    let mut frontier: BTreeSet<u32> = BTreeSet::new();
    let mut order = Vec::with_capacity(k);
    let mut add = |v: u32, inside: &mut Vec<bool>, links: &mut Vec<u32>, frontier: &mut BTreeSet<u32>| {
        inside[v as usize] = true;
        frontier.remove(&v);
        order.push(v);
        for &w in g.neighbors(v) {
            if !inside[w as usize] {
                links[w as usize] += 1;
                frontier.insert(w);
            }
        }
    };
    add(start, &mut inside, &mut links, &mut frontier);
    while inside.iter().filter(|&&x| x).count() < k {
        let top = frontier.iter().map(|&w| links[w as usize].min(2)).max();
        let next = match top {
            Some(gain) => {
                let ties: Vec<u32> = frontier.iter().copied().filter(|&w| links[w as usize].min(2) == gain).collect();
                if deterministic {
                    ties[0]
                } else {
                    ties[r.gen_range(0..ties.len())]
                }
            }
            None => {
                let outside: Vec<u32> = (0..n as u32).filter(|&v| !inside[v as usize]).collect();
                if deterministic {
                    outside[0]
                } else {
                    outside[r.gen_range(0..outside.len())]
                }
            }
        };
        add(next, &mut inside, &mut links, &mut frontier);
    }
    if k <= POLISH_MAX {
        let mut set = order.clone();
        set.sort_unstable();
        let polished = best_order_on(g, &set);
        let grown = CandidateF::from_order(g, order);
        return if polished.edge_count() >= grown.edge_count() { polished } else { grown };
    }
    CandidateF::from_order(g, order)
}

/// Exact maximum edge count of a 2-degenerate subgraph on `k` vertices, by
/// enumerating vertex subsets and, within each, vertex orderings
/// (branch-and-bound on the ordering value). Independent of the subset
/// table used by [`Strategy::Exhaustive`].
pub fn brute_force_best_2deg(g: &Graph, k: usize) -> Result<(usize, CandidateF), DegError> {
    let n = g.n();
    if k > n {
        return Err(DegError::KTooLarge { k, n });
    }
    let subsets = binomial(n as u128, k as u128);
    if subsets > BRUTE_FORCE_GUARD || n > 64 {
        return Err(DegError::GuardExceeded { subsets, guard: BRUTE_FORCE_GUARD });
    }
    let cap = if k >= 2 { 2 * k - 3 } else { 0 };
    let mut best: Option<(usize, Vec<u32>)> = None;
    let mut combo: Vec<u32> = (0..k as u32).collect();
    loop {
        let start = best.as_ref().map_or(0, |b| b.0 + 1);
        let mut search = OrderSearch { g, set: &combo, best_value: None, best_order: Vec::new() };
        search.run(start);
        if let Some(v) = search.best_value {
            if best.as_ref().is_none_or(|b| v > b.0) {
                best = Some((v, search.best_order));
            }
        } else if best.is_none() {
            best = Some((0, combo.clone()));
        }
        if best.as_ref().is_some_and(|b| b.0 == cap) || !next_combination(&mut combo, n as u32) {
            break;
        }
    }
    let (value, order) = best.unwrap_or((0, Vec::new()));
    Ok((value, CandidateF::from_order(g, order)))
}

struct OrderSearch<'a> {
    g: &'a Graph,
    set: &'a [u32],
    best_value: Option<usize>,
    best_order: Vec<u32>,
}

impl OrderSearch<'_> {
    /// Finds the best ordering of `set` whose value is at least `floor`.
    fn run(&mut self, floor: usize) {
        let k = self.set.len();
        let cap_deg: Vec<usize> =
            self.set.iter().map(|&v| self.set.iter().filter(|&&w| self.g.has_edge(v, w)).count().min(2)).collect();
        let mut order = Vec::with_capacity(k);
        let mut used = vec![false; k];
        self.dfs(&mut order, &mut used, 0, floor, &cap_deg);
    }

    fn dfs(&mut self, order: &mut Vec<u32>, used: &mut [bool], value: usize, floor: usize, cap_deg: &[usize]) {
        let k = self.set.len();
        if order.len() == k {
            if value >= floor && self.best_value.is_none_or(|b| value > b) {
                self.best_value = Some(value);
                self.best_order = order.clone();
            }
            return;
        }
        let target = self.best_value.map_or(floor, |b| b + 1);
        let by_degree: usize = (0..k).filter(|&i| !used[i]).map(|i| cap_deg[i]).sum();
        let by_position: usize = (order.len()..k).map(|p| p.min(2)).sum();
        if value + by_degree.min(by_position) < target {
            return;
        }
        for i in 0..k {
            if used[i] {
                continue;
            }
            let v = self.set[i];
            let gain = order.iter().filter(|&&w| self.g.has_edge(v, w)).count().min(2);
            used[i] = true;
            order.push(v);
            self.dfs(order, used, value + gain, floor, cap_deg);
            order.pop();
            used[i] = false;
            if k >= 2 && self.best_value == Some(2 * k - 3) {
                return;
            }
        }
    }
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Advances a sorted combination of `0..n` in lexicographic order.
pub(crate) fn next_combination(combo: &mut [u32], n: u32) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - (k - i) as u32 {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::auxgraph::{build_aux, simple_subgraph};
    use crate::generators::group_system;
    use crate::graph::samples::*;

    #[test]
    fn degeneracy_of_small_graphs() {
        assert_eq!(degeneracy_ordering(&path(3)).degeneracy, 1);
        assert_eq!(degeneracy_ordering(&cycle(4)).degeneracy, 2);
        assert_eq!(degeneracy_ordering(&complete_bipartite(3, 3)).degeneracy, 3);
        assert_eq!(degeneracy_ordering(&Graph::new(0)).degeneracy, 0);
    }

    #[test]
    fn back_degrees_match_the_order() {
        let g = complete(5);
        let ord = degeneracy_ordering(&g);
        for (i, &v) in ord.order.iter().enumerate() {
            let back = ord.order[..i].iter().filter(|&&w| g.has_edge(v, w)).count();
            assert_eq!(back as u32, ord.back_degree[i]);
        }
        assert_eq!(ord.degeneracy, 4);
    }

    #[test]
    fn four_cycle_in_aux_of_group_three() {
        let aux = build_aux(&group_system(3)).unwrap();
        let g = simple_subgraph(&aux);
        for strategy in [Strategy::Peel, Strategy::Grow, Strategy::Exhaustive] {
            let out = find_dense_2deg(g.graph(), 4, 4, strategy, 0, Budget::default()).unwrap();
            assert!(out.success, "{strategy:?}");
            assert_eq!(out.candidate.k(), 4);
            assert_eq!(out.candidate.edge_count(), 4);
            out.candidate.validate(g.graph()).unwrap();
        }
    }

    #[test]
    fn single_edge_and_cycle_failure() {
        let edge = path(2);
        let out = find_dense_2deg(&edge, 2, 3, Strategy::Grow, 0, Budget::default()).unwrap();
        assert!(out.success);
        assert_eq!(out.candidate.edge_count(), 1);

        let c4 = cycle(4);
        for strategy in [Strategy::Peel, Strategy::Grow, Strategy::Exhaustive] {
            let out = find_dense_2deg(&c4, 4, 3, strategy, 0, Budget::default()).unwrap();
            assert!(!out.success);
            assert_eq!(out.candidate.achieved_t(), 4);
        }
    }

    #[test]
    fn parameter_errors() {
        let c4 = cycle(4);
        assert_eq!(
            find_dense_2deg(&c4, 5, 3, Strategy::Peel, 0, Budget::default()),
            Err(DegError::KTooLarge { k: 5, n: 4 })
        );
        assert_eq!(find_dense_2deg(&c4, 1, 3, Strategy::Peel, 0, Budget::default()), Err(DegError::KTooSmall(1)));
        let big = Graph::new(23);
        assert_eq!(
            find_dense_2deg(&big, 3, 3, Strategy::Exhaustive, 0, Budget::default()),
            Err(DegError::ExhaustiveTooLarge(23))
        );
        assert!(matches!(brute_force_best_2deg(&Graph::new(60), 10), Err(DegError::GuardExceeded { .. })));
    }

    #[test]
    fn brute_force_small_cases() {
        let (best, w) = brute_force_best_2deg(&complete(4), 4).unwrap();
        assert_eq!(best, 5);
        w.validate(&complete(4)).unwrap();
        assert_eq!(brute_force_best_2deg(&cycle(4), 4).unwrap().0, 4);
        for k in 0..=5 {
            assert_eq!(brute_force_best_2deg(&Graph::new(5), k).unwrap().0, 0);
        }
    }

    #[test]
    fn candidate_validation_catches_errors() {
        let g = cycle(4);
        let ok = CandidateF { vertices: vec![0, 1, 2, 3], edges: vec![(1, 0), (2, 1), (3, 2), (3, 0)] };
        ok.validate(&g).unwrap();
        assert_eq!(ok.achieved_t(), 4);
        assert_eq!(ok.back_degrees(), vec![0, 1, 1, 2]);

        let backwards = CandidateF { vertices: vec![0, 1], edges: vec![(0, 1)] };
        assert_eq!(backwards.validate(&g), Err(CandidateError::BackwardEdge(0, 1)));
        let missing = CandidateF { vertices: vec![0, 2], edges: vec![(2, 0)] };
        assert_eq!(missing.validate(&g), Err(CandidateError::MissingEdge(2, 0)));
        let k4 = complete(4);
        let heavy = CandidateF { vertices: vec![0, 1, 2, 3], edges: vec![(3, 0), (3, 1), (3, 2)] };
        assert_eq!(heavy.validate(&k4), Err(CandidateError::BackDegree { vertex: 3, degree: 3 }));
    }

    #[test]
    fn combinations_enumerate_in_order() {
        let mut c = vec![0u32, 1];
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 4) {
            all.push(c.clone());
        }
        assert_eq!(all.len(), 6);
        assert_eq!(all.last().unwrap(), &vec![2, 3]);
        assert_eq!(binomial(9, 4), 126);
        assert_eq!(binomial(3, 5), 0);
    }
}
