//! Simple undirected graphs with sorted adjacency lists.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

/// Side of a bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a graph from an edge list; loops and repeated edges are dropped.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn add_vertex(&mut self) -> u32 {
        self.adj.push(Vec::new());
        (self.adj.len() - 1) as u32
    }

    /// Returns false if the edge was a loop or already present.
    pub fn add_edge(&mut self, u: u32, v: u32) -> bool {
        if u == v || self.has_edge(u, v) {
            return false;
        }
        for (x, y) in [(u, v), (v, u)] {
            let list = &mut self.adj[x as usize];
            let pos = list.binary_search(&y).unwrap_err();
            list.insert(pos, y);
        }
        self.m += 1;
        true
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj.get(u as usize).is_some_and(|list| list.binary_search(&v).is_ok())
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adj.iter().enumerate() {
            let u = u as u32;
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// A proper 2-colouring (BFS from each uncoloured vertex in id order,
    /// roots on side `A`), or `None` if the graph has an odd cycle.
    pub fn two_coloring(&self) -> Option<Vec<Side>> {
        let mut color: Vec<Option<Side>> = vec![None; self.n()];
        let mut queue = VecDeque::new();
        for root in 0..self.n() {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(Side::A);
            queue.push_back(root as u32);
            while let Some(u) = queue.pop_front() {
                let cu = color[u as usize].unwrap();
                for &w in self.neighbors(u) {
                    match color[w as usize] {
                        None => {
                            color[w as usize] = Some(cu.other());
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }
}
