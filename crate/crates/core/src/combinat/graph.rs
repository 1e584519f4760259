use serde::{Deserialize, Serialize};

use super::{members, Clutter};
use crate::error::{usage, Error, Result};
use crate::limits::Limits;

/// A simple undirected graph on `0..n` (at most 64 vertices).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n > 64 {
            return usage("graphs are limited to 64 vertices");
        }
        let mut es = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return usage(format!("loop at vertex {a}"));
            }
            if a >= n || b >= n {
                return usage(format!("edge ({a},{b}) leaves 0..{n}"));
            }
            es.push((a.min(b), a.max(b)));
        }
        es.sort_unstable();
        let before = es.len();
        es.dedup();
        if es.len() != before {
            return usage("repeated edge");
        }
        Ok(SimpleGraph { n, edges: es })
    }

    pub(crate) fn from_adjacency(adj: &[u64]) -> Self {
        let n = adj.len();
        let mut edges = Vec::new();
        for (i, &row) in adj.iter().enumerate() {
            for j in members(row) {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
        SimpleGraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbourhood bitmasks.
    pub fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for &(a, b) in &self.edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// The subgraph induced on the vertices of `mask`, relabelled in order.
    pub fn induced(&self, mask: u64) -> SimpleGraph {
        let keep = members(mask);
        let adj = self.adjacency();
        let sub: Vec<u64> = keep
            .iter()
            .map(|&v| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &w)| adj[v] >> w & 1 == 1)
                    .fold(0u64, |acc, (k, _)| acc | 1 << k)
            })
            .collect();
        SimpleGraph::from_adjacency(&sub)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    /// A 2-colouring as a bitmask of one side, if the graph is bipartite.
    pub fn bipartition(&self) -> Option<u64> {
        let adj = self.adjacency();
        let mut colour = vec![None::<bool>; self.n];
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let c = colour[v].expect("coloured");
                for w in members(adj[v]) {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(x) if x == c => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(
            colour
                .iter()
                .enumerate()
                .filter(|(_, c)| **c == Some(true))
                .fold(0u64, |acc, (i, _)| acc | 1 << i),
        )
    }

    /// Chordality by maximum cardinality search and a perfect-elimination check.
    pub fn is_chordal(&self) -> bool {
        let adj = self.adjacency();
        let n = self.n;
        let mut weight = vec![0usize; n];
        let mut done = 0u64;
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| done >> v & 1 == 0)
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .expect("vertex left");
            done |= 1 << v;
            order.push(v);
            for w in members(adj[v] & !done) {
                weight[w] += 1;
            }
        }
        // in reverse MCS order, earlier-visited neighbours must form a clique
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        for &v in &order {
            let earlier: Vec<usize> = members(adj[v])
                .into_iter()
                .filter(|&w| pos[w] < pos[v])
                .collect();
            if let Some(&parent) = earlier.iter().max_by_key(|&&w| pos[w]) {
                for &w in &earlier {
                    if w != parent && adj[parent] >> w & 1 == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

pub fn complement(g: &SimpleGraph) -> SimpleGraph {
    let all = super::clutter::full(g.n);
    let adj: Vec<u64> = g
        .adjacency()
        .iter()
        .enumerate()
        .map(|(i, &a)| all & !a & !(1 << i))
        .collect();
    SimpleGraph::from_adjacency(&adj)
}

/// The cone `C(G)`: a new vertex `n` joined to every vertex.
pub fn graph_cone(g: &SimpleGraph) -> SimpleGraph {
    let mut edges = g.edges.clone();
    edges.extend((0..g.n).map(|v| (v, g.n)));
    SimpleGraph::new(g.n + 1, edges).expect("cone of a simple graph")
}

/// Vertices are the edges of `g` in sorted order; adjacent when they share an end.
pub fn line_graph(g: &SimpleGraph) -> SimpleGraph {
    let m = g.edges.len();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = g.edges[i];
            let (c, d) = g.edges[j];
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::new(m, edges).expect("line graph is simple")
}

/// Maximal cliques by Bron–Kerbosch with pivoting, as sorted bitmasks.
pub(crate) fn maximal_cliques_adj(adj: &[u64]) -> Vec<u64> {
    fn bk(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 {
            if x == 0 {
                out.push(r);
            }
            return;
        }
        let px = p | x;
        let pivot = members(px)
            .into_iter()
            .max_by_key(|&u| (p & adj[u]).count_ones())
            .expect("nonempty");
        for v in members(p & !adj[pivot]) {
            bk(adj, r | 1 << v, p & adj[v], x & adj[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let n = adj.len();
    let mut out = Vec::new();
    if n > 0 {
        bk(adj, 0, super::clutter::full(n), 0, &mut out);
    }
    out.sort_unstable();
    out
}

pub fn maximal_cliques(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let mut cl: Vec<Vec<usize>> = maximal_cliques_adj(&g.adjacency())
        .into_iter()
        .map(members)
        .collect();
    cl.sort();
    cl
}

pub(crate) fn check_cap(n: usize, limits: &Limits) -> Result<()> {
    if n > limits.graph_vertices {
        return Err(Error::ResourceExceeded {
            what: "graph vertices".into(),
            limit: limits.graph_vertices as u64,
        });
    }
    Ok(())
}

/// The clutter of maximal cliques; isolated vertices give singleton edges.
pub fn clique_clutter(g: &SimpleGraph, limits: &Limits) -> Result<Clutter> {
    check_cap(g.n, limits)?;
    Clutter::raw(g.n, maximal_cliques(g))
}
