//! Canonical labelling of small graphs by individualisation–refinement.
//!
//! The search tree is explored in full (no automorphism pruning), so cost is
//! bounded by the product of the cell sizes that refinement cannot split;
//! at most `n!` for vertex-transitive graphs, which is fine up to ~9 vertices.

use std::collections::BTreeSet;

use super::{members, SimpleGraph};

/// Upper-triangle adjacency bits of the canonically relabelled graph, plus `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    pub n: usize,
    pub bits: u128,
}

fn code_of(adj: &[u64], order: &[usize]) -> u128 {
    // order[v] = new label of v
    let n = adj.len();
    let mut inv = vec![0; n];
    for (v, &p) in order.iter().enumerate() {
        inv[p] = v;
    }
    let mut bits = 0u128;
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if adj[inv[i]] >> inv[j] & 1 == 1 {
                bits |= 1 << k;
            }
            k += 1;
        }
    }
    bits
}

/// Refines an ordered colouring until neighbour counts per colour are constant
/// on every cell. Cells are split and ordered by label-independent data only.
fn refine(adj: &[u64], colour: &mut [usize]) {
    let n = adj.len();
    loop {
        let k = colour.iter().max().map_or(0, |m| m + 1);
        let mut sig: Vec<(usize, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut counts = vec![0u32; k];
                for w in members(adj[v]) {
                    counts[colour[w]] += 1;
                }
                (colour[v], counts, v)
            })
            .collect();
        sig.sort();
        let mut next = vec![0; n];
        let mut c = 0;
        for i in 0..n {
            if i > 0 && (sig[i].0, &sig[i].1) != (sig[i - 1].0, &sig[i - 1].1) {
                c += 1;
            }
            next[sig[i].2] = c;
        }
        let stable = c + 1 == k;
        colour.copy_from_slice(&next);
        if stable {
            return;
        }
    }
}

fn search(adj: &[u64], colour: Vec<usize>, best: &mut Option<(u128, Vec<usize>)>) {
    let n = adj.len();
    let k = colour.iter().max().map_or(0, |m| m + 1);
    if k == n {
        let code = code_of(adj, &colour);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, colour));
        }
        return;
    }
    // first non-singleton cell
    let mut size = vec![0; k];
    for &c in &colour {
        size[c] += 1;
    }
    let target = (0..k)
        .find(|&c| size[c] > 1)
        .expect("some cell is not a singleton");
    for v in (0..n).filter(|&v| colour[v] == target) {
        let mut next: Vec<usize> = colour
            .iter()
            .enumerate()
            .map(|(w, &c)| {
                if c > target || (c == target && w != v) {
                    c + 1
                } else {
                    c
                }
            })
            .collect();
        refine(adj, &mut next);
        search(adj, next, best);
    }
}

/// Canonical code and a canonical labelling (`labels[v]` is the new index of `v`).
pub fn canonical_form(g: &SimpleGraph) -> (CanonicalCode, Vec<usize>) {
    assert!(g.n() <= 16, "canonical codes are limited to 16 vertices");
    let adj = g.adjacency();
    if g.n() == 0 {
        return (CanonicalCode { n: 0, bits: 0 }, Vec::new());
    }
    let mut colour = vec![0; g.n()];
    refine(&adj, &mut colour);
    let mut best = None;
    search(&adj, colour, &mut best);
    let (bits, labels) = best.expect("search reaches a leaf");
    (CanonicalCode { n: g.n(), bits }, labels)
}

/// The canonically relabelled graph.
pub fn canonical_graph(g: &SimpleGraph) -> SimpleGraph {
    let (_, labels) = canonical_form(g);
    let edges = g
        .edges()
        .iter()
        .map(|&(a, b)| (labels[a], labels[b]))
        .collect();
    SimpleGraph::new(g.n(), edges).expect("relabelling keeps a simple graph")
}

pub fn is_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    a.n() == b.n()
        && a.edges().len() == b.edges().len()
        && canonical_form(a).0 == canonical_form(b).0
}

/// All graphs on exactly `n` vertices up to isomorphism, canonically labelled
/// and sorted by code. Built by adding one vertex to each class on `n − 1`.
pub fn graphs_up_to_iso(n: usize) -> Vec<SimpleGraph> {
    let mut level: Vec<SimpleGraph> = vec![SimpleGraph::new(0, vec![]).expect("empty graph")];
    for m in 1..=n {
        let mut seen: BTreeSet<CanonicalCode> = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nb in 0u64..1 << (m - 1) {
                let mut edges = g.edges().to_vec();
                edges.extend(members(nb).into_iter().map(|w| (w, m - 1)));
                let h = SimpleGraph::new(m, edges).expect("augmentation is simple");
                let (code, _) = canonical_form(&h);
                if seen.insert(code) {
                    next.push((code, canonical_graph(&h)));
                }
            }
        }
        next.sort_by_key(|a| a.0);
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn relabelled_paths_agree() {
        let a = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let b = g(4, &[(2, 0), (0, 3), (3, 1)]);
        assert!(is_isomorphic(&a, &b));
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(!is_isomorphic(&a, &star));
    }

    #[test]
    fn regular_graphs_distinguished() {
        // C6 versus two triangles: both 2-regular, refinement alone cannot split
        let c6 = g(6, &(0..6).map(|i| (i, (i + 1) % 6)).collect::<Vec<_>>());
        let tt = g(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert!(!is_isomorphic(&c6, &tt));
        let c6b = g(6, &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]);
        assert!(is_isomorphic(&c6, &c6b));
    }

    /// OEIS A000088.
    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| graphs_up_to_iso(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn canonical_graph_is_idempotent() {
        let a = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]);
        let c = canonical_graph(&a);
        assert_eq!(canonical_graph(&c), c);
    }
}
