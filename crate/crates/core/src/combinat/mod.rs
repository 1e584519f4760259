//! Clutters and simple graphs.
//!
//! Vertices are `0..n` and sets of vertices are `u64` bitmasks internally, so
//! both clutters and graphs are limited to 64 vertices; the exhaustive graph
//! predicates have a lower configurable cap (see [`crate::Limits`]).

mod clutter;
mod graph;
pub mod iso;
mod meyniel;
mod perfect;

pub use clutter::{
    blocker, covering_number, disjoint_cover_partition, gamma_witness, has_konig, is_uniform,
    is_unmixed, max_disjoint_edges, minimal_covers, suspension, Clutter, CoverSet,
};
pub use graph::{clique_clutter, complement, graph_cone, line_graph, maximal_cliques, SimpleGraph};
pub use meyniel::{
    beta_witness, hoang_witness, is_meyniel, is_meyniel_via_hoang, MeynielReport, OddCycle,
};
pub use perfect::{is_perfect_small, OddHole, PerfectReport};

pub(crate) fn mask_of(set: &[usize]) -> u64 {
    set.iter().fold(0u64, |m, &v| m | 1 << v)
}

pub(crate) fn members(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}
