use serde::{Deserialize, Serialize};

use super::graph::{check_cap, maximal_cliques_adj};
use super::{members, SimpleGraph};
use crate::error::{usage, Error, Result};
use crate::kernel::{RatVector, Rational};
use crate::limits::Limits;

/// An odd cycle (vertices in cyclic order) with its number of chords.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddCycle {
    pub vertices: Vec<usize>,
    pub chords: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeynielReport {
    pub meyniel: bool,
    pub witness: Option<OddCycle>,
}

/// Whether every odd cycle of length at least five has two or more chords.
///
/// Cycles are grown from their smallest vertex; a path is abandoned as soon as
/// it has two chords, since chords only accumulate.
pub fn is_meyniel(g: &SimpleGraph, limits: &Limits) -> Result<MeynielReport> {
    check_cap(g.n(), limits)?;
    let adj = g.adjacency();
    let mut steps = 0u64;
    for s in 0..g.n() {
        let mut path = vec![s];
        if let Some(w) = grow(&adj, &mut path, 1u64 << s, 0, &mut steps, limits)? {
            return Ok(MeynielReport {
                meyniel: false,
                witness: Some(w),
            });
        }
    }
    Ok(MeynielReport {
        meyniel: true,
        witness: None,
    })
}

fn grow(
    adj: &[u64],
    path: &mut Vec<usize>,
    on_path: u64,
    chords: usize,
    steps: &mut u64,
    limits: &Limits,
) -> Result<Option<OddCycle>> {
    *steps += 1;
    if *steps > limits.cycle_steps {
        return Err(Error::ResourceExceeded {
            what: "odd-cycle enumeration steps".into(),
            limit: limits.cycle_steps,
        });
    }
    let s = path[0];
    let last = *path.last().expect("nonempty");
    let len = path.len();
    // close the cycle: the pair (s, last) becomes a cycle edge
    if len >= 5 && len % 2 == 1 && adj[last] >> s & 1 == 1 && chords >= 1 && chords - 1 <= 1 {
        return Ok(Some(OddCycle {
            vertices: path.clone(),
            chords: chords - 1,
        }));
    }
    if chords >= 2 {
        return Ok(None);
    }
    let higher = !((1u64 << s) | ((1u64 << s) - 1));
    for v in members(adj[last] & higher & !on_path) {
        let prev = on_path & !(1u64 << last);
        let added = (adj[v] & prev).count_ones() as usize;
        path.push(v);
        let r = grow(adj, path, on_path | 1 << v, chords + added, steps, limits)?;
        path.pop();
        if r.is_some() {
            return Ok(r);
        }
    }
    Ok(None)
}

/// A stable set containing `u` that meets every maximal clique.
///
/// Such a set can always be enlarged to a maximal stable set, so only maximal
/// stable sets through `u` are tried, in increasing bitmask order.
pub fn hoang_witness(g: &SimpleGraph, u: usize) -> Option<Vec<usize>> {
    let adj = g.adjacency();
    hoang_adj(&adj, u).map(members)
}

fn hoang_adj(adj: &[u64], u: usize) -> Option<u64> {
    let n = adj.len();
    let cliques = maximal_cliques_adj(adj);
    let all = super::clutter::full(n);
    let comp: Vec<u64> = (0..n).map(|i| all & !adj[i] & !(1 << i)).collect();
    // maximal stable sets through u = maximal cliques of the complement through u
    let mut stables: Vec<u64> = maximal_cliques_adj(&comp)
        .into_iter()
        .filter(|s| s >> u & 1 == 1)
        .collect();
    stables.sort_unstable();
    stables
        .into_iter()
        .find(|&s| cliques.iter().all(|&c| c & s != 0))
}

/// Every induced subgraph `H` and vertex `u` of `H` admit a Hoàng witness.
pub fn is_meyniel_via_hoang(g: &SimpleGraph) -> Result<bool> {
    if g.n() > 9 {
        return usage("is_meyniel_via_hoang is limited to 9 vertices");
    }
    for mask in 1u64..1 << g.n() {
        let h = g.induced(mask);
        let adj = h.adjacency();
        if (0..h.n()).any(|u| hoang_adj(&adj, u).is_none()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `β = (1/n) Σ_k χ(B_k)` for Hoàng witnesses `B_k ∋ k`; it satisfies
/// `⟨v, β⟩ = 1` on every maximal clique `v` and is strictly positive.
pub fn beta_witness(g: &SimpleGraph) -> Result<RatVector> {
    let n = g.n();
    if n == 0 {
        return usage("beta_witness of the empty graph");
    }
    let adj = g.adjacency();
    let mut counts = vec![0i64; n];
    for k in 0..n {
        let b = hoang_adj(&adj, k).ok_or(Error::NotMeyniel { vertex: k })?;
        for v in members(b) {
            counts[v] += 1;
        }
    }
    let beta: RatVector = counts
        .iter()
        .map(|&c| Rational::new(c.into(), (n as i64).into()))
        .collect();
    let one = Rational::from_integer(1.into());
    for c in maximal_cliques_adj(&adj) {
        let s: Rational = members(c).iter().map(|&v| beta[v].clone()).sum();
        if s != one {
            return Err(Error::Internal(format!(
                "beta witness sums to {s} on clique {:?}",
                members(c)
            )));
        }
    }
    if counts.contains(&0) {
        return Err(Error::Internal("beta witness has a zero entry".into()));
    }
    Ok(beta)
}
