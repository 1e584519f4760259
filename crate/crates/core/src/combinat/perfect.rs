use serde::{Deserialize, Serialize};

use super::graph::check_cap;
use super::{complement, members, SimpleGraph};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// An induced odd cycle of length at least five in `G` (hole) or in its
/// complement (antihole), vertices in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddHole {
    pub vertices: Vec<usize>,
    pub antihole: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectReport {
    pub perfect: bool,
    pub witness: Option<OddHole>,
}

/// Perfection via the strong perfect graph theorem: no odd hole, no odd antihole.
pub fn is_perfect_small(g: &SimpleGraph, limits: &Limits) -> Result<PerfectReport> {
    check_cap(g.n(), limits)?;
    for (h, antihole) in [(g.clone(), false), (complement(g), true)] {
        if let Some(vertices) = odd_hole(&h.adjacency(), limits)? {
            return Ok(PerfectReport {
                perfect: false,
                witness: Some(OddHole { vertices, antihole }),
            });
        }
    }
    Ok(PerfectReport {
        perfect: true,
        witness: None,
    })
}

/// An induced cycle of odd length ≥ 5, if any.
pub(crate) fn odd_hole(adj: &[u64], limits: &Limits) -> Result<Option<Vec<usize>>> {
    let mut steps = 0u64;
    for s in 0..adj.len() {
        let higher = !((1u64 << s) | ((1u64 << s) - 1));
        let mut path = vec![s];
        if grow(adj, higher, &mut path, 1 << s, &mut steps, limits)? {
            return Ok(Some(path));
        }
    }
    Ok(None)
}

/// Extends an induced path from its smallest vertex `path[0]`. Returns `true`
/// with `path` holding the hole.
fn grow(
    adj: &[u64],
    allowed: u64,
    path: &mut Vec<usize>,
    on_path: u64,
    steps: &mut u64,
    limits: &Limits,
) -> Result<bool> {
    *steps += 1;
    if *steps > limits.cycle_steps {
        return Err(Error::ResourceExceeded {
            what: "odd-hole search steps".into(),
            limit: limits.cycle_steps,
        });
    }
    let s = path[0];
    let last = *path.last().expect("nonempty");
    // interior vertices: everything except s and the current end
    let interior = on_path & !(1u64 << s) & !(1u64 << last);
    for v in members(adj[last] & allowed & !on_path) {
        if adj[v] & interior != 0 {
            continue;
        }
        let closes = path.len() >= 2 && adj[v] >> s & 1 == 1;
        if closes {
            let len = path.len() + 1;
            if len >= 5 && len % 2 == 1 {
                path.push(v);
                return Ok(true);
            }
            // v would become a chord endpoint for any longer path
            continue;
        }
        path.push(v);
        if grow(adj, allowed, path, on_path | 1 << v, steps, limits)? {
            return Ok(true);
        }
        path.pop();
    }
    Ok(false)
}
