//! Instance generators: the sharpness family, the `L(K_{2,4})` example,
//! standard and seeded random graphs, unmixed bipartite enumeration and the
//! search for chordal graphs whose clique-clutter ideal is not normal.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinat::iso::{canonical_form, canonical_graph, CanonicalCode};
use crate::combinat::{
    blocker, clique_clutter, complement, graph_cone, is_unmixed, line_graph, Clutter, SimpleGraph,
};
use crate::error::{usage, Error, Result};
use crate::ideals::{normality_upto, Exponent, UptoVerdict};
use crate::limits::Limits;
use crate::tdi::LinearSystem;

/// Vertices `X_1 ∪ ⋯ ∪ X_d` with `|X_i| = g`; edges are the `g^d` sets meeting
/// every `X_i` once, so the minimal covers are exactly the `X_i`.
pub fn sharpness_clutter(d: usize, g: usize) -> Result<Clutter> {
    if d == 0 || g < 2 {
        return usage("sharpness clutters need d ≥ 1 and g ≥ 2");
    }
    if d * g > 64 || (g as u64).checked_pow(d as u32).is_none_or(|m| m > 1 << 16) {
        return Err(Error::ResourceExceeded {
            what: "sharpness clutter edges".into(),
            limit: 1 << 16,
        });
    }
    let mut edges = vec![Vec::new()];
    for part in 0..d {
        edges = edges
            .into_iter()
            .flat_map(|e: Vec<usize>| {
                (0..g).map(move |k| {
                    let mut e = e.clone();
                    e.push(part * g + k);
                    e
                })
            })
            .collect();
    }
    let c = if d == 1 {
        Clutter::raw(g, edges)?
    } else {
        Clutter::new(d * g, edges)?
    };
    let parts: Vec<Vec<usize>> = (0..d).map(|i| (i * g..(i + 1) * g).collect()).collect();
    if blocker(&c).edges() != parts.as_slice() {
        return Err(Error::Internal(
            "sharpness clutter has unexpected covers".into(),
        ));
    }
    Ok(c)
}

/// The incidence matrix of `K_{2,4}`: rows are maximal cliques of `L(K_{2,4})`.
pub const EXAMPLE_3_9_MATRIX: [[u8; 8]; 6] = [
    [1, 1, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 1],
    [1, 0, 0, 0, 1, 0, 0, 0],
    [0, 1, 0, 0, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, 0, 1],
];

/// `L(K_{2,4})` and its clique clutter.
pub fn example_3_9() -> (SimpleGraph, Clutter) {
    let g = line_graph(&complete_bipartite(2, 4));
    let c = clique_clutter(&g, &Limits::default()).expect("8 vertices");
    let mut printed: Vec<Vec<usize>> = EXAMPLE_3_9_MATRIX
        .iter()
        .map(|row| (0..8).filter(|&j| row[j] == 1).collect())
        .collect();
    printed.sort();
    assert_eq!(c.edges(), printed.as_slice(), "clique matrix of L(K_2,4)");
    (g, c)
}

pub fn cycle(k: usize) -> Result<SimpleGraph> {
    if k < 3 {
        return usage("cycles need at least 3 vertices");
    }
    SimpleGraph::new(k, (0..k).map(|i| (i, (i + 1) % k)).collect())
}

pub fn path(k: usize) -> Result<SimpleGraph> {
    SimpleGraph::new(k, (1..k).map(|i| (i - 1, i)).collect())
}

pub fn complete(k: usize) -> Result<SimpleGraph> {
    SimpleGraph::new(
        k,
        (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .collect(),
    )
}

/// Sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
    SimpleGraph::new(
        a + b,
        (0..a)
            .flat_map(|i| (a..a + b).map(move |j| (i, j)))
            .collect(),
    )
    .expect("valid bipartite graph")
}

/// A connected chordal graph: each new vertex is joined to a random clique.
pub fn random_chordal(n: usize, seed: u64) -> Result<SimpleGraph> {
    if n == 0 || n > 64 {
        return usage("random chordal graphs need 1..=64 vertices");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj = vec![0u64; n];
    for v in 1..n {
        let mut order: Vec<usize> = (0..v).collect();
        order.shuffle(&mut rng);
        let mut clique = 1u64 << order[0];
        for &w in &order[1..] {
            if adj[w] & clique == clique && rng.gen_bool(0.5) {
                clique |= 1 << w;
            }
        }
        for w in crate::combinat::members(clique) {
            adj[w] |= 1 << v;
            adj[v] |= 1 << w;
        }
    }
    Ok(SimpleGraph::from_adjacency(&adj))
}

/// Random bipartition and independent edges with probability ½ across it.
pub fn random_bipartite(n: usize, seed: u64) -> Result<SimpleGraph> {
    if n > 64 {
        return usage("graphs are limited to 64 vertices");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if side[i] != side[j] && rng.gen_bool(0.5) {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::new(n, edges)
}

/// The edge clutter of a graph without isolated vertices.
pub fn graph_clutter(g: &SimpleGraph) -> Result<Clutter> {
    Clutter::new(g.n(), g.edges().iter().map(|&(a, b)| vec![a, b]).collect())
}

/// All connected unmixed bipartite graphs on `2..=n_max` vertices, one per
/// isomorphism class, canonically labelled, by size then canonical code.
pub fn enumerate_unmixed_bipartite(n_max: usize) -> Result<Vec<SimpleGraph>> {
    if n_max > 8 {
        return Err(Error::ResourceExceeded {
            what: "bipartite enumeration vertices".into(),
            limit: 8,
        });
    }
    let mut out = Vec::new();
    for n in 2..=n_max {
        let mut seen: BTreeSet<CanonicalCode> = BTreeSet::new();
        let mut level = Vec::new();
        for a in 1..=n / 2 {
            let b = n - a;
            for bits in 0u64..1 << (a * b) {
                let edges: Vec<(usize, usize)> = (0..a * b)
                    .filter(|k| bits >> k & 1 == 1)
                    .map(|k| (k / b, a + k % b))
                    .collect();
                let g = SimpleGraph::new(n, edges)?;
                if !g.is_connected() || !is_unmixed(&graph_clutter(&g)?) {
                    continue;
                }
                let (code, _) = canonical_form(&g);
                if seen.insert(code) {
                    level.push((code, canonical_graph(&g)));
                }
            }
        }
        level.sort_by_key(|x| x.0);
        out.extend(level.into_iter().map(|(_, g)| g));
    }
    Ok(out)
}

/// Graph families for batch runs; every member is perfect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Bipartite,
    Chordal,
    MeynielClosure,
    LineOfBipartite,
    Complements,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Bipartite,
        Family::Chordal,
        Family::MeynielClosure,
        Family::LineOfBipartite,
        Family::Complements,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Bipartite => "bipartite",
            Family::Chordal => "chordal",
            Family::MeynielClosure => "meyniel-closure",
            Family::LineOfBipartite => "line-of-bipartite",
            Family::Complements => "complements",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown family {s:?}")))
    }

    /// The `index`-th member with at most `max_n` vertices.
    pub fn member(self, max_n: usize, seed: u64, index: u64) -> Result<SimpleGraph> {
        if max_n < 2 {
            return usage("families need at least 2 vertices");
        }
        let s = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(index);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let n = rng.gen_range(2..=max_n);
        let sub = rng.gen();
        match self {
            Family::Bipartite => random_bipartite(n, sub),
            Family::Chordal => random_chordal(n, sub),
            Family::MeynielClosure => {
                let base = if rng.gen_bool(0.5) {
                    random_chordal(n - 1, sub)?
                } else {
                    random_bipartite(n - 1, sub)?
                };
                Ok(graph_cone(&base))
            }
            Family::LineOfBipartite => {
                // a bipartite graph with at most max_n edges
                let mut g = random_bipartite(n.max(2), sub)?;
                let mut edges = g.edges().to_vec();
                edges.truncate(max_n);
                if edges.is_empty() {
                    edges.push((0, 1));
                }
                g = SimpleGraph::new(g.n(), edges)?;
                Ok(line_graph(&g))
            }
            Family::Complements => Ok(complement(&random_bipartite(n, sub)?)),
        }
    }
}

/// Chordal, bipartite and cone-closed members in rotation: all Meyniel.
pub fn meyniel_batch(count: usize, max_n: usize, seed: u64) -> Result<Vec<SimpleGraph>> {
    let fams = [Family::Chordal, Family::Bipartite, Family::MeynielClosure];
    (0..count)
        .map(|k| fams[k % 3].member(max_n, seed, k as u64))
        .collect()
}

/// A named, parameterized, seeded instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub family: String,
    pub params: Vec<u64>,
    pub seed: Option<u64>,
}

/// A graph, clutter or linear system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Instance {
    Graph(SimpleGraph),
    Clutter(Clutter),
    System(LinearSystem),
}

impl InstanceSpec {
    pub fn new(family: &str, params: &[u64], seed: Option<u64>) -> Self {
        InstanceSpec {
            family: family.into(),
            params: params.to_vec(),
            seed,
        }
    }

    pub fn build(&self) -> Result<Instance> {
        let p = |i: usize| -> Result<usize> {
            self.params
                .get(i)
                .map(|&x| x as usize)
                .ok_or_else(|| Error::Usage(format!("{} needs parameter {}", self.family, i + 1)))
        };
        let seed = || {
            self.seed
                .ok_or_else(|| Error::Usage(format!("{} needs a seed", self.family)))
        };
        Ok(match self.family.as_str() {
            "cycle" => Instance::Graph(cycle(p(0)?)?),
            "path" => Instance::Graph(path(p(0)?)?),
            "complete" => Instance::Graph(complete(p(0)?)?),
            "complete-bipartite" => Instance::Graph(complete_bipartite(p(0)?, p(1)?)),
            "chordal-random" => Instance::Graph(random_chordal(p(0)?, seed()?)?),
            "bipartite-random" => Instance::Graph(random_bipartite(p(0)?, seed()?)?),
            "sharpness" => Instance::Clutter(sharpness_clutter(p(0)?, p(1)?)?),
            "line-k24" => Instance::Graph(example_3_9().0),
            other => return usage(format!("unknown family {other:?}")),
        })
    }
}

/// A chordal graph whose clique-clutter edge ideal is not normal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonNormalHit {
    pub graph: SimpleGraph,
    pub power: u32,
    /// In the integral closure of `I^power` but not in `I^power`.
    pub witness: Exponent,
    /// Candidates examined, including the hit.
    pub examined: u64,
}

/// Triangulated polygons with 3–6 vertices (maximal outerplanar graphs),
/// one per isomorphism class; the 6-vertex ones include the 3-sun.
pub fn polygon_gadgets() -> Vec<SimpleGraph> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for k in 3..=6usize {
        let mut tris: Vec<Vec<(usize, usize)>> = Vec::new();
        triangulations(&(0..k).collect::<Vec<_>>(), &mut Vec::new(), &mut tris);
        let mut level = Vec::new();
        for diags in tris {
            let mut e: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            e.extend(diags);
            let g = SimpleGraph::new(k, e).expect("polygon triangulation");
            let (code, _) = canonical_form(&g);
            if seen.insert(code) {
                level.push((code, canonical_graph(&g)));
            }
        }
        level.sort_by_key(|a| a.0);
        out.extend(level.into_iter().map(|(_, g)| g));
    }
    out
}

/// All triangulations of the convex polygon with vertices `poly`, as diagonal lists.
fn triangulations(
    poly: &[usize],
    acc: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    // pending polygons are handled recursively by splitting on the triangle over poly[0]poly[1]
    fn go(
        stack: &mut Vec<Vec<usize>>,
        acc: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let Some(p) = stack.pop() else {
            out.push(acc.clone());
            return;
        };
        if p.len() <= 3 {
            go(stack, acc, out);
            stack.push(p);
            return;
        }
        let (a, b) = (p[0], p[1]);
        for t in 2..p.len() {
            let c = p[t];
            let before = acc.len();
            let pushed = stack.len();
            if t > 2 {
                acc.push((b.min(c), b.max(c)));
                stack.push(p[1..=t].to_vec());
            }
            if t < p.len() - 1 {
                acc.push((a.min(c), a.max(c)));
                let mut rest = vec![a];
                rest.extend_from_slice(&p[t..]);
                stack.push(rest);
            }
            go(stack, acc, out);
            stack.truncate(pushed);
            acc.truncate(before);
        }
        stack.push(p);
    }
    go(&mut vec![poly.to_vec()], acc, out);
}

/// Two gadgets joined at `(u, v)`: identified (`link = 0`), by an edge
/// (`link = 1`) or through one new vertex (`link = 2`).
pub fn glue(
    a: &SimpleGraph,
    u: usize,
    b: &SimpleGraph,
    v: usize,
    link: usize,
) -> Result<SimpleGraph> {
    if u >= a.n() || v >= b.n() || link > 2 {
        return usage("invalid gluing");
    }
    let na = a.n();
    let map_b = |w: usize| -> usize {
        if link == 0 {
            match w.cmp(&v) {
                std::cmp::Ordering::Equal => u,
                std::cmp::Ordering::Less => na + w,
                std::cmp::Ordering::Greater => na + w - 1,
            }
        } else {
            na + w
        }
    };
    let nb = if link == 0 { b.n() - 1 } else { b.n() };
    let mut n = na + nb;
    let mut edges: Vec<(usize, usize)> = a.edges().to_vec();
    edges.extend(b.edges().iter().map(|&(x, y)| (map_b(x), map_b(y))));
    match link {
        1 => edges.push((u, map_b(v))),
        2 => {
            edges.push((u, n));
            edges.push((n, map_b(v)));
            n += 1;
        }
        _ => {}
    }
    SimpleGraph::new(n, edges)
}

/// Gluings of two polygon gadgets, canonically labelled, deduplicated,
/// ordered by vertex count then canonical code.
pub fn gadget_gluings(n_max: usize) -> Vec<SimpleGraph> {
    let gadgets = polygon_gadgets();
    let mut by_code: BTreeSet<(usize, CanonicalCode)> = BTreeSet::new();
    let mut out = Vec::new();
    for (i, a) in gadgets.iter().enumerate() {
        for b in &gadgets[i..] {
            for link in 0..=2 {
                let n = a.n() + b.n() + link - 1;
                if n > n_max {
                    continue;
                }
                for u in 0..a.n() {
                    for v in 0..b.n() {
                        let g = glue(a, u, b, v, link).expect("valid gluing");
                        let (code, _) = canonical_form(&g);
                        if by_code.insert((n, code)) {
                            out.push(((n, code), canonical_graph(&g)));
                        }
                    }
                }
            }
        }
    }
    out.sort_by_key(|x| x.0);
    out.into_iter().map(|(_, g)| g).collect()
}

/// Default candidate budget of [`search_nonnormal_chordal`].
pub const DEFAULT_SEARCH_BUDGET: u64 = 4000;

/// Searches gadget gluings (then random chordal graphs) with at most `n_max`
/// vertices for a clique clutter whose edge ideal fails normality by the
/// third power. Candidates are checked in parallel chunks, but the earliest
/// candidate in the fixed order wins. `None` when `budget` candidates pass.
pub fn search_nonnormal_chordal(
    n_max: usize,
    budget: u64,
    seed: u64,
    limits: &Limits,
) -> Result<Option<NonNormalHit>> {
    let n_max = n_max.min(limits.graph_vertices);
    let mut candidates = gadget_gluings(n_max);
    let mut k = 0u64;
    while (candidates.len() as u64) < budget && n_max >= 3 {
        let n = 3 + (k as usize % (n_max - 2));
        candidates.push(random_chordal(n, seed.wrapping_add(k))?);
        k += 1;
    }
    candidates.truncate(budget as usize);
    const CHUNK: usize = 64;
    for (c, chunk) in candidates.chunks(CHUNK).enumerate() {
        let verdicts: Vec<Result<UptoVerdict>> = chunk
            .par_iter()
            .map(|g| normality_upto(&clique_clutter(g, limits)?, 3, limits))
            .collect();
        for (j, (g, v)) in chunk.iter().zip(verdicts).enumerate() {
            match v {
                Ok(UptoVerdict::FailsAt { i, witness }) => {
                    return Ok(Some(NonNormalHit {
                        graph: g.clone(),
                        power: i,
                        witness,
                        examined: (c * CHUNK + j + 1) as u64,
                    }));
                }
                Ok(UptoVerdict::HoldsUpTo { .. }) => {}
                Err(e) if e.is_budget() => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{covering_number, is_perfect_small, is_uniform, maximal_cliques};

    #[test]
    fn sharpness_shapes() {
        let c = sharpness_clutter(2, 2).unwrap();
        assert_eq!(c.edges().len(), 4);
        assert_eq!(sharpness_clutter(2, 3).unwrap().edges().len(), 9);
        let c = sharpness_clutter(3, 2).unwrap();
        assert_eq!(c.edges().len(), 8);
        assert_eq!(is_uniform(&c), Some(3));
        assert!(is_unmixed(&c));
        assert_eq!(covering_number(&c), 2);
        assert_eq!(blocker(&c).edges(), &[vec![0, 1], vec![2, 3], vec![4, 5]]);
        assert!(sharpness_clutter(2, 1).is_err());
    }

    #[test]
    fn example_3_9_shape() {
        let (g, c) = example_3_9();
        assert_eq!(g.n(), 8);
        assert_eq!(c.edges().len(), 6);
        assert!(is_perfect_small(&g, &Limits::default()).unwrap().perfect);
    }

    #[test]
    fn constructors() {
        assert_eq!(cycle(5).unwrap().edges().len(), 5);
        assert_eq!(complete(4).unwrap().edges().len(), 6);
        assert_eq!(complete_bipartite(2, 4).edges().len(), 8);
        assert_eq!(path(3).unwrap().edges().len(), 2);
        assert_eq!(
            random_bipartite(6, 9).unwrap(),
            random_bipartite(6, 9).unwrap()
        );
        for s in 0..20 {
            let g = random_chordal(9, s).unwrap();
            assert!(g.is_chordal() && g.is_connected());
        }
    }

    #[test]
    fn unmixed_bipartite_small() {
        let gs = enumerate_unmixed_bipartite(4).unwrap();
        // K2, P4 and C4
        assert_eq!(gs.len(), 3);
        let c4 = canonical_graph(&cycle(4).unwrap());
        assert!(gs.contains(&c4));
        assert!(!gs.iter().any(|g| g.n() == 3));
    }

    #[test]
    fn gadgets() {
        // triangle, one 4-gon, one 5-gon, three 6-gons
        let gs = polygon_gadgets();
        assert_eq!(
            gs.iter().map(|g| g.n()).collect::<Vec<_>>(),
            vec![3, 4, 5, 6, 6, 6]
        );
        assert!(gs
            .iter()
            .all(|g| g.is_chordal() && g.edges().len() == 2 * g.n() - 3));
    }

    #[test]
    fn gluing_shapes() {
        let t = complete(3).unwrap();
        let g = glue(&t, 0, &t, 0, 2).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(maximal_cliques(&g).len(), 4);
        assert_eq!(glue(&t, 0, &t, 0, 0).unwrap().n(), 5);
    }

    #[test]
    fn families_are_perfect() {
        for f in Family::ALL {
            for k in 0..8 {
                let g = f.member(7, 3, k).unwrap();
                assert!(
                    is_perfect_small(&g, &Limits::default()).unwrap().perfect,
                    "{f:?} {k}"
                );
            }
        }
    }
}
