use serde::{Deserialize, Serialize};

use super::{mask_of, members};
use crate::error::{usage, Result};
use crate::kernel::{IntVec, RatVector, Rational};

/// A clutter on vertices `0..n`: an antichain of vertex sets.
///
/// [`Clutter::new`] enforces that every edge has at least two vertices and
/// every vertex lies on an edge. [`Clutter::raw`] waives the size bound, which
/// blockers and clique clutters of graphs with isolated vertices need.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Clutter {
    n: usize,
    edges: Vec<Vec<usize>>,
}

/// All minimal vertex covers of a clutter, with their characteristic vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSet {
    pub covers: Vec<Vec<usize>>,
    pub vectors: Vec<IntVec>,
}

impl Clutter {
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let c = Self::raw(n, edges)?;
        if c.edges.iter().any(|e| e.len() < 2) {
            return usage("clutter edge with fewer than two vertices");
        }
        Ok(c)
    }

    /// Like [`Clutter::new`] but allows singleton edges.
    pub fn raw(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if n > 64 {
            return usage("clutters are limited to 64 vertices");
        }
        let mut es: Vec<Vec<usize>> = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            e.dedup();
            if e.is_empty() {
                return usage("empty clutter edge");
            }
            if e.iter().any(|&v| v >= n) {
                return usage(format!("edge {e:?} has a vertex outside 0..{n}"));
            }
            es.push(e);
        }
        es.sort();
        es.dedup();
        let masks: Vec<u64> = es.iter().map(|e| mask_of(e)).collect();
        for (i, a) in masks.iter().enumerate() {
            for (j, b) in masks.iter().enumerate() {
                if i != j && a & b == *a {
                    return usage(format!("edge {:?} is contained in {:?}", es[i], es[j]));
                }
            }
        }
        let covered = masks.iter().fold(0u64, |acc, m| acc | m);
        if covered != full(n) {
            return usage("every vertex must lie on an edge");
        }
        Ok(Clutter { n, edges: es })
    }

    pub(crate) fn from_masks(n: usize, masks: &[u64]) -> Result<Self> {
        Self::raw(n, masks.iter().map(|&m| members(m)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Whether some edge is a singleton.
    pub fn is_raw(&self) -> bool {
        self.edges.iter().any(|e| e.len() < 2)
    }

    pub(crate) fn masks(&self) -> Vec<u64> {
        self.edges.iter().map(|e| mask_of(e)).collect()
    }

    /// Characteristic vectors `v_i` of the edges (the columns of the clutter matrix).
    pub fn vectors(&self) -> Vec<IntVec> {
        self.edges.iter().map(|e| indicator(self.n, e)).collect()
    }

    /// `(v_i, 1)` for every edge.
    pub fn lifted_vectors(&self) -> Vec<IntVec> {
        self.vectors()
            .into_iter()
            .map(|mut v| {
                v.push(1.into());
                v
            })
            .collect()
    }

    /// Whether the rational vector has `⟨v_j, x⟩ = 1` for every edge.
    pub fn sums_to_one_on_edges(&self, x: &[Rational]) -> bool {
        self.edges.iter().all(|e| {
            e.iter().map(|&i| x[i].clone()).sum::<Rational>() == Rational::from_integer(1.into())
        })
    }
}

pub(crate) fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn indicator(n: usize, set: &[usize]) -> IntVec {
    let mut v = vec![0.into(); n];
    for &i in set {
        v[i] = 1.into();
    }
    v
}

/// Minimal sets meeting every given set, by Berge's incremental method.
pub(crate) fn transversals(sets: &[u64]) -> Vec<u64> {
    let mut t: Vec<u64> = vec![0];
    for &e in sets {
        let mut next: Vec<u64> = Vec::new();
        for &x in &t {
            if x & e != 0 {
                next.push(x);
            } else {
                let mut rest = e;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    next.push(x | bit);
                    rest &= rest - 1;
                }
            }
        }
        next.sort_unstable();
        next.dedup();
        t = minimal_sets(next);
    }
    t
}

/// Drops every set that strictly contains another one.
pub(crate) fn minimal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut out: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|&m| m & !s == 0) {
            out.push(s);
        }
    }
    out
}

/// The blocker: the clutter of minimal vertex covers. May have singleton edges.
pub fn blocker(c: &Clutter) -> Clutter {
    Clutter::from_masks(c.n, &transversals(&c.masks())).expect("covers form a clutter on 0..n")
}

pub fn minimal_covers(c: &Clutter) -> CoverSet {
    let b = blocker(c);
    CoverSet {
        vectors: b.vectors(),
        covers: b.edges,
    }
}

/// The covering number `g`: the least size of a vertex cover.
pub fn covering_number(c: &Clutter) -> usize {
    transversals(&c.masks())
        .iter()
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// The largest number of pairwise disjoint edges.
pub fn max_disjoint_edges(c: &Clutter) -> usize {
    fn go(masks: &[u64], used: u64, count: usize, best: &mut usize) {
        if count + masks.len() <= *best {
            return;
        }
        let Some((&first, rest)) = masks.split_first() else {
            *best = (*best).max(count);
            return;
        };
        if first & used == 0 {
            go(rest, used | first, count + 1, best);
        }
        go(rest, used, count, best);
    }
    let mut best = 0;
    go(&c.masks(), 0, 0, &mut best);
    best
}

pub fn has_konig(c: &Clutter) -> bool {
    covering_number(c) == max_disjoint_edges(c)
}

/// `Some(d)` when every edge has exactly `d` vertices.
pub fn is_uniform(c: &Clutter) -> Option<usize> {
    let d = c.edges.first()?.len();
    c.edges.iter().all(|e| e.len() == d).then_some(d)
}

/// Whether all minimal vertex covers have the same size.
pub fn is_unmixed(c: &Clutter) -> bool {
    let covers = transversals(&c.masks());
    covers
        .windows(2)
        .all(|w| w[0].count_ones() == w[1].count_ones())
}

/// The suspension `C⁺`: vertex `n` is added to every edge.
pub fn suspension(c: &Clutter) -> Clutter {
    let edges = c
        .edges
        .iter()
        .map(|e| {
            let mut e = e.clone();
            e.push(c.n);
            e
        })
        .collect();
    Clutter::raw(c.n + 1, edges).expect("suspension of a clutter is a clutter")
}

/// `γ = (1/d, …, 1/d)` for a partition of `0..n` into `d` classes.
pub fn gamma_witness(n: usize, parts: &[Vec<usize>]) -> Result<RatVector> {
    let mut seen = vec![false; n];
    for p in parts {
        if p.is_empty() {
            return usage("empty partition class");
        }
        for &v in p {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return usage("classes must be disjoint subsets of 0..n");
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return usage("classes must cover every vertex");
    }
    Ok(vec![Rational::new(1.into(), parts.len().into()); n])
}

/// `d` pairwise disjoint minimal covers partitioning the vertices, each meeting
/// every edge exactly once, when `C` is `d`-uniform and such covers exist.
pub fn disjoint_cover_partition(c: &Clutter) -> Option<Vec<Vec<usize>>> {
    is_uniform(c)?;
    let edges = c.masks();
    let good: Vec<u64> = transversals(&edges)
        .into_iter()
        .filter(|&x| edges.iter().all(|&e| (x & e).count_ones() == 1))
        .collect();
    fn go(good: &[u64], left: u64, chosen: &mut Vec<u64>) -> bool {
        if left == 0 {
            return true;
        }
        let v = left & left.wrapping_neg();
        for &x in good {
            if x & v != 0 && x & !left == 0 {
                chosen.push(x);
                if go(good, left & !x, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    go(&good, full(c.n), &mut chosen).then(|| {
        let mut parts: Vec<Vec<usize>> = chosen.into_iter().map(members).collect();
        parts.sort();
        parts
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cl(n: usize, edges: &[&[usize]]) -> Clutter {
        Clutter::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    fn triangle() -> Clutter {
        cl(3, &[&[0, 1], &[1, 2], &[0, 2]])
    }

    fn cycle(k: usize) -> Clutter {
        cl(
            k,
            &(0..k)
                .map(|i| vec![i, (i + 1) % k])
                .collect::<Vec<_>>()
                .iter()
                .map(|e| e.as_slice())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn invariants_enforced() {
        assert!(Clutter::new(3, vec![vec![0, 1], vec![0, 1, 2]]).is_err());
        assert!(Clutter::new(3, vec![vec![0, 1]]).is_err());
        assert!(Clutter::new(2, vec![vec![0]]).is_err());
        assert!(Clutter::raw(2, vec![vec![0], vec![1]]).is_ok());
        assert!(Clutter::new(2, vec![vec![0, 2]]).is_err());
    }

    #[test]
    fn blockers() {
        assert_eq!(blocker(&triangle()), triangle());
        let single = cl(3, &[&[0, 1, 2]]);
        let b = blocker(&single);
        assert!(b.is_raw());
        assert_eq!(b.edges(), &[vec![0], vec![1], vec![2]]);
        assert_eq!(blocker(&cycle(4)).edges(), &[vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn covering_and_matching() {
        for (c, g, m) in [(cycle(4), 2, 2), (cycle(5), 3, 2), (triangle(), 2, 1)] {
            assert_eq!(covering_number(&c), g);
            assert_eq!(max_disjoint_edges(&c), m);
            assert_eq!(has_konig(&c), g == m);
        }
    }

    #[test]
    fn uniform_and_unmixed() {
        assert_eq!(is_uniform(&cycle(4)), Some(2));
        assert!(is_unmixed(&cycle(4)));
        assert_eq!(is_uniform(&cl(4, &[&[0, 1], &[1, 2, 3]])), None);
        assert_eq!(is_uniform(&cycle(5)), Some(2));
        assert!(is_unmixed(&cycle(5)));
        let p3 = cl(3, &[&[0, 1], &[1, 2]]);
        assert!(!is_unmixed(&p3));
    }

    #[test]
    fn suspensions() {
        assert_eq!(
            suspension(&triangle()).edges(),
            &[vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
        );
        let k2 = Clutter::raw(2, vec![vec![0, 1]]).unwrap();
        assert_eq!(suspension(&k2).edges(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn gamma() {
        let g = gamma_witness(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(g, vec![Rational::new(1.into(), 2.into()); 4]);
        assert_eq!(
            gamma_witness(2, &[vec![0, 1]]).unwrap(),
            vec![Rational::from_integer(1.into()); 2]
        );
        let g = gamma_witness(6, &[vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        assert_eq!(g[5], Rational::new(1.into(), 3.into()));
        assert!(gamma_witness(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(gamma_witness(3, &[vec![0, 1]]).is_err());
    }

    #[test]
    fn partitions() {
        let k22 = cl(4, &[&[0, 2], &[0, 3], &[1, 2], &[1, 3]]);
        assert_eq!(
            disjoint_cover_partition(&k22),
            Some(vec![vec![0, 1], vec![2, 3]])
        );
        let g = gamma_witness(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert!(k22.sums_to_one_on_edges(&g));
        assert_eq!(disjoint_cover_partition(&triangle()), None);
    }

    /// Covers as complements of maximal stable sets, by exhaustion.
    fn covers_by_stable_sets(c: &Clutter) -> Vec<u64> {
        let edges = c.masks();
        let n = c.n();
        let stable = |s: u64| edges.iter().all(|&e| e & !s != 0);
        let mut out: Vec<u64> = (0..1u64 << n)
            .filter(|&s| stable(s) && (0..n).all(|v| s >> v & 1 == 1 || !stable(s | 1 << v)))
            .map(|s| full(n) & !s)
            .collect();
        out.sort_by_key(|s| (s.count_ones(), *s));
        out
    }

    #[test]
    fn covers_match_stable_set_complements() {
        for c in [
            triangle(),
            cycle(4),
            cycle(5),
            cl(5, &[&[0, 1, 2], &[2, 3], &[3, 4, 0]]),
        ] {
            assert_eq!(transversals(&c.masks()), covers_by_stable_sets(&c));
        }
    }
}
