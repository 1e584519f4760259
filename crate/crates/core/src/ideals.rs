//! Monomial ideals given by minimal exponent vectors.
//!
//! Symbolic powers and integral closures of powers of an edge ideal are both
//! "linear staircases" `{a ∈ ℕⁿ : ⟨c_k, a⟩ ≥ r_k}` with `c_k ≥ 0`; their minimal
//! generators are found by a coordinate-wise search inside a box, pruned by
//! the best possible completion of each prefix.

use std::collections::BTreeSet;

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::combinat::{minimal_covers, Clutter};
use crate::error::{usage, Error, Result};
use crate::kernel::{unit, IntVec};
use crate::limits::Limits;
use crate::polyhedron::{v_to_h, VRep};

pub type Exponent = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Exponent>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimalize(set: BTreeSet<Exponent>) -> Vec<Exponent> {
    // sorting by total degree first lets each vector be tested against smaller ones only
    let mut by_degree: Vec<Exponent> = set.into_iter().collect();
    by_degree.sort_by_key(|a| a.iter().map(|&x| x as u64).sum::<u64>());
    let mut keep: Vec<Exponent> = Vec::new();
    for a in by_degree {
        if !keep.iter().any(|g| divides(g, &a)) {
            keep.push(a);
        }
    }
    keep.sort();
    keep
}

impl MonomialIdeal {
    /// Minimalizes and sorts the given generators.
    pub fn new(n: usize, gens: Vec<Exponent>) -> Result<Self> {
        if gens.iter().any(|g| g.len() != n) {
            return usage("exponent vector length differs from the variable count");
        }
        Ok(MonomialIdeal {
            n,
            gens: minimalize(gens.into_iter().collect()),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, a: &[u32]) -> Result<bool> {
        if a.len() != self.n {
            return usage("monomial and ideal live in different polynomial rings");
        }
        Ok(self.gens.iter().any(|g| divides(g, a)))
    }

    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        if self.n != other.n {
            return usage("ideals live in different polynomial rings");
        }
        Ok(self.gens == other.gens)
    }

    /// Whether every generator of `self` lies in `other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A minimal generator of `self` outside `other`, if any.
    pub fn first_outside(&self, other: &MonomialIdeal) -> Result<Option<Exponent>> {
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(Some(g.clone()));
            }
        }
        Ok(None)
    }

    fn max_exponent(&self) -> u32 {
        self.gens.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// `I(C)`: generated by `∏_{x_i ∈ e} x_i` over the edges.
pub fn edge_ideal(c: &Clutter) -> MonomialIdeal {
    let gens = c
        .edges()
        .iter()
        .map(|e| {
            let mut a = vec![0; c.n()];
            for &v in e {
                a[v] = 1;
            }
            a
        })
        .collect();
    MonomialIdeal::new(c.n(), gens).expect("edges fit the vertex count")
}

/// `I^i` for `i ≥ 1`.
pub fn power(ideal: &MonomialIdeal, i: u32) -> Result<MonomialIdeal> {
    if i == 0 {
        return usage("powers start at 1");
    }
    let mut cur = ideal.gens.clone();
    for _ in 1..i {
        let mut next = BTreeSet::new();
        for a in &cur {
            for g in &ideal.gens {
                next.insert(a.iter().zip(g).map(|(x, y)| x + y).collect());
            }
        }
        cur = minimalize(next);
    }
    Ok(MonomialIdeal {
        n: ideal.n,
        gens: cur,
    })
}

/// `{a ∈ ℕⁿ : ⟨coeffs_k, a⟩ ≥ rhs_k ∀k}` with nonnegative coefficients.
#[derive(Debug, Clone)]
struct Staircase {
    n: usize,
    coeffs: Vec<Vec<i64>>,
    rhs: Vec<i64>,
}

impl Staircase {
    fn contains(&self, a: &[u32]) -> bool {
        self.coeffs
            .iter()
            .zip(&self.rhs)
            .all(|(c, &r)| c.iter().zip(a).map(|(&x, &y)| x * y as i64).sum::<i64>() >= r)
    }

    /// Minimal elements inside `[0, cap]ⁿ`.
    fn minimal_points(&self, cap: u32, limits: &Limits) -> Result<Vec<Exponent>> {
        // suffix[j][k] = Σ_{j' ≥ j} coeffs[k][j'] · cap
        let m = self.coeffs.len();
        let mut suffix = vec![vec![0i64; m]; self.n + 1];
        for j in (0..self.n).rev() {
            suffix[j] = (0..m)
                .map(|k| suffix[j + 1][k] + self.coeffs[k][j] * cap as i64)
                .collect();
        }
        let mut out = Vec::new();
        let mut a = vec![0u32; self.n];
        let mut sums = vec![0i64; m];
        let mut steps = 0u64;
        self.search(
            0, cap, &suffix, &mut a, &mut sums, &mut out, &mut steps, limits,
        )?;
        out.sort();
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        &self,
        j: usize,
        cap: u32,
        suffix: &[Vec<i64>],
        a: &mut Exponent,
        sums: &mut Vec<i64>,
        out: &mut Vec<Exponent>,
        steps: &mut u64,
        limits: &Limits,
    ) -> Result<()> {
        *steps += 1;
        if *steps > limits.lattice_points {
            return Err(Error::ResourceExceeded {
                what: "staircase search nodes".into(),
                limit: limits.lattice_points,
            });
        }
        if (0..sums.len()).any(|k| sums[k] + suffix[j][k] < self.rhs[k]) {
            return Ok(());
        }
        if (0..sums.len()).all(|k| sums[k] >= self.rhs[k]) {
            // the zero completion is the only candidate below this prefix
            let mut minimal = true;
            for t in 0..j {
                if a[t] > 0 {
                    a[t] -= 1;
                    minimal &= !self.contains(a);
                    a[t] += 1;
                }
            }
            if minimal {
                out.push(a.clone());
            }
            return Ok(());
        }
        if j == self.n {
            return Ok(());
        }
        for v in 0..=cap {
            a[j] = v;
            for (k, s) in sums.iter_mut().enumerate() {
                *s += self.coeffs[k][j] * v as i64;
            }
            let r = self.search(j + 1, cap, suffix, a, sums, out, steps, limits);
            for (k, s) in sums.iter_mut().enumerate() {
                *s -= self.coeffs[k][j] * v as i64;
            }
            r?;
        }
        a[j] = 0;
        Ok(())
    }
}

/// An upward-closed set of exponents in the form the difference search needs.
enum UpSet<'a> {
    Stair(&'a Staircase),
    Gens(&'a [Exponent]),
}

/// Incremental membership of the zero and the `cap` completion of a prefix.
enum Tracker {
    Stair {
        coeffs: Vec<Vec<i64>>,
        rhs: Vec<i64>,
        /// `suffix[j][k] = cap · Σ_{t ≥ j} coeffs[k][t]`
        suffix: Vec<Vec<i64>>,
        /// prefix sums, one row per depth
        sums: Vec<Vec<i64>>,
    },
    Gens {
        /// `le[t][v]`: generators with `g_t ≤ v`
        le: Vec<Vec<Vec<u64>>>,
        /// `zero[j]`: generators vanishing on `j..n`
        zero: Vec<Vec<u64>>,
        /// generators dividing the prefix, one row per depth
        alive: Vec<Vec<u64>>,
    },
}

impl Tracker {
    fn new(set: &UpSet<'_>, n: usize, cap: u32) -> Tracker {
        match set {
            UpSet::Stair(st) => {
                let m = st.coeffs.len();
                let mut suffix = vec![vec![0i64; m]; n + 1];
                for j in (0..n).rev() {
                    suffix[j] = (0..m)
                        .map(|k| suffix[j + 1][k] + st.coeffs[k][j] * cap as i64)
                        .collect();
                }
                Tracker::Stair {
                    coeffs: st.coeffs.clone(),
                    rhs: st.rhs.clone(),
                    suffix,
                    sums: vec![vec![0; m]; n + 1],
                }
            }
            UpSet::Gens(gens) => {
                let words = gens.len().div_ceil(64).max(1);
                let bit = |i: usize| (i / 64, 1u64 << (i % 64));
                let mut le = vec![vec![vec![0u64; words]; cap as usize + 1]; n];
                let mut zero = vec![vec![0u64; words]; n + 1];
                for (i, g) in gens.iter().enumerate() {
                    let (w, b) = bit(i);
                    for t in 0..n {
                        for v in g[t]..=cap {
                            le[t][v as usize][w] |= b;
                        }
                    }
                    for j in 0..=n {
                        if g[j..].iter().all(|&x| x == 0) {
                            zero[j][w] |= b;
                        }
                    }
                }
                let mut alive = vec![vec![0u64; words]; n + 1];
                for (i, _) in gens.iter().enumerate() {
                    let (w, b) = bit(i);
                    alive[0][w] |= b;
                }
                Tracker::Gens { le, zero, alive }
            }
        }
    }

    /// Records `a_j = v`, giving the state at depth `j + 1`.
    fn set(&mut self, j: usize, v: u32) {
        match self {
            Tracker::Stair { coeffs, sums, .. } => {
                let (lo, hi) = sums.split_at_mut(j + 1);
                for (k, s) in hi[0].iter_mut().enumerate() {
                    *s = lo[j][k] + coeffs[k][j] * v as i64;
                }
            }
            Tracker::Gens { le, alive, .. } => {
                let (lo, hi) = alive.split_at_mut(j + 1);
                for (w, x) in hi[0].iter_mut().enumerate() {
                    *x = lo[j][w] & le[j][v as usize][w];
                }
            }
        }
    }

    /// Whether the prefix of length `j` completed by zeros lies in the set.
    fn zero_in(&self, j: usize) -> bool {
        match self {
            Tracker::Stair { rhs, sums, .. } => sums[j].iter().zip(rhs).all(|(s, r)| s >= r),
            Tracker::Gens { zero, alive, .. } => {
                alive[j].iter().zip(&zero[j]).any(|(a, z)| a & z != 0)
            }
        }
    }

    /// Whether the prefix of length `j` completed by `cap` lies in the set.
    fn cap_in(&self, j: usize) -> bool {
        match self {
            Tracker::Stair {
                rhs, suffix, sums, ..
            } => (0..rhs.len()).all(|k| sums[j][k] + suffix[j][k] >= rhs[k]),
            Tracker::Gens { .. } => unreachable!("only the target side needs cap completions"),
        }
    }
}

/// Some `a ∈ [0, cap]ⁿ` with `a ∈ A` and `a ∉ B`, both closed upwards; the
/// answer is lowered to a minimal element of `A` (still outside `B`).
fn find_difference(
    n: usize,
    cap: u32,
    a_set: &Staircase,
    b_set: UpSet<'_>,
    limits: &Limits,
) -> Result<Option<Exponent>> {
    struct Search<'s> {
        cap: u32,
        ta: Tracker,
        tb: Tracker,
        a: Exponent,
        steps: u64,
        limits: &'s Limits,
    }
    impl Search<'_> {
        fn go(&mut self, j: usize) -> Result<bool> {
            self.steps += 1;
            if self.steps > self.limits.lattice_points {
                return Err(Error::ResourceExceeded {
                    what: "ideal difference search nodes".into(),
                    limit: self.limits.lattice_points,
                });
            }
            if self.tb.zero_in(j) {
                return Ok(false);
            }
            if self.ta.zero_in(j) {
                return Ok(true);
            }
            if j == self.a.len() || !self.ta.cap_in(j) {
                return Ok(false);
            }
            for v in 0..=self.cap {
                self.a[j] = v;
                self.ta.set(j, v);
                self.tb.set(j, v);
                if self.go(j + 1)? {
                    return Ok(true);
                }
            }
            self.a[j] = 0;
            Ok(false)
        }
    }
    let mut search = Search {
        cap,
        ta: Tracker::new(&UpSet::Stair(a_set), n, cap),
        tb: Tracker::new(&b_set, n, cap),
        a: vec![0; n],
        steps: 0,
        limits,
    };
    if !search.go(0)? {
        return Ok(None);
    }
    let mut a = search.a;
    for t in 0..n {
        while a[t] > 0 {
            a[t] -= 1;
            if !a_set.contains(&a) {
                a[t] += 1;
                break;
            }
        }
    }
    Ok(Some(a))
}

fn squarefree(ideal: &MonomialIdeal) -> bool {
    ideal.max_exponent() <= 1
}

/// Cover inequalities `⟨a, u_k⟩ ≥ i` of `I^(i) = 𝔭₁^i ∩ ⋯ ∩ 𝔭_s^i`.
fn symbolic_staircase(c: &Clutter, i: u32) -> Staircase {
    let covers = minimal_covers(c);
    Staircase {
        n: c.n(),
        coeffs: covers
            .covers
            .iter()
            .map(|cov| {
                let mut u = vec![0i64; c.n()];
                for &v in cov {
                    u[v] = 1;
                }
                u
            })
            .collect(),
        rhs: vec![i as i64; covers.covers.len()],
    }
}

/// `I^(i)` for the edge ideal of `c`.
pub fn symbolic_power(c: &Clutter, i: u32, limits: &Limits) -> Result<MonomialIdeal> {
    if i == 0 {
        return usage("powers start at 1");
    }
    let gens = symbolic_staircase(c, i).minimal_points(i, limits)?;
    MonomialIdeal::new(c.n(), gens)
}

/// Facets `⟨c, a⟩ ≥ r` of the Newton polyhedron `conv(gens) + ℝ₊ⁿ`.
#[derive(Debug, Clone)]
pub struct NewtonPolyhedron {
    base: Staircase,
    gens: Vec<Exponent>,
    max_exponent: u32,
}

impl NewtonPolyhedron {
    pub fn of(ideal: &MonomialIdeal, limits: &Limits) -> Result<Self> {
        if ideal.is_zero() {
            return usage("the zero ideal has no Newton polyhedron");
        }
        let n = ideal.n;
        let vertices = ideal
            .gens
            .iter()
            .map(|g| {
                g.iter()
                    .map(|&x| num_rational::BigRational::from_integer(x.into()))
                    .collect()
            })
            .collect();
        let rays: Vec<IntVec> = (0..n).map(|j| unit(n, j)).collect();
        let h = v_to_h(&VRep::new(n, vertices, rays, Vec::new())?, limits)?;
        if !h.eqs.is_empty() {
            return Err(Error::Internal(
                "Newton polyhedron is not full-dimensional".into(),
            ));
        }
        let small = |x: &num_bigint::BigInt| {
            x.to_i64()
                .ok_or_else(|| Error::Internal("Newton polyhedron facet too large".into()))
        };
        let mut coeffs = Vec::new();
        let mut rhs = Vec::new();
        for f in &h.ineqs {
            // ⟨normal, x⟩ ≤ rhs with normal ≤ 0 becomes ⟨−normal, x⟩ ≥ −rhs
            if f.normal.iter().any(|x| x.is_positive()) {
                return Err(Error::Internal("Newton facet with positive normal".into()));
            }
            coeffs.push(
                f.normal
                    .iter()
                    .map(|x| small(&-x))
                    .collect::<Result<Vec<_>>>()?,
            );
            rhs.push(small(&-&f.rhs)?);
        }
        Ok(NewtonPolyhedron {
            base: Staircase { n, coeffs, rhs },
            gens: ideal.gens.clone(),
            max_exponent: ideal.max_exponent(),
        })
    }

    fn scaled(&self, i: u32) -> Staircase {
        Staircase {
            n: self.base.n,
            coeffs: self.base.coeffs.clone(),
            rhs: self.base.rhs.iter().map(|r| r * i as i64).collect(),
        }
    }

    /// Whether `x^a` lies in the integral closure of `I^i`.
    pub fn contains(&self, a: &[u32], i: u32) -> bool {
        self.scaled(i).contains(a)
    }

    /// Minimal generators of the integral closure of `I^i`.
    pub fn closure_power(&self, i: u32, limits: &Limits) -> Result<MonomialIdeal> {
        let gens = self
            .scaled(i)
            .minimal_points(i * self.max_exponent, limits)?;
        MonomialIdeal::new(self.base.n, gens)
    }
}

/// Integral closure of `I^i`: `a ∈ i·(conv(gens) + ℝ₊ⁿ)`.
pub fn closure_power(ideal: &MonomialIdeal, i: u32, limits: &Limits) -> Result<MonomialIdeal> {
    if i == 0 {
        return usage("powers start at 1");
    }
    NewtonPolyhedron::of(ideal, limits)?.closure_power(i, limits)
}

/// Outcome of a power-bounded comparison: conclusive when it fails,
/// evidence only when it holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum UptoVerdict {
    HoldsUpTo { r: u32 },
    FailsAt { i: u32, witness: Exponent },
}

impl UptoVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, UptoVerdict::HoldsUpTo { .. })
    }
}

pub const DEFAULT_POWER_BOUND: u32 = 3;

/// `I^i = I^(i)` for `i = 1..=r`; the witness is a minimal generator of
/// `I^(i)` outside `I^i`.
pub fn is_ntf_upto(c: &Clutter, r: u32, limits: &Limits) -> Result<UptoVerdict> {
    if r == 0 {
        return usage("the power bound must be at least 1");
    }
    let ideal = edge_ideal(c);
    for i in 1..=r {
        let p = power(&ideal, i)?;
        let s = symbolic_staircase(c, i);
        if let Some(witness) = find_difference(c.n(), i, &s, UpSet::Gens(&p.gens), limits)? {
            return Ok(UptoVerdict::FailsAt { i, witness });
        }
    }
    Ok(UptoVerdict::HoldsUpTo { r })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalityReport {
    /// closure of `I^i` equals `I^i`; witness in the closure but not in `I^i`
    pub normal: UptoVerdict,
    /// closure of `I^i` equals `I^(i)`; witness in `I^(i)` but not in the closure
    pub closure_is_symbolic: UptoVerdict,
}

pub fn is_normal_upto(c: &Clutter, r: u32, limits: &Limits) -> Result<NormalityReport> {
    if r == 0 {
        return usage("the power bound must be at least 1");
    }
    let newton = NewtonPolyhedron::of(&edge_ideal(c), limits)?;
    let normal = normality_with(&newton, r, limits)?;
    let mut closure_is_symbolic = UptoVerdict::HoldsUpTo { r };
    for i in 1..=r {
        let s = symbolic_staircase(c, i);
        let cl = newton.scaled(i);
        if let Some(witness) = find_difference(c.n(), i, &s, UpSet::Stair(&cl), limits)? {
            closure_is_symbolic = UptoVerdict::FailsAt { i, witness };
            break;
        }
    }
    Ok(NormalityReport {
        normal,
        closure_is_symbolic,
    })
}

fn normality_with(newton: &NewtonPolyhedron, r: u32, limits: &Limits) -> Result<UptoVerdict> {
    let ideal = MonomialIdeal {
        n: newton.base.n,
        gens: newton.gens.clone(),
    };
    for i in 1..=r {
        let p = power(&ideal, i)?;
        let cl = newton.scaled(i);
        let cap = i * newton.max_exponent;
        if let Some(witness) = find_difference(ideal.n, cap, &cl, UpSet::Gens(&p.gens), limits)? {
            return Ok(UptoVerdict::FailsAt { i, witness });
        }
    }
    Ok(UptoVerdict::HoldsUpTo { r })
}

/// Only the normality half of [`is_normal_upto`], stopping at the first failure.
pub fn normality_upto(c: &Clutter, r: u32, limits: &Limits) -> Result<UptoVerdict> {
    if r == 0 {
        return usage("the power bound must be at least 1");
    }
    normality_with(&NewtonPolyhedron::of(&edge_ideal(c), limits)?, r, limits)
}

/// `I^i ⊆ closure(I^i) ⊆ I^(i)` for the edge ideal of `c`.
pub fn chain_holds(c: &Clutter, i: u32, limits: &Limits) -> Result<bool> {
    let ideal = edge_ideal(c);
    let p = power(&ideal, i)?;
    let cl = closure_power(&ideal, i, limits)?;
    let s = symbolic_power(c, i, limits)?;
    Ok(squarefree(&ideal) && p.is_subset(&cl)? && cl.is_subset(&s)?)
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

    fn c4() -> Clutter {
        cl(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]])
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn edge_ideal_and_powers() {
        let i = edge_ideal(&triangle());
        assert_eq!(i.gens(), &[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        let p2 = power(&i, 2).unwrap();
        assert_eq!(p2.gens().len(), 6);
        assert!(p2.gens().iter().all(|g| g.iter().sum::<u32>() == 4));
        assert_eq!(power(&i, 1).unwrap(), i);
        let principal = MonomialIdeal::new(3, vec![vec![1, 1, 1]]).unwrap();
        assert_eq!(power(&principal, 3).unwrap().gens(), &[vec![3, 3, 3]]);
    }

    #[test]
    fn triangle_symbolic_square() {
        let s = symbolic_power(&triangle(), 2, &lim()).unwrap();
        assert_eq!(
            s.gens(),
            &[vec![0, 2, 2], vec![1, 1, 1], vec![2, 0, 2], vec![2, 2, 0]]
        );
        assert!(s.contains(&[1, 1, 1]).unwrap());
        assert!(!power(&edge_ideal(&triangle()), 2)
            .unwrap()
            .contains(&[1, 1, 1])
            .unwrap());
        assert_eq!(
            symbolic_power(&triangle(), 1, &lim()).unwrap(),
            edge_ideal(&triangle())
        );
    }

    #[test]
    fn closures() {
        let i = edge_ideal(&triangle());
        assert_eq!(closure_power(&i, 2, &lim()).unwrap(), power(&i, 2).unwrap());
        assert_eq!(closure_power(&i, 1, &lim()).unwrap(), i);
        let p = MonomialIdeal::new(2, vec![vec![2, 0]]).unwrap();
        assert_eq!(closure_power(&p, 1, &lim()).unwrap().gens(), &[vec![2, 0]]);
        // (x², y²) has xy in its closure
        let q = MonomialIdeal::new(2, vec![vec![2, 0], vec![0, 2]]).unwrap();
        assert!(closure_power(&q, 1, &lim())
            .unwrap()
            .contains(&[1, 1])
            .unwrap());
    }

    #[test]
    fn verdicts() {
        assert_eq!(
            is_ntf_upto(&triangle(), 3, &lim()).unwrap(),
            UptoVerdict::FailsAt {
                i: 2,
                witness: vec![1, 1, 1]
            }
        );
        assert!(is_ntf_upto(&c4(), 3, &lim()).unwrap().holds());
        let r = is_normal_upto(&triangle(), 3, &lim()).unwrap();
        assert!(r.normal.holds());
        assert_eq!(
            r.closure_is_symbolic,
            UptoVerdict::FailsAt {
                i: 2,
                witness: vec![1, 1, 1]
            }
        );
        let r = is_normal_upto(&c4(), 3, &lim()).unwrap();
        assert!(r.normal.holds() && r.closure_is_symbolic.holds());
        assert_eq!(
            symbolic_power(&c4(), 2, &lim()).unwrap(),
            power(&edge_ideal(&c4()), 2).unwrap()
        );
        let b = crate::combinat::blocker(&c4());
        assert!(is_ntf_upto(&b, 3, &lim()).unwrap().holds());
    }

    #[test]
    fn chain() {
        for c in [triangle(), c4()] {
            for i in 1..=3 {
                assert!(chain_holds(&c, i, &lim()).unwrap());
            }
        }
    }

    #[test]
    fn ring_mismatch() {
        let a = edge_ideal(&triangle());
        let b = edge_ideal(&c4());
        assert!(a.equals(&b).is_err());
        assert!(a.contains(&[1, 1]).is_err());
    }
}
