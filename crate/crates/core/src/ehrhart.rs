//! Invariants of the Ehrhart ring of `P = conv(v_1, …, v_q)` for a clutter.
//!
//! With `D = dim P` and `L(b) = |ℤⁿ ∩ bP|`, the series `Σ L(b) zᵇ` equals
//! `h(z)/(1−z)^{D+1}`, where `h_k = Σ_j (−1)^j C(D+1, j) L(k−j)`. The
//! a-invariant is `deg h − (D+1)`, and independently `−min{k ≥ 1 : relint(kP)`
//! has a lattice point`}`. The regularity is `D + 1 + a = deg h`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinat::{covering_number, is_uniform, is_unmixed, minimal_covers, Clutter};
use crate::error::{usage, Error, Result};
use crate::kernel::{dot, IntVec, Rational};
use crate::lattice::{is_hilbert_basis, ConeWithLattice};
use crate::limits::Limits;
use crate::polyhedron::Polytope;

/// Everything computed about `A(P)` for one clutter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EhrhartAnalysis {
    pub n: usize,
    pub dim: i64,
    /// `L(0), …, L(D+1)`.
    pub values: Vec<u64>,
    pub hvector: Vec<u64>,
    /// Coefficients of the Ehrhart polynomial, constant term first.
    pub polynomial: Vec<Rational>,
    pub a_invariant: i64,
    pub regularity: i64,
    pub is_ehrhart: bool,
    /// A lattice point of `ℝ₊ℬ` outside `ℕℬ` when not Ehrhart.
    pub witness: Option<IntVec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EhrhartVerdict {
    pub is_ehrhart: bool,
    pub witness: Option<IntVec>,
}

/// Whether the lifted vectors `(v_i, 1)` form a Hilbert basis.
pub fn is_ehrhart_clutter(c: &Clutter, limits: &Limits) -> Result<EhrhartVerdict> {
    let r = is_hilbert_basis(&c.lifted_vectors(), limits)?;
    Ok(EhrhartVerdict {
        is_ehrhart: r.verdict,
        witness: r.missing.into_iter().next(),
    })
}

pub fn polytope(c: &Clutter, limits: &Limits) -> Result<Polytope> {
    Polytope::from_points(c.n(), &c.vectors(), limits)
}

/// `|ℤⁿ ∩ bP|`.
pub fn ehrhart_function(c: &Clutter, b: u64, limits: &Limits) -> Result<u64> {
    polytope(c, limits)?.count(b)
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// h-vector from `L(0..=D+1)`; the extra value must give `h_{D+1} = 0`.
pub fn hvector_from_values(dim: usize, values: &[u64]) -> Result<Vec<u64>> {
    if values.len() != dim + 2 {
        return usage("need the values L(0), …, L(D+1)");
    }
    let mut h = Vec::with_capacity(dim + 2);
    for k in 0..=dim + 1 {
        let mut s = BigInt::zero();
        for j in 0..=k {
            let term = binomial(dim as u64 + 1, j as u64) * BigInt::from(values[k - j]);
            if j % 2 == 0 {
                s += term;
            } else {
                s -= term;
            }
        }
        h.push(s);
    }
    if !h[dim + 1].is_zero() {
        return Err(Error::Internal(format!(
            "lattice-point counts {values:?} are not a polynomial of degree {dim}"
        )));
    }
    h.pop();
    while h.len() > 1 && h.last().is_some_and(Zero::is_zero) {
        h.pop();
    }
    h.into_iter()
        .map(|x| {
            if x.is_negative() {
                Err(Error::Internal(format!("negative h-vector entry {x}")))
            } else {
                Ok(u64::try_from(x).expect("h-vector entry fits u64"))
            }
        })
        .collect()
}

/// Interpolating polynomial through `(b, values[b])`, `b = 0..values.len()`,
/// by Newton forward differences; coefficients constant term first.
pub fn interpolate(values: &[u64]) -> Vec<Rational> {
    let m = values.len();
    let mut diff: Vec<Rational> = values
        .iter()
        .map(|&v| Rational::from_integer(BigInt::from(v)))
        .collect();
    let mut leading = Vec::with_capacity(m);
    for k in 0..m {
        leading.push(diff[0].clone());
        for i in 0..m - k - 1 {
            diff[i] = &diff[i + 1] - &diff[i];
        }
    }
    // Σ Δᵏ L(0) · C(b, k), expanded into monomials
    let mut coeffs = vec![Rational::zero(); m];
    let mut basis = vec![Rational::one()]; // C(b, 0)
    for (k, d) in leading.iter().enumerate() {
        for (i, c) in basis.iter().enumerate() {
            coeffs[i] += d * c;
        }
        // C(b, k+1) = C(b, k) (b − k)/(k + 1)
        let mut next = vec![Rational::zero(); basis.len() + 1];
        let kk = Rational::from_integer(BigInt::from(k as u64));
        let den = Rational::from_integer(BigInt::from(k as u64 + 1));
        for (i, c) in basis.iter().enumerate() {
            next[i + 1] += c / &den;
            next[i] -= c * &kk / &den;
        }
        basis = next;
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

/// `−min{k ≥ 1 : relint(kP) ∩ ℤⁿ ≠ ∅}`, searched over `k = 1..=D+1`.
pub fn a_invariant_interior_of(p: &Polytope) -> Result<i64> {
    let d = p.dim().max(0) as u64;
    for k in 1..=d + 1 {
        if p.count_interior(k)? > 0 {
            return Ok(-(k as i64));
        }
    }
    Err(Error::Internal(format!(
        "no interior lattice point in kP for k ≤ {}",
        d + 1
    )))
}

pub fn analyze(c: &Clutter, limits: &Limits) -> Result<EhrhartAnalysis> {
    let p = polytope(c, limits)?;
    let dim = p.dim();
    let d = dim.max(0) as u64;
    let values: Vec<u64> = (0..=d + 1)
        .into_par_iter()
        .map(|b| p.count(b))
        .collect::<Result<_>>()?;
    let hvector = hvector_from_values(d as usize, &values)?;
    let polynomial = interpolate(&values[..=d as usize]);
    let s = hvector.len() as i64 - 1;
    let a_series = s - (dim + 1);
    let a_interior = a_invariant_interior_of(&p)?;
    if a_series != a_interior {
        return Err(Error::Internal(format!(
            "a-invariant from the series ({a_series}) differs from the interior route ({a_interior})"
        )));
    }
    let regularity = dim + 1 + a_series;
    if regularity != s {
        return Err(Error::Internal("regularity differs from deg h".into()));
    }
    let v = is_ehrhart_clutter(c, limits)?;
    Ok(EhrhartAnalysis {
        n: c.n(),
        dim,
        values,
        hvector,
        polynomial,
        a_invariant: a_series,
        regularity,
        is_ehrhart: v.is_ehrhart,
        witness: v.witness,
    })
}

pub fn hvector(c: &Clutter, limits: &Limits) -> Result<Vec<u64>> {
    let p = polytope(c, limits)?;
    let d = p.dim().max(0) as u64;
    let values: Vec<u64> = (0..=d + 1).map(|b| p.count(b)).collect::<Result<_>>()?;
    hvector_from_values(d as usize, &values)
}

pub fn a_invariant_series(c: &Clutter, limits: &Limits) -> Result<i64> {
    let h = hvector(c, limits)?;
    let dim = polytope(c, limits)?.dim();
    Ok(h.len() as i64 - 1 - (dim + 1))
}

pub fn a_invariant_interior(c: &Clutter, limits: &Limits) -> Result<i64> {
    a_invariant_interior_of(&polytope(c, limits)?)
}

pub fn regularity(c: &Clutter, limits: &Limits) -> Result<i64> {
    Ok(analyze(c, limits)?.regularity)
}

/// Bounds for uniform, unmixed MFMC clutters: `a ≤ −g`, `reg ≤ (d−1)(g−1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem22Report {
    pub uniform: Option<usize>,
    pub unmixed: bool,
    pub mfmc: bool,
    pub hypotheses_met: bool,
    pub g: usize,
    pub is_ehrhart: bool,
    pub a_invariant: i64,
    pub regularity: i64,
    pub a_bound: i64,
    /// `(d−1)(g−1)`, when uniform.
    pub reg_bound: Option<i64>,
    pub a_within_bound: bool,
    pub reg_within_bound: Option<bool>,
    pub a_tight: bool,
    pub reg_tight: Option<bool>,
    /// Whether every claim holds (vacuously true when hypotheses fail).
    pub holds: bool,
}

pub fn check_theorem22(c: &Clutter, limits: &Limits) -> Result<Theorem22Report> {
    let uniform = is_uniform(c);
    let unmixed = is_unmixed(c);
    let mfmc = crate::tdi::is_mfmc(c, limits)?.verdict == crate::tdi::TdiVerdict::Tdi;
    let hypotheses_met = uniform.is_some() && unmixed && mfmc;
    let an = analyze(c, limits)?;
    let g = covering_number(c);
    let a_bound = -(g as i64);
    let reg_bound = uniform.map(|d| (d as i64 - 1) * (g as i64 - 1));
    let a_within_bound = an.a_invariant <= a_bound;
    let reg_within_bound = reg_bound.map(|r| an.regularity <= r);
    let holds =
        !hypotheses_met || (an.is_ehrhart && a_within_bound && reg_within_bound == Some(true));
    Ok(Theorem22Report {
        uniform,
        unmixed,
        mfmc,
        hypotheses_met,
        g,
        is_ehrhart: an.is_ehrhart,
        a_invariant: an.a_invariant,
        regularity: an.regularity,
        a_bound,
        reg_bound,
        a_within_bound,
        reg_within_bound,
        a_tight: an.a_invariant == a_bound,
        reg_tight: reg_bound.map(|r| an.regularity == r),
        holds,
    })
}

/// One minimal generator of the canonical module with its degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalGenerator {
    pub vector: IntVec,
    pub degree: u64,
    /// `a_i ≥ 1` and `Σ_{i∈C_k} a_i ≥ a_{n+1} + 1` for every minimal cover `C_k`
    /// meeting some edge twice; reported only for uniform, unmixed inputs.
    pub cover_inequalities: Option<bool>,
}

/// Minimal generators (up to degree `D + 2`) of the ideal of interior lattice
/// points of `ℝ₊ℬ`, which for Ehrhart clutters is the canonical module.
pub fn canonical_degrees(c: &Clutter, limits: &Limits) -> Result<Vec<CanonicalGenerator>> {
    if !is_ehrhart_clutter(c, limits)?.is_ehrhart {
        return usage("canonical_degrees needs an Ehrhart clutter");
    }
    let p = polytope(c, limits)?;
    let d = p.dim().max(0) as u64;
    let mut interior: Vec<IntVec> = Vec::new();
    for k in 1..=d + 2 {
        for mut x in p.relative_interior_points(k)? {
            x.push(BigInt::from(k));
            interior.push(x);
        }
    }
    let cone = ConeWithLattice::new(c.n() + 1, c.lifted_vectors(), limits)?;
    // covers whose form ⟨u_k, x⟩ − x_{n+1} vanishes on every generator cut out
    // equations of ℝℬ, not facets, and are skipped
    let covers = (is_uniform(c).is_some() && is_unmixed(c)).then(|| {
        let vs = c.vectors();
        minimal_covers(c)
            .vectors
            .into_iter()
            .filter(|u| vs.iter().any(|v| dot(&u[..], &v[..]) != BigInt::one()))
            .collect::<Vec<_>>()
    });
    let last = c.n();
    let mut out = Vec::new();
    for (i, x) in interior.iter().enumerate() {
        let reducible = interior[..i].iter().any(|y| {
            y[last] < x[last] && {
                let diff: IntVec = x.iter().zip(y).map(|(a, b)| a - b).collect();
                cone.contains(&diff)
            }
        });
        if reducible {
            continue;
        }
        let cover_inequalities = covers.as_ref().map(|cs| {
            x[..last].iter().all(|a| a >= &BigInt::one())
                && cs.iter().all(|u| dot(&u[..], &x[..last]) > x[last])
        });
        out.push(CanonicalGenerator {
            degree: u64::try_from(&x[last]).expect("small degree"),
            vector: x.clone(),
            cover_inequalities,
        });
    }
    let a = a_invariant_interior_of(&p)?;
    if out.first().map(|g| g.degree as i64) != Some(-a) {
        return Err(Error::Internal(
            "least canonical degree differs from −a".into(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::blocker;
    use crate::kernel::{ivec, rat};

    fn cl(n: usize, edges: &[&[usize]]) -> Clutter {
        Clutter::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    fn k22() -> Clutter {
        cl(4, &[&[0, 2], &[0, 3], &[1, 2], &[1, 3]])
    }

    fn blocker_c4() -> Clutter {
        blocker(&cl(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]))
    }

    fn triangle() -> Clutter {
        cl(3, &[&[0, 1], &[1, 2], &[0, 2]])
    }

    #[test]
    fn hvector_binomial_transform() {
        // unit square: L(b) = (b+1)²
        assert_eq!(hvector_from_values(2, &[1, 4, 9, 16]).unwrap(), vec![1, 1]);
        assert!(hvector_from_values(2, &[1, 4, 9, 17]).is_err());
    }

    #[test]
    fn interpolation() {
        assert_eq!(
            interpolate(&[1, 4, 9]),
            vec![rat(1, 1), rat(2, 1), rat(1, 1)]
        );
    }

    #[test]
    fn square_invariants() {
        let c = k22();
        assert_eq!(ehrhart_function(&c, 0, &Limits::default()).unwrap(), 1);
        assert_eq!(ehrhart_function(&c, 2, &Limits::default()).unwrap(), 9);
        let a = analyze(&c, &Limits::default()).unwrap();
        assert_eq!(a.hvector, vec![1, 1]);
        assert_eq!(a.a_invariant, -2);
        assert_eq!(a.regularity, 1);
        assert!(a.is_ehrhart);
    }

    #[test]
    fn segment_invariants() {
        let c = blocker_c4();
        assert_eq!(ehrhart_function(&c, 3, &Limits::default()).unwrap(), 4);
        assert_eq!(hvector(&c, &Limits::default()).unwrap(), vec![1]);
        assert_eq!(a_invariant_series(&c, &Limits::default()).unwrap(), -2);
        assert_eq!(a_invariant_interior(&c, &Limits::default()).unwrap(), -2);
        assert_eq!(regularity(&c, &Limits::default()).unwrap(), 0);
    }

    #[test]
    fn point_invariants() {
        let c = Clutter::raw(2, vec![vec![0, 1]]).unwrap();
        assert_eq!(hvector(&c, &Limits::default()).unwrap(), vec![1]);
        assert_eq!(a_invariant_series(&c, &Limits::default()).unwrap(), -1);
        assert_eq!(a_invariant_interior(&c, &Limits::default()).unwrap(), -1);
    }

    #[test]
    fn triangle_first_interior_dilation_is_three() {
        let a = analyze(&triangle(), &Limits::default()).unwrap();
        assert_eq!(a.dim, 2);
        assert_eq!(a.hvector, vec![1]);
        assert_eq!(a.a_invariant, -3);
        assert!(a.is_ehrhart);
    }

    #[test]
    fn theorem22_reports() {
        let r = check_theorem22(&k22(), &Limits::default()).unwrap();
        assert!(r.hypotheses_met && r.holds && r.a_tight && r.reg_tight == Some(true));
        let r = check_theorem22(&blocker_c4(), &Limits::default()).unwrap();
        assert!(r.hypotheses_met && r.holds);
        assert_eq!((r.a_invariant, r.a_bound, r.regularity), (-2, -2, 0));
        let r = check_theorem22(&triangle(), &Limits::default()).unwrap();
        assert!(!r.mfmc && !r.hypotheses_met);
    }

    #[test]
    fn canonical_generators() {
        let g = canonical_degrees(&blocker_c4(), &Limits::default()).unwrap();
        assert_eq!(g[0].degree, 2);
        assert_eq!(g[0].vector, ivec(&[1, 1, 1, 1, 2]));
        let g = canonical_degrees(&k22(), &Limits::default()).unwrap();
        assert_eq!(g[0].degree, 2);
        assert_eq!(g[0].vector, ivec(&[1, 1, 1, 1, 2]));
        assert!(g.iter().all(|x| x.cover_inequalities == Some(true)));
    }
}
