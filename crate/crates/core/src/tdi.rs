//! Total dual integrality, idealness and the max-flow min-cut property.
//!
//! A system `xA ≤ w` (columns `v_i` of `A`, one constraint `⟨v_i, x⟩ ≤ w_i`
//! each) is TDI iff for every minimal face `F` of `P = {x : xA ≤ w}` the
//! columns active on `F` form a Hilbert basis. Minimal faces suffice because
//! every face's active set is contained in that of a minimal face below it.
//!
//! Covering systems `{x ≥ 0, xA ≥ 1}` are encoded with columns `-v_i`
//! (right-hand side `-1`) followed by `-e_j` (right-hand side `0`).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{clique_clutter, is_perfect_small, Clutter, SimpleGraph};
use crate::error::{usage, Error, Result};
use crate::kernel::{ivec, unit, IntVec, RatVector, Rational};
use crate::lattice::is_hilbert_basis;
use crate::limits::Limits;
use crate::polyhedron::{is_integral, minimal_faces, HRep, Inequality, IntegralityReport};

/// The system `xA ≤ w` given by the columns of `A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearSystem {
    pub columns: Vec<IntVec>,
    pub w: IntVec,
}

impl LinearSystem {
    pub fn new(columns: Vec<IntVec>, w: IntVec) -> Result<Self> {
        if columns.len() != w.len() {
            return usage("one right-hand side per column is required");
        }
        let Some(n) = columns.first().map(Vec::len) else {
            return usage("a system needs at least one column");
        };
        if columns.iter().any(|c| c.len() != n) {
            return usage("columns of different lengths");
        }
        if columns.iter().any(|c| c.iter().all(Zero::is_zero)) {
            return usage("zero column");
        }
        Ok(LinearSystem { columns, w })
    }

    pub fn from_i64(columns: &[&[i64]], w: &[i64]) -> Result<Self> {
        Self::new(columns.iter().map(|c| ivec(c)).collect(), ivec(w))
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.columns[0].len()
    }

    pub fn polyhedron(&self) -> HRep {
        let ineqs = self
            .columns
            .iter()
            .zip(&self.w)
            .map(|(c, w)| Inequality::new(c.clone(), w.clone()))
            .collect();
        HRep::new(self.n(), ineqs, Vec::new()).expect("columns share one length")
    }

    /// `H(A, w) = {(v_i, w_i)}`.
    pub fn lifted(&self) -> Vec<IntVec> {
        self.columns
            .iter()
            .zip(&self.w)
            .map(|(c, w)| {
                let mut v = c.clone();
                v.push(w.clone());
                v
            })
            .collect()
    }

    /// `x ≥ 0; xA ≤ w` as `x[A | −I] ≤ (w | 0)`.
    pub fn with_nonnegativity(&self) -> LinearSystem {
        let n = self.n();
        let mut columns = self.columns.clone();
        let mut w = self.w.clone();
        for j in 0..n {
            columns.push(unit(n, j).into_iter().map(|x| -x).collect());
            w.push(BigInt::zero());
        }
        LinearSystem { columns, w }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TdiVerdict {
    Tdi,
    NotTdi,
    /// The polyhedron is empty: no objective has a finite optimum.
    Vacuous,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceRecord {
    /// Indices of the active columns.
    pub active: Vec<usize>,
    pub point: RatVector,
    /// `None` when the check ran out of budget.
    pub hilbert_basis: Option<bool>,
    /// A lattice point of the active cone outside the semigroup.
    pub witness: Option<IntVec>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TdiCertificate {
    pub verdict: TdiVerdict,
    pub faces: Vec<FaceRecord>,
}

impl TdiCertificate {
    /// TDI, counting the vacuous case.
    pub fn holds(&self) -> bool {
        matches!(self.verdict, TdiVerdict::Tdi | TdiVerdict::Vacuous)
    }

    pub fn witness(&self) -> Option<&IntVec> {
        self.faces.iter().find_map(|f| f.witness.as_ref())
    }

    fn undecided(note: String) -> Self {
        TdiCertificate {
            verdict: TdiVerdict::Undecided,
            faces: vec![FaceRecord {
                active: Vec::new(),
                point: Vec::new(),
                hilbert_basis: None,
                witness: None,
                note: Some(note),
            }],
        }
    }
}

/// Face-by-face TDI certification; stops at the first failing face.
pub fn is_tdi(s: &LinearSystem, limits: &Limits) -> Result<TdiCertificate> {
    let faces = match minimal_faces(&s.polyhedron(), limits) {
        Ok(f) => f,
        Err(e) if e.is_budget() => return Ok(TdiCertificate::undecided(e.to_string())),
        Err(e) => return Err(e),
    };
    if faces.is_empty() {
        return Ok(TdiCertificate {
            verdict: TdiVerdict::Vacuous,
            faces: Vec::new(),
        });
    }
    let mut records = Vec::with_capacity(faces.len());
    for f in faces {
        let cols: Vec<IntVec> = f.active.iter().map(|&i| s.columns[i].clone()).collect();
        let mut rec = FaceRecord {
            active: f.active,
            point: f.point,
            hilbert_basis: Some(true),
            witness: None,
            note: None,
        };
        if cols.is_empty() {
            records.push(rec);
            continue;
        }
        match is_hilbert_basis(&cols, limits) {
            Ok(r) if r.verdict => records.push(rec),
            Ok(r) => {
                rec.hilbert_basis = Some(false);
                rec.witness = r.missing.into_iter().next();
                records.push(rec);
                return Ok(TdiCertificate {
                    verdict: TdiVerdict::NotTdi,
                    faces: records,
                });
            }
            Err(e) if e.is_budget() => {
                rec.hilbert_basis = None;
                rec.note = Some(e.to_string());
                records.push(rec);
                return Ok(TdiCertificate {
                    verdict: TdiVerdict::Undecided,
                    faces: records,
                });
            }
            Err(e) => return Err(e),
        }
    }
    Ok(TdiCertificate {
        verdict: TdiVerdict::Tdi,
        faces: records,
    })
}

/// `{x ≥ 0, xA ≥ 1}` in `≤`-form: columns `-v_i` (rhs `-1`), then `-e_j` (rhs `0`).
pub fn covering_system(c: &Clutter) -> LinearSystem {
    let n = c.n();
    let mut columns: Vec<IntVec> = c
        .vectors()
        .into_iter()
        .map(|v| v.into_iter().map(|x| -x).collect())
        .collect();
    let mut w: IntVec = vec![BigInt::from(-1); columns.len()];
    for j in 0..n {
        columns.push(unit(n, j).into_iter().map(|x| -x).collect());
        w.push(BigInt::zero());
    }
    LinearSystem { columns, w }
}

/// `Q(A) = {x ≥ 0, xA ≥ 1}`.
pub fn covering_polyhedron(c: &Clutter) -> HRep {
    covering_system(c).polyhedron()
}

/// Idealness: every vertex of `Q(A)` is integral; on failure a fractional vertex.
pub fn is_ideal_clutter(c: &Clutter, limits: &Limits) -> Result<IntegralityReport> {
    is_integral(&covering_polyhedron(c), limits)
}

/// MFMC as TDI-ness of the covering system.
pub fn is_mfmc(c: &Clutter, limits: &Limits) -> Result<TdiCertificate> {
    is_tdi(&covering_system(c), limits)
}

/// Evidence (not proof) for MFMC: for each `w ∈ {0..max_w}ⁿ`, the packing
/// program `max{⟨1,y⟩ : y ≥ 0, Ay ≤ w}` has an integral optimum. The LP value
/// is taken from the dual over the vertices of `Q(A)`; the integer value by
/// exhaustive search. Returns the first `w` where they differ.
pub fn mfmc_ilp_scan(c: &Clutter, max_w: u32, limits: &Limits) -> Result<Option<Vec<u32>>> {
    let n = c.n();
    let v = crate::polyhedron::h_to_v(&covering_polyhedron(c), limits)?;
    let masks: Vec<u64> = c.masks();
    let mut w = vec![0u32; n];
    loop {
        let lp = v
            .vertices
            .iter()
            .map(|x| {
                x.iter().zip(&w).fold(Rational::zero(), |acc, (xi, &wi)| {
                    acc + xi * BigInt::from(wi)
                })
            })
            .min()
            .expect("Q(A) has a vertex");
        let ip = max_packing(&masks, &w);
        if Rational::from_integer(BigInt::from(ip)) != lp {
            return Ok(Some(w));
        }
        let mut t = 0;
        loop {
            if t == n {
                return Ok(None);
            }
            w[t] += 1;
            if w[t] <= max_w {
                break;
            }
            w[t] = 0;
            t += 1;
        }
    }
}

/// `max Σ y_i` over integers `y ≥ 0` with `Σ_{i : j ∈ e_i} y_i ≤ w_j`.
fn max_packing(edges: &[u64], w: &[u32]) -> u32 {
    fn go(edges: &[u64], cap: &mut [u32], acc: u32, best: &mut u32) {
        let Some((&e, rest)) = edges.split_first() else {
            *best = (*best).max(acc);
            return;
        };
        // each remaining edge uses at least one unit of total capacity
        let room = cap.iter().sum::<u32>();
        if acc + room <= *best {
            return;
        }
        let members = crate::combinat::members(e);
        let most = members.iter().map(|&j| cap[j]).min().unwrap_or(0);
        for y in (0..=most).rev() {
            for &j in &members {
                cap[j] -= y;
            }
            go(rest, cap, acc + y, best);
            for &j in &members {
                cap[j] += y;
            }
        }
    }
    let mut cap = w.to_vec();
    let mut best = 0;
    go(edges, &mut cap, 0, &mut best);
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm41Report {
    /// `None` for an empty polyhedron.
    pub integral: Option<bool>,
    pub lifted_hilbert_basis: bool,
    pub tdi: TdiVerdict,
    /// False only when both hypotheses hold and the system is not TDI.
    pub implication_respected: bool,
}

/// Integral `P` and `H(A,w)` a Hilbert basis imply TDI.
pub fn thm41_check(s: &LinearSystem, limits: &Limits) -> Result<Thm41Report> {
    let integral = integrality(&s.polyhedron(), limits)?;
    let hb = is_hilbert_basis(&s.lifted(), limits)?.verdict;
    let tdi = is_tdi(s, limits)?.verdict;
    let hyp = integral == Some(true) && hb;
    Ok(Thm41Report {
        integral,
        lifted_hilbert_basis: hb,
        tdi,
        implication_respected: !hyp || matches!(tdi, TdiVerdict::Tdi | TdiVerdict::Undecided),
    })
}

fn integrality(h: &HRep, limits: &Limits) -> Result<Option<bool>> {
    match is_integral(h, limits) {
        Ok(r) => Ok(Some(r.integral)),
        Err(Error::Usage(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop42Report {
    pub tdi: TdiVerdict,
    pub integral: bool,
    pub hilbert_basis: bool,
    /// A lattice point of `ℝ₊H` outside `ℕH`, when `H` is not a Hilbert basis.
    pub witness: Option<IntVec>,
    pub agree: bool,
}

/// Both sides of the claimed equivalence for `x ≥ 0; xA ≤ w` with `A, w ≥ 0`:
/// TDI versus (`P` integral and `{(v_i,w_i)} ∪ {(−e_j, 0)}` a Hilbert basis).
pub fn prop42_check(s: &LinearSystem, limits: &Limits) -> Result<Prop42Report> {
    if s.columns
        .iter()
        .flatten()
        .chain(&s.w)
        .any(Signed::is_negative)
    {
        return usage("prop42_check needs a nonnegative matrix and right-hand side");
    }
    let full = s.with_nonnegativity();
    let tdi = is_tdi(&full, limits)?.verdict;
    // 0 ∈ P, so P is nonempty
    let integral = is_integral(&full.polyhedron(), limits)?.integral;
    let hb = is_hilbert_basis(&full.lifted(), limits)?;
    let rhs = integral && hb.verdict;
    Ok(Prop42Report {
        tdi,
        integral,
        hilbert_basis: hb.verdict,
        witness: hb.missing.into_iter().next(),
        agree: match tdi {
            TdiVerdict::Tdi | TdiVerdict::Vacuous => rhs,
            TdiVerdict::NotTdi => !rhs,
            TdiVerdict::Undecided => true,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundingReport {
    /// `{(v_i, w_i)} ∪ {e_{n+1}}` is a Hilbert basis.
    pub rounding: bool,
    pub tdi: TdiVerdict,
    pub integral: Option<bool>,
    /// For nonempty `P`: TDI ⇔ (`P` integral and rounding).
    pub consistent: bool,
}

pub fn integer_rounding_check(s: &LinearSystem, limits: &Limits) -> Result<RoundingReport> {
    let mut h = s.lifted();
    h.push(unit(s.n() + 1, s.n()));
    let rounding = is_hilbert_basis(&h, limits)?.verdict;
    let tdi = is_tdi(s, limits)?.verdict;
    let integral = integrality(&s.polyhedron(), limits)?;
    let consistent = match (integral, tdi) {
        (None, _) | (_, TdiVerdict::Undecided) => true,
        (Some(i), TdiVerdict::Tdi) => i && rounding,
        (Some(i), _) => !(i && rounding),
    };
    Ok(RoundingReport {
        rounding,
        tdi,
        integral,
        consistent,
    })
}

/// `Stab(G) = {x ≥ 0, xA ≤ 1}` for the vertex–clique matrix `A`, as a system.
pub fn stab_system(g: &SimpleGraph, limits: &Limits) -> Result<LinearSystem> {
    let cl = clique_clutter(g, limits)?;
    let n = g.n();
    if n == 0 {
        return usage("stability system of the empty graph");
    }
    let s = LinearSystem::new(cl.vectors(), vec![BigInt::from(1); cl.edges().len()])?;
    Ok(s.with_nonnegativity())
}

pub fn stab_polytope(g: &SimpleGraph, limits: &Limits) -> Result<HRep> {
    Ok(stab_system(g, limits)?.polyhedron())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WpgtReport {
    pub perfect: bool,
    pub integral: bool,
    pub tdi: TdiVerdict,
    pub agree: bool,
}

/// Perfection, integrality of `Stab(G)` and TDI-ness of its system, side by side.
pub fn wpgt_crosscheck(g: &SimpleGraph, limits: &Limits) -> Result<WpgtReport> {
    let perfect = is_perfect_small(g, limits)?.perfect;
    let s = stab_system(g, limits)?;
    let integral = is_integral(&s.polyhedron(), limits)?.integral;
    let tdi = is_tdi(&s, limits)?.verdict;
    let agree = match tdi {
        TdiVerdict::Tdi => perfect && integral,
        TdiVerdict::NotTdi => !perfect && !integral,
        _ => false,
    };
    Ok(WpgtReport {
        perfect,
        integral,
        tdi,
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;

    fn sys(cols: &[&[i64]], w: &[i64]) -> LinearSystem {
        LinearSystem::from_i64(cols, w).unwrap()
    }

    fn cl(n: usize, edges: &[&[usize]]) -> Clutter {
        Clutter::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn identity_system_is_tdi() {
        let c = is_tdi(&sys(&[&[1, 0], &[0, 1]], &[0, 0]), &Limits::default()).unwrap();
        assert_eq!(c.verdict, TdiVerdict::Tdi);
    }

    #[test]
    fn two_column_cone_not_tdi() {
        let c = is_tdi(&sys(&[&[1, 2], &[2, 1]], &[0, 0]), &Limits::default()).unwrap();
        assert_eq!(c.verdict, TdiVerdict::NotTdi);
        assert_eq!(c.faces.len(), 1);
        assert_eq!(c.faces[0].active, vec![0, 1]);
        assert_eq!(c.witness(), Some(&ivec(&[1, 1])));
    }

    #[test]
    fn stab_k2_is_tdi() {
        let s = sys(&[&[1, 1], &[-1, 0], &[0, -1]], &[1, 0, 0]);
        assert_eq!(
            is_tdi(&s, &Limits::default()).unwrap().verdict,
            TdiVerdict::Tdi
        );
    }

    #[test]
    fn empty_system_is_vacuous() {
        let s = sys(&[&[1], &[-1]], &[0, -1]);
        let c = is_tdi(&s, &Limits::default()).unwrap();
        assert_eq!(c.verdict, TdiVerdict::Vacuous);
        assert!(c.holds());
    }

    #[test]
    fn idealness() {
        let tri = cl(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        let r = is_ideal_clutter(&tri, &Limits::default()).unwrap();
        assert!(!r.integral);
        assert_eq!(r.witness, Some(vec![rat(1, 2); 3]));
        let c4 = cl(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        assert!(is_ideal_clutter(&c4, &Limits::default()).unwrap().integral);
    }

    #[test]
    fn mfmc_examples() {
        let c4 = cl(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        assert_eq!(
            is_mfmc(&c4, &Limits::default()).unwrap().verdict,
            TdiVerdict::Tdi
        );
        assert_eq!(mfmc_ilp_scan(&c4, 3, &Limits::default()).unwrap(), None);
        let tri = cl(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        let cert = is_mfmc(&tri, &Limits::default()).unwrap();
        assert_eq!(cert.verdict, TdiVerdict::NotTdi);
        assert!(cert.witness().is_some());
        // w = 1: LP packs three halves, the integer optimum is 1
        assert!(mfmc_ilp_scan(&tri, 1, &Limits::default())
            .unwrap()
            .is_some());
    }

    #[test]
    fn thm41_examples() {
        let r = thm41_check(&sys(&[&[1, 2], &[2, 1]], &[0, 0]), &Limits::default()).unwrap();
        assert_eq!(r.integral, Some(true));
        assert!(!r.lifted_hilbert_basis);
        assert_eq!(r.tdi, TdiVerdict::NotTdi);
        assert!(r.implication_respected);
        let r = thm41_check(
            &sys(&[&[1, 2], &[1, 1], &[2, 1]], &[0, 0, 0]),
            &Limits::default(),
        )
        .unwrap();
        assert!(r.lifted_hilbert_basis && r.tdi == TdiVerdict::Tdi);
        let r = thm41_check(&sys(&[&[1, 0], &[0, 1]], &[1, 1]), &Limits::default()).unwrap();
        assert_eq!(r.integral, Some(true));
        assert!(r.lifted_hilbert_basis && r.tdi == TdiVerdict::Tdi);
    }

    #[test]
    fn prop42_examples() {
        let r = prop42_check(&sys(&[&[1, 1]], &[1]), &Limits::default()).unwrap();
        assert!(r.tdi == TdiVerdict::Tdi && r.integral && r.hilbert_basis && r.agree);
        // Stab(C5) with edge constraints
        let c5: Vec<Vec<i64>> = (0..5)
            .map(|i| {
                (0..5)
                    .map(|j| i64::from(j == i || j == (i + 1) % 5))
                    .collect()
            })
            .collect();
        let cols: Vec<&[i64]> = c5.iter().map(Vec::as_slice).collect();
        let r = prop42_check(&sys(&cols, &[1; 5]), &Limits::default()).unwrap();
        assert!(r.tdi == TdiVerdict::NotTdi && !r.integral && r.agree);
        let c4 = [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [1, 0, 0, 1]];
        let cols: Vec<&[i64]> = c4.iter().map(|c| c.as_slice()).collect();
        let r = prop42_check(&sys(&cols, &[1; 4]), &Limits::default()).unwrap();
        assert!(r.tdi == TdiVerdict::Tdi && r.integral && r.hilbert_basis && r.agree);
    }

    #[test]
    fn prop42_fails_for_weight_two() {
        // x ≥ 0, x ≤ 2 is TDI and integral, yet (0,1) = ½(1,2) + ½(−1,0) is
        // not an ℕ-combination of {(1,2), (−1,0)}
        let r = prop42_check(&sys(&[&[1]], &[2]), &Limits::default()).unwrap();
        assert_eq!(r.tdi, TdiVerdict::Tdi);
        assert!(r.integral);
        assert!(!r.hilbert_basis);
        assert_eq!(r.witness, Some(ivec(&[0, 1])));
        assert!(!r.agree);
    }

    #[test]
    fn rounding_examples() {
        let r =
            integer_rounding_check(&sys(&[&[1, 0], &[0, 1]], &[1, 1]), &Limits::default()).unwrap();
        assert!(r.rounding && r.consistent);
        let r =
            integer_rounding_check(&sys(&[&[1, 2], &[2, 1]], &[0, 0]), &Limits::default()).unwrap();
        assert!(!r.rounding && r.consistent);
    }

    #[test]
    fn wpgt_small_graphs() {
        let c5 = SimpleGraph::new(5, (0..5).map(|i| (i, (i + 1) % 5)).collect()).unwrap();
        let r = wpgt_crosscheck(&c5, &Limits::default()).unwrap();
        assert!(!r.perfect && !r.integral && r.tdi == TdiVerdict::NotTdi && r.agree);
        let c4 = SimpleGraph::new(4, (0..4).map(|i| (i, (i + 1) % 4)).collect()).unwrap();
        let r = wpgt_crosscheck(&c4, &Limits::default()).unwrap();
        assert!(r.perfect && r.integral && r.tdi == TdiVerdict::Tdi && r.agree);
    }
}
