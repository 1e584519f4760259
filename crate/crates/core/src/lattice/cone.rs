use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{usage, Error, Result};
use crate::kernel::{dot, int_rank, is_zero_vec, Diagonalization, IntVec, Rational};
use crate::limits::Limits;
use crate::polyhedron::cone_generators;

/// A rational cone `cone(generators)` together with its facet description
/// `{x : ⟨a,x⟩ ≥ 0 ∀a ∈ facets, ⟨e,x⟩ = 0 ∀e ∈ equations}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeWithLattice {
    pub dim: usize,
    pub generators: Vec<IntVec>,
    pub facets: Vec<IntVec>,
    pub equations: Vec<IntVec>,
    /// Extreme rays modulo the lineality space.
    pub rays: Vec<IntVec>,
    pub lineality: Vec<IntVec>,
}

impl ConeWithLattice {
    pub fn new(dim: usize, generators: Vec<IntVec>, limits: &Limits) -> Result<Self> {
        if generators.iter().any(|g| g.len() != dim) {
            return usage("generator length differs from ambient dimension");
        }
        if generators.iter().any(|g| is_zero_vec(g)) {
            return usage("zero generator");
        }
        let dual = cone_generators(dim, &generators, &[], limits)?;
        let primal = cone_generators(dim, &dual.rays, &dual.lineality, limits)?;
        Ok(ConeWithLattice {
            dim,
            generators,
            facets: dual.rays,
            equations: dual.lineality,
            rays: primal.rays,
            lineality: primal.lineality,
        })
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.facets.iter().all(|a| !dot(a, x).is_negative())
            && self.equations.iter().all(|e| dot(e, x).is_zero())
    }

    /// A linear form vanishing on the lineality space and positive on every
    /// other point of the cone: the sum of the facet normals.
    pub fn grading(&self) -> IntVec {
        let mut g = vec![BigInt::zero(); self.dim];
        for a in &self.facets {
            for (gi, ai) in g.iter_mut().zip(a) {
                *gi += ai;
            }
        }
        g
    }

    /// The unique minimal Hilbert basis of `C ∩ ℤⁿ`, sorted.
    pub fn hilbert_basis(&self, limits: &Limits) -> Result<Vec<IntVec>> {
        if !self.is_pointed() {
            return Err(Error::NotPointed {
                lineality_dim: self.lineality.len(),
            });
        }
        if self.rays.is_empty() {
            return Ok(Vec::new());
        }
        let simplices = self.triangulation();
        let volumes: Vec<u64> = simplices
            .iter()
            .map(|s| {
                let cols: Vec<IntVec> = s.iter().map(|&i| self.rays[i].clone()).collect();
                simplex_volume(&cols)
            })
            .collect();
        let total: u64 = volumes.iter().fold(0u64, |a, &b| a.saturating_add(b));
        if total > limits.parallelepiped_points {
            return Err(Error::ResourceExceeded {
                what: "fundamental parallelepiped points".into(),
                limit: limits.parallelepiped_points,
            });
        }
        let pieces: Vec<Vec<IntVec>> = simplices
            .par_iter()
            .map(|s| {
                let cols: Vec<IntVec> = s.iter().map(|&i| self.rays[i].clone()).collect();
                parallelepiped_points(&cols)
            })
            .collect();
        let mut cand: BTreeSet<IntVec> = self.rays.iter().cloned().collect();
        for p in pieces.into_iter().flatten() {
            if !is_zero_vec(&p) {
                cand.insert(p);
            }
        }
        let cand: Vec<IntVec> = cand.into_iter().collect();
        let g = self.grading();
        let deg: Vec<BigInt> = cand.iter().map(|c| dot(&g, c)).collect();
        let keep: Vec<bool> = (0..cand.len())
            .into_par_iter()
            .map(|i| {
                !(0..cand.len()).any(|j| {
                    deg[j] < deg[i] && {
                        let diff: IntVec =
                            cand[i].iter().zip(&cand[j]).map(|(a, b)| a - b).collect();
                        self.contains(&diff)
                    }
                })
            })
            .collect();
        Ok(cand
            .into_iter()
            .zip(keep)
            .filter_map(|(c, k)| k.then_some(c))
            .collect())
    }

    /// Pulling triangulation into simplicial cones, as sets of ray indices.
    pub fn triangulation(&self) -> Vec<Vec<usize>> {
        let incidence: Vec<BTreeSet<usize>> = self
            .facets
            .iter()
            .map(|a| {
                (0..self.rays.len())
                    .filter(|&i| dot(a, &self.rays[i]).is_zero())
                    .collect()
            })
            .collect();
        let all: BTreeSet<usize> = (0..self.rays.len()).collect();
        let mut out = Vec::new();
        self.pull(&all, &incidence, &mut Vec::new(), &mut out);
        out
    }

    fn face_rank(&self, face: &BTreeSet<usize>) -> usize {
        let rows: Vec<IntVec> = face.iter().map(|&i| self.rays[i].clone()).collect();
        int_rank(&rows)
    }

    fn pull(
        &self,
        face: &BTreeSet<usize>,
        incidence: &[BTreeSet<usize>],
        apex: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let r = self.face_rank(face);
        if face.len() == r {
            let mut s: Vec<usize> = apex.iter().copied().chain(face.iter().copied()).collect();
            s.sort_unstable();
            out.push(s);
            return;
        }
        let p = *face.iter().next().expect("nonempty face");
        let mut facets: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        for inc in incidence {
            let sub: BTreeSet<usize> = face.intersection(inc).copied().collect();
            if sub.contains(&p) {
                continue;
            }
            if self.face_rank(&sub) + 1 == r {
                facets.insert(sub);
            }
        }
        apex.push(p);
        for f in &facets {
            self.pull(f, incidence, apex, out);
        }
        apex.pop();
    }
}

/// `|det|` of the lattice spanned by linearly independent columns, relative to
/// the saturated lattice of their span: the product of the diagonal entries.
fn simplex_volume(cols: &[IntVec]) -> u64 {
    let dz = diagonalize_columns(cols);
    dz.diag.iter().fold(1u64, |acc, d| {
        acc.saturating_mul(d.to_u64().unwrap_or(u64::MAX))
    })
}

fn diagonalize_columns(cols: &[IntVec]) -> Diagonalization {
    let n = cols[0].len();
    let rows: Vec<IntVec> = (0..n)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    Diagonalization::of_rows(&rows, cols.len())
}

/// Lattice points of `{Σ λᵢ cᵢ : 0 ≤ λᵢ < 1}` for linearly independent
/// integer columns, including the origin.
///
/// With `U R V = D`, a point `Rλ` of the span is integral iff `μ = V⁻¹λ` has
/// `μᵢ ∈ (1/dᵢ)ℤ`, so the points are `R·frac(V μ)` over the `∏ dᵢ` residues.
pub fn parallelepiped_points(cols: &[IntVec]) -> Vec<IntVec> {
    let k = cols.len();
    let dz = diagonalize_columns(cols);
    debug_assert_eq!(dz.rank(), k, "columns must be independent");
    let d: Vec<BigInt> = dz.diag.clone();
    let mut out = Vec::new();
    let mut j = vec![BigInt::zero(); k];
    loop {
        let mu: Vec<Rational> = j
            .iter()
            .zip(&d)
            .map(|(a, b)| Rational::new(a.clone(), b.clone()))
            .collect();
        let lambda: Vec<Rational> =
            dz.v.iter()
                .map(|row| {
                    row.iter()
                        .zip(&mu)
                        .fold(Rational::zero(), |acc, (v, m)| acc + m * v)
                })
                .collect();
        let frac: Vec<Rational> = lambda.iter().map(|l| l - l.floor()).collect();
        let n = cols[0].len();
        let p: IntVec = (0..n)
            .map(|i| {
                let s = cols
                    .iter()
                    .zip(&frac)
                    .fold(Rational::zero(), |acc, (c, f)| acc + f * &c[i]);
                debug_assert!(s.is_integer());
                s.to_integer()
            })
            .collect();
        out.push(p);
        // odometer over j ∈ ∏ [0, dᵢ)
        let mut t = 0;
        loop {
            if t == k {
                out.sort();
                out.dedup();
                return out;
            }
            j[t] += 1;
            if j[t] < d[t] {
                break;
            }
            j[t] = BigInt::zero();
            t += 1;
        }
    }
}
