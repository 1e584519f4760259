//! Hilbert bases of rational cones and membership in affine semigroups.
//!
//! A finite set `H ⊂ ℤⁿ` is a Hilbert basis when `ℕH = ℝ₊H ∩ ℤⁿ`. For a
//! pointed cone this holds iff the minimal Hilbert basis of `ℝ₊H` is a subset
//! of `H`. With a lineality space `L` we split `ℤⁿ ∩ L` off (it is a lattice
//! with an explicit basis) and work in the pointed quotient.

mod cone;
mod membership;

pub use cone::{parallelepiped_points, ConeWithLattice};
pub use membership::{semigroup_member, Membership};

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{usage, Result};
use crate::kernel::{is_zero_vec, lattice_member, Diagonalization, IntVec};
use crate::limits::Limits;

/// Outcome of [`is_hilbert_basis`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertBasisReport {
    /// A finite generating set of `ℝ₊H ∩ ℤⁿ`: the minimal Hilbert basis for
    /// pointed cones, otherwise `± a basis of ℤⁿ ∩ L` plus lifts of the
    /// quotient's Hilbert basis.
    pub basis: Vec<IntVec>,
    pub verdict: bool,
    /// Members of `basis` outside `ℕH`.
    pub missing: Vec<IntVec>,
    pub lineality_dim: usize,
}

/// Whether `H` is a Hilbert basis of the cone it generates.
pub fn is_hilbert_basis(h: &[IntVec], limits: &Limits) -> Result<HilbertBasisReport> {
    let Some(first) = h.first() else {
        return usage("is_hilbert_basis of an empty set");
    };
    let n = first.len();
    if h.iter().any(|v| v.len() != n) {
        return usage("vectors of different lengths");
    }
    let gens: Vec<IntVec> = h.iter().filter(|v| !is_zero_vec(v)).cloned().collect();
    if gens.is_empty() {
        return Ok(HilbertBasisReport {
            basis: Vec::new(),
            verdict: true,
            missing: Vec::new(),
            lineality_dim: 0,
        });
    }
    let cone = ConeWithLattice::new(n, gens.clone(), limits)?;
    if cone.is_pointed() {
        let basis = cone.hilbert_basis(limits)?;
        let have: BTreeSet<&IntVec> = gens.iter().collect();
        // irreducible elements are in ℕH only if they are in H
        let missing: Vec<IntVec> = basis
            .iter()
            .filter(|b| !have.contains(b))
            .cloned()
            .collect();
        return Ok(HilbertBasisReport {
            verdict: missing.is_empty(),
            basis,
            missing,
            lineality_dim: 0,
        });
    }
    quotient_check(&cone, &gens, limits)
}

/// Coordinates adapted to a subspace `L`: `ℤⁿ ∩ L` is spanned by the first
/// `l` columns of `U⁻¹`, and `x ↦ (Ux)[l..]` is the quotient map `ℤⁿ → ℤⁿ/(ℤⁿ ∩ L)`.
pub(crate) struct Quotient {
    dz: Diagonalization,
    l: usize,
}

impl Quotient {
    pub(crate) fn new(n: usize, lineality: &[IntVec]) -> Self {
        let rows: Vec<IntVec> = (0..n)
            .map(|i| lineality.iter().map(|c| c[i].clone()).collect())
            .collect();
        let dz = Diagonalization::of_rows(&rows, lineality.len());
        let l = dz.rank();
        Quotient { dz, l }
    }

    pub(crate) fn project(&self, x: &[BigInt]) -> IntVec {
        self.dz.apply_u(x)[self.l..].to_vec()
    }

    pub(crate) fn lift(&self, y: &[BigInt]) -> IntVec {
        let mut z = vec![BigInt::zero(); self.l];
        z.extend_from_slice(y);
        self.dz.apply_u_inv(&z)
    }

    pub(crate) fn lattice_basis(&self) -> Vec<IntVec> {
        let n = self.dz.nrows;
        (0..self.l)
            .map(|j| (0..n).map(|i| self.dz.u_inv[i][j].clone()).collect())
            .collect()
    }
}

fn quotient_check(
    cone: &ConeWithLattice,
    gens: &[IntVec],
    limits: &Limits,
) -> Result<HilbertBasisReport> {
    let n = cone.dim;
    let q = Quotient::new(n, &cone.lineality);
    let in_l: Vec<IntVec> = gens
        .iter()
        .filter(|g| {
            cone.facets
                .iter()
                .all(|a| crate::kernel::dot(a, g).is_zero())
        })
        .cloned()
        .collect();
    let outside: Vec<&IntVec> = gens.iter().filter(|g| !in_l.contains(g)).collect();
    // ℕ(H ∩ L) = ℤ(H ∩ L) because H ∩ L spans L as a cone
    let mut basis = Vec::new();
    let mut missing = Vec::new();
    for b in q.lattice_basis() {
        let neg: IntVec = b.iter().map(|x| -x).collect();
        let ok = lattice_member(&in_l, &b);
        for v in [b, neg] {
            if !ok {
                missing.push(v.clone());
            }
            basis.push(v);
        }
    }
    let projected: Vec<IntVec> = outside.iter().map(|g| q.project(g)).collect();
    if !projected.is_empty() {
        let qcone = ConeWithLattice::new(n - q.l, projected.clone(), limits)?;
        for y in qcone.hilbert_basis(limits)? {
            let x = q.lift(&y);
            // x ∈ ℕH iff x = h + (element of ℤ(H ∩ L)) for some h over y,
            // since y is irreducible in the quotient
            let ok = outside.iter().zip(&projected).any(|(g, p)| {
                *p == y && {
                    let diff: IntVec = x.iter().zip(g.iter()).map(|(a, b)| a - b).collect();
                    lattice_member(&in_l, &diff)
                }
            });
            if !ok {
                missing.push(x.clone());
            }
            basis.push(x);
        }
    }
    basis.sort();
    missing.sort();
    Ok(HilbertBasisReport {
        verdict: missing.is_empty(),
        basis,
        missing,
        lineality_dim: q.l,
    })
}
