//! Double description for polyhedral cones `{x : Ax ≥ 0, Ex = 0}`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::kernel::{dot, int_rank, primitive, IntVec};
use crate::limits::Limits;

/// Generators of a cone: extreme rays modulo the lineality space, and a basis
/// of the lineality space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeGenerators {
    pub rays: Vec<IntVec>,
    pub lineality: Vec<IntVec>,
}

#[derive(Clone, Debug)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn subset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct Ray {
    v: IntVec,
    zeros: Bits,
}

/// Generators of `{x ∈ ℝ^dim : ⟨a,x⟩ ≥ 0 ∀a ∈ ineqs, ⟨e,x⟩ = 0 ∀e ∈ eqs}`.
///
/// Constraints are inserted in the given order; adjacency of a positive and a
/// negative ray is decided combinatorially (no third ray vanishes on every
/// constraint both of them vanish on), after a cardinality prefilter. Output
/// rays are primitive and sorted lexicographically; the lineality basis is in
/// integral reduced echelon form.
pub fn cone_generators(
    dim: usize,
    ineqs: &[IntVec],
    eqs: &[IntVec],
    limits: &Limits,
) -> Result<ConeGenerators> {
    let mut lineality: Vec<IntVec> = (0..dim).map(|i| crate::kernel::unit(dim, i)).collect();

    for e in eqs {
        restrict_lineality(&mut lineality, e);
    }

    let m = ineqs.len();
    let mut rays: Vec<Ray> = Vec::new();
    for (k, a) in ineqs.iter().enumerate() {
        if let Some(pos) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l = lineality.swap_remove(pos);
            let mut s = dot(a, &l);
            if s.is_negative() {
                l = l.into_iter().map(|x| -x).collect();
                s = -s;
            }
            for other in lineality.iter_mut() {
                let t = dot(a, other);
                if !t.is_zero() {
                    *other = combine(&s, other, &t, &l);
                }
            }
            for r in rays.iter_mut() {
                let t = dot(a, &r.v);
                if !t.is_zero() {
                    r.v = combine(&s, &r.v, &t, &l);
                }
                r.zeros.set(k);
            }
            // the old lineality direction vanished on every earlier constraint
            let mut zeros = Bits::new(m);
            for j in 0..k {
                zeros.set(j);
            }
            rays.push(Ray { v: l, zeros });
            continue;
        }

        let vals: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
        if !vals.iter().any(Signed::is_negative) {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    r.zeros.set(k);
                }
            }
            continue;
        }

        let pointed_dim = dim - lineality.len();
        let min_common = pointed_dim.saturating_sub(2);
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        let mut fresh: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.and(&rays[n].zeros);
                if common.count() < min_common {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(i, r)| i == p || i == n || !common.subset_of(&r.zeros));
                if !adjacent {
                    continue;
                }
                let v = combine(&vals[p], &rays[n].v, &vals[n], &rays[p].v);
                let mut zeros = common;
                zeros.set(k);
                fresh.push(Ray { v, zeros });
                if fresh.len() + rays.len() > limits.dd_max_rays {
                    return Err(Error::ResourceExceeded {
                        what: "double description intermediate rays".into(),
                        limit: limits.dd_max_rays as u64,
                    });
                }
            }
        }
        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (r, v) in rays.into_iter().zip(&vals) {
            if v.is_negative() {
                continue;
            }
            let mut r = r;
            if v.is_zero() {
                r.zeros.set(k);
            }
            kept.push(r);
        }
        kept.extend(fresh);
        rays = kept;
    }

    let lineality = echelon_basis(&lineality, dim);
    let mut out: Vec<IntVec> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    Ok(ConeGenerators {
        rays: out,
        lineality,
    })
}

/// `s*x - t*y`, made primitive. With `s > 0` this keeps the direction of `x`
/// modulo `y`.
fn combine(s: &BigInt, x: &[BigInt], t: &BigInt, y: &[BigInt]) -> IntVec {
    primitive(x.iter().zip(y).map(|(xi, yi)| s * xi - t * yi).collect())
}

fn restrict_lineality(lineality: &mut Vec<IntVec>, e: &[BigInt]) {
    if let Some(pos) = lineality.iter().position(|l| !dot(e, l).is_zero()) {
        let l = lineality.swap_remove(pos);
        let s = dot(e, &l);
        for other in lineality.iter_mut() {
            let t = dot(e, other);
            if !t.is_zero() {
                *other = combine(&s, other, &t, &l);
            }
        }
    }
}

/// Canonical integer basis of the row space: reduced echelon form with each
/// row scaled to a primitive integer vector with positive leading entry.
pub fn echelon_basis(vectors: &[IntVec], dim: usize) -> Vec<IntVec> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let rows: Vec<_> = vectors
        .iter()
        .map(|v| crate::kernel::to_rat_vec(v))
        .collect();
    let (reduced, _) = crate::kernel::rref(&rows, dim);
    let out: Vec<IntVec> = reduced
        .iter()
        .map(|r| {
            crate::kernel::clear_denominators(r)
                .expect("nonzero echelon row")
                .0
        })
        .collect();
    debug_assert_eq!(int_rank(&out), out.len());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::ivec;

    #[test]
    fn positive_orthant() {
        let g =
            cone_generators(2, &[ivec(&[1, 0]), ivec(&[0, 1])], &[], &Limits::default()).unwrap();
        assert_eq!(g.rays, vec![ivec(&[0, 1]), ivec(&[1, 0])]);
        assert!(g.lineality.is_empty());
    }

    #[test]
    fn halfplane_keeps_lineality() {
        let g = cone_generators(2, &[ivec(&[1, 0])], &[], &Limits::default()).unwrap();
        assert_eq!(g.rays, vec![ivec(&[1, 0])]);
        assert_eq!(g.lineality, vec![ivec(&[0, 1])]);
    }

    #[test]
    fn dual_of_two_generators() {
        // cone{(1,0),(1,2)} described by its facets
        let g =
            cone_generators(2, &[ivec(&[1, 0]), ivec(&[1, 2])], &[], &Limits::default()).unwrap();
        assert_eq!(g.rays, vec![ivec(&[0, 1]), ivec(&[2, -1])]);
    }

    #[test]
    fn square_pyramid_rays() {
        // cone over the unit square at height 1
        let ineqs = vec![
            ivec(&[1, 0, 0]),
            ivec(&[0, 1, 0]),
            ivec(&[-1, 0, 1]),
            ivec(&[0, -1, 1]),
        ];
        let g = cone_generators(3, &ineqs, &[], &Limits::default()).unwrap();
        assert_eq!(g.rays.len(), 4);
        assert!(g.rays.contains(&ivec(&[1, 1, 1])));
        assert!(g.rays.contains(&ivec(&[0, 0, 1])));
    }

    #[test]
    fn equations_cut_dimension() {
        let g = cone_generators(
            3,
            &[ivec(&[1, 0, 0]), ivec(&[0, 1, 0])],
            &[ivec(&[1, 1, -1])],
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(g.rays, vec![ivec(&[0, 1, 1]), ivec(&[1, 0, 1])]);
        assert!(g.lineality.is_empty());
    }

    #[test]
    fn ray_cap_trips() {
        let limits = Limits {
            dd_max_rays: 2,
            ..Limits::default()
        };
        let ineqs = vec![
            ivec(&[1, 0, 0]),
            ivec(&[0, 1, 0]),
            ivec(&[0, 0, 1]),
            ivec(&[1, 1, -1]),
        ];
        assert!(matches!(
            cone_generators(3, &ineqs, &[], &limits),
            Err(Error::ResourceExceeded { .. })
        ));
    }
}
