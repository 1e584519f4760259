//! Rational polyhedra in both descriptions.
//!
//! An [`HRep`] is `{x : ⟨nᵢ,x⟩ ≤ bᵢ, ⟨eⱼ,x⟩ = cⱼ}` with integer data; a
//! [`VRep`] is `conv(vertices) + cone(rays) + span(lineality)`. When the
//! lineality space is nontrivial the "vertices" are one point of each minimal
//! face, namely the one orthogonal to the lineality space. A `VRep` without
//! vertices is the empty polyhedron.

pub mod dd;
mod points;

pub use dd::{cone_generators, echelon_basis, ConeGenerators};
pub use points::Polytope;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{usage, Result};
use crate::kernel::{
    clear_denominators, dot, integer_solution, solve, IntVec, RatMatrix, RatVector, Rational,
};
use crate::limits::Limits;

/// `⟨normal, x⟩ ≤ rhs` (or `=` when stored as an equation).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Inequality {
    pub normal: IntVec,
    pub rhs: BigInt,
}

impl Inequality {
    pub fn new(normal: IntVec, rhs: BigInt) -> Self {
        Inequality { normal, rhs }
    }

    /// `⟨normal, x⟩ - rhs` at a rational point.
    pub fn slack_at(&self, x: &[Rational]) -> Rational {
        let lhs = self
            .normal
            .iter()
            .zip(x)
            .fold(Rational::zero(), |acc, (a, b)| acc + b * a);
        Rational::from_integer(self.rhs.clone()) - lhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HRep {
    pub dim: usize,
    pub ineqs: Vec<Inequality>,
    pub eqs: Vec<Inequality>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VRep {
    pub dim: usize,
    pub vertices: Vec<RatVector>,
    pub rays: Vec<IntVec>,
    pub lineality: Vec<IntVec>,
}

impl HRep {
    pub fn new(dim: usize, ineqs: Vec<Inequality>, eqs: Vec<Inequality>) -> Result<Self> {
        if ineqs.iter().chain(&eqs).any(|c| c.normal.len() != dim) {
            return usage("constraint normal length differs from ambient dimension");
        }
        Ok(HRep { dim, ineqs, eqs })
    }

    /// Whether a rational point satisfies every constraint.
    pub fn contains(&self, x: &[Rational]) -> bool {
        self.ineqs.iter().all(|c| !c.slack_at(x).is_negative())
            && self.eqs.iter().all(|c| c.slack_at(x).is_zero())
    }

    /// Indices of the inequalities tight at `x`.
    pub fn active_at(&self, x: &[Rational]) -> Vec<usize> {
        (0..self.ineqs.len())
            .filter(|&i| self.ineqs[i].slack_at(x).is_zero())
            .collect()
    }
}

impl VRep {
    pub fn polytope(dim: usize, vertices: Vec<RatVector>) -> Result<Self> {
        Self::new(dim, vertices, Vec::new(), Vec::new())
    }

    pub fn new(
        dim: usize,
        vertices: Vec<RatVector>,
        rays: Vec<IntVec>,
        lineality: Vec<IntVec>,
    ) -> Result<Self> {
        if vertices.iter().any(|v| v.len() != dim)
            || rays.iter().chain(&lineality).any(|r| r.len() != dim)
        {
            return usage("generator length differs from ambient dimension");
        }
        Ok(VRep {
            dim,
            vertices,
            rays,
            lineality,
        })
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }
}

/// One minimal face of an H-polyhedron.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    /// Inequalities tight on the whole face.
    pub active: Vec<usize>,
    pub dim: usize,
    /// A relative-interior point (for a minimal face, any point).
    pub point: RatVector,
    /// An integral point of the face, when one exists.
    pub integral_point: Option<IntVec>,
}

/// H- to V-description. An infeasible system yields the empty [`VRep`].
pub fn h_to_v(h: &HRep, limits: &Limits) -> Result<VRep> {
    let d = h.dim;
    let lift = |c: &Inequality| -> IntVec {
        let mut v: IntVec = c.normal.iter().map(|x| -x).collect();
        v.push(c.rhs.clone());
        v
    };
    let mut ineqs: Vec<IntVec> = h.ineqs.iter().map(lift).collect();
    ineqs.push(crate::kernel::unit(d + 1, d));
    let eqs: Vec<IntVec> = h.eqs.iter().map(lift).collect();
    let gens = cone_generators(d + 1, &ineqs, &eqs, limits)?;

    let lineality: Vec<IntVec> = gens.lineality.iter().map(|l| l[..d].to_vec()).collect();
    let mut vertices = Vec::new();
    let mut rays = Vec::new();
    for r in &gens.rays {
        let t = &r[d];
        if t.is_positive() {
            let t = Rational::from_integer(t.clone());
            let p: RatVector = r[..d]
                .iter()
                .map(|x| Rational::from_integer(x.clone()) / &t)
                .collect();
            vertices.push(project_orthogonal(&p, &lineality)?);
        } else {
            let p = crate::kernel::to_rat_vec(&r[..d]);
            let p = project_orthogonal(&p, &lineality)?;
            rays.push(clear_denominators(&p)?.0);
        }
    }
    if vertices.is_empty() {
        return VRep::new(d, Vec::new(), Vec::new(), Vec::new());
    }
    vertices.sort();
    vertices.dedup();
    rays.sort();
    rays.dedup();
    VRep::new(d, vertices, rays, lineality)
}

/// V- to H-description: facets and the equations of the affine hull.
pub fn v_to_h(v: &VRep, limits: &Limits) -> Result<HRep> {
    let d = v.dim;
    if v.is_empty() {
        return HRep::new(
            d,
            vec![Inequality::new(vec![BigInt::zero(); d], BigInt::from(-1))],
            Vec::new(),
        );
    }
    let mut gens: Vec<IntVec> = Vec::new();
    for p in &v.vertices {
        let den = p.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let mut g: IntVec = p.iter().map(|x| x.numer() * (&den / x.denom())).collect();
        g.push(den);
        gens.push(g);
    }
    for r in &v.rays {
        let mut g = r.clone();
        g.push(BigInt::zero());
        gens.push(g);
    }
    let lin: Vec<IntVec> = v
        .lineality
        .iter()
        .map(|l| {
            let mut g = l.clone();
            g.push(BigInt::zero());
            g
        })
        .collect();
    let dual = cone_generators(d + 1, &gens, &lin, limits)?;
    let mut ineqs = Vec::new();
    for f in &dual.rays {
        let normal: IntVec = f[..d].iter().map(|x| -x).collect();
        if normal.iter().all(Zero::is_zero) {
            continue;
        }
        ineqs.push(Inequality::new(normal, f[d].clone()));
    }
    ineqs.sort();
    ineqs.dedup();
    let eqs = dual
        .lineality
        .iter()
        .map(|e| Inequality::new(e[..d].to_vec(), -&e[d]))
        .collect();
    HRep::new(d, ineqs, eqs)
}

/// The orthogonal projection of `p` onto the complement of `span(lineality)`.
pub(crate) fn project_orthogonal(p: &RatVector, lineality: &[IntVec]) -> Result<RatVector> {
    if lineality.is_empty() {
        return Ok(p.clone());
    }
    let k = lineality.len();
    let gram = RatMatrix::from_rows(
        (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| Rational::from_integer(dot(&lineality[i], &lineality[j])))
                    .collect()
            })
            .collect(),
    )?;
    let rhs: RatVector = lineality
        .iter()
        .map(|l| {
            l.iter()
                .zip(p)
                .fold(Rational::zero(), |acc, (a, b)| acc + b * a)
        })
        .collect();
    let c = solve(&gram, &rhs)?
        .ok_or_else(|| crate::Error::Internal("singular Gram matrix of a basis".into()))?;
    let mut out = p.clone();
    for (ci, l) in c.iter().zip(lineality) {
        for (o, x) in out.iter_mut().zip(l) {
            *o -= ci * x;
        }
    }
    Ok(out)
}

/// Affine dimension; `-1` for the empty polyhedron.
pub fn dimension(v: &VRep) -> i64 {
    let Some(v0) = v.vertices.first() else {
        return -1;
    };
    let mut rows: Vec<RatVector> = v.vertices[1..]
        .iter()
        .map(|p| p.iter().zip(v0).map(|(a, b)| a - b).collect())
        .collect();
    rows.extend(v.rays.iter().map(|r| crate::kernel::to_rat_vec(r)));
    rows.extend(v.lineality.iter().map(|r| crate::kernel::to_rat_vec(r)));
    if rows.is_empty() {
        return 0;
    }
    crate::kernel::rank(&RatMatrix::from_rows(rows).expect("uniform row length")) as i64
}

/// All minimal faces, each with its full active set and an integral point when one exists.
pub fn minimal_faces(h: &HRep, limits: &Limits) -> Result<Vec<Face>> {
    let v = h_to_v(h, limits)?;
    let lin_dim = v.lineality.len();
    let mut faces = Vec::with_capacity(v.vertices.len());
    for p in &v.vertices {
        let active = h.active_at(p);
        let integral_point = if let Some(x) = crate::kernel::to_int_vec(p) {
            Some(x)
        } else {
            let mut rows: Vec<IntVec> = active.iter().map(|&i| h.ineqs[i].normal.clone()).collect();
            let mut rhs: IntVec = active.iter().map(|&i| h.ineqs[i].rhs.clone()).collect();
            rows.extend(h.eqs.iter().map(|e| e.normal.clone()));
            rhs.extend(h.eqs.iter().map(|e| e.rhs.clone()));
            integer_solution(&rows, h.dim, &rhs)?
        };
        faces.push(Face {
            active,
            dim: lin_dim,
            point: p.clone(),
            integral_point,
        });
    }
    Ok(faces)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralityReport {
    pub integral: bool,
    /// A point of a minimal face that contains no integer vector.
    pub witness: Option<RatVector>,
}

/// Whether every minimal face contains an integral point (for pointed
/// polyhedra: whether every vertex is integral).
pub fn is_integral(h: &HRep, limits: &Limits) -> Result<IntegralityReport> {
    let faces = minimal_faces(h, limits)?;
    if faces.is_empty() {
        return usage("is_integral of the empty polyhedron");
    }
    let witness = faces
        .into_iter()
        .find(|f| f.integral_point.is_none())
        .map(|f| f.point);
    Ok(IntegralityReport {
        integral: witness.is_none(),
        witness,
    })
}

/// Whether an H-polyhedron has no points.
pub fn is_empty(h: &HRep, limits: &Limits) -> Result<bool> {
    Ok(h_to_v(h, limits)?.is_empty())
}

/// Helper for building `{x : ⟨n,x⟩ ≤ b}` systems from machine integers.
pub fn ineq(normal: &[i64], rhs: i64) -> Inequality {
    Inequality::new(crate::kernel::ivec(normal), BigInt::from(rhs))
}
