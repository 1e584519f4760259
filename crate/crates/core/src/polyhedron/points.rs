//! Lattice points of dilated polytopes.
//!
//! The affine hull is parametrised by its free coordinates (the non-pivot
//! columns of the reduced equation system); those are scanned over the
//! bounding box of the dilated vertices and the pivot coordinates are solved
//! for. All scanning arithmetic is checked `i128`; leaving that range is a
//! loud error rather than a wrong count.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{dimension, v_to_h, HRep, VRep};
use crate::error::{usage, Error, Result};
use crate::kernel::{rref, IntVec, Rational};
use crate::limits::Limits;

/// A bounded polyhedron with both descriptions precomputed.
#[derive(Debug, Clone)]
pub struct Polytope {
    pub vrep: VRep,
    pub hrep: HRep,
    dim: i64,
    scan: Option<Scan>,
    limits: Limits,
}

/// `den[p] * x[pivot[p]] = b * num[p] - Σ coef[p][k] * x[free[k]]`.
#[derive(Debug, Clone)]
struct Scan {
    free: Vec<usize>,
    pivot: Vec<usize>,
    num: Vec<i128>,
    den: Vec<i128>,
    coef: Vec<Vec<i128>>,
    ineq_normals: Vec<Vec<i128>>,
    ineq_rhs: Vec<i128>,
    /// Per free coordinate, the vertex extremes as (min, max).
    lo: Vec<Rational>,
    hi: Vec<Rational>,
}

fn overflow() -> Error {
    Error::ResourceExceeded {
        what: "i128 range in lattice-point enumeration".into(),
        limit: i128::MAX as u64,
    }
}

fn small(x: &BigInt) -> Result<i128> {
    x.to_i128().ok_or_else(overflow)
}

impl Polytope {
    pub fn new(vrep: VRep, limits: &Limits) -> Result<Self> {
        if !vrep.is_bounded() {
            return usage("lattice points of an unbounded polyhedron");
        }
        let hrep = v_to_h(&vrep, limits)?;
        let dim = dimension(&vrep);
        let scan = if vrep.is_empty() {
            None
        } else {
            Some(Scan::build(&vrep, &hrep)?)
        };
        Ok(Polytope {
            vrep,
            hrep,
            dim,
            scan,
            limits: *limits,
        })
    }

    /// Convex hull of integer points.
    pub fn from_points(dim: usize, pts: &[IntVec], limits: &Limits) -> Result<Self> {
        let v = VRep::polytope(
            dim,
            pts.iter().map(|p| crate::kernel::to_rat_vec(p)).collect(),
        )?;
        Self::new(v, limits)
    }

    pub fn dim(&self) -> i64 {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.vrep.dim
    }

    /// `ℤⁿ ∩ bP`.
    pub fn lattice_points(&self, b: u64) -> Result<Vec<IntVec>> {
        let mut out = Vec::new();
        self.walk(b, false, &mut |x| {
            out.push(x.iter().map(|&v| BigInt::from(v)).collect())
        })?;
        out.sort();
        Ok(out)
    }

    /// `|ℤⁿ ∩ bP|`.
    pub fn count(&self, b: u64) -> Result<u64> {
        let mut n = 0u64;
        self.walk(b, false, &mut |_| n += 1)?;
        Ok(n)
    }

    /// Lattice points of the relative interior of `bP`.
    pub fn relative_interior_points(&self, b: u64) -> Result<Vec<IntVec>> {
        let mut out = Vec::new();
        self.walk(b, true, &mut |x| {
            out.push(x.iter().map(|&v| BigInt::from(v)).collect())
        })?;
        out.sort();
        Ok(out)
    }

    pub fn count_interior(&self, b: u64) -> Result<u64> {
        let mut n = 0u64;
        self.walk(b, true, &mut |_| n += 1)?;
        Ok(n)
    }

    fn walk(&self, b: u64, strict: bool, visit: &mut dyn FnMut(&[i128])) -> Result<()> {
        let Some(scan) = &self.scan else {
            return Ok(());
        };
        let bb = Rational::from_integer(BigInt::from(b));
        let lo: Vec<i128> = scan
            .lo
            .iter()
            .map(|x| small(&(x * &bb).ceil().to_integer()))
            .collect::<Result<_>>()?;
        let hi: Vec<i128> = scan
            .hi
            .iter()
            .map(|x| small(&(x * &bb).floor().to_integer()))
            .collect::<Result<_>>()?;
        let b = b as i128;
        let mut x = vec![0i128; self.vrep.dim];
        let mut steps = 0u64;
        let mut ctx = Walk {
            scan,
            b,
            strict,
            lo: &lo,
            hi: &hi,
            steps: &mut steps,
            cap: self.limits.lattice_points,
        };
        ctx.rec(0, &mut x, visit)
    }
}

struct Walk<'a> {
    scan: &'a Scan,
    b: i128,
    strict: bool,
    lo: &'a [i128],
    hi: &'a [i128],
    steps: &'a mut u64,
    cap: u64,
}

impl Walk<'_> {
    fn rec(&mut self, k: usize, x: &mut [i128], visit: &mut dyn FnMut(&[i128])) -> Result<()> {
        let s = self.scan;
        if k == s.free.len() {
            *self.steps += 1;
            if *self.steps > self.cap {
                return Err(Error::ResourceExceeded {
                    what: "lattice-point enumeration box".into(),
                    limit: self.cap,
                });
            }
            for (p, &col) in s.pivot.iter().enumerate() {
                let mut acc = s.num[p].checked_mul(self.b).ok_or_else(overflow)?;
                for (j, &f) in s.free.iter().enumerate() {
                    let t = s.coef[p][j].checked_mul(x[f]).ok_or_else(overflow)?;
                    acc = acc.checked_sub(t).ok_or_else(overflow)?;
                }
                if acc % s.den[p] != 0 {
                    return Ok(());
                }
                x[col] = acc / s.den[p];
            }
            for (a, &r) in s.ineq_normals.iter().zip(&s.ineq_rhs) {
                let mut lhs = 0i128;
                for (ai, xi) in a.iter().zip(x.iter()) {
                    let t = ai.checked_mul(*xi).ok_or_else(overflow)?;
                    lhs = lhs.checked_add(t).ok_or_else(overflow)?;
                }
                let rhs = r.checked_mul(self.b).ok_or_else(overflow)?;
                if lhs > rhs || (self.strict && lhs == rhs) {
                    return Ok(());
                }
            }
            visit(x);
            return Ok(());
        }
        let f = s.free[k];
        for v in self.lo[k]..=self.hi[k] {
            x[f] = v;
            self.rec(k + 1, x, visit)?;
        }
        Ok(())
    }
}

impl Scan {
    fn build(v: &VRep, h: &HRep) -> Result<Scan> {
        let n = v.dim;
        let rows: Vec<Vec<Rational>> = h
            .eqs
            .iter()
            .map(|e| {
                let mut r: Vec<Rational> = e
                    .normal
                    .iter()
                    .map(|x| Rational::from_integer(x.clone()))
                    .collect();
                r.push(Rational::from_integer(e.rhs.clone()));
                r
            })
            .collect();
        let (red, pivots) = rref(&rows, n);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut num = Vec::new();
        let mut den = Vec::new();
        let mut coef = Vec::new();
        for row in &red {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let scaled: Vec<BigInt> = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
            num.push(small(&scaled[n])?);
            den.push(small(&l)?);
            coef.push(
                free.iter()
                    .map(|&f| small(&scaled[f]))
                    .collect::<Result<_>>()?,
            );
        }
        let ineq_normals = h
            .ineqs
            .iter()
            .map(|c| c.normal.iter().map(small).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        let ineq_rhs = h
            .ineqs
            .iter()
            .map(|c| small(&c.rhs))
            .collect::<Result<_>>()?;
        let extreme = |f: usize, pick_max: bool| -> Rational {
            v.vertices
                .iter()
                .map(|p| p[f].clone())
                .reduce(|a, b| if (b > a) == pick_max { b } else { a })
                .unwrap_or_else(Rational::zero)
        };
        let lo = free.iter().map(|&f| extreme(f, false)).collect();
        let hi = free.iter().map(|&f| extreme(f, true)).collect();
        Ok(Scan {
            free,
            pivot: pivots,
            num,
            den,
            coef,
            ineq_normals,
            ineq_rhs,
            lo,
            hi,
        })
    }
}
