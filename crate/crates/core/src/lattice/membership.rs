use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::ConeWithLattice;
use crate::error::{usage, Error, Result};
use crate::kernel::{dot, integer_solution, is_zero_vec, IntVec};
use crate::limits::Limits;
use crate::polyhedron::{h_to_v, HRep, Inequality};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Membership {
    /// Nonnegative integer coefficients, one per input vector.
    Member(Vec<BigInt>),
    NotMember,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

/// Decides `a ∈ ℕH`.
///
/// The search peels generators off `a` while the residual stays in `ℝ₊H`,
/// strictly decreasing a grading that is positive off the lineality space;
/// failed residuals are memoised, which turns the graded case into a dynamic
/// program. A residual of degree zero lies in the lineality space and is
/// settled by an integer linear system, since there `ℕ(H ∩ L) = ℤ(H ∩ L)`.
/// Running out of the step budget yields [`Error::Undecided`].
pub fn semigroup_member(a: &[BigInt], h: &[IntVec], limits: &Limits) -> Result<Membership> {
    let n = a.len();
    if h.iter().any(|v| v.len() != n) {
        return usage("semigroup_member: vectors of different lengths");
    }
    let idx: Vec<usize> = (0..h.len()).filter(|&i| !is_zero_vec(&h[i])).collect();
    if idx.is_empty() {
        return Ok(if is_zero_vec(a) {
            Membership::Member(vec![BigInt::zero(); h.len()])
        } else {
            Membership::NotMember
        });
    }
    let cone = ConeWithLattice::new(n, idx.iter().map(|&i| h[i].clone()).collect(), limits)?;
    if !cone.contains(a) {
        return Ok(Membership::NotMember);
    }
    let g = cone.grading();
    let (lin, pos): (Vec<usize>, Vec<usize>) = idx.iter().partition(|&&i| dot(&g, &h[i]).is_zero());
    let lin_cols: Vec<IntVec> = lin.iter().map(|&i| h[i].clone()).collect();
    let mut search = Search {
        h,
        pos: &pos,
        lin_cols: &lin_cols,
        g: &g,
        cone: &cone,
        failed: HashSet::new(),
        steps: 0,
        budget: limits.membership_steps,
        origin: a,
    };
    let mut counts = vec![BigInt::zero(); h.len()];
    let Some(z) = search.run(a.to_vec(), &mut counts)? else {
        return Ok(Membership::NotMember);
    };
    if !lin.is_empty() {
        let z = make_nonnegative(z, &lin_cols, limits)?;
        for (&i, zi) in lin.iter().zip(z) {
            counts[i] += zi;
        }
    }
    debug_assert!({
        let mut s = vec![BigInt::zero(); n];
        for (c, v) in counts.iter().zip(h) {
            for (si, vi) in s.iter_mut().zip(v) {
                *si += c * vi;
            }
        }
        s == a
    });
    Ok(Membership::Member(counts))
}

struct Search<'a> {
    h: &'a [IntVec],
    pos: &'a [usize],
    lin_cols: &'a [IntVec],
    g: &'a [BigInt],
    cone: &'a ConeWithLattice,
    failed: HashSet<IntVec>,
    steps: u64,
    budget: u64,
    origin: &'a [BigInt],
}

impl Search<'_> {
    /// On success `counts` holds the coefficients of the graded generators and
    /// the returned vector the integer coefficients over `lin_cols`.
    fn run(&mut self, r: IntVec, counts: &mut [BigInt]) -> Result<Option<IntVec>> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::Undecided {
                vector: self.origin.to_vec(),
                reason: format!("membership search exceeded {} steps", self.budget),
            });
        }
        if dot(self.g, &r).is_zero() {
            if self.lin_cols.is_empty() {
                return Ok(is_zero_vec(&r).then(Vec::new));
            }
            let rows: Vec<IntVec> = (0..r.len())
                .map(|k| self.lin_cols.iter().map(|c| c[k].clone()).collect())
                .collect();
            return integer_solution(&rows, self.lin_cols.len(), &r);
        }
        if self.failed.contains(&r) {
            return Ok(None);
        }
        for &i in self.pos {
            let next: IntVec = r.iter().zip(&self.h[i]).map(|(x, y)| x - y).collect();
            if !self.cone.contains(&next) {
                continue;
            }
            if let Some(z) = self.run(next, counts)? {
                counts[i] += 1;
                return Ok(Some(z));
            }
        }
        self.failed.insert(r);
        Ok(None)
    }
}

/// Shifts an integer relation `Σ zᵢ cᵢ` to nonnegative coefficients by adding
/// multiples of a strictly positive relation `Σ pᵢ cᵢ = 0`; such a relation
/// exists because the columns span their cone linearly.
fn make_nonnegative(z: IntVec, cols: &[IntVec], limits: &Limits) -> Result<IntVec> {
    if z.iter().all(|x| !x.is_negative()) {
        return Ok(z);
    }
    let p = positive_relation(cols, limits)?;
    let t = z
        .iter()
        .zip(&p)
        .filter(|(zi, _)| zi.is_negative())
        .map(|(zi, pi)| (-zi).div_ceil(pi))
        .max()
        .unwrap_or_else(BigInt::zero);
    Ok(z.iter().zip(&p).map(|(zi, pi)| zi + &t * pi).collect())
}

/// Integers `pᵢ ≥ 1` with `Σ pᵢ cᵢ = 0`: a vertex of
/// `{λ ≥ 0 : Σ λᵢ cᵢ = −Σ cᵢ}` shifted by one.
fn positive_relation(cols: &[IntVec], limits: &Limits) -> Result<IntVec> {
    let q = cols.len();
    let n = cols[0].len();
    let ineqs = (0..q)
        .map(|i| {
            let mut a = vec![BigInt::zero(); q];
            a[i] = -BigInt::one();
            Inequality::new(a, BigInt::zero())
        })
        .collect();
    let eqs = (0..n)
        .map(|k| {
            let row: IntVec = cols.iter().map(|c| c[k].clone()).collect();
            let rhs: BigInt = -row.iter().sum::<BigInt>();
            Inequality::new(row, rhs)
        })
        .collect();
    let v = h_to_v(&HRep::new(q, ineqs, eqs)?, limits)?;
    let Some(lambda) = v.vertices.first() else {
        return Err(Error::Internal(
            "lineality generators admit no positive relation".into(),
        ));
    };
    let shifted: Vec<_> = lambda
        .iter()
        .map(|x| x + crate::kernel::Rational::one())
        .collect();
    let (p, _) = crate::kernel::clear_denominators(&shifted)?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::ivec;

    fn vs(xs: &[&[i64]]) -> Vec<IntVec> {
        xs.iter().map(|v| ivec(v)).collect()
    }

    #[test]
    fn unit_combination() {
        let m =
            semigroup_member(&ivec(&[2, 3]), &vs(&[&[1, 0], &[0, 1]]), &Limits::default()).unwrap();
        assert_eq!(m, Membership::Member(ivec(&[2, 3])));
    }

    #[test]
    fn gap_of_two_ray_cone() {
        let m =
            semigroup_member(&ivec(&[1, 1]), &vs(&[&[1, 0], &[1, 2]]), &Limits::default()).unwrap();
        assert_eq!(m, Membership::NotMember);
        let m =
            semigroup_member(&ivec(&[2, 2]), &vs(&[&[1, 0], &[1, 2]]), &Limits::default()).unwrap();
        assert_eq!(m, Membership::Member(ivec(&[1, 1])));
    }

    #[test]
    fn outside_cone() {
        let m = semigroup_member(
            &ivec(&[-1, 0]),
            &vs(&[&[1, 0], &[0, 1]]),
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(m, Membership::NotMember);
    }

    #[test]
    fn lineality_gets_nonnegative_certificate() {
        let h = vs(&[&[2], &[-3]]);
        let Membership::Member(c) = semigroup_member(&ivec(&[1]), &h, &Limits::default()).unwrap()
        else {
            panic!("1 = 2·2 − 3");
        };
        assert!(c.iter().all(|x| !x.is_negative()));
        assert_eq!(&c[0] * 2 - &c[1] * 3, BigInt::one());
    }

    #[test]
    fn mixed_lineality_and_pointed_part() {
        let h = vs(&[&[1, 0], &[-1, 0], &[1, 2]]);
        assert!(semigroup_member(&ivec(&[-5, 4]), &h, &Limits::default())
            .unwrap()
            .is_member());
        assert!(!semigroup_member(&ivec(&[0, 1]), &h, &Limits::default())
            .unwrap()
            .is_member());
    }

    #[test]
    fn budget_yields_undecided() {
        let limits = Limits {
            membership_steps: 3,
            ..Limits::default()
        };
        let h = vs(&[&[1, 0], &[0, 1]]);
        assert!(matches!(
            semigroup_member(&ivec(&[5, 5]), &h, &limits),
            Err(Error::Undecided { .. })
        ));
    }
}
