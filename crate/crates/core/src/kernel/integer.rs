use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntVec, Rational};
use crate::error::{usage, Result};

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter()
        .zip(b)
        .fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Nonnegative gcd of all entries (0 for the zero vector).
pub fn gcd_of(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides out the content; the zero vector is returned unchanged.
pub fn primitive(mut v: IntVec) -> IntVec {
    let g = gcd_of(&v);
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    v
}

/// Converts a rational vector with integral entries.
pub fn to_int_vec(v: &[Rational]) -> Option<IntVec> {
    v.iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect()
}

/// Primitive integer vector parallel to `v` together with the positive scale
/// `s` such that the result equals `s * v`.
pub fn clear_denominators(v: &[Rational]) -> Result<(IntVec, Rational)> {
    if v.iter().all(Zero::is_zero) {
        return usage("clear_denominators of the zero vector");
    }
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: IntVec = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = gcd_of(&scaled);
    let out = scaled.into_iter().map(|x| x / &g).collect();
    Ok((out, Rational::new(l, g)))
}

/// Diagonal form `U * M * V = D` of an integer matrix, with `U`, `V`
/// unimodular and `D` zero off the diagonal. `U⁻¹` is tracked as well.
///
/// The diagonal entries are not normalised to divide one another; nothing
/// in this crate needs the full Smith invariant-factor form.
#[derive(Debug, Clone)]
pub struct Diagonalization {
    pub nrows: usize,
    pub ncols: usize,
    /// rows × rows
    pub u: Vec<IntVec>,
    /// rows × rows
    pub u_inv: Vec<IntVec>,
    /// cols × cols
    pub v: Vec<IntVec>,
    /// Nonzero diagonal entries, all positive; their count is the rank.
    pub diag: Vec<BigInt>,
}

impl Diagonalization {
    /// Diagonalises the matrix given by rows (`ncols` is needed for empty input).
    pub fn of_rows(rows: &[IntVec], ncols: usize) -> Self {
        let nrows = rows.len();
        let mut m: Vec<IntVec> = rows.to_vec();
        let mut u = identity(nrows);
        let mut u_inv = identity(nrows);
        let mut v = identity(ncols);
        let mut diag = Vec::new();
        let mut t = 0;
        while t < nrows.min(ncols) {
            // smallest nonzero entry in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for (i, row) in m.iter().enumerate().skip(t) {
                for (j, x) in row.iter().enumerate().skip(t) {
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            if pi != t {
                m.swap(pi, t);
                u.swap(pi, t);
                for row in u_inv.iter_mut() {
                    row.swap(pi, t);
                }
            }
            if pj != t {
                for row in m.iter_mut() {
                    row.swap(pj, t);
                }
                for row in v.iter_mut() {
                    row.swap(pj, t);
                }
            }
            let mut clean = true;
            for i in t + 1..nrows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                add_row_multiple(&mut m, &mut u, &mut u_inv, i, t, &-&q);
                if !m[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..ncols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for row in m.iter_mut() {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
                for row in v.iter_mut() {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
                if !m[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // a remainder is now smaller than the pivot; pick again
                continue;
            }
            if m[t][t].is_negative() {
                for x in m[t].iter_mut() {
                    *x = -&*x;
                }
                for x in u[t].iter_mut() {
                    *x = -&*x;
                }
                for row in u_inv.iter_mut() {
                    row[t] = -&row[t];
                }
            }
            diag.push(m[t][t].clone());
            t += 1;
        }
        Diagonalization {
            nrows,
            ncols,
            u,
            u_inv,
            v,
            diag,
        }
    }

    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    pub fn apply_u(&self, x: &[BigInt]) -> IntVec {
        self.u.iter().map(|row| dot(row, x)).collect()
    }

    pub fn apply_u_inv(&self, x: &[BigInt]) -> IntVec {
        self.u_inv.iter().map(|row| dot(row, x)).collect()
    }

    pub fn apply_v(&self, x: &[BigInt]) -> IntVec {
        self.v.iter().map(|row| dot(row, x)).collect()
    }
}

fn identity(n: usize) -> Vec<IntVec> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// row_i += c * row_t, mirrored in `u` and (inversely) in `u_inv`.
fn add_row_multiple(
    m: &mut [IntVec],
    u: &mut [IntVec],
    u_inv: &mut [IntVec],
    i: usize,
    t: usize,
    c: &BigInt,
) {
    for j in 0..m[i].len() {
        let d = c * &m[t][j];
        m[i][j] += d;
    }
    for j in 0..u[i].len() {
        let d = c * &u[t][j];
        u[i][j] += d;
    }
    for row in u_inv.iter_mut() {
        let d = c * &row[i];
        row[t] -= d;
    }
}

/// An integer solution of `rows * x = b`, if one exists.
pub fn integer_solution(rows: &[IntVec], ncols: usize, b: &[BigInt]) -> Result<Option<IntVec>> {
    if b.len() != rows.len() {
        return usage("integer_solution: right-hand side length mismatch");
    }
    let dz = Diagonalization::of_rows(rows, ncols);
    let ub = dz.apply_u(b);
    let r = dz.rank();
    if ub[r..].iter().any(|x| !x.is_zero()) {
        return Ok(None);
    }
    let mut y = vec![BigInt::zero(); ncols];
    for i in 0..r {
        let (q, rem) = ub[i].div_rem(&dz.diag[i]);
        if !rem.is_zero() {
            return Ok(None);
        }
        y[i] = q;
    }
    Ok(Some(dz.apply_v(&y)))
}

/// Whether `y` lies in the lattice spanned (over ℤ) by the given columns.
pub fn lattice_member(columns: &[IntVec], y: &[BigInt]) -> bool {
    let n = y.len();
    if columns.is_empty() {
        return is_zero_vec(y);
    }
    let rows: Vec<IntVec> = (0..n)
        .map(|i| columns.iter().map(|c| c[i].clone()).collect())
        .collect();
    matches!(integer_solution(&rows, columns.len(), y), Ok(Some(_)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{ivec, rat};

    #[test]
    fn clear_denominators_examples() {
        assert_eq!(
            clear_denominators(&[rat(1, 2), rat(1, 2)]).unwrap(),
            (ivec(&[1, 1]), rat(2, 1))
        );
        assert_eq!(
            clear_denominators(&[rat(2, 1), rat(4, 1)]).unwrap(),
            (ivec(&[1, 2]), rat(1, 2))
        );
        assert_eq!(
            clear_denominators(&[rat(1, 3), rat(-1, 6)]).unwrap(),
            (ivec(&[2, -1]), rat(6, 1))
        );
        assert!(clear_denominators(&[rat(0, 1)]).is_err());
    }

    fn mat_mul(a: &[IntVec], b: &[IntVec]) -> Vec<IntVec> {
        let inner = b.len();
        let cols = b.first().map_or(0, Vec::len);
        a.iter()
            .map(|row| {
                (0..cols)
                    .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn diagonalization_is_consistent() {
        let m = vec![ivec(&[2, 4, 4]), ivec(&[-6, 6, 12]), ivec(&[10, -4, -16])];
        let dz = Diagonalization::of_rows(&m, 3);
        let d = mat_mul(&mat_mul(&dz.u, &m), &dz.v);
        for (i, row) in d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if i == j && i < dz.rank() {
                    assert_eq!(x, &dz.diag[i]);
                } else {
                    assert!(x.is_zero());
                }
            }
        }
        let id = mat_mul(&dz.u, &dz.u_inv);
        assert_eq!(id, identity(3));
        let product: BigInt = dz.diag.iter().product();
        assert_eq!(product, BigInt::from(144));
    }

    #[test]
    fn integer_solutions() {
        // 2x = 3 has no integer solution, 2x = 4 does
        assert_eq!(
            integer_solution(&[ivec(&[2])], 1, &ivec(&[3])).unwrap(),
            None
        );
        assert_eq!(
            integer_solution(&[ivec(&[2])], 1, &ivec(&[4])).unwrap(),
            Some(ivec(&[2]))
        );
        let rows = vec![ivec(&[1, 2])];
        let x = integer_solution(&rows, 2, &ivec(&[5])).unwrap().unwrap();
        assert_eq!(dot(&rows[0], &x), BigInt::from(5));
    }

    #[test]
    fn lattice_membership() {
        let cols = vec![ivec(&[2, 0]), ivec(&[1, 1])];
        assert!(lattice_member(&cols, &ivec(&[3, 1])));
        assert!(!lattice_member(&cols, &ivec(&[1, 0])));
        assert!(lattice_member(&cols, &ivec(&[0, 2])));
    }
}
