use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{IntVec, RatVector, Rational};
use crate::error::{usage, Result};

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must share one length.
    pub fn from_rows(rows: Vec<RatVector>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return usage("ragged rows in RatMatrix::from_rows");
        }
        let n = rows.len();
        Ok(RatMatrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from integer rows.
    pub fn from_int_rows(rows: &[IntVec]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|x| Rational::from_integer(x.clone()))
                        .collect()
                })
                .collect(),
        )
    }

    /// Builds a matrix whose columns are the given integer vectors.
    pub fn from_int_columns(nrows: usize, cols: &[IntVec]) -> Result<Self> {
        if cols.iter().any(|c| c.len() != nrows) {
            return usage("column length does not match row count");
        }
        let mut m = Self::zeros(nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = Rational::from_integer(x.clone());
            }
        }
        Ok(m)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<RatVector> {
        if x.len() != self.cols {
            return usage(format!(
                "vector of length {} against matrix with {} columns",
                x.len(),
                self.cols
            ));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Each row scaled by the lcm of its denominators, as integers.
    fn integer_rows(&self) -> Vec<IntVec> {
        (0..self.rows)
            .map(|i| scale_to_integers(self.row(i)))
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

fn scale_to_integers(row: &[Rational]) -> IntVec {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Fraction-free Gaussian elimination. Returns the echelon rows (only the
/// first `rank` are meaningful) and the pivot column of each.
///
/// After step `k` every entry below the pivots is a `(k+1)`-minor of the
/// input, so the division by the previous pivot is exact.
pub(crate) fn bareiss(mut m: Vec<IntVec>, ncols: usize) -> (Vec<IntVec>, Vec<usize>) {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            let factor = m[i][c].clone();
            for j in c + 1..ncols {
                let v = (&m[r][c] * &m[i][j] - &factor * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        // entries left of the pivot in lower rows are already zero
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Rank of an integer matrix given by rows.
pub fn int_rank(rows: &[IntVec]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    bareiss(rows.to_vec(), ncols).1.len()
}

/// Rank over the rationals.
pub fn rank(m: &RatMatrix) -> usize {
    bareiss(m.integer_rows(), m.ncols()).1.len()
}

/// One exact solution of `m x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(m: &RatMatrix, b: &[Rational]) -> Result<Option<RatVector>> {
    if b.len() != m.nrows() {
        return usage(format!(
            "right-hand side has length {} but matrix has {} rows",
            b.len(),
            m.nrows()
        ));
    }
    let n = m.ncols();
    let aug: Vec<IntVec> = (0..m.nrows())
        .map(|i| {
            let mut row: Vec<Rational> = m.row(i).to_vec();
            row.push(b[i].clone());
            scale_to_integers(&row)
        })
        .collect();
    let (ech, pivots) = bareiss(aug, n + 1);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &c) in pivots.iter().enumerate().rev() {
        let mut acc = Rational::from_integer(ech[r][n].clone());
        for j in c + 1..n {
            if !ech[r][j].is_zero() {
                acc -= Rational::from_integer(ech[r][j].clone()) * &x[j];
            }
        }
        x[c] = acc / Rational::from_integer(ech[r][c].clone());
    }
    Ok(Some(x))
}

/// Reduced row echelon form over the rationals: the nonzero rows and their pivot columns.
pub fn rref(rows: &[RatVector], ncols: usize) -> (Vec<RatVector>, Vec<usize>) {
    let mut m: Vec<RatVector> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{ivec, rat};

    fn rm(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_int_rows(&rows.iter().map(|r| ivec(r)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn identity_rank() {
        assert_eq!(rank(&RatMatrix::identity(2)), 2);
        assert_eq!(rank(&RatMatrix::zeros(0, 0)), 0);
        assert_eq!(rank(&RatMatrix::zeros(3, 4)), 0);
    }

    #[test]
    fn lifted_square_rank() {
        // columns e1+e3, e1+e4, e2+e3, e2+e4 with a trailing 1, written as rows
        let m = rm(&[
            &[1, 0, 1, 0, 1],
            &[1, 0, 0, 1, 1],
            &[0, 1, 1, 0, 1],
            &[0, 1, 0, 1, 1],
        ]);
        assert_eq!(rank(&m), 3);
        assert_eq!(rank(&m.transpose()), 3);
    }

    #[test]
    fn rational_rows_rank() {
        let m = RatMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(3, 2), rat(1, 1)]])
            .unwrap();
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn solve_identity() {
        let x = solve(&RatMatrix::identity(2), &[rat(3, 1), rat(5, 1)])
            .unwrap()
            .unwrap();
        assert_eq!(x, vec![rat(3, 1), rat(5, 1)]);
    }

    #[test]
    fn solve_inconsistent() {
        let m = rm(&[&[1, 0], &[1, 0]]);
        assert_eq!(solve(&m, &[rat(1, 1), rat(2, 1)]).unwrap(), None);
    }

    #[test]
    fn solve_dimension_mismatch() {
        assert!(solve(&RatMatrix::identity(2), &[rat(1, 1)]).is_err());
    }

    #[test]
    fn solve_underdetermined_checks_out() {
        let m = rm(&[&[1, 2, 3], &[2, 4, 7]]);
        let b = vec![rat(1, 1), rat(3, 1)];
        let x = solve(&m, &b).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), b);
    }

    #[test]
    fn rref_basic() {
        let rows = vec![
            vec![rat(2, 1), rat(4, 1), rat(2, 1)],
            vec![rat(1, 1), rat(2, 1), rat(3, 1)],
        ];
        let (r, p) = rref(&rows, 3);
        assert_eq!(p, vec![0, 2]);
        assert_eq!(r[0], vec![rat(1, 1), rat(2, 1), rat(0, 1)]);
    }
}
