//! Exact rational and integer linear algebra.
//!
//! Everything here is exact: rationals are [`num_rational::BigRational`] (always
//! reduced, positive denominator) and integers are arbitrary precision. Rank and
//! solve go through fraction-free (Bareiss) elimination on integer rows; the
//! lattice routines go through a Smith-style diagonalisation with unimodular
//! transforms.

mod integer;
mod matrix;

pub use integer::{
    clear_denominators, dot, gcd_of, integer_solution, is_zero_vec, lattice_member, primitive,
    to_int_vec, Diagonalization,
};
pub use matrix::{int_rank, rank, rref, solve, RatMatrix};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational number; always reduced with a positive denominator.
pub type Rational = BigRational;
/// Dense vector of rationals.
pub type RatVector = Vec<Rational>;
/// Dense vector of arbitrary-precision integers.
pub type IntVec = Vec<BigInt>;

/// Convenience: a rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience: an integer vector from machine integers.
pub fn ivec(xs: &[i64]) -> IntVec {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// Convenience: a rational vector from an integer vector.
pub fn to_rat_vec(v: &[BigInt]) -> RatVector {
    v.iter()
        .map(|x| Rational::from_integer(x.clone()))
        .collect()
}

/// The `i`-th unit vector of length `n`.
pub fn unit(n: usize, i: usize) -> IntVec {
    let mut v = vec![BigInt::from(0); n];
    v[i] = BigInt::from(1);
    v
}
