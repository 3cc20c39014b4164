//! The coefficient rings shared by all exact computations.
//!
//! Everything in this crate is computed either over `BigRational` (evaluation
//! at fixed parameters) or over [`crate::poly::BivarPoly`] (identities in the
//! polynomial ring in the two deformation parameters). The [`Scalar`] trait is
//! the common interface, so the Fock-space and moment code can run both modes
//! from a single implementation.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt::Debug;
use std::ops::{Neg, Sub};

/// Ring of coefficients with an embedding of the rationals.
pub trait Scalar:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    fn from_rational(q: &BigRational) -> Self;

    /// Non-negative integer power with the convention `x^0 = 1` (also for `x = 0`).
    fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Scalar for BigRational {
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
}

/// Shorthand for `num/den` as an exact rational.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"3"`, `"-1/2"`, `"0"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let mk_err = || format!("invalid rational: {s:?}");
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(BigRational::from_integer)
            .map_err(|_| mk_err()),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().map_err(|_| mk_err())?;
            let d = d.trim().parse::<BigInt>().map_err(|_| mk_err())?;
            if d.is_zero() {
                return Err(mk_err());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Renders a rational as `num/den`, or plain `num` for integers.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n as u64).map(BigInt::from).product()
}

/// `(2n-1)!! = 1*3*5*...*(2n-1)`.
pub fn double_factorial_odd(n: usize) -> BigInt {
    (0..n as u64).map(|k| BigInt::from(2 * k + 1)).product()
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from((n - i) as u64) / BigInt::from((i + 1) as u64);
    }
    acc
}

pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n, n) / BigInt::from((n + 1) as u64)
}

/// `true` when `|q| <= 1`.
pub fn abs_at_most_one(q: &BigRational) -> bool {
    q.abs() <= BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "1", "-3", "1/3", "-2/5", "7/2"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(format_rational(&q), s);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        // non-reduced input normalises
        assert_eq!(format_rational(&parse_rational("2/4").unwrap()), "1/2");
    }

    #[test]
    fn small_sequences() {
        assert_eq!(factorial(4), BigInt::from(24));
        assert_eq!(double_factorial_odd(3), BigInt::from(15));
        assert_eq!(catalan(3), BigInt::from(5));
        assert_eq!(catalan(6), BigInt::from(132));
        assert_eq!(binomial(6, 3), BigInt::from(20));
    }

    #[test]
    fn rational_pow_handles_zero_base() {
        assert_eq!(rat_int(0).pow(0), rat_int(1));
        assert_eq!(rat_int(0).pow(3), rat_int(0));
        assert_eq!(rat(1, 2).pow(3), rat(1, 8));
    }
}
