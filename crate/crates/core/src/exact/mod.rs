//! Exact scalar and polynomial arithmetic.
//!
//! Everything downstream is computed over the rationals: scalars live in
//! `Q(q)` ([`QRational`]), and coordinates of GKM elements are multivariate
//! polynomials over `Q` ([`MPoly`]).

mod mpoly;
mod qpoly;
mod qrational;

pub use mpoly::{mpoly_arith, Family, MPoly, Monomial};
pub use qpoly::QPoly;
pub use qrational::{qrat_arith, QRational};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use crate::error::{Error, Result};
use num_traits::{One, Zero};

/// Binary operation selector for [`qrat_arith`] and [`mpoly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
pub(crate) fn rat_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `"a/b"`, always including the denominator.
pub fn rational_to_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `"a/b"` or a bare integer `"a"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("bad integer {t:?}: {e}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(parse_int(n)?, d))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
