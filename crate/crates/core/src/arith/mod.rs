//! Exact arithmetic substrate: rationals, dense univariate and sparse
//! bivariate polynomials, resultants and characteristic polynomials.

pub mod bipoly;
pub mod intjson;
pub mod matrix;
pub mod modp;
pub mod ratjson;
pub mod resultant;
pub mod ring;
pub mod unipoly;
pub mod zpoly;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use bipoly::BiPoly;
pub use matrix::RatMatrix;
pub use resultant::{resultant, resultant_in};
pub use ring::Ring;
pub use unipoly::{poly_gcd, UniPoly};

pub type Integer = BigInt;
pub type Rational = BigRational;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Parses `"-7"` or `"45/4"`. The result is always in lowest terms.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(BigRational::from_integer)
            .map_err(|_| bad()),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Canonical string: `"n"` for integers, `"n/d"` otherwise, `d > 0`.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// `true` when `q` is stored in lowest terms with a positive denominator.
pub fn is_canonical(q: &BigRational) -> bool {
    q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
}

pub(crate) fn pow_rat(base: &BigRational, exp: usize) -> BigRational {
    num_traits::pow(base.clone(), exp)
}
