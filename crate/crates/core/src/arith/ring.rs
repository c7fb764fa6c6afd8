//! Minimal commutative-ring interface used to evaluate the same trace
//! identities over rationals, number fields and floating-point complexes.

use std::fmt::Debug;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::UniPoly;

pub trait Ring: Clone + Debug + PartialEq {
    /// Embeds a rational constant into the ring that `self` lives in.
    fn lift(&self, c: &BigRational) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn is_zero_element(&self) -> bool;

    fn lift_int(&self, v: i64) -> Self {
        self.lift(&BigRational::from_integer(v.into()))
    }

    fn neg(&self) -> Self {
        self.lift_int(0).sub(self)
    }

    fn square(&self) -> Self {
        self.mul(self)
    }

    /// Horner evaluation of `p` at `self`.
    fn eval_poly(&self, p: &UniPoly) -> Self {
        p.coeffs()
            .iter()
            .rev()
            .fold(self.lift_int(0), |acc, c| acc.mul(self).add(&self.lift(c)))
    }
}

impl Ring for BigRational {
    fn lift(&self, c: &BigRational) -> Self {
        c.clone()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_zero_element(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Ring for Complex64 {
    fn lift(&self, c: &BigRational) -> Self {
        Complex64::new(rational_to_f64(c), 0.0)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_zero_element(&self) -> bool {
        self.norm() == 0.0
    }
}

pub fn rational_to_f64(c: &BigRational) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}
