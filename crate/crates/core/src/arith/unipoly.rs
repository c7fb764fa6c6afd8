//! Dense univariate polynomials with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::modp::PrimeField;
use super::zpoly;
use crate::error::{Error, Result};

/// A univariate polynomial with coefficients in ascending order.
///
/// The zero polynomial has no coefficients; otherwise the last coefficient
/// is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    var: String,
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(var: impl Into<String>, coeffs: Vec<BigRational>) -> Self {
        let mut p = Self {
            var: var.into(),
            coeffs,
        };
        p.trim();
        p
    }

    pub fn from_ints(var: impl Into<String>, coeffs: &[i64]) -> Self {
        Self::new(
            var,
            coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
        )
    }

    pub fn from_bigints(var: impl Into<String>, coeffs: &[BigInt]) -> Self {
        Self::new(var, zpoly::to_rational(coeffs))
    }

    pub fn zero(var: impl Into<String>) -> Self {
        Self::new(var, Vec::new())
    }

    pub fn one(var: impl Into<String>) -> Self {
        Self::constant(var, BigRational::one())
    }

    pub fn constant(var: impl Into<String>, c: BigRational) -> Self {
        Self::new(var, vec![c])
    }

    /// The monomial `var`.
    pub fn identity(var: impl Into<String>) -> Self {
        Self::from_ints(var, &[0, 1])
    }

    /// `c * var^k`.
    pub fn monomial(var: impl Into<String>, c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.push(c);
        Self::new(var, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn with_var(mut self, var: impl Into<String>) -> Self {
        self.var = var.into();
        self
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(One::is_one)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(
            self.var.clone(),
            self.coeffs.iter().map(|a| a * c).collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.var.clone(),
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.var.clone());
        for _ in 0..e {
            result = &result * self;
        }
        result
    }

    /// `self(inner)`, carrying the variable of `inner`.
    pub fn compose(&self, inner: &UniPoly) -> Self {
        let mut acc = Self::zero(inner.var.clone());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(inner.var.clone(), c.clone());
        }
        acc
    }

    /// `p(u^k)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(self.var.clone(), coeffs)
    }

    /// Euclidean division. Panics when `d` is zero.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("polynomial division by zero");
        let inv = d.coeffs[dd].recip();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UniPoly::zero(self.var.clone()), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() * &inv;
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * dc;
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (
            UniPoly::new(self.var.clone(), q),
            UniPoly::new(self.var.clone(), r),
        )
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.div_rem(d).1
    }

    /// Exact quotient, `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g` and `g` monic.
    pub fn ext_gcd(&self, other: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let var = self.var.clone();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UniPoly::one(var.clone()), UniPoly::zero(var.clone()));
        let (mut t0, mut t1) = (UniPoly::zero(var.clone()), UniPoly::one(var.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.lc().cloned() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = lc.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Integer polynomial with content removed and positive leading
    /// coefficient; the canonical representative up to a rational scalar.
    pub fn primitive_integer_form(&self) -> Vec<BigInt> {
        zpoly::from_rational(&self.coeffs).0
    }

    /// `true` when the two polynomials agree up to a nonzero rational scalar.
    pub fn eq_up_to_scalar(&self, other: &UniPoly) -> bool {
        self.primitive_integer_form() == other.primitive_integer_form()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomial serializes")
    }
}

fn same_var(a: &UniPoly, b: &UniPoly) -> String {
    // Constants carry no information about the variable.
    if a.degree().unwrap_or(0) == 0 && b.degree().unwrap_or(0) > 0 {
        b.var.clone()
    } else {
        a.var.clone()
    }
}

fn check_vars(p: &UniPoly, q: &UniPoly) -> Result<()> {
    if p.var != q.var && p.degree().unwrap_or(0) > 0 && q.degree().unwrap_or(0) > 0 {
        return Err(Error::VariableMismatch(p.var.clone(), q.var.clone()));
    }
    Ok(())
}

const GCD_PRIMES: [u64; 3] = [2_147_483_629, 2_147_483_587, 2_147_483_579];

/// Monic greatest common divisor; `gcd(p, 0) = monic(p)`.
///
/// A coprimality certificate modulo a prime not dividing either leading
/// coefficient is tried first; otherwise a primitive remainder sequence
/// over the integers is run.
pub fn poly_gcd(p: &UniPoly, q: &UniPoly) -> Result<UniPoly> {
    check_vars(p, q)?;
    let var = same_var(p, q);
    if p.is_zero() {
        return Ok(q.monic().with_var(var));
    }
    if q.is_zero() {
        return Ok(p.monic().with_var(var));
    }
    let mut a = p.primitive_integer_form();
    let mut b = q.primitive_integer_form();
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    if b.len() == 1 {
        return Ok(UniPoly::one(var));
    }
    for &prime in &GCD_PRIMES {
        let field = PrimeField::new(prime);
        let (pa, pb) = (field.reduce_poly(&a), field.reduce_poly(&b));
        if pa.len() == a.len() && pb.len() == b.len() {
            if field.gcd(&pa, &pb).len() == 1 {
                return Ok(UniPoly::one(var));
            }
            break;
        }
    }
    while !b.is_empty() {
        let r = zpoly::prem(&a, &b);
        a = b;
        b = zpoly::primitive_part(&r);
    }
    Ok(UniPoly::from_bigints(var, &a).monic())
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        UniPoly::new(same_var(self, rhs), coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let var = same_var(self, rhs);
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(var);
        }
        // Multiply over the integers after clearing denominators.
        let da = super::denominator_lcm(&self.coeffs);
        let db = super::denominator_lcm(&rhs.coeffs);
        let za: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&da / c.denom())).collect();
        let zb: Vec<BigInt> = rhs.coeffs.iter().map(|c| c.numer() * (&db / c.denom())).collect();
        let den = da * db;
        let coeffs = if den.is_one() {
            zpoly::to_rational(&zpoly::mul(&za, &zb))
        } else {
            zpoly::mul(&za, &zb)
                .into_iter()
                .map(|c| BigRational::new(c, den.clone()))
                .collect()
        };
        UniPoly::new(var, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: &UniPoly) -> UniPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mag_s = super::format_rational(&mag);
            match i {
                0 => write!(f, "{mag_s}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag_s}*")?;
                    }
                    write!(f, "{}", self.var)?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self)
    }
}

#[derive(Serialize, Deserialize)]
struct UniPolyJson {
    var: String,
    coeffs: Vec<String>,
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        UniPolyJson {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(super::format_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = UniPolyJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| super::parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(UniPoly::new(raw.var, coeffs))
    }
}
