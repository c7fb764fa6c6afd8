//! Arithmetic in `Q[r]/(m(r))` for an irreducible `m`, minimal polynomials,
//! and integrality verdicts read off minimal-polynomial denominators.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, ring::rational_to_f64, RatMatrix, Ring, UniPoly};
use crate::error::{Error, Result};
use crate::factor;

/// `Q[var]/(modulus)` with a monic irreducible modulus.
#[derive(Debug, PartialEq, Eq)]
pub struct NumberField {
    modulus: UniPoly,
}

impl NumberField {
    /// Normalizes `modulus` to monic and checks irreducibility.
    pub fn new(modulus: &UniPoly) -> Result<Arc<Self>> {
        if modulus.degree().unwrap_or(0) == 0 {
            return Err(Error::Invariant("field modulus must have positive degree".into()));
        }
        if !factor::is_irreducible(modulus)? {
            return Err(Error::Invariant(format!("modulus {modulus} is reducible")));
        }
        Ok(Arc::new(Self {
            modulus: modulus.monic(),
        }))
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn var(&self) -> &str {
        self.modulus.var()
    }

    pub fn generator(self: &Arc<Self>) -> NFElem {
        self.element(&UniPoly::identity(self.var()))
    }

    pub fn rational(self: &Arc<Self>, c: BigRational) -> NFElem {
        self.element(&UniPoly::constant(self.var(), c))
    }

    pub fn int(self: &Arc<Self>, v: i64) -> NFElem {
        self.rational(BigRational::from_integer(v.into()))
    }

    /// The class of `p(var)`.
    pub fn element(self: &Arc<Self>, p: &UniPoly) -> NFElem {
        NFElem {
            field: Arc::clone(self),
            repr: p.clone().with_var(self.var()).rem(&self.modulus),
        }
    }
}

/// An element of a [`NumberField`], stored as its residue of degree
/// below the field degree.
#[derive(Clone)]
pub struct NFElem {
    field: Arc<NumberField>,
    repr: UniPoly,
}

impl PartialEq for NFElem {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.field, &other.field) || self.field == other.field)
            && self.repr == other.repr
    }
}

impl NFElem {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    /// Residue representative.
    pub fn as_poly(&self) -> &UniPoly {
        &self.repr
    }

    /// Coefficients on the power basis, exactly `degree` entries.
    pub fn coords(&self) -> Vec<BigRational> {
        (0..self.field.degree()).map(|i| self.repr.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.repr.is_zero()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.repr.degree() {
            None => Some(BigRational::zero()),
            Some(0) => Some(self.repr.coeff(0)),
            _ => None,
        }
    }

    fn same_field(&self, other: &NFElem) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field == other.field,
            "number field elements from different fields"
        );
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inverse(&self) -> Result<NFElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = self.repr.ext_gcd(&self.field.modulus);
        if !g.is_one() {
            return Err(Error::Invariant(format!(
                "{} is not invertible modulo {}",
                self.repr, self.field.modulus
            )));
        }
        Ok(self.field.element(&s))
    }

    pub fn pow(&self, e: u32) -> NFElem {
        let mut acc = self.field.int(1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Matrix of multiplication by `self` on the power basis.
    pub fn multiplication_matrix(&self) -> RatMatrix {
        let k = self.field.degree();
        let mut m = RatMatrix::zeros(k);
        let mut col = self.clone();
        let gen = self.field.generator();
        for i in 0..k {
            for (j, c) in col.coords().into_iter().enumerate() {
                m.set(j, i, c);
            }
            col = &col * &gen;
        }
        m
    }

    pub fn char_poly(&self, var: &str) -> UniPoly {
        self.multiplication_matrix().char_poly(var)
    }

    /// Monic irreducible polynomial over Q with `self` as a root.
    ///
    /// The characteristic polynomial of multiplication by `self` is a power
    /// of the minimal polynomial, so its squarefree part is the answer.
    pub fn minimal_polynomial(&self, var: &str) -> UniPoly {
        factor::squarefree_part(&self.char_poly(var)).expect("characteristic polynomial is monic")
    }

    /// Value under the embedding sending the generator to `root`.
    pub fn embed(&self, root: Complex64) -> Complex64 {
        self.repr
            .coeffs()
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, c| acc * root + rational_to_f64(c))
    }
}

impl fmt::Display for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.repr)
    }
}

impl fmt::Debug for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NFElem({} mod {})", self.repr, self.field.modulus)
    }
}

impl Add for &NFElem {
    type Output = NFElem;
    fn add(self, rhs: &NFElem) -> NFElem {
        self.same_field(rhs);
        NFElem {
            field: Arc::clone(&self.field),
            repr: &self.repr + &rhs.repr,
        }
    }
}

impl Sub for &NFElem {
    type Output = NFElem;
    fn sub(self, rhs: &NFElem) -> NFElem {
        self.same_field(rhs);
        NFElem {
            field: Arc::clone(&self.field),
            repr: &self.repr - &rhs.repr,
        }
    }
}

impl Mul for &NFElem {
    type Output = NFElem;
    fn mul(self, rhs: &NFElem) -> NFElem {
        self.same_field(rhs);
        NFElem {
            field: Arc::clone(&self.field),
            repr: (&self.repr * &rhs.repr).rem(&self.field.modulus),
        }
    }
}

impl Neg for &NFElem {
    type Output = NFElem;
    fn neg(self) -> NFElem {
        NFElem {
            field: Arc::clone(&self.field),
            repr: -&self.repr,
        }
    }
}

impl Ring for NFElem {
    fn lift(&self, c: &BigRational) -> Self {
        self.field.rational(c.clone())
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
        NFElem::is_zero(self)
    }
}

/// Polynomials over a number field as coefficient vectors, lowest degree
/// first, with no trailing zeros.
pub type NFPoly = Vec<NFElem>;

fn nf_trim(p: &mut NFPoly) {
    while p.last().is_some_and(NFElem::is_zero) {
        p.pop();
    }
}

/// Maps a polynomial with coefficients in `Q[var]` into `K[y]`.
pub fn nf_poly_from(field: &Arc<NumberField>, coeffs: &[UniPoly]) -> NFPoly {
    let mut out: NFPoly = coeffs.iter().map(|c| field.element(c)).collect();
    nf_trim(&mut out);
    out
}

fn nf_rem(a: &NFPoly, b: &NFPoly) -> Result<NFPoly> {
    let lead_inv = b.last().ok_or(Error::DivisionByZero)?.inverse()?;
    let mut r = a.clone();
    nf_trim(&mut r);
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let c = r.last().unwrap() * &lead_inv;
        for (j, d) in b.iter().enumerate() {
            r[k + j] = &r[k + j] - &(&c * d);
        }
        r.pop();
        nf_trim(&mut r);
    }
    Ok(r)
}

/// Monic gcd over the field; empty for `gcd(0, 0)`.
pub fn nf_poly_gcd(a: &NFPoly, b: &NFPoly) -> Result<NFPoly> {
    let (mut a, mut b) = (a.clone(), b.clone());
    nf_trim(&mut a);
    nf_trim(&mut b);
    while !b.is_empty() {
        let r = nf_rem(&a, &b)?;
        a = b;
        b = r;
    }
    if let Some(lc) = a.last() {
        let inv = lc.inverse()?;
        a = a.iter().map(|c| c * &inv).collect();
    }
    Ok(a)
}

pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Integrality of the roots of a monic rational polynomial.
///
/// The roots are algebraic integers exactly when every coefficient is an
/// integer; a prime `p` dividing the denominator lcm certifies a conjugate
/// with negative valuation at some prime above `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralityVerdict {
    #[serde(rename = "integral")]
    pub is_algebraic_integer: bool,
    #[serde(with = "arith::intjson")]
    pub denominator_lcm: BigInt,
    #[serde(with = "arith::intjson::vec")]
    pub bad_primes: Vec<BigInt>,
    /// Part of the denominator left unfactored by trial division.
    #[serde(with = "arith::intjson::option")]
    pub unfactored_cofactor: Option<BigInt>,
}

impl IntegralityVerdict {
    pub fn has_bad_prime(&self, p: u64) -> bool {
        self.bad_primes.iter().any(|q| *q == BigInt::from(p))
    }

    pub fn prime_set_complete(&self) -> bool {
        self.unfactored_cofactor.is_none()
    }
}

pub fn integrality_verdict(p: &UniPoly) -> Result<IntegralityVerdict> {
    if !p.is_monic() {
        return Err(Error::Invariant(format!("integrality verdict needs a monic polynomial, got {p}")));
    }
    let den = arith::denominator_lcm(p.coeffs());
    let (bad_primes, cofactor) = trial_factor(&den, TRIAL_DIVISION_BOUND);
    Ok(IntegralityVerdict {
        is_algebraic_integer: den.is_one(),
        denominator_lcm: den,
        bad_primes,
        unfactored_cofactor: cofactor,
    })
}

/// Distinct prime divisors up to `bound`, plus any remaining cofactor > 1.
fn trial_factor(n: &BigInt, bound: u64) -> (Vec<BigInt>, Option<BigInt>) {
    let mut n = n.abs();
    let mut primes = Vec::new();
    let mut d = 2u64;
    while d <= bound {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        if n.is_multiple_of(&bd) {
            primes.push(bd.clone());
            while n.is_multiple_of(&bd) {
                n /= &bd;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n.is_one() {
        return (primes, None);
    }
    // Whatever is left is prime when it is below bound^2.
    let limit = BigInt::from(bound) * BigInt::from(bound);
    if n <= limit || n.to_u64().is_some_and(|v| v <= bound) {
        primes.push(n);
        primes.sort();
        (primes, None)
    } else {
        (primes, Some(n))
    }
}
