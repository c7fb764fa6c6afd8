//! Resultants by the subresultant pseudo-remainder sequence, generic over
//! the coefficient ring so that the same routine eliminates a variable from
//! bivariate polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{zpoly, BiPoly, UniPoly};
use crate::error::{Error, Result};

/// An integral domain with exact division.
trait Domain: Clone + PartialEq {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Quotient known to be exact.
    fn exact_div(&self, o: &Self) -> Self;

    fn pow(&self, e: usize) -> Self {
        let mut acc = self.one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Domain for BigInt {
    fn zero(&self) -> Self {
        <BigInt as Zero>::zero()
    }
    fn one(&self) -> Self {
        <BigInt as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Self {
        let (q, r) = self.div_rem(o);
        debug_assert!(Zero::is_zero(&r), "inexact integer division in subresultant");
        q
    }
    fn pow(&self, e: usize) -> Self {
        num_traits::pow(self.clone(), e)
    }
}

impl Domain for UniPoly {
    fn zero(&self) -> Self {
        UniPoly::zero(self.var())
    }
    fn one(&self) -> Self {
        UniPoly::one(self.var())
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Self {
        self.div_exact(o)
            .expect("inexact polynomial division in subresultant")
    }
}

fn trim<R: Domain>(p: &mut Vec<R>) {
    while p.last().is_some_and(Domain::is_zero) {
        p.pop();
    }
}

fn prem<R: Domain>(a: &[R], b: &[R]) -> Vec<R> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut steps = r.len() - db;
    while r.len() > db {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (j, bc) in b.iter().enumerate() {
            r[k + j] = r[k + j].sub(&lr.mul(bc));
        }
        r.pop();
        trim(&mut r);
        steps -= 1;
    }
    if steps > 0 {
        let f = lb.pow(steps);
        for c in r.iter_mut() {
            *c = c.mul(&f);
        }
    }
    r
}

/// Sylvester resultant of two nonzero dense polynomials (ascending
/// coefficients) over an integral domain.
fn subresultant<R: Domain>(a: &[R], b: &[R]) -> R {
    let unit = a[0].one();
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    let mut sign_flip = false;
    if a.len() < b.len() {
        // Res(a, b) = (-1)^(deg a * deg b) Res(b, a)
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            sign_flip = true;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.len() == 1 {
        let r = b[0].pow(a.len() - 1);
        return if sign_flip { r.neg() } else { r };
    }
    let mut g = unit.clone();
    let mut h = unit.clone();
    loop {
        let (da, db) = (a.len() - 1, b.len() - 1);
        if da % 2 == 1 && db % 2 == 1 {
            sign_flip = !sign_flip;
        }
        let delta = da - db;
        let r = prem(&a, &b);
        a = b;
        if r.is_empty() {
            return unit.zero();
        }
        let divisor = g.mul(&h.pow(delta));
        b = r.iter().map(|c| c.exact_div(&divisor)).collect();
        g = a.last().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g.pow(delta).exact_div(&h.pow(delta - 1)),
        };
        if b.len() == 1 {
            break;
        }
    }
    let da = a.len() - 1;
    let res = b[0].pow(da).exact_div(&h.pow(da - 1));
    if sign_flip {
        res.neg()
    } else {
        res
    }
}

/// `Res(p, q) = lc(p)^deg(q) * prod q(root_i(p))`.
pub fn resultant(p: &UniPoly, q: &UniPoly) -> Result<BigRational> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.var() != q.var() && p.degree() > Some(0) && q.degree() > Some(0) {
        return Err(Error::VariableMismatch(p.var().into(), q.var().into()));
    }
    let (dp, dq) = (p.degree().unwrap(), q.degree().unwrap());
    let (zp, sp) = zpoly::from_rational(p.coeffs());
    let (zq, sq) = zpoly::from_rational(q.coeffs());
    let core = subresultant(&zp, &zq);
    let scale = super::pow_rat(&sp, dq) * super::pow_rat(&sq, dp);
    Ok(BigRational::from_integer(core) * scale)
}

/// Resultant of two bivariate polynomials with respect to `var`, returned
/// as a polynomial in the remaining variable.
pub fn resultant_in(p: &BiPoly, q: &BiPoly, var: &str) -> Result<UniPoly> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.vars() != q.vars() {
        return Err(Error::VariableMismatch(p.vars().join(","), q.vars().join(",")));
    }
    let idx = p
        .var_index(var)
        .ok_or_else(|| Error::VariableMismatch(var.into(), p.vars().join(",")))?;
    let other = p.vars()[1 - idx].clone();
    let cp = p.coefficients_in(idx);
    let cq = q.coefficients_in(idx);
    Ok(subresultant(&cp, &cq).with_var(other))
}
