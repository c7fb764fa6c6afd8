//! Sparse bivariate polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{zpoly, UniPoly};
use crate::error::{Error, Result};

/// Map from exponent pair `(i, j)` (powers of the first and second
/// variable) to a nonzero coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    vars: [String; 2],
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BiPoly {
    pub fn zero(v0: impl Into<String>, v1: impl Into<String>) -> Self {
        Self {
            vars: [v0.into(), v1.into()],
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        v0: impl Into<String>,
        v1: impl Into<String>,
        terms: impl IntoIterator<Item = ((u32, u32), BigRational)>,
    ) -> Self {
        let mut p = Self::zero(v0, v1);
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    /// Terms given as `(coefficient, exponent of v0, exponent of v1)`.
    pub fn from_int_terms(v0: &str, v1: &str, terms: &[(i64, u32, u32)]) -> Self {
        Self::from_terms(
            v0,
            v1,
            terms
                .iter()
                .map(|&(c, i, j)| ((i, j), BigRational::from_integer(c.into()))),
        )
    }

    pub fn constant(v0: &str, v1: &str, c: BigRational) -> Self {
        Self::from_terms(v0, v1, [((0, 0), c)])
    }

    /// The polynomial consisting of variable `idx` alone.
    pub fn variable(v0: &str, v1: &str, idx: usize) -> Self {
        let key = if idx == 0 { (1, 0) } else { (0, 1) };
        Self::from_terms(v0, v1, [(key, BigRational::one())])
    }

    /// Embeds a univariate polynomial as a polynomial in variable `idx`.
    pub fn from_uni(v0: &str, v1: &str, p: &UniPoly, idx: usize) -> Self {
        Self::from_terms(
            v0,
            v1,
            p.coeffs().iter().enumerate().map(|(k, c)| {
                let k = k as u32;
                (if idx == 0 { (k, 0) } else { (0, k) }, c.clone())
            }),
        )
    }

    pub fn add_term(&mut self, key: (u32, u32), c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn vars(&self) -> &[String; 2] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), BigRational> {
        &self.terms
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigRational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_in(&self, idx: usize) -> Option<u32> {
        self.terms
            .keys()
            .map(|&(i, j)| if idx == 0 { i } else { j })
            .max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars[0].clone(), self.vars[1].clone());
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.vars[0], &self.vars[1], BigRational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (&(i, j), c)| {
            acc + c * super::pow_rat(a, i as usize) * super::pow_rat(b, j as usize)
        })
    }

    /// Substitutes `value` for variable `idx`; the result is a polynomial in
    /// the other variable.
    pub fn substitute(&self, idx: usize, value: &BigRational) -> UniPoly {
        let other = self.vars[1 - idx].clone();
        let mut coeffs: Vec<BigRational> = Vec::new();
        for (&(i, j), c) in &self.terms {
            let (sub_exp, keep_exp) = if idx == 0 { (i, j) } else { (j, i) };
            let k = keep_exp as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigRational::zero());
            }
            coeffs[k] += c * super::pow_rat(value, sub_exp as usize);
        }
        UniPoly::new(other, coeffs)
    }

    pub fn partial_derivative(&self, idx: usize) -> Self {
        let mut out = Self::zero(self.vars[0].clone(), self.vars[1].clone());
        for (&(i, j), c) in &self.terms {
            let e = if idx == 0 { i } else { j };
            if e == 0 {
                continue;
            }
            let key = if idx == 0 { (i - 1, j) } else { (i, j - 1) };
            out.add_term(key, c * BigRational::from_integer(e.into()));
        }
        out
    }

    /// Coefficients of the powers of variable `idx`, each a polynomial in
    /// the other variable, ascending.
    pub fn coefficients_in(&self, idx: usize) -> Vec<UniPoly> {
        let other = self.vars[1 - idx].clone();
        let deg = match self.degree_in(idx) {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut rows: Vec<Vec<BigRational>> = vec![Vec::new(); deg + 1];
        for (&(i, j), c) in &self.terms {
            let (main, rest) = if idx == 0 { (i, j) } else { (j, i) };
            let row = &mut rows[main as usize];
            if row.len() <= rest as usize {
                row.resize(rest as usize + 1, BigRational::zero());
            }
            row[rest as usize] = c.clone();
        }
        rows.into_iter().map(|r| UniPoly::new(other.clone(), r)).collect()
    }

    pub fn from_coefficients_in(v0: &str, v1: &str, idx: usize, coeffs: &[UniPoly]) -> Self {
        let mut out = Self::zero(v0, v1);
        for (main, poly) in coeffs.iter().enumerate() {
            for (rest, c) in poly.coeffs().iter().enumerate() {
                let (main, rest) = (main as u32, rest as u32);
                out.add_term(if idx == 0 { (main, rest) } else { (rest, main) }, c.clone());
            }
        }
        out
    }

    /// `p(inner)` for a univariate `p`.
    pub fn compose(p: &UniPoly, inner: &BiPoly) -> Self {
        let (v0, v1) = (&inner.vars[0], &inner.vars[1]);
        let mut acc = Self::zero(v0.clone(), v1.clone());
        for c in p.coeffs().iter().rev() {
            acc = &acc * inner;
            acc.add_term((0, 0), c.clone());
        }
        acc
    }

    /// Division by a divisor whose leading coefficient in variable `idx` is
    /// a nonzero constant. Returns `(quotient, remainder)` with the
    /// remainder of lower degree in that variable.
    pub fn div_rem_in(&self, divisor: &BiPoly, idx: usize) -> Result<(BiPoly, BiPoly)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dc = divisor.coefficients_in(idx);
        let lead = dc.last().unwrap();
        if lead.degree() != Some(0) {
            return Err(Error::Invariant(
                "divisor must have constant leading coefficient".into(),
            ));
        }
        let inv = lead.coeffs()[0].recip();
        let dd = dc.len() - 1;
        let mut rem = self.coefficients_in(idx);
        let other = &self.vars[1 - idx];
        let mut quo = vec![UniPoly::zero(other.clone()); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap().scale(&inv);
            for (j, d) in dc.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * d);
            }
            quo[k] = c;
            rem.pop();
            while rem.last().is_some_and(UniPoly::is_zero) {
                rem.pop();
            }
        }
        let (v0, v1) = (&self.vars[0], &self.vars[1]);
        Ok((
            Self::from_coefficients_in(v0, v1, idx, &quo),
            Self::from_coefficients_in(v0, v1, idx, &rem),
        ))
    }

    /// `true` when every exponent of variable `idx` is even.
    pub fn is_even_in(&self, idx: usize) -> bool {
        self.terms
            .keys()
            .all(|&(i, j)| (if idx == 0 { i } else { j }) % 2 == 0)
    }

    /// Exchanges the roles of the two variables, keeping the names in place.
    pub fn swap_arguments(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// Replaces every power `v1^(2k)` by `w^k`, renaming the variable.
    /// Fails if an odd power of `v1` occurs.
    pub fn halve_second(&self, new_name: &str) -> Result<Self> {
        if !self.is_even_in(1) {
            return Err(Error::Invariant(format!("{} occurs to an odd power", self.vars[1])));
        }
        Ok(Self {
            vars: [self.vars[0].clone(), new_name.to_string()],
            terms: self.terms.iter().map(|(&(i, j), c)| ((i, j / 2), c.clone())).collect(),
        })
    }

    /// Content removed, leading term (largest exponent pair) positive.
    pub fn primitive_integer_form(&self) -> BTreeMap<(u32, u32), BigInt> {
        let keys: Vec<(u32, u32)> = self.terms.keys().copied().collect();
        let coeffs: Vec<BigRational> = self.terms.values().cloned().collect();
        let den = super::denominator_lcm(&coeffs);
        let ints: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let mut g = zpoly::content(&ints);
        if ints.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        keys.into_iter().zip(ints).map(|(k, c)| (k, c / &g)).collect()
    }

    pub fn eq_up_to_scalar(&self, other: &BiPoly) -> bool {
        self.vars == other.vars && self.primitive_integer_form() == other.primitive_integer_form()
    }

    fn to_integer_scaled(&self) -> (BTreeMap<(u32, u32), BigInt>, BigInt) {
        let den = super::denominator_lcm(self.terms.values());
        let ints = self
            .terms
            .iter()
            .map(|(k, c)| (*k, c.numer() * (&den / c.denom())))
            .collect();
        (ints, den)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c);
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let (a, da) = self.to_integer_scaled();
        let (b, db) = rhs.to_integer_scaled();
        let mut acc: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for (&(i, j), x) in &a {
            for (&(k, l), y) in &b {
                *acc.entry((i + k, j + l)).or_default() += x * y;
            }
        }
        let den = da * db;
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, BigRational::new(c, den.clone())))
            .collect();
        BiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: &BiPoly) -> BiPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Graded by total degree, descending.
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        for (n, key) in keys.into_iter().enumerate() {
            let c = &self.terms[key];
            let neg = c.is_negative();
            let mag = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut parts = Vec::new();
            if !mag.is_one() || *key == (0, 0) {
                parts.push(super::format_rational(&mag));
            }
            for (idx, e) in [key.0, key.1].into_iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(self.vars[idx].clone()),
                    _ => parts.push(format!("{}^{}", self.vars[idx], e)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({})", self)
    }
}

/// JSON form: `{"vars":["r","x"],"terms":[[i,j,"c"],...]}` with terms in
/// ascending exponent order.
#[derive(Serialize, Deserialize)]
struct BiPolyJson {
    vars: [String; 2],
    terms: Vec<(u32, u32, String)>,
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BiPolyJson {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| (i, j, super::format_rational(c)))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BiPolyJson::deserialize(d)?;
        let mut out = BiPoly::zero(raw.vars[0].clone(), raw.vars[1].clone());
        for (i, j, c) in raw.terms {
            let c = super::parse_rational(&c).map_err(serde::de::Error::custom)?;
            out.add_term((i, j), c);
        }
        Ok(out)
    }
}
