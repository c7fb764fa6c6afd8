//! The Chebyshev-like sequences `f_j`, `g_j = f_j - f_{j-1}` and the
//! intersection polynomial `G_j = g_{j+1}' g_j - g_{j+1} g_j'`.
//!
//! `f_0 = 0`, `f_1 = 1`, `f_{j+1} = u f_j - f_{j-1}`; `f_j` is monic of
//! degree `j - 1` for `j >= 1`.

use std::collections::HashMap;
use std::sync::RwLock;

use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{poly_gcd, UniPoly};
use crate::error::{Error, Result};

pub const DEFAULT_VAR: &str = "u";

#[derive(Default)]
struct Memo {
    f: Vec<UniPoly>,
    g: HashMap<usize, UniPoly>,
    big_g: HashMap<usize, UniPoly>,
}

/// Append-only memo of `f_j`, `g_j`, `G_j`, safe to share between threads.
pub struct ChebCache {
    var: String,
    memo: RwLock<Memo>,
}

impl Default for ChebCache {
    fn default() -> Self {
        Self::new()
    }
}

impl ChebCache {
    pub fn new() -> Self {
        Self::with_var(DEFAULT_VAR)
    }

    pub fn with_var(var: &str) -> Self {
        Self {
            var: var.to_string(),
            memo: RwLock::new(Memo::default()),
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn f(&self, j: usize) -> UniPoly {
        if let Some(p) = self.memo.read().unwrap().f.get(j) {
            return p.clone();
        }
        let mut memo = self.memo.write().unwrap();
        if memo.f.is_empty() {
            memo.f.push(UniPoly::zero(self.var.clone()));
            memo.f.push(UniPoly::one(self.var.clone()));
        }
        let u = UniPoly::identity(self.var.clone());
        while memo.f.len() <= j {
            let k = memo.f.len();
            let next = &(&u * &memo.f[k - 1]) - &memo.f[k - 2];
            memo.f.push(next);
        }
        memo.f[j].clone()
    }

    pub fn g(&self, j: usize) -> Result<UniPoly> {
        if j < 1 {
            return Err(Error::Invariant("g_j is defined for j >= 1".into()));
        }
        if let Some(p) = self.memo.read().unwrap().g.get(&j) {
            return Ok(p.clone());
        }
        let p = &self.f(j) - &self.f(j - 1);
        self.memo.write().unwrap().g.insert(j, p.clone());
        Ok(p)
    }

    /// `G_j`, monic of degree `2j - 2`.
    pub fn big_g(&self, j: usize) -> Result<UniPoly> {
        if j < 2 {
            return Err(Error::Invariant("G_j is defined for j >= 2".into()));
        }
        if let Some(p) = self.memo.read().unwrap().big_g.get(&j) {
            return Ok(p.clone());
        }
        let (gj, gj1) = (self.g(j)?, self.g(j + 1)?);
        let p = &(&gj1.derivative() * &gj) - &(&gj1 * &gj.derivative());
        self.memo.write().unwrap().big_g.insert(j, p.clone());
        Ok(p)
    }
}

pub fn f_poly(j: usize) -> UniPoly {
    ChebCache::new().f(j)
}

pub fn g_poly(j: usize) -> Result<UniPoly> {
    ChebCache::new().g(j)
}

pub fn intersection_poly(j: usize) -> Result<UniPoly> {
    ChebCache::new().big_g(j)
}

/// Outcome of one named polynomial identity at a fixed index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
}

pub const IDENTITY_NAMES: [&str; 9] = [
    "(u+2) G_j = f_2j + 2j",
    "f_2j = u f_j^2 - 2 f_j f_(j-1)",
    "f_j(2) = j",
    "gcd(f_j, f_j') = 1",
    "gcd(G_j, f_j) = 1",
    "f_j^2 - f_(j-1) f_(j+1) = 1",
    "f_j g_j - f_(j-1) g_(j+1) = 1",
    "G_j - f_j^2 has even coefficients",
    "gcd(G_j, G_j') = 1",
];

/// Evaluates every identity in [`IDENTITY_NAMES`] at index `j >= 2`.
pub fn check_identities(cache: &ChebCache, j: usize) -> Result<Vec<IdentityCheck>> {
    let var = cache.var().to_string();
    let u = UniPoly::identity(var.clone());
    let constant = |v: i64| UniPoly::constant(var.clone(), BigRational::from_integer(v.into()));
    let (fj, fjm, fjp, f2j) = (cache.f(j), cache.f(j - 1), cache.f(j + 1), cache.f(2 * j));
    let (gj, gjp) = (cache.g(j)?, cache.g(j + 1)?);
    let big_g = cache.big_g(j)?;
    let fj_sq = &fj * &fj;
    let two = BigRational::from_integer(2.into());

    let results = [
        &(&u + &constant(2)) * &big_g == &f2j + &constant(2 * j as i64),
        f2j == &(&u * &fj_sq) - &(&fj * &fjm).scale(&two),
        fj.eval(&two) == BigRational::from_integer(j.into()),
        poly_gcd(&fj, &fj.derivative())?.is_one(),
        poly_gcd(&big_g, &fj)?.is_one(),
        &fj_sq - &(&fjm * &fjp) == constant(1),
        &(&fj * &gj) - &(&fjm * &gjp) == constant(1),
        (&big_g - &fj_sq)
            .coeffs()
            .iter()
            .all(|c| c.is_integer() && (c.numer() % 2u32).is_zero()),
        poly_gcd(&big_g, &big_g.derivative())?.is_one(),
    ];
    Ok(IDENTITY_NAMES
        .iter()
        .zip(results)
        .map(|(&name, holds)| IdentityCheck { name, holds })
        .collect())
}
