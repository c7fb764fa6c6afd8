//! Squarefree decomposition and complete factorization over the rationals.

mod berlekamp;
mod zassenhaus;

use num_rational::BigRational;

use crate::arith::{poly_gcd, UniPoly};
use crate::error::{Error, Result};

pub use zassenhaus::factor_squarefree as factor_squarefree_integer;

/// `unit * prod factor_i ^ mult_i`, factors monic, irreducible and pairwise
/// coprime, sorted by degree then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: BigRational,
    pub factors: Vec<(UniPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self, var: &str) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(var, self.unit.clone()), |acc, (f, m)| {
                &acc * &f.pow(*m)
            })
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// `p / gcd(p, p')`, monic.
pub fn squarefree_part(p: &UniPoly) -> Result<UniPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = poly_gcd(p, &p.derivative())?;
    Ok(p.div_exact(&g).expect("gcd divides").monic())
}

/// Yun's algorithm: monic `(a_i, i)` with `monic(p) = prod a_i^i`, each
/// `a_i` squarefree and of positive degree.
pub fn squarefree_decomposition(p: &UniPoly) -> Result<Vec<(UniPoly, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = p.monic();
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let dp = p.derivative();
    let b = poly_gcd(&p, &dp)?;
    let mut c = p.div_exact(&b).expect("gcd divides");
    let mut d = &dp.div_exact(&b).expect("gcd divides") - &c.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while c.degree() > Some(0) {
        let a = poly_gcd(&c, &d)?;
        c = c.div_exact(&a).expect("gcd divides");
        d = &d.div_exact(&a).expect("gcd divides") - &c.derivative();
        if a.degree() > Some(0) {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

/// Complete factorization over the rationals.
pub fn factor_over_rationals(p: &UniPoly) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let var = p.var().to_string();
    let unit = p.lc().unwrap().clone();
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(p)? {
        let ints = part.primitive_integer_form();
        for f in factor_squarefree_integer(&ints) {
            factors.push((UniPoly::from_bigints(var.clone(), &f).monic(), mult));
        }
    }
    factors.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Ok(Factorization { unit, factors })
}

/// Irreducible monic factors only (multiplicities dropped).
pub fn irreducible_factors(p: &UniPoly) -> Result<Vec<UniPoly>> {
    Ok(factor_over_rationals(p)?
        .factors
        .into_iter()
        .map(|(f, _)| f)
        .collect())
}

pub fn is_irreducible(p: &UniPoly) -> Result<bool> {
    if p.degree().unwrap_or(0) == 0 {
        return Ok(false);
    }
    Ok(factor_over_rationals(p)?.is_irreducible())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints("u", c)
    }

    #[test]
    fn squarefree_examples() {
        let sq = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        assert_eq!(squarefree_part(&sq).unwrap(), &p(&[-1, 1]) * &p(&[2, 1]));
        assert_eq!(squarefree_part(&p(&[2, -2, 1])).unwrap(), p(&[2, -2, 1]));
    }

    #[test]
    fn yun_multiplicities() {
        let f = &(&p(&[-1, 1]).pow(3) * &p(&[1, 0, 1]).pow(2)) * &p(&[5, 1]);
        let dec = squarefree_decomposition(&f.scale(&rat(3, 2))).unwrap();
        assert_eq!(dec, vec![(p(&[5, 1]), 1), (p(&[1, 0, 1]), 2), (p(&[-1, 1]), 3)]);
    }

    #[test]
    fn factor_examples() {
        let f = factor_over_rationals(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
        assert!(factor_over_rationals(&p(&[2, -2, 1])).unwrap().is_irreducible());
        assert!(factor_over_rationals(&p(&[3, 0, 0, -2, 1])).unwrap().is_irreducible());
    }

    #[test]
    fn reconstruction_with_rational_unit() {
        let f = (&(&p(&[-1, 1]).pow(2) * &p(&[3, 0, 1])) * &p(&[1, 2])).scale(&rat(-5, 6));
        let fac = factor_over_rationals(&f).unwrap();
        assert_eq!(fac.expand("u"), f);
        assert_eq!(fac.unit, rat(-5, 3));
        assert_eq!(fac.factors.len(), 3);
    }

    #[test]
    fn constants_have_no_factors() {
        let fac = factor_over_rationals(&UniPoly::constant("u", rat_int(7))).unwrap();
        assert!(fac.factors.is_empty());
        assert!(factor_over_rationals(&UniPoly::zero("u")).is_err());
    }
}
