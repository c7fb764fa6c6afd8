//! The X model (coordinates `(r, x)`), the D model (coordinates `(r, t)`),
//! the maps between them, and Bezout bookkeeping for a pair of components.

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::arith::{resultant_in, BiPoly, Ring, UniPoly};
use crate::cheb::ChebCache;
use crate::error::{Error, Result};
use crate::factor;
use crate::numfield::{nf_poly_from, nf_poly_gcd, NumberField};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ModelTag {
    X,
    D,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VarietyModel {
    pub n: u32,
    pub tag: ModelTag,
    pub poly: BiPoly,
}

/// `D = (r - t) * D1`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComponentPair {
    pub n: u32,
    pub d0: BiPoly,
    pub d1: BiPoly,
}

pub(crate) fn check_n(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidN(n as i64));
    }
    Ok(())
}

fn r_poly(p: &UniPoly, v1: &str) -> BiPoly {
    BiPoly::from_uni("r", v1, &p.clone().with_var("r"), 0)
}

/// `t(r, x) = (2 - r)(x^2 - 2 - r) f_n(r)^2 + 2`.
pub fn t_of_rx(n: u32) -> Result<BiPoly> {
    check_n(n)?;
    let cache = ChebCache::with_var("r");
    let fnr = r_poly(&cache.f(n as usize), "x");
    let two_minus_r = BiPoly::from_int_terms("r", "x", &[(2, 0, 0), (-1, 1, 0)]);
    let x2_minus = BiPoly::from_int_terms("r", "x", &[(1, 0, 2), (-2, 0, 0), (-1, 1, 0)]);
    let mut t = &(&two_minus_r * &x2_minus) * &(&fnr * &fnr);
    t.add_term((0, 0), BigRational::from_integer(2.into()));
    Ok(t)
}

/// `f_n(t) (f_n(r) g_n(r) (2 + r - x^2) - 1) + f_{n-1}(t)` with `t = t(r, x)`.
pub fn x_variety_poly(n: u32) -> Result<VarietyModel> {
    let t = t_of_rx(n)?;
    let cache = ChebCache::new();
    let (n_us, f) = (n as usize, |j| cache.f(j));
    let fn_t = BiPoly::compose(&f(n_us), &t);
    let fn1_t = BiPoly::compose(&f(n_us - 1), &t);
    let rcache = ChebCache::with_var("r");
    let fg = r_poly(&(&rcache.f(n_us) * &rcache.g(n_us)?), "x");
    let mut inner = &fg * &BiPoly::from_int_terms("r", "x", &[(2, 0, 0), (1, 1, 0), (-1, 0, 2)]);
    inner.add_term((0, 0), -BigRational::one());
    Ok(VarietyModel {
        n,
        tag: ModelTag::X,
        poly: &(&fn_t * &inner) + &fn1_t,
    })
}

/// `g_{n+1}(r) g_n(t) - g_n(r) g_{n+1}(t)`.
pub fn d_variety_poly(n: u32) -> Result<VarietyModel> {
    check_n(n)?;
    let cache = ChebCache::new();
    let gn = cache.g(n as usize)?;
    let gn1 = cache.g(n as usize + 1)?;
    let in_r = |p: &UniPoly| BiPoly::from_uni("r", "t", &p.clone().with_var("r"), 0);
    let in_t = |p: &UniPoly| BiPoly::from_uni("r", "t", &p.clone().with_var("t"), 1);
    Ok(VarietyModel {
        n,
        tag: ModelTag::D,
        poly: &(&in_r(&gn1) * &in_t(&gn)) - &(&in_r(&gn) * &in_t(&gn1)),
    })
}

pub fn d_split(n: u32) -> Result<ComponentPair> {
    let d = d_variety_poly(n)?.poly;
    let d0 = BiPoly::from_int_terms("r", "t", &[(1, 1, 0), (-1, 0, 1)]);
    let (d1, rem) = d.div_rem_in(&d0, 0)?;
    if !rem.is_zero() {
        return Err(Error::Invariant(format!(
            "D model for n={n} is not divisible by r - t"
        )));
    }
    Ok(ComponentPair { n, d0, d1 })
}

/// `(r, x) -> (r, x^2 - 2)`.
pub fn covering_image<T: Ring>(r: &T, x: &T) -> (T, T) {
    (r.clone(), x.square().sub(&x.lift_int(2)))
}

/// `(r, y) -> (r, (2 - r)(y - r) f_n(r)^2 + 2)`.
pub fn birational_image<T: Ring>(n: u32, r: &T, y: &T) -> Result<(T, T)> {
    check_n(n)?;
    let fnr = r.eval_poly(&ChebCache::new().f(n as usize));
    let t = r
        .lift_int(2)
        .sub(r)
        .mul(&y.sub(r))
        .mul(&fnr.square())
        .add(&r.lift_int(2));
    Ok((r.clone(), t))
}

/// The D-coordinate `t` of a point given by `r` and `x^2`.
pub fn t_from_x_squared<T: Ring>(n: u32, r: &T, x_squared: &T) -> Result<T> {
    let y = x_squared.sub(&r.lift_int(2));
    Ok(birational_image(n, r, &y)?.1)
}

/// `dF/dx` of the X polynomial at `r = 2`, as a polynomial in `x`.
pub fn derivative_identity_at_r2(n: u32) -> Result<UniPoly> {
    let f = x_variety_poly(n)?.poly;
    Ok(f.partial_derivative(1).substitute(0, &BigRational::from_integer(2.into())))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminantFactor {
    pub factor: UniPoly,
    pub exponent: u32,
    /// Degree in `y = x^2` of the common factor over `Q[r]/(factor)`;
    /// zero when the factor carries no finite common point.
    pub fiber_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BezoutBudget {
    pub total: u64,
    pub affine: u64,
    pub ideal: u64,
    pub factors: Vec<EliminantFactor>,
    pub affine_multiplicity_one: bool,
}

impl BezoutBudget {
    pub fn triple(&self) -> (u64, u64, u64) {
        (self.total, self.affine, self.ideal)
    }

    /// Product of the eliminant factors that carry affine points.
    pub fn affine_eliminant(&self) -> UniPoly {
        self.factors
            .iter()
            .filter(|f| f.fiber_degree > 0)
            .fold(UniPoly::one("r"), |acc, f| acc * f.factor.pow(f.exponent))
    }
}

/// Intersection count of two curves in `(r, x)` that are even in `x`.
///
/// Eliminates `y = x^2` by a resultant. Over each irreducible factor `h`
/// of the eliminant the two curves are checked for a common `y`-root; an
/// affine point over `h` contributes its exponent, doubled by `x = ±sqrt(y)`.
pub fn bezout_budget(x0: &BiPoly, x1: &BiPoly) -> Result<BezoutBudget> {
    let total = (x0.total_degree().unwrap_or(0) as u64) * (x1.total_degree().unwrap_or(0) as u64);
    let y0 = x0.halve_second("y")?;
    let y1 = x1.halve_second("y")?;
    let elim = resultant_in(&y0, &y1, "y")?;
    if elim.is_zero() {
        return Err(Error::Invariant("curves share a component".into()));
    }
    let c0 = y0.coefficients_in(1);
    let c1 = y1.coefficients_in(1);
    let mut factors = Vec::new();
    let mut affine = 0u64;
    for (h, e) in factor::factor_over_rationals(&elim)?.factors {
        let k = NumberField::new(&h)?;
        let p0 = nf_poly_from(&k, &c0);
        let p1 = nf_poly_from(&k, &c1);
        let g = nf_poly_gcd(&p0, &p1)?;
        let fiber = g.len().saturating_sub(1);
        let lead0 = k.element(c0.last().unwrap());
        let lead1 = k.element(c1.last().unwrap());
        if lead0.is_zero() && lead1.is_zero() && fiber > 0 {
            return Err(Error::Invariant(format!(
                "both leading coefficients vanish over {h}"
            )));
        }
        if fiber > 0 {
            affine += 2 * h.degree().unwrap() as u64 * e as u64;
        }
        factors.push(EliminantFactor {
            factor: h,
            exponent: e,
            fiber_degree: fiber,
        });
    }
    let affine_multiplicity_one = factors
        .iter()
        .filter(|f| f.fiber_degree > 0)
        .all(|f| f.exponent as usize == f.fiber_degree);
    Ok(BezoutBudget {
        total,
        affine,
        ideal: total.saturating_sub(affine),
        factors,
        affine_multiplicity_one,
    })
}
