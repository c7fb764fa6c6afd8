//! Intersection points of the two components of X(J(2n,2n)): their
//! r-coordinates are the roots of `G_n`, one number field per irreducible
//! factor, and the meridian trace satisfies `x^2 = 2 + r - 1/f_n(r)^2`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use crate::arith::UniPoly;
use crate::cheb::ChebCache;
use crate::error::{Error, Result};
use crate::factor;
use crate::numeric;
use crate::numfield::{integrality_verdict, IntegralityVerdict, NFElem, NumberField};
use crate::trace::{LongitudeData, SlopeVerdict};
use crate::variety::{check_n, t_from_x_squared};

/// One irreducible factor of `G_n`, as the field `Q[r]/(m)`.
#[derive(Clone, Debug)]
pub struct IntersectionLocus {
    pub n: u32,
    pub field: Arc<NumberField>,
}

impl IntersectionLocus {
    pub fn modulus(&self) -> &UniPoly {
        self.field.modulus()
    }

    pub fn r(&self) -> NFElem {
        self.field.generator()
    }

    /// Complex roots of the modulus, sorted by (re, im).
    pub fn r_roots(&self) -> Vec<Complex64> {
        numeric::roots(self.modulus())
    }
}

pub fn intersection_loci(n: u32) -> Result<Vec<IntersectionLocus>> {
    check_n(n)?;
    let g = ChebCache::with_var("r").big_g(n as usize)?;
    factor::irreducible_factors(&g)?
        .into_iter()
        .map(|m| {
            Ok(IntersectionLocus {
                n,
                field: NumberField::new(&m)?,
            })
        })
        .collect()
}

/// `2 + r - 1/f_n(r)^2` in the locus field.
pub fn x_squared_at(locus: &IntersectionLocus) -> Result<NFElem> {
    let r = locus.r();
    let fnr = locus.field.element(&ChebCache::with_var("r").f(locus.n as usize));
    let inv = fnr.inverse().map_err(|e| {
        Error::Invariant(format!("f_n(r) not invertible on the locus {}: {e}", locus.modulus()))
    })?;
    Ok(&(&locus.field.int(2) + &r) - &inv.pow(2))
}

#[derive(Clone, Debug)]
pub struct MeridianData {
    pub x_squared: NFElem,
    /// In the variable `u = x^2`.
    pub x_squared_min_poly: UniPoly,
    /// Irreducible factors of `p(x^2)` where `p` is the minimal polynomial of `x^2`.
    pub x_min_polys: Vec<UniPoly>,
    pub verdict: IntegralityVerdict,
}

pub fn meridian_min_poly(locus: &IntersectionLocus) -> Result<MeridianData> {
    let x_squared = x_squared_at(locus)?;
    let p = x_squared.minimal_polynomial("u");
    let x_min_polys = factor::irreducible_factors(&p.substitute_power(2).with_var("x"))?
        .into_iter()
        .map(|f| f.monic())
        .collect::<Vec<_>>();
    let verdicts = x_min_polys
        .iter()
        .map(integrality_verdict)
        .collect::<Result<Vec<_>>>()?;
    Ok(MeridianData {
        x_squared,
        x_squared_min_poly: p,
        x_min_polys,
        verdict: merge_verdicts(&verdicts),
    })
}

/// A set of conjugates is integral only if every factor is; bad primes are
/// collected from all factors.
pub fn merge_verdicts(vs: &[IntegralityVerdict]) -> IntegralityVerdict {
    let mut bad: Vec<BigInt> = vs.iter().flat_map(|v| v.bad_primes.iter().cloned()).collect();
    bad.sort();
    bad.dedup();
    let mut cofactor: Option<BigInt> = None;
    for c in vs.iter().filter_map(|v| v.unfactored_cofactor.as_ref()) {
        cofactor = Some(cofactor.map_or_else(|| c.clone(), |acc| acc.lcm(c)));
    }
    IntegralityVerdict {
        is_algebraic_integer: vs.iter().all(|v| v.is_algebraic_integer),
        denominator_lcm: vs.iter().fold(BigInt::one(), |acc, v| acc.lcm(&v.denominator_lcm)),
        bad_primes: bad,
        unfactored_cofactor: cofactor,
    }
}

/// Largest gap between `2 + rho - 1/f_n(rho)^2` and the embedded field
/// element `x^2`, over the roots `rho` of the modulus.
pub fn numeric_x_squared_error(locus: &IntersectionLocus, x_squared: &NFElem) -> f64 {
    let f = ChebCache::with_var("r").f(locus.n as usize);
    locus
        .r_roots()
        .into_iter()
        .map(|rho| {
            let fr = numeric::eval(&f, rho);
            let direct = Complex64::new(2.0, 0.0) + rho - Complex64::new(1.0, 0.0) / (fr * fr);
            (direct - x_squared.embed(rho)).norm()
        })
        .fold(0.0, f64::max)
}

/// Per-root numeric data: r, x^2 and both signs of x, 12 significant digits.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointApprox {
    pub r: String,
    pub x_squared: String,
    pub x: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LocusReport {
    pub modulus: UniPoly,
    pub x_squared: UniPoly,
    pub x_squared_min_poly: UniPoly,
    pub x_min_polys: Vec<UniPoly>,
    pub meridian_verdict: IntegralityVerdict,
    pub points: Vec<PointApprox>,
    pub longitude: Option<LongitudeData>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntersectionReport {
    pub n: u32,
    /// Total number of r-roots over all loci.
    pub r_root_count: usize,
    /// Affine intersection points in the X model.
    pub affine_points: usize,
    pub loci: Vec<LocusReport>,
    pub slope: Option<SlopeVerdict>,
}

/// Loci and meridian data; longitude and slope are filled by the trace module.
pub fn build_intersection_report(n: u32) -> Result<IntersectionReport> {
    let mut loci = Vec::new();
    for locus in intersection_loci(n)? {
        let md = meridian_min_poly(&locus)?;
        let t = t_from_x_squared(n, &locus.r(), &md.x_squared)?;
        if t != locus.r() {
            return Err(Error::Verification(format!(
                "n={n}: point over {} does not map to the line r = t",
                locus.modulus()
            )));
        }
        if md.verdict.is_algebraic_integer || !md.verdict.has_bad_prime(2) {
            return Err(Error::Verification(format!(
                "n={n}: meridian trace over {} is not non-integral at 2",
                locus.modulus()
            )));
        }
        let points = locus
            .r_roots()
            .into_iter()
            .map(|rho| {
                let x2 = md.x_squared.embed(rho);
                let x = x2.sqrt();
                PointApprox {
                    r: numeric::format_complex(rho),
                    x_squared: numeric::format_complex(x2),
                    x: [numeric::format_complex(x), numeric::format_complex(-x)],
                }
            })
            .collect();
        loci.push(LocusReport {
            modulus: locus.modulus().clone(),
            x_squared: md.x_squared.as_poly().clone(),
            x_squared_min_poly: md.x_squared_min_poly,
            x_min_polys: md.x_min_polys,
            meridian_verdict: md.verdict,
            points,
            longitude: None,
        });
    }
    let r_root_count = loci.iter().map(|l| l.modulus.degree().unwrap()).sum();
    Ok(IntersectionReport {
        n,
        r_root_count,
        affine_points: 2 * r_root_count,
        loci,
        slope: None,
    })
}
