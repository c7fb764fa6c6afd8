//! Trace identities for words in the Seifert generators, the longitude
//! trace on intersection points, reducible characters, the Alexander
//! polynomial, boundary slopes and the slope verdict.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero as _;
use serde::{Serialize, Serializer};

use crate::arith::{rat, Ring, UniPoly};
use crate::cheb::ChebCache;
use crate::error::{Error, Result};
use crate::intersect::{build_intersection_report, intersection_loci, IntersectionLocus, IntersectionReport};
use crate::numeric;
use crate::numfield::{integrality_verdict, IntegralityVerdict, NFElem};
use crate::variety::{check_n, x_variety_poly};

/// `f_k(v)` with `f_{-1} = -1`.
fn f_at<T: Ring>(cache: &ChebCache, v: &T, k: i64) -> T {
    if k < 0 {
        v.lift_int(-1)
    } else {
        v.eval_poly(&cache.f(k as usize))
    }
}

/// `tr(M^k) = tau f_k(tau) - 2 f_{k-1}(tau)` for `tau = tr M`.
pub fn tr_power<T: Ring>(tau: &T, k: usize) -> T {
    let cache = ChebCache::new();
    tau.mul(&f_at(&cache, tau, k as i64))
        .sub(&f_at(&cache, tau, k as i64 - 1).mul(&tau.lift_int(2)))
}

/// `tr [M1, M2]` from `tr M1`, `tr M2`, `tr M1 M2`.
pub fn tr_commutator<T: Ring>(t1: &T, t2: &T, t12: &T) -> T {
    t1.square()
        .add(&t2.square())
        .add(&t12.square())
        .sub(&t1.mul(t2).mul(t12))
        .sub(&t1.lift_int(2))
}

/// Ring data `r`, `t`, `x^2` for one point of the character variety and
/// the memo table of `delta_{d,e}`.
pub struct TraceContext<T: Ring> {
    pub n: u32,
    pub r: T,
    pub t: T,
    pub x_squared: T,
    cache: ChebCache,
    memo: HashMap<(usize, usize), T>,
}

impl<T: Ring> TraceContext<T> {
    pub fn new(n: u32, r: T, t: T, x_squared: T) -> Result<Self> {
        check_n(n)?;
        Ok(Self {
            n,
            r,
            t,
            x_squared,
            cache: ChebCache::new(),
            memo: HashMap::new(),
        })
    }

    /// A point of an intersection locus, where `t = r`.
    pub fn on_line(n: u32, r: T, x_squared: T) -> Result<Self> {
        Self::new(n, r.clone(), r, x_squared)
    }

    fn fr(&self, k: i64) -> T {
        f_at(&self.cache, &self.r, k)
    }

    fn ft(&self, k: i64) -> T {
        f_at(&self.cache, &self.t, k)
    }

    /// `(2 - r) f_{n-1}(r) f_n(r) (x^2 - 2 - r) + r`.
    pub fn delta11(&self) -> T {
        let n = self.n as i64;
        let two = self.r.lift_int(2);
        two.sub(&self.r)
            .mul(&self.fr(n - 1))
            .mul(&self.fr(n))
            .mul(&self.x_squared.sub(&two).sub(&self.r))
            .add(&self.r)
    }

    /// `delta_{d,e}` by the recursions in `d` (coefficient `t`, at `e = 1`)
    /// and in `e` (coefficient `r`).
    pub fn delta(&mut self, d: i64, e: i64) -> Result<T> {
        if d < 0 {
            return Err(Error::NegativeIndex(d));
        }
        if e < 0 {
            return Err(Error::NegativeIndex(e));
        }
        Ok(self.delta_at(d as usize, e as usize))
    }

    fn delta_at(&mut self, d: usize, e: usize) -> T {
        if let Some(v) = self.memo.get(&(d, e)) {
            return v.clone();
        }
        let v = match (d, e) {
            (_, 0) => self.ft(d as i64 + 1).sub(&self.ft(d as i64 - 1)),
            (0, _) => tr_power(&self.r, e),
            (1, 1) => self.delta11(),
            (_, 1) => {
                let a = self.delta_at(d - 1, 1);
                let b = self.delta_at(d - 2, 1);
                self.t.mul(&a).sub(&b)
            }
            _ => {
                let a = self.delta_at(d, e - 1);
                let b = self.delta_at(d, e - 2);
                self.r.mul(&a).sub(&b)
            }
        };
        self.memo.insert((d, e), v.clone());
        v
    }

    /// `f_e(r)(f_d(t) delta_11 - r f_{d-1}(t)) - f_{e-1}(r)(f_{d+1}(t) - f_{d-1}(t))`.
    pub fn gamma_closed(&self, d: i64, e: i64) -> Result<T> {
        if d < 0 || e < 0 {
            return Err(Error::NegativeIndex(d.min(e)));
        }
        let first = self
            .ft(d)
            .mul(&self.delta11())
            .sub(&self.r.mul(&self.ft(d - 1)))
            .mul(&self.fr(e));
        let second = self.ft(d + 1).sub(&self.ft(d - 1)).mul(&self.fr(e - 1));
        Ok(first.sub(&second))
    }

    /// `tr(S1 S2^-1)`.
    pub fn tr_s1s2inv(&self) -> T {
        let n = self.n as i64;
        self.gamma_closed(n, n).expect("nonnegative indices")
    }

    /// `tr S1 = tr S2 = r f_n(r) - 2 f_{n-1}(r)`.
    pub fn tr_seifert_generator(&self) -> T {
        tr_power(&self.r, self.n as usize)
    }

    /// Trace of the longitude `S1 S2^-1 S1^-1 S2`.
    pub fn longitude(&self) -> T {
        let s = self.tr_seifert_generator();
        tr_commutator(&s, &s, &self.tr_s1s2inv())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LongitudeData {
    /// Residue of the trace in `Q[r]/(m)`.
    pub trace: UniPoly,
    pub min_poly: UniPoly,
    pub verdict: IntegralityVerdict,
    /// Value at each root of the modulus, in root order.
    pub values: Vec<String>,
}

/// Longitude trace over a locus without the integrality assertion.
pub fn longitude_data(locus: &IntersectionLocus, x_squared: &NFElem) -> Result<LongitudeData> {
    let ctx = TraceContext::on_line(locus.n, locus.r(), x_squared.clone())?;
    let tau = ctx.longitude();
    let min_poly = tau.minimal_polynomial("l");
    let verdict = integrality_verdict(&min_poly)?;
    let values = locus
        .r_roots()
        .into_iter()
        .map(|rho| numeric::format_complex(tau.embed(rho)))
        .collect();
    Ok(LongitudeData {
        trace: tau.as_poly().clone(),
        min_poly,
        verdict,
        values,
    })
}

pub fn longitude_trace(locus: &IntersectionLocus, x_squared: &NFElem) -> Result<LongitudeData> {
    let data = longitude_data(locus, x_squared)?;
    if !data.verdict.is_algebraic_integer {
        return Err(Error::Verification(format!(
            "n={}: longitude trace over {} is not an algebraic integer",
            locus.n,
            locus.modulus()
        )));
    }
    Ok(data)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReducibleCharacter {
    pub n: u32,
    #[serde(with = "crate::arith::ratjson")]
    pub r: BigRational,
    #[serde(with = "crate::arith::ratjson")]
    pub x_squared: BigRational,
    pub on_x_model: bool,
    pub is_intersection_point: bool,
    pub meridian_verdict: IntegralityVerdict,
    #[serde(with = "crate::arith::ratjson")]
    pub tr_s1: BigRational,
    #[serde(with = "crate::arith::ratjson")]
    pub tr_s2: BigRational,
    #[serde(with = "crate::arith::ratjson")]
    pub tr_s1s2inv: BigRational,
}

/// The point `r = t = 2`, `x^2 = (4n^2 - 1)/n^2`.
pub fn reducible_character(n: u32) -> Result<ReducibleCharacter> {
    check_n(n)?;
    let n2 = (n as i64) * (n as i64);
    let r = rat(2, 1);
    let x_squared = rat(4 * n2 - 1, n2);
    let on_x_model = x_variety_poly(n)?
        .poly
        .halve_second("y")?
        .eval(&r, &x_squared)
        == BigRational::zero();
    let g = ChebCache::new().big_g(n as usize)?;
    let x_poly = UniPoly::new("x", vec![-x_squared.clone(), BigRational::zero(), rat(1, 1)]);
    let ctx = TraceContext::on_line(n, r.clone(), x_squared.clone())?;
    let s = ctx.tr_seifert_generator();
    Ok(ReducibleCharacter {
        n,
        is_intersection_point: g.eval(&r) == BigRational::zero(),
        meridian_verdict: integrality_verdict(&x_poly)?,
        tr_s1: s.clone(),
        tr_s2: s,
        tr_s1s2inv: ctx.tr_s1s2inv(),
        r,
        x_squared,
        on_x_model,
    })
}

/// `n^2 t^2 + (1 - 2n^2) t + n^2` and its discriminant `1 - 4n^2`.
pub fn alexander_poly(n: u32) -> Result<(UniPoly, BigInt)> {
    check_n(n)?;
    let n2 = (n as i64) * (n as i64);
    let p = UniPoly::from_ints("t", &[n2, 1 - 2 * n2, n2]);
    let c = p.coeffs();
    let disc = &c[1] * &c[1] - BigRational::from_integer(4.into()) * &c[2] * &c[0];
    Ok((p, disc.to_integer()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundarySlope {
    /// Shape of the expansion with `k` standing for a run of `-2`s.
    pub pattern: String,
    pub expansion: Vec<i64>,
    pub slope: i64,
}

/// The four minimal edge-path expansions of `J(2n,2n)` and their slopes.
pub fn boundary_slope_candidates(n: u32) -> Result<Vec<BoundarySlope>> {
    check_n(n)?;
    let n = n as i64;
    let twos = |k: i64| vec![-2i64; k as usize];
    let cat = |parts: &[Vec<i64>]| parts.concat();
    Ok(vec![
        BoundarySlope {
            pattern: "[(-2)^(2n-2), -3, (-2)^(2n-2)]".into(),
            expansion: cat(&[twos(2 * n - 2), vec![-3], twos(2 * n - 2)]),
            slope: 2 - 8 * n,
        },
        BoundarySlope {
            pattern: "[(-2)^(2n-1), 2n-1]".into(),
            expansion: cat(&[twos(2 * n - 1), vec![2 * n - 1]]),
            slope: -4 * n,
        },
        BoundarySlope {
            pattern: "[2n-1, (-2)^(2n-1)]".into(),
            expansion: cat(&[vec![2 * n - 1], twos(2 * n - 1)]),
            slope: -4 * n,
        },
        BoundarySlope {
            pattern: "[2n,2n]".into(),
            expansion: vec![2 * n, 2 * n],
            slope: 0,
        },
    ])
}

/// `1/(a_1 - 1/(a_2 - ...))`.
pub fn continued_fraction_value(expansion: &[i64]) -> Option<BigRational> {
    let mut acc = BigRational::zero();
    for &a in expansion.iter().rev() {
        let denom = BigRational::from_integer(a.into()) - acc;
        if denom == BigRational::zero() {
            return None;
        }
        acc = denom.recip();
    }
    Some(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetectedSlope {
    Slope(i64),
    Undetermined,
}

impl Serialize for DetectedSlope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            DetectedSlope::Slope(v) => s.serialize_i64(*v),
            DetectedSlope::Undetermined => s.serialize_str("undetermined"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlopeVerdict {
    pub meridian_integral: bool,
    pub longitude_integral: bool,
    pub detected_slope: DetectedSlope,
    pub surface_description: String,
}

/// Slope 0 is detected when some meridian trace is non-integral while every
/// longitude trace is integral; the surface is then a genus one Seifert surface.
pub fn detect_surface(report: &IntersectionReport) -> SlopeVerdict {
    let meridian_integral = report.loci.iter().all(|l| l.meridian_verdict.is_algebraic_integer);
    let longitude_integral = !report.loci.is_empty()
        && report.loci.iter().all(|l| {
            l.longitude
                .as_ref()
                .is_some_and(|d| d.verdict.is_algebraic_integer)
        });
    if !meridian_integral && longitude_integral {
        SlopeVerdict {
            meridian_integral,
            longitude_integral,
            detected_slope: DetectedSlope::Slope(0),
            surface_description: "genus 1 Seifert surface".into(),
        }
    } else {
        SlopeVerdict {
            meridian_integral,
            longitude_integral,
            detected_slope: DetectedSlope::Undetermined,
            surface_description: format!(
                "undetermined (meridian integral: {meridian_integral}, longitude integral: {longitude_integral})"
            ),
        }
    }
}

/// Loci, meridian data, longitude traces and the slope verdict for `n`.
pub fn run_pipeline(n: u32) -> Result<IntersectionReport> {
    let mut report = build_intersection_report(n)?;
    for (locus, lr) in intersection_loci(n)?.iter().zip(report.loci.iter_mut()) {
        let x_squared = locus.field.element(&lr.x_squared);
        lr.longitude = Some(longitude_trace(locus, &x_squared)?);
    }
    report.slope = Some(detect_surface(&report));
    Ok(report)
}

/// Numeric evaluation of the same identities, for matrix cross-checks.
pub fn numeric_context(n: u32, r: Complex64, x_squared: Complex64) -> Result<TraceContext<Complex64>> {
    TraceContext::on_line(n, r, x_squared)
}
