//! Named checks replaying the printed data for n = 2, 3 and the identities
//! that hold for every n, run in parallel and reported in a fixed order.

use std::ops::RangeInclusive;
use std::thread;

use num_complex::Complex64;

use crate::arith::{rat, rat_int, UniPoly};
use crate::cheb::{self, ChebCache};
use crate::fixtures::GoldenFixture;
use crate::intersect::{intersection_loci, meridian_min_poly, numeric_x_squared_error, x_squared_at};
use crate::knotgrp::{self, family_words, numeric_rep, trace as mtrace, word_eval};
use crate::numeric;
use crate::trace::{self, DetectedSlope, TraceContext};
use crate::variety;

pub const DEFAULT_MAX_N: u32 = 8;
pub const MAX_N_ENV: &str = "CVTK_MAX_N";

type CheckResult = std::result::Result<String, String>;
type CheckFn = Box<dyn Fn() -> CheckResult + Send + Sync>;

pub struct Check {
    pub name: String,
    run: CheckFn,
}

impl Check {
    fn new(name: impl Into<String>, run: impl Fn() -> CheckResult + Send + Sync + 'static) -> Self {
        Self {
            name: name.into(),
            run: Box::new(run),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Upper bound for the per-n pipeline checks, from `CVTK_MAX_N`.
pub fn max_n_from_env() -> u32 {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&v: &u32| v >= 2)
        .unwrap_or(DEFAULT_MAX_N)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn span(r: &RangeInclusive<u32>) -> String {
    if r.start() == r.end() {
        format!("n={}", r.start())
    } else {
        format!("n={}..{}", r.start(), r.end())
    }
}

fn fixture_for(fixtures: &[GoldenFixture], n: u32) -> std::result::Result<GoldenFixture, String> {
    fixtures
        .iter()
        .find(|f| f.n == n)
        .cloned()
        .ok_or_else(|| format!("no fixture for n={n}"))
}

fn identities(range: RangeInclusive<u32>) -> Check {
    Check::new("cheb.identities", move || {
        let cache = ChebCache::new();
        for j in range.clone() {
            for c in cheb::check_identities(&cache, j as usize).map_err(err)? {
                ensure(c.holds, || format!("{} fails at j={j}", c.name))?;
            }
        }
        Ok(format!("{} identities, j={}..{}", cheb::IDENTITY_NAMES.len(), range.start(), range.end()))
    })
}

fn mod2(range: RangeInclusive<u32>) -> Check {
    Check::new("cheb.mod2_congruence", move || {
        let cache = ChebCache::new();
        for n in range.clone() {
            let diff = &cache.big_g(n as usize).map_err(err)? - &(&cache.f(n as usize) * &cache.f(n as usize));
            ensure(
                diff.coeffs().iter().all(|c| c.is_integer() && (c.numer() % 2u32) == 0u32.into()),
                || format!("G_n - f_n^2 has an odd coefficient at n={n}"),
            )?;
        }
        Ok(format!("G_n = f_n^2 mod 2 for {}", span(&range)))
    })
}

fn g_poly(fx: Vec<GoldenFixture>, n: u32) -> Check {
    Check::new(format!("cheb.G{n}"), move || {
        let f = fixture_for(&fx, n)?;
        let g = ChebCache::with_var("r").big_g(n as usize).map_err(err)?;
        ensure(g == f.r_poly, || format!("G_{n} = {g}, fixture {}", f.r_poly))?;
        Ok(format!("G_{n} = {g}"))
    })
}

fn x_model(fx: Vec<GoldenFixture>, n: u32) -> Check {
    Check::new(format!("variety.x_model.n{n}"), move || {
        let f = fixture_for(&fx, n)?;
        let x = variety::x_variety_poly(n).map_err(err)?.poly;
        ensure(x.eq_up_to_scalar(&(&f.x0 * &f.x1)), || {
            format!("X polynomial for n={n} differs from the product of the fixture components")
        })?;
        Ok(format!("{} terms, equal to X0*X1 up to scalar", x.len()))
    })
}

fn x_even(range: RangeInclusive<u32>) -> Check {
    Check::new("variety.x_even", move || {
        for n in range.clone() {
            let x = variety::x_variety_poly(n).map_err(err)?.poly;
            ensure(x.is_even_in(1), || format!("odd power of x at n={n}"))?;
        }
        Ok(span(&range))
    })
}

fn d_split(range: RangeInclusive<u32>) -> Check {
    Check::new("variety.d_split", move || {
        for n in range.clone() {
            let s = variety::d_split(n).map_err(err)?;
            let deg = s.d1.total_degree().unwrap_or(0);
            ensure(deg == 2 * n - 2, || format!("deg D1 = {deg} at n={n}"))?;
        }
        Ok(format!("D = (r - t) D1, deg D1 = 2n-2 for {}", span(&range)))
    })
}

fn smoothness(range: RangeInclusive<u32>) -> Check {
    Check::new("variety.smoothness_at_r2", move || {
        for n in range.clone() {
            let d = variety::derivative_identity_at_r2(n).map_err(err)?;
            let expect = UniPoly::from_ints("x", &[0, -2 * (n as i64) * (n as i64)]);
            ensure(d == expect, || format!("dF/dx at r=2 is {d} for n={n}"))?;
        }
        Ok(format!("dF/dx(2, x) = -2n^2 x for {}", span(&range)))
    })
}

fn bezout(fx: Vec<GoldenFixture>, n: u32) -> Check {
    Check::new(format!("variety.bezout.n{n}"), move || {
        let f = fixture_for(&fx, n)?;
        let b = variety::bezout_budget(&f.x0, &f.x1).map_err(err)?;
        let expect = (f.bezout.total, f.bezout.affine, f.bezout.ideal);
        ensure(b.triple() == expect, || format!("computed {:?}, fixture {expect:?}", b.triple()))?;
        ensure(b.affine_multiplicity_one, || "an affine point has multiplicity > 1".into())?;
        let elim = b.affine_eliminant();
        ensure(elim == f.r_poly.monic(), || {
            format!("affine eliminant {elim} differs from {}", f.r_poly)
        })?;
        Ok(format!("{:?}, affine multiplicities 1", b.triple()))
    })
}

fn loci(fx: Vec<GoldenFixture>, n: u32) -> Check {
    Check::new(format!("intersect.loci.n{n}"), move || {
        let f = fixture_for(&fx, n)?;
        let l = intersection_loci(n).map_err(err)?;
        ensure(l.len() == 1 && l[0].modulus() == &f.r_poly.monic(), || {
            let ms: Vec<String> = l.iter().map(|x| x.modulus().to_string()).collect();
            format!("loci {ms:?}, fixture {}", f.r_poly)
        })?;
        Ok(format!("one locus, {} = 0", l[0].modulus()))
    })
}

fn meridian(fx: Vec<GoldenFixture>, n: u32) -> Check {
    Check::new(format!("intersect.meridian.n{n}"), move || {
        let f = fixture_for(&fx, n)?;
        let mut product = UniPoly::one("x");
        for l in intersection_loci(n).map_err(err)? {
            for p in meridian_min_poly(&l).map_err(err)?.x_min_polys {
                product = product * p;
            }
        }
        ensure(product == f.x_min_poly.monic(), || {
            format!("x polynomial {product}, fixture {}", f.x_min_poly)
        })?;
        Ok(format!("{product}"))
    })
}

fn meridian_nonintegral(range: RangeInclusive<u32>) -> Check {
    Check::new("intersect.meridian_nonintegral", move || {
        for n in range.clone() {
            for l in intersection_loci(n).map_err(err)? {
                let v = meridian_min_poly(&l).map_err(err)?.verdict;
                ensure(!v.is_algebraic_integer && v.has_bad_prime(2), || {
                    format!("meridian over {} at n={n} is not non-integral at 2", l.modulus())
                })?;
            }
        }
        Ok(format!("2 divides every meridian denominator, {}", span(&range)))
    })
}

fn numeric_x_squared(range: RangeInclusive<u32>) -> Check {
    Check::new("intersect.numeric_x_squared", move || {
        let mut worst = 0.0f64;
        for n in range.clone() {
            for l in intersection_loci(n).map_err(err)? {
                let x2 = x_squared_at(&l).map_err(err)?;
                worst = worst.max(numeric_x_squared_error(&l, &x2));
            }
        }
        ensure(worst < 1e-9, || format!("max error {worst:e}"))?;
        Ok(format!("max error {worst:.1e}"))
    })
}

fn longitude(fx: Vec<GoldenFixture>, n: u32) -> Check {
    Check::new(format!("trace.longitude.n{n}"), move || {
        let f = fixture_for(&fx, n)?;
        let l = &intersection_loci(n).map_err(err)?[0];
        let data = trace::longitude_data(l, &x_squared_at(l).map_err(err)?).map_err(err)?;
        ensure(data.min_poly == f.longitude_min_poly.monic(), || {
            format!("longitude polynomial {}, fixture {}", data.min_poly, f.longitude_min_poly)
        })?;
        Ok(format!("{}", data.min_poly))
    })
}

fn longitude_integral(range: RangeInclusive<u32>) -> Check {
    Check::new("trace.longitude_integral", move || {
        for n in range.clone() {
            for l in intersection_loci(n).map_err(err)? {
                let x2 = x_squared_at(&l).map_err(err)?;
                trace::longitude_trace(&l, &x2).map_err(err)?;
            }
        }
        Ok(format!("integral minimal polynomials, {}", span(&range)))
    })
}

fn slope_zero(range: RangeInclusive<u32>) -> Check {
    Check::new("trace.slope_zero", move || {
        for n in range.clone() {
            let s = trace::run_pipeline(n).map_err(err)?.slope.expect("pipeline sets slope");
            ensure(s.detected_slope == DetectedSlope::Slope(0), || {
                format!("n={n}: {}", s.surface_description)
            })?;
        }
        Ok(format!("genus 1 Seifert surface, {}", span(&range)))
    })
}

fn delta_gamma(range: RangeInclusive<u32>) -> Check {
    Check::new("trace.delta_gamma", move || {
        for n in range.clone() {
            for l in intersection_loci(n).map_err(err)? {
                let x2 = x_squared_at(&l).map_err(err)?;
                let mut ctx = TraceContext::on_line(n, l.r(), x2).map_err(err)?;
                for d in 0..=n as i64 {
                    for e in 0..=n as i64 {
                        let a = ctx.delta(d, e).map_err(err)?;
                        let b = ctx.gamma_closed(d, e).map_err(err)?;
                        ensure(a == b, || format!("n={n}: delta({d},{e}) != gamma({d},{e})"))?;
                    }
                }
            }
        }
        Ok(format!("0 <= d, e <= n, {}", span(&range)))
    })
}

fn reducible(range: RangeInclusive<u32>) -> Check {
    Check::new("trace.reducible_characters", move || {
        for n in range.clone() {
            let c = trace::reducible_character(n).map_err(err)?;
            let n2 = (n as i64) * (n as i64);
            ensure(c.x_squared == rat(4 * n2 - 1, n2), || format!("x^2 = {} at n={n}", c.x_squared))?;
            ensure(c.on_x_model, || format!("reducible point not on X at n={n}"))?;
            ensure(!c.is_intersection_point, || format!("r = 2 is a root of G_{n}"))?;
            let two = rat_int(2);
            ensure(c.tr_s1 == two && c.tr_s2 == two && c.tr_s1s2inv == two, || {
                format!("traces {}, {}, {} at n={n}", c.tr_s1, c.tr_s2, c.tr_s1s2inv)
            })?;
            ensure(!c.meridian_verdict.is_algebraic_integer, || format!("integral x at n={n}"))?;
        }
        Ok(format!("x^2 = (4n^2-1)/n^2 on X, traces 2, {}", span(&range)))
    })
}

fn alexander(range: RangeInclusive<u32>) -> Check {
    Check::new("trace.alexander", move || {
        for n in range.clone() {
            let (p, disc) = trace::alexander_poly(n).map_err(err)?;
            let n2 = (n as i64) * (n as i64);
            ensure(disc == (1 - 4 * n2).into(), || format!("discriminant {disc} at n={n}"))?;
            ensure(p.eval(&rat_int(1)) == rat_int(1), || format!("Delta(1) != 1 at n={n}"))?;
        }
        Ok(format!("discriminant 1-4n^2 < 0, Delta(1) = 1, {}", span(&range)))
    })
}

fn slopes(range: RangeInclusive<u32>) -> Check {
    Check::new("trace.boundary_slopes", move || {
        for n in range.clone() {
            let s = trace::boundary_slope_candidates(n).map_err(err)?;
            let ni = n as i64;
            let target = rat(2 * ni, 4 * ni * ni - 1);
            for b in &s {
                let v = trace::continued_fraction_value(&b.expansion)
                    .ok_or_else(|| format!("degenerate expansion {:?}", b.expansion))?;
                ensure((v - &target).is_integer(), || {
                    format!("expansion {:?} is not the knot {target}", b.expansion)
                })?;
            }
            let got: Vec<i64> = s.iter().map(|b| b.slope).collect();
            ensure(got == vec![2 - 8 * ni, -4 * ni, -4 * ni, 0], || format!("slopes {got:?}"))?;
        }
        Ok(format!("slopes 2-8n, -4n, -4n, 0, {}", span(&range)))
    })
}

fn printed_point() -> Check {
    Check::new("knotgrp.printed_point", || {
        let c = Complex64::new;
        let mu = (c(-1.0, -1.5).sqrt() + c(3.0, -1.5).sqrt()) / 2.0;
        let rep = numeric_rep(2, mu, c(1.0, -1.0)).map_err(err)?;
        let res = knotgrp::relator_residual(&rep).map_err(err)?;
        ensure(res < 1e-9, || format!("relator residual {res:e}"))?;
        let lon = mtrace(&word_eval(&rep, &family_words(2).map_err(err)?.longitude));
        ensure((lon - c(14.0, 24.0)).norm() < 1e-9, || {
            format!("longitude trace {}", numeric::format_complex(lon))
        })?;
        Ok(format!("residual {res:.1e}, longitude trace {}", numeric::format_complex(lon)))
    })
}

fn normal_form(range: RangeInclusive<u32>) -> Check {
    Check::new("knotgrp.normal_form", move || {
        let mut worst = 0.0f64;
        let mut forms = Vec::new();
        for n in range.clone() {
            let (p, q) = knotgrp::family_normal_form(n);
            forms.push(format!("({p},{q})"));
            for (li, l) in intersection_loci(n).map_err(err)?.iter().enumerate() {
                for root in 0..l.field.degree() {
                    for branch in 0..2 {
                        let rep = knotgrp::locus_rep(n, li, root, branch).map_err(err)?;
                        worst = worst.max(knotgrp::normal_form_residual(&rep, p, q).map_err(err)?);
                        worst = worst.max(knotgrp::relator_residual(&rep).map_err(err)?);
                    }
                }
            }
        }
        ensure(worst < 1e-9, || format!("max residual {worst:e}"))?;
        Ok(format!("{} at loci points, max residual {worst:.1e}", forms.join(", ")))
    })
}

fn seifert_traces(range: RangeInclusive<u32>) -> Check {
    Check::new("knotgrp.seifert_traces", move || {
        let mut worst = 0.0f64;
        for n in range.clone() {
            let words = family_words(n).map_err(err)?;
            for (li, l) in intersection_loci(n).map_err(err)?.iter().enumerate() {
                let x2 = x_squared_at(l).map_err(err)?;
                for (root, rho) in l.r_roots().into_iter().enumerate() {
                    let rep = knotgrp::locus_rep(n, li, root, 0).map_err(err)?;
                    let ctx = trace::numeric_context(n, rho, x2.embed(rho)).map_err(err)?;
                    let s = ctx.tr_seifert_generator();
                    let s1 = mtrace(&word_eval(&rep, &words.s1));
                    let s2 = mtrace(&word_eval(&rep, &words.s2));
                    let s12 = mtrace(&word_eval(&rep, &words.s1.concat(&words.s2.inverse())));
                    worst = worst
                        .max((s1 - s).norm())
                        .max((s2 - s).norm())
                        .max((s12 - ctx.tr_s1s2inv()).norm());
                }
            }
        }
        ensure(worst < 1e-9, || format!("max deviation {worst:e}"))?;
        Ok(format!("tr s1, tr s2, tr s1 s2^-1 match, max deviation {worst:.1e}"))
    })
}

/// Fixture replay plus the identities over their acceptance ranges; the
/// per-n pipeline checks stop at `max_n`.
pub fn paper_checks(fixtures: &[GoldenFixture], max_n: u32) -> Vec<Check> {
    let fx = || fixtures.to_vec();
    let max_n = max_n.max(2);
    vec![
        identities(2..=60),
        g_poly(fx(), 2),
        g_poly(fx(), 3),
        mod2(2..=60),
        x_model(fx(), 2),
        x_model(fx(), 3),
        x_even(2..=12),
        d_split(2..=20),
        smoothness(2..=12),
        bezout(fx(), 2),
        bezout(fx(), 3),
        loci(fx(), 2),
        loci(fx(), 3),
        meridian(fx(), 2),
        meridian(fx(), 3),
        meridian_nonintegral(2..=max_n),
        numeric_x_squared(2..=max_n),
        longitude(fx(), 2),
        longitude(fx(), 3),
        longitude_integral(2..=max_n),
        slope_zero(2..=max_n),
        delta_gamma(2..=max_n.min(6)),
        reducible(2..=12),
        alexander(2..=20),
        slopes(2..=20),
        printed_point(),
        normal_form(2..=3),
        seifert_traces(2..=max_n.min(5)),
    ]
}

/// The checks that read fixture data, for `n = 2, 3`.
pub fn fixture_checks(fixtures: &[GoldenFixture]) -> Vec<Check> {
    let fx = || fixtures.to_vec();
    [2, 3]
        .into_iter()
        .flat_map(|n| {
            [
                g_poly(fx(), n),
                x_model(fx(), n),
                bezout(fx(), n),
                loci(fx(), n),
                meridian(fx(), n),
                longitude(fx(), n),
            ]
        })
        .collect()
}

/// Identity checks at a single `n`, plus fixture checks when printed data
/// exists for that `n`.
pub fn n_checks(n: u32, fixtures: &[GoldenFixture]) -> Vec<Check> {
    let r = || n..=n;
    let mut checks = vec![
        identities(r()),
        mod2(r()),
        x_even(r()),
        d_split(r()),
        smoothness(r()),
        meridian_nonintegral(r()),
        numeric_x_squared(r()),
        longitude_integral(r()),
        slope_zero(r()),
        delta_gamma(r()),
        reducible(r()),
        alexander(r()),
        slopes(r()),
        normal_form(r()),
        seifert_traces(r()),
    ];
    if fixtures.iter().any(|f| f.n == n) {
        let fx = || fixtures.to_vec();
        checks.extend([
            g_poly(fx(), n),
            x_model(fx(), n),
            bezout(fx(), n),
            loci(fx(), n),
            meridian(fx(), n),
            longitude(fx(), n),
        ]);
    }
    checks
}

/// Runs every check on its own thread; outcomes keep the input order.
pub fn run_checks(checks: &[Check]) -> Vec<CheckOutcome> {
    thread::scope(|s| {
        let handles: Vec<_> = checks.iter().map(|c| s.spawn(move || (c.run)())).collect();
        checks
            .iter()
            .zip(handles)
            .map(|(c, h)| {
                let (passed, detail) = match h.join() {
                    Ok(Ok(d)) => (true, d),
                    Ok(Err(d)) => (false, d),
                    Err(_) => (false, "panicked".to_string()),
                };
                CheckOutcome {
                    name: c.name.clone(),
                    passed,
                    detail,
                }
            })
            .collect()
    })
}

pub fn render_table(outcomes: &[CheckOutcome]) -> String {
    let width = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for o in outcomes {
        let tag = if o.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("{tag}  {:<width$}  {}\n", o.name, o.detail));
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    out.push_str(&format!("{} checks, {} failed\n", outcomes.len(), failed));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn all_paper_checks_pass() {
        let outcomes = run_checks(&paper_checks(&fixtures::builtin(), 4));
        assert!(outcomes.len() >= 25);
        for o in &outcomes {
            assert!(o.passed, "{}: {}", o.name, o.detail);
        }
    }

    #[test]
    fn perturbed_longitude_fixture_fails_by_name() {
        let mut fx = fixtures::builtin();
        fx[1].longitude_min_poly = UniPoly::from_ints("l", &[8647329, -385360, 15768, -212, 1]);
        let outcomes = run_checks(&paper_checks(&fx, 3));
        let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed).map(|o| o.name.as_str()).collect();
        assert_eq!(failed, vec!["trace.longitude.n3"]);
    }

    #[test]
    fn single_n_path_without_fixture() {
        let outcomes = run_checks(&n_checks(5, &fixtures::builtin()));
        assert!(outcomes.iter().all(|o| o.passed), "{}", render_table(&outcomes));
        assert!(!outcomes.iter().any(|o| o.name.starts_with("variety.bezout")));
    }
}
