//! End-to-end acceptance run: one line per criterion, non-zero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use cvtk::arith::UniPoly;
use cvtk::cheb::{self, ChebCache};
use cvtk::fixtures::{self, GoldenFixture};
use cvtk::intersect::{intersection_loci, meridian_min_poly, x_squared_at};
use cvtk::knotgrp::{self, family_words, numeric_rep, word_eval};
use cvtk::trace::{self, DetectedSlope, TraceContext};
use cvtk::variety;
use cvtk::verify;
use cvtk::BiPoly;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn within(budget: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < budget, || format!("took {took:.1?}, budget {budget:?}"))
}

fn ints(var: &str, c: &[i64]) -> UniPoly {
    UniPoly::from_ints(var, c)
}

fn fixture(n: u32) -> GoldenFixture {
    fixtures::golden(n).expect("built-in fixture")
}

fn chebyshev_identities() -> Outcome {
    let start = Instant::now();
    let cache = ChebCache::new();
    for j in 2..=60 {
        for c in cheb::check_identities(&cache, j).map_err(e)? {
            ensure(c.holds, || format!("j={j}: {}", c.name))?;
        }
    }
    within(Duration::from_secs(5), start)?;
    Ok(format!("9 identities, j = 2..60, {:.2?}", start.elapsed()))
}

fn g_polynomials() -> Outcome {
    let g2 = cheb::intersection_poly(2).map_err(e)?;
    let g3 = cheb::intersection_poly(3).map_err(e)?;
    ensure(g2 == ints("u", &[2, -2, 1]), || format!("G_2 = {g2}"))?;
    ensure(g3 == ints("u", &[3, 0, 0, -2, 1]), || format!("G_3 = {g3}"))?;
    Ok(format!("G_2 = {g2}, G_3 = {g3}"))
}

fn x_model_fixtures() -> Outcome {
    for n in [2, 3] {
        let f = fixture(n);
        let x = variety::x_variety_poly(n).map_err(e)?.poly;
        let product: BiPoly = &f.x0 * &f.x1;
        ensure(x.primitive_integer_form() == product.primitive_integer_form(), || {
            format!("n={n}: X = {x} differs from the fixture product")
        })?;
    }
    Ok("primitive X(n) = X0 X1 for n = 2, 3".into())
}

fn smooth_model_split() -> Outcome {
    for n in 2..=20 {
        let d = variety::d_variety_poly(n).map_err(e)?.poly;
        let line = BiPoly::from_int_terms("r", "t", &[(1, 1, 0), (-1, 0, 1)]);
        let (_, rem) = d.div_rem_in(&line, 0).map_err(e)?;
        ensure(rem.is_zero(), || format!("n={n}: r - t does not divide D"))?;
        let s = variety::d_split(n).map_err(e)?;
        ensure(&s.d0 * &s.d1 == d, || format!("n={n}: D0 D1 != D"))?;
        let deg = s.d1.total_degree().unwrap_or(0);
        ensure(deg == 2 * n - 2, || format!("n={n}: deg D1 = {deg}"))?;
    }
    Ok("(r - t) | D, deg D1 = 2n - 2 for n = 2..20".into())
}

fn mod2_congruence() -> Outcome {
    let cache = ChebCache::new();
    for n in 2..=60 {
        let f = cache.f(n);
        let diff = &cache.big_g(n).map_err(e)? - &(&f * &f);
        let even = diff
            .coeffs()
            .iter()
            .all(|c| c.is_integer() && (c.numer() % 2u32).is_zero());
        ensure(even, || format!("n={n}: G_n - f_n^2 = {diff}"))?;
    }
    Ok("G_n = f_n^2 mod 2 for n = 2..60".into())
}

fn meridian_nonintegrality() -> Outcome {
    let start = Instant::now();
    let mut loci_seen = 0;
    for n in 2..=8 {
        let mut product = UniPoly::one("x");
        for l in intersection_loci(n).map_err(e)? {
            let m = meridian_min_poly(&l).map_err(e)?;
            ensure(m.verdict.has_bad_prime(2), || {
                format!("n={n}: 2 is not a bad prime over {}", l.modulus())
            })?;
            for p in &m.x_min_polys {
                product = &product * p;
            }
            loci_seen += 1;
        }
        let expect = match n {
            2 => Some(ints("x", &[45, 0, -24, 0, 4])),
            3 => Some(ints("x", &[6125, 0, -8400, 0, 5160, 0, -1424, 0, 144])),
            _ => None,
        };
        if let Some(p) = expect {
            ensure(product == p.monic(), || format!("n={n}: meridian polynomial {product}"))?;
        }
    }
    within(Duration::from_secs(30), start)?;
    Ok(format!("2 in the denominators at all {loci_seen} loci, n = 2..8, {:.2?}", start.elapsed()))
}

fn longitude_integrality() -> Outcome {
    let start = Instant::now();
    for n in 2..=8 {
        let mut product = UniPoly::one("l");
        for l in intersection_loci(n).map_err(e)? {
            let x2 = x_squared_at(&l).map_err(e)?;
            let d = trace::longitude_data(&l, &x2).map_err(e)?;
            ensure(d.verdict.is_algebraic_integer, || {
                format!("n={n}: longitude min poly {} not integral", d.min_poly)
            })?;
            product = &product * &d.min_poly;
        }
        let expect = match n {
            2 => Some(ints("l", &[772, -28, 1])),
            3 => Some(ints("l", &[8647328, -385360, 15768, -212, 1])),
            _ => None,
        };
        if let Some(p) = expect {
            ensure(product == p, || format!("n={n}: longitude polynomial {product}"))?;
        }
    }
    within(Duration::from_secs(60), start)?;
    Ok(format!("integral monic minimal polynomials, n = 2..8, {:.2?}", start.elapsed()))
}

fn slope_verdict() -> Outcome {
    for n in 2..=8 {
        let report = trace::run_pipeline(n).map_err(e)?;
        let v = report.slope.ok_or("no verdict")?;
        ensure(v.detected_slope == DetectedSlope::Slope(0), || {
            format!("n={n}: {}", v.surface_description)
        })?;
        ensure(v.surface_description.contains("genus 1 Seifert"), || {
            format!("n={n}: {}", v.surface_description)
        })?;
    }
    Ok("slope 0, genus 1 Seifert surface for n = 2..8".into())
}

fn bezout_budgets() -> Outcome {
    let mut seen = Vec::new();
    for (n, expect) in [(2, (20, 4, 16)), (3, (84, 8, 76))] {
        let f = fixture(n);
        let b = variety::bezout_budget(&f.x0, &f.x1).map_err(e)?;
        ensure(b.triple() == expect, || format!("n={n}: {:?}", b.triple()))?;
        ensure(b.affine_multiplicity_one, || format!("n={n}: affine multiplicity > 1"))?;
        seen.push(format!("{:?}", b.triple()));
    }
    Ok(format!("{}, affine multiplicities 1", seen.join(" and ")))
}

fn delta_gamma() -> Outcome {
    let mut count = 0;
    for n in 2..=6u32 {
        for l in intersection_loci(n).map_err(e)? {
            let x2 = x_squared_at(&l).map_err(e)?;
            let mut ctx = TraceContext::on_line(n, l.r(), x2).map_err(e)?;
            for d in 0..=n as i64 {
                for k in 0..=n as i64 {
                    let a = ctx.delta(d, k).map_err(e)?;
                    let b = ctx.gamma_closed(d, k).map_err(e)?;
                    ensure(a == b, || format!("n={n}: delta({d},{k}) != gamma({d},{k})"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} exact equalities in the locus fields, n = 2..6"))
}

fn numeric_representations() -> Outcome {
    let c = Complex64::new;
    let mu = (c(-1.0, -1.5).sqrt() + c(3.0, -1.5).sqrt()) / 2.0;
    let rep = numeric_rep(2, mu, c(1.0, -1.0)).map_err(e)?;
    let res = knotgrp::relator_residual(&rep).map_err(e)?;
    ensure(res < 1e-9, || format!("relator residual {res:e}"))?;
    let lon = knotgrp::trace(&word_eval(&rep, &family_words(2).map_err(e)?.longitude));
    ensure((lon - c(14.0, 24.0)).norm() < 1e-9, || format!("longitude trace {lon}"))?;

    let mut worst = 0.0f64;
    for (n, pq) in [(2, (15, 11)), (3, (35, 29))] {
        ensure(knotgrp::family_normal_form(n) == pq, || format!("n={n}: normal form"))?;
        for (li, l) in intersection_loci(n).map_err(e)?.iter().enumerate() {
            for root in 0..l.field.degree() {
                for branch in 0..2 {
                    let rep = knotgrp::locus_rep(n, li, root, branch).map_err(e)?;
                    worst = worst.max(knotgrp::normal_form_residual(&rep, pq.0, pq.1).map_err(e)?);
                }
            }
        }
    }
    ensure(worst < 1e-9, || format!("normal-form residual {worst:e}"))?;
    Ok(format!("printed point residual {res:.1e}, (15,11) and (35,29) residual {worst:.1e}"))
}

fn reducible_characters() -> Outcome {
    let two = BigRational::from_integer(2.into());
    for n in 2..=12u32 {
        let c = trace::reducible_character(n).map_err(e)?;
        let n2 = (n * n) as i64;
        ensure(c.x_squared == BigRational::new((4 * n2 - 1).into(), n2.into()), || {
            format!("n={n}: x^2 = {}", c.x_squared)
        })?;
        ensure(c.on_x_model, || format!("n={n}: reducible point not on X"))?;
        ensure(c.tr_s1 == two && c.tr_s2 == two && c.tr_s1s2inv == two, || {
            format!("n={n}: traces {}, {}, {}", c.tr_s1, c.tr_s2, c.tr_s1s2inv)
        })?;
        let d = variety::derivative_identity_at_r2(n).map_err(e)?;
        ensure(d == ints("x", &[0, -2 * n2]), || format!("n={n}: dF/dx at r=2 is {d}"))?;
    }
    Ok("x^2 = (4n^2-1)/n^2 on X, traces 2, dF/dx = -2n^2 x for n = 2..12".into())
}

fn alexander_data() -> Outcome {
    for n in 2..=20u32 {
        let (p, disc) = trace::alexander_poly(n).map_err(e)?;
        let n2 = (n * n) as i64;
        ensure(p == ints("t", &[n2, 1 - 2 * n2, n2]), || format!("n={n}: {p}"))?;
        ensure(disc == (1 - 4 * n2).into(), || format!("n={n}: discriminant {disc}"))?;
        ensure(p.eval(&BigRational::from_integer(1.into())) == BigRational::from_integer(1.into()), || {
            format!("n={n}: Delta(1) != 1")
        })?;
    }
    Ok("n^2 t^2 + (1-2n^2) t + n^2, discriminant 1-4n^2, Delta(1) = 1 for n = 2..20".into())
}

/// Every way of bumping one fixture number by one.
fn perturbations() -> Vec<(String, Vec<GoldenFixture>)> {
    fn bump_uni(p: &UniPoly) -> Vec<UniPoly> {
        (0..p.coeffs().len())
            .map(|i| {
                let mut c = p.coeffs().to_vec();
                c[i] += BigRational::from_integer(1.into());
                UniPoly::new(p.var(), c)
            })
            .collect()
    }
    fn bump_bi(p: &BiPoly) -> Vec<BiPoly> {
        let form = p.primitive_integer_form();
        form.keys()
            .map(|k| {
                let terms: Vec<(i64, u32, u32)> = form
                    .iter()
                    .map(|(&(i, j), c)| {
                        let c = i64::try_from(c).expect("small fixture coefficient");
                        (if (i, j) == *k { c + 1 } else { c }, i, j)
                    })
                    .collect();
                let v = p.vars();
                BiPoly::from_int_terms(&v[0], &v[1], &terms)
            })
            .collect()
    }
    let base = fixtures::builtin();
    let mut out = Vec::new();
    for (idx, f) in base.iter().enumerate() {
        let n = f.n;
        let mut push = |check: &str, g: GoldenFixture| {
            let mut fx = base.clone();
            fx[idx] = g;
            out.push((format!("{check}.n{n}"), fx));
        };
        for p in bump_bi(&f.x0) {
            push("variety.x_model", GoldenFixture { x0: p, ..f.clone() });
        }
        for p in bump_bi(&f.x1) {
            push("variety.x_model", GoldenFixture { x1: p, ..f.clone() });
        }
        for p in bump_uni(&f.x_min_poly) {
            push("intersect.meridian", GoldenFixture { x_min_poly: p, ..f.clone() });
        }
        for p in bump_uni(&f.r_poly) {
            push("intersect.loci", GoldenFixture { r_poly: p, ..f.clone() });
        }
        for p in bump_uni(&f.longitude_min_poly) {
            push("trace.longitude", GoldenFixture { longitude_min_poly: p, ..f.clone() });
        }
        for k in 0..3 {
            let mut b = f.bezout;
            match k {
                0 => b.total += 1,
                1 => b.affine += 1,
                _ => b.ideal += 1,
            }
            push("variety.bezout", GoldenFixture { bezout: b, ..f.clone() });
        }
    }
    out
}

fn negative_control() -> Outcome {
    let cases = perturbations();
    for (name, fx) in &cases {
        let outcomes = verify::run_checks(&verify::fixture_checks(fx));
        ensure(outcomes.iter().any(|o| !o.passed && &o.name == name), || {
            format!("perturbation for {name} went unnoticed")
        })?;
    }
    // The binary itself, on one perturbation per fixture field.
    let dir = std::env::temp_dir();
    let mut seen = std::collections::BTreeSet::new();
    let mut runs = 0;
    for (i, (name, fx)) in cases.iter().enumerate() {
        if !seen.insert(name.clone()) {
            continue;
        }
        let path = dir.join(format!("cvtk-acceptance-{}-{i}.json", std::process::id()));
        std::fs::write(&path, fixtures::to_json(fx)).map_err(e)?;
        let out = Command::new(env!("CARGO_BIN_EXE_cvtk"))
            .args(["verify-paper", "--fixtures"])
            .arg(&path)
            .env("CVTK_MAX_N", "3")
            .output()
            .map_err(e)?;
        std::fs::remove_file(&path).ok();
        ensure(out.status.code() == Some(1), || format!("{name}: exit {:?}", out.status.code()))?;
        let text = String::from_utf8_lossy(&out.stdout);
        ensure(text.lines().any(|l| l.starts_with("FAIL") && l.contains(name.as_str())), || {
            format!("{name}: not named in the failure table")
        })?;
        runs += 1;
    }
    Ok(format!("{} perturbations caught, {runs} through the binary with exit 1", cases.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 14] = [
        ("chebyshev identities", chebyshev_identities),
        ("G polynomials", g_polynomials),
        ("X model fixtures", x_model_fixtures),
        ("smooth model split", smooth_model_split),
        ("mod 2 congruence", mod2_congruence),
        ("meridian non-integrality", meridian_nonintegrality),
        ("longitude integrality", longitude_integrality),
        ("slope verdict", slope_verdict),
        ("Bezout budgets", bezout_budgets),
        ("delta/gamma equivalence", delta_gamma),
        ("numeric representations", numeric_representations),
        ("reducible characters", reducible_characters),
        ("Alexander data", alexander_data),
        ("negative control", negative_control),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} {name:<26} PASS  {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} {name:<26} FAIL  {detail}", k + 1);
            }
        }
    }
    println!("{} criteria, {failed} failed", criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
