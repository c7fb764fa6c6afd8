//! Every coefficient of every stored fixture is load-bearing: changing it
//! makes at least one fixture check fail.

use num_rational::BigRational;
use num_traits::One;

use cvtk::arith::{BiPoly, UniPoly};
use cvtk::fixtures::{self, GoldenFixture};
use cvtk::verify::{fixture_checks, run_checks};

fn bump_uni(p: &UniPoly, i: usize) -> UniPoly {
    let mut c = p.coeffs().to_vec();
    c[i] += BigRational::one();
    UniPoly::new(p.var().to_string(), c)
}

fn bump_bi(p: &BiPoly, key: (u32, u32)) -> BiPoly {
    let mut q = p.clone();
    q.add_term(key, BigRational::one());
    q
}

fn failing(fx: &[GoldenFixture]) -> Vec<String> {
    run_checks(&fixture_checks(fx))
        .into_iter()
        .filter(|o| !o.passed)
        .map(|o| o.name)
        .collect()
}

#[test]
fn unperturbed_fixtures_pass() {
    assert!(failing(&fixtures::builtin()).is_empty());
}

#[test]
fn every_coefficient_is_checked() {
    let base = fixtures::builtin();
    let mut cases: Vec<(String, Vec<GoldenFixture>, &str)> = Vec::new();
    for (k, f) in base.iter().enumerate() {
        let n = f.n;
        let mut push = |label: String, g: GoldenFixture, check: &'static str| {
            let mut all = base.clone();
            all[k] = g;
            cases.push((label, all, check));
        };
        for key in f.x0.terms().keys() {
            let mut g = f.clone();
            g.x0 = bump_bi(&f.x0, *key);
            push(format!("n={n} x0 {key:?}"), g, "variety.x_model");
        }
        for key in f.x1.terms().keys() {
            let mut g = f.clone();
            g.x1 = bump_bi(&f.x1, *key);
            push(format!("n={n} x1 {key:?}"), g, "variety.x_model");
        }
        for i in 0..f.x_min_poly.coeffs().len() {
            let mut g = f.clone();
            g.x_min_poly = bump_uni(&f.x_min_poly, i);
            push(format!("n={n} x_min_poly[{i}]"), g, "intersect.meridian");
        }
        for i in 0..f.r_poly.coeffs().len() {
            let mut g = f.clone();
            g.r_poly = bump_uni(&f.r_poly, i);
            push(format!("n={n} r_poly[{i}]"), g, "intersect.loci");
        }
        for i in 0..f.longitude_min_poly.coeffs().len() {
            let mut g = f.clone();
            g.longitude_min_poly = bump_uni(&f.longitude_min_poly, i);
            push(format!("n={n} longitude_min_poly[{i}]"), g, "trace.longitude");
        }
        for field in 0..3 {
            let mut g = f.clone();
            match field {
                0 => g.bezout.total += 1,
                1 => g.bezout.affine += 1,
                _ => g.bezout.ideal += 1,
            }
            push(format!("n={n} bezout[{field}]"), g, "variety.bezout");
        }
    }
    assert!(cases.len() > 80);
    for (label, fx, check) in cases {
        let n = label.split_whitespace().next().unwrap().trim_start_matches("n=").to_string();
        let failed = failing(&fx);
        let want = format!("{check}.n{n}");
        assert!(failed.contains(&want), "{label}: failed {failed:?}, expected {want}");
    }
}
