//! Complex root isolation for rational polynomials, used for spot checks and
//! report output only. Nothing exact depends on these values.

use std::cmp::Ordering;

use num_complex::Complex64;

use crate::arith::{ring::rational_to_f64, UniPoly};
use crate::factor;

pub const ROOT_TOLERANCE: f64 = 1e-12;

fn to_f64_coeffs(p: &UniPoly) -> Vec<f64> {
    p.coeffs().iter().map(rational_to_f64).collect()
}

pub fn eval(p: &UniPoly, z: Complex64) -> Complex64 {
    eval_f64(&to_f64_coeffs(p), z)
}

fn eval_f64(c: &[f64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
}

/// Value and derivative by Horner.
fn eval_with_derivative(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::new(0.0, 0.0);
    let mut d = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        d = d * z + v;
        v = v * z + a;
    }
    (v, d)
}

/// All complex roots of `p` with multiplicity dropped, ordered by
/// (re, im) after rounding at [`ROOT_TOLERANCE`].
pub fn roots(p: &UniPoly) -> Vec<Complex64> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sqf = factor::squarefree_part(p).unwrap_or_else(|_| p.monic());
    let c = to_f64_coeffs(&sqf);
    let mut zs = aberth(&c);
    for z in zs.iter_mut() {
        *z = polish(&c, *z);
    }
    sort_roots(&mut zs);
    zs
}

pub fn sort_roots(zs: &mut [Complex64]) {
    zs.sort_by(|a, b| cmp_complex(*a, *b));
}

fn cmp_complex(a: Complex64, b: Complex64) -> Ordering {
    let key = |v: f64| (v / ROOT_TOLERANCE).round();
    key(a.re)
        .partial_cmp(&key(b.re))
        .unwrap_or(Ordering::Equal)
        .then(key(a.im).partial_cmp(&key(b.im)).unwrap_or(Ordering::Equal))
}

fn aberth(c: &[f64]) -> Vec<Complex64> {
    let d = c.len() - 1;
    let lc = c[d];
    if d == 1 {
        return vec![Complex64::new(-c[0] / lc, 0.0)];
    }
    // Cauchy bound for the initial circle.
    let radius = 1.0 + c[..d].iter().map(|a| (a / lc).abs()).fold(0.0, f64::max);
    let r0 = radius.clamp(1e-3, 1e6).sqrt();
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(r0, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / d as f64 + 0.4))
        .collect();
    for _ in 0..1000 {
        let mut moved = 0.0f64;
        for i in 0..d {
            let (v, dv) = eval_with_derivative(c, z[i]);
            if v == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = v / dv;
            let sum: Complex64 = (0..d)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if step.is_finite() {
                z[i] -= step;
                moved = moved.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if moved < 1e-16 {
            break;
        }
    }
    z
}

fn polish(c: &[f64], mut z: Complex64) -> Complex64 {
    for _ in 0..20 {
        let (v, dv) = eval_with_derivative(c, z);
        if dv.norm() == 0.0 {
            break;
        }
        let step = v / dv;
        if !step.is_finite() {
            break;
        }
        z -= step;
        if step.norm() <= 1e-17 * z.norm().max(1.0) {
            break;
        }
    }
    z
}

/// Whether the two lists agree as multisets to `tol`.
pub fn same_root_set(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|x| {
        let hit = (0..b.len()).find(|&j| !used[j] && (b[j] - x).norm() < tol);
        match hit {
            Some(j) => {
                used[j] = true;
                true
            }
            None => false,
        }
    })
}

/// `a+bi` with 12 significant digits in each part.
pub fn format_complex(z: Complex64) -> String {
    let re = format_sig(z.re);
    let im = format_sig(z.im.abs());
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{re} {sign} {im}i")
}

fn format_sig(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let s = format!("{:.11e}", v);
    let parsed: f64 = s.parse().unwrap();
    let mag = parsed.abs().log10().floor() as i32;
    if (-5..12).contains(&mag) {
        let decimals = (11 - mag).max(0) as usize;
        let mut out = format!("{:.*}", decimals, parsed);
        if out.contains('.') {
            out = out.trim_end_matches('0').trim_end_matches('.').to_string();
        }
        if out == "-0" {
            "0".to_string()
        } else {
            out
        }
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_pair() {
        let zs = roots(&UniPoly::from_ints("u", &[2, -2, 1]));
        assert_eq!(zs.len(), 2);
        assert!((zs[0] - Complex64::new(1.0, -1.0)).norm() < 1e-13);
        assert!((zs[1] - Complex64::new(1.0, 1.0)).norm() < 1e-13);
    }

    #[test]
    fn repeated_roots_are_collapsed() {
        let p = UniPoly::from_ints("u", &[-1, 1]).pow(3) * UniPoly::from_ints("u", &[3, 0, 0, -2, 1]);
        let zs = roots(&p);
        assert_eq!(zs.len(), 5);
        for z in zs {
            assert!(eval(&p, z).norm() < 1e-9);
        }
    }

    #[test]
    fn wilkinson_like_degree_twelve() {
        let mut p = UniPoly::one("u");
        for k in 1..=12 {
            p = p * UniPoly::from_ints("u", &[-k, 1]);
        }
        let zs = roots(&p);
        for (k, z) in zs.iter().enumerate() {
            assert!((z - Complex64::new((k + 1) as f64, 0.0)).norm() < 1e-6, "{z}");
        }
    }

    #[test]
    fn formatting() {
        assert_eq!(format_complex(Complex64::new(14.0, 24.0)), "14 + 24i");
        assert_eq!(format_complex(Complex64::new(0.442280, -0.601587)), "0.44228 - 0.601587i");
        assert_eq!(format_sig(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_sig(95.24699999999), "95.247");
    }

    #[test]
    fn multiset_compare() {
        let a = [Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)];
        let b = [Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)];
        assert!(!same_root_set(&a, &b, 1e-9));
        assert!(same_root_set(&a, &a, 1e-9));
    }
}
