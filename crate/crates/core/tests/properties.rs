use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use cvtk::arith::{self, rat, resultant, BiPoly, RatMatrix, UniPoly};
use cvtk::factor;
use cvtk::intersect::intersection_loci;
use cvtk::knotgrp::{self, FreeWord, Letter};
use cvtk::numfield::{integrality_verdict, NumberField};
use cvtk::trace::{tr_commutator, tr_power, TraceContext};

fn small_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-bound..=bound, 1..=max_deg + 1).prop_map(|c| UniPoly::from_ints("u", &c))
}

fn nonzero_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = UniPoly> {
    small_poly(max_deg, bound).prop_filter("nonzero", |p| !p.is_zero())
}

fn complex() -> impl Strategy<Value = Complex64> {
    (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(a, b)| Complex64::new(a, b))
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out
}

/// Irreducibility of an integer polynomial of degree at most 4 by the
/// rational root test and a brute-force search for quadratic factors.
fn oracle_irreducible(p: &UniPoly) -> bool {
    let ints = p.primitive_integer_form();
    let d = ints.len() - 1;
    if d <= 1 {
        return d == 1;
    }
    let (a0, lc) = (ints[0].clone(), ints[d].clone());
    if a0.is_zero() {
        return false;
    }
    for num in divisors(&a0) {
        for den in divisors(&lc) {
            for s in [1, -1] {
                let x = BigRational::new(&num * s, den.clone());
                if p.eval(&x).is_zero() {
                    return false;
                }
            }
        }
    }
    if d < 4 {
        return true;
    }
    let norm: f64 = ints.iter().map(|c| num_traits::ToPrimitive::to_f64(c).unwrap().powi(2)).sum::<f64>().sqrt();
    let bound = (16.0 * norm).ceil() as i64 + 1;
    for a in divisors(&lc) {
        for c in divisors(&a0) {
            for sc in [1, -1] {
                for b in -bound..=bound {
                    let q = UniPoly::from_bigints("u", &[&c * sc, BigInt::from(b), a.clone()]);
                    if p.div_exact(&q).is_some() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn brute_reduce(word: &[Letter]) -> Vec<Letter> {
    let mut w = word.to_vec();
    loop {
        let pos = (0..w.len().saturating_sub(1)).find(|&i| w[i + 1] == w[i].inverse());
        match pos {
            Some(i) => {
                w.drain(i..i + 2);
            }
            None => return w,
        }
    }
}

fn letter() -> impl Strategy<Value = Letter> {
    prop_oneof![Just(Letter::A), Just(Letter::AInv), Just(Letter::B), Just(Letter::BInv)]
}

fn sl2(a: Complex64, b: Complex64, c: Complex64) -> knotgrp::Mat2 {
    // [[a, b], [c, (1 + b c)/a]]
    [[a, b], [c, (Complex64::new(1.0, 0.0) + b * c) / a]]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn resultant_is_multiplicative(p in nonzero_poly(3, 9), q in nonzero_poly(3, 9), r in nonzero_poly(3, 9)) {
        let lhs = resultant(&(&p * &q), &r).unwrap();
        let rhs = resultant(&p, &r).unwrap() * resultant(&q, &r).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn resultant_vanishes_on_common_factor(p in nonzero_poly(3, 9), q in nonzero_poly(3, 9), c in -5i64..5) {
        let lin = UniPoly::from_ints("u", &[-c, 1]);
        prop_assert!(resultant(&(&p * &lin), &(&q * &lin)).unwrap().is_zero());
    }

    #[test]
    fn bivariate_resultant_matches_specialization(
        a in prop::collection::vec((-5i64..5, 0u32..3, 0u32..3), 1..6),
        b in prop::collection::vec((-5i64..5, 0u32..3, 0u32..3), 1..6),
        x in -4i64..4,
    ) {
        let p = BiPoly::from_int_terms("r", "y", &a);
        let q = BiPoly::from_int_terms("r", "y", &b);
        let x = arith::rat_int(x);
        let (pd, qd) = (p.degree_in(1), q.degree_in(1));
        let ps = p.substitute(0, &x);
        let qs = q.substitute(0, &x);
        // Specialization commutes with elimination when leading coefficients survive.
        prop_assume!(pd.is_some() && qd.is_some() && ps.degree() == pd.map(|d| d as usize) && qs.degree() == qd.map(|d| d as usize));
        let res = arith::resultant_in(&p, &q, "y").unwrap();
        prop_assert_eq!(res.eval(&x), resultant(&ps.with_var("y"), &qs.with_var("y")).unwrap());
    }

    #[test]
    fn cayley_hamilton(entries in prop::collection::vec(-6i64..6, 16), den in 1i64..4) {
        let rows: Vec<Vec<BigRational>> = entries.chunks(4).map(|r| r.iter().map(|&v| rat(v, den)).collect()).collect();
        let m = RatMatrix::from_rows(rows);
        let p = m.char_poly("u");
        prop_assert_eq!(p.degree(), Some(4));
        prop_assert!(p.is_monic());
        prop_assert!(m.eval_poly(&p).is_zero());
    }

    #[test]
    fn gcd_contains_shared_factor(a in nonzero_poly(3, 6), b in nonzero_poly(3, 6), c in nonzero_poly(2, 6)) {
        let g = arith::poly_gcd(&(&a * &c), &(&b * &c)).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!((&a * &c).div_exact(&g).is_some());
        prop_assert!((&b * &c).div_exact(&g).is_some());
        prop_assert!(g.div_exact(&c.monic()).is_some());
    }

    #[test]
    fn factorization_is_complete_and_irreducible(parts in prop::collection::vec(nonzero_poly(2, 5), 1..4)) {
        let p = parts.iter().fold(UniPoly::one("u"), |acc, q| acc * q.clone());
        prop_assume!(p.degree().unwrap_or(0) >= 1);
        let f = factor::factor_over_rationals(&p).unwrap();
        prop_assert_eq!(f.expand("u"), p);
        for (q, _) in &f.factors {
            prop_assert!(q.degree().unwrap() >= 1);
            if q.degree().unwrap() <= 4 {
                prop_assert!(oracle_irreducible(q), "{} reported irreducible", q);
            }
        }
    }

    #[test]
    fn squarefree_decomposition_multiplies_back(parts in prop::collection::vec((nonzero_poly(2, 4), 1u32..4), 1..3)) {
        let p = parts.iter().fold(UniPoly::one("u"), |acc, (q, e)| acc * q.pow(*e));
        prop_assume!(p.degree().unwrap_or(0) >= 1);
        let dec = factor::squarefree_decomposition(&p).unwrap();
        let prod = dec.iter().fold(UniPoly::one("u"), |acc, (q, e)| acc * q.pow(*e));
        prop_assert!(prod.eq_up_to_scalar(&p));
        for (q, _) in &dec {
            prop_assert!(arith::poly_gcd(q, &q.derivative()).unwrap().is_one());
        }
    }

    #[test]
    fn rational_strings_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
        let q = rat(n, d);
        prop_assert_eq!(arith::parse_rational(&arith::format_rational(&q)).unwrap(), q.clone());
        prop_assert!(arith::is_canonical(&q));
    }

    #[test]
    fn polynomial_json_round_trip(p in small_poly(6, 50), d in 1i64..9, terms in prop::collection::vec((-9i64..9, 0u32..4, 0u32..4), 0..8)) {
        let p = p.scale(&rat(1, d));
        let text = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<UniPoly>(&text).unwrap(), p);
        let b = BiPoly::from_int_terms("r", "x", &terms);
        let text = serde_json::to_string(&b).unwrap();
        prop_assert_eq!(serde_json::from_str::<BiPoly>(&text).unwrap(), b);
    }

    #[test]
    fn free_reduction_matches_brute_force(letters in prop::collection::vec(letter(), 0..20)) {
        let w = FreeWord::new(letters.clone());
        let reduced = brute_reduce(&letters);
        prop_assert_eq!(w.letters(), reduced.as_slice());
        prop_assert_eq!(FreeWord::new(w.letters().to_vec()), w.clone());
        prop_assert!(w.letters().windows(2).all(|p| p[1] != p[0].inverse()));
        prop_assert!(w.concat(&w.inverse()).is_empty());
    }

    #[test]
    fn commutator_trace_matches_matrices(a in complex(), b in complex(), c in complex(), d in complex(), e in complex(), f in complex()) {
        prop_assume!(a.norm() > 0.2 && d.norm() > 0.2);
        let (m1, m2) = (sl2(a, b, c), sl2(d, e, f));
        let t1 = knotgrp::trace(&m1);
        let t2 = knotgrp::trace(&m2);
        let t12 = knotgrp::trace(&knotgrp::mat_mul(&m1, &m2));
        let comm = knotgrp::mat_mul(
            &knotgrp::mat_mul(&m1, &m2),
            &knotgrp::mat_mul(&knotgrp::mat_inv_sl2(&m1), &knotgrp::mat_inv_sl2(&m2)),
        );
        let scale = 1.0 + t1.norm().powi(2) + t2.norm().powi(2) + t12.norm().powi(3);
        prop_assert!((tr_commutator(&t1, &t2, &t12) - knotgrp::trace(&comm)).norm() < 1e-9 * scale);
        let mut power = knotgrp::mat_identity();
        for k in 0..6 {
            prop_assert!((tr_power(&t1, k) - knotgrp::trace(&power)).norm() < 1e-9 * (1.0 + t1.norm()).powi(k as i32));
            power = knotgrp::mat_mul(&power, &m1);
        }
    }

    #[test]
    fn gamma_matches_matrices_off_the_variety(n in 2u32..5, mu in complex(), r in complex()) {
        prop_assume!(mu.norm() > 0.3 && mu.norm() < 2.0);
        let rep = knotgrp::numeric_rep(n, mu, r).unwrap();
        let words = knotgrp::family_words(n).unwrap();
        let x = mu + Complex64::new(1.0, 0.0) / mu;
        let w = knotgrp::word_eval(&rep, &words.w);
        let t = knotgrp::trace(&w);
        let ctx = TraceContext::new(n, r, t, x * x).unwrap();
        let direct = knotgrp::trace(&knotgrp::word_eval(&rep, &words.s1.concat(&words.s2.inverse())));
        let gamma = ctx.tr_s1s2inv();
        prop_assert!((gamma - direct).norm() < 1e-9 * (1.0 + direct.norm()), "{} vs {}", gamma, direct);
    }
}

#[test]
fn field_inverse_and_minimal_polynomial() {
    let mut rng = StdRng::seed_from_u64(7);
    for n in 2..=5u32 {
        for locus in intersection_loci(n).unwrap() {
            let k = locus.field.clone();
            let deg = k.degree();
            for _ in 0..100 {
                let coeffs = (0..deg).map(|_| rat(rng.gen_range(-20..20), rng.gen_range(1..6))).collect();
                let a = k.element(&UniPoly::new("r", coeffs));
                if a.is_zero() {
                    continue;
                }
                let inv = a.inverse().unwrap();
                assert_eq!(&a * &inv, k.int(1));
                let m = a.minimal_polynomial("u");
                assert_eq!(deg % m.degree().unwrap(), 0);
                let at_a = m.coeffs().iter().rev().fold(k.int(0), |acc, c| &(&acc * &a) + &k.rational(c.clone()));
                assert!(at_a.is_zero());
            }
        }
    }
}

#[test]
fn integer_combinations_of_integral_generators_are_integral() {
    // Z[r] with r integral: the characteristic polynomial has integer
    // coefficients and the verdict reports integrality.
    let mut rng = StdRng::seed_from_u64(11);
    let k = NumberField::new(&UniPoly::from_ints("r", &[3, 0, 0, -2, 1])).unwrap();
    for _ in 0..50 {
        let c: Vec<i64> = (0..4).map(|_| rng.gen_range(-9..9)).collect();
        let a = k.element(&UniPoly::from_ints("r", &c));
        assert!(a.char_poly("u").has_integer_coeffs());
        assert!(integrality_verdict(&a.minimal_polynomial("u")).unwrap().is_algebraic_integer);
    }
}
