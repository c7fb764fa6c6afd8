//! Factorization of squarefree primitive integer polynomials: factor modulo
//! a small prime, lift the factors p-adically, then recombine.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::berlekamp::berlekamp;
use crate::arith::modp::{next_prime, ModPoly, PrimeField};
use crate::arith::zpoly;

fn reduce(p: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = p.iter().map(|c| c.mod_floor(m)).collect();
    zpoly::trim(&mut out);
    out
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    reduce(&zpoly::mul(a, b), m)
}

fn add_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let v: Vec<BigInt> = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
        .collect();
    reduce(&v, m)
}

fn sub_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    reduce(&zpoly::sub(a, b), m)
}

/// Division by a monic `b` modulo `m`.
fn div_rem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let db = b.len() - 1;
    let mut r = reduce(a, m);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap().clone();
        for (j, bc) in b.iter().enumerate() {
            r[k + j] = (&r[k + j] - &c * bc).mod_floor(m);
        }
        q[k] = c;
        zpoly::trim(&mut r);
    }
    zpoly::trim(&mut q);
    (q, r)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "leading coefficient not invertible modulo lifting modulus");
    e.x.mod_floor(m)
}

fn lift_modp(p: &ModPoly) -> Vec<BigInt> {
    p.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts `f = g * h mod p` (`h` monic) to `f = g* h* mod p^(2^steps)`.
fn lift_pair(
    f: &[BigInt],
    g0: &ModPoly,
    h0: &ModPoly,
    field: &PrimeField,
    steps: u32,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let (gcd, s0, _) = field.ext_gcd(g0, h0);
    assert_eq!(gcd, vec![1], "lifted factors must be coprime mod p");
    // Normalize so that deg s < deg h and deg t < deg g.
    let s0 = field.rem(&s0, h0);
    let one_minus = field.poly_sub(&[1], &field.poly_mul(&s0, g0));
    let (t0, r) = field.div_rem(&one_minus, h0);
    debug_assert!(r.is_empty());

    let mut m = BigInt::from(field.p);
    let (mut g, mut h) = (lift_modp(g0), lift_modp(h0));
    let (mut s, mut t) = (lift_modp(&s0), lift_modp(&t0));
    for _ in 0..steps {
        let m2 = &m * &m;
        let e = sub_mod(f, &zpoly::mul(&g, &h), &m2);
        let (q, r) = div_rem_monic(&mul_mod(&s, &e, &m2), &h, &m2);
        let g_new = add_mod(&add_mod(&g, &mul_mod(&t, &e, &m2), &m2), &mul_mod(&q, &g, &m2), &m2);
        let h_new = add_mod(&h, &r, &m2);
        let b = sub_mod(
            &add_mod(&mul_mod(&s, &g_new, &m2), &mul_mod(&t, &h_new, &m2), &m2),
            &[BigInt::one()],
            &m2,
        );
        let (c, d) = div_rem_monic(&mul_mod(&s, &b, &m2), &h_new, &m2);
        s = sub_mod(&s, &d, &m2);
        t = sub_mod(
            &sub_mod(&t, &mul_mod(&t, &b, &m2), &m2),
            &mul_mod(&c, &g_new, &m2),
            &m2,
        );
        g = g_new;
        h = h_new;
        m = m2;
    }
    (g, h)
}

/// Lifts the monic mod-p factors of `f` (whose product times `lc(f)` is `f`
/// mod p) to monic factors modulo `p^(2^steps)`.
fn lift_all(f: &[BigInt], locals: &[ModPoly], field: &PrimeField, steps: u32) -> Vec<Vec<BigInt>> {
    let modulus = num_traits::pow(BigInt::from(field.p), 1usize << steps);
    if locals.len() == 1 {
        let inv = mod_inverse(f.last().unwrap(), &modulus);
        return vec![reduce(&f.iter().map(|c| c * &inv).collect::<Vec<_>>(), &modulus)];
    }
    let mid = locals.len() / 2;
    let (left, right) = locals.split_at(mid);
    let h0 = left.iter().fold(vec![1u64], |acc, g| field.poly_mul(&acc, g));
    let lc = field.reduce_int(f.last().unwrap());
    let g0 = field.poly_scale(&right.iter().fold(vec![1u64], |acc, g| field.poly_mul(&acc, g)), lc);
    let (g, h) = lift_pair(f, &g0, &h0, field, steps);
    let mut out = lift_all(&h, left, field, steps);
    out.extend(lift_all(&g, right, field, steps));
    out
}

fn symmetric(p: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m >> 1;
    let mut out: Vec<BigInt> = p
        .iter()
        .map(|c| {
            let c = c.mod_floor(m);
            if c > half {
                c - m
            } else {
                c
            }
        })
        .collect();
    zpoly::trim(&mut out);
    out
}

/// Smallest prime not dividing the leading coefficient for which `f`
/// stays squarefree.
fn choose_prime(f: &[BigInt]) -> PrimeField {
    let mut p = 2u64;
    loop {
        let field = PrimeField::new(p);
        let fp = field.reduce_poly(f);
        if fp.len() == f.len() && field.is_squarefree(&fp) {
            return field;
        }
        p = next_prime(p);
    }
}

/// Iterates `k`-subsets of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Irreducible factors (primitive, positive leading coefficient) of a
/// squarefree primitive integer polynomial of positive degree.
pub fn factor_squarefree(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let f = zpoly::primitive_part(f);
    let d = f.len() - 1;
    if d <= 1 {
        return vec![f];
    }
    let field = choose_prime(&f);
    let fp = field.monic(&field.reduce_poly(&f));
    let locals = berlekamp(&field, &fp);
    if locals.len() == 1 {
        return vec![f];
    }
    // Coefficient bound for factors, scaled by the leading coefficient.
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound = (norm2.sqrt() + 1u32) * (BigInt::one() << d) * f.last().unwrap().abs();
    let need = bound * 2u32;
    let mut steps = 0u32;
    let mut modulus = BigInt::from(field.p);
    while modulus <= need {
        modulus = &modulus * &modulus;
        steps += 1;
    }
    let mut lifted = lift_all(&f, &locals, &field, steps);

    let mut found = Vec::new();
    let mut rest = f.clone();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let n = lifted.len();
        let mut idx: Vec<usize> = (0..size).collect();
        let mut hit = None;
        loop {
            let lc = rest.last().unwrap().clone();
            let prod = idx
                .iter()
                .fold(vec![lc], |acc, &i| mul_mod(&acc, &lifted[i], &modulus));
            let cand = zpoly::primitive_part(&symmetric(&prod, &modulus));
            if let Some(q) = zpoly::div_exact(&rest, &cand) {
                hit = Some((cand, q));
                break;
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
        match hit {
            Some((cand, q)) => {
                found.push(cand);
                rest = q;
                for &i in idx.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    found.push(zpoly::primitive_part(&rest));
    found
}
