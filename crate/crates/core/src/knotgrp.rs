//! Free words in `a`, `b`, the two-bridge normal-form word, the J(2n,2n)
//! relator with its Seifert generators, and numeric SL2(C) evaluation.

use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intersect::{intersection_loci, x_squared_at};
use crate::variety::check_n;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    AInv,
    B,
    BInv,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        match self {
            Letter::A => Letter::AInv,
            Letter::AInv => Letter::A,
            Letter::B => Letter::BInv,
            Letter::BInv => Letter::B,
        }
    }

    fn with_sign(base: Letter, positive: bool) -> Letter {
        if positive {
            base
        } else {
            base.inverse()
        }
    }
}

/// A freely reduced word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeWord(Vec<Letter>);

impl FreeWord {
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord(out)
    }

    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    pub fn a() -> Self {
        FreeWord(vec![Letter::A])
    }

    pub fn b() -> Self {
        FreeWord(vec![Letter::B])
    }

    /// Parses words such as `"ab^-1a^-1b"`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a word in a, b: {s:?}"));
        let mut letters = Vec::new();
        let mut rest = s.trim();
        while let Some(c) = rest.chars().next() {
            let base = match c {
                'a' => Letter::A,
                'b' => Letter::B,
                ' ' => {
                    rest = &rest[1..];
                    continue;
                }
                _ => return Err(bad()),
            };
            rest = &rest[1..];
            if let Some(tail) = rest.strip_prefix("^-1") {
                letters.push(base.inverse());
                rest = tail;
            } else {
                letters.push(base);
            }
        }
        Ok(Self::new(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &FreeWord) -> Self {
        Self::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::identity(), |acc, _| acc.concat(&base))
    }

    /// Exponent sums in `a` and in `b`.
    pub fn exponent_sums(&self) -> (i64, i64) {
        self.0.iter().fold((0, 0), |(ea, eb), l| match l {
            Letter::A => (ea + 1, eb),
            Letter::AInv => (ea - 1, eb),
            Letter::B => (ea, eb + 1),
            Letter::BInv => (ea, eb - 1),
        })
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            let s = match l {
                Letter::A => "a",
                Letter::AInv => "a^-1",
                Letter::B => "b",
                Letter::BInv => "b^-1",
            };
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl Serialize for FreeWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `a^e1 b^e2 a^e3 ...` of length `p - 1` with `e_i = (-1)^floor(i q / p)`.
pub fn two_bridge_word(p: u64, q: u64) -> Result<FreeWord> {
    if p < 3 || p % 2 == 0 || q == 0 || q >= p || p.gcd(&q) != 1 {
        return Err(Error::InvalidNormalForm { p, q });
    }
    Ok(FreeWord::new((1..p).map(|i| {
        let base = if i % 2 == 1 { Letter::A } else { Letter::B };
        Letter::with_sign(base, (i * q / p) % 2 == 0)
    })))
}

/// The `q` for which the normal-form word of `J(2n,2n)` satisfies
/// `w a = b w` with the matrices of [`numeric_rep`].
pub fn family_normal_form(n: u32) -> (u64, u64) {
    let n = n as u64;
    (4 * n * n - 1, 4 * n * n - 2 * n - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyWords {
    pub w: FreeWord,
    /// `a w^n b^-1 w^-n`.
    pub relator: FreeWord,
    /// `w^n`.
    pub s1: FreeWord,
    /// `(a b^-1)^n`.
    pub s2: FreeWord,
    /// `s1 s2^-1 s1^-1 s2`.
    pub longitude: FreeWord,
}

pub fn family_words(n: u32) -> Result<FamilyWords> {
    check_n(n)?;
    let n = n as i64;
    let ab = FreeWord::new([Letter::A, Letter::BInv]);
    let a_b = FreeWord::new([Letter::AInv, Letter::B]);
    let w = ab.pow(n).concat(&a_b.pow(n));
    let s1 = w.pow(n);
    let s2 = ab.pow(n);
    let relator = FreeWord::a()
        .concat(&s1)
        .concat(&FreeWord::b().inverse())
        .concat(&s1.inverse());
    let longitude = s1.concat(&s2.inverse()).concat(&s1.inverse()).concat(&s2);
    Ok(FamilyWords {
        w,
        relator,
        s1,
        s2,
        longitude,
    })
}

pub type Mat2 = [[Complex64; 2]; 2];

pub fn mat_mul(x: &Mat2, y: &Mat2) -> Mat2 {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    out
}

pub fn mat_inv_sl2(x: &Mat2) -> Mat2 {
    [[x[1][1], -x[0][1]], [-x[1][0], x[0][0]]]
}

pub fn mat_identity() -> Mat2 {
    let (o, z) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
    [[o, z], [z, o]]
}

pub fn trace(x: &Mat2) -> Complex64 {
    x[0][0] + x[1][1]
}

pub fn det(x: &Mat2) -> Complex64 {
    x[0][0] * x[1][1] - x[0][1] * x[1][0]
}

/// Frobenius norm of `x - y`.
pub fn distance(x: &Mat2, y: &Mat2) -> f64 {
    let mut s = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            s += (x[i][j] - y[i][j]).norm_sqr();
        }
    }
    s.sqrt()
}

/// `A = [[mu, 1], [0, 1/mu]]`, `B = [[mu, 0], [2 - r, 1/mu]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericRep {
    pub n: u32,
    pub mu: Complex64,
    pub r: Complex64,
    pub a: Mat2,
    pub b: Mat2,
}

pub fn numeric_rep(n: u32, mu: Complex64, r: Complex64) -> Result<NumericRep> {
    check_n(n)?;
    if mu.norm() == 0.0 {
        return Err(Error::DivisionByZero);
    }
    let (z, one) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
    let mi = one / mu;
    Ok(NumericRep {
        n,
        mu,
        r,
        a: [[mu, one], [z, mi]],
        b: [[mu, z], [Complex64::new(2.0, 0.0) - r, mi]],
    })
}

/// Both solutions of `mu + 1/mu = x`, principal branch first.
pub fn mu_from_x(x: Complex64) -> [Complex64; 2] {
    let s = (x * x - 4.0).sqrt();
    [(x + s) / 2.0, (x - s) / 2.0]
}

pub fn word_eval(rep: &NumericRep, word: &FreeWord) -> Mat2 {
    let (ai, bi) = (mat_inv_sl2(&rep.a), mat_inv_sl2(&rep.b));
    word.letters().iter().fold(mat_identity(), |acc, l| {
        let m = match l {
            Letter::A => &rep.a,
            Letter::AInv => &ai,
            Letter::B => &rep.b,
            Letter::BInv => &bi,
        };
        mat_mul(&acc, m)
    })
}

/// `|A W^n - W^n B|`.
pub fn relator_residual(rep: &NumericRep) -> Result<f64> {
    let words = family_words(rep.n)?;
    let s1 = word_eval(rep, &words.s1);
    Ok(distance(&mat_mul(&rep.a, &s1), &mat_mul(&s1, &rep.b)))
}

/// `|w A - B w|` for the normal-form word of `(p, q)`.
pub fn normal_form_residual(rep: &NumericRep, p: u64, q: u64) -> Result<f64> {
    let w = word_eval(rep, &two_bridge_word(p, q)?);
    Ok(distance(&mat_mul(&w, &rep.a), &mat_mul(&rep.b, &w)))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RepSummary {
    pub mu: String,
    pub r: String,
    pub relator_residual: f64,
    pub normal_form_residual: f64,
    pub tr_s1: String,
    pub tr_s2: String,
    pub tr_longitude: String,
}

/// Residuals and traces at a numeric point.
pub fn summarize(rep: &NumericRep) -> Result<RepSummary> {
    let words = family_words(rep.n)?;
    let (p, q) = family_normal_form(rep.n);
    let fmt = crate::numeric::format_complex;
    Ok(RepSummary {
        mu: fmt(rep.mu),
        r: fmt(rep.r),
        relator_residual: relator_residual(rep)?,
        normal_form_residual: normal_form_residual(rep, p, q)?,
        tr_s1: fmt(trace(&word_eval(rep, &words.s1))),
        tr_s2: fmt(trace(&word_eval(rep, &words.s2))),
        tr_longitude: fmt(trace(&word_eval(rep, &words.longitude))),
    })
}

/// The representation at root `root` of locus `locus` of `G_n`, with
/// `mu` on branch `branch` (0 principal, 1 its inverse).
pub fn locus_rep(n: u32, locus: usize, root: usize, branch: usize) -> Result<NumericRep> {
    let loci = intersection_loci(n)?;
    let l = loci.get(locus).ok_or(Error::IndexOutOfRange {
        what: "locus",
        index: locus,
        len: loci.len(),
    })?;
    let roots = l.r_roots();
    let rho = *roots.get(root).ok_or(Error::IndexOutOfRange {
        what: "root",
        index: root,
        len: roots.len(),
    })?;
    let x = x_squared_at(l)?.embed(rho).sqrt();
    let mu = *mu_from_x(x).get(branch).ok_or(Error::IndexOutOfRange {
        what: "branch",
        index: branch,
        len: 2,
    })?;
    numeric_rep(n, mu, rho)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn normal_form_words() {
        assert_eq!(two_bridge_word(3, 1).unwrap().to_string(), "ab");
        assert_eq!(two_bridge_word(5, 3).unwrap().to_string(), "ab^-1a^-1b");
        let w = two_bridge_word(15, 11).unwrap();
        assert_eq!(w.len(), 14);
        let signs: Vec<bool> = w
            .letters()
            .iter()
            .map(|l| matches!(l, Letter::A | Letter::B))
            .collect();
        let expect: Vec<bool> = (1..15u64).map(|i| (11 * i / 15) % 2 == 0).collect();
        assert_eq!(signs, expect);
        assert!(two_bridge_word(4, 1).is_err());
        assert!(two_bridge_word(9, 3).is_err());
        assert!(two_bridge_word(7, 7).is_err());
    }

    #[test]
    fn family_word_shapes() {
        let f2 = family_words(2).unwrap();
        assert_eq!(f2.w, FreeWord::parse("ab^-1ab^-1a^-1ba^-1b").unwrap());
        assert_eq!(f2.w.len(), 8);
        let f3 = family_words(3).unwrap();
        assert_eq!(f3.w, FreeWord::parse("ab^-1ab^-1ab^-1a^-1ba^-1ba^-1b").unwrap());
        for n in 2..6 {
            assert_eq!(family_words(n).unwrap().longitude.exponent_sums(), (0, 0));
        }
    }

    #[test]
    fn reduction_and_parse() {
        let w = FreeWord::parse("ab b^-1 a^-1 b").unwrap();
        assert_eq!(w, FreeWord::b());
        assert_eq!(w.pow(-2).to_string(), "b^-1b^-1");
        assert_eq!(FreeWord::a().concat(&FreeWord::a().inverse()), FreeWord::identity());
        assert!(FreeWord::parse("abc").is_err());
    }

    /// The point with `r = 1 - i` and
    /// `mu = (sqrt(-1 - 3i/2) + sqrt(3 - 3i/2)) / 2`.
    fn printed_point() -> NumericRep {
        let mu = ((c(-1.0, -1.5)).sqrt() + c(3.0, -1.5).sqrt()) / 2.0;
        numeric_rep(2, mu, c(1.0, -1.0)).unwrap()
    }

    #[test]
    fn printed_point_checks() {
        let rep = printed_point();
        assert!((det(&rep.a) - 1.0).norm() < 1e-12 && (det(&rep.b) - 1.0).norm() < 1e-12);
        assert!(relator_residual(&rep).unwrap() < 1e-9);
        let lon = trace(&word_eval(&rep, &family_words(2).unwrap().longitude));
        assert!((lon - c(14.0, 24.0)).norm() < 1e-9, "{lon}");
        assert!(normal_form_residual(&rep, 15, 11).unwrap() < 1e-9);
    }

    #[test]
    fn both_branches_satisfy_relator() {
        let x = c(3.0, -1.5).sqrt();
        for mu in mu_from_x(x) {
            let rep = numeric_rep(2, mu, c(1.0, -1.0)).unwrap();
            assert!(relator_residual(&rep).unwrap() < 1e-9);
        }
    }

    #[test]
    fn locus_points() {
        for n in 2..6u32 {
            let loci = intersection_loci(n).unwrap();
            for (li, l) in loci.iter().enumerate() {
                for root in 0..l.field.degree() {
                    for branch in 0..2 {
                        let rep = locus_rep(n, li, root, branch).unwrap();
                        assert!(relator_residual(&rep).unwrap() < 1e-9);
                        let (p, q) = family_normal_form(n);
                        assert!(normal_form_residual(&rep, p, q).unwrap() < 1e-9);
                    }
                }
            }
        }
        assert!(matches!(locus_rep(2, 0, 5, 0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn reducible_points() {
        for n in 2..6u32 {
            let x2 = (4.0 * (n * n) as f64 - 1.0) / (n * n) as f64;
            for mu in mu_from_x(c(x2.sqrt(), 0.0)) {
                let rep = numeric_rep(n, mu, c(2.0, 0.0)).unwrap();
                assert!(relator_residual(&rep).unwrap() < 1e-9);
            }
        }
    }
}
