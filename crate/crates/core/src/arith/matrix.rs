//! Square rational matrices and their characteristic polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    size: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    /// Row-major entries; panics unless `rows` is square and nonempty.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let size = rows.len();
        assert!(size > 0 && rows.iter().all(|r| r.len() == size), "matrix must be square");
        Self {
            size,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn zeros(size: usize) -> Self {
        Self {
            size,
            entries: vec![BigRational::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Companion matrix of a monic polynomial (subdiagonal of ones, last
    /// column the negated coefficients).
    pub fn companion(p: &UniPoly) -> Self {
        assert!(p.is_monic() && p.degree() > Some(0), "companion needs monic nonconstant");
        let k = p.degree().unwrap();
        let mut m = Self::zeros(k);
        for i in 1..k {
            m.set(i, i - 1, BigRational::one());
        }
        for i in 0..k {
            m.set(i, k - 1, -p.coeff(i));
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.size + j] = v;
    }

    pub fn mul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.size, rhs.size);
        let n = self.size;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigRational::zero();
                for k in 0..n {
                    acc += self.get(i, k) * rhs.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn add_scaled_identity(&self, c: &BigRational) -> RatMatrix {
        let mut out = self.clone();
        for i in 0..self.size {
            let v = out.get(i, i) + c;
            out.set(i, i, v);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_poly(&self, p: &UniPoly) -> RatMatrix {
        let mut acc = Self::zeros(self.size);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add_scaled_identity(c);
        }
        acc
    }

    /// Monic `det(u*I - M)`.
    ///
    /// Entries are scaled to integers by a common denominator `D` and the
    /// division-free Berkowitz recurrence is run over the integers; the
    /// coefficient of `u^i` is then `c_i * D^(i - k)`.
    pub fn char_poly(&self, var: &str) -> UniPoly {
        let den = super::denominator_lcm(&self.entries);
        let ints: Vec<BigInt> = self
            .entries
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let desc = berkowitz(&ints, self.size);
        let k = self.size;
        let mut coeffs = Vec::with_capacity(k + 1);
        for i in 0..=k {
            // desc[k - i] is the coefficient of u^i
            let c = BigRational::new(desc[k - i].clone(), num_traits::pow(den.clone(), k - i));
            coeffs.push(c);
        }
        UniPoly::new(var, coeffs)
    }
}

/// Characteristic polynomial coefficients of an integer matrix, highest
/// degree first (leading entry 1).
fn berkowitz(m: &[BigInt], n: usize) -> Vec<BigInt> {
    let at = |i: usize, j: usize| &m[i * n + j];
    // Process trailing principal submatrices from size 1 up to n.
    let mut vect: Vec<BigInt> = vec![BigInt::one(), -at(n - 1, n - 1).clone()];
    for start in (0..n - 1).rev() {
        let size = n - start;
        let a = at(start, start).clone();
        let row: Vec<BigInt> = (start + 1..n).map(|j| at(start, j).clone()).collect();
        let col: Vec<BigInt> = (start + 1..n).map(|i| at(i, start).clone()).collect();
        // diags = [1, -a, -R C, -R A C, -R A^2 C, ...] of length size + 1
        let mut diags = vec![BigInt::one(), -a];
        let mut v = col;
        for step in 0..size - 1 {
            let rv: BigInt = row.iter().zip(&v).map(|(x, y)| x * y).sum();
            diags.push(-rv);
            if step + 1 < size - 1 {
                v = (0..size - 1)
                    .map(|i| {
                        (0..size - 1)
                            .map(|j| at(start + 1 + i, start + 1 + j) * &v[j])
                            .sum()
                    })
                    .collect();
            }
        }
        // Toeplitz (size+1) x size lower-triangular times vect (length size).
        vect = (0..=size)
            .map(|i| {
                (0..size)
                    .filter(|&j| j <= i)
                    .map(|j| &diags[i - j] * &vect[j])
                    .sum()
            })
            .collect();
    }
    vect
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn identity_and_rotation() {
        assert_eq!(RatMatrix::identity(2).char_poly("u"), UniPoly::from_ints("u", &[1, -2, 1]));
        assert_eq!(
            RatMatrix::from_int_rows(&[&[0, -1], &[1, 0]]).char_poly("u"),
            UniPoly::from_ints("u", &[1, 0, 1])
        );
    }

    #[test]
    fn companion_identity() {
        let p = UniPoly::from_ints("u", &[3, 0, 0, -2, 1]);
        assert_eq!(RatMatrix::companion(&p).char_poly("u"), p);
    }

    #[test]
    fn rational_entries() {
        // [[1/2, 1], [1/3, 0]]: u^2 - u/2 - 1/3
        let m = RatMatrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 1)],
            vec![rat(1, 3), rat(0, 1)],
        ]);
        assert_eq!(
            m.char_poly("u"),
            UniPoly::new("u", vec![rat(-1, 3), rat(-1, 2), rat(1, 1)])
        );
    }

    #[test]
    fn three_by_three_trace_and_det() {
        let m = RatMatrix::from_int_rows(&[&[2, 1, 0], &[0, 3, 4], &[5, 0, 1]]);
        let cp = m.char_poly("u");
        // trace 6, det = 2*3 - 1*(0 - 20) = 26
        assert_eq!(cp.coeff(2), rat(-6, 1));
        assert_eq!(cp.coeff(0), rat(-26, 1));
        assert!(m.eval_poly(&cp).is_zero());
    }
}
