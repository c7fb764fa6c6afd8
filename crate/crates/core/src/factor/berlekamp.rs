//! Berlekamp factorization of squarefree polynomials over `F_p`.

use crate::arith::modp::{ModPoly, PrimeField};

/// Null space basis of a `rows x cols` matrix over `F_p`.
fn null_space(field: &PrimeField, mut m: Vec<Vec<u64>>, cols: usize) -> Vec<Vec<u64>> {
    let rows = m.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = field.inv(m[r][c]);
        for v in m[r].iter_mut() {
            *v = field.mul(*v, inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    let sub = field.mul(f, m[r][j]);
                    m[i][j] = field.sub(m[i][j], sub);
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; cols];
            v[fc] = 1;
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = field.sub(0, m[row][fc]);
            }
            v
        })
        .collect()
}

/// Monic irreducible factors of a monic squarefree `f` over `F_p`.
pub fn berlekamp(field: &PrimeField, f: &[u64]) -> Vec<ModPoly> {
    let d = f.len() - 1;
    if d <= 1 {
        return vec![f.to_vec()];
    }
    let p = field.p;
    // Row i holds x^(i p) mod f.
    let xp = field.pow_mod(&[0, 1], p, f);
    let mut rows: Vec<ModPoly> = Vec::with_capacity(d);
    let mut cur: ModPoly = vec![1];
    for _ in 0..d {
        rows.push(cur.clone());
        cur = field.rem(&field.poly_mul(&cur, &xp), f);
    }
    // (Q - I)^T
    let mut m = vec![vec![0u64; d]; d];
    for (i, row) in rows.iter().enumerate() {
        for j in 0..d {
            let q = *row.get(j).unwrap_or(&0);
            m[j][i] = if i == j { field.sub(q, 1) } else { q };
        }
    }
    let basis = null_space(field, m, d);
    let target = basis.len();
    let mut factors = vec![f.to_vec()];
    if target == 1 {
        return factors;
    }
    for v in &basis {
        let mut v = v.clone();
        crate::arith::modp::trim(&mut v);
        if v.len() <= 1 {
            continue;
        }
        let mut next = Vec::new();
        for g in factors {
            let mut rest = g;
            for s in 0..p {
                if rest.len() <= 2 {
                    break;
                }
                let shifted = field.poly_sub(&v, &[s]);
                let h = field.gcd(&rest, &shifted);
                if h.len() > 1 && h.len() < rest.len() {
                    rest = field.div_rem(&rest, &h).0;
                    next.push(h);
                }
            }
            next.push(rest);
        }
        factors = next;
        if factors.len() == target {
            break;
        }
    }
    factors.sort();
    factors
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_x_to_the_p_minus_x() {
        let field = PrimeField::new(5);
        // x^5 - x = x (x-1)(x-2)(x-3)(x-4)
        let f = vec![0, 4, 0, 0, 0, 1];
        let factors = berlekamp(&field, &f);
        assert_eq!(factors.len(), 5);
        assert!(factors.iter().all(|g| g.len() == 2));
    }

    #[test]
    fn irreducible_stays_whole() {
        let field = PrimeField::new(3);
        // x^2 + 1 is irreducible mod 3
        assert_eq!(berlekamp(&field, &[1, 0, 1]), vec![vec![1, 0, 1]]);
    }

    #[test]
    fn mixed_degrees_mod_two() {
        let field = PrimeField::new(2);
        // (x^2 + x + 1)(x^3 + x + 1)(x + 1)
        let f = field.poly_mul(&field.poly_mul(&[1, 1, 1], &[1, 1, 0, 1]), &[1, 1]);
        let mut got = berlekamp(&field, &f);
        got.sort_by_key(|g| g.len());
        assert_eq!(got, vec![vec![1, 1], vec![1, 1, 1], vec![1, 1, 0, 1]]);
    }
}
