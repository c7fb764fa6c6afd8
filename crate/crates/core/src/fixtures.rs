//! Printed component data for J(4,4) and J(6,6): the two factors of the
//! X-model polynomial, the meridian and r-coordinate polynomials of the
//! intersection points, the longitude-trace polynomial, and the Bezout
//! count of the two components.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::arith::{BiPoly, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bezout {
    pub total: u64,
    pub affine: u64,
    pub ideal: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GoldenFixture {
    pub n: u32,
    /// Component through the intersection points of lower degree, in `(r, x)`.
    pub x0: BiPoly,
    pub x1: BiPoly,
    pub x_min_poly: UniPoly,
    pub r_poly: UniPoly,
    pub longitude_min_poly: UniPoly,
    pub bezout: Bezout,
}

/// Rows of `(power of x, coefficients in r from degree 0)`.
fn rx(rows: &[(u32, &[i64])]) -> BiPoly {
    let terms: Vec<(i64, u32, u32)> = rows
        .iter()
        .flat_map(|&(j, cs)| cs.iter().enumerate().map(move |(i, &c)| (c, i as u32, j)))
        .collect();
    BiPoly::from_int_terms("r", "x", &terms)
}

pub fn golden(n: u32) -> Option<GoldenFixture> {
    match n {
        2 => Some(GoldenFixture {
            n: 2,
            x0: rx(&[(0, &[-1, 0, 2, 1]), (2, &[0, 0, -1])]),
            x1: rx(&[(0, &[1, 4, -4, -1, 1]), (2, &[0, -2, 3, -1])]),
            x_min_poly: UniPoly::from_ints("x", &[45, 0, -24, 0, 4]),
            r_poly: UniPoly::from_ints("r", &[2, -2, 1]),
            longitude_min_poly: UniPoly::from_ints("l", &[772, -28, 1]),
            bezout: Bezout {
                total: 20,
                affine: 4,
                ideal: 16,
            },
        }),
        3 => Some(GoldenFixture {
            n: 3,
            x0: rx(&[(0, &[1, 1, -4, -2, 2, 1]), (2, &[-1, 0, 2, 0, -1])]),
            x1: rx(&[
                (0, &[1, 8, -40, -46, 110, 71, -113, -43, 54, 11, -12, -1, 1]),
                (2, &[-8, -8, 60, 21, -130, -7, 118, -16, -46, 12, 6, -2]),
                (4, &[4, 0, -19, 5, 32, -15, -22, 15, 4, -5, 1]),
            ]),
            x_min_poly: UniPoly::from_ints("x", &[6125, 0, -8400, 0, 5160, 0, -1424, 0, 144]),
            r_poly: UniPoly::from_ints("r", &[3, 0, 0, -2, 1]),
            longitude_min_poly: UniPoly::from_ints("l", &[8647328, -385360, 15768, -212, 1]),
            bezout: Bezout {
                total: 84,
                affine: 8,
                ideal: 76,
            },
        }),
        _ => None,
    }
}

pub fn builtin() -> Vec<GoldenFixture> {
    [2, 3].into_iter().filter_map(golden).collect()
}

pub fn to_json(fixtures: &[GoldenFixture]) -> String {
    serde_json::to_string_pretty(fixtures).expect("fixtures serialize")
}

pub fn from_json(text: &str) -> Result<Vec<GoldenFixture>> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("fixture file: {e}")))
}

pub fn load(path: &Path) -> Result<Vec<GoldenFixture>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    from_json(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_match_bezout_totals() {
        for f in builtin() {
            let d0 = f.x0.total_degree().unwrap() as u64;
            let d1 = f.x1.total_degree().unwrap() as u64;
            assert_eq!(d0 * d1, f.bezout.total);
            assert_eq!(f.bezout.affine + f.bezout.ideal, f.bezout.total);
        }
    }

    #[test]
    fn json_round_trip() {
        let all = builtin();
        let back = from_json(&to_json(&all)).unwrap();
        assert_eq!(back, all);
        assert!(from_json("[{\"n\": 2}]").is_err());
    }
}
