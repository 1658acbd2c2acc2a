//! Integer lattices given by generating rows: Hermite normal form and index.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// Returns only the nonzero rows. Pivots are positive and strictly move to the
/// right; entries above a pivot are reduced into `[0, pivot)`.
pub fn hermite_normal_form(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut pivot_row = 0usize;
    for col in 0..ncols {
        if pivot_row == m.len() {
            break;
        }
        // gcd-combine every row below into the pivot row
        for r in pivot_row + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let a = m[pivot_row][col].clone();
            let b = m[r][col].clone();
            let e = a.extended_gcd(&b);
            let (x, y) = (e.x, e.y);
            let (ua, ub) = (&a / &e.gcd, &b / &e.gcd);
            // [x y; -ub ua] is unimodular
            for c in col..ncols {
                let p = &m[pivot_row][c];
                let q = &m[r][c];
                let new_p = &x * p + &y * q;
                let new_q = &ua * q - &ub * p;
                m[pivot_row][c] = new_p;
                m[r][c] = new_q;
            }
        }
        if m[pivot_row][col].is_zero() {
            continue;
        }
        if m[pivot_row][col].is_negative() {
            for c in col..ncols {
                m[pivot_row][c] = -&m[pivot_row][c];
            }
        }
        let piv = m[pivot_row][col].clone();
        for r in 0..pivot_row {
            let q = m[r][col].div_floor(&piv);
            if q.is_zero() {
                continue;
            }
            for c in col..ncols {
                let t = &q * &m[pivot_row][c];
                m[r][c] -= t;
            }
        }
        pivot_row += 1;
    }
    m.truncate(pivot_row);
    m.retain(|r| r.iter().any(|x| !x.is_zero()));
    m
}

/// Index `[Z^dim : L]` of the lattice spanned by `rows` in `Z^dim`, or `None`
/// when the lattice is not of full rank.
pub fn index_in_integer_lattice(rows: &[Vec<BigInt>], dim: usize) -> Option<BigInt> {
    if dim == 0 {
        return Some(BigInt::one());
    }
    let h = hermite_normal_form(rows);
    if h.len() != dim {
        return None;
    }
    Some(
        h.iter()
            .enumerate()
            .fold(BigInt::one(), |acc, (i, row)| acc * &row[i]),
    )
}
