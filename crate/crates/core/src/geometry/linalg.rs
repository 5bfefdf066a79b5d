//! Dense exact linear algebra over the rationals.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

pub type Vector = Vec<Rational>;
pub type Matrix = Vec<Vec<Rational>>;

/// Divides a nonzero integer vector by the gcd of its entries.
pub fn primitive(v: &[i64]) -> Result<Vec<i64>> {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g == 0 {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|&x| x / g).collect())
}

pub fn is_primitive(v: &[i64]) -> bool {
    v.iter().fold(0i64, |acc, &x| acc.gcd(&x)) == 1
}

pub fn to_rational_vec(v: &[i64]) -> Vector {
    v.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..m[r].len() {
                    let delta = &factor * &m[row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(rows: &[Vector], cols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, cols).len()
}

/// The unique solution of `normal · x = rhs` over all listed equalities, or
/// `None` when the system is singular or inconsistent.
pub fn solve_affine(equalities: &[(Vector, Rational)]) -> Option<Vector> {
    let dim = equalities.first()?.0.len();
    let mut m: Matrix = equalities
        .iter()
        .map(|(normal, rhs)| {
            debug_assert_eq!(normal.len(), dim);
            let mut row = normal.clone();
            row.push(rhs.clone());
            row
        })
        .collect();
    let pivots = rref(&mut m, dim + 1);
    if pivots.len() != dim || pivots.contains(&dim) {
        return None;
    }
    Some((0..dim).map(|i| m[i][dim].clone()).collect())
}

/// Basis of `{x : row · x = 0 for every row}`.
pub fn nullspace(rows: &[Vector], cols: usize) -> Vec<Vector> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

pub fn determinant(mut m: Matrix) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= &m[col][col];
        let inv = m[col][col].recip();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// Dimension of the affine hull of a point set (`None` for the empty set).
pub fn affine_dimension(points: &[Vector]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let diffs: Matrix = rest
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    Some(rank(&diffs, first.len()))
}

/// `|det(v1 - v0, …, vn - v0)| / n!` for `n + 1` points in dimension `n`.
pub fn simplex_volume(vertices: &[&Vector]) -> Rational {
    let (apex, rest) = vertices.split_first().expect("simplex has vertices");
    let m: Matrix = rest
        .iter()
        .map(|p| p.iter().zip(apex.iter()).map(|(a, b)| a - b).collect())
        .collect();
    let n = m.len() as u32;
    determinant(m).abs() / Rational::from_integer(super::rational::factorial(n))
}
