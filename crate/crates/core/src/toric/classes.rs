//! Classes modulo linear equivalence and sup-norm coordinates.

use num_traits::{Signed, Zero};

use super::divisor::{is_ample, is_globally_generated, TDivisor};
use super::fan::Fan;
use crate::error::{Error, Result};
use crate::geometry::linalg::{self, Vector};
use crate::geometry::Rational;

/// A basis of `N^1 = Q^rays / M_Q` with per-class positivity flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NSBasis {
    pub classes: Vec<TDivisor>,
    pub ample: Vec<bool>,
    pub globally_generated: Vec<bool>,
}

impl NSBasis {
    pub fn new(fan: &Fan, classes: Vec<TDivisor>) -> Result<Self> {
        let expected = fan.num_rays() - fan.dim;
        if classes.len() != expected {
            return Err(Error::DeficientBasis(format!(
                "{} classes given, the class group has rank {expected}",
                classes.len()
            )));
        }
        if linalg::rank(&relation_rows(fan, &classes)?, fan.num_rays()) != fan.num_rays() {
            return Err(Error::DeficientBasis("classes are linearly dependent".into()));
        }
        let ample = classes
            .iter()
            .map(|c| is_ample(fan, c))
            .collect::<Result<_>>()?;
        let globally_generated = classes
            .iter()
            .map(|c| is_globally_generated(fan, c))
            .collect::<Result<_>>()?;
        Ok(Self {
            classes,
            ample,
            globally_generated,
        })
    }

    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    pub fn all_ample_and_globally_generated(&self) -> bool {
        self.ample.iter().all(|&a| a) && self.globally_generated.iter().all(|&g| g)
    }

    /// `sum x_j B_j`.
    pub fn combine(&self, coords: &[Rational]) -> TDivisor {
        let n = self.classes[0].len();
        let mut out = TDivisor::zero(n);
        for (x, b) in coords.iter().zip(&self.classes) {
            if !x.is_zero() {
                out = &out + &b.scale(x);
            }
        }
        out
    }
}

/// Columns `B_1, …, B_r, m_1, …, m_d` laid out as rows (one row per column).
fn relation_rows(fan: &Fan, classes: &[TDivisor]) -> Result<Vec<Vector>> {
    let mut rows = Vec::with_capacity(classes.len() + fan.dim);
    for c in classes {
        if c.len() != fan.num_rays() {
            return Err(Error::DimensionMismatch {
                expected: fan.num_rays(),
                found: c.len(),
            });
        }
        rows.push(c.coeffs.clone());
    }
    for i in 0..fan.dim {
        rows.push((0..fan.num_rays()).map(|r| fan.ray(r)[i].clone()).collect());
    }
    Ok(rows)
}

/// Coordinates `x` with `sum x_j B_j ≡ D` modulo principal divisors.
pub fn class_coordinates(fan: &Fan, d: &TDivisor, basis: &NSBasis) -> Result<Vector> {
    let columns = relation_rows(fan, &basis.classes)?;
    if d.len() != fan.num_rays() {
        return Err(Error::DimensionMismatch {
            expected: fan.num_rays(),
            found: d.len(),
        });
    }
    let equations: Vec<(Vector, Rational)> = (0..fan.num_rays())
        .map(|r| (columns.iter().map(|c| c[r].clone()).collect(), d.coeffs[r].clone()))
        .collect();
    let solution = linalg::solve_affine(&equations)
        .ok_or_else(|| Error::DeficientBasis("divisor is not in the span of the basis".into()))?;
    Ok(solution[..basis.rank()].to_vec())
}

pub fn norm_sup(coords: &[Rational]) -> Rational {
    coords
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(Rational::zero)
}

/// Whether two divisors are linearly equivalent.
pub fn linearly_equivalent(fan: &Fan, a: &TDivisor, b: &TDivisor) -> Result<bool> {
    let diff = a - b;
    let rows: Vec<Vector> = (0..fan.num_rays()).map(|r| fan.ray(r)).collect();
    let equations: Vec<(Vector, Rational)> = rows.into_iter().zip(diff.coeffs).collect();
    Ok(linalg::solve_affine(&equations).is_some_and(|u| u.iter().all(Rational::is_integer)))
}
