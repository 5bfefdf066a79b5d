use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fsignature::{fsignature, nef_extension};
use crate::geometry::rational::{factorial, int, pow};
use crate::geometry::Rational;
use crate::toric::{
    class_coordinates, is_ample, is_big, is_nef, norm_sup, volume_of_divisor, Fan, NSBasis,
    TDivisor,
};

/// A rectangular sample of class coordinates with respect to `basis`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub basis: NSBasis,
    pub ranges: Vec<(Rational, Rational)>,
    pub step: Rational,
}

impl GridSpec {
    pub fn new(basis: NSBasis, ranges: Vec<(Rational, Rational)>, step: Rational) -> Result<Self> {
        if !step.is_positive() {
            return Err(Error::Parse("grid step must be positive".into()));
        }
        if ranges.len() != basis.rank() {
            return Err(Error::Parse(format!(
                "expected {} coordinate ranges, got {}",
                basis.rank(),
                ranges.len()
            )));
        }
        Ok(Self { basis, ranges, step })
    }

    /// Grid coordinates in lexicographic order; empty if any range is empty.
    pub fn points(&self) -> Vec<Vec<Rational>> {
        let axes: Vec<Vec<Rational>> = self
            .ranges
            .iter()
            .map(|(lo, hi)| {
                let mut axis = Vec::new();
                let mut x = lo.clone();
                while x <= *hi {
                    axis.push(x.clone());
                    x += &self.step;
                }
                axis
            })
            .collect();
        cartesian(&axes)
    }
}

/// Lexicographic product of the axes.
pub fn cartesian(axes: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = vec![Vec::new()];
    for axis in axes {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                axis.iter().map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x.clone());
                    p
                })
            })
            .collect();
    }
    out
}

/// Integer points `lo..=hi` on every axis.
pub fn integer_grid(dims: usize, lo: i64, hi: i64) -> Vec<Vec<Rational>> {
    let axis: Vec<Rational> = (lo..=hi).map(int).collect();
    cartesian(&vec![axis; dims])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PointKind {
    Ample,
    /// Nef and big but not ample.
    NefBoundary,
    NefNotBig,
    Zero,
    NotNef,
}

impl PointKind {
    pub fn label(self) -> &'static str {
        match self {
            PointKind::Ample => "ample",
            PointKind::NefBoundary => "nef_big",
            PointKind::NefNotBig => "nef_not_big",
            PointKind::Zero => "zero",
            PointKind::NotNef => "not_nef",
        }
    }
}

pub fn classify(fan: &Fan, d: &TDivisor) -> Result<PointKind> {
    Ok(if d.is_zero() {
        PointKind::Zero
    } else if is_ample(fan, d)? {
        PointKind::Ample
    } else if !is_nef(fan, d)? {
        PointKind::NotNef
    } else if is_big(fan, d)? {
        PointKind::NefBoundary
    } else {
        PointKind::NefNotBig
    })
}

/// `(d^2 + 2d)^(d+1) vol(L) / (floor(|L|)^(d+1) (d+1)!)`, or `None` when
/// `floor(|L|) = 0`.
pub fn local_upper_bound(dim: usize, vol: &Rational, norm: &Rational) -> Option<Rational> {
    let floor = norm.floor();
    if floor.is_zero() {
        return None;
    }
    let d = dim as i64;
    let e = dim as u32 + 1;
    let constant = pow(&int(d * d + 2 * d), e);
    Some(constant * vol / (pow(&floor, e) * Rational::from_integer(factorial(e))))
}

/// `s · |L|^(d+1) / vol`.
pub fn volume_ratio(dim: usize, s: &Rational, vol: &Rational, norm: &Rational) -> Rational {
    s * pow(norm, dim as u32 + 1) / vol
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridRow {
    pub coords: Vec<Rational>,
    pub kind: PointKind,
    /// Sup-norm in the norm basis.
    pub norm: Rational,
    /// F-signature on ample points, its continuous extension on nef ones.
    pub s: Rational,
    pub vol: Rational,
    /// The local upper bound, when the point lies in the norm basis cone
    /// with `floor(|L|) >= 1`.
    pub bound: Option<Rational>,
    /// `s |L|^(d+1) / vol` on ample points.
    pub ratio: Option<Rational>,
}

/// Evaluates every grid point in parallel; rows keep grid order.
pub fn evaluate_grid(fan: &Fan, grid: &GridSpec, norm_basis: &NSBasis) -> Result<Vec<GridRow>> {
    grid.points()
        .into_par_iter()
        .map(|coords| evaluate_point(fan, &grid.basis, norm_basis, coords))
        .collect()
}

pub fn evaluate_point(
    fan: &Fan,
    basis: &NSBasis,
    norm_basis: &NSBasis,
    coords: Vec<Rational>,
) -> Result<GridRow> {
    let d = basis.combine(&coords);
    let kind = classify(fan, &d)?;
    let s = match kind {
        PointKind::Ample => fsignature(fan, &d)?,
        PointKind::NefBoundary => nef_extension(fan, &d)?,
        PointKind::NefNotBig | PointKind::Zero => Rational::zero(),
        PointKind::NotNef => {
            return Err(Error::Precondition(format!(
                "grid point {} is outside the nef cone",
                super::report::witness(&coords)
            )))
        }
    };
    let vol = volume_of_divisor(fan, &d)?;
    let norm_coords = class_coordinates(fan, &d, norm_basis)?;
    let norm = norm_sup(&norm_coords);
    let in_cone = norm_coords.iter().all(|x| !x.is_negative());
    let bound = if in_cone && kind != PointKind::Zero {
        local_upper_bound(fan.dim, &vol, &norm)
    } else {
        None
    };
    let ratio = (kind == PointKind::Ample).then(|| volume_ratio(fan.dim, &s, &vol, &norm));
    Ok(GridRow {
        coords,
        kind,
        norm,
        s,
        vol,
        bound,
        ratio,
    })
}
