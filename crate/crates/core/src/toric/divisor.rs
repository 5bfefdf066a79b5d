use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::fan::Fan;
use crate::error::{Error, Result};
use crate::geometry::linalg::{self, Vector};
use crate::geometry::rational::{common_denominator, factorial};
use crate::geometry::{AffineForm, HPolytope, Rational};

/// A torus-invariant Q-divisor `sum c_rho D_rho`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TDivisor {
    pub coeffs: Vec<Rational>,
}

impl TDivisor {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(linalg::to_rational_vec(coeffs))
    }

    pub fn zero(num_rays: usize) -> Self {
        Self::new(vec![Rational::zero(); num_rays])
    }

    /// The principal divisor `div(chi^u) = sum <u, v_rho> D_rho`.
    pub fn principal(fan: &Fan, u: &[i64]) -> Self {
        let u = linalg::to_rational_vec(u);
        Self::new((0..fan.num_rays()).map(|i| linalg::dot(&u, &fan.ray(i))).collect())
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    /// Least common denominator of the coefficients.
    pub fn denominator(&self) -> BigInt {
        common_denominator(self.coeffs.iter())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    fn check(&self, fan: &Fan) -> Result<()> {
        if self.len() != fan.num_rays() {
            return Err(Error::DimensionMismatch {
                expected: fan.num_rays(),
                found: self.len(),
            });
        }
        Ok(())
    }
}

impl Add for &TDivisor {
    type Output = TDivisor;
    fn add(self, rhs: &TDivisor) -> TDivisor {
        TDivisor::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &TDivisor {
    type Output = TDivisor;
    fn sub(self, rhs: &TDivisor) -> TDivisor {
        TDivisor::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect())
    }
}

/// `P_D = {x : <x, v_rho> + c_rho >= 0}`, one form per ray.
pub fn divisor_polytope(fan: &Fan, d: &TDivisor) -> Result<HPolytope> {
    d.check(fan)?;
    let forms = fan
        .rays
        .iter()
        .zip(&d.coeffs)
        .map(|(ray, c)| AffineForm::new(ray.clone(), c.clone()))
        .collect::<Result<_>>()?;
    HPolytope::new(fan.dim, forms)
}

/// The local data `u_sigma` with `<u_sigma, v_rho> = -c_rho` on every ray of
/// each maximal cone.
pub fn cartier_data(fan: &Fan, d: &TDivisor) -> Result<Vec<Vector>> {
    d.check(fan)?;
    fan.max_cones
        .iter()
        .map(|cone| {
            let system: Vec<(Vector, Rational)> = cone
                .iter()
                .map(|&i| (fan.ray(i), -d.coeffs[i].clone()))
                .collect();
            linalg::solve_affine(&system).ok_or(Error::NotCartier)
        })
        .collect()
}

/// Values `<u_sigma, v_rho> + c_rho` for every maximal cone and ray.
fn support_slack(fan: &Fan, d: &TDivisor) -> Result<Vec<Vec<Rational>>> {
    let data = cartier_data(fan, d)?;
    Ok(data
        .iter()
        .map(|u| {
            (0..fan.num_rays())
                .map(|i| linalg::dot(u, &fan.ray(i)) + &d.coeffs[i])
                .collect()
        })
        .collect())
}

pub fn is_nef(fan: &Fan, d: &TDivisor) -> Result<bool> {
    Ok(support_slack(fan, d)?
        .iter()
        .all(|row| row.iter().all(|s| !s.is_negative())))
}

pub fn is_ample(fan: &Fan, d: &TDivisor) -> Result<bool> {
    let slack = support_slack(fan, d)?;
    Ok(fan.max_cones.iter().zip(&slack).all(|(cone, row)| {
        row.iter()
            .enumerate()
            .all(|(i, s)| if cone.contains(&i) { s.is_zero() } else { s.is_positive() })
    }))
}

/// Global generation coincides with nefness on complete toric varieties.
pub fn is_globally_generated(fan: &Fan, d: &TDivisor) -> Result<bool> {
    is_nef(fan, d)
}

pub fn is_big(fan: &Fan, d: &TDivisor) -> Result<bool> {
    divisor_polytope(fan, d)?.is_full_dimensional()
}

/// An integral divisor is effective up to linear equivalence iff its
/// polytope has a lattice point.
pub fn is_effective(fan: &Fan, d: &TDivisor) -> Result<bool> {
    if !d.is_integral() {
        return Err(Error::NotIntegral(format_divisor(d)));
    }
    Ok(divisor_polytope(fan, d)?.count_lattice_points()? > 0)
}

/// `d! · vol(P_D)`.
pub fn volume_of_divisor(fan: &Fan, d: &TDivisor) -> Result<Rational> {
    let vol = divisor_polytope(fan, d)?.volume()?;
    Ok(vol * Rational::from_integer(factorial(fan.dim as u32)))
}

pub fn canonical_divisor(fan: &Fan) -> TDivisor {
    TDivisor::new(vec![-Rational::one(); fan.num_rays()])
}

/// Primitive facet forms of the cone over `P × {1}` in dimension `d + 1`
/// (last coordinate is the grading). `z >= 0` is implied and not listed.
pub fn cone_facet_normals(p: &HPolytope) -> Result<Vec<AffineForm>> {
    let facets = p.irredundant()?;
    facets
        .forms()
        .iter()
        .map(|f| {
            let den = f.offset().denom().clone();
            let scale = |x: i64| -> Result<i64> {
                num_traits::ToPrimitive::to_i64(&(BigInt::from(x) * &den)).ok_or(Error::Overflow)
            };
            let mut normal: Vec<i64> = f.normal().iter().map(|&a| scale(a)).collect::<Result<_>>()?;
            let last = num_traits::ToPrimitive::to_i64(&(f.offset() * Rational::from_integer(den)).to_integer())
                .ok_or(Error::Overflow)?;
            normal.push(last);
            AffineForm::new(linalg::primitive(&normal)?, Rational::zero())
        })
        .collect()
}

pub fn format_divisor(d: &TDivisor) -> String {
    let parts: Vec<String> = d
        .coeffs
        .iter()
        .map(crate::geometry::format_rational)
        .collect();
    format!("({})", parts.join(","))
}
