//! F-signatures as Frobenius box volumes, and their finite-level lattice
//! approximants.

mod free_rank;

pub use free_rank::{
    convergence_report, free_rank, is_prime, max_splitting_degree, splitting_dimensions,
    vanishing_degree_oracle, ConvergenceReport, ConvergenceRow, DegreeProfile, FreeRankReport,
    ENUMERATION_BUDGET,
};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::{AffineForm, HPolytope, Rational};
use crate::toric::divisor::format_divisor;
use crate::toric::{cone_facet_normals, divisor_polytope, is_ample, is_nef, Fan, TDivisor};

/// `{y : 0 <= l_i(y) <= 1}` over the primitive facet forms `l_i` of the cone
/// over the divisor polytope. The last coordinate is the degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusBox {
    /// The linear forms `l_i` (zero offset).
    pub forms: Vec<AffineForm>,
    pub polytope: HPolytope,
}

impl FrobeniusBox {
    fn from_forms(dim: usize, forms: Vec<AffineForm>) -> Result<Self> {
        let one = Rational::one();
        let mut constraints = Vec::with_capacity(2 * forms.len());
        for f in &forms {
            constraints.push(f.clone());
            constraints.push(f.upper(&one));
        }
        let polytope = HPolytope::new(dim, constraints)?;
        Ok(Self { forms, polytope })
    }

    pub fn volume(&self) -> Result<Rational> {
        self.polytope.volume()
    }

    /// The box scaled by `p^e - 1`; its lattice points index the free
    /// summands at level `e`.
    pub fn dilated(&self, factor: u64) -> Result<HPolytope> {
        self.polytope.dilate(&Rational::from_integer(factor.into()))
    }
}

fn require_ample(fan: &Fan, d: &TDivisor) -> Result<()> {
    if is_ample(fan, d)? {
        Ok(())
    } else {
        Err(Error::NotAmple)
    }
}

fn require_integral(d: &TDivisor) -> Result<()> {
    if d.is_integral() {
        Ok(())
    } else {
        Err(Error::NotIntegral(format_divisor(d)))
    }
}

pub fn frobenius_box(fan: &Fan, d: &TDivisor) -> Result<FrobeniusBox> {
    require_integral(d)?;
    require_ample(fan, d)?;
    let forms = cone_facet_normals(&divisor_polytope(fan, d)?)?;
    FrobeniusBox::from_forms(fan.dim + 1, forms)
}

/// Exact F-signature of an ample Q-divisor: with `k` the least common
/// denominator, `k · vol(box(kD))`.
pub fn fsignature(fan: &Fan, d: &TDivisor) -> Result<Rational> {
    require_ample(fan, d)?;
    let k = Rational::from_integer(d.denominator());
    let cleared = d.scale(&k);
    Ok(frobenius_box(fan, &cleared)?.volume()? * k)
}

/// Continuous extension of the F-signature to nonzero nef classes.
///
/// Uses one form `<v_rho, x> + c_rho z` per ray rather than per facet. On
/// ample classes every ray gives a facet, so this agrees with
/// [`fsignature`]; the box volume depends continuously on the coefficients,
/// so on the nef boundary it is the limit of interior values. Classes that
/// are not big give zero.
pub fn nef_extension(fan: &Fan, d: &TDivisor) -> Result<Rational> {
    if d.is_zero() {
        return Err(Error::ZeroClass);
    }
    if !is_nef(fan, d)? {
        return Err(Error::Precondition(format!(
            "{} is not nef",
            format_divisor(d)
        )));
    }
    let k = d.denominator();
    let cleared = d.scale(&Rational::from_integer(k.clone()));
    let forms = fan
        .rays
        .iter()
        .zip(&cleared.coeffs)
        .map(|(ray, c)| {
            let mut normal = ray.clone();
            let c = num_traits::ToPrimitive::to_i64(&c.to_integer()).ok_or(Error::Overflow)?;
            normal.push(c);
            AffineForm::new(normal, Rational::zero())
        })
        .collect::<Result<_>>()?;
    let b = FrobeniusBox::from_forms(fan.dim + 1, forms)?;
    Ok(b.volume()? * Rational::from_integer(k))
}
