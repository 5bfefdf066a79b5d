use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::{frobenius_box, fsignature};
use crate::error::{Error, Result};
use crate::geometry::Rational;
use crate::toric::{canonical_divisor, divisor_polytope, is_globally_generated, Fan, TDivisor};

/// Largest bounding box (in candidate points) a single lattice scan may visit.
pub const ENUMERATION_BUDGET: u128 = 4_000_000;

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| !p.is_multiple_of(k))
}

fn frobenius_power(p: u64, e: u32) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e == 0 {
        return Err(Error::Precondition("e must be positive".into()));
    }
    p.checked_pow(e).ok_or(Error::Overflow)
}

/// The free rank `a_e` of the e-th Frobenius pushforward of the section ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeRankReport {
    pub p: u64,
    pub e: u32,
    pub a_e: u64,
    /// `a_e / p^(e (d + 1))`.
    pub normalized: Rational,
}

/// Counts integer points with `0 <= l_i(y) <= p^e - 1` for every cone facet
/// form `l_i`.
pub fn free_rank(fan: &Fan, d: &TDivisor, p: u64, e: u32) -> Result<FreeRankReport> {
    let q = frobenius_power(p, e)?;
    let dilated = frobenius_box(fan, d)?.dilated(q - 1)?;
    let a_e = dilated.count_lattice_points_within(ENUMERATION_BUDGET)?;
    let generic_rank = BigInt::from(q).pow(fan.dim as u32 + 1);
    Ok(FreeRankReport {
        p,
        e,
        a_e,
        normalized: Rational::new(a_e.into(), generic_rank),
    })
}

/// Per-degree counts `dim H^0(mL) / I_e(mL)`, nonzero entries only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub p: u64,
    pub e: u32,
    pub dims: BTreeMap<i64, u64>,
    pub max_degree: i64,
}

impl DegreeProfile {
    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }
}

/// Slices the dilated box at each degree `m` and counts lattice points.
pub fn splitting_dimensions(fan: &Fan, d: &TDivisor, p: u64, e: u32) -> Result<DegreeProfile> {
    let q = frobenius_power(p, e)?;
    let dilated = frobenius_box(fan, d)?.dilated(q - 1)?;
    let predicted = dilated.predicted_scan_size()?;
    if predicted > ENUMERATION_BUDGET {
        return Err(Error::BudgetExceeded {
            predicted,
            budget: ENUMERATION_BUDGET,
        });
    }
    let bounds = dilated
        .integer_bounding_box()?
        .expect("the box contains the origin");
    let (lo, hi) = bounds[fan.dim];
    let counts = (lo..=hi)
        .into_par_iter()
        .map(|m| Ok((m, dilated.slice_last_coord(m)?.count_lattice_points()?)))
        .collect::<Result<Vec<_>>>()?;
    let dims: BTreeMap<i64, u64> = counts.into_iter().filter(|&(_, n)| n > 0).collect();
    let max_degree = *dims.keys().next_back().expect("degree zero always splits");
    Ok(DegreeProfile { p, e, dims, max_degree })
}

/// Largest degree carrying a splitting. Requires a globally generated class.
///
/// Same slices as [`splitting_dimensions`], searched downward from the top of
/// the box with an early exit, so it stays cheap where the full profile would
/// exceed the scan budget.
pub fn max_splitting_degree(fan: &Fan, d: &TDivisor, p: u64, e: u32) -> Result<i64> {
    if !is_globally_generated(fan, d)? {
        return Err(Error::Precondition("divisor is not globally generated".into()));
    }
    let q = frobenius_power(p, e)?;
    let dilated = frobenius_box(fan, d)?.dilated(q - 1)?;
    let bounds = dilated
        .integer_bounding_box()?
        .expect("the box contains the origin");
    let (lo, hi) = bounds[fan.dim];
    for m in (lo..=hi).rev() {
        if dilated.slice_last_coord(m)?.has_lattice_point()? {
            return Ok(m);
        }
    }
    unreachable!("degree zero always splits")
}

/// Largest `m >= 0` for which `-(p^e - 1) K - m D` has a section, i.e. its
/// polytope has a lattice point. Splittings in degree `m` need a nonzero map
/// `F^e_* O(mD) -> O`, which by duality is such a section.
pub fn vanishing_degree_oracle(fan: &Fan, d: &TDivisor, p: u64, e: u32) -> Result<i64> {
    let q = frobenius_power(p, e)?;
    let anti = canonical_divisor(fan).scale(&-Rational::from_integer((q - 1).into()));
    let mut best = None;
    // the set of m with a real point is an interval containing 0
    for m in 0i64.. {
        let target = &anti - &d.scale(&Rational::from_integer(m.into()));
        let poly = divisor_polytope(fan, &target)?;
        if !poly.is_feasible()? {
            break;
        }
        if poly.has_lattice_point()? {
            best = Some(m);
        }
    }
    best.ok_or_else(|| Error::Precondition("anticanonical divisor has no sections".into()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceRow {
    pub report: FreeRankReport,
    /// `|a_e / p^(e (d + 1)) - s|`.
    pub error: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceReport {
    pub fsignature: Rational,
    pub rows: Vec<ConvergenceRow>,
    /// `max_e p^e · error_e`.
    pub scaled_error_bound: Rational,
}

impl ConvergenceReport {
    pub fn first_error(&self) -> &Rational {
        &self.rows[0].error
    }

    pub fn last_error(&self) -> &Rational {
        &self.rows[self.rows.len() - 1].error
    }
}

pub fn convergence_report(fan: &Fan, d: &TDivisor, p: u64, e_max: u32) -> Result<ConvergenceReport> {
    let s = fsignature(fan, d)?;
    let bx = frobenius_box(fan, d)?;
    // fail before any scanning when the largest level is out of budget
    let q_max = frobenius_power(p, e_max)?;
    let predicted = bx.dilated(q_max - 1)?.predicted_scan_size()?;
    if predicted > ENUMERATION_BUDGET {
        return Err(Error::BudgetExceeded {
            predicted,
            budget: ENUMERATION_BUDGET,
        });
    }
    let mut rows = Vec::new();
    let mut scaled = Rational::zero();
    for e in 1..=e_max {
        let report = free_rank(fan, d, p, e)?;
        let error = (&report.normalized - &s).abs();
        let pe = Rational::from_integer(BigInt::from(p).pow(e));
        scaled = scaled.max(&error * pe);
        rows.push(ConvergenceRow { report, error });
    }
    Ok(ConvergenceReport {
        fsignature: s,
        rows,
        scaled_error_bound: scaled,
    })
}
