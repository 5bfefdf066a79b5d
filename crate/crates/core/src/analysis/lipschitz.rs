use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::grid::cartesian;
use super::report::witness;
use crate::error::{Error, Result};
use crate::fsignature::fsignature;
use crate::geometry::rational::int;
use crate::geometry::Rational;
use crate::toric::{is_ample, volume_of_divisor, Fan, NSBasis};

/// Largest difference quotients between grid neighbours at two step sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LipschitzProfile {
    pub step: Rational,
    pub max_quotient: Rational,
    pub max_quotient_half: Rational,
    /// Volume quotient at the finer step.
    pub vol_max_quotient: Rational,
    pub pairs: usize,
    pub pairs_half: usize,
}

impl LipschitzProfile {
    /// Refinement stability: halving the step at most doubles the quotient.
    pub fn is_stable(&self) -> bool {
        self.max_quotient_half <= &self.max_quotient * int(2)
    }
}

/// Grid coordinates with `(s, vol)` when ample.
type Sample = (Vec<Rational>, Option<(Rational, Rational)>);

struct Quotients {
    s: Rational,
    vol: Rational,
    pairs: usize,
}

/// Samples the sup-norm ball of `radius` around `center` (class coordinates
/// in `basis`) at steps `h` and `h/2`.
pub fn lipschitz_profile(
    fan: &Fan,
    basis: &NSBasis,
    center: &[Rational],
    radius: &Rational,
    step: &Rational,
) -> Result<LipschitzProfile> {
    if !step.is_positive() || radius.is_negative() {
        return Err(Error::Precondition("step must be positive and radius nonnegative".into()));
    }
    if center.len() != basis.rank() {
        return Err(Error::DimensionMismatch {
            expected: basis.rank(),
            found: center.len(),
        });
    }
    let half = step / int(2);
    let coarse = quotients(fan, basis, center, radius, step)?;
    let fine = quotients(fan, basis, center, radius, &half)?;
    Ok(LipschitzProfile {
        step: step.clone(),
        max_quotient: coarse.s,
        max_quotient_half: fine.s,
        vol_max_quotient: fine.vol,
        pairs: coarse.pairs,
        pairs_half: fine.pairs,
    })
}

fn quotients(
    fan: &Fan,
    basis: &NSBasis,
    center: &[Rational],
    radius: &Rational,
    step: &Rational,
) -> Result<Quotients> {
    let n = (radius / step).floor().to_integer();
    let n: i64 = num_traits::ToPrimitive::to_i64(&n).ok_or(Error::Overflow)?;
    let axis: Vec<Rational> = (-n..=n).map(int).collect();
    let offsets = cartesian(&vec![axis; center.len()]);
    let values: Vec<Sample> = offsets
        .into_par_iter()
        .map(|off| {
            let coords: Vec<Rational> = center.iter().zip(&off).map(|(c, o)| c + o * step).collect();
            let d = basis.combine(&coords);
            if !is_ample(fan, &d)? {
                return Ok((coords, None));
            }
            Ok((coords, Some((fsignature(fan, &d)?, volume_of_divisor(fan, &d)?))))
        })
        .collect::<Result<_>>()?;
    let outside: Vec<String> = values
        .iter()
        .filter(|(_, v)| v.is_none())
        .map(|(c, _)| witness(c))
        .collect();
    if !outside.is_empty() {
        return Err(Error::Precondition(format!(
            "ball exits the ample cone at {}",
            outside.join(" ")
        )));
    }
    let side = (2 * n + 1) as usize;
    let rank = center.len();
    let value = |idx: usize| values[idx].1.as_ref().expect("checked ample");
    let mut out = Quotients {
        s: Rational::zero(),
        vol: Rational::zero(),
        pairs: 0,
    };
    for idx in 0..values.len() {
        // neighbour one step up in each coordinate; the last coordinate varies fastest
        let mut stride = 1;
        for _ in 0..rank {
            let pos = (idx / stride) % side;
            if pos + 1 < side {
                let (s0, v0) = value(idx);
                let (s1, v1) = value(idx + stride);
                out.s = out.s.max((s1 - s0).abs() / step);
                out.vol = out.vol.max((v1 - v0).abs() / step);
                out.pairs += 1;
            }
            stride *= side;
        }
    }
    Ok(out)
}
