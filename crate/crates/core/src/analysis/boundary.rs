use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::fsignature::fsignature;
use crate::geometry::rational::int;
use crate::geometry::Rational;
use crate::toric::divisor::format_divisor;
use crate::toric::{is_ample, is_nef, Fan, TDivisor};

/// Default number of halvings `lambda = 2^-1, …, 2^-K`.
pub const DEFAULT_HALVINGS: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryLimit {
    /// `(lambda, s(D0 + lambda A))` in schedule order.
    pub samples: Vec<(Rational, Rational)>,
    /// Linear Richardson extrapolation from the last two samples.
    pub extrapolated: Rational,
}

/// Approaches the nef class `target` along `target + lambda · direction`;
/// every sampled class must be ample.
pub fn boundary_limit(fan: &Fan, target: &TDivisor, direction: &TDivisor, halvings: u32) -> Result<BoundaryLimit> {
    if target.is_zero() {
        return Err(Error::ZeroClass);
    }
    if !is_nef(fan, target)? {
        return Err(Error::Precondition(format!("{} is not nef", format_divisor(target))));
    }
    if halvings < 2 {
        return Err(Error::Precondition("need at least two samples".into()));
    }
    let samples = (1..=halvings)
        .map(|k| {
            let lambda = Rational::new(1.into(), BigInt::from(2).pow(k));
            let d = target + &direction.scale(&lambda);
            if !is_ample(fan, &d)? {
                return Err(Error::Precondition(format!(
                    "{} is not ample at lambda = {}",
                    format_divisor(&d),
                    crate::geometry::format_rational(&lambda)
                )));
            }
            Ok((lambda, fsignature(fan, &d)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let (_, last) = &samples[samples.len() - 1];
    let (_, prev) = &samples[samples.len() - 2];
    // lambda halves between samples, so the linear extrapolant at 0 is 2 s_K - s_{K-1}
    let extrapolated = last * int(2) - prev;
    Ok(BoundaryLimit { samples, extrapolated })
}
