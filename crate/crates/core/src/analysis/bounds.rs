use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::grid::{local_upper_bound, volume_ratio};
use super::report::{witness, CheckReport};
use crate::error::{Error, Result};
use crate::fsignature::{frobenius_box, fsignature, max_splitting_degree};
use crate::geometry::rational::{factorial, int, pow};
use crate::geometry::Rational;
use crate::toric::divisor::format_divisor;
use crate::toric::{
    class_coordinates, is_ample, is_big, is_effective, norm_sup, volume_of_divisor, Fan, NSBasis, TDivisor,
};

/// `(p, e)` pairs sampled for the empirical vanishing constant.
pub const C1_SAMPLES: [(u64, u32); 6] = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C1Estimate {
    /// `ceil(max |L| · maxdeg(L, p, e) / p^e)`.
    pub value: Rational,
    /// The maximum before rounding.
    pub raw: Rational,
    pub witness: String,
    /// `max |L| · z` over the real Frobenius boxes, the `e -> oo` limit.
    pub box_sup: Rational,
}

impl C1Estimate {
    pub fn describe(&self) -> String {
        format!(
            "C1 = {} = ceil(max |L| maxdeg / p^e) over (p,e) in {{2,3}}x{{1,2,3}}; raw {} at {}; box sup {}",
            crate::geometry::format_rational(&self.value),
            crate::geometry::format_rational(&self.raw),
            self.witness,
            crate::geometry::format_rational(&self.box_sup),
        )
    }
}

fn box_height(fan: &Fan, d: &TDivisor) -> Result<Rational> {
    let vertices = frobenius_box(fan, d)?.polytope.vertex_enumeration()?;
    Ok(vertices
        .vertices
        .iter()
        .map(|v| v[fan.dim].clone())
        .max()
        .unwrap_or_else(Rational::zero))
}

/// Empirical vanishing constant over integral ample `classes`, with norms
/// taken in `norm_basis`.
pub fn empirical_c1(fan: &Fan, norm_basis: &NSBasis, classes: &[TDivisor]) -> Result<C1Estimate> {
    if classes.is_empty() {
        return Err(Error::Precondition("no classes to sample".into()));
    }
    let rows: Vec<(Rational, String, Rational)> = classes
        .par_iter()
        .map(|d| {
            let norm = norm_sup(&class_coordinates(fan, d, norm_basis)?);
            let mut best = Rational::zero();
            let mut at = String::new();
            for (p, e) in C1_SAMPLES {
                let q = p.pow(e);
                let deg = max_splitting_degree(fan, d, p, e)?;
                let c = &norm * int(deg) / int(q as i64);
                if c > best || at.is_empty() {
                    best = c;
                    at = format!("{} p={p} e={e}", format_divisor(d));
                }
            }
            Ok((best, at, &norm * box_height(fan, d)?))
        })
        .collect::<Result<_>>()?;
    let mut raw = Rational::zero();
    let mut at = String::new();
    let mut box_sup = Rational::zero();
    for (c, w, b) in rows {
        if c > raw || at.is_empty() {
            raw = c;
            at = w;
        }
        box_sup = box_sup.max(b);
    }
    Ok(C1Estimate {
        value: Rational::from_integer(raw.ceil().to_integer()),
        raw,
        witness: at,
        box_sup,
    })
}

fn require_bound_basis(basis: &NSBasis) -> Result<()> {
    if !basis.all_ample_and_globally_generated() {
        return Err(Error::Precondition("basis must be ample and globally generated".into()));
    }
    if basis.classes.iter().any(|c| !c.is_integral()) {
        return Err(Error::Precondition("basis classes must be integral".into()));
    }
    Ok(())
}

/// `C1^(d+1) vol / (|L|^(d+1) (d+1)!)`.
pub fn volume_bound(dim: usize, c1: &Rational, vol: &Rational, norm: &Rational) -> Rational {
    let e = dim as u32 + 1;
    pow(c1, e) * vol / (pow(norm, e) * Rational::from_integer(factorial(e)))
}

/// Checks both volume bounds at grid points given as coordinates in `basis`.
/// Points must lie in the cone spanned by the basis with `floor(|L|) >= 1`.
pub fn local_upper_bound_check(fan: &Fan, basis: &NSBasis, grid: &[Vec<Rational>]) -> Result<CheckReport> {
    require_bound_basis(basis)?;
    let mut classes = Vec::with_capacity(grid.len());
    for coords in grid {
        if coords.len() != basis.rank() {
            return Err(Error::DimensionMismatch {
                expected: basis.rank(),
                found: coords.len(),
            });
        }
        if coords.iter().any(|x| x.is_negative()) {
            return Err(Error::Precondition(format!("{} is outside the basis cone", witness(coords))));
        }
        if norm_sup(coords).floor().is_zero() {
            return Err(Error::Precondition(format!("{} has floor(|L|) = 0", witness(coords))));
        }
        let d = basis.combine(coords);
        if !d.is_integral() {
            return Err(Error::Precondition(format!("{} is not integral", witness(coords))));
        }
        classes.push(d);
    }
    let c1 = empirical_c1(fan, basis, &classes)?;
    let values: Vec<(Rational, Rational)> = classes
        .par_iter()
        .map(|d| Ok((fsignature(fan, d)?, volume_of_divisor(fan, d)?)))
        .collect::<Result<_>>()?;
    let mut report = CheckReport::new("bounds");
    report.note(c1.describe());
    for (coords, (s, vol)) in grid.iter().zip(values) {
        let norm = norm_sup(coords);
        let w = witness(coords);
        let bound = local_upper_bound(fan.dim, &vol, &norm).expect("floor(|L|) >= 1");
        report.at_most("local_bound", &s, &bound, w.clone());
        report.at_most("c1_bound", &s, &volume_bound(fan.dim, &c1.value, &vol, &norm), w);
    }
    Ok(report)
}

/// One instance of the key inequality: `L` and `H` in basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyInstance {
    pub l: Vec<Rational>,
    pub h: Vec<Rational>,
    pub n: u32,
    pub b: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeySides {
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Both sides of `|s(L) - s(L + H/n)| <= … + 2 s(L)/(b+1)` after checking
/// every hypothesis.
pub fn key_inequality(fan: &Fan, basis: &NSBasis, inst: &KeyInstance, c1: &Rational) -> Result<KeySides> {
    let l = basis.combine(&inst.l);
    let h = basis.combine(&inst.h);
    let w = format!("L={} H={} n={} b={}", witness(&inst.l), witness(&inst.h), inst.n, inst.b);
    let fail = |what: &str| Err(Error::Precondition(format!("{what} fails for {w}")));
    if inst.n == 0 || inst.b == 0 {
        return fail("n, b > 0");
    }
    if !l.is_integral() || !is_ample(fan, &l)? {
        return fail("L integral ample");
    }
    if !h.is_integral() || h.is_zero() || !is_effective(fan, &h)? {
        return fail("H effective");
    }
    let n = int(inst.n as i64);
    let b = int(inst.b as i64);
    let norm_l = norm_sup(&class_coordinates(fan, &l, basis)?);
    let norm_h = norm_sup(&class_coordinates(fan, &h, basis)?);
    if n <= int(2) * &norm_h / &norm_l {
        return fail("n > 2|H|/|L|");
    }
    if !is_big(fan, &(&l.scale(&n) - &h.scale(&b)))? {
        return fail("nL - bH big");
    }
    let shifted = &l + &h.scale(&n.recip());
    if !is_ample(fan, &shifted)? {
        return fail("L + H/n ample");
    }
    let dim = fan.dim as u32;
    let s_l = fsignature(fan, &l)?;
    let s_shift = fsignature(fan, &shifted)?;
    let vol_l = volume_of_divisor(fan, &l)?;
    let vol_shift = volume_of_divisor(fan, &shifted)?;
    let lead = pow(c1, dim + 1) / (pow(&norm_l, dim + 1) * Rational::from_integer(factorial(dim + 1)));
    let growth = (pow(&(&b + int(1)), dim) - pow(&b, dim)) / pow(&b, dim);
    let rhs = lead * (int(2) * &vol_l * growth + (vol_shift - &vol_l)) + int(2) * &s_l / (b + int(1));
    Ok(KeySides {
        lhs: (s_l - s_shift).abs(),
        rhs,
    })
}

pub fn key_inequality_check(
    fan: &Fan,
    basis: &NSBasis,
    instances: &[KeyInstance],
    c1: &C1Estimate,
) -> Result<CheckReport> {
    require_bound_basis(basis)?;
    let mut report = CheckReport::new("key-inequality");
    report.note(c1.describe());
    for inst in instances {
        let sides = key_inequality(fan, basis, inst, &c1.value)?;
        let w = format!("L={} H={} n={} b={}", witness(&inst.l), witness(&inst.h), inst.n, inst.b);
        report.at_most("key_inequality", &sides.lhs, &sides.rhs, w);
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioReport {
    /// `min s |L|^(d+1) / vol` over the grid.
    pub min: Rational,
    pub argmin: Vec<Rational>,
    pub points: usize,
}

/// Grid given as coordinates in `basis`; every point must be ample.
pub fn ratio_report(fan: &Fan, basis: &NSBasis, grid: &[Vec<Rational>]) -> Result<RatioReport> {
    let ratios: Vec<Rational> = grid
        .par_iter()
        .map(|coords| {
            let d = basis.combine(coords);
            let s = fsignature(fan, &d)?;
            let vol = volume_of_divisor(fan, &d)?;
            Ok(volume_ratio(fan.dim, &s, &vol, &norm_sup(coords)))
        })
        .collect::<Result<_>>()?;
    let (idx, min) = ratios
        .into_iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)))
        .ok_or_else(|| Error::Precondition("empty grid".into()))?;
    Ok(RatioReport {
        min,
        argmin: grid[idx].clone(),
        points: grid.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::grid::integer_grid;
    use crate::geometry::rational::rat;
    use crate::toric::Variety;

    fn coords(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn empirical_c1_on_the_line() {
        let v = Variety::builtin("p1").unwrap();
        let basis = v.ample_basis().unwrap();
        let c1 = empirical_c1(&v.fan, &basis, &[basis.combine(&coords(&[1]))]).unwrap();
        // O(1): the top degree at level e is 2(p^e - 1)
        assert_eq!(c1.raw, rat(52, 27));
        assert_eq!(c1.value, int(2));
        assert_eq!(c1.box_sup, int(2));
    }

    #[test]
    fn bounds_on_the_product() {
        let v = Variety::builtin("p1xp1").unwrap();
        let basis = v.ample_basis().unwrap();
        let r = local_upper_bound_check(&v.fan, &basis, &[coords(&[1, 1]), coords(&[0, 2])]).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.checks[0].rhs, "1024");
        assert!(local_upper_bound_check(&v.fan, &basis, &[coords(&[-1, 2])]).is_err());
        assert!(local_upper_bound_check(&v.fan, &basis, &[vec![rat(1, 2), int(0)]]).is_err());
        assert!(local_upper_bound_check(&v.fan, &v.standard_basis().unwrap(), &[coords(&[1, 1])]).is_err());
    }

    #[test]
    fn key_inequality_hypotheses() {
        let v = Variety::builtin("bl_p2").unwrap();
        let basis = v.ample_basis().unwrap();
        let c1 = int(3);
        // L = 3H - E, H = -(2H - E) + (3H - E)
        let inst = |n, b| KeyInstance {
            l: coords(&[0, 1]),
            h: coords(&[-1, 1]),
            n,
            b,
        };
        let sides = key_inequality(&v.fan, &basis, &inst(3, 1), &c1).unwrap();
        assert!(sides.lhs <= sides.rhs);
        let msg = key_inequality(&v.fan, &basis, &inst(2, 1), &c1).unwrap_err().to_string();
        assert!(msg.contains("n > 2|H|/|L|"), "{msg}");
        let msg = key_inequality(&v.fan, &basis, &inst(3, 9), &c1).unwrap_err().to_string();
        assert!(msg.contains("big"), "{msg}");
    }

    #[test]
    fn ratio_of_a_single_point() {
        let v = Variety::builtin("p1xp1").unwrap();
        let r = ratio_report(&v.fan, &v.ample_basis().unwrap(), &[coords(&[1, 0])]).unwrap();
        assert_eq!(r.min, rat(1, 3));
        let r = ratio_report(&v.fan, &v.ample_basis().unwrap(), &integer_grid(2, 1, 3)).unwrap();
        assert!(r.min.is_positive());
        assert_eq!(r.points, 9);
    }
}
