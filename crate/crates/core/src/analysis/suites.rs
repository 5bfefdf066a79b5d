//! The verification suites run by `fsig check`.

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::boundary::{boundary_limit, DEFAULT_HALVINGS};
use super::bounds::{empirical_c1, key_inequality_check, local_upper_bound_check, ratio_report, KeyInstance};
use super::closed_form::{
    blp2_adjacent_pieces, blp2_breakpoints, blp2_piece, breakpoint_value_blp2, breakpoint_value_p1p1,
    closed_form_blp2, closed_form_p1p1, p1p1_adjacent_pieces, p1p1_piece,
};
use super::grid::integer_grid;
use super::lipschitz::lipschitz_profile;
use super::report::{witness, Check, CheckReport};
use crate::error::{Error, Result};
use crate::fsignature::{
    convergence_report, free_rank, fsignature, max_splitting_degree, vanishing_degree_oracle,
};
use crate::geometry::rational::{int, rat};
use crate::geometry::{format_rational, Rational};
use crate::toric::catalog::BUILTIN_NAMES;
use crate::toric::divisor::format_divisor;
use crate::toric::{TDivisor, Variety};

/// Suites accepted by `fsig check`, in the order `all` runs them.
pub const SUITES: [&str; 9] = [
    "formulas",
    "scaling",
    "degrees",
    "convergence",
    "bounds",
    "boundary",
    "lipschitz",
    "key-inequality",
    "ratio",
];

/// Extrapolation tolerance for nef-boundary limits.
pub fn boundary_tolerance() -> Rational {
    rat(1, 1000)
}

/// Scale factors used by the scaling suite.
pub fn scaling_factors() -> Vec<Rational> {
    vec![rat(1, 2), int(2), int(3), rat(7, 3)]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Primes for the degree suite.
    pub primes: Vec<u64>,
    /// Largest Frobenius level for the degree suite.
    pub e_max: u32,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            primes: vec![2, 3],
            e_max: 3,
        }
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<Vec<CheckReport>> {
    let one = |r: Result<CheckReport>| r.map(|r| vec![r]);
    match name {
        "formulas" => one(formulas_suite()),
        "scaling" => one(scaling_suite()),
        "degrees" => one(degree_suite(&opts.primes, opts.e_max)),
        "convergence" => one(convergence_suite()),
        "bounds" => one(bounds_suite()),
        "boundary" => one(boundary_suite()),
        "lipschitz" => one(lipschitz_suite()),
        "key-inequality" => one(key_inequality_suite()),
        "ratio" => one(ratio_suite()),
        "all" => SUITES.iter().map(|s| run_suite(s, opts).map(|mut r| r.remove(0))).collect(),
        other => Err(Error::Parse(format!(
            "unknown suite {other}; expected one of {} or all",
            SUITES.join(", ")
        ))),
    }
}

fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| int(x)).collect()
}

/// Engine against closed form at every point of `grid` (standard coordinates),
/// plus both pieces at breakpoints.
pub fn compare_closed_forms(variety: &Variety, grid: &[Vec<Rational>]) -> Result<CheckReport> {
    let name = variety.name().to_string();
    if name != "p1xp1" && name != "bl_p2" {
        return Err(Error::Precondition(format!("no closed form for {name}")));
    }
    let rows: Vec<(Vec<Rational>, Rational, Rational)> = grid
        .par_iter()
        .map(|c| {
            let (a, b) = (&c[0], &c[1]);
            let formula = if name == "p1xp1" {
                closed_form_p1p1(a, b)?
            } else {
                closed_form_blp2(a, b)?
            };
            let engine = fsignature(&variety.fan, &variety.standard_class(c)?)?;
            Ok((c.clone(), engine, formula))
        })
        .collect::<Result<_>>()?;
    let mut report = CheckReport::new(format!("closed-form {name}"));
    for (c, engine, formula) in rows {
        let w = witness(&c);
        report.equal("engine_vs_formula", &engine, &formula, w.clone());
        let (a, b) = (&c[0], &c[1]);
        if name == "p1xp1" {
            if let Some((l, r)) = p1p1_adjacent_pieces(a, b) {
                report.equal("adjacent_pieces", &l, &r, w.clone());
            }
        } else if let Some((_, l, r)) = blp2_adjacent_pieces(a, b) {
            report.equal("adjacent_pieces", &l, &r, w.clone());
        }
    }
    Ok(report)
}

/// Adjacent pieces agree at each breakpoint, on rational witnesses.
pub fn piece_continuity() -> Result<CheckReport> {
    let mut report = CheckReport::new("piece-continuity");
    let p1p1 = Variety::builtin("p1xp1")?;
    let blp2 = Variety::builtin("bl_p2")?;
    for t in [int(1), int(2), rat(3, 2), rat(5, 7), rat(7, 3)] {
        // P1 x P1 along b = 2a with a = t
        let (a, b) = (t.clone(), &t * int(2));
        let w = witness(&[a.clone(), b.clone()]);
        let expected = breakpoint_value_p1p1(&a);
        report.equal("p1xp1 piece 1", &p1p1_piece(1, &a, &b), &expected, w.clone());
        report.equal("p1xp1 piece 2", &p1p1_piece(2, &a, &b), &expected, w.clone());
        let engine = fsignature(&p1p1.fan, &p1p1.standard_class(&[a, b])?)?;
        report.equal("p1xp1 engine", &engine, &expected, w);
        // blow-up along a = t_k b with b = t
        for (k, ratio) in blp2_breakpoints().iter().enumerate() {
            let b = t.clone();
            let a = ratio * &b;
            let w = witness(&[a.clone(), b.clone()]);
            let expected = breakpoint_value_blp2(k + 1, &b);
            report.equal(format!("bl_p2 piece {}", k + 1), &blp2_piece(k + 1, &a, &b), &expected, w.clone());
            report.equal(format!("bl_p2 piece {}", k + 2), &blp2_piece(k + 2, &a, &b), &expected, w.clone());
            let engine = fsignature(&blp2.fan, &blp2.standard_class(&[a, b])?)?;
            report.equal("bl_p2 engine", &engine, &expected, w);
        }
    }
    Ok(report)
}

pub fn formulas_suite() -> Result<CheckReport> {
    let mut report = CheckReport::new("formulas");
    let p1p1 = Variety::builtin("p1xp1")?;
    let blp2 = Variety::builtin("bl_p2")?;
    for (c, v) in [([1, 2], rat(1, 4)), ([1, 1], rat(2, 3)), ([2, 3], rat(23, 108))] {
        let s = fsignature(&p1p1.fan, &p1p1.standard_class(&ints(&c))?)?;
        report.equal("p1xp1 published value", &s, &v, witness(&ints(&c)));
    }
    for (c, v) in [([2, 1], rat(5, 12)), ([3, 1], rat(11, 36)), ([5, 1], rat(19, 120))] {
        let s = fsignature(&blp2.fan, &blp2.standard_class(&ints(&c))?)?;
        report.equal("bl_p2 published value", &s, &v, witness(&ints(&c)));
    }
    let square = integer_grid(2, 1, 8);
    report.absorb(compare_closed_forms(&p1p1, &square)?);
    let below: Vec<Vec<Rational>> = square.iter().filter(|c| c[1] < c[0]).cloned().collect();
    report.absorb(compare_closed_forms(&blp2, &below)?);
    // symmetry under the factor swap
    for c in &square {
        let swapped = vec![c[1].clone(), c[0].clone()];
        let l = fsignature(&p1p1.fan, &p1p1.standard_class(c)?)?;
        let r = fsignature(&p1p1.fan, &p1p1.standard_class(&swapped)?)?;
        report.equal("p1xp1 symmetry", &l, &r, witness(c));
    }
    report.absorb(piece_continuity()?);
    Ok(report)
}

/// `lambda · s(lambda D) = s(D)` for each factor.
pub fn scaling_check(variety: &Variety, d: &TDivisor, factors: &[Rational]) -> Result<CheckReport> {
    let fan = &variety.fan;
    let base = fsignature(fan, d)?;
    let mut report = CheckReport::new(format!("scaling {}", variety.name()));
    for lambda in factors {
        let scaled = fsignature(fan, &d.scale(lambda))?;
        report.equal(
            "lambda_s_lambda_d",
            &(lambda * scaled),
            &base,
            format!("{} lambda={}", format_divisor(d), format_rational(lambda)),
        );
    }
    Ok(report)
}

/// Five ample classes per builtin in standard coordinates.
pub fn scaling_classes(name: &str) -> Vec<Vec<Rational>> {
    match name {
        "p1" | "p2" | "p3" => vec![ints(&[1]), ints(&[2]), ints(&[3]), ints(&[5]), vec![rat(7, 2)]],
        "p1xp1" => vec![ints(&[1, 1]), ints(&[1, 2]), ints(&[2, 3]), ints(&[3, 1]), vec![rat(1, 2), rat(3, 2)]],
        "bl_p2" => vec![ints(&[2, 1]), ints(&[3, 1]), ints(&[5, 1]), ints(&[5, 2]), vec![rat(7, 2), int(1)]],
        _ => Vec::new(),
    }
}

pub fn scaling_suite() -> Result<CheckReport> {
    let mut report = CheckReport::new("scaling");
    for name in BUILTIN_NAMES {
        let v = Variety::builtin(name)?;
        for c in scaling_classes(name) {
            report.absorb(scaling_check(&v, &v.standard_class(&c)?, &scaling_factors())?);
        }
    }
    Ok(report)
}

/// Integral ample classes used by the degree and convergence suites.
pub fn sample_classes(name: &str) -> Vec<Vec<i64>> {
    match name {
        "p1" | "p2" => vec![vec![1], vec![2]],
        "p3" => vec![vec![1]],
        "p1xp1" => vec![vec![1, 1], vec![1, 2], vec![2, 3]],
        "bl_p2" => vec![vec![2, 1], vec![3, 1], vec![5, 2]],
        _ => Vec::new(),
    }
}

pub fn degree_suite(primes: &[u64], e_max: u32) -> Result<CheckReport> {
    let mut report = CheckReport::new("degrees");
    let mut cases = Vec::new();
    for name in BUILTIN_NAMES {
        for c in sample_classes(name) {
            for &p in primes {
                for e in 1..=e_max {
                    cases.push((name, c.clone(), p, e));
                }
            }
        }
    }
    let rows: Vec<(String, i64, i64, i64)> = cases
        .par_iter()
        .map(|(name, c, p, e)| {
            let v = Variety::builtin(name)?;
            let d = v.standard_class(&ints(c))?;
            let deg = max_splitting_degree(&v.fan, &d, *p, *e)?;
            let oracle = vanishing_degree_oracle(&v.fan, &d, *p, *e)?;
            let dim = v.dim() as i64;
            let lemma = (dim * dim + dim) * (*p as i64).pow(*e);
            Ok((format!("{name} {} p={p} e={e}", witness(&ints(c))), deg, oracle, lemma))
        })
        .collect::<Result<_>>()?;
    for (w, deg, oracle, lemma) in rows {
        report.at_most("max_degree_vs_lemma", &int(deg), &int(lemma), w.clone());
        report.at_most("max_degree_vs_oracle", &int(deg), &int(oracle), w);
    }
    if primes.contains(&2) && e_max >= 1 {
        let p1 = Variety::builtin("p1")?;
        let o1 = p1.standard_class(&ints(&[1]))?;
        let w = "p1 (1) p=2 e=1";
        report.equal("exact_degree", &int(max_splitting_degree(&p1.fan, &o1, 2, 1)?), &int(2), w);
        report.equal("exact_oracle", &int(vanishing_degree_oracle(&p1.fan, &o1, 2, 1)?), &int(2), w);
    }
    Ok(report)
}

/// Largest level per prime in the convergence suite.
pub const CONVERGENCE_LEVELS: [(u64, u32); 2] = [(2, 4), (3, 3)];

pub fn convergence_suite() -> Result<CheckReport> {
    let mut report = CheckReport::new("convergence");
    let mut cases = Vec::new();
    for name in BUILTIN_NAMES {
        for c in sample_classes(name) {
            for (p, e) in CONVERGENCE_LEVELS {
                cases.push((name, c.clone(), p, e));
            }
        }
    }
    let rows = cases
        .par_iter()
        .map(|(name, c, p, e)| {
            let v = Variety::builtin(name)?;
            let d = v.standard_class(&ints(c))?;
            let w = format!("{name} {} p={p} e<={e}", witness(&ints(c)));
            Ok((w, convergence_report(&v.fan, &d, *p, *e)?))
        })
        .collect::<Result<Vec<_>>>()?;
    for (w, conv) in rows {
        if conv.first_error().is_zero() {
            // exact from the first level on: every level must stay exact
            for row in &conv.rows {
                report.equal("exact_level", &row.error, &Rational::zero(), format!("{w} e={}", row.report.e));
            }
        } else {
            report.less("error_decreases", conv.last_error(), conv.first_error(), w);
        }
    }
    let p1 = Variety::builtin("p1")?;
    let a1 = free_rank(&p1.fan, &p1.standard_class(&ints(&[2]))?, 3, 1)?.a_e;
    report.equal("a_1", &int(a1 as i64), &int(5), "p1 (2) p=3");
    Ok(report)
}

/// Ample coordinates `{0..5}^2` minus the origin, in the documented basis.
pub fn bound_grid() -> Vec<Vec<Rational>> {
    integer_grid(2, 0, 5).into_iter().filter(|c| !c.iter().all(Zero::is_zero)).collect()
}

pub fn bounds_suite() -> Result<CheckReport> {
    let mut report = CheckReport::new("bounds");
    for name in ["p1xp1", "bl_p2"] {
        let v = Variety::builtin(name)?;
        let mut r = local_upper_bound_check(&v.fan, &v.ample_basis()?, &bound_grid())?;
        r.suite = name.to_string();
        report.absorb(r);
    }
    Ok(report)
}

pub fn boundary_suite() -> Result<CheckReport> {
    let mut report = CheckReport::new("boundary");
    let tol = boundary_tolerance();
    let blp2 = Variety::builtin("bl_p2")?;
    let p1p1 = Variety::builtin("p1xp1")?;
    let mut cases: Vec<(&Variety, [i64; 2], [i64; 2], Rational)> = Vec::new();
    for a in 1..=3 {
        cases.push((&blp2, [a, a], [1, 0], int(0)));
        cases.push((&blp2, [a, a], [2, 1], int(0)));
        cases.push((&blp2, [a, 0], [2, 1], rat(1, 2 * a)));
        cases.push((&p1p1, [a, 0], [1, 1], int(0)));
        cases.push((&p1p1, [0, a], [1, 1], int(0)));
    }
    cases.push((&blp2, [2, 1], [3, 1], rat(5, 12)));
    for (v, target, dir, expected) in cases {
        let lim = boundary_limit(&v.fan, &v.standard_class(&ints(&target))?, &v.standard_class(&ints(&dir))?, DEFAULT_HALVINGS)?;
        let err = (&lim.extrapolated - &expected).abs();
        report.at_most(
            "extrapolation_error",
            &err,
            &tol,
            format!(
                "{} target {} direction {} limit {}",
                v.name(),
                witness(&ints(&target)),
                witness(&ints(&dir)),
                format_rational(&lim.extrapolated)
            ),
        );
    }
    Ok(report)
}

pub fn lipschitz_suite() -> Result<CheckReport> {
    let mut report = CheckReport::new("lipschitz");
    for (name, center) in [("bl_p2", [2, 1]), ("p1xp1", [1, 1])] {
        let v = Variety::builtin(name)?;
        let basis = v.standard_basis()?;
        let prof = lipschitz_profile(&v.fan, &basis, &ints(&center), &rat(1, 4), &rat(1, 8))?;
        let w = format!(
            "{name} center {} radius 1/4 h 1/8 pairs {}/{} vol quotient {}",
            witness(&ints(&center)),
            prof.pairs,
            prof.pairs_half,
            format_rational(&prof.vol_max_quotient)
        );
        report.at_most("refinement_stable", &prof.max_quotient_half, &(&prof.max_quotient * int(2)), w.clone());
        report.push(Check {
            name: "pairs_sampled".into(),
            pass: prof.pairs > 0 && prof.pairs_half > 0,
            lhs: prof.pairs.to_string(),
            rhs: prof.pairs_half.to_string(),
            witness: w,
        });
    }
    Ok(report)
}

/// Documented key-inequality instances, coordinates in the ample basis.
pub fn key_instances(name: &str) -> Vec<KeyInstance> {
    let inst = |l: [i64; 2], h: [i64; 2], n, b| KeyInstance {
        l: ints(&l),
        h: ints(&h),
        n,
        b,
    };
    match name {
        // basis {2H - E, 3H - E}; H = -(2H - E) + (3H - E)
        "bl_p2" => vec![
            inst([0, 1], [-1, 1], 3, 1),
            inst([1, 0], [-1, 1], 3, 2),
            inst([1, 1], [-1, 1], 3, 3),
        ],
        // basis {(1,1), (1,2)}; (1,0) = 2(1,1) - (1,2), (0,1) = -(1,1) + (1,2)
        "p1xp1" => vec![inst([2, 0], [2, -1], 3, 1), inst([1, 1], [-1, 1], 3, 2)],
        _ => Vec::new(),
    }
}

pub fn key_inequality_suite() -> Result<CheckReport> {
    let mut report = CheckReport::new("key-inequality");
    for name in ["bl_p2", "p1xp1"] {
        let v = Variety::builtin(name)?;
        let basis = v.ample_basis()?;
        let classes: Vec<TDivisor> = bound_grid().iter().map(|c| basis.combine(c)).collect();
        let c1 = empirical_c1(&v.fan, &basis, &classes)?;
        let mut r = key_inequality_check(&v.fan, &basis, &key_instances(name), &c1)?;
        r.suite = name.to_string();
        for n in &mut r.notes {
            *n = format!("{name}: {n}");
        }
        report.absorb(r);
    }
    Ok(report)
}

pub fn ratio_suite() -> Result<CheckReport> {
    let mut report = CheckReport::new("ratio");
    for name in ["p1xp1", "bl_p2"] {
        let v = Variety::builtin(name)?;
        let r = ratio_report(&v.fan, &v.ample_basis()?, &integer_grid(2, 1, 6))?;
        report.less(
            "min_ratio_positive",
            &Rational::zero(),
            &r.min,
            format!("{name} argmin {} over {} points", witness(&r.argmin), r.points),
        );
        report.note(format!("{name}: min s |L|^3 / vol = {} at {}", format_rational(&r.min), witness(&r.argmin)));
    }
    Ok(report)
}
