//! End-to-end acceptance run: one PASS/FAIL line per criterion.

use std::process::Command;

use fsig::analysis::boundary::{boundary_limit, DEFAULT_HALVINGS};
use fsig::analysis::bounds::{empirical_c1, key_inequality_check, local_upper_bound_check};
use fsig::analysis::closed_form::{
    blp2_adjacent_pieces, blp2_breakpoints, breakpoint_value_blp2, breakpoint_value_p1p1, p1p1_adjacent_pieces,
};
use fsig::analysis::grid::integer_grid;
use fsig::analysis::lipschitz::lipschitz_profile;
use fsig::analysis::suites::{
    bound_grid, compare_closed_forms, degree_suite, key_instances, sample_classes, scaling_check, scaling_classes,
    scaling_factors, CONVERGENCE_LEVELS,
};
use fsig::fsignature::{convergence_report, free_rank, fsignature, max_splitting_degree, vanishing_degree_oracle};
use fsig::geometry::rational::{int, rat};
use fsig::geometry::Rational;
use fsig::toric::catalog::BUILTIN_NAMES;
use fsig::toric::{TDivisor, Variety};
use num_traits::{Signed, Zero};

/// Absolute tolerance for nef-boundary extrapolation.
fn boundary_tolerance() -> Rational {
    rat(1, 1000)
}

fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| int(x)).collect()
}

fn builtin(name: &str) -> Variety {
    Variety::builtin(name).unwrap()
}

fn s_at(v: &Variety, coords: &[i64]) -> Rational {
    fsignature(&v.fan, &v.standard_class(&ints(coords)).unwrap()).unwrap()
}

fn closed_forms() -> Result<(), String> {
    let p1p1 = builtin("p1xp1");
    let blp2 = builtin("bl_p2");
    let published: [(&Variety, [i64; 2], Rational); 6] = [
        (&p1p1, [1, 2], rat(1, 4)),
        (&p1p1, [1, 1], rat(2, 3)),
        (&p1p1, [2, 3], rat(23, 108)),
        (&blp2, [2, 1], rat(5, 12)),
        (&blp2, [3, 1], rat(11, 36)),
        (&blp2, [5, 1], rat(19, 120)),
    ];
    for (v, c, expected) in published {
        let s = s_at(v, &c);
        if s != expected {
            return Err(format!("{} {:?}: {s} != {expected}", v.name(), c));
        }
    }
    let square = integer_grid(2, 1, 8);
    let below: Vec<Vec<Rational>> = square.iter().filter(|c| c[1] < c[0]).cloned().collect();
    for (v, grid) in [(&p1p1, &square), (&blp2, &below)] {
        let r = compare_closed_forms(v, grid).map_err(|e| e.to_string())?;
        if !r.pass {
            return Err(format!("{} grid mismatch: {:?}", v.name(), r.failures().next()));
        }
    }
    Ok(())
}

fn piece_continuity() -> Result<(), String> {
    for b in [int(1), int(3), rat(1, 2), rat(5, 7), rat(9, 4)] {
        let (l, r) = p1p1_adjacent_pieces(&b, &(&b * int(2))).ok_or("b = 2a not detected")?;
        if l != r || l != breakpoint_value_p1p1(&b) {
            return Err(format!("p1xp1 at a = {b}: {l} / {r}"));
        }
        // the a = 2b and a = 3b breakpoints, plus a = 3b/2
        for t in blp2_breakpoints() {
            let a = &t * &b;
            let (k, l, r) = blp2_adjacent_pieces(&a, &b).ok_or("breakpoint not detected")?;
            if l != r || l != breakpoint_value_blp2(k, &b) {
                return Err(format!("bl_p2 at a/b = {t}, b = {b}: {l} / {r}"));
            }
        }
        let expected = [rat(5, 12) / &b, rat(11, 36) / &b];
        let got = [
            blp2_adjacent_pieces(&(&b * int(2)), &b).unwrap().1,
            blp2_adjacent_pieces(&(&b * int(3)), &b).unwrap().1,
        ];
        if got != expected {
            return Err(format!("bl_p2 breakpoint values at b = {b}: {got:?}"));
        }
    }
    Ok(())
}

fn scaling() -> Result<(), String> {
    for name in BUILTIN_NAMES {
        let v = builtin(name);
        let classes = scaling_classes(name);
        if classes.len() < 5 {
            return Err(format!("{name}: only {} classes", classes.len()));
        }
        for c in classes {
            let d = v.standard_class(&c).unwrap();
            let r = scaling_check(&v, &d, &scaling_factors()).map_err(|e| e.to_string())?;
            if !r.pass || r.checks.len() != 4 {
                return Err(format!("{name}: {:?}", r.failures().next()));
            }
        }
    }
    Ok(())
}

fn convergence() -> Result<(), String> {
    for name in BUILTIN_NAMES {
        let v = builtin(name);
        for c in sample_classes(name) {
            for (p, e_max) in CONVERGENCE_LEVELS {
                let d = v.standard_class(&ints(&c)).unwrap();
                let conv = convergence_report(&v.fan, &d, p, e_max).map_err(|e| e.to_string())?;
                if conv.rows.len() != e_max as usize {
                    return Err(format!("{name} {c:?} p={p}: {} levels", conv.rows.len()));
                }
                let o1 = c == [1] && name.starts_with('p') && name.len() == 2;
                if o1 {
                    for row in &conv.rows {
                        let generic = p.pow(row.report.e * (v.dim() as u32 + 1));
                        if row.report.a_e != generic || !row.error.is_zero() {
                            return Err(format!("{name} O(1) p={p} e={}: a_e = {}", row.report.e, row.report.a_e));
                        }
                    }
                } else if conv.first_error().is_zero() {
                    if conv.rows.iter().any(|r| !r.error.is_zero()) {
                        return Err(format!("{name} {c:?} p={p}: exact at e=1 but not later"));
                    }
                } else if conv.last_error() >= conv.first_error() {
                    return Err(format!(
                        "{name} {c:?} p={p}: error {} at e={e_max} vs {} at e=1",
                        conv.last_error(),
                        conv.first_error()
                    ));
                }
            }
        }
    }
    let p1 = builtin("p1");
    let a1 = free_rank(&p1.fan, &p1.standard_class(&ints(&[2])).unwrap(), 3, 1).unwrap().a_e;
    if a1 != 5 {
        return Err(format!("a_1(P1, O(2), 3) = {a1}"));
    }
    Ok(())
}

fn degree_bounds() -> Result<(), String> {
    let r = degree_suite(&[2, 3], 3).map_err(|e| e.to_string())?;
    if !r.pass {
        return Err(format!("{:?}", r.failures().next()));
    }
    let p1 = builtin("p1");
    let o1 = p1.standard_class(&ints(&[1])).unwrap();
    let deg = max_splitting_degree(&p1.fan, &o1, 2, 1).unwrap();
    let oracle = vanishing_degree_oracle(&p1.fan, &o1, 2, 1).unwrap();
    if (deg, oracle) != (2, 2) {
        return Err(format!("P1 O(1) p=2 e=1: {deg}, {oracle}"));
    }
    Ok(())
}

fn local_bound() -> Result<(), String> {
    for name in ["p1xp1", "bl_p2"] {
        let v = builtin(name);
        let basis = v.ample_basis().unwrap();
        if !basis.all_ample_and_globally_generated() {
            return Err(format!("{name}: documented basis is not ample"));
        }
        let grid = bound_grid();
        if grid.len() < 25 {
            return Err(format!("{name}: {} points", grid.len()));
        }
        let r = local_upper_bound_check(&v.fan, &basis, &grid).map_err(|e| e.to_string())?;
        let local = r.checks.iter().filter(|c| c.name == "local_bound").count();
        if !r.pass || local != grid.len() {
            return Err(format!("{name}: {:?}", r.failures().next()));
        }
    }
    Ok(())
}

fn nef_boundary() -> Result<(), String> {
    let blp2 = builtin("bl_p2");
    let p1p1 = builtin("p1xp1");
    let cases: [(&Variety, [i64; 2], [i64; 2], Rational); 4] = [
        (&blp2, [1, 1], [1, 0], int(0)),
        (&blp2, [1, 1], [2, 1], int(0)),
        (&p1p1, [1, 0], [1, 1], int(0)),
        (&blp2, [1, 0], [2, 1], rat(1, 2)),
    ];
    for (v, target, dir, expected) in cases {
        let t: TDivisor = v.standard_class(&ints(&target)).unwrap();
        let a = v.standard_class(&ints(&dir)).unwrap();
        let lim = boundary_limit(&v.fan, &t, &a, DEFAULT_HALVINGS).map_err(|e| e.to_string())?;
        if (&lim.extrapolated - &expected).abs() > boundary_tolerance() {
            return Err(format!("{} {target:?}: {} vs {expected}", v.name(), lim.extrapolated));
        }
    }
    Ok(())
}

fn lipschitz() -> Result<(), String> {
    for (name, center) in [("bl_p2", [2, 1]), ("p1xp1", [1, 1])] {
        let v = builtin(name);
        let prof = lipschitz_profile(&v.fan, &v.standard_basis().unwrap(), &ints(&center), &rat(1, 4), &rat(1, 8))
            .map_err(|e| e.to_string())?;
        if prof.pairs == 0 || !prof.is_stable() {
            return Err(format!("{name}: {prof:?}"));
        }
    }
    Ok(())
}

fn key_inequality() -> Result<(), String> {
    for name in ["bl_p2", "p1xp1"] {
        let v = builtin(name);
        let basis = v.ample_basis().unwrap();
        let instances = key_instances(name);
        if instances.len() < 2 {
            return Err(format!("{name}: {} instances", instances.len()));
        }
        let classes: Vec<TDivisor> = bound_grid().iter().map(|c| basis.combine(c)).collect();
        let c1 = empirical_c1(&v.fan, &basis, &classes).map_err(|e| e.to_string())?;
        let r = key_inequality_check(&v.fan, &basis, &instances, &c1).map_err(|e| e.to_string())?;
        if !r.pass || !r.notes.iter().any(|n| n.contains("C1 =")) {
            return Err(format!("{name}: {:?}", r.failures().next()));
        }
    }
    Ok(())
}

fn determinism() -> Result<(), String> {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_fsig"))
            .args(["check", "--suite", "all"])
            .output()
            .map_err(|e| e.to_string())
    };
    let first = run()?;
    let second = run()?;
    if !first.status.success() || !second.status.success() {
        return Err(format!(
            "exit {:?}/{:?}: {}",
            first.status.code(),
            second.status.code(),
            String::from_utf8_lossy(&first.stderr)
        ));
    }
    if first.stdout != second.stdout || first.stdout.is_empty() {
        return Err("reports differ between runs".into());
    }
    Ok(())
}

type Criterion = (&'static str, fn() -> Result<(), String>);

fn main() {
    let criteria: [Criterion; 10] = [
        ("closed-form reproduction", closed_forms),
        ("piece continuity", piece_continuity),
        ("scaling law", scaling),
        ("free-rank convergence", convergence),
        ("degree bounds", degree_bounds),
        ("local volume bound", local_bound),
        ("nef boundary limits", nef_boundary),
        ("Lipschitz profile", lipschitz),
        ("key inequality", key_inequality),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {:>2} {name}: PASS", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
