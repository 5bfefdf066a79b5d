//! The volume engine against the piecewise formulas on both surfaces.
//!
//! ```bash
//! cargo run -p fsig --example closed_forms
//! ```

use fsig::analysis::closed_form::{closed_form_blp2, closed_form_p1p1};
use fsig::fsignature::fsignature;
use fsig::geometry::{format_rational, int, Rational};
use fsig::toric::Variety;

fn table(variety: &Variety, formula: fn(&Rational, &Rational) -> fsig::Result<Rational>, pairs: &[(i64, i64)]) -> fsig::Result<()> {
    println!("{}", variety.name());
    for &(a, b) in pairs {
        let (a, b) = (int(a), int(b));
        let engine = fsignature(&variety.fan, &variety.standard_class(&[a.clone(), b.clone()])?)?;
        let closed = formula(&a, &b)?;
        let mark = if engine == closed { "ok" } else { "MISMATCH" };
        println!(
            "  ({}, {})  engine {:>8}  formula {:>8}  {mark}",
            format_rational(&a),
            format_rational(&b),
            format_rational(&engine),
            format_rational(&closed)
        );
    }
    Ok(())
}

fn main() -> fsig::Result<()> {
    table(&Variety::builtin("p1xp1")?, closed_form_p1p1, &[(1, 1), (1, 2), (2, 3), (3, 2), (1, 4), (5, 3)])?;
    table(&Variety::builtin("bl_p2")?, closed_form_blp2, &[(2, 1), (3, 1), (5, 1), (3, 2), (5, 2), (7, 3)])?;
    Ok(())
}
