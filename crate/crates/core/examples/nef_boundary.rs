//! Limits of the F-signature at the boundary of the ample cone.
//!
//! ```bash
//! cargo run -p fsig --example nef_boundary
//! ```

use fsig::analysis::boundary::{boundary_limit, DEFAULT_HALVINGS};
use fsig::fsignature::nef_extension;
use fsig::geometry::{format_rational, to_decimal};
use fsig::toric::Variety;

fn main() -> fsig::Result<()> {
    let cases = [
        ("bl_p2", "H", "2H-E"),
        ("bl_p2", "2H", "2H-E"),
        ("bl_p2", "H-E", "H"),
        ("bl_p2", "2H-2E", "3H-E"),
        ("p1xp1", "A", "A+B"),
    ];
    for (name, target, direction) in cases {
        let v = Variety::builtin(name)?;
        let d0 = v.parse_class(target)?;
        let lim = boundary_limit(&v.fan, &d0, &v.parse_class(direction)?, DEFAULT_HALVINGS)?;
        println!("{name}: {target} along {direction}");
        for (lambda, s) in lim.samples.iter().rev().take(3) {
            println!("  lambda {:>6}  s = {}", format_rational(lambda), to_decimal(s, 8));
        }
        println!(
            "  extrapolated {}  ray-form box {}",
            to_decimal(&lim.extrapolated, 8),
            format_rational(&nef_extension(&v.fan, &d0)?)
        );
    }
    Ok(())
}
