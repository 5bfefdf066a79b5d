//! Upper volume bounds, the key inequality and the lower ratio data.
//!
//! ```bash
//! cargo run -p fsig --example volume_bounds
//! ```

use fsig::analysis::bounds::{empirical_c1, key_inequality, ratio_report};
use fsig::analysis::grid::{integer_grid, local_upper_bound};
use fsig::analysis::report::witness;
use fsig::analysis::suites::{bound_grid, key_instances};
use fsig::fsignature::fsignature;
use fsig::geometry::{format_rational, to_decimal};
use fsig::toric::{norm_sup, volume_of_divisor, Variety};

fn main() -> fsig::Result<()> {
    for name in ["p1xp1", "bl_p2"] {
        let v = Variety::builtin(name)?;
        let basis = v.ample_basis()?;
        let classes: Vec<_> = bound_grid().iter().map(|c| basis.combine(c)).collect();
        let c1 = empirical_c1(&v.fan, &basis, &classes)?;
        println!("{name}: {}", c1.describe());
        for coords in bound_grid().iter().take(4) {
            let d = basis.combine(coords);
            let s = fsignature(&v.fan, &d)?;
            let vol = volume_of_divisor(&v.fan, &d)?;
            let bound = local_upper_bound(v.dim(), &vol, &norm_sup(coords)).expect("norm at least 1");
            println!("  {}  s = {:>10}  bound {}", witness(coords), format_rational(&s), format_rational(&bound));
        }
        for inst in key_instances(name) {
            let sides = key_inequality(&v.fan, &basis, &inst, &c1.value)?;
            println!(
                "  key L={} H={} n={} b={}: {} <= {}",
                witness(&inst.l),
                witness(&inst.h),
                inst.n,
                inst.b,
                to_decimal(&sides.lhs, 6),
                to_decimal(&sides.rhs, 6)
            );
        }
        let r = ratio_report(&v.fan, &basis, &integer_grid(2, 1, 6))?;
        println!("  min s|L|^3/vol = {} at {}", format_rational(&r.min), witness(&r.argmin));
    }
    Ok(())
}
