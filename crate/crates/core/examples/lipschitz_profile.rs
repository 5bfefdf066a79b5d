//! Empirical Lipschitz quotients around an ample class.
//!
//! ```bash
//! cargo run -p fsig --example lipschitz_profile
//! ```

use fsig::analysis::lipschitz::lipschitz_profile;
use fsig::geometry::{int, rat, to_decimal};
use fsig::toric::Variety;

fn main() -> fsig::Result<()> {
    for (name, center) in [("bl_p2", [2, 1]), ("p1xp1", [1, 1]), ("p1xp1", [2, 3])] {
        let v = Variety::builtin(name)?;
        let center = [int(center[0]), int(center[1])];
        for step in [rat(1, 4), rat(1, 8), rat(1, 16)] {
            let prof = lipschitz_profile(&v.fan, &v.standard_basis()?, &center, &rat(1, 4), &step)?;
            println!(
                "{name} ({},{})  h = {}  quotient {}  at h/2 {}  volume {}  stable {}",
                center[0],
                center[1],
                step,
                to_decimal(&prof.max_quotient, 6),
                to_decimal(&prof.max_quotient_half, 6),
                to_decimal(&prof.vol_max_quotient, 6),
                prof.is_stable()
            );
        }
    }
    match lipschitz_profile(&Variety::builtin("bl_p2")?.fan, &Variety::builtin("bl_p2")?.standard_basis()?, &[int(2), int(1)], &rat(1, 2), &rat(1, 8)) {
        Ok(_) => println!("radius 1/2 stays ample"),
        Err(e) => println!("radius 1/2 around (2,1): {e}"),
    }
    Ok(())
}
