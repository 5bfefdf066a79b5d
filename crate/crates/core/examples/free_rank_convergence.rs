//! Normalized Frobenius free ranks approaching the F-signature.
//!
//! ```bash
//! cargo run -p fsig --example free_rank_convergence
//! ```

use fsig::fsignature::convergence_report;
use fsig::geometry::{format_rational, int, to_decimal};
use fsig::toric::Variety;

fn main() -> fsig::Result<()> {
    let cases: [(&str, &[i64]); 6] = [
        ("p1", &[2]),
        ("p2", &[2]),
        ("p1xp1", &[1, 1]),
        ("p1xp1", &[1, 2]),
        ("bl_p2", &[2, 1]),
        ("bl_p2", &[3, 1]),
    ];
    for (name, coords) in cases {
        let variety = Variety::builtin(name)?;
        let coords: Vec<_> = coords.iter().map(|&c| int(c)).collect();
        let class = variety.standard_class(&coords)?;
        for (p, e_max) in [(2, 4), (3, 3)] {
            let report = convergence_report(&variety.fan, &class, p, e_max)?;
            println!(
                "{name} {:?}  p = {p}  s = {}",
                coords.iter().map(format_rational).collect::<Vec<_>>(),
                format_rational(&report.fsignature)
            );
            for row in &report.rows {
                println!(
                    "  e = {}  a_e = {:>7}  a_e/p^(e(d+1)) = {:>14}  error = {}",
                    row.report.e,
                    row.report.a_e,
                    to_decimal(&row.report.normalized, 8),
                    to_decimal(&row.error, 8)
                );
            }
            println!("  max p^e * error = {}", to_decimal(&report.scaled_error_bound, 6));
        }
    }
    Ok(())
}
