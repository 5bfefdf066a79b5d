//! A variety read from JSON: the Hirzebruch surface F_2.
//!
//! ```bash
//! cargo run -p fsig --example custom_fan
//! ```

use fsig::fsignature::{free_rank, fsignature};
use fsig::geometry::{format_rational, to_decimal};
use fsig::toric::{is_ample, volume_of_divisor, Fan, TDivisor};

const F2: &str = r#"{
  "name": "hirzebruch_2",
  "dim": 2,
  "rays": [[1, 0], [0, 1], [-1, 2], [0, -1]],
  "max_cones": [[0, 1], [1, 2], [2, 3], [3, 0]]
}"#;

fn main() -> fsig::Result<()> {
    let fan = Fan::from_json(F2)?;
    println!("{}: {} rays, simplicial {}", fan.name, fan.num_rays(), fan.is_simplicial());
    for coeffs in [[0, 0, 1, 1], [0, 0, 1, 2], [0, 0, 2, 3], [0, 0, 1, 3]] {
        let d = TDivisor::from_ints(&coeffs);
        if !is_ample(&fan, &d)? {
            println!("  {coeffs:?} not ample");
            continue;
        }
        let s = fsignature(&fan, &d)?;
        let a2 = free_rank(&fan, &d, 2, 3)?;
        println!(
            "  {coeffs:?}  s = {} ({})  vol {}  a_3(p=2)/2^9 = {}",
            format_rational(&s),
            to_decimal(&s, 6),
            format_rational(&volume_of_divisor(&fan, &d)?),
            to_decimal(&a2.normalized, 6)
        );
    }
    Ok(())
}
