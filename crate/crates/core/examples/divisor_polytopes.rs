//! Divisor polytopes, positivity and volumes on the builtin varieties.
//!
//! ```bash
//! cargo run -p fsig --example divisor_polytopes
//! ```

use fsig::geometry::format_rational;
use fsig::toric::divisor::format_divisor;
use fsig::toric::{divisor_polytope, is_ample, is_big, is_nef, volume_of_divisor, Variety};

fn main() -> fsig::Result<()> {
    let cases = [
        ("p2", "2H"),
        ("p1xp1", "A+2B"),
        ("bl_p2", "2H-E"),
        ("bl_p2", "H"),
        ("bl_p2", "H-E"),
        ("bl_p2", "H-2E"),
    ];
    for (name, text) in cases {
        let variety = Variety::builtin(name)?;
        let d = variety.parse_class(text)?;
        let fan = &variety.fan;
        println!(
            "{name} {text} = {}: nef {} ample {} big {}",
            format_divisor(&d),
            is_nef(fan, &d)?,
            is_ample(fan, &d)?,
            is_big(fan, &d)?
        );
        if !is_nef(fan, &d)? {
            continue;
        }
        let vertices: Vec<String> = divisor_polytope(fan, &d)?
            .vertex_enumeration()?
            .vertices
            .iter()
            .map(|v| format!("({})", v.iter().map(format_rational).collect::<Vec<_>>().join(",")))
            .collect();
        println!("  vertices {}  vol {}", vertices.join(" "), format_rational(&volume_of_divisor(fan, &d)?));
    }
    Ok(())
}
