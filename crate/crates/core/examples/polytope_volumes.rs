//! Exact volumes and lattice counts of rational polytopes.
//!
//! ```bash
//! cargo run -p fsig --example polytope_volumes
//! ```

use fsig::geometry::{format_rational, int, rat, HPolytope, TriangulationApex};

fn main() -> fsig::Result<()> {
    let hexagon: Vec<_> = [[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]]
        .iter()
        .map(|p| vec![int(p[0]), int(p[1])])
        .collect();
    let p = HPolytope::from_vertices(2, &hexagon)?;
    println!("hexagon: {} facets", p.irredundant()?.forms().len());
    println!("  volume (first vertex) = {}", format_rational(&p.volume_with(TriangulationApex::FirstVertex)?));
    println!("  volume (barycenter)   = {}", format_rational(&p.volume_with(TriangulationApex::Barycenter)?));
    for m in [1, 2, 4, 8] {
        let count = p.dilate(&int(m))?.count_lattice_points()?;
        println!("  {m}P has {count} lattice points");
    }

    let cube = HPolytope::cube(&[int(0), int(0), int(0)], &[rat(1, 2), int(1), rat(3, 2)])?;
    println!("box [0,1/2]x[0,1]x[0,3/2]: volume {}", format_rational(&cube.volume()?));
    for v in cube.vertex_enumeration()?.vertices.iter().take(3) {
        let v: Vec<String> = v.iter().map(format_rational).collect();
        println!("  vertex ({})", v.join(", "));
    }
    Ok(())
}
