//! Polarized toric varieties: fans, torus-invariant divisors, positivity,
//! divisor polytopes and class coordinates.

pub mod catalog;
pub mod classes;
pub mod divisor;
pub mod fan;

pub use catalog::Variety;
pub use classes::{class_coordinates, norm_sup, NSBasis};
pub use divisor::{
    canonical_divisor, cone_facet_normals, divisor_polytope, is_ample, is_big, is_effective,
    is_globally_generated, is_nef, volume_of_divisor, TDivisor,
};
pub use fan::Fan;
