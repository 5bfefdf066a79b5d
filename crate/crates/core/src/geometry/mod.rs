//! Exact rational geometry: linear algebra, half-space polytopes, vertex
//! enumeration, volumes and lattice points.

pub mod linalg;
pub mod polytope;
pub mod rational;

pub use linalg::{primitive, solve_affine, Vector};
pub use polytope::{AffineForm, HPolytope, TriangulationApex, VRep};
pub use rational::{format_rational, int, parse_rational, rat, to_decimal, Rational};
