//! Exact F-signature functions of polarized toric varieties.
//!
//! The F-signature of an ample class is the volume of the Frobenius box cut
//! out by the facet forms of the cone over the divisor polytope; the finite
//! free ranks are lattice counts in the dilated box. Everything is computed
//! in exact rational arithmetic.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod fsignature;
pub mod geometry;
pub mod toric;

pub use error::{Error, Result};
