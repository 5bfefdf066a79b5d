//! Desk-scale certification: closed forms, scaling, Lipschitz profiles,
//! nef-boundary limits, volume bounds and the key inequality.

pub mod boundary;
pub mod bounds;
pub mod closed_form;
pub mod grid;
pub mod lipschitz;
pub mod report;
pub mod suites;

pub use boundary::{boundary_limit, BoundaryLimit};
pub use bounds::{empirical_c1, key_inequality_check, local_upper_bound_check, ratio_report, KeyInstance};
pub use closed_form::{closed_form_blp2, closed_form_p1p1};
pub use grid::{evaluate_grid, GridRow, GridSpec, PointKind};
pub use lipschitz::{lipschitz_profile, LipschitzProfile};
pub use report::{CheckReport, ReportSet};
pub use suites::{run_suite, SuiteOptions, SUITES};
