//! Independent verification of generated rules: a Cox–de Boor B-spline
//! oracle with exact integrals, a spline-exactness checker, and comparison
//! against reference tables.

mod bspline;
mod exactness;
mod golden;

pub use bspline::{eval_bspline, exact_bspline_integral, exact_bspline_integral_ratio, KnotVector};
pub use exactness::{
    check_exactness, check_exactness_in, ExactnessReport, SplineSpace, DEFAULT_COPIES,
};
pub use golden::{
    bundled_golden, compare_golden, load_golden, parse_golden, GoldenComparison, GoldenRule,
};
