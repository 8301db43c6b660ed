//! Gaussian quadrature rules for C⁰ and C¹ splines on the real line.
//!
//! Five families of rules integrate every spline of a given degree and
//! continuity on uniform integer knots exactly, with a period of one or two
//! intervals:
//!
//! | family            | degree    | period | nodes per period |
//! |-------------------|-----------|--------|------------------|
//! | C⁰ odd            | `2n − 1`  | 2      | `n + (n − 1)`    |
//! | C⁰ even           | `2n`      | 1      | `n`              |
//! | C¹ odd, endpoint  | `2n + 1`  | 1      | `n`              |
//! | C¹ odd, interior  | `2n + 1`  | 1      | `n`              |
//! | C¹ even           | `2n`      | 2      | `n + (n − 1)`    |
//!
//! Nodes are roots of finite Gegenbauer combinations and weights come from
//! closed-form expressions; no linear systems are solved.
//!
//! ```
//! use splinequad::{scaled_rule, Family};
//!
//! let rule = scaled_rule::<f64>(Family::C1OddEndpoint, 2).unwrap();
//! let entries = rule.entries();
//! assert_eq!(entries[0], (0.0, 7.0 / 15.0));
//! assert!((entries[1].0 - 0.5).abs() < 1e-15);
//! ```

pub mod assembly;
mod double_double;
pub mod error;
pub mod families;
pub mod gegenbauer;
pub mod real;
pub mod rootfind;
pub mod splinecheck;

pub use assembly::{
    assemble, reference_rule, replicate_periodically, scale_to_unit_intervals, scaled_c0_even,
    scaled_rule, ReferenceRule, RuleInterval, ScaledRule,
};
pub use error::Error;
pub use families::{Continuity, DeltaSign, Family, FamilySpec, Variant};
pub use real::{Extended, Real};
