//! Spline exactness of a periodic rule, checked against the knot-difference
//! integral of every interior B-spline.

use crate::assembly::{replicate_periodically, ScaledRule};
use crate::families::Family;

use super::bspline::{eval_bspline, exact_bspline_integral, KnotVector};

/// Number of replicated periods used by the verification suites.
pub const DEFAULT_COPIES: usize = 6;

/// Degree and smoothness of the spline space a rule is tested against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplineSpace {
    pub degree: usize,
    pub continuity: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExactnessReport {
    pub family: Family,
    pub n: usize,
    pub space: SplineSpace,
    pub max_abs_error: f64,
    /// Basis index (in the replicated knot vector) of the worst function.
    pub worst_basis_index: usize,
    pub tested_basis_count: usize,
}

/// Tests the rule against the spline space it is built for.
pub fn check_exactness(rule: &ScaledRule<f64>, copies: usize) -> ExactnessReport {
    let space = SplineSpace {
        degree: rule.degree,
        continuity: rule.family.continuity().order(),
    };
    check_exactness_in(rule, copies, space)
}

/// Replicates the rule `copies` times and compares `Σ w_j B_i(x_j)` with
/// the exact integral for every basis function whose support stays at least
/// one breakpoint away from both ends of the replicated span.
pub fn check_exactness_in(
    rule: &ScaledRule<f64>,
    copies: usize,
    space: SplineSpace,
) -> ExactnessReport {
    let span = copies * rule.period_intervals();
    let kv = KnotVector::uniform(space.degree, space.continuity, span)
        .expect("rule degree exceeds its continuity");
    let points = replicate_periodically(rule, copies);

    let mut max_abs_error = 0.0f64;
    let mut worst_basis_index = 0;
    let mut tested = 0;
    for i in 0..kv.basis_count() {
        let (lo, hi) = kv.support(i).expect("index in range");
        if lo < 1 || hi > span as i64 - 1 {
            continue;
        }
        let (lo_f, hi_f) = (lo as f64, hi as f64);
        let approx: f64 = points
            .iter()
            .filter(|(x, _)| *x >= lo_f && *x <= hi_f)
            .map(|&(x, w)| w * eval_bspline(&kv, i, x).expect("index in range"))
            .sum();
        let error = (approx - exact_bspline_integral(&kv, i).expect("index in range")).abs();
        tested += 1;
        if error > max_abs_error || tested == 1 {
            max_abs_error = error;
            worst_basis_index = i;
        }
    }
    ExactnessReport {
        family: rule.family,
        n: rule.n,
        space,
        max_abs_error,
        worst_basis_index,
        tested_basis_count: tested,
    }
}
