//! Real roots of Gegenbauer combinations on a closed interval.
//!
//! Roots are isolated by sign changes on a Chebyshev grid and then polished
//! by safeguarded Newton iteration. The number of roots is known in advance
//! for every family, so a count mismatch is reported instead of guessed
//! around.

use crate::error::Error;
use crate::gegenbauer::GegenbauerCombo;
use crate::real::Real;

#[derive(Debug, Clone, PartialEq)]
pub struct RootSet<T> {
    /// Strictly increasing.
    pub roots: Vec<T>,
    /// `|p(root)|` for each root.
    pub residuals: Vec<T>,
    pub interval: (T, T),
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Bracket<T> {
    Exact(T),
    SignChange(T, T),
}

/// Chebyshev extreme points of `[lo, hi]`, ascending, endpoints included.
fn chebyshev_grid<T: Real>(lo: T, hi: T, points: usize) -> Vec<T> {
    let mid = (lo + hi) / T::from_f64(2.0);
    let half = (hi - lo) / T::from_f64(2.0);
    let last = points - 1;
    (0..points)
        .map(|k| {
            if k == 0 {
                lo
            } else if k == last {
                hi
            } else {
                let theta = std::f64::consts::PI * (last - k) as f64 / last as f64;
                mid + half * T::from_f64(theta.cos())
            }
        })
        .collect()
}

fn brackets<T: Real>(p: &GegenbauerCombo<T>, grid: &[T]) -> Vec<Bracket<T>> {
    let zero = T::zero();
    let mut out = Vec::new();
    let mut prev: Option<(T, T)> = None;
    for &x in grid {
        let v = p.value(x);
        if v == zero {
            out.push(Bracket::Exact(x));
            prev = None;
            continue;
        }
        if let Some((px, pv)) = prev {
            if (pv < zero) != (v < zero) {
                out.push(Bracket::SignChange(px, x));
            }
        }
        prev = Some((x, v));
    }
    out
}

/// Finds exactly `expected_count` simple roots of `p` in `[lo, hi]`.
///
/// The isolation grid has `max(64, 8·expected_count)` Chebyshev points and
/// is densified once by 4× before giving up with
/// [`Error::CountMismatch`].
pub fn isolate_and_refine<T: Real>(
    p: &GegenbauerCombo<T>,
    lo: T,
    hi: T,
    expected_count: usize,
) -> Result<RootSet<T>, Error> {
    if p.is_zero() {
        if expected_count == 0 {
            return Ok(RootSet {
                roots: Vec::new(),
                residuals: Vec::new(),
                interval: (lo, hi),
            });
        }
        return Err(Error::InvalidParameter(
            "cannot isolate roots of the zero polynomial".into(),
        ));
    }
    let base = (8 * expected_count).max(64);
    let mut found = Vec::new();
    for points in [base, 4 * base] {
        found = brackets(p, &chebyshev_grid(lo, hi, points));
        if found.len() == expected_count {
            break;
        }
    }
    if found.len() != expected_count {
        return Err(Error::CountMismatch {
            expected: expected_count,
            found: found.len(),
            lo: lo.to_f64(),
            hi: hi.to_f64(),
        });
    }
    let roots: Vec<T> = found
        .into_iter()
        .map(|b| match b {
            Bracket::Exact(x) => Ok(x),
            Bracket::SignChange(a, b) => refine_root(p, (a, b)),
        })
        .collect::<Result<_, _>>()?;
    let residuals = roots.iter().map(|&x| p.value(x).abs()).collect();
    Ok(RootSet {
        roots,
        residuals,
        interval: (lo, hi),
    })
}

/// Polishes the root inside a sign-change bracket with Newton steps,
/// falling back to bisection whenever a step leaves the bracket.
pub fn refine_root<T: Real>(p: &GegenbauerCombo<T>, bracket: (T, T)) -> Result<T, Error> {
    let zero = T::zero();
    let half = T::from_f64(0.5);
    let (mut a, mut b) = if bracket.0 <= bracket.1 {
        bracket
    } else {
        (bracket.1, bracket.0)
    };
    let fa = p.value(a);
    let fb = p.value(b);
    if fa == zero {
        return Ok(a);
    }
    if fb == zero {
        return Ok(b);
    }
    let a_negative = fa < zero;
    if a_negative == (fb < zero) {
        return Err(Error::NoSignChange {
            lo: a.to_f64(),
            hi: b.to_f64(),
        });
    }

    let tolerance = T::from_f64(T::STEP_TOLERANCE);
    let mut x = (a + b) * half;
    for _ in 0..T::MAX_ITERATIONS {
        let (v, d) = p.eval(x);
        if v == zero {
            return Ok(x);
        }
        if (v < zero) == a_negative {
            a = x;
        } else {
            b = x;
        }
        let mut next = if d != zero { x - v / d } else { a };
        if !(next > a && next < b) {
            next = (a + b) * half;
        }
        let step = (next - x).abs();
        x = next;
        if step <= tolerance || a >= b {
            break;
        }
    }
    // Finish in the wider type so the result is the correctly rounded root
    // of the given coefficients rather than of their rounded evaluation.
    let wide = p.map(Real::widen);
    let mut y = x.widen();
    for _ in 0..2 {
        let (v, d) = wide.eval(y);
        if d == <T::Wide as Real>::zero() {
            break;
        }
        y -= v / d;
    }
    let polished = T::narrow(y);
    Ok(if polished >= a && polished <= b {
        polished
    } else {
        x
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        build_c1_interior_with_sign, DeltaSign, Family, FamilySpec, IntervalDef,
    };
    use crate::gegenbauer::GegenbauerOrder;
    use crate::real::Extended;

    fn combo(order: GegenbauerOrder, terms: &[(i64, f64)]) -> GegenbauerCombo<f64> {
        terms
            .iter()
            .fold(GegenbauerCombo::new(order), |c, &(d, v)| {
                c.constant_term(d, v)
            })
    }

    #[test]
    fn single_linear_root() {
        let p = combo(GegenbauerOrder::THREE_HALVES, &[(1, 1.0)]);
        let set = isolate_and_refine(&p, -1.0, 1.0, 1).unwrap();
        assert_eq!(set.roots, vec![0.0]);
    }

    #[test]
    fn quadratic_roots() {
        let p = combo(GegenbauerOrder::THREE_HALVES, &[(2, 4.0), (0, -9.0)]);
        let set = isolate_and_refine(&p, -1.0, 1.0, 2).unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((set.roots[0] + r).abs() <= 1e-16, "{:?}", set.roots);
        assert!((set.roots[1] - r).abs() <= 1e-16, "{:?}", set.roots);
        assert_eq!(set.interval, (-1.0, 1.0));
    }

    #[test]
    fn refine_examples() {
        let s3 = 3f64.sqrt();
        let p = combo(GegenbauerOrder::THREE_HALVES, &[(1, 1.0), (0, s3)]);
        let x = refine_root(&p, (-1.0, 0.0)).unwrap();
        assert!((x + 0.5773502691896258).abs() <= 2e-16);

        let c2 = combo(GegenbauerOrder::FIVE_HALVES, &[(2, 1.0)]);
        let x = refine_root(&c2, (0.0, 1.0)).unwrap();
        assert!((x - 0.3779644730092272).abs() <= 2e-16);

        let id = combo(GegenbauerOrder::THREE_HALVES, &[(1, 1.0 / 3.0)]);
        assert!(matches!(
            refine_root(&id, (0.5, 1.0)),
            Err(Error::NoSignChange { .. })
        ));
    }

    #[test]
    fn negative_delta_interior_rule_loses_roots() {
        let spec = build_c1_interior_with_sign::<f64>(2, DeltaSign::Minus).unwrap();
        let IntervalDef::Explicit(i) = &spec.intervals[0] else {
            unreachable!()
        };
        let err = isolate_and_refine(&i.r, -1.0, 1.0, 2).unwrap_err();
        assert!(
            matches!(err, Error::CountMismatch { expected: 2, .. }),
            "{err:?}"
        );
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        let p = GegenbauerCombo::<f64>::new(GegenbauerOrder::FIVE_HALVES);
        assert!(isolate_and_refine(&p, -1.0, 1.0, 1).is_err());
        assert!(isolate_and_refine(&p, -1.0, 1.0, 0)
            .unwrap()
            .roots
            .is_empty());
    }

    #[test]
    fn extended_refinement_goes_past_double() {
        let p = GegenbauerCombo::<Extended>::new(GegenbauerOrder::FIVE_HALVES)
            .constant_term(2, Extended::from_f64(1.0));
        let x = refine_root(&p, (Extended::from_f64(0.0), Extended::from_f64(1.0))).unwrap();
        let exact = Extended::from_ratio(1, 7).sqrt();
        assert!((x - exact).abs() < Extended::from_f64(1e-30));
    }

    #[test]
    fn counts_polish_and_determinism_for_all_families() {
        for family in Family::ALL {
            for n in family.min_index().max(2)..=50 {
                let spec = FamilySpec::<f64>::build(family, n).unwrap();
                for def in &spec.intervals {
                    let IntervalDef::Explicit(i) = def else {
                        continue;
                    };
                    let set = isolate_and_refine(&i.r, -1.0, 1.0, i.expected_free_nodes)
                        .unwrap_or_else(|e| panic!("{family} n={n}: {e}"));
                    assert_eq!(set.roots.len(), i.expected_free_nodes);
                    assert!(set.roots.windows(2).all(|w| w[0] < w[1]));
                    for (&x, &res) in set.roots.iter().zip(&set.residuals) {
                        assert!((-1.0..=1.0).contains(&x));
                        let (_, d) = i.r.eval(x);
                        assert!(res <= 1e-10 * d.abs().max(1.0), "{family} n={n} x={x}");
                    }
                    let again = isolate_and_refine(&i.r, -1.0, 1.0, i.expected_free_nodes).unwrap();
                    let bits =
                        |s: &RootSet<f64>| s.roots.iter().map(|r| r.to_bits()).collect::<Vec<_>>();
                    assert_eq!(bits(&set), bits(&again));
                }
            }
        }
    }
}
