//! Uniform-breakpoint B-spline bases and their exact integrals.

use num_rational::Ratio;

use crate::error::Error;

/// Integer breakpoints `0..=M`, each repeated `degree − continuity` times,
/// so the spline space is `C^continuity` at every breakpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotVector {
    degree: usize,
    continuity: usize,
    breakpoints: usize,
    knots: Vec<i64>,
}

impl KnotVector {
    pub fn uniform(
        degree: usize,
        continuity: usize,
        last_breakpoint: usize,
    ) -> Result<Self, Error> {
        if degree <= continuity {
            return Err(Error::InvalidParameter(format!(
                "degree {degree} splines cannot be C{continuity} at a knot"
            )));
        }
        let multiplicity = degree - continuity;
        let knots = (0..=last_breakpoint as i64)
            .flat_map(|b| std::iter::repeat_n(b, multiplicity))
            .collect();
        Ok(Self {
            degree,
            continuity,
            breakpoints: last_breakpoint,
            knots,
        })
    }

    /// Builds a knot vector from an explicit nondecreasing knot list.
    pub fn from_knots(degree: usize, knots: Vec<i64>) -> Result<Self, Error> {
        if knots.len() < degree + 2 || knots.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidParameter(
                "knots must be nondecreasing with at least degree + 2 entries".into(),
            ));
        }
        let last = *knots.last().expect("nonempty") as usize;
        Ok(Self {
            degree,
            continuity: 0,
            breakpoints: last,
            knots,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn continuity(&self) -> usize {
        self.continuity
    }

    pub fn multiplicity(&self) -> usize {
        self.degree - self.continuity
    }

    /// Largest breakpoint `M`.
    pub fn last_breakpoint(&self) -> usize {
        self.breakpoints
    }

    pub fn knots(&self) -> &[i64] {
        &self.knots
    }

    pub fn basis_count(&self) -> usize {
        self.knots.len().saturating_sub(self.degree + 1)
    }

    /// `[t_i, t_{i+D+1}]`
    pub fn support(&self, i: usize) -> Result<(i64, i64), Error> {
        self.check_index(i)?;
        Ok((self.knots[i], self.knots[i + self.degree + 1]))
    }

    fn check_index(&self, i: usize) -> Result<(), Error> {
        if i < self.basis_count() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                size: self.basis_count(),
            })
        }
    }
}

/// Value of the `i`-th normalized B-spline at `x` by the Cox–de Boor
/// recursion.
pub fn eval_bspline(kv: &KnotVector, i: usize, x: f64) -> Result<f64, Error> {
    kv.check_index(i)?;
    let d = kv.degree;
    let t: Vec<f64> = kv.knots[i..=i + d + 1].iter().map(|&k| k as f64).collect();
    if x < t[0] || x > t[d + 1] {
        return Ok(0.0);
    }
    let last = *kv.knots.last().expect("nonempty") as f64;
    let mut n: Vec<f64> = (0..=d)
        .map(|j| {
            let inside = t[j] <= x && x < t[j + 1];
            // Close the final nonempty span so the basis is right-continuous
            // up to the end of the knot vector.
            let at_end = x == last && t[j + 1] == last && t[j] < t[j + 1];
            if inside || at_end {
                1.0
            } else {
                0.0
            }
        })
        .collect();
    for p in 1..=d {
        for j in 0..=(d - p) {
            let left = if t[j + p] > t[j] {
                (x - t[j]) / (t[j + p] - t[j]) * n[j]
            } else {
                0.0
            };
            let right = if t[j + p + 1] > t[j + 1] {
                (t[j + p + 1] - x) / (t[j + p + 1] - t[j + 1]) * n[j + 1]
            } else {
                0.0
            };
            n[j] = left + right;
        }
    }
    Ok(n[0])
}

/// `∫ B_{i,D} = (t_{i+D+1} − t_i) / (D + 1)` as an exact rational.
pub fn exact_bspline_integral_ratio(kv: &KnotVector, i: usize) -> Result<Ratio<i64>, Error> {
    let (lo, hi) = kv.support(i)?;
    Ok(Ratio::new(hi - lo, kv.degree as i64 + 1))
}

pub fn exact_bspline_integral(kv: &KnotVector, i: usize) -> Result<f64, Error> {
    let r = exact_bspline_integral_ratio(kv, i)?;
    Ok(*r.numer() as f64 / *r.denom() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn quadratic_bump_on_double_knots() {
        let kv = KnotVector::from_knots(2, vec![0, 0, 1, 1]).unwrap();
        assert_eq!(kv.basis_count(), 1);
        assert_relative_eq!(eval_bspline(&kv, 0, 0.5).unwrap(), 0.5, epsilon = 1e-15);
        assert_relative_eq!(
            eval_bspline(&kv, 0, 0.3).unwrap(),
            2.0 * 0.3 * 0.7,
            epsilon = 1e-15
        );
        assert_relative_eq!(exact_bspline_integral(&kv, 0).unwrap(), 1.0 / 3.0);
    }

    #[test]
    fn exact_integral_examples() {
        let kv = KnotVector::from_knots(2, vec![0, 1, 1, 2]).unwrap();
        assert_eq!(
            exact_bspline_integral_ratio(&kv, 0).unwrap(),
            Ratio::new(2, 3)
        );

        // Degree 5, C¹: multiplicity 4; the basis starting at the second
        // copy of a breakpoint spans two intervals.
        let kv = KnotVector::uniform(5, 1, 4).unwrap();
        let i = (0..kv.basis_count())
            .find(|&i| {
                let (a, b) = kv.support(i).unwrap();
                b - a == 2
            })
            .unwrap();
        assert_eq!(
            exact_bspline_integral_ratio(&kv, i).unwrap(),
            Ratio::new(1, 3)
        );
    }

    #[test]
    fn zero_outside_support() {
        let kv = KnotVector::uniform(3, 1, 5).unwrap();
        for i in 0..kv.basis_count() {
            let (lo, hi) = kv.support(i).unwrap();
            assert_eq!(eval_bspline(&kv, i, lo as f64 - 0.25).unwrap(), 0.0);
            assert_eq!(eval_bspline(&kv, i, hi as f64 + 0.25).unwrap(), 0.0);
        }
    }

    /// Uniform interior knots with the ends raised to multiplicity D + 1.
    fn clamped(d: usize, c: usize, m: usize) -> KnotVector {
        let kv = KnotVector::uniform(d, c, m).unwrap();
        let mut knots = vec![0; c + 1];
        knots.extend_from_slice(kv.knots());
        knots.extend(std::iter::repeat_n(m as i64, c + 1));
        KnotVector::from_knots(d, knots).unwrap()
    }

    #[test]
    fn partition_of_unity() {
        for (d, c) in [(2, 0), (3, 1), (4, 1), (7, 0)] {
            let kv = clamped(d, c, 4);
            for x in [0.0, 0.37, 1.0, 2.5, 3.99, 4.0] {
                let s: f64 = (0..kv.basis_count())
                    .map(|i| eval_bspline(&kv, i, x).unwrap())
                    .sum();
                assert_relative_eq!(s, 1.0, epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn index_out_of_range() {
        let kv = KnotVector::uniform(2, 0, 2).unwrap();
        let n = kv.basis_count();
        assert!(matches!(
            eval_bspline(&kv, n, 0.5),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(exact_bspline_integral(&kv, n).is_err());
    }

    #[test]
    fn continuity_needs_room() {
        assert!(KnotVector::uniform(1, 1, 3).is_err());
        assert_eq!(KnotVector::uniform(5, 1, 3).unwrap().multiplicity(), 4);
    }

    #[test]
    fn integrated_partition_of_unity_is_exact() {
        for d in 1..=15 {
            for c in 0..=1 {
                if d <= c {
                    continue;
                }
                let m = 7;
                let full = clamped(d, c, m);
                let total: Ratio<i64> = (0..full.basis_count())
                    .map(|i| exact_bspline_integral_ratio(&full, i).unwrap())
                    .sum();
                assert_eq!(total, Ratio::from_integer(m as i64), "D={d} c={c}");
            }
        }
    }
}
