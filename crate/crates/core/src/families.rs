//! Construction data for the five families of Gaussian spline quadrature
//! rules on the real line.
//!
//! Every rule is described on the reference interval `[−1, 1]`. Free nodes
//! are the roots of a Gegenbauer combination `R`, and the weight of a free
//! node `x` is
//!
//! ```text
//! w = A / (R'(x) · S(x) · f(x))
//! ```
//!
//! where `f` is the extra weight factor of the interval (see
//! [`WeightFactor`]). Endpoint nodes at `x = −1` carry closed-form weights.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::Error;
use crate::gegenbauer::{Coefficient, GegenbauerCombo, GegenbauerOrder};
use crate::real::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Continuity {
    C0,
    C1,
}

impl Continuity {
    /// Number of continuous derivatives at the breakpoints.
    pub fn order(self) -> usize {
        match self {
            Continuity::C0 => 0,
            Continuity::C1 => 1,
        }
    }
}

impl FromStr for Continuity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "c0" | "0" => Ok(Continuity::C0),
            "c1" | "1" => Ok(Continuity::C1),
            _ => Err(Error::InvalidParameter(format!(
                "unknown continuity class `{s}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

/// Distinguishes the two odd-degree C¹ rules. Meaningless elsewhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Default,
    /// Node at the interval end.
    Endpoint,
    /// All nodes strictly inside the interval.
    Interior,
}

/// Sign of the square root in the even-degree C⁰ family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DeltaSign {
    #[default]
    Plus,
    Minus,
}

/// One of the five rule families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// C⁰, degree `2n − 1`, two-interval "1/2 rule".
    C0Odd,
    /// C⁰, degree `2n`, one interval.
    C0Even,
    /// C¹, degree `2n + 1`, one interval, node at the interval end.
    C1OddEndpoint,
    /// C¹, degree `2n + 1`, one interval, interior nodes only.
    C1OddInterior,
    /// C¹, degree `2n`, two-interval "1/2 rule".
    C1Even,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::C0Odd,
        Family::C0Even,
        Family::C1OddEndpoint,
        Family::C1OddInterior,
        Family::C1Even,
    ];

    pub fn continuity(self) -> Continuity {
        match self {
            Family::C0Odd | Family::C0Even => Continuity::C0,
            _ => Continuity::C1,
        }
    }

    pub fn parity(self) -> Parity {
        match self {
            Family::C0Odd | Family::C1OddEndpoint | Family::C1OddInterior => Parity::Odd,
            Family::C0Even | Family::C1Even => Parity::Even,
        }
    }

    pub fn variant(self) -> Variant {
        match self {
            Family::C1OddEndpoint => Variant::Endpoint,
            Family::C1OddInterior => Variant::Interior,
            _ => Variant::Default,
        }
    }

    /// Stable lowercase identifier, e.g. `c1-odd-interior`.
    pub fn slug(self) -> &'static str {
        match self {
            Family::C0Odd => "c0-odd",
            Family::C0Even => "c0-even",
            Family::C1OddEndpoint => "c1-odd-endpoint",
            Family::C1OddInterior => "c1-odd-interior",
            Family::C1Even => "c1-even",
        }
    }

    pub fn period_intervals(self) -> usize {
        match self {
            Family::C0Odd | Family::C1Even => 2,
            _ => 1,
        }
    }

    /// Smallest admissible family index `n`.
    pub fn min_index(self) -> usize {
        match self {
            Family::C1Even => 2,
            _ => 1,
        }
    }

    /// Polynomial degree `D` of the spline space integrated exactly.
    pub fn degree(self, n: usize) -> usize {
        match self {
            Family::C0Odd => 2 * n - 1,
            Family::C0Even | Family::C1Even => 2 * n,
            Family::C1OddEndpoint | Family::C1OddInterior => 2 * n + 1,
        }
    }

    /// Total node count over one period.
    pub fn node_count(self, n: usize) -> usize {
        match self {
            Family::C0Odd | Family::C1Even => 2 * n - 1,
            _ => n,
        }
    }

    /// Resolves a user-facing `(class, degree, variant)` triple to a family
    /// and its index `n`.
    pub fn from_degree(
        continuity: Continuity,
        degree: usize,
        variant: Option<Variant>,
    ) -> Result<(Family, usize), Error> {
        let odd = degree % 2 == 1;
        let family = match (continuity, odd, variant) {
            (Continuity::C0, true, None | Some(Variant::Default)) => Family::C0Odd,
            (Continuity::C0, false, None | Some(Variant::Default)) => Family::C0Even,
            (Continuity::C1, true, None | Some(Variant::Default) | Some(Variant::Endpoint)) => {
                Family::C1OddEndpoint
            }
            (Continuity::C1, true, Some(Variant::Interior)) => Family::C1OddInterior,
            (Continuity::C1, false, None | Some(Variant::Default)) => Family::C1Even,
            (_, _, Some(v)) => {
                return Err(Error::InvalidParameter(format!(
                    "variant {v:?} exists only for odd-degree C1 rules"
                )))
            }
        };
        let n = match family {
            Family::C0Odd => degree.div_ceil(2),
            Family::C0Even | Family::C1Even => degree / 2,
            Family::C1OddEndpoint | Family::C1OddInterior => degree.saturating_sub(1) / 2,
        };
        if n < family.min_index() || family.degree(n) != degree {
            return Err(Error::InvalidParameter(format!(
                "no {} rule of degree {degree}",
                family.slug()
            )));
        }
        Ok((family, n))
    }

    /// Rule name in list-of-lists style, e.g. `C0xD7` or `C1xD9x2`.
    pub fn rule_name(self, n: usize) -> String {
        let class = self.continuity().order();
        let suffix = if self == Family::C1OddInterior {
            "x2"
        } else {
            ""
        };
        format!("C{class}xD{}{suffix}", self.degree(n))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

/// Extra factor in the free-node weight denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightFactor {
    One,
    /// `(1 − x²)²`
    OneMinusXSquaredSquared,
    /// `(1 + x)(1 − x)²`
    OnePlusXOneMinusXSquared,
}

impl WeightFactor {
    pub fn eval<T: Real>(self, x: T) -> T {
        let one = T::one();
        match self {
            WeightFactor::One => one,
            WeightFactor::OneMinusXSquaredSquared => {
                let t = one - x * x;
                t * t
            }
            WeightFactor::OnePlusXOneMinusXSquared => {
                let t = one - x;
                (one + x) * t * t
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedNode<T> {
    pub x: T,
    pub w: T,
}

/// One interval of a rule in reference coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalSpec<T> {
    pub r: GegenbauerCombo<T>,
    pub s: GegenbauerCombo<T>,
    pub a: T,
    pub fixed_node: Option<FixedNode<T>>,
    pub weight_factor: WeightFactor,
    /// Number of roots of `r` inside `[−1, 1]`.
    pub expected_free_nodes: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum IntervalDef<T> {
    Explicit(IntervalSpec<T>),
    /// Free nodes of the first interval mirrored at 0, same weights.
    ReflectionOfFirst,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilySpec<T> {
    pub family: Family,
    pub n: usize,
    pub degree: usize,
    /// Signed δ; zero for families without one.
    pub delta: T,
    /// Exact `δ²`, when the family uses δ.
    pub delta_squared: Option<Ratio<i128>>,
    pub intervals: Vec<IntervalDef<T>>,
}

impl<T: Real> FamilySpec<T> {
    pub fn period_intervals(&self) -> usize {
        self.intervals.len()
    }

    pub fn second_interval_by_reflection(&self) -> bool {
        self.intervals
            .iter()
            .any(|i| matches!(i, IntervalDef::ReflectionOfFirst))
    }

    /// Builds the spec for any family and admissible index, using the
    /// default δ sign.
    pub fn build(family: Family, n: usize) -> Result<Self, Error> {
        match family {
            Family::C0Odd => build_c0_odd(n),
            Family::C0Even => build_c0_even(n, DeltaSign::Plus),
            Family::C1OddEndpoint => build_c1_endpoint(n),
            Family::C1OddInterior if n == 1 => Ok(c1_interior_midpoint()),
            Family::C1OddInterior => build_c1_interior(n),
            Family::C1Even => build_c1_even(n),
        }
    }
}

fn int<T: Real>(v: i128) -> T {
    T::from_i128(v)
}

fn require_index(n: usize, min: usize, what: &str) -> Result<i128, Error> {
    if n < min {
        return Err(Error::InvalidParameter(format!(
            "{what} requires n >= {min}, got {n}"
        )));
    }
    Ok(n as i128)
}

fn signed_sqrt<T: Real>(radicand: Ratio<i128>, sign: DeltaSign) -> T {
    let root = T::from_ratio(*radicand.numer(), *radicand.denom()).sqrt();
    match sign {
        DeltaSign::Plus => root,
        DeltaSign::Minus => -root,
    }
}

/// C⁰, odd degree `2n − 1`, period two: `n` nodes in the first interval and
/// `n − 1` in the second.
pub fn build_c0_odd<T: Real>(n: usize) -> Result<FamilySpec<T>, Error> {
    let k = require_index(n, 1, "C0 odd-degree rule")?;
    let order = GegenbauerOrder::THREE_HALVES;
    let nn = n as i64;

    let first = IntervalSpec {
        r: GegenbauerCombo::new(order)
            .constant_term(nn, int(k * k))
            .constant_term(nn - 2, int(-(k + 1) * (k + 1))),
        s: GegenbauerCombo::new(order)
            .constant_term(nn - 1, int(k))
            .term(nn - 2, Coefficient::times_x(int(-(k + 1)))),
        a: int(2 * (k + 1) * (2 * k + 1) * k * k),
        fixed_node: None,
        weight_factor: WeightFactor::One,
        expected_free_nodes: n,
    };
    let second = IntervalSpec {
        r: GegenbauerCombo::new(order).constant_term(nn - 1, T::one()),
        s: GegenbauerCombo::new(order)
            .constant_term(nn - 2, int(2 * k - 1))
            .term(nn - 3, Coefficient::times_x(int(-k))),
        a: int(2 * k * (2 * k - 1)),
        fixed_node: None,
        weight_factor: WeightFactor::One,
        expected_free_nodes: n - 1,
    };
    Ok(FamilySpec {
        family: Family::C0Odd,
        n,
        degree: Family::C0Odd.degree(n),
        delta: T::zero(),
        delta_squared: None,
        intervals: vec![IntervalDef::Explicit(first), IntervalDef::Explicit(second)],
    })
}

/// C⁰, even degree `2n`, period one. The two signs of δ give mirror-image
/// rules.
pub fn build_c0_even<T: Real>(n: usize, sign: DeltaSign) -> Result<FamilySpec<T>, Error> {
    let k = require_index(n, 1, "C0 even-degree rule")?;
    let order = GegenbauerOrder::THREE_HALVES;
    let nn = n as i64;
    let delta_squared = Ratio::new(k + 2, k);
    let delta: T = signed_sqrt(delta_squared, sign);

    let interval = IntervalSpec {
        r: GegenbauerCombo::new(order)
            .constant_term(nn, T::one())
            .constant_term(nn - 1, delta),
        s: GegenbauerCombo::new(order)
            .term(
                nn - 1,
                Coefficient::new(int(2 * k + 1), delta * int(k), T::zero()),
            )
            .term(nn - 2, Coefficient::times_x(int(-(k + 1)))),
        a: int(2 * (k + 1) * (2 * k + 1)),
        fixed_node: None,
        weight_factor: WeightFactor::One,
        expected_free_nodes: n,
    };
    Ok(FamilySpec {
        family: Family::C0Even,
        n,
        degree: Family::C0Even.degree(n),
        delta,
        delta_squared: Some(delta_squared),
        intervals: vec![IntervalDef::Explicit(interval)],
    })
}

/// C¹, odd degree `2n + 1`, period one, with a node at `x = −1`.
pub fn build_c1_endpoint<T: Real>(n: usize) -> Result<FamilySpec<T>, Error> {
    let k = require_index(n, 1, "C1 odd-degree endpoint rule")?;
    let order = GegenbauerOrder::FIVE_HALVES;
    let nn = n as i64;

    let interval = IntervalSpec {
        r: GegenbauerCombo::new(order).constant_term(nn - 1, T::one()),
        s: GegenbauerCombo::new(order).constant_term(nn - 2, T::one()),
        a: T::from_ratio(2 * k * (k + 1) * (k + 2), 9),
        fixed_node: Some(FixedNode {
            x: -T::one(),
            w: T::from_ratio(
                16 * (2 * k * k + 6 * k + 1),
                3 * k * (k + 1) * (k + 2) * (k + 3),
            ),
        }),
        weight_factor: WeightFactor::OneMinusXSquaredSquared,
        expected_free_nodes: n - 1,
    };
    Ok(FamilySpec {
        family: Family::C1OddEndpoint,
        n,
        degree: Family::C1OddEndpoint.degree(n),
        delta: T::zero(),
        delta_squared: None,
        intervals: vec![IntervalDef::Explicit(interval)],
    })
}

/// C¹, odd degree `2n + 1`, period one, all nodes interior.
pub fn build_c1_interior<T: Real>(n: usize) -> Result<FamilySpec<T>, Error> {
    build_c1_interior_with_sign(n, DeltaSign::Plus)
}

/// Same as [`build_c1_interior`] but lets the caller pick the sign of δ.
/// Only the positive sign yields a rule; the negative one pushes roots of
/// `R` out of `[−1, 1]` and exists for diagnostics.
pub fn build_c1_interior_with_sign<T: Real>(
    n: usize,
    sign: DeltaSign,
) -> Result<FamilySpec<T>, Error> {
    let k = require_index(n, 2, "C1 odd-degree interior rule")?;
    let order = GegenbauerOrder::FIVE_HALVES;
    let nn = n as i64;
    let delta_squared = Ratio::new(3 * (k * k + 3 * k - 1), k * (k + 3));
    let delta: T = signed_sqrt(delta_squared, sign);

    let p = 2 * k * k + 2 * k - 3;
    let q = 2 * k * k + 6 * k + 1;
    let r = GegenbauerCombo::new(order)
        .constant_term(nn, int((k - 1) * p))
        .constant_term(
            nn - 2,
            int::<T>(-(k + 3))
                * (int::<T>(2 * k * k + 6 * k + 7) - int::<T>(2 * (2 * k + 3)) * delta),
        );
    let s = GegenbauerCombo::new(order)
        .term(
            nn - 1,
            Coefficient::times_one_plus_x_squared(
                int::<T>(k) * (int::<T>(6 * k * k + 6 * k - 3) + int::<T>(2 * (2 * k + 1)) * delta),
            ),
        )
        .term(nn - 2, Coefficient::times_x(int(-4 * (2 * k + 1) * q)))
        .term(
            nn - 3,
            Coefficient::times_one_plus_x_squared(int((k + 2) * q)),
        );
    let a = T::from_ratio(
        2 * (k - 1) * (k + 1) * (k + 2) * (2 * k + 1) * (2 * k + 3) * p * q,
        9,
    );

    let interval = IntervalSpec {
        r,
        s,
        a,
        fixed_node: None,
        weight_factor: WeightFactor::One,
        expected_free_nodes: n,
    };
    Ok(FamilySpec {
        family: Family::C1OddInterior,
        n,
        degree: Family::C1OddInterior.degree(n),
        delta,
        delta_squared: Some(delta_squared),
        intervals: vec![IntervalDef::Explicit(interval)],
    })
}

/// The `n = 1` interior rule: the closed form degenerates (`R ≡ 0`), and the
/// rule is the midpoint rule.
pub fn c1_interior_midpoint<T: Real>() -> FamilySpec<T> {
    let order = GegenbauerOrder::FIVE_HALVES;
    let interval = IntervalSpec {
        r: GegenbauerCombo::new(order),
        s: GegenbauerCombo::new(order),
        a: T::zero(),
        fixed_node: Some(FixedNode {
            x: T::zero(),
            w: T::from_f64(2.0),
        }),
        weight_factor: WeightFactor::One,
        expected_free_nodes: 0,
    };
    FamilySpec {
        family: Family::C1OddInterior,
        n: 1,
        degree: Family::C1OddInterior.degree(1),
        delta: T::zero(),
        delta_squared: None,
        intervals: vec![IntervalDef::Explicit(interval)],
    }
}

/// C¹, even degree `2n`, period two: a node at `x = −1` plus `n − 1` free
/// nodes in the first interval, their mirror images in the second.
pub fn build_c1_even<T: Real>(n: usize) -> Result<FamilySpec<T>, Error> {
    let k = require_index(n, 2, "C1 even-degree rule")?;
    let order = GegenbauerOrder::FIVE_HALVES;
    let nn = n as i64;
    let m = k * k + 2 * k - 2;
    let delta_squared = Ratio::from_integer(3 * k * (k + 2) * m);
    let delta: T = signed_sqrt(delta_squared, DeltaSign::Plus);

    let p = 2 * k * k + 2 * k - 3;
    let two = T::from_f64(2.0);
    let r = GegenbauerCombo::new(order)
        .constant_term(nn - 1, int((k - 1) * p))
        .constant_term(nn - 2, two * delta + int(3 - k - 6 * k * k - 2 * k * k * k));
    let s = GegenbauerCombo::new(order)
        .constant_term(
            nn - 2,
            int::<T>(3 * (k + 2) * (2 * k * k - 1)) - two * delta,
        )
        .constant_term(nn - 3, int((k + 2) * p));
    let a = T::from_ratio(2 * (k - 1) * k * (k + 1) * (k + 2) * (2 * k + 1) * p * p, 9);
    let w1 = int::<T>(8 * (2 * k * k + 4 * k - 3))
        * (int::<T>(2 * k.pow(4) + 8 * k.pow(3) + 4 * k * k - 8 * k - 3) - delta)
        / int::<T>(3 * (k - 1) * k * (k + 2) * (k + 3) * m * (k + 1) * (k + 1));

    let first = IntervalSpec {
        r,
        s,
        a,
        fixed_node: Some(FixedNode {
            x: -T::one(),
            w: w1,
        }),
        weight_factor: WeightFactor::OnePlusXOneMinusXSquared,
        expected_free_nodes: n - 1,
    };
    Ok(FamilySpec {
        family: Family::C1Even,
        n,
        degree: Family::C1Even.degree(n),
        delta,
        delta_squared: Some(delta_squared),
        intervals: vec![IntervalDef::Explicit(first), IntervalDef::ReflectionOfFirst],
    })
}
