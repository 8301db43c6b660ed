//! Gegenbauer (ultraspherical) polynomials of half-integer order and finite
//! linear combinations of them.

use crate::error::Error;
use crate::real::Real;

/// Half-integer Gegenbauer order `α = twice_alpha / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GegenbauerOrder {
    twice_alpha: u32,
}

impl GegenbauerOrder {
    /// Weight `(1 − x²)`.
    pub const THREE_HALVES: Self = Self { twice_alpha: 3 };
    /// Weight `(1 − x²)²`.
    pub const FIVE_HALVES: Self = Self { twice_alpha: 5 };
    pub const SEVEN_HALVES: Self = Self { twice_alpha: 7 };

    /// `twice_alpha` must be odd and positive.
    pub fn half_integer(twice_alpha: u32) -> Result<Self, Error> {
        if twice_alpha % 2 == 1 {
            Ok(Self { twice_alpha })
        } else {
            Err(Error::InvalidParameter(format!(
                "Gegenbauer order {twice_alpha}/2 is not a positive half-integer"
            )))
        }
    }

    pub fn twice_alpha(self) -> u32 {
        self.twice_alpha
    }

    pub fn alpha(self) -> f64 {
        f64::from(self.twice_alpha) / 2.0
    }

    /// `α + 1`, the order of the derivative polynomials.
    pub fn raised(self) -> Self {
        Self {
            twice_alpha: self.twice_alpha + 2,
        }
    }
}

/// Values `C_0(x), …, C_max(x)` by the forward three-term recurrence
/// `k·C_k = (2k + 2α − 2)·x·C_{k−1} − (k + 2α − 2)·C_{k−2}`.
pub fn gegenbauer_values<T: Real>(order: GegenbauerOrder, max_degree: usize, x: T) -> Vec<T> {
    let a2 = i128::from(order.twice_alpha);
    let mut values = Vec::with_capacity(max_degree + 1);
    values.push(T::one());
    if max_degree == 0 {
        return values;
    }
    values.push(T::from_i128(a2) * x);
    for k in 2..=max_degree {
        let k_i = k as i128;
        let next = (T::from_i128(2 * k_i + a2 - 2) * x * values[k - 1]
            - T::from_i128(k_i + a2 - 2) * values[k - 2])
            / T::from_i128(k_i);
        values.push(next);
    }
    values
}

/// `C_n^{(α)}(x)`, with `C_n ≡ 0` for negative `n`.
pub fn eval_gegenbauer<T: Real>(order: GegenbauerOrder, n: i64, x: T) -> T {
    if n < 0 {
        return T::zero();
    }
    *gegenbauer_values(order, n as usize, x)
        .last()
        .expect("at least C_0")
}

/// `d/dx C_n^{(α)}(x) = 2α·C_{n−1}^{(α+1)}(x)`.
pub fn eval_gegenbauer_derivative<T: Real>(order: GegenbauerOrder, n: i64, x: T) -> T {
    if n <= 0 {
        return T::zero();
    }
    T::from_i128(i128::from(order.twice_alpha)) * eval_gegenbauer(order.raised(), n - 1, x)
}

/// A coefficient `c₀ + c₁·x + c₂·x²` attached to one Gegenbauer term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coefficient<T> {
    pub constant: T,
    pub linear: T,
    pub quadratic: T,
}

impl<T: Real> Coefficient<T> {
    pub fn new(constant: T, linear: T, quadratic: T) -> Self {
        Self {
            constant,
            linear,
            quadratic,
        }
    }

    /// `c`
    pub fn constant(c: T) -> Self {
        Self::new(c, T::zero(), T::zero())
    }

    /// `c·x`
    pub fn times_x(c: T) -> Self {
        Self::new(T::zero(), c, T::zero())
    }

    /// `c·(1 + x²)`
    pub fn times_one_plus_x_squared(c: T) -> Self {
        Self::new(c, T::zero(), c)
    }

    pub fn value(&self, x: T) -> T {
        self.constant + x * (self.linear + x * self.quadratic)
    }

    pub fn derivative(&self, x: T) -> T {
        self.linear + T::from_f64(2.0) * x * self.quadratic
    }

    /// Polynomial degree; `None` for the zero coefficient.
    pub fn degree(&self) -> Option<usize> {
        let zero = T::zero();
        if self.quadratic != zero {
            Some(2)
        } else if self.linear != zero {
            Some(1)
        } else if self.constant != zero {
            Some(0)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Term<T> {
    pub degree: usize,
    pub coefficient: Coefficient<T>,
}

/// `Σ coeff_k(x)·C_{d_k}^{(α)}(x)` for a fixed order `α`.
#[derive(Debug, Clone, PartialEq)]
pub struct GegenbauerCombo<T> {
    order: GegenbauerOrder,
    terms: Vec<Term<T>>,
}

impl<T: Real> GegenbauerCombo<T> {
    pub fn new(order: GegenbauerOrder) -> Self {
        Self {
            order,
            terms: Vec::new(),
        }
    }

    /// Adds `coefficient·C_degree`. Negative degrees are identically zero and
    /// are dropped.
    pub fn term(mut self, degree: i64, coefficient: Coefficient<T>) -> Self {
        if degree >= 0 {
            self.terms.push(Term {
                degree: degree as usize,
                coefficient,
            });
        }
        self
    }

    /// Shorthand for a constant coefficient.
    pub fn constant_term(self, degree: i64, c: T) -> Self {
        self.term(degree, Coefficient::constant(c))
    }

    /// Converts every coefficient with `f`.
    pub fn map<U: Real>(&self, f: impl Fn(T) -> U) -> GegenbauerCombo<U> {
        GegenbauerCombo {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    degree: t.degree,
                    coefficient: Coefficient::new(
                        f(t.coefficient.constant),
                        f(t.coefficient.linear),
                        f(t.coefficient.quadratic),
                    ),
                })
                .collect(),
        }
    }

    pub fn order(&self) -> GegenbauerOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term<T>] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every coefficient is zero (including the empty combo).
    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.coefficient.degree().is_none())
    }

    /// Degree as an ordinary polynomial in `x` (0 for the zero combo).
    pub fn polynomial_degree(&self) -> usize {
        self.terms
            .iter()
            .filter_map(|t| t.coefficient.degree().map(|d| d + t.degree))
            .max()
            .unwrap_or(0)
    }

    /// Value and first derivative at `x` in one pass.
    pub fn eval(&self, x: T) -> (T, T) {
        let Some(max_degree) = self.terms.iter().map(|t| t.degree).max() else {
            return (T::zero(), T::zero());
        };
        let values = gegenbauer_values(self.order, max_degree, x);
        let raised = if max_degree > 0 {
            gegenbauer_values(self.order.raised(), max_degree - 1, x)
        } else {
            Vec::new()
        };
        let two_alpha = T::from_i128(i128::from(self.order.twice_alpha));
        let mut value = T::zero();
        let mut derivative = T::zero();
        for t in &self.terms {
            let c = t.coefficient.value(x);
            let dc = t.coefficient.derivative(x);
            let p = values[t.degree];
            let dp = if t.degree == 0 {
                T::zero()
            } else {
                two_alpha * raised[t.degree - 1]
            };
            value += c * p;
            derivative += dc * p + c * dp;
        }
        (value, derivative)
    }

    pub fn value(&self, x: T) -> T {
        self.eval(x).0
    }
}
