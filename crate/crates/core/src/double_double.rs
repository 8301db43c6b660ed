//! Double-double arithmetic: an unevaluated sum `hi + lo` of two `f64`
//! with `|lo| ≤ ulp(hi)/2`, giving about 106 bits of significand.
//!
//! Error-free transformations follow Dekker and Knuth; products use a fused
//! multiply-add.

use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

#[derive(Debug, Clone, Copy, Default, PartialEq, PartialOrd)]
pub struct Extended {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// Requires `|a| ≥ |b|`.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Extended {
    pub const ZERO: Self = Self { hi: 0.0, lo: 0.0 };

    fn renormalized(hi: f64, lo: f64) -> Self {
        let (hi, lo) = quick_two_sum(hi, lo);
        Self { hi, lo }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    fn mul_f64(self, b: f64) -> Self {
        let (p1, p2) = two_prod(self.hi, b);
        Self::renormalized(p1, p2 + self.lo * b)
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 {
                Self::ZERO
            } else {
                Self::from(f64::NAN)
            };
        }
        // One Newton step from the double root doubles the correct bits.
        let mut y = Self::from(self.hi.sqrt());
        for _ in 0..2 {
            y = y + (self - y * y) / y.mul_f64(2.0);
        }
        y
    }
}

impl From<f64> for Extended {
    fn from(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }
}

impl From<i128> for Extended {
    /// Exact for `|x| < 2^106`.
    fn from(x: i128) -> Self {
        let hi = x as f64;
        let lo = (x - hi as i128) as f64;
        Self::renormalized(hi, lo)
    }
}

impl Neg for Extended {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Extended {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        Self::renormalized(s1, s2 + t2)
    }
}

impl Sub for Extended {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for Extended {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        let (p1, p2) = two_prod(self.hi, b.hi);
        Self::renormalized(p1, p2 + (self.hi * b.lo + self.lo * b.hi))
    }
}

impl Div for Extended {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        Self::renormalized(q1, q2) + Self::from(q3)
    }
}

impl AddAssign for Extended {
    fn add_assign(&mut self, b: Self) {
        *self = *self + b;
    }
}

impl SubAssign for Extended {
    fn sub_assign(&mut self, b: Self) {
        *self = *self - b;
    }
}

impl MulAssign for Extended {
    fn mul_assign(&mut self, b: Self) {
        *self = *self * b;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Extended, b: Extended, tol: f64) -> bool {
        (a - b).abs().hi() <= tol
    }

    #[test]
    fn division_is_accurate_to_double_double() {
        let q = Extended::from(7i128) / Extended::from(15i128);
        let back = q * Extended::from(15.0) - Extended::from(7.0);
        assert!(back.abs().hi() < 1e-31, "{back:?}");
        let third = Extended::from(1.0) / Extended::from(3.0);
        assert!(close(
            third * Extended::from(3.0),
            Extended::from(1.0),
            1e-32
        ));
    }

    #[test]
    fn sqrt_squares_back() {
        for v in [2.0, 3.0, 0.1, 12345.678, 1e-10] {
            let x = Extended::from(v);
            let r = x.sqrt();
            assert!(close(r * r, x, 4e-32 * v), "{v}");
        }
        assert_eq!(Extended::ZERO.sqrt(), Extended::ZERO);
        assert!(Extended::from(-1.0).sqrt().hi().is_nan());
    }

    #[test]
    fn large_integers_convert_exactly() {
        let big: i128 = (1 << 100) + 12345;
        let x = Extended::from(big);
        assert_eq!(x.hi() as i128 + x.lo() as i128, big);
    }

    #[test]
    fn ordering_uses_low_part() {
        let a = Extended::from(1.0);
        let b = a + Extended::from(1e-20);
        assert!(b > a);
        assert!(-b < -a);
    }
}
