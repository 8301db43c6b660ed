//! Scalar abstraction shared by the double and extended-precision paths.
//!
//! Every construction in this crate is generic over [`Real`]. `f64` is the
//! default; [`Extended`] is a double-double (about 31 significant digits)
//! used when rules have to be printed to 25 meaningful digits.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

pub use crate::double_double::Extended;

/// Arithmetic needed by the rule constructions.
pub trait Real:
    Copy
    + Debug
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    /// Newton refinement stops once a step is at most this large.
    const STEP_TOLERANCE: f64;
    /// Iteration cap for a single root refinement.
    const MAX_ITERATIONS: usize;

    /// Type used for last-digit polishing.
    type Wide: Real;

    fn widen(self) -> Self::Wide;

    /// Rounds a wide value to nearest.
    fn narrow(wide: Self::Wide) -> Self;

    fn from_f64(x: f64) -> Self;

    /// Exact for integers of magnitude below 2^53 (`f64`) or 2^106 (`Extended`).
    fn from_i128(x: i128) -> Self;

    fn to_f64(self) -> f64;

    fn sqrt(self) -> Self;

    fn abs(self) -> Self {
        if self < Self::zero() {
            -self
        } else {
            self
        }
    }

    fn zero() -> Self {
        Self::from_f64(0.0)
    }

    fn one() -> Self {
        Self::from_f64(1.0)
    }

    fn from_ratio(num: i128, den: i128) -> Self {
        Self::from_i128(num) / Self::from_i128(den)
    }

    /// Rounds to `sig` significant decimal digits.
    fn to_digits(self, sig: usize) -> Digits;

    /// Parses a plain or exponent-form decimal string, rounding to nearest.
    fn parse_decimal(s: &str) -> Option<Self>;
}

/// A decimal value `±d.ddd… × 10^exponent` with a fixed number of digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digits {
    pub negative: bool,
    /// Decimal digits, most significant first. All zeros for zero.
    pub digits: Vec<u8>,
    pub exponent: i32,
}

impl Digits {
    fn zero(sig: usize) -> Self {
        Digits {
            negative: false,
            digits: vec![0; sig],
            exponent: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    /// Positional notation with trailing zeros kept, e.g. `0.4666…667` or
    /// `1.500000000000000000000000`.
    pub fn to_plain(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        if self.negative {
            s.push('-');
        }
        let digits: String = self.digits.iter().map(|d| char::from(b'0' + d)).collect();
        if self.exponent < 0 {
            s.push_str("0.");
            for _ in 0..(-self.exponent - 1) {
                s.push('0');
            }
            s.push_str(&digits);
        } else {
            let int_len = self.exponent as usize + 1;
            if int_len >= digits.len() {
                s.push_str(&digits);
                for _ in digits.len()..int_len {
                    s.push('0');
                }
            } else {
                s.push_str(&digits[..int_len]);
                s.push('.');
                s.push_str(&digits[int_len..]);
            }
        }
        s
    }

    /// CAS list notation: trailing zeros trimmed and no leading zero before
    /// the point, e.g. `.5`, `1.084888…`, `0`.
    pub fn to_cas(&self) -> String {
        let plain = self.to_plain();
        let mut s = if plain.contains('.') {
            plain
                .trim_end_matches('0')
                .trim_end_matches('.')
                .to_string()
        } else {
            plain
        };
        if let Some(rest) = s.strip_prefix("0.") {
            s = format!(".{rest}");
        } else if let Some(rest) = s.strip_prefix("-0.") {
            s = format!("-.{rest}");
        }
        s
    }
}

/// Splits a decimal literal into sign, digit string and a power-of-ten shift
/// such that `value = ±digits × 10^shift`.
fn split_decimal(s: &str) -> Option<(bool, String, i32)> {
    let s = s.trim();
    let (negative, body) = match s.as_bytes().first()? {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (mantissa, exp) = match body.find(['e', 'E']) {
        Some(i) => (&body[..i], body[i + 1..].parse::<i32>().ok()?),
        None => (body, 0),
    };
    let (int_part, frac_part) = match mantissa.find('.') {
        Some(i) => (&mantissa[..i], &mantissa[i + 1..]),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    Some((negative, digits, exp - frac_part.len() as i32))
}

impl Real for f64 {
    const STEP_TOLERANCE: f64 = 1e-15;
    const MAX_ITERATIONS: usize = 60;

    type Wide = Extended;

    fn widen(self) -> Extended {
        Extended::from(self)
    }

    fn narrow(wide: Extended) -> Self {
        wide.hi() + wide.lo()
    }

    fn from_f64(x: f64) -> Self {
        x
    }

    fn from_i128(x: i128) -> Self {
        x as f64
    }

    fn to_f64(self) -> f64 {
        self
    }

    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }

    fn abs(self) -> Self {
        f64::abs(self)
    }

    fn to_digits(self, sig: usize) -> Digits {
        assert!(sig >= 1);
        if self == 0.0 {
            return Digits::zero(sig);
        }
        // `{:e}` with an explicit precision rounds the exact binary value.
        let s = format!("{:.*e}", sig - 1, self.abs());
        let (mantissa, exp) = s.split_once('e').expect("exponent form");
        Digits {
            negative: self < 0.0,
            digits: mantissa
                .bytes()
                .filter(u8::is_ascii_digit)
                .map(|b| b - b'0')
                .collect(),
            exponent: exp.parse().expect("integer exponent"),
        }
    }

    fn parse_decimal(s: &str) -> Option<Self> {
        let (negative, digits, shift) = split_decimal(s)?;
        let v: f64 = format!(
            "{}e{}",
            if digits.is_empty() { "0" } else { &digits },
            shift
        )
        .parse()
        .ok()?;
        Some(if negative { -v } else { v })
    }
}

/// `10^k` as a double-double; exact for `0 ≤ k ≤ 44`.
fn pow10_extended(k: u32) -> Extended {
    if k <= 22 {
        Extended::from(10f64.powi(k as i32))
    } else {
        Extended::from(1e22) * pow10_extended(k - 22)
    }
}

fn scale_pow10(x: Extended, shift: i32) -> Extended {
    let mut v = x;
    let mut remaining = shift;
    while remaining > 0 {
        let step = remaining.min(44);
        v *= pow10_extended(step as u32);
        remaining -= step;
    }
    while remaining < 0 {
        let step = (-remaining).min(44);
        v = v / pow10_extended(step as u32);
        remaining += step;
    }
    v
}

impl Real for Extended {
    const STEP_TOLERANCE: f64 = 1e-30;
    const MAX_ITERATIONS: usize = 120;

    type Wide = Extended;

    fn widen(self) -> Extended {
        self
    }

    fn narrow(wide: Extended) -> Self {
        wide
    }

    fn from_f64(x: f64) -> Self {
        Extended::from(x)
    }

    fn from_i128(x: i128) -> Self {
        Extended::from(x)
    }

    fn to_f64(self) -> f64 {
        self.hi() + self.lo()
    }

    fn sqrt(self) -> Self {
        Extended::sqrt(self)
    }

    fn abs(self) -> Self {
        Extended::abs(self)
    }

    fn to_digits(self, sig: usize) -> Digits {
        assert!(sig >= 1);
        if self.hi() == 0.0 {
            return Digits::zero(sig);
        }
        let negative = self.hi() < 0.0;
        let x = Real::abs(self);
        let mut exponent = x.hi().log10().floor() as i32;
        let mut v = scale_pow10(x, -exponent);
        if v >= Extended::from(10.0) {
            v = v / Extended::from(10.0);
            exponent += 1;
        } else if v < Extended::from(1.0) {
            v *= Extended::from(10.0);
            exponent -= 1;
        }
        // One guard digit decides the rounding.
        let mut raw = Vec::with_capacity(sig + 1);
        for _ in 0..=sig {
            let mut d = v.hi().floor();
            let mut rest = v - Extended::from(d);
            if rest < Extended::from(0.0) {
                d -= 1.0;
                rest += Extended::from(1.0);
            } else if rest >= Extended::from(1.0) {
                d += 1.0;
                rest -= Extended::from(1.0);
            }
            raw.push(d.clamp(0.0, 9.0) as u8);
            v = rest * Extended::from(10.0);
        }
        let guard = raw.pop().unwrap_or(0);
        if guard >= 5 {
            let mut i = raw.len();
            loop {
                if i == 0 {
                    raw.insert(0, 1);
                    raw.pop();
                    exponent += 1;
                    break;
                }
                i -= 1;
                if raw[i] == 9 {
                    raw[i] = 0;
                } else {
                    raw[i] += 1;
                    break;
                }
            }
        }
        Digits {
            negative,
            digits: raw,
            exponent,
        }
    }

    fn parse_decimal(s: &str) -> Option<Self> {
        let (negative, digits, mut shift) = split_decimal(s)?;
        let digits = digits.trim_start_matches('0');
        // 31 digits stay below 2^106 and convert exactly.
        let kept = &digits[..digits.len().min(31)];
        shift += (digits.len() - kept.len()) as i32;
        let mantissa: i128 = if kept.is_empty() {
            0
        } else {
            kept.parse().ok()?
        };
        let v = scale_pow10(Extended::from(mantissa), shift);
        Some(if negative { -v } else { v })
    }
}
