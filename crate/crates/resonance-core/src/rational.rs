//! Exact rational helpers shared by every module.

use alloc::string::String;
use alloc::vec::Vec;
use core::str::FromStr;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Exact rational used for weights, exponents and spectral parameters.
pub type Q = num_rational::Ratio<i128>;

/// Builds `n/d`.
pub fn q(n: i128, d: i128) -> Q {
    Q::new(n, d)
}

/// Builds the integer `n` as a rational.
pub fn qi(n: i128) -> Q {
    Q::from_integer(n)
}

pub fn is_integer(x: &Q) -> bool {
    x.is_integer()
}

/// True for elements of ℤ + ½.
pub fn is_strict_half(x: &Q) -> bool {
    *x.denom() == 2
}

/// True when `2x` is an integer.
pub fn is_half_integral(x: &Q) -> bool {
    *x.denom() == 1 || *x.denom() == 2
}

/// All coordinates integral, or all in ℤ + ½.
pub fn uniform_parity(xs: &[Q]) -> bool {
    xs.iter().all(is_integer) || xs.iter().all(is_strict_half)
}

pub fn to_f64(x: &Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// Formats as `p/q`, or `p` when the denominator is one.
pub fn fmt_q(x: &Q) -> String {
    alloc::format!("{}", x)
}

/// Parses `p`, `p/q` or a terminating decimal such as `-1.5`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let n = i128::from_str(a.trim()).ok()?;
        let d = i128::from_str(b.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(q(n, d));
    }
    if let Some((a, b)) = s.split_once('.') {
        if b.is_empty() || !b.bytes().all(|c| c.is_ascii_digit()) || b.len() > 30 {
            return None;
        }
        let neg = a.trim_start().starts_with('-');
        let whole = if a == "-" || a.is_empty() { 0 } else { i128::from_str(a).ok()? };
        let scale = 10i128.checked_pow(b.len() as u32)?;
        let frac = i128::from_str(b).ok()?;
        let mag = whole.abs().checked_mul(scale)?.checked_add(frac)?;
        return Some(q(if neg { -mag } else { mag }, scale));
    }
    i128::from_str(s).ok().map(qi)
}

/// Parses a comma separated tuple of rationals.
pub fn parse_tuple(s: &str) -> Option<Vec<Q>> {
    if s.trim().is_empty() {
        return Some(Vec::new());
    }
    s.split(',').map(parse_q).collect()
}

pub fn floor_q(x: &Q) -> i128 {
    x.numer().div_floor(x.denom())
}

pub fn ceil_q(x: &Q) -> i128 {
    x.numer().div_ceil(x.denom())
}

pub fn abs_q(x: &Q) -> Q {
    x.abs()
}
