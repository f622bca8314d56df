//! Exact rational arithmetic helpers shared by the whole crate.
//!
//! All measures, endpoints and scale parameters are `BigRational`; nothing
//! in the set algebra ever touches floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

pub type Rational = BigRational;

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `2^k` for any integer `k`, exact.
pub fn pow2(k: i32) -> Rational {
    let one = BigInt::one();
    if k >= 0 {
        BigRational::from_integer(one << k as usize)
    } else {
        BigRational::new(one.clone(), one << (-k) as usize)
    }
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

/// JSON encoding of a rational as a `[numerator, denominator]` pair.
/// Components that fit in an i64 become JSON integers, larger ones become
/// decimal strings so nothing is ever rounded.
pub fn rat_to_json(r: &Rational) -> Value {
    Value::Array(vec![bigint_to_json(r.numer()), bigint_to_json(r.denom())])
}

fn bigint_to_json(n: &BigInt) -> Value {
    match i64::try_from(n.clone()) {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(n.to_string()),
    }
}

/// Inverse of [`rat_to_json`].
pub fn rat_from_json(v: &Value) -> Option<Rational> {
    let arr = v.as_array()?;
    if arr.len() != 2 {
        return None;
    }
    let numer = bigint_from_json(&arr[0])?;
    let denom = bigint_from_json(&arr[1])?;
    if denom.is_zero() {
        return None;
    }
    Some(BigRational::new(numer, denom))
}

fn bigint_from_json(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

/// Parses "3/4", "-1/2", "5" or a decimal like "0.25" into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let int: BigInt = if int.is_empty() || int == "-" {
            BigInt::zero()
        } else {
            int.parse().ok()?
        };
        let fr: BigInt = if frac.is_empty() {
            BigInt::zero()
        } else {
            frac.parse().ok()?
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let whole = int * &scale;
        let total = if neg { whole - fr } else { whole + fr };
        return Some(BigRational::new(total, scale));
    }
    let n: BigInt = s.parse().ok()?;
    Some(BigRational::from_integer(n))
}

/// Lossy conversion for reports and plots.
pub fn rat_to_f64(r: &Rational) -> f64 {
    // Scale the fraction so both parts fit in f64 range before dividing.
    let n = r.numer();
    let d = r.denom();
    let nb = n.bits() as i64;
    let db = d.bits() as i64;
    let shift = (nb.max(db) - 500).max(0) as u64;
    let n = n >> shift;
    let d = d >> shift;
    let nf = bigint_to_f64(&n);
    let df = bigint_to_f64(&d);
    if df == 0.0 {
        return 0.0;
    }
    nf / df
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    n.to_string().parse().unwrap_or(0.0)
}
