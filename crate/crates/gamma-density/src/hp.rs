//! Thin wrapper around arbitrary-precision floats for modulus evaluation.
//!
//! Measures and scales stay exact rationals; only modulus values are
//! floating, at a configurable precision (>= 50 significant digits by
//! default) so that log-scale effects at radii like `2^{-200}` survive.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_traits::Signed;

use crate::rational::Rational;

pub const DEFAULT_DIGITS: usize = 60;

/// Environment variable overriding the evaluation precision (decimal digits).
pub const PRECISION_ENV: &str = "GAMMA_DENSITY_DIGITS";

pub struct EvalCtx {
    bits: usize,
    rm: RoundingMode,
    cc: Consts,
}

impl EvalCtx {
    pub fn new(digits: usize) -> Self {
        let digits = digits.max(50);
        // ~3.33 bits per digit, rounded up generously
        let bits = (digits * 4).max(192);
        EvalCtx {
            bits,
            rm: RoundingMode::ToEven,
            cc: Consts::new().expect("constants cache"),
        }
    }

    /// Precision from `GAMMA_DENSITY_DIGITS`, defaulting to 60 digits.
    pub fn from_env() -> Self {
        let digits = std::env::var(PRECISION_ENV)
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(DEFAULT_DIGITS);
        Self::new(digits)
    }

    pub fn zero(&self) -> BigFloat {
        BigFloat::from_i8(0, self.bits)
    }

    pub fn one(&self) -> BigFloat {
        BigFloat::from_i8(1, self.bits)
    }

    pub fn from_rat(&mut self, r: &Rational) -> BigFloat {
        let numer = self.from_decimal(&r.numer().abs().to_string());
        let denom = self.from_decimal(&r.denom().to_string());
        let q = numer.div(&denom, self.bits, self.rm);
        if r.is_negative() {
            q.neg()
        } else {
            q
        }
    }

    fn from_decimal(&mut self, s: &str) -> BigFloat {
        BigFloat::parse(s, Radix::Dec, self.bits, self.rm, &mut self.cc)
    }

    pub fn ln(&mut self, x: &BigFloat) -> BigFloat {
        x.ln(self.bits, self.rm, &mut self.cc)
    }

    pub fn exp(&mut self, x: &BigFloat) -> BigFloat {
        x.exp(self.bits, self.rm, &mut self.cc)
    }

    pub fn e(&mut self) -> BigFloat {
        self.exp(&self.one())
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.bits, self.rm)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.bits, self.rm)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.bits, self.rm)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.bits, self.rm)
    }

    pub fn recip(&self, a: &BigFloat) -> BigFloat {
        a.reciprocal(self.bits, self.rm)
    }

    /// `a <= b`
    pub fn le(&self, a: &BigFloat, b: &BigFloat) -> bool {
        matches!(a.cmp(b), Some(c) if c <= 0)
    }

    pub fn to_f64(&self, x: &BigFloat) -> f64 {
        if x.is_nan() {
            return f64::NAN;
        }
        if x.is_inf_pos() {
            return f64::INFINITY;
        }
        if x.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        format!("{x}").parse().unwrap_or(0.0)
    }
}
