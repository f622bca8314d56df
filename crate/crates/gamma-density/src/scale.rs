//! Countably-constructed sets known through exact closed-form trace
//! measures near an anchor point.
//!
//! `DyadicGap` is the set whose complement consists of the gaps
//! `I_n = (t_{n+1}, t_{n+1} + d_n/2)` with `t_n = 2^{-n}` and
//! `d_n = t_n^2 - t_{n+1}^2`, mirrored about the anchor. `BumpSupport` is
//! the set whose complement is the union of the bump supports
//! `I_n = (a_n, a_n + l_n)` with `a_n = 2^{-(n+1)}`, `l_n = 2^{-(2n+2)}`,
//! all on the right of the anchor. Both evaluate their traces by locating
//! the dyadic scale index with exact comparisons; no floating point enters.

use num_traits::{Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::interval::{IntervalSet, Side};
use crate::rational::{pow2, rat, rat_from_json, rat_to_json, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScaleError {
    #[error("radius must be positive and at most the family validity radius")]
    RadiusOutOfRange,
    #[error("truncation depth must be at least 1")]
    ZeroDepth,
    #[error("malformed scale-family JSON")]
    BadJson,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScaleFamily {
    /// Complement = mirrored dyadic gaps; anchor is a Lebesgue density
    /// point of the set but not a gamma-density point for slow moduli.
    DyadicGap { anchor: Rational },
    /// Complement = the bump supports accumulating at the anchor from the
    /// right; the set is the witness for the unbounded-bump function.
    BumpSupport { anchor: Rational },
    /// A finite interval union wearing the family interface.
    FiniteUnion { anchor: Rational, set: IntervalSet },
    /// Swaps the roles of set and complement of the inner family.
    Complement { inner: Box<ScaleFamily> },
}

impl ScaleFamily {
    pub fn dyadic_gap() -> Self {
        ScaleFamily::DyadicGap {
            anchor: Rational::zero(),
        }
    }

    pub fn bump_support() -> Self {
        ScaleFamily::BumpSupport {
            anchor: Rational::zero(),
        }
    }

    pub fn anchor(&self) -> Rational {
        match self {
            ScaleFamily::DyadicGap { anchor }
            | ScaleFamily::BumpSupport { anchor }
            | ScaleFamily::FiniteUnion { anchor, .. } => anchor.clone(),
            ScaleFamily::Complement { inner } => inner.anchor(),
        }
    }

    /// Largest `h` for which the construction fully covers `(-h, h)`
    /// around the anchor; `None` = unrestricted.
    pub fn validity_radius(&self) -> Option<Rational> {
        match self {
            ScaleFamily::DyadicGap { .. } => Some(rat(1, 2)),
            ScaleFamily::BumpSupport { .. } => Some(rat(1, 4)),
            ScaleFamily::FiniteUnion { .. } => None,
            ScaleFamily::Complement { inner } => inner.validity_radius(),
        }
    }

    /// `m(h)`: exact measure of the *complement* of the represented set
    /// inside the one- or two-sided window of radius `h` at the anchor.
    pub fn complement_trace_measure(
        &self,
        h: &Rational,
        side: Side,
    ) -> Result<Rational, ScaleError> {
        if h <= &Rational::zero() {
            return Err(ScaleError::RadiusOutOfRange);
        }
        if let Some(r) = self.validity_radius() {
            if h > &r {
                return Err(ScaleError::RadiusOutOfRange);
            }
        }
        match self {
            ScaleFamily::DyadicGap { .. } => {
                let one_sided = dyadic_gap_one_sided(h);
                Ok(match side {
                    Side::Both => rat(2, 1) * one_sided,
                    Side::Left | Side::Right => one_sided,
                })
            }
            ScaleFamily::BumpSupport { .. } => {
                let right = bump_support_right(h);
                Ok(match side {
                    Side::Right | Side::Both => right,
                    Side::Left => Rational::zero(),
                })
            }
            ScaleFamily::FiniteUnion { anchor, set } => {
                let width = match side {
                    Side::Both => rat(2, 1) * h,
                    _ => h.clone(),
                };
                let inside = set
                    .trace_measure(anchor, h, side)
                    .expect("positive radius");
                Ok(width - inside)
            }
            ScaleFamily::Complement { inner } => inner.set_trace_measure(h, side),
        }
    }

    /// Exact measure of the represented set itself in the same window.
    pub fn set_trace_measure(&self, h: &Rational, side: Side) -> Result<Rational, ScaleError> {
        match self {
            ScaleFamily::Complement { inner } => inner.complement_trace_measure(h, side),
            _ => {
                let width = match side {
                    Side::Both => rat(2, 1) * h,
                    _ => h.clone(),
                };
                Ok(width - self.complement_trace_measure(h, side)?)
            }
        }
    }

    /// Exact membership of a rational point in the represented set.
    ///
    /// Decidable because any fixed `x` is separated from the anchor, so
    /// only finitely many construction intervals can reach it: truncating
    /// once every remaining interval lies strictly below `|x - anchor|`
    /// settles the question. Construction intervals are open, so their
    /// endpoints belong to the set.
    pub fn contains_point(&self, x: &Rational) -> bool {
        match self {
            ScaleFamily::FiniteUnion { set, .. } => set.contains(x),
            ScaleFamily::Complement { inner } => !inner.contains_point(x),
            _ => {
                let d = (x - self.anchor()).abs();
                if d.is_zero() {
                    // the anchor lies in no construction interval
                    return true;
                }
                let mut depth: u32 = 1;
                while pow2(-(depth as i32)) >= d {
                    depth += 1;
                }
                // intervals with index >= depth live inside (0, 2^-depth)
                let trunc = self.truncate_to_interval_set(depth).expect("depth >= 1");
                !trunc.contains(x)
            }
        }
    }

    /// The exact interval-set value of this family, when it has one
    /// (finite unions and their complement wrappers).
    pub fn as_interval_set(&self) -> Option<IntervalSet> {
        match self {
            ScaleFamily::FiniteUnion { set, .. } => Some(set.clone()),
            ScaleFamily::Complement { inner } => {
                inner.as_interval_set().map(|s| s.complement())
            }
            _ => None,
        }
    }

    /// Union of the first `depth` construction (complement) intervals,
    /// mirrored for `DyadicGap`, as a normalized interval set. For the
    /// complement wrapper this is the inner family's construction.
    pub fn truncate_to_interval_set(&self, depth: u32) -> Result<IntervalSet, ScaleError> {
        if depth == 0 {
            return Err(ScaleError::ZeroDepth);
        }
        match self {
            ScaleFamily::DyadicGap { anchor } => {
                let mut pairs = Vec::new();
                for n in 1..=depth {
                    let (lo, hi) = dyadic_gap_interval(n);
                    pairs.push((anchor + &lo, anchor + &hi));
                    pairs.push((anchor - &hi, anchor - &lo));
                }
                Ok(IntervalSet::normalize(pairs).unwrap())
            }
            ScaleFamily::BumpSupport { anchor } => {
                let mut pairs = Vec::new();
                for n in 1..=depth {
                    let (lo, hi) = bump_interval(n);
                    pairs.push((anchor + &lo, anchor + &hi));
                }
                Ok(IntervalSet::normalize(pairs).unwrap())
            }
            ScaleFamily::FiniteUnion { set, .. } => Ok(set.complement()),
            ScaleFamily::Complement { inner } => inner.truncate_to_interval_set(depth),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            ScaleFamily::DyadicGap { anchor } => {
                json!({"kind": "dyadic_gap", "anchor": rat_to_json(anchor), "params": {}})
            }
            ScaleFamily::BumpSupport { anchor } => {
                json!({"kind": "bump_support", "anchor": rat_to_json(anchor), "params": {}})
            }
            ScaleFamily::FiniteUnion { anchor, set } => {
                json!({"kind": "finite_union", "anchor": rat_to_json(anchor),
                       "params": {"set": set.to_json()}})
            }
            ScaleFamily::Complement { inner } => {
                json!({"kind": "complement", "anchor": rat_to_json(&self.anchor()),
                       "params": {"inner": inner.to_json()}})
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<Self, ScaleError> {
        let kind = v.get("kind").and_then(Value::as_str).ok_or(ScaleError::BadJson)?;
        let anchor = v
            .get("anchor")
            .and_then(rat_from_json)
            .ok_or(ScaleError::BadJson)?;
        match kind {
            "dyadic_gap" => Ok(ScaleFamily::DyadicGap { anchor }),
            "bump_support" => Ok(ScaleFamily::BumpSupport { anchor }),
            "finite_union" => {
                let set = v
                    .pointer("/params/set")
                    .ok_or(ScaleError::BadJson)
                    .and_then(|s| IntervalSet::from_json(s).map_err(|_| ScaleError::BadJson))?;
                Ok(ScaleFamily::FiniteUnion { anchor, set })
            }
            "complement" => {
                let inner = v.pointer("/params/inner").ok_or(ScaleError::BadJson)?;
                Ok(ScaleFamily::Complement {
                    inner: Box::new(Self::from_json(inner)?),
                })
            }
            _ => Err(ScaleError::BadJson),
        }
    }
}

/// `t_n = 2^{-n}`
fn t(n: u32) -> Rational {
    pow2(-(n as i32))
}

/// `d_n = t_n^2 - t_{n+1}^2 = 3 * 4^{-(n+1)}`
fn delta(n: u32) -> Rational {
    rat(3, 1) * pow2(-2 * (n as i32 + 1))
}

/// Gap interval `I_n = (t_{n+1}, t_{n+1} + d_n/2)`, anchor-relative.
fn dyadic_gap_interval(n: u32) -> (Rational, Rational) {
    let lo = t(n + 1);
    let hi = &lo + delta(n) / rat(2, 1);
    (lo, hi)
}

/// `|B^c ∩ (0, h)|` for the dyadic gap construction, `0 < h <= 1/2`.
///
/// For `t_{k+1} < h <= t_k` the gaps with index > k are fully inside and
/// telescope to `t_{k+1}^2 / 2`; gap k overlaps partially.
fn dyadic_gap_one_sided(h: &Rational) -> Rational {
    let mut k: u32 = 1;
    while h <= &t(k + 1) {
        k += 1;
    }
    let tail = t(k + 1) * t(k + 1) / rat(2, 1);
    let over = h - t(k + 1);
    let cap = delta(k) / rat(2, 1);
    tail + clamp(over, cap)
}

/// `a_n = 2^{-(n+1)}`
fn a(n: u32) -> Rational {
    pow2(-(n as i32) - 1)
}

/// `l_n = 2^{-(2n+2)}`
fn ell(n: u32) -> Rational {
    pow2(-2 * (n as i32) - 2)
}

/// Bump support `I_n = (a_n, a_n + l_n)`, anchor-relative.
fn bump_interval(n: u32) -> (Rational, Rational) {
    let lo = a(n);
    let hi = &lo + ell(n);
    (lo, hi)
}

/// `|∪I_n ∩ (0, h)|` for the bump supports, `0 < h <= 1/4`.
fn bump_support_right(h: &Rational) -> Rational {
    // smallest k with a_k < h; supports with n > k are fully inside and
    // sum to l_k / 3, support k may overlap partially
    let mut k: u32 = 1;
    while &a(k) >= h {
        k += 1;
    }
    let tail = ell(k) / rat(3, 1);
    let over = h - a(k);
    tail + clamp(over, ell(k))
}

fn clamp(v: Rational, cap: Rational) -> Rational {
    if v <= Rational::zero() {
        Rational::zero()
    } else if v >= cap {
        cap
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;
    use num_traits::Zero;

    #[test]
    fn dyadic_truncation_depth_one() {
        // hand oracle: t_2 = 1/4, d_1 = 3/16, I_1 = (1/4, 1/4 + 3/32) = (1/4, 11/32)
        let f = ScaleFamily::dyadic_gap();
        let s = f.truncate_to_interval_set(1).unwrap();
        let expect = IntervalSet::normalize(vec![
            (rat(-11, 32), rat(-1, 4)),
            (rat(1, 4), rat(11, 32)),
        ])
        .unwrap();
        assert_eq!(s, expect);
    }

    #[test]
    fn bump_truncation_depth_two() {
        // hand oracle: I_1 = (1/4, 5/16), I_2 = (1/8, 9/64)
        let f = ScaleFamily::bump_support();
        let s = f.truncate_to_interval_set(2).unwrap();
        let expect = IntervalSet::normalize(vec![
            (rat(1, 4), rat(5, 16)),
            (rat(1, 8), rat(9, 64)),
        ])
        .unwrap();
        assert_eq!(s, expect);
    }

    #[test]
    fn zero_depth_rejected() {
        assert_eq!(
            ScaleFamily::dyadic_gap().truncate_to_interval_set(0),
            Err(ScaleError::ZeroDepth)
        );
    }

    #[test]
    fn telescoping_tail() {
        // sum of d_n for n >= k+1 equals t_{k+1}^2
        for k in 1..=20u32 {
            let mut sum = Rational::zero();
            // the geometric tail in closed form: sum_{n>=k+1} 3*4^{-(n+1)} = 4^{-(k+1)}
            for n in (k + 1)..(k + 400) {
                sum += delta(n);
            }
            let target = t(k + 1) * t(k + 1);
            // the finite partial sum falls short by the remaining tail 4^{-(k+400)}
            let short = target.clone() - &sum;
            assert!(short > Rational::zero() && short < pow2(-2 * (k as i32 + 300)));
        }
    }

    #[test]
    fn dyadic_sandwich_at_dyadic_scales() {
        // sandwich bound: t_{k+1}^2 <= m(h) <= t_k^2 for t_{k+1} < h <= t_k
        let f = ScaleFamily::dyadic_gap();
        for k in 1..=60u32 {
            let h = t(k);
            let m = f.complement_trace_measure(&h, Side::Both).unwrap();
            assert!(m >= t(k + 1) * t(k + 1));
            assert!(m <= t(k) * t(k));
            // and the global sandwich h^2/4 <= m(h) <= 4 h^2
            assert!(m.clone() * rat_int(4) >= &h * &h);
            assert!(m <= rat_int(4) * &h * &h);
        }
    }

    #[test]
    fn dyadic_exact_at_scale_boundary() {
        // at h = t_k the gap I_k is fully covered, so m(t_k) = t_k^2 exactly
        let f = ScaleFamily::dyadic_gap();
        for k in [1u32, 5, 17, 60] {
            let h = t(k);
            let m = f.complement_trace_measure(&h, Side::Both).unwrap();
            assert_eq!(m, &h * &h);
        }
    }

    #[test]
    fn bump_quadratic_bound() {
        // m(h) <= (4/3) h^2, exact on a dyadic grid
        let f = ScaleFamily::bump_support();
        for k in 2..=80i32 {
            let h = pow2(-k);
            let m = f.complement_trace_measure(&h, Side::Both).unwrap();
            assert!(m <= rat(4, 3) * &h * &h, "k={k}");
        }
    }

    #[test]
    fn traces_match_truncation() {
        // Closed form vs exact interval algebra on the materialized prefix.
        // The prefix misses the construction intervals beyond `depth`; for
        // windows wide enough to contain that whole tail the discrepancy is
        // exactly the telescoped tail measure, so equality is checkable
        // without any tolerance.
        for depth in [1u32, 3, 8, 12, 40] {
            let fam = ScaleFamily::dyadic_gap();
            let prefix = fam.truncate_to_interval_set(depth).unwrap();
            let side_tail = t(depth + 1) * t(depth + 1) / rat(2, 1);
            for k in 1..=(depth as i32) {
                let h = pow2(-k); // h = t_k >= t_{depth+1}: tail fully inside
                for side in [Side::Left, Side::Right, Side::Both] {
                    let closed = fam.complement_trace_measure(&h, side).unwrap();
                    let direct = prefix.trace_measure(&Rational::zero(), &h, side).unwrap();
                    let tail = match side {
                        Side::Both => rat(2, 1) * &side_tail,
                        _ => side_tail.clone(),
                    };
                    assert_eq!(closed, direct + tail, "dyadic depth={depth} k={k} side={side:?}");
                }
            }

            let fam = ScaleFamily::bump_support();
            let prefix = fam.truncate_to_interval_set(depth).unwrap();
            let right_tail = ell(depth) / rat(3, 1); // sum of l_n for n > depth
            for k in 2..=(depth as i32 + 1) {
                let h = pow2(-k); // h = 2^{-k} > a_{depth+1} + l_{depth+1}
                for side in [Side::Left, Side::Right, Side::Both] {
                    let closed = fam.complement_trace_measure(&h, side).unwrap();
                    let direct = prefix.trace_measure(&Rational::zero(), &h, side).unwrap();
                    let tail = match side {
                        Side::Left => Rational::zero(),
                        _ => right_tail.clone(),
                    };
                    assert_eq!(closed, direct + tail, "bump depth={depth} k={k} side={side:?}");
                }
            }
        }
    }

    #[test]
    fn monotone_in_h() {
        for fam in [ScaleFamily::dyadic_gap(), ScaleFamily::bump_support()] {
            let mut prev = Rational::zero();
            for j in (4..=200).rev() {
                let h = pow2(-j);
                let m = fam.complement_trace_measure(&h, Side::Both).unwrap();
                assert!(m >= prev);
                prev = m;
            }
        }
    }

    #[test]
    fn validity_radius_enforced() {
        let f = ScaleFamily::dyadic_gap();
        assert!(f.complement_trace_measure(&rat(3, 4), Side::Both).is_err());
        assert!(f.complement_trace_measure(&Rational::zero(), Side::Both).is_err());
        let b = ScaleFamily::bump_support();
        assert!(b.complement_trace_measure(&rat(1, 2), Side::Both).is_err());
    }

    #[test]
    fn complement_wrapper_swaps_traces() {
        let f = ScaleFamily::dyadic_gap();
        let c = ScaleFamily::Complement {
            inner: Box::new(f.clone()),
        };
        let h = pow2(-5);
        assert_eq!(
            c.complement_trace_measure(&h, Side::Both).unwrap(),
            f.set_trace_measure(&h, Side::Both).unwrap()
        );
        assert_eq!(
            c.set_trace_measure(&h, Side::Both).unwrap(),
            f.complement_trace_measure(&h, Side::Both).unwrap()
        );
    }

    #[test]
    fn json_round_trip() {
        let f = ScaleFamily::Complement {
            inner: Box::new(ScaleFamily::bump_support()),
        };
        let v = f.to_json();
        assert_eq!(ScaleFamily::from_json(&v).unwrap(), f);
    }
}
