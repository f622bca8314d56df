//! Exact set algebra and Lebesgue measure for finite unions of bounded open
//! intervals with rational endpoints, plus unbounded rays so that the full
//! line and half-lines are first-class values.
//!
//! Sets are kept in a canonical form: intervals sorted by lower endpoint,
//! pairwise disjoint, adjacency merged. Isolated points are never part of
//! this type; density behaviour is measure-determined, so `{p}` belongs to
//! the layer above (representable sets).

use std::cmp::Ordering;
use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::rational::{rat_from_json, rat_to_json, Rational};

/// A bound of an open interval; `None` stands for the infinite endpoint.
type Bound = Option<Rational>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntervalError {
    #[error("interval must satisfy lo < hi")]
    EmptyInterval,
    #[error("window must satisfy lo < hi")]
    InvalidWindow,
    #[error("trace radius must be positive")]
    NonPositiveRadius,
    #[error("malformed interval-set JSON")]
    BadJson,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Side {
    Left,
    Right,
    Both,
}

/// Total measure of a set that may contain rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Measure {
    Finite(Rational),
    Infinite,
}

impl Measure {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Measure::Finite(r) => Some(r),
            Measure::Infinite => None,
        }
    }
}

/// One open interval `(lo, hi)`; `None` endpoints are infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Bound,
    hi: Bound,
}

impl Interval {
    pub fn lo(&self) -> Option<&Rational> {
        self.lo.as_ref()
    }
    pub fn hi(&self) -> Option<&Rational> {
        self.hi.as_ref()
    }
}

// None as a lower bound is -inf.
fn cmp_lo(a: &Bound, b: &Bound) -> Ordering {
    match (a, b) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (Some(x), Some(y)) => x.cmp(y),
    }
}

// None as an upper bound is +inf.
fn cmp_hi(a: &Bound, b: &Bound) -> Ordering {
    match (a, b) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Greater,
        (Some(_), None) => Ordering::Less,
        (Some(x), Some(y)) => x.cmp(y),
    }
}

// Lower bound vs upper bound; infinite on either side compares as strictly
// smaller (a lower -inf or upper +inf never closes a gap).
fn cmp_lo_hi(lo: &Bound, hi: &Bound) -> Ordering {
    match (lo, hi) {
        (None, _) | (_, None) => Ordering::Less,
        (Some(x), Some(y)) => x.cmp(y),
    }
}

/// Finite disjoint union of open intervals, canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { intervals: vec![] }
    }

    pub fn full_line() -> Self {
        IntervalSet {
            intervals: vec![Interval { lo: None, hi: None }],
        }
    }

    /// `(lo, +inf)`
    pub fn ray_right(lo: Rational) -> Self {
        IntervalSet {
            intervals: vec![Interval {
                lo: Some(lo),
                hi: None,
            }],
        }
    }

    /// `(-inf, hi)`
    pub fn ray_left(hi: Rational) -> Self {
        IntervalSet {
            intervals: vec![Interval {
                lo: None,
                hi: Some(hi),
            }],
        }
    }

    pub fn interval(lo: Rational, hi: Rational) -> Result<Self, IntervalError> {
        if lo >= hi {
            return Err(IntervalError::EmptyInterval);
        }
        Ok(IntervalSet {
            intervals: vec![Interval {
                lo: Some(lo),
                hi: Some(hi),
            }],
        })
    }

    /// Canonicalizes a raw list of bounded pairs: sort, merge overlaps and
    /// adjacencies. Rejects any pair with `lo >= hi`.
    pub fn normalize(raw: Vec<(Rational, Rational)>) -> Result<Self, IntervalError> {
        let mut ivs = Vec::with_capacity(raw.len());
        for (lo, hi) in raw {
            if lo >= hi {
                return Err(IntervalError::EmptyInterval);
            }
            ivs.push(Interval {
                lo: Some(lo),
                hi: Some(hi),
            });
        }
        Ok(Self::canonical(ivs))
    }

    fn canonical(mut ivs: Vec<Interval>) -> Self {
        ivs.sort_by(|a, b| cmp_lo(&a.lo, &b.lo).then(cmp_hi(&b.hi, &a.hi)));
        let mut out: Vec<Interval> = Vec::with_capacity(ivs.len());
        for iv in ivs {
            match out.last_mut() {
                Some(last) if cmp_lo_hi(&iv.lo, &last.hi) != Ordering::Greater => {
                    if cmp_hi(&iv.hi, &last.hi) == Ordering::Greater {
                        last.hi = iv.hi;
                    }
                }
                _ => out.push(iv),
            }
        }
        IntervalSet { intervals: out }
    }

    pub fn components(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn is_bounded(&self) -> bool {
        self.intervals
            .iter()
            .all(|iv| iv.lo.is_some() && iv.hi.is_some())
    }

    pub fn measure(&self) -> Measure {
        let mut total = Rational::from_integer(0.into());
        for iv in &self.intervals {
            match (&iv.lo, &iv.hi) {
                (Some(lo), Some(hi)) => total += hi - lo,
                _ => return Measure::Infinite,
            }
        }
        Measure::Finite(total)
    }

    /// Finite measure or panic; use on sets known to be bounded.
    pub fn measure_finite(&self) -> Rational {
        match self.measure() {
            Measure::Finite(r) => r,
            Measure::Infinite => panic!("measure of unbounded set"),
        }
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        let mut ivs = self.intervals.clone();
        ivs.extend(other.intervals.iter().cloned());
        Self::canonical(ivs)
    }

    pub fn intersect(&self, other: &IntervalSet) -> IntervalSet {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.intervals.len() && j < other.intervals.len() {
            let a = &self.intervals[i];
            let b = &other.intervals[j];
            let lo = if cmp_lo(&a.lo, &b.lo) == Ordering::Greater {
                a.lo.clone()
            } else {
                b.lo.clone()
            };
            let hi = if cmp_hi(&a.hi, &b.hi) == Ordering::Less {
                a.hi.clone()
            } else {
                b.hi.clone()
            };
            if cmp_lo_hi(&lo, &hi) == Ordering::Less {
                out.push(Interval { lo, hi });
            }
            if cmp_hi(&a.hi, &b.hi) == Ordering::Less {
                i += 1;
            } else {
                j += 1;
            }
        }
        IntervalSet { intervals: out }
    }

    /// Open-interval complement over the whole line; endpoint sets are null
    /// and dropped.
    pub fn complement(&self) -> IntervalSet {
        if self.intervals.is_empty() {
            return Self::full_line();
        }
        let mut out = Vec::new();
        let mut prev_hi: Bound = None; // running from -inf
        let mut first = true;
        for iv in &self.intervals {
            if first {
                if let Some(lo) = &iv.lo {
                    out.push(Interval {
                        lo: None,
                        hi: Some(lo.clone()),
                    });
                }
                first = false;
            } else if let (Some(g_lo), Some(g_hi)) = (&prev_hi, &iv.lo) {
                if g_lo < g_hi {
                    out.push(Interval {
                        lo: Some(g_lo.clone()),
                        hi: Some(g_hi.clone()),
                    });
                }
            }
            prev_hi = iv.hi.clone();
        }
        if let Some(hi) = prev_hi {
            out.push(Interval {
                lo: Some(hi),
                hi: None,
            });
        }
        IntervalSet { intervals: out }
    }

    /// `window \ closure(self)` as open intervals.
    pub fn complement_within(
        &self,
        window: (&Rational, &Rational),
    ) -> Result<IntervalSet, IntervalError> {
        let (lo, hi) = window;
        if lo >= hi {
            return Err(IntervalError::InvalidWindow);
        }
        let w = IntervalSet::interval(lo.clone(), hi.clone()).unwrap();
        Ok(self.complement().intersect(&w))
    }

    pub fn symmetric_difference(&self, other: &IntervalSet) -> IntervalSet {
        let a_not_b = self.intersect(&other.complement());
        let b_not_a = other.intersect(&self.complement());
        a_not_b.union(&b_not_a)
    }

    pub fn translate(&self, z: &Rational) -> IntervalSet {
        IntervalSet {
            intervals: self
                .intervals
                .iter()
                .map(|iv| Interval {
                    lo: iv.lo.as_ref().map(|r| r + z),
                    hi: iv.hi.as_ref().map(|r| r + z),
                })
                .collect(),
        }
    }

    /// `|(x-h, x+h) ∩ self|` (or the one-sided variants), exact.
    pub fn trace_measure(
        &self,
        x: &Rational,
        h: &Rational,
        side: Side,
    ) -> Result<Rational, IntervalError> {
        if h <= &Rational::from_integer(0.into()) {
            return Err(IntervalError::NonPositiveRadius);
        }
        let (lo, hi) = match side {
            Side::Left => (x - h, x.clone()),
            Side::Right => (x.clone(), x + h),
            Side::Both => (x - h, x + h),
        };
        let w = IntervalSet::interval(lo, hi).unwrap();
        Ok(self.intersect(&w).measure_finite())
    }

    /// Open-interval membership.
    pub fn contains(&self, x: &Rational) -> bool {
        self.intervals.iter().any(|iv| {
            cmp_lo_hi(&iv.lo, &Some(x.clone())) == Ordering::Less
                && cmp_lo_hi(&Some(x.clone()), &iv.hi) == Ordering::Less
        })
    }

    /// What the set looks like immediately to one side of `x`:
    /// either the set or its complement fills `(x, x+margin)` (resp. the
    /// left mirror) entirely. `margin = None` means the structure extends
    /// to infinity. This is what makes verdicts on finite unions exact.
    pub fn side_structure(&self, x: &Rational, side: Side) -> SideLocal {
        assert!(side != Side::Both, "side_structure is one-sided");
        match side {
            Side::Right => {
                // first interval whose upper bound lies strictly right of x
                for iv in &self.intervals {
                    if cmp_lo_hi(&Some(x.clone()), &iv.hi) == Ordering::Less {
                        return if cmp_lo(&iv.lo, &Some(x.clone())) != Ordering::Greater {
                            SideLocal::InSet(iv.hi.as_ref().map(|h| h - x))
                        } else {
                            SideLocal::InGap(iv.lo.as_ref().map(|l| l - x))
                        };
                    }
                }
                SideLocal::InGap(None)
            }
            Side::Left => {
                for iv in self.intervals.iter().rev() {
                    if cmp_lo(&iv.lo, &Some(x.clone())) == Ordering::Less {
                        return if cmp_lo_hi(&Some(x.clone()), &iv.hi) != Ordering::Greater {
                            SideLocal::InSet(iv.lo.as_ref().map(|l| x - l))
                        } else {
                            SideLocal::InGap(iv.hi.as_ref().map(|h| x - h))
                        };
                    }
                }
                SideLocal::InGap(None)
            }
            Side::Both => unreachable!(),
        }
    }

    /// Exact local classification of `x` relative to the set.
    pub fn locate(&self, x: &Rational) -> Location {
        let left = self.side_structure(x, Side::Left);
        let right = self.side_structure(x, Side::Right);
        match (left, right) {
            (SideLocal::InSet(a), SideLocal::InSet(b)) => Location::Interior(min_margin(a, b)),
            (SideLocal::InGap(a), SideLocal::InGap(b)) => Location::Outside(min_margin(a, b)),
            (SideLocal::InSet(a), SideLocal::InGap(b)) => Location::Boundary {
                set_on_left: true,
                margin: min_margin(a, b),
            },
            (SideLocal::InGap(a), SideLocal::InSet(b)) => Location::Boundary {
                set_on_left: false,
                margin: min_margin(a, b),
            },
        }
    }

    pub fn to_json(&self) -> Value {
        let mut unbounded_left = false;
        let mut unbounded_right = false;
        let mut ivs = Vec::new();
        for iv in &self.intervals {
            // infinite endpoints encode as the pair [0, 0]
            let (ln, ld) = match &iv.lo {
                Some(r) => (rat_to_json(r), true),
                None => {
                    unbounded_left = true;
                    (json!([0, 0]), false)
                }
            };
            let _ = ld;
            let hn = match &iv.hi {
                Some(r) => rat_to_json(r),
                None => {
                    unbounded_right = true;
                    json!([0, 0])
                }
            };
            let l = ln.as_array().unwrap().clone();
            let h = hn.as_array().unwrap().clone();
            ivs.push(json!([l[0], l[1], h[0], h[1]]));
        }
        json!({
            "intervals": ivs,
            "unbounded_left": unbounded_left,
            "unbounded_right": unbounded_right,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, IntervalError> {
        let ivs = v
            .get("intervals")
            .and_then(Value::as_array)
            .ok_or(IntervalError::BadJson)?;
        let mut out = Vec::new();
        for iv in ivs {
            let quad = iv.as_array().ok_or(IntervalError::BadJson)?;
            if quad.len() != 4 {
                return Err(IntervalError::BadJson);
            }
            let lo = bound_from_parts(&quad[0], &quad[1])?;
            let hi = bound_from_parts(&quad[2], &quad[3])?;
            if cmp_lo_hi(&lo, &hi) != Ordering::Less {
                return Err(IntervalError::EmptyInterval);
            }
            out.push(Interval { lo, hi });
        }
        Ok(Self::canonical(out))
    }
}

fn bound_from_parts(n: &Value, d: &Value) -> Result<Bound, IntervalError> {
    // denominator 0 marks the infinite endpoint
    if d.as_i64() == Some(0) || d.as_str().map(|s| s.trim() == "0").unwrap_or(false) {
        return Ok(None);
    }
    rat_from_json(&Value::Array(vec![n.clone(), d.clone()]))
        .map(Some)
        .ok_or(IntervalError::BadJson)
}

fn min_margin(a: Option<Rational>, b: Option<Rational>) -> Option<Rational> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => Some(a.min(b)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SideLocal {
    /// The set fills `(x, x+m)` (or the left mirror); `None` = infinite.
    InSet(Option<Rational>),
    /// The complement fills that one-sided neighborhood.
    InGap(Option<Rational>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Location {
    /// Complement trace is exactly 0 for radii below the margin.
    Interior(Option<Rational>),
    /// Set trace is exactly 0 for radii below the margin.
    Outside(Option<Rational>),
    /// Set on one side, gap on the other; both traces equal the radius.
    Boundary {
        set_on_left: bool,
        margin: Option<Rational>,
    },
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self
            .intervals
            .iter()
            .map(|iv| {
                let lo = iv
                    .lo
                    .as_ref()
                    .map(|r| r.to_string())
                    .unwrap_or_else(|| "-inf".into());
                let hi = iv
                    .hi
                    .as_ref()
                    .map(|r| r.to_string())
                    .unwrap_or_else(|| "+inf".into());
                format!("({lo},{hi})")
            })
            .collect();
        write!(f, "{}", parts.join(" ∪ "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn set(pairs: &[(i64, i64, i64, i64)]) -> IntervalSet {
        IntervalSet::normalize(
            pairs
                .iter()
                .map(|&(a, b, c, d)| (rat(a, b), rat(c, d)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn normalize_adjacency_merge() {
        let s = IntervalSet::normalize(vec![(rat_int(0), rat_int(1)), (rat_int(1), rat_int(2))])
            .unwrap();
        assert_eq!(s.components().len(), 1);
        assert_eq!(s.measure_finite(), rat_int(2));
    }

    #[test]
    fn normalize_absorption_and_sort() {
        let s = IntervalSet::normalize(vec![(rat_int(0), rat_int(1)), (rat(1, 2), rat(3, 4))])
            .unwrap();
        assert_eq!(s, set(&[(0, 1, 1, 1)]));
        let s = IntervalSet::normalize(vec![(rat_int(1), rat_int(2)), (rat_int(0), rat(1, 2))])
            .unwrap();
        assert_eq!(s.components().len(), 2);
        assert_eq!(s.components()[0].lo(), Some(&rat_int(0)));
    }

    #[test]
    fn normalize_rejects_empty_pair() {
        assert_eq!(
            IntervalSet::normalize(vec![(rat_int(1), rat_int(1))]),
            Err(IntervalError::EmptyInterval)
        );
    }

    #[test]
    fn measure_examples() {
        assert_eq!(set(&[(0, 1, 1, 2), (1, 1, 2, 1)]).measure_finite(), rat(3, 2));
        assert_eq!(IntervalSet::empty().measure(), Measure::Finite(rat_int(0)));
        assert_eq!(IntervalSet::full_line().measure(), Measure::Infinite);
    }

    #[test]
    fn intersect_translate_complement() {
        let a = set(&[(0, 1, 2, 1)]);
        let b = set(&[(1, 1, 3, 1)]);
        assert_eq!(a.intersect(&b), set(&[(1, 1, 2, 1)]));

        let t = set(&[(0, 1, 1, 1)]).translate(&rat_int(5));
        assert_eq!(t, set(&[(5, 1, 6, 1)]));

        let c = set(&[(1, 1, 2, 1)])
            .complement_within((&rat_int(0), &rat_int(3)))
            .unwrap();
        assert_eq!(c, set(&[(0, 1, 1, 1), (2, 1, 3, 1)]));
    }

    #[test]
    fn trace_measure_examples() {
        let half_line = IntervalSet::ray_right(rat_int(0));
        let x = rat_int(0);
        let h = rat_int(1);
        assert_eq!(
            half_line.trace_measure(&x, &h, Side::Right).unwrap(),
            rat_int(1)
        );
        assert_eq!(
            half_line.trace_measure(&x, &h, Side::Left).unwrap(),
            rat_int(0)
        );
        let sym = set(&[(-1, 1, 1, 1)]);
        assert_eq!(
            sym.trace_measure(&rat_int(0), &rat(1, 2), Side::Both).unwrap(),
            rat_int(1)
        );
        assert_eq!(
            sym.trace_measure(&rat_int(0), &rat(-1, 2), Side::Both),
            Err(IntervalError::NonPositiveRadius)
        );
    }

    #[test]
    fn locate_cases() {
        let a = set(&[(0, 1, 1, 1), (2, 1, 3, 1)]);
        assert!(matches!(a.locate(&rat(1, 2)), Location::Interior(Some(m)) if m == rat(1, 2)));
        assert!(matches!(a.locate(&rat(3, 2)), Location::Outside(Some(m)) if m == rat(1, 2)));
        assert!(matches!(
            a.locate(&rat_int(1)),
            Location::Boundary { set_on_left: true, .. }
        ));
        assert!(matches!(
            a.locate(&rat_int(0)),
            Location::Boundary { set_on_left: false, .. }
        ));
        assert!(matches!(
            IntervalSet::full_line().locate(&rat_int(7)),
            Location::Interior(None)
        ));
        assert!(matches!(
            IntervalSet::empty().locate(&rat_int(7)),
            Location::Outside(None)
        ));
    }

    #[test]
    fn rays_and_complement() {
        let r = IntervalSet::ray_right(rat_int(0));
        let c = r.complement();
        assert_eq!(c, IntervalSet::ray_left(rat_int(0)));
        assert_eq!(r.union(&c).measure(), Measure::Infinite);
        assert_eq!(r.intersect(&c), IntervalSet::empty());
    }

    #[test]
    fn json_round_trip() {
        let s = set(&[(0, 1, 1, 2), (1, 1, 2, 1)]).union(&IntervalSet::ray_right(rat_int(10)));
        let v = s.to_json();
        assert_eq!(v["unbounded_right"], Value::Bool(true));
        let back = IntervalSet::from_json(&v).unwrap();
        assert_eq!(back, s);
    }
}
