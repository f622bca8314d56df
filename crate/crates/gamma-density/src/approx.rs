//! Gamma-approximately continuous functions: a function is approximately
//! continuous at x0 (relative to a supplied witness set A) when x0 is a
//! gamma-density point of A and f converges to f(x0) along A.
//!
//! Functions are exact piecewise polynomials over rational breakpoints,
//! plus the special unbounded bump sum: triangular bumps of height n on
//! the supports `(a_n, a_n + l_n)` accumulating at 0, which vanish on the
//! witness set yet make the function unbounded. Verdicts are relative to
//! the supplied witness: "false" means this witness fails, not that no
//! witness exists.

use serde_json::{json, Value};
use thiserror::Error;

use crate::density::{classify_point, DensityError, Grid, PointClass, Policy, TraceTarget};
use crate::hp::EvalCtx;
use crate::interval::IntervalSet;
use crate::modulus::ModulusFunction;
use crate::rational::{pow2, rat, rat_int, rat_to_f64, rat_to_json, Rational};
use crate::scale::ScaleFamily;
use crate::topology::{Kernel, RepresentableSet, TopologyError};
use num_traits::{Signed, Zero};

#[derive(Debug, Error)]
pub enum ApproxError {
    #[error("no witness registered for this probe point")]
    MissingWitness,
    #[error("outer map is discontinuous at the inner value {0}")]
    DiscontinuousAt(Rational),
    #[error("witness kernels cannot be combined exactly")]
    UnsupportedCombination,
    #[error(transparent)]
    Density(#[from] DensityError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

/// One polynomial piece on `[lo, hi)`; `None` bounds are infinite.
#[derive(Debug, Clone, PartialEq)]
pub struct Piece {
    pub lo: Option<Rational>,
    pub hi: Option<Rational>,
    /// coefficients `c0 + c1 x + c2 x^2 + ...`
    pub poly: Vec<Rational>,
}

impl Piece {
    fn contains(&self, x: &Rational) -> bool {
        let lo_ok = self.lo.as_ref().map_or(true, |l| l <= x);
        let hi_ok = self.hi.as_ref().map_or(true, |h| x < h);
        lo_ok && hi_ok
    }

    fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.poly.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

/// Exact real function expressions.
#[derive(Debug, Clone, PartialEq)]
pub enum RealFunction {
    /// Value 0 outside all pieces.
    Piecewise { pieces: Vec<Piece> },
    /// Sum of triangular bumps of height n on `(a_n, a_n + l_n)` for
    /// n = 1..=n_max; identically 0 off the supports.
    BumpSum { n_max: u32 },
    Sum(Box<RealFunction>, Box<RealFunction>),
    Scaled(Rational, Box<RealFunction>),
    Compose {
        outer: Box<RealFunction>,
        inner: Box<RealFunction>,
    },
}

fn a_n(n: u32) -> Rational {
    pow2(-(n as i32) - 1)
}

fn ell_n(n: u32) -> Rational {
    pow2(-2 * (n as i32) - 2)
}

/// Bump peak location `c_n = a_n + l_n / 2`.
pub fn bump_peak(n: u32) -> Rational {
    a_n(n) + ell_n(n) / rat(2, 1)
}

impl RealFunction {
    pub fn constant(c: Rational) -> Self {
        RealFunction::Piecewise {
            pieces: vec![Piece {
                lo: None,
                hi: None,
                poly: vec![c],
            }],
        }
    }

    pub fn zero() -> Self {
        RealFunction::constant(Rational::zero())
    }

    /// `a x + b` on the whole line.
    pub fn affine(a: Rational, b: Rational) -> Self {
        RealFunction::Piecewise {
            pieces: vec![Piece {
                lo: None,
                hi: None,
                poly: vec![b, a],
            }],
        }
    }

    pub fn square() -> Self {
        RealFunction::Piecewise {
            pieces: vec![Piece {
                lo: None,
                hi: None,
                poly: vec![Rational::zero(), Rational::zero(), rat_int(1)],
            }],
        }
    }

    /// `|t|` as two affine pieces meeting at 0.
    pub fn abs() -> Self {
        RealFunction::Piecewise {
            pieces: vec![
                Piece {
                    lo: None,
                    hi: Some(Rational::zero()),
                    poly: vec![Rational::zero(), rat_int(-1)],
                },
                Piece {
                    lo: Some(Rational::zero()),
                    hi: None,
                    poly: vec![Rational::zero(), rat_int(1)],
                },
            ],
        }
    }

    /// `sign(t)` — deliberately discontinuous at 0.
    pub fn sign() -> Self {
        RealFunction::Piecewise {
            pieces: vec![
                Piece {
                    lo: None,
                    hi: Some(Rational::zero()),
                    poly: vec![rat_int(-1)],
                },
                Piece {
                    lo: Some(Rational::zero()),
                    hi: None,
                    poly: vec![rat_int(1)],
                },
            ],
        }
    }

    /// Step function: 1 on `[0, inf)`, 0 below (pieces are lo-inclusive).
    pub fn step() -> Self {
        RealFunction::Piecewise {
            pieces: vec![Piece {
                lo: Some(Rational::zero()),
                hi: None,
                poly: vec![rat_int(1)],
            }],
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        match self {
            RealFunction::Piecewise { pieces } => pieces
                .iter()
                .find(|p| p.contains(x))
                .map(|p| p.eval(x))
                .unwrap_or_else(Rational::zero),
            RealFunction::BumpSum { n_max } => bump_sum_eval(*n_max, x),
            RealFunction::Sum(f, g) => f.eval(x) + g.eval(x),
            RealFunction::Scaled(c, f) => c * f.eval(x),
            RealFunction::Compose { outer, inner } => outer.eval(&inner.eval(x)),
        }
    }

    /// Two-sided continuity of a piecewise map at `v`; used as the
    /// hypothesis check for composition.
    pub fn continuous_at(&self, v: &Rational) -> bool {
        match self {
            RealFunction::Piecewise { pieces } => {
                let value = self.eval(v);
                // limit from the left: piece covering (v - eps, v)
                let left = pieces
                    .iter()
                    .find(|p| {
                        p.lo.as_ref().map_or(true, |l| l < v)
                            && p.hi.as_ref().map_or(true, |h| v <= h)
                    })
                    .map(|p| p.eval(v))
                    .unwrap_or_else(Rational::zero);
                // limit from the right: piece covering [v, v + eps)
                let right = pieces
                    .iter()
                    .find(|p| p.contains(v))
                    .map(|p| p.eval(v))
                    .unwrap_or_else(Rational::zero);
                left == value && right == value
            }
            // the remaining forms are continuous everywhere by construction
            _ => true,
        }
    }

    /// Breakpoints and extremal nodes inside `[lo, hi]`; piecewise-affine
    /// expressions attain their sup over an interval on this node set.
    pub fn nodes(&self, lo: &Rational, hi: &Rational) -> Vec<Rational> {
        let mut out = vec![lo.clone(), hi.clone()];
        self.collect_nodes(lo, hi, &mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_nodes(&self, lo: &Rational, hi: &Rational, out: &mut Vec<Rational>) {
        match self {
            RealFunction::Piecewise { pieces } => {
                for p in pieces {
                    for b in [&p.lo, &p.hi].into_iter().flatten() {
                        if lo <= b && b <= hi {
                            out.push(b.clone());
                        }
                    }
                }
            }
            RealFunction::BumpSum { n_max } => {
                for n in 1..=*n_max {
                    for b in [a_n(n), bump_peak(n), a_n(n) + ell_n(n)] {
                        if lo <= &b && &b <= hi {
                            out.push(b);
                        }
                    }
                }
            }
            RealFunction::Sum(f, g) => {
                f.collect_nodes(lo, hi, out);
                g.collect_nodes(lo, hi, out);
            }
            RealFunction::Scaled(_, f) => f.collect_nodes(lo, hi, out),
            RealFunction::Compose { inner, .. } => inner.collect_nodes(lo, hi, out),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            RealFunction::Piecewise { pieces } => json!({
                "pieces": pieces.iter().map(|p| json!({
                    "lo": p.lo.as_ref().map(rat_to_json),
                    "hi": p.hi.as_ref().map(rat_to_json),
                    "poly": p.poly.iter().map(rat_to_json).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            }),
            RealFunction::BumpSum { n_max } => json!({"special": "bump_sum", "n_max": n_max}),
            RealFunction::Sum(f, g) => json!({"sum": [f.to_json(), g.to_json()]}),
            RealFunction::Scaled(c, f) => json!({"scaled": {"c": rat_to_json(c), "f": f.to_json()}}),
            RealFunction::Compose { outer, inner } => {
                json!({"compose": {"outer": outer.to_json(), "inner": inner.to_json()}})
            }
        }
    }
}

fn bump_sum_eval(n_max: u32, x: &Rational) -> Rational {
    if x <= &Rational::zero() {
        return Rational::zero();
    }
    for n in 1..=n_max {
        let lo = a_n(n);
        let len = ell_n(n);
        let hi = &lo + &len;
        if x >= &hi {
            // supports are ordered decreasingly: x sits in the gap between
            // support n and support n-1 (endpoints excluded from supports)
            return Rational::zero();
        }
        if x > &lo {
            // triangular bump of height n with peak at the midpoint
            let peak = bump_peak(n);
            let slope = rat(2, 1) * rat_int(n as i64) / &len;
            return if x <= &peak {
                &slope * (x - &lo)
            } else {
                slope * (hi - x)
            };
        }
    }
    Rational::zero()
}

/// A function together with, per probe point, the set along which its
/// limit is taken.
#[derive(Debug, Clone)]
pub struct WitnessedFunction {
    pub func: RealFunction,
    pub witnesses: Vec<(Rational, RepresentableSet)>,
}

impl WitnessedFunction {
    pub fn new(func: RealFunction) -> Self {
        WitnessedFunction {
            func,
            witnesses: vec![],
        }
    }

    pub fn with_witness(mut self, x0: Rational, witness: RepresentableSet) -> Self {
        self.witnesses.push((x0, witness));
        self
    }

    pub fn witness_for(&self, x0: &Rational) -> Option<&RepresentableSet> {
        self.witnesses.iter().find(|(x, _)| x == x0).map(|(_, w)| w)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlongLimit {
    Converges,
    Diverges,
    Undecided,
}

#[derive(Debug, Clone)]
pub struct ApproxContinuityVerdict {
    pub witness_class: PointClass,
    pub along_limit: AlongLimit,
    /// `None` when either ingredient is undecided.
    pub overall: Option<bool>,
    pub samples: usize,
}

impl ApproxContinuityVerdict {
    pub fn passes(&self) -> bool {
        self.overall == Some(true)
    }
}

/// Picks a witness point p with `0 < |p - x0| <= alpha`, preferring the
/// structurally safe middle of the local components; membership of the
/// candidate is verified exactly before it is used.
fn witness_point_near(
    witness: &RepresentableSet,
    x0: &Rational,
    alpha: &Rational,
    scale_index: i32,
) -> Option<Rational> {
    let window_lo = x0 - alpha;
    let window_hi = x0 + alpha;
    let local: IntervalSet = match &witness.kernel {
        Kernel::Set(s) => s.clone(),
        Kernel::Family(f) => {
            // materialize the construction deep enough that every
            // component boundary inside the window is genuine
            let depth = (scale_index + 8).max(1) as u32;
            match f {
                ScaleFamily::Complement { inner } => {
                    inner.truncate_to_interval_set(depth).ok()?
                }
                _ => f.truncate_to_interval_set(depth).ok()?.complement(),
            }
        }
    };
    let clipped = local
        .intersect(&IntervalSet::interval(window_lo, window_hi).ok()?);
    let mut candidates: Vec<Rational> = Vec::new();
    for iv in clipped.components() {
        if let (Some(lo), Some(hi)) = (iv.lo(), iv.hi()) {
            candidates.push((lo + hi) / rat(2, 1));
            // a component straddling x0 has its midpoint at or near x0;
            // offer the midpoints of its two halves as well
            if lo < x0 && x0 < hi {
                candidates.push((lo + x0) / rat(2, 1));
                candidates.push((x0 + hi) / rat(2, 1));
            }
        }
    }
    // farthest from x0 first: the innermost component of a materialized
    // family may still hide deeper construction intervals
    candidates.sort_by(|a, b| {
        (b - x0)
            .abs()
            .partial_cmp(&(a - x0).abs())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    candidates
        .into_iter()
        .find(|p| p != x0 && witness.contains(p))
}

/// Does f converge to f(x0) along the witness, and is x0 a gamma-density
/// point of the witness?
pub fn check_point(
    f: &WitnessedFunction,
    x0: &Rational,
    gamma: &ModulusFunction,
    grid: &Grid,
    policy: &Policy,
    ctx: &mut EvalCtx,
) -> Result<ApproxContinuityVerdict, ApproxError> {
    let witness = f.witness_for(x0).ok_or(ApproxError::MissingWitness)?;
    let verdict = classify_point(gamma, witness as &dyn TraceTarget, x0, grid, policy, ctx)?;

    let f_x0 = f.func.eval(x0);
    let mut diffs: Vec<f64> = Vec::new();
    for k in 3..=60 {
        let alpha = pow2(-k);
        if let Some(p) = witness_point_near(witness, x0, &alpha, k) {
            let d = (f.func.eval(&p) - &f_x0).abs();
            diffs.push(rat_to_f64(&d));
        }
    }
    let along = if diffs.len() < 5 {
        AlongLimit::Undecided
    } else {
        let tail = &diffs[diffs.len() - 5..];
        let max = tail.iter().cloned().fold(0.0f64, f64::max);
        let min = tail.iter().cloned().fold(f64::INFINITY, f64::min);
        if max < 1e-9 {
            AlongLimit::Converges
        } else if min > 1e-6 {
            AlongLimit::Diverges
        } else {
            AlongLimit::Undecided
        }
    };

    let overall = match (verdict.class, along) {
        (PointClass::Indeterminate, _) => None,
        (_, AlongLimit::Undecided) => None,
        (PointClass::GammaDensityPoint, AlongLimit::Converges) => Some(true),
        _ => Some(false),
    };
    Ok(ApproxContinuityVerdict {
        witness_class: verdict.class,
        along_limit: along,
        overall,
        samples: diffs.len(),
    })
}

/// Intersection of two witnesses; if x0 is a density point of both, the
/// intersection law keeps it one of the result.
pub fn combine_witnesses(
    a: &RepresentableSet,
    b: &RepresentableSet,
) -> Result<RepresentableSet, ApproxError> {
    let full = |r: &RepresentableSet| {
        matches!(&r.kernel, Kernel::Set(s) if *s == IntervalSet::full_line())
            && r.removed.is_empty()
    };
    if full(a) {
        return Ok(b.clone());
    }
    if full(b) {
        return Ok(a.clone());
    }
    match (&a.kernel, &b.kernel) {
        (Kernel::Set(x), Kernel::Set(y)) => {
            let mut out = RepresentableSet::from_set(x.intersect(y));
            for p in &a.added {
                if b.contains(p) && !out.added.contains(p) {
                    out.added.push(p.clone());
                }
            }
            for p in &b.added {
                if a.contains(p) && !out.added.contains(p) {
                    out.added.push(p.clone());
                }
            }
            Ok(out)
        }
        (Kernel::Family(x), Kernel::Family(y)) if x == y => Ok(a.clone()),
        _ => Err(ApproxError::UnsupportedCombination),
    }
}

#[derive(Debug, Clone)]
pub struct VectorSpaceReport {
    pub f_passes: bool,
    pub g_passes: bool,
    pub sum_passes: bool,
    pub scaled_passes: bool,
}

/// Closure of approximate continuity under sum and scalar multiple at a
/// shared probe point, using the intersected witness.
pub fn sum_is_approx_continuous(
    f: &WitnessedFunction,
    g: &WitnessedFunction,
    x0: &Rational,
    scalar: &Rational,
    gamma: &ModulusFunction,
    grid: &Grid,
    policy: &Policy,
    ctx: &mut EvalCtx,
) -> Result<VectorSpaceReport, ApproxError> {
    let fv = check_point(f, x0, gamma, grid, policy, ctx)?;
    let gv = check_point(g, x0, gamma, grid, policy, ctx)?;
    let wf = f.witness_for(x0).ok_or(ApproxError::MissingWitness)?;
    let wg = g.witness_for(x0).ok_or(ApproxError::MissingWitness)?;
    let combined = combine_witnesses(wf, wg)?;

    let sum = WitnessedFunction::new(RealFunction::Sum(
        Box::new(f.func.clone()),
        Box::new(g.func.clone()),
    ))
    .with_witness(x0.clone(), combined);
    let sv = check_point(&sum, x0, gamma, grid, policy, ctx)?;

    let scaled = WitnessedFunction::new(RealFunction::Scaled(
        scalar.clone(),
        Box::new(f.func.clone()),
    ))
    .with_witness(x0.clone(), wf.clone());
    let cv = check_point(&scaled, x0, gamma, grid, policy, ctx)?;

    Ok(VectorSpaceReport {
        f_passes: fv.passes(),
        g_passes: gv.passes(),
        sum_passes: sv.passes(),
        scaled_passes: cv.passes(),
    })
}

/// The unbounded counterexample: triangular bumps of height n with the
/// complement of their supports as witness at 0.
pub fn build_bump_function(n_max: u32) -> WitnessedFunction {
    WitnessedFunction::new(RealFunction::BumpSum { n_max }).with_witness(
        Rational::zero(),
        RepresentableSet::from_family(ScaleFamily::bump_support()),
    )
}

/// Exact sup of the truncated bump sum over the line: the tallest peak.
pub fn bump_sup(n_max: u32) -> Rational {
    rat_int(n_max as i64)
}

/// Composition with a continuous map keeps approximate continuity with
/// the same witness; a map discontinuous at f(x0) is rejected as a
/// hypothesis failure.
pub fn compose_continuous(
    f: &WitnessedFunction,
    phi: &RealFunction,
    x0: &Rational,
    gamma: &ModulusFunction,
    grid: &Grid,
    policy: &Policy,
    ctx: &mut EvalCtx,
) -> Result<ApproxContinuityVerdict, ApproxError> {
    let inner_value = f.func.eval(x0);
    if !phi.continuous_at(&inner_value) {
        return Err(ApproxError::DiscontinuousAt(inner_value));
    }
    let composed = WitnessedFunction {
        func: RealFunction::Compose {
            outer: Box::new(phi.clone()),
            inner: Box::new(f.func.clone()),
        },
        witnesses: f.witnesses.clone(),
    };
    check_point(&composed, x0, gamma, grid, policy, ctx)
}

/// Exact sup of `|a - b|` over `[lo, hi]` for piecewise-affine
/// expressions (attained on the joint node set).
pub fn sup_distance(a: &RealFunction, b: &RealFunction, lo: &Rational, hi: &Rational) -> Rational {
    let mut nodes = a.nodes(lo, hi);
    nodes.extend(b.nodes(lo, hi));
    nodes.sort();
    nodes.dedup();
    let mut sup = Rational::zero();
    for x in &nodes {
        let d = (a.eval(x) - b.eval(x)).abs();
        if d > sup {
            sup = d;
        }
    }
    sup
}

#[derive(Debug, Clone)]
pub struct UniformLimitReport {
    /// `sup |f_n - f|` over the stated domain, per n.
    pub sup_distances: Vec<Rational>,
    pub sup_nonincreasing: bool,
    pub limit_passes: bool,
    /// Realized three-epsilon bound at the closest approximant:
    /// `|f(x) - f(x0)| <= 2 sup|f_n - f| + |f_n(x) - f_n(x0)|`.
    pub realized_bound: Rational,
}

/// A uniform limit of approximately continuous functions (all passing at
/// x0 with the supplied common witness) is approximately continuous at
/// x0; the report carries the explicit epsilon bookkeeping.
pub fn uniform_limit_check(
    sequence: &[WitnessedFunction],
    f: &WitnessedFunction,
    x0: &Rational,
    domain: (&Rational, &Rational),
    gamma: &ModulusFunction,
    grid: &Grid,
    policy: &Policy,
    ctx: &mut EvalCtx,
) -> Result<UniformLimitReport, ApproxError> {
    if sequence.is_empty() {
        return Err(ApproxError::MissingWitness);
    }
    let mut sups = Vec::with_capacity(sequence.len());
    for fun in sequence {
        let v = check_point(fun, x0, gamma, grid, policy, ctx)?;
        if !v.passes() {
            return Err(ApproxError::MissingWitness);
        }
        sups.push(sup_distance(&fun.func, &f.func, domain.0, domain.1));
    }
    let decreasing = sups.windows(2).all(|w| w[1] <= w[0]);
    let last = sups.last().cloned().unwrap();
    let limit_verdict = check_point(f, x0, gamma, grid, policy, ctx)?;

    // realized three-epsilon bound at a nearby witness point
    let witness = f.witness_for(x0).ok_or(ApproxError::MissingWitness)?;
    let nearest = sequence.last().unwrap();
    let bound = match witness_point_near(witness, x0, &rat(1, 64), 6) {
        Some(p) => {
            rat(2, 1) * &last + (nearest.func.eval(&p) - nearest.func.eval(x0)).abs()
        }
        None => rat(2, 1) * &last,
    };
    Ok(UniformLimitReport {
        sup_nonincreasing: decreasing,
        sup_distances: sups,
        limit_passes: limit_verdict.passes(),
        realized_bound: bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> EvalCtx {
        EvalCtx::new(60)
    }

    fn full_line_witness() -> RepresentableSet {
        RepresentableSet::from_set(IntervalSet::full_line())
    }

    #[test]
    fn bump_values_exact() {
        let f = RealFunction::BumpSum { n_max: 10 };
        // peak values: f(c_n) = n exactly
        for n in 1..=10u32 {
            assert_eq!(f.eval(&bump_peak(n)), rat_int(n as i64));
        }
        // c_3 = 2^-4 + 2^-9 = 33/512
        assert_eq!(bump_peak(3), rat(33, 512));
        // off the supports the function vanishes
        assert_eq!(f.eval(&rat_int(0)), rat_int(0));
        assert_eq!(f.eval(&rat(3, 8)), rat_int(0));
        assert_eq!(f.eval(&rat(1, 4)), rat_int(0)); // support endpoints excluded
        assert_eq!(f.eval(&rat_int(-1)), rat_int(0));
        // witness points carry value 0
        let w = ScaleFamily::bump_support();
        assert_eq!(f.eval(&rat(3, 16)), rat_int(0));
        assert!(w.contains_point(&rat(3, 16)));
    }

    #[test]
    fn bump_sup_is_tallest_peak() {
        for n_max in [1u32, 5, 50] {
            let f = RealFunction::BumpSum { n_max };
            let sup = sup_distance(&f, &RealFunction::zero(), &rat_int(0), &rat_int(1));
            assert_eq!(sup, bump_sup(n_max));
        }
    }

    #[test]
    fn constant_function_passes_everywhere() {
        let mut c = ctx();
        let f = WitnessedFunction::new(RealFunction::zero())
            .with_witness(rat(2, 3), full_line_witness());
        let v = check_point(
            &f,
            &rat(2, 3),
            &ModulusFunction::LogModulus,
            &Grid::default(),
            &Policy::default(),
            &mut c,
        )
        .unwrap();
        assert!(v.passes());
    }

    #[test]
    fn bump_function_passes_at_zero() {
        let mut c = ctx();
        let f = build_bump_function(50);
        for gamma in [
            ModulusFunction::Identity,
            ModulusFunction::power(rat(1, 2)).unwrap(),
        ] {
            let v = check_point(
                &f,
                &rat_int(0),
                &gamma,
                &Grid::default(),
                &Policy::default(),
                &mut c,
            )
            .unwrap();
            assert!(v.passes(), "{}: {v:?}", gamma.name());
        }
    }

    #[test]
    fn one_sided_witness_fails_step() {
        let mut c = ctx();
        let f = WitnessedFunction::new(RealFunction::step()).with_witness(
            rat_int(0),
            RepresentableSet::from_set(IntervalSet::ray_right(rat_int(0))),
        );
        let v = check_point(
            &f,
            &rat_int(0),
            &ModulusFunction::Identity,
            &Grid::default(),
            &Policy::default(),
            &mut c,
        )
        .unwrap();
        // the sampled values agree with f(0), so the failure is driven
        // entirely by the witness being only one-sidedly dense
        assert_eq!(v.overall, Some(false));
        assert_eq!(v.witness_class, PointClass::NotDensityPoint);
        assert_eq!(v.along_limit, AlongLimit::Converges);
    }

    #[test]
    fn witness_combination() {
        let a = RepresentableSet::from_set(
            IntervalSet::interval(rat_int(0), rat_int(1)).unwrap(),
        );
        let b = RepresentableSet::from_set(
            IntervalSet::interval(rat(1, 2), rat_int(2)).unwrap(),
        );
        let c = combine_witnesses(&a, &b).unwrap();
        match &c.kernel {
            Kernel::Set(s) => {
                assert_eq!(*s, IntervalSet::interval(rat(1, 2), rat_int(1)).unwrap())
            }
            _ => panic!("expected set kernel"),
        }
        // full line is the identity element
        let c = combine_witnesses(&full_line_witness(), &a).unwrap();
        assert_eq!(c, a);
        // identical family kernels combine to themselves
        let fam = RepresentableSet::from_family(ScaleFamily::bump_support());
        assert_eq!(combine_witnesses(&fam, &fam).unwrap(), fam);
    }

    #[test]
    fn vector_space_closure() {
        let mut c = ctx();
        let f = build_bump_function(20);
        let g = WitnessedFunction::new(RealFunction::constant(rat_int(7)))
            .with_witness(rat_int(0), full_line_witness());
        let rep = sum_is_approx_continuous(
            &f,
            &g,
            &rat_int(0),
            &rat_int(-3),
            &ModulusFunction::Identity,
            &Grid::default(),
            &Policy::default(),
            &mut c,
        )
        .unwrap();
        assert!(rep.f_passes && rep.g_passes && rep.sum_passes && rep.scaled_passes);
    }

    #[test]
    fn composition_rules() {
        let mut c = ctx();
        let f = build_bump_function(20);
        let g = Grid::default();
        let p = Policy::default();
        let gamma = ModulusFunction::Identity;

        // square and shifted-affine outer maps are continuous at f(0) = 0
        for phi in [
            RealFunction::square(),
            RealFunction::affine(rat_int(3), rat_int(-1)),
            RealFunction::abs(),
        ] {
            let v = compose_continuous(&f, &phi, &rat_int(0), &gamma, &g, &p, &mut c).unwrap();
            assert!(v.passes(), "{phi:?}");
        }

        // identity composition leaves the verdict unchanged
        let id = RealFunction::affine(rat_int(1), rat_int(0));
        let v = compose_continuous(&f, &id, &rat_int(0), &gamma, &g, &p, &mut c).unwrap();
        let direct = check_point(&f, &rat_int(0), &gamma, &g, &p, &mut c).unwrap();
        assert_eq!(v.passes(), direct.passes());

        // sign is discontinuous at 0 = f(0): hypothesis fails
        let err = compose_continuous(&f, &RealFunction::sign(), &rat_int(0), &gamma, &g, &p, &mut c);
        assert!(matches!(err, Err(ApproxError::DiscontinuousAt(_))));
    }

    #[test]
    fn continuity_probe() {
        assert!(RealFunction::abs().continuous_at(&rat_int(0)));
        assert!(RealFunction::square().continuous_at(&rat(7, 3)));
        assert!(!RealFunction::sign().continuous_at(&rat_int(0)));
        assert!(RealFunction::sign().continuous_at(&rat_int(1)));
        assert!(!RealFunction::step().continuous_at(&rat_int(0)));
    }

    #[test]
    fn uniform_limit_three_epsilon() {
        let mut c = ctx();
        // f_n = 1/n, f = 0, common witness = the whole line
        let seq: Vec<WitnessedFunction> = (1..=10)
            .map(|n| {
                WitnessedFunction::new(RealFunction::constant(rat(1, n)))
                    .with_witness(rat_int(0), full_line_witness())
            })
            .collect();
        let f = WitnessedFunction::new(RealFunction::zero())
            .with_witness(rat_int(0), full_line_witness());
        let rep = uniform_limit_check(
            &seq,
            &f,
            &rat_int(0),
            (&rat_int(-1), &rat_int(1)),
            &ModulusFunction::Identity,
            &Grid::default(),
            &Policy::default(),
            &mut c,
        )
        .unwrap();
        assert_eq!(rep.sup_distances[0], rat_int(1));
        assert_eq!(rep.sup_distances[9], rat(1, 10));
        assert!(rep.sup_nonincreasing);
        assert!(rep.limit_passes);
        assert!(rep.realized_bound <= rat(2, 10) + rat(1, 1));
    }

    #[test]
    fn function_json_descriptors() {
        let f = RealFunction::BumpSum { n_max: 5 };
        assert_eq!(f.to_json()["special"], "bump_sum");
        let g = RealFunction::abs();
        assert_eq!(g.to_json()["pieces"].as_array().unwrap().len(), 2);
    }
}
