//! The gamma-density ratio engine: exact trace measures fed through a
//! modulus, stabilization-based limit estimation, and point
//! classification, with an exact shortcut for finitely-structured sets.
//!
//! A point x is a gamma-density point of A when
//! `gamma(|(x-a, x+a) ∩ A^c|) / gamma(2a) -> 0` as `a -> 0+`; one-sided
//! variants use the window `(x-a, x)` or `(x, x+a)` and denominator
//! `gamma(a)`. A gamma-dispersion point of A is a gamma-density point of
//! `A^c`, classified by tracing the measure of A itself — never by
//! `1 - ratio`, which a nonlinear gamma does not respect.

use serde_json::{json, Value};
use thiserror::Error;

use crate::hp::EvalCtx;
use crate::interval::{IntervalError, IntervalSet, Location, Side, SideLocal};
use crate::modulus::{ModulusError, ModulusFunction, PsiDescriptor, PsiForm};
use crate::rational::{pow2, rat, rat_int, rat_to_json, Rational};
use crate::scale::{ScaleError, ScaleFamily};
use num_traits::Zero;

#[derive(Debug, Error)]
pub enum DensityError {
    #[error("point lies outside the target's validity region")]
    OutsideValidity,
    #[error("grid produced no usable scales")]
    NoUsableScales,
    #[error("grid parameters invalid: need alpha0 > 0, 0 < q < 1, K >= 8")]
    BadGrid,
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error(transparent)]
    Scale(#[from] ScaleError),
    #[error(transparent)]
    Modulus(#[from] ModulusError),
}

/// Geometric scale grid `alpha0 * q^k`, k = 0..=K.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub alpha0: Rational,
    pub q: Rational,
    pub k: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            alpha0: rat(1, 4),
            q: rat(1, 2),
            k: 60,
        }
    }
}

impl Grid {
    pub fn new(alpha0: Rational, q: Rational, k: usize) -> Result<Self, DensityError> {
        if alpha0 <= Rational::zero() || q <= Rational::zero() || q >= rat_int(1) || k < 8 {
            return Err(DensityError::BadGrid);
        }
        Ok(Grid { alpha0, q, k })
    }

    /// `{2^-k : k = lo..=hi}` as a grid.
    pub fn dyadic(lo: i32, hi: i32) -> Self {
        Grid {
            alpha0: pow2(-lo),
            q: rat(1, 2),
            k: (hi - lo).max(0) as usize,
        }
    }

    pub fn alphas(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.k + 1);
        let mut a = self.alpha0.clone();
        for _ in 0..=self.k {
            out.push(a.clone());
            a *= &self.q;
        }
        out
    }

    pub fn describe(&self) -> Value {
        json!({
            "alpha0": rat_to_json(&self.alpha0),
            "q": rat_to_json(&self.q),
            "K": self.k,
        })
    }
}

/// Stabilization and thresholding knobs for verdicts.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Policy {
    /// Last `window` ratios must agree pairwise within `tol`.
    pub window: usize,
    pub tol: f64,
    /// Density threshold on the extrapolated limit.
    pub theta: f64,
    /// Limsup threshold used by the limit-point test.
    pub theta_limsup: f64,
}

impl Default for Policy {
    fn default() -> Self {
        Policy {
            window: 8,
            tol: 1e-3,
            theta: 1e-3,
            theta_limsup: 1e-2,
        }
    }
}

/// Which measure the trace follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum MeasureOf {
    /// `|window ∩ target^c|` — the density test.
    Complement,
    /// `|window ∩ target|` — the dispersion test (density of the
    /// complement, run on the complement's own representation).
    Set,
}

/// Anything that can produce exact window trace measures around a point.
pub trait TraceTarget {
    fn set_trace(&self, x: &Rational, h: &Rational, side: Side) -> Result<Rational, DensityError>;
    fn complement_trace(
        &self,
        x: &Rational,
        h: &Rational,
        side: Side,
    ) -> Result<Rational, DensityError>;
    /// Exact two-sided local structure at x, when the target is finitely
    /// structured there.
    fn exact_local(&self, x: &Rational) -> Option<Location>;
    /// Exact one-sided local structure at x.
    fn exact_side(&self, x: &Rational, side: Side) -> Option<SideLocal>;
    /// Largest usable radius at x; `None` = unrestricted.
    fn validity_radius_at(&self, x: &Rational) -> Option<Rational>;
    fn describe(&self) -> Value;
}

impl TraceTarget for IntervalSet {
    fn set_trace(&self, x: &Rational, h: &Rational, side: Side) -> Result<Rational, DensityError> {
        Ok(self.trace_measure(x, h, side)?)
    }

    fn complement_trace(
        &self,
        x: &Rational,
        h: &Rational,
        side: Side,
    ) -> Result<Rational, DensityError> {
        Ok(self.complement().trace_measure(x, h, side)?)
    }

    fn exact_local(&self, x: &Rational) -> Option<Location> {
        Some(self.locate(x))
    }

    fn exact_side(&self, x: &Rational, side: Side) -> Option<SideLocal> {
        Some(self.side_structure(x, side))
    }

    fn validity_radius_at(&self, _x: &Rational) -> Option<Rational> {
        None
    }

    fn describe(&self) -> Value {
        self.to_json()
    }
}

impl TraceTarget for ScaleFamily {
    fn set_trace(&self, x: &Rational, h: &Rational, side: Side) -> Result<Rational, DensityError> {
        if let Some(set) = self.as_interval_set() {
            return Ok(set.trace_measure(x, h, side)?);
        }
        if x != &self.anchor() {
            return Err(DensityError::OutsideValidity);
        }
        Ok(self.set_trace_measure(h, side)?)
    }

    fn complement_trace(
        &self,
        x: &Rational,
        h: &Rational,
        side: Side,
    ) -> Result<Rational, DensityError> {
        if let Some(set) = self.as_interval_set() {
            return Ok(set.complement().trace_measure(x, h, side)?);
        }
        if x != &self.anchor() {
            return Err(DensityError::OutsideValidity);
        }
        Ok(self.complement_trace_measure(h, side)?)
    }

    fn exact_local(&self, x: &Rational) -> Option<Location> {
        self.as_interval_set().map(|s| s.locate(x))
    }

    fn exact_side(&self, x: &Rational, side: Side) -> Option<SideLocal> {
        self.as_interval_set().map(|s| s.side_structure(x, side))
    }

    fn validity_radius_at(&self, _x: &Rational) -> Option<Rational> {
        if self.as_interval_set().is_some() {
            None
        } else {
            self.validity_radius()
        }
    }

    fn describe(&self) -> Value {
        self.to_json()
    }
}

#[derive(Debug, Clone)]
pub struct TraceRecord {
    pub k: usize,
    pub alpha: Rational,
    pub measure: Rational,
    pub ratio: f64,
}

/// The sampled ratio sequence `gamma(m(alpha_k)) / gamma(denominator)`.
#[derive(Debug, Clone)]
pub struct RatioTrace {
    pub side: Side,
    pub measure_of: MeasureOf,
    pub records: Vec<TraceRecord>,
    /// Scales beyond the target's validity radius were dropped.
    pub truncated: bool,
}

impl RatioTrace {
    pub fn ratios(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.ratio).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,alpha_num,alpha_den,measure_num,measure_den,ratio\n");
        for r in &self.records {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.k,
                r.alpha.numer(),
                r.alpha.denom(),
                r.measure.numer(),
                r.measure.denom(),
                r.ratio
            ));
        }
        out
    }
}

/// Result of the stabilization policy on a ratio sequence.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct Stabilization {
    pub stable: bool,
    pub estimate: f64,
    pub max_pair_diff: f64,
}

/// Applies the window policy and extrapolates the limit (Aitken delta
/// squared on the last three points, falling back to the last value when
/// the sequence is already flat).
pub fn stabilize(ratios: &[f64], policy: &Policy) -> Stabilization {
    let n = ratios.len();
    if n < policy.window.max(3) {
        return Stabilization {
            stable: false,
            estimate: ratios.last().copied().unwrap_or(f64::NAN),
            max_pair_diff: f64::INFINITY,
        };
    }
    let tail = &ratios[n - policy.window..];
    let max = tail.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min = tail.iter().cloned().fold(f64::INFINITY, f64::min);
    let max_pair_diff = max - min;
    let (a, b, c) = (ratios[n - 3], ratios[n - 2], ratios[n - 1]);
    let denom = c - 2.0 * b + a;
    let estimate = if denom.abs() < 1e-15 {
        c
    } else {
        let e = c - (c - b) * (c - b) / denom;
        // a wild extrapolation means the model does not fit; keep the raw tail
        if (e - c).abs() > max_pair_diff {
            c
        } else {
            e
        }
    };
    Stabilization {
        stable: max_pair_diff < policy.tol && estimate.is_finite(),
        estimate,
        max_pair_diff,
    }
}

fn denominator(alpha: &Rational, side: Side) -> Rational {
    match side {
        Side::Both => rat(2, 1) * alpha,
        Side::Left | Side::Right => alpha.clone(),
    }
}

fn gamma_ratio(
    gamma: &ModulusFunction,
    m: &Rational,
    den_t: &Rational,
    ctx: &mut EvalCtx,
) -> Result<f64, DensityError> {
    if m.is_zero() {
        return Ok(0.0);
    }
    let n = gamma.eval(m, ctx)?;
    let d = gamma.eval(den_t, ctx)?;
    Ok(ctx.to_f64(&ctx.div(&n, &d)))
}

fn trace_on_alphas(
    gamma: &ModulusFunction,
    target: &dyn TraceTarget,
    x: &Rational,
    side: Side,
    measure_of: MeasureOf,
    alphas: &[Rational],
    ctx: &mut EvalCtx,
) -> Result<RatioTrace, DensityError> {
    let limit = target.validity_radius_at(x);
    let mut records = Vec::new();
    let mut truncated = false;
    for (k, alpha) in alphas.iter().enumerate() {
        if let Some(r) = &limit {
            if alpha > r {
                truncated = true;
                continue;
            }
        }
        let m = match measure_of {
            MeasureOf::Complement => target.complement_trace(x, alpha, side)?,
            MeasureOf::Set => target.set_trace(x, alpha, side)?,
        };
        let ratio = gamma_ratio(gamma, &m, &denominator(alpha, side), ctx)?;
        records.push(TraceRecord {
            k,
            alpha: alpha.clone(),
            measure: m,
            ratio,
        });
    }
    if records.is_empty() {
        return Err(DensityError::NoUsableScales);
    }
    Ok(RatioTrace {
        side,
        measure_of,
        records,
        truncated,
    })
}

/// Samples the density (or dispersion) ratio sequence on the grid.
pub fn ratio_trace(
    gamma: &ModulusFunction,
    target: &dyn TraceTarget,
    x: &Rational,
    side: Side,
    grid: &Grid,
    measure_of: MeasureOf,
    ctx: &mut EvalCtx,
) -> Result<RatioTrace, DensityError> {
    trace_on_alphas(gamma, target, x, side, measure_of, &grid.alphas(), ctx)
}

/// Four-valued classification: density and dispersion are mutually
/// exclusive positives, "neither" is a definite negative (both limits
/// exist and are positive), and Indeterminate means the stabilization
/// policy was unmet — never a forced binary answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum PointClass {
    GammaDensityPoint,
    GammaDispersionPoint,
    NotDensityPoint,
    Indeterminate,
}

impl PointClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            PointClass::GammaDensityPoint => "GammaDensityPoint",
            PointClass::GammaDispersionPoint => "GammaDispersionPoint",
            PointClass::NotDensityPoint => "NotDensityPoint",
            PointClass::Indeterminate => "Indeterminate",
        }
    }

    pub fn is_density(&self) -> bool {
        matches!(self, PointClass::GammaDensityPoint)
    }

    pub fn is_dispersion(&self) -> bool {
        matches!(self, PointClass::GammaDispersionPoint)
    }
}

#[derive(Debug, Clone)]
pub struct Verdict {
    pub class: PointClass,
    /// Extrapolated limit of the complement-ratio trace.
    pub density_estimate: Option<f64>,
    /// Extrapolated limit of the set-ratio trace, when it was run.
    pub dispersion_estimate: Option<f64>,
    /// Verdict came from exact local structure, not sampling.
    pub exact: bool,
    pub truncated: bool,
    pub policy: Policy,
}

impl Verdict {
    fn exact_verdict(class: PointClass, density: f64, dispersion: f64, policy: &Policy) -> Self {
        Verdict {
            class,
            density_estimate: Some(density),
            dispersion_estimate: Some(dispersion),
            exact: true,
            truncated: false,
            policy: *policy,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "class": self.class.as_str(),
            "density_estimate": self.density_estimate,
            "dispersion_estimate": self.dispersion_estimate,
            "exact": self.exact,
            "truncated": self.truncated,
            "policy": {
                "window": self.policy.window,
                "tol": self.policy.tol,
                "theta": self.policy.theta,
                "theta_limsup": self.policy.theta_limsup,
            },
        })
    }
}

/// Two-sided classification of x relative to the target under gamma.
pub fn classify_point(
    gamma: &ModulusFunction,
    target: &dyn TraceTarget,
    x: &Rational,
    grid: &Grid,
    policy: &Policy,
    ctx: &mut EvalCtx,
) -> Result<Verdict, DensityError> {
    classify_on_alphas(gamma, target, x, Side::Both, &grid.alphas(), policy, ctx)
}

/// One-sided classification (left or right window, denominator gamma(a)).
pub fn classify_point_side(
    gamma: &ModulusFunction,
    target: &dyn TraceTarget,
    x: &Rational,
    side: Side,
    grid: &Grid,
    policy: &Policy,
    ctx: &mut EvalCtx,
) -> Result<Verdict, DensityError> {
    classify_on_alphas(gamma, target, x, side, &grid.alphas(), policy, ctx)
}

fn classify_on_alphas(
    gamma: &ModulusFunction,
    target: &dyn TraceTarget,
    x: &Rational,
    side: Side,
    alphas: &[Rational],
    policy: &Policy,
    ctx: &mut EvalCtx,
) -> Result<Verdict, DensityError> {
    // exact shortcut: local structure decides for every modulus at once
    if side == Side::Both {
        if let Some(loc) = target.exact_local(x) {
            return Ok(match loc {
                // complement trace is exactly 0 below the margin
                Location::Interior(_) => {
                    Verdict::exact_verdict(PointClass::GammaDensityPoint, 0.0, 1.0, policy)
                }
                Location::Outside(_) => {
                    Verdict::exact_verdict(PointClass::GammaDispersionPoint, 1.0, 0.0, policy)
                }
                // both traces equal the radius; gamma(a)/gamma(2a) >= 1/2
                // by subadditivity, so neither limit can vanish
                Location::Boundary { .. } => {
                    let (de, se) = boundary_estimates(gamma, alphas, ctx)?;
                    Verdict::exact_verdict(PointClass::NotDensityPoint, de, se, policy)
                }
            });
        }
    } else if let Some(local) = target.exact_side(x, side) {
        return Ok(match local {
            SideLocal::InSet(_) => {
                Verdict::exact_verdict(PointClass::GammaDensityPoint, 0.0, 1.0, policy)
            }
            SideLocal::InGap(_) => {
                Verdict::exact_verdict(PointClass::GammaDispersionPoint, 1.0, 0.0, policy)
            }
        });
    }

    let comp = trace_on_alphas(gamma, target, x, side, MeasureOf::Complement, alphas, ctx)?;
    let comp_stab = stabilize(&comp.ratios(), policy);
    if comp_stab.stable && comp_stab.estimate < policy.theta {
        return Ok(Verdict {
            class: PointClass::GammaDensityPoint,
            density_estimate: Some(comp_stab.estimate),
            dispersion_estimate: None,
            exact: false,
            truncated: comp.truncated,
            policy: *policy,
        });
    }
    let set = trace_on_alphas(gamma, target, x, side, MeasureOf::Set, alphas, ctx)?;
    let set_stab = stabilize(&set.ratios(), policy);
    let class = if set_stab.stable && set_stab.estimate < policy.theta {
        PointClass::GammaDispersionPoint
    } else if comp_stab.stable && set_stab.stable {
        PointClass::NotDensityPoint
    } else {
        PointClass::Indeterminate
    };
    Ok(Verdict {
        class,
        density_estimate: Some(comp_stab.estimate),
        dispersion_estimate: Some(set_stab.estimate),
        exact: false,
        truncated: comp.truncated || set.truncated,
        policy: *policy,
    })
}

// At a boundary point both traces equal the radius below the margin; the
// reported estimates are the deepest-scale values of gamma(a)/gamma(2a).
fn boundary_estimates(
    gamma: &ModulusFunction,
    alphas: &[Rational],
    ctx: &mut EvalCtx,
) -> Result<(f64, f64), DensityError> {
    let a = alphas.last().ok_or(DensityError::NoUsableScales)?;
    let r = gamma_ratio(gamma, a, &(rat(2, 1) * a), ctx)?;
    Ok((r, r))
}

/// Per-point verdicts over a finite sample of probe points.
pub fn density_points_on_grid(
    gamma: &ModulusFunction,
    set: &IntervalSet,
    sample: &[Rational],
    grid: &Grid,
    policy: &Policy,
    ctx: &mut EvalCtx,
) -> Result<Vec<(Rational, Verdict)>, DensityError> {
    sample
        .iter()
        .map(|x| classify_point(gamma, set, x, grid, policy, ctx).map(|v| (x.clone(), v)))
        .collect()
}

/// Report tying the one-sided verdicts to the two-sided one, with the
/// bounding inequalities that force the equivalence.
#[derive(Debug, Clone)]
pub struct OneSidedReport {
    pub left: PointClass,
    pub right: PointClass,
    pub both: PointClass,
    /// two-sided density == (left density AND right density)
    pub equivalence_holds: bool,
    /// max over scales of gamma(m_left) - gamma(m_both); must be <= 0 + tol
    pub nested_window_violation: f64,
    /// max over scales of gamma(2a) - 2 gamma(a); must be <= 0 + tol
    pub doubling_violation: f64,
}

pub fn one_sided_equivalence_check(
    gamma: &ModulusFunction,
    target: &dyn TraceTarget,
    x: &Rational,
    grid: &Grid,
    policy: &Policy,
    ctx: &mut EvalCtx,
) -> Result<OneSidedReport, DensityError> {
    let left = classify_point_side(gamma, target, x, Side::Left, grid, policy, ctx)?;
    let right = classify_point_side(gamma, target, x, Side::Right, grid, policy, ctx)?;
    let both = classify_point(gamma, target, x, grid, policy, ctx)?;

    let mut nested = f64::NEG_INFINITY;
    let mut doubling = f64::NEG_INFINITY;
    let limit = target.validity_radius_at(x);
    for alpha in grid.alphas() {
        if let Some(r) = &limit {
            if &alpha > r {
                continue;
            }
        }
        let m_left = target.complement_trace(x, &alpha, Side::Left)?;
        let m_both = target.complement_trace(x, &alpha, Side::Both)?;
        let gl = ctx_val(gamma, &m_left, ctx)?;
        let gb = ctx_val(gamma, &m_both, ctx)?;
        nested = nested.max(gl - gb);
        let ga = ctx_val(gamma, &alpha, ctx)?;
        let g2a = ctx_val(gamma, &(rat(2, 1) * &alpha), ctx)?;
        doubling = doubling.max(g2a - 2.0 * ga);
    }
    let two_sided_density = both.class.is_density();
    let split_density = left.class.is_density() && right.class.is_density();
    Ok(OneSidedReport {
        left: left.class,
        right: right.class,
        both: both.class,
        equivalence_holds: two_sided_density == split_density,
        nested_window_violation: nested,
        doubling_violation: doubling,
    })
}

fn ctx_val(
    gamma: &ModulusFunction,
    t: &Rational,
    ctx: &mut EvalCtx,
) -> Result<f64, DensityError> {
    Ok(gamma.eval_f64(t, ctx)?)
}

/// Report comparing the continuous-grid verdict with the verdict along
/// the sequence of radii `1/n` (sampled at the dyadic subsequence), plus
/// the bridging inequality `gamma(2/n) <= 2 gamma(2/(n+1))` that links
/// consecutive sequence terms to the continuous limit.
#[derive(Debug, Clone)]
pub struct SequentialReport {
    pub grid_class: PointClass,
    pub sequence_class: PointClass,
    pub agree: bool,
    /// max over n of gamma(2/n) - 2 gamma(2/(n+1)); must be <= tol
    pub bridging_violation: f64,
}

pub fn sequential_criterion_check(
    gamma: &ModulusFunction,
    target: &dyn TraceTarget,
    x: &Rational,
    policy: &Policy,
    ctx: &mut EvalCtx,
) -> Result<SequentialReport, DensityError> {
    let grid = Grid::default();
    let grid_verdict = classify_point(gamma, target, x, &grid, policy, ctx)?;
    // radii 1/n along the dyadic subsequence n = 2^j
    let seq_alphas: Vec<Rational> = (2..=62).map(|j| pow2(-j)).collect();
    let seq_verdict = classify_on_alphas(gamma, target, x, Side::Both, &seq_alphas, policy, ctx)?;

    let mut bridging = f64::NEG_INFINITY;
    for n in 1..=64i64 {
        let a = ctx_val(gamma, &rat(2, n), ctx)?;
        let b = ctx_val(gamma, &rat(2, n + 1), ctx)?;
        bridging = bridging.max(a - 2.0 * b);
    }
    Ok(SequentialReport {
        grid_class: grid_verdict.class,
        sequence_class: seq_verdict.class,
        agree: grid_verdict.class == seq_verdict.class,
        bridging_violation: bridging,
    })
}

/// The psi-density ratio `m(a) / (2a * psi(2a))` traced on the grid, and
/// the implication "psi-density point => gamma-density point" for a
/// gamma derived from a linearly bounded psi.
#[derive(Debug, Clone)]
pub struct PsiDensityReport {
    pub psi_ratio_vanishes: bool,
    pub psi_estimate: f64,
    pub gamma_class: PointClass,
    /// Vacuously true when the psi ratio does not vanish.
    pub implication_holds: bool,
}

pub fn psi_density_check(
    psi: &PsiDescriptor,
    gamma: &ModulusFunction,
    target: &dyn TraceTarget,
    x: &Rational,
    grid: &Grid,
    policy: &Policy,
    ctx: &mut EvalCtx,
) -> Result<PsiDensityReport, DensityError> {
    let psi_fn = ModulusFunction::PsiDerived { psi: psi.clone() };
    let limit = target.validity_radius_at(x);
    let mut ratios = Vec::new();
    for alpha in grid.alphas() {
        if let Some(r) = &limit {
            if &alpha > r {
                continue;
            }
        }
        let m = target.complement_trace(x, &alpha, Side::Both)?;
        let width = rat(2, 1) * &alpha;
        if m.is_zero() {
            ratios.push(0.0);
            continue;
        }
        let num = ctx.from_rat(&m);
        let wf = ctx.from_rat(&width);
        let pw = psi_fn.eval(&width, ctx)?;
        let den = ctx.mul(&wf, &pw);
        ratios.push(ctx.to_f64(&ctx.div(&num, &den)));
    }
    if ratios.is_empty() {
        return Err(DensityError::NoUsableScales);
    }
    let stab = stabilize(&ratios, policy);
    let vanishes = stab.stable && stab.estimate < policy.theta;
    let verdict = classify_point(gamma, target, x, grid, policy, ctx)?;
    Ok(PsiDensityReport {
        psi_ratio_vanishes: vanishes,
        psi_estimate: stab.estimate,
        gamma_class: verdict.class,
        implication_holds: !vanishes || verdict.class.is_density(),
    })
}

// Re-exported here so callers of the density layer see which psi forms
// qualify for the implication without importing the modulus module.
pub fn psi_is_linearly_bounded(psi: &PsiDescriptor) -> bool {
    match &psi.form {
        PsiForm::Power { p } => p >= &rat_int(1),
        PsiForm::Linear { .. } => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modulus::catalog;

    fn ctx() -> EvalCtx {
        EvalCtx::new(60)
    }

    fn unit_interval() -> IntervalSet {
        IntervalSet::interval(rat_int(0), rat_int(1)).unwrap()
    }

    #[test]
    fn full_line_all_ratios_zero() {
        let mut c = ctx();
        let t = ratio_trace(
            &ModulusFunction::Identity,
            &IntervalSet::full_line(),
            &rat_int(3),
            Side::Both,
            &Grid::default(),
            MeasureOf::Complement,
            &mut c,
        )
        .unwrap();
        assert!(t.records.iter().all(|r| r.ratio == 0.0 && r.measure.is_zero()));
        let v = classify_point(
            &ModulusFunction::Identity,
            &IntervalSet::full_line(),
            &rat_int(3),
            &Grid::default(),
            &Policy::default(),
            &mut c,
        )
        .unwrap();
        assert_eq!(v.class, PointClass::GammaDensityPoint);
        assert!(v.exact);
    }

    #[test]
    fn empty_set_all_ratios_one() {
        let mut c = ctx();
        for gamma in catalog() {
            let t = ratio_trace(
                &gamma,
                &IntervalSet::empty(),
                &rat_int(0),
                Side::Both,
                &Grid::default(),
                MeasureOf::Complement,
                &mut c,
            )
            .unwrap();
            assert!(
                t.records.iter().all(|r| (r.ratio - 1.0).abs() < 1e-12),
                "{}",
                gamma.name()
            );
        }
        let v = classify_point(
            &ModulusFunction::Identity,
            &IntervalSet::empty(),
            &rat_int(0),
            &Grid::default(),
            &Policy::default(),
            &mut c,
        )
        .unwrap();
        assert_eq!(v.class, PointClass::GammaDispersionPoint);
    }

    #[test]
    fn interior_outside_boundary_exact() {
        let mut c = ctx();
        let a = unit_interval();
        let g = Grid::default();
        let p = Policy::default();
        let gamma = ModulusFunction::Identity;

        let v = classify_point(&gamma, &a, &rat(1, 2), &g, &p, &mut c).unwrap();
        assert_eq!(v.class, PointClass::GammaDensityPoint);
        assert!(v.exact);

        let v = classify_point(&gamma, &a, &rat_int(2), &g, &p, &mut c).unwrap();
        assert_eq!(v.class, PointClass::GammaDispersionPoint);

        let v = classify_point(&gamma, &a, &rat_int(0), &g, &p, &mut c).unwrap();
        assert_eq!(v.class, PointClass::NotDensityPoint);
        // identity boundary ratio is exactly 1/2
        assert!((v.density_estimate.unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn deleted_point_is_density_point() {
        // (0,1) ∪ (1,2): the deleted point is null, 1 is a density point
        let mut c = ctx();
        let a = IntervalSet::normalize(vec![
            (rat_int(0), rat_int(1)),
            (rat_int(1), rat_int(2)),
        ])
        .unwrap();
        let v = classify_point(
            &ModulusFunction::Identity,
            &a,
            &rat_int(1),
            &Grid::default(),
            &Policy::default(),
            &mut c,
        )
        .unwrap();
        assert_eq!(v.class, PointClass::GammaDensityPoint);
    }

    #[test]
    fn gap_family_lebesgue_density_but_log_neither() {
        let mut c = ctx();
        let fam = ScaleFamily::dyadic_gap();
        let g = Grid::default();
        let p = Policy::default();

        let lebesgue = classify_point(&ModulusFunction::Identity, &fam, &rat_int(0), &g, &p, &mut c)
            .unwrap();
        assert_eq!(lebesgue.class, PointClass::GammaDensityPoint);
        assert!(!lebesgue.exact);

        let log = classify_point(&ModulusFunction::LogModulus, &fam, &rat_int(0), &g, &p, &mut c)
            .unwrap();
        assert_eq!(log.class, PointClass::NotDensityPoint);
        let est = log.density_estimate.unwrap();
        assert!((est - 0.5).abs() < 0.05, "estimate {est}");
    }

    #[test]
    fn gap_family_identity_ratio_bounded_by_radius() {
        // ratio m(h)/2h <= 2h exactly at every dyadic scale
        let mut c = ctx();
        let fam = ScaleFamily::dyadic_gap();
        let t = ratio_trace(
            &ModulusFunction::Identity,
            &fam,
            &rat_int(0),
            Side::Both,
            &Grid::dyadic(10, 60),
            MeasureOf::Complement,
            &mut c,
        )
        .unwrap();
        for r in &t.records {
            // exact rational comparison: m <= 2h * 2h
            let bound = rat(4, 1) * &r.alpha * &r.alpha;
            assert!(r.measure <= bound, "h = {}", r.alpha);
        }
    }

    #[test]
    fn half_line_one_sided_split() {
        let mut c = ctx();
        let a = IntervalSet::ray_right(rat_int(0));
        let rep = one_sided_equivalence_check(
            &ModulusFunction::Identity,
            &a,
            &rat_int(0),
            &Grid::default(),
            &Policy::default(),
            &mut c,
        )
        .unwrap();
        assert_eq!(rep.right, PointClass::GammaDensityPoint);
        assert_eq!(rep.left, PointClass::GammaDispersionPoint);
        assert_eq!(rep.both, PointClass::NotDensityPoint);
        assert!(rep.equivalence_holds);
        assert!(rep.nested_window_violation <= 1e-12);
        assert!(rep.doubling_violation <= 1e-12);
    }

    #[test]
    fn one_sided_equivalence_on_family() {
        let mut c = ctx();
        for gamma in [ModulusFunction::Identity, ModulusFunction::LogModulus] {
            let rep = one_sided_equivalence_check(
                &gamma,
                &ScaleFamily::dyadic_gap(),
                &rat_int(0),
                &Grid::default(),
                &Policy::default(),
                &mut c,
            )
            .unwrap();
            assert!(rep.equivalence_holds, "{}", gamma.name());
            assert!(rep.doubling_violation <= 1e-12);
        }
    }

    #[test]
    fn sequential_agreement() {
        let mut c = ctx();
        let p = Policy::default();
        let rep = sequential_criterion_check(
            &ModulusFunction::Identity,
            &ScaleFamily::dyadic_gap(),
            &rat_int(0),
            &p,
            &mut c,
        )
        .unwrap();
        assert!(rep.agree);
        assert_eq!(rep.grid_class, PointClass::GammaDensityPoint);
        assert!(rep.bridging_violation <= 1e-12);

        let rep = sequential_criterion_check(
            &ModulusFunction::LogModulus,
            &IntervalSet::empty(),
            &rat_int(0),
            &p,
            &mut c,
        )
        .unwrap();
        assert!(rep.agree);
        assert_eq!(rep.grid_class, PointClass::GammaDispersionPoint);
        assert!(rep.bridging_violation <= 1e-12);
    }

    #[test]
    fn translation_equivariance_spot() {
        let mut c = ctx();
        let a = IntervalSet::normalize(vec![(rat(1, 3), rat(2, 3)), (rat_int(1), rat(3, 2))])
            .unwrap();
        let z = rat(7, 5);
        let g = Grid::default();
        let p = Policy::default();
        for x in [rat(1, 2), rat(2, 3), rat_int(5), rat(5, 4)] {
            let v1 = classify_point(&ModulusFunction::Bounded, &a, &x, &g, &p, &mut c).unwrap();
            let v2 = classify_point(
                &ModulusFunction::Bounded,
                &a.translate(&z),
                &(&x + &z),
                &g,
                &p,
                &mut c,
            )
            .unwrap();
            assert_eq!(v1.class, v2.class, "x = {x}");
        }
    }

    #[test]
    fn csv_schema() {
        let mut c = ctx();
        let t = ratio_trace(
            &ModulusFunction::Identity,
            &unit_interval(),
            &rat(1, 2),
            Side::Both,
            &Grid::dyadic(1, 10),
            MeasureOf::Complement,
            &mut c,
        )
        .unwrap();
        let csv = t.to_csv();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "k,alpha_num,alpha_den,measure_num,measure_den,ratio"
        );
        assert_eq!(lines.count(), t.records.len());
    }

    #[test]
    fn family_validity_truncates_trace() {
        let mut c = ctx();
        let t = ratio_trace(
            &ModulusFunction::Identity,
            &ScaleFamily::bump_support(),
            &rat_int(0),
            Side::Both,
            &Grid::new(rat_int(1), rat(1, 2), 20).unwrap(),
            MeasureOf::Complement,
            &mut c,
        )
        .unwrap();
        assert!(t.truncated);
        assert!(t.records.iter().all(|r| r.alpha <= rat(1, 4)));
    }

    #[test]
    fn off_anchor_family_probe_rejected() {
        let mut c = ctx();
        let err = classify_point(
            &ModulusFunction::Identity,
            &ScaleFamily::dyadic_gap(),
            &rat(1, 3),
            &Grid::default(),
            &Policy::default(),
            &mut c,
        );
        assert!(matches!(err, Err(DensityError::OutsideValidity)));
    }

    #[test]
    fn psi_linear_implication() {
        let mut c = ctx();
        let psi = PsiDescriptor::linear(rat_int(1));
        assert!(psi_is_linearly_bounded(&psi));
        let gamma = ModulusFunction::from_psi(psi.clone(), &mut c).unwrap();
        let g = Grid::default();
        let p = Policy::default();

        // interior point: psi ratio vanishes and gamma verdict is density
        let rep = psi_density_check(
            &psi,
            &gamma,
            &unit_interval(),
            &rat(1, 2),
            &g,
            &p,
            &mut c,
        )
        .unwrap();
        assert!(rep.psi_ratio_vanishes);
        assert!(rep.implication_holds);
        assert!(rep.gamma_class.is_density());

        // boundary point: psi ratio blows up, implication vacuous
        let rep =
            psi_density_check(&psi, &gamma, &unit_interval(), &rat_int(0), &g, &p, &mut c)
                .unwrap();
        assert!(!rep.psi_ratio_vanishes);
        assert!(rep.implication_holds);
    }

    #[test]
    fn dispersion_never_one_minus_ratio() {
        // bounded gamma: set ratio at a boundary is gamma(a)/gamma(2a),
        // which is NOT 1 - gamma(a)/gamma(2a); the classifier must have
        // traced the set measure itself
        let mut c = ctx();
        let v = classify_point(
            &ModulusFunction::Bounded,
            &unit_interval(),
            &rat_int(0),
            &Grid::default(),
            &Policy::default(),
            &mut c,
        )
        .unwrap();
        let d = v.density_estimate.unwrap();
        let s = v.dispersion_estimate.unwrap();
        // both estimates agree (same trace shape) and exceed the threshold
        assert!((d - s).abs() < 1e-12);
        assert!(d >= 0.5 - 1e-12);
    }
}
