//! The class of modulus functions: evaluation, axiom validation,
//! ratio-condition certification/refutation, ratio bounds between two
//! moduli, and the adaptor turning a declared-subadditive psi into a
//! modulus.
//!
//! A modulus here is one of a small catalog of closed forms. Values are
//! evaluated in arbitrary precision on exact rational arguments; all
//! verdicts produced from sampled grids are explicitly grid-relative.

use astro_float::BigFloat;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::hp::EvalCtx;
use crate::rational::{pow2, rat, rat_to_f64, rat_to_json, Rational};

#[derive(Debug, Error, PartialEq)]
pub enum ModulusError {
    #[error("modulus argument must be nonnegative")]
    NegativeArgument,
    #[error("power exponent must lie in (0,1)")]
    InvalidPower,
    #[error("psi descriptor must declare continuity, monotonicity, vanishing at 0 and subadditivity")]
    PsiMetadataIncomplete,
    #[error("declared-subadditive psi fails sampled subadditivity at a = {a}, b = {b}")]
    PsiRejected { a: Rational, b: Rational },
    #[error("grid is degenerate for this check")]
    DegenerateGrid,
    #[error("epsilon must lie in (0,1)")]
    InvalidEpsilon,
    #[error("denominator modulus vanishes at positive t = {t}; not a modulus function")]
    ZeroDenominator { t: Rational },
    #[error("malformed modulus JSON")]
    BadJson,
}

/// Closed form behind a psi-derived modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PsiForm {
    /// `psi(t) = t^p`, any positive exponent (p > 1 gets rejected by the
    /// sampled subadditivity screen).
    Power { p: Rational },
    /// `psi(t) = c t`
    Linear { slope: Rational },
}

/// A candidate psi with its declared analytic properties.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiDescriptor {
    pub form: PsiForm,
    pub continuous: bool,
    pub nondecreasing: bool,
    pub vanishes_at_zero: bool,
    pub subadditive: bool,
}

impl PsiDescriptor {
    pub fn power(p: Rational) -> Self {
        PsiDescriptor {
            form: PsiForm::Power { p },
            continuous: true,
            nondecreasing: true,
            vanishes_at_zero: true,
            subadditive: true,
        }
    }

    pub fn linear(slope: Rational) -> Self {
        PsiDescriptor {
            form: PsiForm::Linear { slope },
            continuous: true,
            nondecreasing: true,
            vanishes_at_zero: true,
            subadditive: true,
        }
    }

    /// `limsup_{t->0+} psi(t)/t < infinity`?
    pub fn linear_bounded(&self) -> bool {
        match &self.form {
            PsiForm::Power { p } => p >= &Rational::one(),
            PsiForm::Linear { .. } => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ModulusFunction {
    Identity,
    /// `t^p`, catalog range 0 < p < 1 (probe constructor allows any p > 0).
    Power { p: Rational },
    /// `t / (1 + t)`
    Bounded,
    /// `1/log(e/t)` for `0 < t <= 1/e`, affine continuation above.
    LogModulus,
    PsiDerived { psi: PsiDescriptor },
}

impl ModulusFunction {
    pub fn identity() -> Self {
        ModulusFunction::Identity
    }

    pub fn bounded() -> Self {
        ModulusFunction::Bounded
    }

    pub fn log_modulus() -> Self {
        ModulusFunction::LogModulus
    }

    pub fn power(p: Rational) -> Result<Self, ModulusError> {
        if p <= Rational::zero() || p >= Rational::one() {
            return Err(ModulusError::InvalidPower);
        }
        Ok(ModulusFunction::Power { p })
    }

    /// Unrestricted exponent, for feeding deliberate non-moduli to the
    /// validator.
    pub fn power_probe(p: Rational) -> Self {
        ModulusFunction::Power { p }
    }

    /// Wraps a declared-subadditive psi after a sampled subadditivity
    /// screen; a failing sample aborts construction with the witness pair.
    pub fn from_psi(psi: PsiDescriptor, ctx: &mut EvalCtx) -> Result<Self, ModulusError> {
        if !(psi.continuous && psi.nondecreasing && psi.vanishes_at_zero && psi.subadditive) {
            return Err(ModulusError::PsiMetadataIncomplete);
        }
        let candidate = ModulusFunction::PsiDerived { psi };
        // equal-pair samples catch every superadditive power
        for k in 1..=40i32 {
            let a = pow2(-k);
            let sum = candidate.eval(&(&a + &a), ctx)?;
            let parts = {
                let fa = candidate.eval(&a, ctx)?;
                ctx.add(&fa, &fa)
            };
            let tol = ctx.from_rat(&(pow2(-120) * &a));
            if !ctx.le(&sum, &ctx.add(&parts, &tol)) {
                return Err(ModulusError::PsiRejected { a: a.clone(), b: a });
            }
        }
        Ok(candidate)
    }

    pub fn name(&self) -> String {
        match self {
            ModulusFunction::Identity => "identity".into(),
            ModulusFunction::Power { p } => format!("power:{p}"),
            ModulusFunction::Bounded => "bounded".into(),
            ModulusFunction::LogModulus => "log".into(),
            ModulusFunction::PsiDerived { psi } => match &psi.form {
                PsiForm::Power { p } => format!("psi:power:{p}"),
                PsiForm::Linear { slope } => format!("psi:linear:{slope}"),
            },
        }
    }

    /// High-precision evaluation at an exact rational argument; exact 0 at
    /// t = 0. The log branch works on `ln t` directly so tiny arguments
    /// never underflow.
    pub fn eval(&self, t: &Rational, ctx: &mut EvalCtx) -> Result<BigFloat, ModulusError> {
        if t < &Rational::zero() {
            return Err(ModulusError::NegativeArgument);
        }
        if t.is_zero() {
            return Ok(ctx.zero());
        }
        Ok(match self {
            ModulusFunction::Identity => ctx.from_rat(t),
            ModulusFunction::Power { p } => {
                let lt = {
                    let tf = ctx.from_rat(t);
                    ctx.ln(&tf)
                };
                let pf = ctx.from_rat(p);
                let prod = ctx.mul(&pf, &lt);
                ctx.exp(&prod)
            }
            ModulusFunction::Bounded => {
                let v = t / (Rational::one() + t);
                ctx.from_rat(&v)
            }
            ModulusFunction::LogModulus => {
                let lt = {
                    let tf = ctx.from_rat(t);
                    ctx.ln(&tf)
                };
                let neg_one = ctx.from_rat(&rat(-1, 1));
                if ctx.le(&lt, &neg_one) {
                    // 1 / (1 - ln t)
                    let one = ctx.one();
                    let denom = ctx.sub(&one, &lt);
                    ctx.recip(&denom)
                } else {
                    // (e/4) t + 1/4
                    let e = ctx.e();
                    let four = ctx.from_rat(&rat(4, 1));
                    let coef = ctx.div(&e, &four);
                    let tf = ctx.from_rat(t);
                    let quarter = ctx.from_rat(&rat(1, 4));
                    let term = ctx.mul(&coef, &tf);
                    ctx.add(&term, &quarter)
                }
            }
            ModulusFunction::PsiDerived { psi } => match &psi.form {
                PsiForm::Power { p } => {
                    return ModulusFunction::Power { p: p.clone() }.eval(t, ctx);
                }
                PsiForm::Linear { slope } => ctx.from_rat(&(slope * t)),
            },
        })
    }

    pub fn eval_f64(&self, t: &Rational, ctx: &mut EvalCtx) -> Result<f64, ModulusError> {
        let v = self.eval(t, ctx)?;
        Ok(ctx.to_f64(&v))
    }

    pub fn to_json(&self) -> Value {
        match self {
            ModulusFunction::Identity => json!({"kind": "identity"}),
            ModulusFunction::Power { p } => json!({"kind": "power", "p": rat_to_json(p)}),
            ModulusFunction::Bounded => json!({"kind": "bounded"}),
            ModulusFunction::LogModulus => json!({"kind": "log"}),
            ModulusFunction::PsiDerived { psi } => {
                let form = match &psi.form {
                    PsiForm::Power { p } => json!({"power": rat_to_json(p)}),
                    PsiForm::Linear { slope } => json!({"linear": rat_to_json(slope)}),
                };
                json!({"kind": "psi", "form": form})
            }
        }
    }
}

/// Geometric grid `start * ratio^k`, k = 0..count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricGrid {
    pub start: Rational,
    pub ratio: Rational,
    pub count: usize,
}

impl GeometricGrid {
    pub fn new(start: Rational, ratio: Rational, count: usize) -> Self {
        GeometricGrid { start, ratio, count }
    }

    /// `{2^-lo, ..., 2^-hi}`
    pub fn dyadic(lo: i32, hi: i32) -> Self {
        GeometricGrid {
            start: pow2(-lo),
            ratio: rat(1, 2),
            count: (hi - lo + 1).max(0) as usize,
        }
    }

    pub fn points(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.count);
        let mut v = self.start.clone();
        for _ in 0..self.count {
            out.push(v.clone());
            v *= &self.ratio;
        }
        out
    }

    pub fn describe(&self) -> Value {
        json!({
            "start": rat_to_json(&self.start),
            "ratio": rat_to_json(&self.ratio),
            "count": self.count,
        })
    }
}

/// Default verification grid for ratio conditions: `t = 2^-k`, k = 10..200.
pub fn default_t_grid() -> GeometricGrid {
    GeometricGrid::dyadic(10, 200)
}

/// Default contraction grid: `c = 2^-k`, k = 1..20.
pub fn default_c_grid() -> GeometricGrid {
    GeometricGrid::dyadic(1, 20)
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct AxiomCheck {
    pub pass: bool,
    pub max_violation: f64,
    pub witness: Option<(String, String)>,
}

impl AxiomCheck {
    fn clean() -> Self {
        AxiomCheck {
            pass: true,
            max_violation: 0.0,
            witness: None,
        }
    }
}

/// Per-axiom report from [`validate_modulus`]. Failures are content, not
/// errors. Both strict and weak monotonicity are reported since the axiom
/// set says "increasing" without qualifying it.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ValidationReport {
    pub modulus: String,
    pub zero_at_zero: bool,
    pub positive_on_positive: AxiomCheck,
    pub subadditive: AxiomCheck,
    pub nondecreasing: AxiomCheck,
    pub strictly_increasing: AxiomCheck,
    pub right_continuous_at_zero: AxiomCheck,
    /// derived: gamma(a) - gamma(b) <= gamma(a-b) for a >= b
    pub difference_bounded: AxiomCheck,
    pub tolerance: f64,
    pub all_pass: bool,
}

impl ValidationReport {
    pub fn passes(&self) -> bool {
        self.all_pass
    }
}

pub fn validate_modulus(
    gamma: &ModulusFunction,
    grid: &GeometricGrid,
    tolerance: f64,
    ctx: &mut EvalCtx,
) -> Result<ValidationReport, ModulusError> {
    let points = grid.points();
    if points.is_empty() {
        return Err(ModulusError::DegenerateGrid);
    }
    let zero_at_zero = gamma.eval(&Rational::zero(), ctx)?.is_zero();

    let mut values = Vec::with_capacity(points.len());
    for t in &points {
        values.push(gamma.eval_f64(t, ctx)?);
    }

    let mut positive = AxiomCheck::clean();
    for (t, v) in points.iter().zip(&values) {
        if *v <= 0.0 {
            positive.pass = false;
            positive.witness = Some((t.to_string(), String::new()));
        }
    }

    // subadditivity on all grid pairs
    let mut subadd = AxiomCheck::clean();
    for (i, a) in points.iter().enumerate() {
        for b in points.iter().skip(i) {
            let sum = gamma.eval_f64(&(a + b), ctx)?;
            let va = values[i];
            let vb = gamma.eval_f64(b, ctx)?;
            let violation = sum - (va + vb);
            if violation > subadd.max_violation {
                subadd.max_violation = violation;
                subadd.witness = Some((a.to_string(), b.to_string()));
            }
        }
    }
    subadd.pass = subadd.max_violation <= tolerance;

    // monotonicity along the (descending) grid
    let mut weak = AxiomCheck::clean();
    let mut strict = AxiomCheck::clean();
    for w in values.windows(2) {
        // points descend, so values must not increase along the grid
        let (bigger, smaller) = (w[0], w[1]);
        if smaller - bigger > weak.max_violation {
            weak.max_violation = smaller - bigger;
        }
        if smaller >= bigger {
            strict.pass = false;
        }
    }
    weak.pass = weak.max_violation <= tolerance;

    let mut rc = AxiomCheck::clean();
    let last = *values.last().unwrap();
    rc.max_violation = last;
    // the deepest grid value must already be small
    rc.pass = last < 0.1;

    let mut diff = AxiomCheck::clean();
    for (i, a) in points.iter().enumerate() {
        for (j, b) in points.iter().enumerate().skip(i + 1) {
            // a >= b since the grid descends
            let lhs = values[i] - values[j];
            let rhs = gamma.eval_f64(&(a - b), ctx)?;
            let violation = lhs - rhs;
            if violation > diff.max_violation {
                diff.max_violation = violation;
                diff.witness = Some((a.to_string(), b.to_string()));
            }
        }
    }
    diff.pass = diff.max_violation <= tolerance;

    let all_pass = zero_at_zero
        && positive.pass
        && subadd.pass
        && weak.pass
        && rc.pass
        && diff.pass;
    Ok(ValidationReport {
        modulus: gamma.name(),
        zero_at_zero,
        positive_on_positive: positive,
        subadditive: subadd,
        nondecreasing: weak,
        strictly_increasing: strict,
        right_continuous_at_zero: rc,
        difference_bounded: diff,
        tolerance,
        all_pass,
    })
}

/// Grid-relative certificate that `gamma(c t)/gamma(t) < epsilon` for all
/// sampled `t < delta`.
#[derive(Debug, Clone)]
pub struct ConditionACertificate {
    pub epsilon: f64,
    pub c_epsilon: Rational,
    pub delta_epsilon: Rational,
    pub max_observed_ratio: f64,
    pub t_grid: GeometricGrid,
    pub c_grid: GeometricGrid,
}

/// Grid-relative evidence that no sampled contraction works: for every c
/// the ratio stays above `floor` on the deep tail of the grid.
#[derive(Debug, Clone)]
pub struct RefutationEvidence {
    pub epsilon: f64,
    /// per contraction factor: max ratio observed at t <= deep_cutoff
    pub per_c: Vec<(Rational, f64)>,
    pub floor: f64,
    pub deep_cutoff: Rational,
    pub t_grid: GeometricGrid,
    pub c_grid: GeometricGrid,
}

#[derive(Debug, Clone)]
pub enum ConditionAOutcome {
    Certificate(ConditionACertificate),
    Refutation(RefutationEvidence),
}

impl ConditionAOutcome {
    pub fn is_certificate(&self) -> bool {
        matches!(self, ConditionAOutcome::Certificate(_))
    }

    pub fn to_json(&self) -> Value {
        match self {
            ConditionAOutcome::Certificate(c) => json!({
                "verdict": "certificate",
                "grid_relative": true,
                "epsilon": c.epsilon,
                "c_epsilon": rat_to_json(&c.c_epsilon),
                "delta_epsilon": rat_to_json(&c.delta_epsilon),
                "max_observed_ratio": c.max_observed_ratio,
                "t_grid": c.t_grid.describe(),
                "c_grid": c.c_grid.describe(),
            }),
            ConditionAOutcome::Refutation(r) => json!({
                "verdict": "refutation_evidence",
                "grid_relative": true,
                "epsilon": r.epsilon,
                "floor": r.floor,
                "deep_cutoff": rat_to_json(&r.deep_cutoff),
                "per_c": r.per_c.iter()
                    .map(|(c, v)| json!({"c": rat_to_json(c), "deep_max_ratio": v}))
                    .collect::<Vec<_>>(),
                "t_grid": r.t_grid.describe(),
                "c_grid": r.c_grid.describe(),
            }),
        }
    }
}

/// Sweeps contraction factors against the ratio condition. A certificate
/// needs some `c` whose ratio stays below epsilon on a nonempty deep
/// prefix of the grid; otherwise every `c` is reported with its deep-tail
/// ratio floor.
pub fn check_condition_a(
    gamma: &ModulusFunction,
    epsilon: f64,
    c_grid: &GeometricGrid,
    t_grid: &GeometricGrid,
    ctx: &mut EvalCtx,
) -> Result<ConditionAOutcome, ModulusError> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(ModulusError::InvalidEpsilon);
    }
    let ts = t_grid.points();
    let cs = c_grid.points();
    if ts.len() < 2 || cs.is_empty() {
        return Err(ModulusError::DegenerateGrid);
    }
    let t_min = ts.last().unwrap();
    if t_min > &pow2(-60) {
        return Err(ModulusError::DegenerateGrid);
    }

    let deep_cutoff = pow2(-100);
    let mut best: Option<ConditionACertificate> = None;
    let mut per_c = Vec::new();

    // arguments repeat heavily across contraction factors (c*t often
    // equals another grid point), so memoize on the exact rational
    let mut memo: std::collections::HashMap<Rational, BigFloat> = std::collections::HashMap::new();
    let mut eval_memo = |arg: &Rational, ctx: &mut EvalCtx| -> Result<BigFloat, ModulusError> {
        if let Some(v) = memo.get(arg) {
            return Ok(v.clone());
        }
        let v = gamma.eval(arg, ctx)?;
        memo.insert(arg.clone(), v.clone());
        Ok(v)
    };

    // denominators are shared by every contraction factor
    let mut dens = Vec::with_capacity(ts.len());
    for t in &ts {
        let den = eval_memo(t, ctx)?;
        if den.is_zero() {
            return Err(ModulusError::ZeroDenominator { t: t.clone() });
        }
        dens.push(den);
    }

    for c in &cs {
        let mut ratios = Vec::with_capacity(ts.len());
        for (t, den) in ts.iter().zip(&dens) {
            let num = eval_memo(&(c * t), ctx)?;
            ratios.push(ctx.to_f64(&num.div(den, 256, astro_float::RoundingMode::ToEven)));
        }
        // delta = the smallest failing t (whole grid passes: delta = start)
        let mut delta: Option<Rational> = Some(t_grid.start.clone());
        let mut max_below = 0.0f64;
        for (t, r) in ts.iter().zip(&ratios).rev() {
            if *r >= epsilon {
                // everything below this t passed; is that region nonempty?
                if t == ts.last().unwrap() {
                    delta = None;
                } else {
                    delta = Some(t.clone());
                }
                break;
            }
            max_below = max_below.max(*r);
        }
        if let Some(d) = delta {
            let better = match &best {
                None => true,
                Some(b) => d > b.delta_epsilon,
            };
            if better {
                best = Some(ConditionACertificate {
                    epsilon,
                    c_epsilon: c.clone(),
                    delta_epsilon: d,
                    max_observed_ratio: max_below,
                    t_grid: t_grid.clone(),
                    c_grid: c_grid.clone(),
                });
            }
        }
        let deep_max = ts
            .iter()
            .zip(&ratios)
            .filter(|(t, _)| *t <= &deep_cutoff)
            .map(|(_, r)| *r)
            .fold(0.0f64, f64::max);
        per_c.push((c.clone(), deep_max));
    }

    if let Some(cert) = best {
        return Ok(ConditionAOutcome::Certificate(cert));
    }
    let floor = per_c.iter().map(|(_, v)| *v).fold(f64::INFINITY, f64::min);
    Ok(ConditionAOutcome::Refutation(RefutationEvidence {
        epsilon,
        per_c,
        floor,
        deep_cutoff,
        t_grid: t_grid.clone(),
        c_grid: c_grid.clone(),
    }))
}

/// Empirical two-sided bound on `gamma1(t)/gamma2(t)` over the grid, with
/// a refinement-stability flag: the extreme values on the deepest quarter
/// must agree with the neighbouring quarter for the bound to count as
/// uniform.
#[derive(Debug, Clone, serde::Serialize)]
pub struct RatioBound {
    pub a_est: f64,
    pub b_est: f64,
    pub uniform: bool,
}

pub fn ratio_bound(
    gamma1: &ModulusFunction,
    gamma2: &ModulusFunction,
    delta: &Rational,
    t_grid: &GeometricGrid,
    ctx: &mut EvalCtx,
) -> Result<RatioBound, ModulusError> {
    let ts: Vec<Rational> = t_grid.points().into_iter().filter(|t| t < delta).collect();
    if ts.len() < 8 {
        return Err(ModulusError::DegenerateGrid);
    }
    let mut ratios = Vec::with_capacity(ts.len());
    for t in &ts {
        let num = gamma1.eval(t, ctx)?;
        let den = gamma2.eval(t, ctx)?;
        if den.is_zero() {
            return Err(ModulusError::ZeroDenominator { t: t.clone() });
        }
        ratios.push(ctx.to_f64(&num.div(&den, 256, astro_float::RoundingMode::ToEven)));
    }
    let minmax = |s: &[f64]| {
        (
            s.iter().cloned().fold(f64::INFINITY, f64::min),
            s.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
        )
    };
    let (a_est, b_est) = minmax(&ratios);
    let n = ratios.len();
    let deepest = &ratios[3 * n / 4..];
    let prior = &ratios[n / 2..3 * n / 4];
    let (dmin, dmax) = minmax(deepest);
    let (pmin, pmax) = minmax(prior);
    let stable_min = dmin >= 0.8 * pmin;
    let stable_max = dmax <= 1.25 * pmax.max(f64::MIN_POSITIVE);
    let uniform = a_est.is_finite()
        && b_est.is_finite()
        && a_est > 0.0
        && stable_min
        && stable_max;
    Ok(RatioBound { a_est, b_est, uniform })
}

/// Parses "identity", "power:1/2", "bounded", "log", "psi:power:1/2",
/// "psi:linear:3".
pub fn parse_modulus(s: &str, ctx: &mut EvalCtx) -> Result<ModulusFunction, ModulusError> {
    let s = s.trim();
    match s {
        "identity" | "id" => return Ok(ModulusFunction::Identity),
        "bounded" => return Ok(ModulusFunction::Bounded),
        "log" => return Ok(ModulusFunction::LogModulus),
        _ => {}
    }
    if let Some(rest) = s.strip_prefix("power:") {
        let p = crate::rational::parse_rational(rest).ok_or(ModulusError::BadJson)?;
        return ModulusFunction::power(p);
    }
    if let Some(rest) = s.strip_prefix("psi:power:") {
        let p = crate::rational::parse_rational(rest).ok_or(ModulusError::BadJson)?;
        return ModulusFunction::from_psi(PsiDescriptor::power(p), ctx);
    }
    if let Some(rest) = s.strip_prefix("psi:linear:") {
        let c = crate::rational::parse_rational(rest).ok_or(ModulusError::BadJson)?;
        return ModulusFunction::from_psi(PsiDescriptor::linear(c), ctx);
    }
    Err(ModulusError::BadJson)
}

/// The four catalog moduli used throughout the suites.
pub fn catalog() -> Vec<ModulusFunction> {
    vec![
        ModulusFunction::Identity,
        ModulusFunction::power(rat(1, 2)).unwrap(),
        ModulusFunction::Bounded,
        ModulusFunction::LogModulus,
    ]
}

pub fn grid_f64(g: &GeometricGrid) -> Vec<f64> {
    g.points().iter().map(rat_to_f64).collect()
}
