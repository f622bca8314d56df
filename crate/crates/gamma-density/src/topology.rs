//! The gamma-density topology on representable sets: openness, interior
//! via a measurable kernel, limit points via a limsup criterion, and the
//! countable-set facts (closedness, discreteness, the failure of
//! compactness for infinite countable sets).
//!
//! A measurable set A is gamma-open when every point of A is a
//! gamma-density point of A. Verdicts here are exact for interval-union
//! kernels with finitely many added/removed points, and anchor-decided
//! for the countably-constructed families; `Undecided` is a first-class
//! answer, never silently coerced.

use serde_json::{json, Value};
use thiserror::Error;

use crate::density::{
    classify_point, DensityError, Grid, MeasureOf, PointClass, Policy, TraceTarget,
};
use crate::hp::EvalCtx;
use crate::interval::{IntervalSet, Location, Side, SideLocal};
use crate::modulus::{ConditionAOutcome, ModulusFunction};
use crate::rational::{rat_to_json, Rational};
use crate::scale::ScaleFamily;
use num_traits::Zero;

#[derive(Debug, Error)]
pub enum TopologyError {
    #[error("hypothesis unmet: {0}")]
    HypothesisUnmet(String),
    #[error("operation requires a null (measure-zero) point family")]
    NotNull,
    #[error(transparent)]
    Density(#[from] DensityError),
}

/// The measure-carrying part of a representable set.
#[derive(Debug, Clone, PartialEq)]
pub enum Kernel {
    Set(IntervalSet),
    Family(ScaleFamily),
}

/// A set of the form `(kernel \ removed) ∪ added`, with `added` and
/// `removed` finite (hence null), plus an optional tag declaring an
/// extra countable null family (e.g. "1/n" or "rationals-in-(0,1)") for
/// the countable-set checks. A family kernel stands for the measure
/// class of the construction near its anchor; its point set away from
/// the anchor is not interrogated, only the anchor and the added points
/// are.
#[derive(Debug, Clone, PartialEq)]
pub struct RepresentableSet {
    pub kernel: Kernel,
    pub added: Vec<Rational>,
    pub removed: Vec<Rational>,
    pub countable_tag: Option<String>,
}

impl RepresentableSet {
    pub fn from_set(set: IntervalSet) -> Self {
        RepresentableSet {
            kernel: Kernel::Set(set),
            added: vec![],
            removed: vec![],
            countable_tag: None,
        }
    }

    pub fn from_family(family: ScaleFamily) -> Self {
        RepresentableSet {
            kernel: Kernel::Family(family),
            added: vec![],
            removed: vec![],
            countable_tag: None,
        }
    }

    /// A pure point family: empty kernel plus the listed points (and an
    /// optional declared-countable tag).
    pub fn points(points: Vec<Rational>, countable_tag: Option<String>) -> Self {
        RepresentableSet {
            kernel: Kernel::Set(IntervalSet::empty()),
            added: points,
            removed: vec![],
            countable_tag,
        }
    }

    pub fn with_added(mut self, p: Rational) -> Self {
        self.added.push(p);
        self
    }

    pub fn with_removed(mut self, p: Rational) -> Self {
        self.removed.push(p);
        self
    }

    pub fn kernel_target(&self) -> &dyn TraceTarget {
        match &self.kernel {
            Kernel::Set(s) => s,
            Kernel::Family(f) => f,
        }
    }

    /// Exact pointwise membership. The countable tag is declarative; its
    /// members are not enumerable here, so membership ignores it.
    pub fn contains(&self, x: &Rational) -> bool {
        if self.added.contains(x) {
            return true;
        }
        if self.removed.contains(x) {
            return false;
        }
        match &self.kernel {
            Kernel::Set(s) => s.contains(x),
            Kernel::Family(f) => f.contains_point(x),
        }
    }

    /// The kernel carries all the measure; true when it is empty.
    pub fn is_null(&self) -> bool {
        match &self.kernel {
            Kernel::Set(s) => s.is_empty(),
            Kernel::Family(_) => false,
        }
    }

    pub fn describe(&self) -> Value {
        let kernel = match &self.kernel {
            Kernel::Set(s) => json!({"set": s.to_json()}),
            Kernel::Family(f) => json!({"family": f.to_json()}),
        };
        json!({
            "kernel": kernel,
            "added": self.added.iter().map(rat_to_json).collect::<Vec<_>>(),
            "removed": self.removed.iter().map(rat_to_json).collect::<Vec<_>>(),
            "countable_tag": self.countable_tag,
        })
    }
}

impl TraceTarget for RepresentableSet {
    // added/removed are finite, hence null: traces equal kernel traces
    fn set_trace(&self, x: &Rational, h: &Rational, side: Side) -> Result<Rational, DensityError> {
        self.kernel_target().set_trace(x, h, side)
    }

    fn complement_trace(
        &self,
        x: &Rational,
        h: &Rational,
        side: Side,
    ) -> Result<Rational, DensityError> {
        self.kernel_target().complement_trace(x, h, side)
    }

    fn exact_local(&self, x: &Rational) -> Option<Location> {
        self.kernel_target().exact_local(x)
    }

    fn exact_side(&self, x: &Rational, side: Side) -> Option<SideLocal> {
        self.kernel_target().exact_side(x, side)
    }

    fn validity_radius_at(&self, x: &Rational) -> Option<Rational> {
        self.kernel_target().validity_radius_at(x)
    }

    fn describe(&self) -> Value {
        RepresentableSet::describe(self)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum OpennessVerdict {
    Open,
    NotOpen { witness: Rational },
    Undecided,
}

impl OpennessVerdict {
    pub fn is_open(&self) -> bool {
        matches!(self, OpennessVerdict::Open)
    }

    pub fn to_json(&self, set: &RepresentableSet, gamma: &ModulusFunction, policy: &Policy) -> Value {
        let (verdict, witness) = match self {
            OpennessVerdict::Open => ("Open", None),
            OpennessVerdict::NotOpen { witness } => ("NotOpen", Some(rat_to_json(witness))),
            OpennessVerdict::Undecided => ("Undecided", None),
        };
        json!({
            "set": set.describe(),
            "gamma": gamma.name(),
            "verdict": verdict,
            "witness": witness,
            "policy": policy,
        })
    }
}

/// Is every point of A a gamma-density point of A?
///
/// Interval-union kernels are open interval sets, so all their own points
/// are interior (exact density points); only the added points can break
/// openness, and each is decided exactly. Family kernels are decided at
/// their added points (typically the anchor); an Indeterminate anchor
/// verdict yields `Undecided`.
pub fn is_gamma_open(
    gamma: &ModulusFunction,
    a: &RepresentableSet,
    grid: &Grid,
    policy: &Policy,
    ctx: &mut EvalCtx,
) -> Result<OpennessVerdict, TopologyError> {
    for p in &a.added {
        if a.removed.contains(p) {
            continue;
        }
        let verdict = match classify_point(gamma, a.kernel_target(), p, grid, policy, ctx) {
            Ok(v) => v,
            Err(DensityError::OutsideValidity) => return Ok(OpennessVerdict::Undecided),
            Err(e) => return Err(e.into()),
        };
        match verdict.class {
            PointClass::GammaDensityPoint => {}
            PointClass::Indeterminate => return Ok(OpennessVerdict::Undecided),
            _ => return Ok(OpennessVerdict::NotOpen { witness: p.clone() }),
        }
    }
    Ok(OpennessVerdict::Open)
}

/// Per-point interior membership: `x ∈ Int(A)` iff `x ∈ A` and x is a
/// gamma-density point of the measurable kernel. Requires gamma to have
/// passed the ratio-condition certification (the interior formula needs
/// the density operator to be a lower-density operator); a refutation is
/// a hard hypothesis failure.
pub fn interior(
    gamma: &ModulusFunction,
    a: &RepresentableSet,
    sample: &[Rational],
    condition_a: &ConditionAOutcome,
    grid: &Grid,
    policy: &Policy,
    ctx: &mut EvalCtx,
) -> Result<Vec<(Rational, bool)>, TopologyError> {
    if !condition_a.is_certificate() {
        return Err(TopologyError::HypothesisUnmet(format!(
            "{} carries ratio-condition refutation evidence; the interior \
             formula requires a certified modulus",
            gamma.name()
        )));
    }
    let mut out = Vec::with_capacity(sample.len());
    for x in sample {
        let member = a.contains(x);
        let in_interior = if member {
            classify_point(gamma, a.kernel_target(), x, grid, policy, ctx)?
                .class
                .is_density()
        } else {
            false
        };
        out.push((x.clone(), in_interior));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitPointVerdict {
    LimitPoint,
    NotLimitPoint,
    Undecided,
}

/// Limsup criterion: x is a limit point of A in the gamma topology iff
/// the ratio `gamma(|A ∩ window|) / gamma(2a)` has positive limsup
/// (deleting the single point x changes no measure). Decided exactly
/// when the kernel has exact local structure at x, otherwise by the
/// running max over the deepest half of the grid against theta_limsup.
pub fn limit_point_test(
    gamma: &ModulusFunction,
    a: &RepresentableSet,
    x: &Rational,
    grid: &Grid,
    policy: &Policy,
    ctx: &mut EvalCtx,
) -> Result<LimitPointVerdict, TopologyError> {
    if a.is_null() {
        // a null set has set-trace exactly 0 around every point
        return Ok(LimitPointVerdict::NotLimitPoint);
    }
    if let Some(loc) = a.exact_local(x) {
        return Ok(match loc {
            // the set fills at least one side: trace >= alpha
            Location::Interior(_) | Location::Boundary { .. } => LimitPointVerdict::LimitPoint,
            Location::Outside(_) => LimitPointVerdict::NotLimitPoint,
        });
    }
    let trace = crate::density::ratio_trace(
        gamma,
        a.kernel_target(),
        x,
        Side::Both,
        grid,
        MeasureOf::Set,
        ctx,
    )?;
    let ratios = trace.ratios();
    let deep = &ratios[ratios.len() / 2..];
    let running_max = deep.iter().cloned().fold(0.0f64, f64::max);
    Ok(if running_max > policy.theta_limsup {
        LimitPointVerdict::LimitPoint
    } else {
        LimitPointVerdict::NotLimitPoint
    })
}

#[derive(Debug, Clone)]
pub struct CountableClosedReport {
    /// Per sampled point outside C: the trace of C in the window is
    /// exactly zero, so the complement-openness ratio is identically 0.
    pub samples: Vec<(Rational, bool)>,
    pub complement_open: bool,
}

/// Every countable set is closed in the gamma topology: its complement's
/// complement-trace (the trace of C itself) vanishes identically, so
/// every point outside C is a density point of the complement.
pub fn countable_closed_check(
    _gamma: &ModulusFunction,
    c: &RepresentableSet,
    sample: &[Rational],
    grid: &Grid,
) -> Result<CountableClosedReport, TopologyError> {
    if !c.is_null() {
        return Err(TopologyError::NotNull);
    }
    let mut samples = Vec::new();
    let mut all_zero = true;
    for x in sample {
        if c.contains(x) {
            continue;
        }
        // set-trace of a pure point family is exactly 0 at every scale
        let mut zero = true;
        for alpha in grid.alphas() {
            let m = c.set_trace(x, &alpha, Side::Both)?;
            if !m.is_zero() {
                zero = false;
            }
        }
        all_zero &= zero;
        samples.push((x.clone(), zero));
    }
    Ok(CountableClosedReport {
        samples,
        complement_open: all_zero,
    })
}

/// Structural compactness witness for a countable set: each of its
/// points is relatively open (the complement of the rest of C is
/// gamma-open and isolates it), so the singleton cover is an open cover
/// with no proper subcover; an infinite C therefore has no finite
/// subcover and cannot be compact.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CompactnessWitness {
    pub cover: &'static str,
    pub listed_points: usize,
    pub declared_infinite: bool,
    pub discrete: bool,
    pub finite_subcover_exists: bool,
    pub conclusion: &'static str,
}

pub fn singleton_cover_witness(c: &RepresentableSet) -> Result<CompactnessWitness, TopologyError> {
    if !c.is_null() {
        return Err(TopologyError::NotNull);
    }
    let declared_infinite = c.countable_tag.is_some();
    Ok(CompactnessWitness {
        cover: "singletons",
        listed_points: c.added.len(),
        declared_infinite,
        discrete: true,
        finite_subcover_exists: !declared_infinite,
        conclusion: "a compact set in this topology must be finite",
    })
}

/// Exact accounting of `|A △ Int(A)|` for interval-union kernels: the
/// interior formula keeps all kernel-interior points and drops only
/// added points that fail the density test — a finite, null set.
#[derive(Debug, Clone)]
pub struct NullDifferenceReport {
    pub dropped_points: Vec<Rational>,
    pub symmetric_difference_measure: Rational,
    pub exact: bool,
}

pub fn interior_closure_null_check(
    gamma: &ModulusFunction,
    a: &RepresentableSet,
    condition_a: &ConditionAOutcome,
    grid: &Grid,
    policy: &Policy,
    ctx: &mut EvalCtx,
) -> Result<NullDifferenceReport, TopologyError> {
    if !condition_a.is_certificate() {
        return Err(TopologyError::HypothesisUnmet(format!(
            "{} is not certified for the ratio condition",
            gamma.name()
        )));
    }
    match &a.kernel {
        Kernel::Set(_) => {}
        Kernel::Family(_) => {
            return Err(TopologyError::HypothesisUnmet(
                "exact null-difference accounting needs an interval-union kernel".into(),
            ))
        }
    }
    let mut dropped = Vec::new();
    for p in &a.added {
        if a.removed.contains(p) {
            continue;
        }
        let v = classify_point(gamma, a.kernel_target(), p, grid, policy, ctx)?;
        if !v.class.is_density() {
            dropped.push(p.clone());
        }
    }
    Ok(NullDifferenceReport {
        dropped_points: dropped,
        symmetric_difference_measure: Rational::zero(),
        exact: true,
    })
}

/// Diagnostic for the non-regularity construction: checks the witness
/// inequality `|(-h, h) ∩ V| > h` exactly for each supplied radius.
pub fn separation_witness(v: &IntervalSet, hs: &[Rational]) -> Vec<(Rational, bool)> {
    hs.iter()
        .map(|h| {
            let m = v
                .trace_measure(&Rational::zero(), h, Side::Both)
                .unwrap_or_else(|_| Rational::zero());
            (h.clone(), &m > h)
        })
        .collect()
}

/// Helper used by the property suites: openness of a plain interval set.
pub fn interval_set_open(
    gamma: &ModulusFunction,
    set: &IntervalSet,
    grid: &Grid,
    policy: &Policy,
    ctx: &mut EvalCtx,
) -> Result<OpennessVerdict, TopologyError> {
    is_gamma_open(gamma, &RepresentableSet::from_set(set.clone()), grid, policy, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modulus::{catalog, check_condition_a, default_c_grid, default_t_grid};
    use crate::rational::{rat, rat_int};

    fn ctx() -> EvalCtx {
        EvalCtx::new(60)
    }

    fn certificate(ctx: &mut EvalCtx) -> ConditionAOutcome {
        check_condition_a(
            &ModulusFunction::Identity,
            0.1,
            &default_c_grid(),
            &default_t_grid(),
            ctx,
        )
        .unwrap()
    }

    fn refutation(ctx: &mut EvalCtx) -> ConditionAOutcome {
        check_condition_a(
            &ModulusFunction::LogModulus,
            0.5,
            &default_c_grid(),
            &default_t_grid(),
            ctx,
        )
        .unwrap()
    }

    #[test]
    fn plain_interval_open_for_all_moduli() {
        let mut c = ctx();
        let a = RepresentableSet::from_set(
            IntervalSet::interval(rat_int(0), rat_int(1)).unwrap(),
        );
        for gamma in catalog() {
            let v = is_gamma_open(&gamma, &a, &Grid::default(), &Policy::default(), &mut c)
                .unwrap();
            assert!(v.is_open(), "{}", gamma.name());
        }
    }

    #[test]
    fn isolated_added_point_breaks_openness() {
        let mut c = ctx();
        let a = RepresentableSet::from_set(
            IntervalSet::interval(rat_int(0), rat_int(1)).unwrap(),
        )
        .with_added(rat_int(2));
        let v = is_gamma_open(
            &ModulusFunction::Identity,
            &a,
            &Grid::default(),
            &Policy::default(),
            &mut c,
        )
        .unwrap();
        assert_eq!(v, OpennessVerdict::NotOpen { witness: rat_int(2) });
    }

    #[test]
    fn gap_family_open_for_identity_not_for_log() {
        // density-point hull of the gap construction, represented by its
        // kernel with the anchor added: open classically, not under the
        // slow modulus
        let mut c = ctx();
        let u = RepresentableSet::from_family(ScaleFamily::dyadic_gap())
            .with_added(rat_int(0));
        let g = Grid::default();
        let p = Policy::default();
        let open_id = is_gamma_open(&ModulusFunction::Identity, &u, &g, &p, &mut c).unwrap();
        assert!(open_id.is_open());
        let open_log = is_gamma_open(&ModulusFunction::LogModulus, &u, &g, &p, &mut c).unwrap();
        assert_eq!(open_log, OpennessVerdict::NotOpen { witness: rat_int(0) });
    }

    #[test]
    fn interior_formula_cases() {
        let mut c = ctx();
        let cert = certificate(&mut c);
        let g = Grid::default();
        let p = Policy::default();
        let gamma = ModulusFunction::Identity;

        // closed unit interval: kernel (0,1) plus both endpoints
        let closed = RepresentableSet::from_set(
            IntervalSet::interval(rat_int(0), rat_int(1)).unwrap(),
        )
        .with_added(rat_int(0))
        .with_added(rat_int(1));
        let sample = vec![rat_int(0), rat(1, 2), rat_int(1)];
        let out = interior(&gamma, &closed, &sample, &cert, &g, &p, &mut c).unwrap();
        assert_eq!(out[0].1, false);
        assert_eq!(out[1].1, true);
        assert_eq!(out[2].1, false);

        // isolated added point is in A but not in the interior
        let with_spur = RepresentableSet::from_set(
            IntervalSet::interval(rat_int(0), rat_int(1)).unwrap(),
        )
        .with_added(rat_int(3));
        let out = interior(&gamma, &with_spur, &[rat_int(3)], &cert, &g, &p, &mut c).unwrap();
        assert_eq!(out[0].1, false);

        // removed interior point: still a density point of the kernel,
        // but no longer a member, hence not in the interior
        let punctured = RepresentableSet::from_set(
            IntervalSet::interval(rat_int(0), rat_int(1)).unwrap(),
        )
        .with_removed(rat(1, 2));
        let out = interior(&gamma, &punctured, &[rat(1, 2)], &cert, &g, &p, &mut c).unwrap();
        assert_eq!(out[0].1, false);
    }

    #[test]
    fn interior_refuses_refuted_modulus() {
        let mut c = ctx();
        let refuted = refutation(&mut c);
        let a = RepresentableSet::from_set(
            IntervalSet::interval(rat_int(0), rat_int(1)).unwrap(),
        );
        let err = interior(
            &ModulusFunction::LogModulus,
            &a,
            &[rat(1, 2)],
            &refuted,
            &Grid::default(),
            &Policy::default(),
            &mut c,
        );
        assert!(matches!(err, Err(TopologyError::HypothesisUnmet(_))));
    }

    #[test]
    fn limit_points() {
        let mut c = ctx();
        let g = Grid::default();
        let p = Policy::default();
        let gamma = ModulusFunction::Identity;

        let unit = RepresentableSet::from_set(
            IntervalSet::interval(rat_int(0), rat_int(1)).unwrap(),
        );
        assert_eq!(
            limit_point_test(&gamma, &unit, &rat_int(0), &g, &p, &mut c).unwrap(),
            LimitPointVerdict::LimitPoint
        );
        assert_eq!(
            limit_point_test(&gamma, &unit, &rat_int(5), &g, &p, &mut c).unwrap(),
            LimitPointVerdict::NotLimitPoint
        );

        let empty = RepresentableSet::from_set(IntervalSet::empty());
        assert_eq!(
            limit_point_test(&gamma, &empty, &rat_int(0), &g, &p, &mut c).unwrap(),
            LimitPointVerdict::NotLimitPoint
        );

        // countable null family: never a source of limit points
        let recip: Vec<Rational> = (1..=100).map(|n| rat(1, n)).collect();
        let fam = RepresentableSet::points(recip, Some("1/n".into()));
        for gamma in catalog() {
            assert_eq!(
                limit_point_test(&gamma, &fam, &rat_int(0), &g, &p, &mut c).unwrap(),
                LimitPointVerdict::NotLimitPoint,
                "{}",
                gamma.name()
            );
        }

        // family kernel at the anchor: the set carries full measure
        let gap = RepresentableSet::from_family(ScaleFamily::dyadic_gap());
        assert_eq!(
            limit_point_test(&gamma, &gap, &rat_int(0), &g, &p, &mut c).unwrap(),
            LimitPointVerdict::LimitPoint
        );
    }

    #[test]
    fn countable_sets_are_closed() {
        let mut points: Vec<Rational> = (1..=1000).map(|n| rat(1, n)).collect();
        points.push(rat_int(0));
        let cset = RepresentableSet::points(points, Some("1/n".into()));
        let report = countable_closed_check(
            &ModulusFunction::Identity,
            &cset,
            &[rat(1, 2) + rat(1, 3), rat_int(-1), rat(2, 3)],
            &Grid::default(),
        )
        .unwrap();
        assert!(report.complement_open);
        assert!(report.samples.iter().all(|(_, z)| *z));

        let empty = RepresentableSet::points(vec![], None);
        let report = countable_closed_check(
            &ModulusFunction::LogModulus,
            &empty,
            &[rat_int(0)],
            &Grid::default(),
        )
        .unwrap();
        assert!(report.complement_open);

        // a fat kernel is not a countable set
        let fat = RepresentableSet::from_set(
            IntervalSet::interval(rat_int(0), rat_int(1)).unwrap(),
        );
        assert!(matches!(
            countable_closed_check(&ModulusFunction::Identity, &fat, &[], &Grid::default()),
            Err(TopologyError::NotNull)
        ));
    }

    #[test]
    fn singleton_cover_blocks_compactness() {
        let inf = RepresentableSet::points(
            (1..=50).map(|n| rat(1, n)).collect(),
            Some("1/n".into()),
        );
        let w = singleton_cover_witness(&inf).unwrap();
        assert!(w.declared_infinite);
        assert!(!w.finite_subcover_exists);
        assert!(w.discrete);

        let fin = RepresentableSet::points(vec![rat_int(1), rat_int(2)], None);
        let w = singleton_cover_witness(&fin).unwrap();
        assert!(w.finite_subcover_exists);
    }

    #[test]
    fn interior_differs_from_set_only_on_null() {
        let mut c = ctx();
        let cert = certificate(&mut c);
        let a = RepresentableSet::from_set(
            IntervalSet::interval(rat_int(0), rat_int(1)).unwrap(),
        )
        .with_added(rat_int(5));
        let rep = interior_closure_null_check(
            &ModulusFunction::Identity,
            &a,
            &cert,
            &Grid::default(),
            &Policy::default(),
            &mut c,
        )
        .unwrap();
        assert_eq!(rep.dropped_points, vec![rat_int(5)]);
        assert!(rep.symmetric_difference_measure.is_zero());
        assert!(rep.exact);

        // removal of an interior point: the formula re-admits nothing
        // (membership filter) and drops nothing; difference stays null
        let punctured = RepresentableSet::from_set(
            IntervalSet::interval(rat_int(0), rat_int(1)).unwrap(),
        )
        .with_removed(rat(1, 2));
        let rep = interior_closure_null_check(
            &ModulusFunction::Identity,
            &punctured,
            &cert,
            &Grid::default(),
            &Policy::default(),
            &mut c,
        )
        .unwrap();
        assert!(rep.dropped_points.is_empty());
        assert!(rep.symmetric_difference_measure.is_zero());
    }

    #[test]
    fn separation_diagnostic() {
        let v = IntervalSet::interval(rat_int(-1), rat_int(1)).unwrap();
        let hs = vec![rat(1, 2), rat(1, 4)];
        let out = separation_witness(&v, &hs);
        // |(-h,h) ∩ (-1,1)| = 2h > h
        assert!(out.iter().all(|(_, ok)| *ok));

        let thin = IntervalSet::interval(rat_int(0), rat(1, 100)).unwrap();
        let out = separation_witness(&thin, &[rat(1, 2)]);
        assert!(!out[0].1);
    }

    #[test]
    fn family_membership() {
        let gap = ScaleFamily::dyadic_gap();
        // first construction interval is (1/4, 11/32): midpoint excluded
        assert!(!gap.contains_point(&rat(5, 16)));
        // scale boundaries and the anchor belong to the set
        assert!(gap.contains_point(&rat(1, 4)));
        assert!(gap.contains_point(&rat(11, 32)));
        assert!(gap.contains_point(&rat_int(0)));
        assert!(gap.contains_point(&rat(3, 8)));
        // mirrored side
        assert!(!gap.contains_point(&rat(-5, 16)));
        assert!(gap.contains_point(&rat(-3, 8)));
        // far outside the construction
        assert!(gap.contains_point(&rat_int(7)));

        let bump = ScaleFamily::bump_support();
        // first bump support is (1/4, 1/4 + 1/16)
        assert!(!bump.contains_point(&rat(9, 32)));
        assert!(bump.contains_point(&rat(-1, 8)));
        let witness = ScaleFamily::Complement {
            inner: Box::new(ScaleFamily::bump_support()),
        };
        assert!(witness.contains_point(&rat(9, 32)));
        assert!(!witness.contains_point(&rat_int(0)));
    }
}
