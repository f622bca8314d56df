//! Seeded property suites: randomized corpora of finite interval unions
//! and witnessed functions, with every structural law of the density
//! operator, the topology, and the approximate-continuity algebra checked
//! case by case. Reports are deterministic given the seed and carry no
//! timestamps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::approx::{
    build_bump_function, check_point, compose_continuous, sum_is_approx_continuous, Piece,
    RealFunction, WitnessedFunction,
};
use crate::density::{
    classify_point, one_sided_equivalence_check, ratio_trace, sequential_criterion_check, Grid,
    MeasureOf, PointClass, Policy, TraceTarget,
};
use crate::hp::EvalCtx;
use crate::interval::{IntervalSet, Side};
use crate::modulus::{
    check_condition_a, validate_modulus, ConditionAOutcome, GeometricGrid, ModulusFunction,
};
use crate::rational::{rat, rat_int, Rational};
use crate::scale::ScaleFamily;
use crate::topology::{
    countable_closed_check, is_gamma_open, singleton_cover_witness, OpennessVerdict,
    RepresentableSet,
};

/// Outcome of one suite: counted cases, failures, and a few samples of
/// what went wrong.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub details: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            cases: 0,
            failures: 0,
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.details.len() < 10 {
                self.details.push(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.name,
            "cases": self.cases,
            "failures": self.failures,
            "passed": self.passed(),
            "details": self.details,
        })
    }
}

#[derive(Debug, Clone)]
pub struct SuiteSummary {
    pub seed: u64,
    pub reports: Vec<SuiteReport>,
}

impl SuiteSummary {
    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(SuiteReport::passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.seed,
            "all_passed": self.all_passed(),
            "suites": self.reports.iter().map(SuiteReport::to_json).collect::<Vec<_>>(),
        })
    }
}

// ---------------------------------------------------------------------
// random corpus generation

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let denoms = [1i64, 2, 3, 4, 6, 8];
    let d = denoms[rng.gen_range(0..denoms.len())];
    rat(rng.gen_range(-48..=48), d)
}

/// A normalized union of at most 6 bounded components.
pub fn random_interval_set(rng: &mut ChaCha8Rng) -> IntervalSet {
    let components = rng.gen_range(1..=6usize);
    let mut endpoints: Vec<Rational> = Vec::new();
    while endpoints.len() < 2 * components {
        let r = random_rational(rng);
        if !endpoints.contains(&r) {
            endpoints.push(r);
        }
    }
    endpoints.sort();
    let pairs = endpoints
        .chunks(2)
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect();
    IntervalSet::normalize(pairs).expect("distinct sorted endpoints")
}

/// Probe points that exercise interiors, boundaries, gaps and the far
/// outside of a pair of sets.
fn sample_points(rng: &mut ChaCha8Rng, a: &IntervalSet, b: &IntervalSet, n: usize) -> Vec<Rational> {
    let mut pool: Vec<Rational> = Vec::new();
    for s in [a, b] {
        for iv in s.components() {
            if let (Some(lo), Some(hi)) = (iv.lo(), iv.hi()) {
                pool.push(lo.clone());
                pool.push(hi.clone());
                pool.push((lo + hi) / rat(2, 1));
            }
        }
    }
    pool.push(rat_int(100));
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        if rng.gen_bool(0.7) && !pool.is_empty() {
            out.push(pool[rng.gen_range(0..pool.len())].clone());
        } else {
            out.push(random_rational(rng));
        }
    }
    out
}

fn classify_exact(
    gamma: &ModulusFunction,
    set: &IntervalSet,
    x: &Rational,
    ctx: &mut EvalCtx,
) -> PointClass {
    classify_point(gamma, set, x, &Grid::default(), &Policy::default(), ctx)
        .expect("finite unions classify exactly")
        .class
}

// ---------------------------------------------------------------------
// suites

/// Axiom validation across the catalog, plus rejection of a planted
/// non-modulus.
pub fn suite_modulus_axioms(ctx: &mut EvalCtx) -> SuiteReport {
    let mut rep = SuiteReport::new("modulus-axioms");
    let grid = GeometricGrid::dyadic(1, 100);
    for gamma in crate::modulus::catalog() {
        let report = validate_modulus(&gamma, &grid, 1e-12, ctx).expect("nonempty grid");
        rep.check(report.all_pass, || format!("{} failed axiom validation", gamma.name()));
    }
    let square = ModulusFunction::power_probe(rat_int(2));
    let report = validate_modulus(&square, &GeometricGrid::dyadic(1, 20), 1e-12, ctx)
        .expect("nonempty grid");
    rep.check(!report.subadditive.pass, || {
        "t^2 probe was not flagged as superadditive".into()
    });
    rep
}

/// Ratio-condition certificates for the fast moduli and refutation
/// evidence for the slow one. The contraction grid reaches 2^-30 so the
/// smallest epsilon still has certifying factors available.
pub fn suite_condition_a(ctx: &mut EvalCtx) -> SuiteReport {
    let mut rep = SuiteReport::new("condition-a");
    let c_grid = GeometricGrid::dyadic(1, 30);
    let t_grid = crate::modulus::default_t_grid();
    let fast: Vec<ModulusFunction> = vec![
        ModulusFunction::Identity,
        ModulusFunction::power(rat(1, 4)).unwrap(),
        ModulusFunction::power(rat(1, 2)).unwrap(),
        ModulusFunction::power(rat(3, 4)).unwrap(),
    ];
    for gamma in &fast {
        for eps in [0.5, 0.1, 0.01] {
            let out = check_condition_a(gamma, eps, &c_grid, &t_grid, ctx)
                .expect("grids valid");
            rep.check(out.is_certificate(), || {
                format!("{} expected certificate at eps={eps}", gamma.name())
            });
        }
    }
    // refutation-floor evidence is grid-relative; state it over the
    // default contraction grid (the deep extension exists only so the
    // smallest epsilon has certifying factors)
    let out = check_condition_a(
        &ModulusFunction::LogModulus,
        0.5,
        &crate::modulus::default_c_grid(),
        &t_grid,
        ctx,
    )
    .expect("grids valid");
    match out {
        ConditionAOutcome::Refutation(r) => {
            rep.check(r.floor >= 0.9, || {
                format!("slow-modulus deep-tail ratio floor {} < 0.9", r.floor)
            });
        }
        ConditionAOutcome::Certificate(_) => {
            rep.check(false, || "slow modulus unexpectedly certified".into());
        }
    }
    rep
}

/// The gap construction: classically a density point at the anchor, with
/// limit 1/2 (not 0) under the slow modulus.
pub fn suite_gap_reproduction(ctx: &mut EvalCtx) -> SuiteReport {
    let mut rep = SuiteReport::new("gap-reproduction");
    let fam = ScaleFamily::dyadic_gap();
    let grid = Grid::dyadic(10, 60);

    let log_trace = ratio_trace(
        &ModulusFunction::LogModulus,
        &fam,
        &rat_int(0),
        Side::Both,
        &grid,
        MeasureOf::Complement,
        ctx,
    )
    .expect("anchor within validity");
    let ratios = log_trace.ratios();
    for r in &ratios[ratios.len() - 10..] {
        rep.check((r - 0.5).abs() < 0.05, || {
            format!("slow-modulus ratio {r} not within 0.05 of 1/2")
        });
    }

    let id_trace = ratio_trace(
        &ModulusFunction::Identity,
        &fam,
        &rat_int(0),
        Side::Both,
        &grid,
        MeasureOf::Complement,
        ctx,
    )
    .expect("anchor within validity");
    for r in &id_trace.records {
        // m(h) <= 4h^2, i.e. ratio m/2h <= 2h, exactly in rational arithmetic
        let bound = rat(4, 1) * &r.alpha * &r.alpha;
        rep.check(r.measure <= bound, || {
            format!("classical trace exceeded 4h^2 at h = {}", r.alpha)
        });
        let lower = &r.alpha * &r.alpha / rat(4, 1);
        rep.check(r.measure >= lower, || {
            format!("classical trace fell below h^2/4 at h = {}", r.alpha)
        });
    }

    let v = classify_point(
        &ModulusFunction::Identity,
        &fam,
        &rat_int(0),
        &Grid::default(),
        &Policy::default(),
        ctx,
    )
    .expect("anchor");
    rep.check(v.class == PointClass::GammaDensityPoint, || {
        format!("anchor not a classical density point: {:?}", v.class)
    });
    let v = classify_point(
        &ModulusFunction::LogModulus,
        &fam,
        &rat_int(0),
        &Grid::default(),
        &Policy::default(),
        ctx,
    )
    .expect("anchor");
    rep.check(v.class == PointClass::NotDensityPoint, || {
        format!("anchor unexpectedly {:?} under the slow modulus", v.class)
    });
    rep
}

/// The four structural laws of the density operator on a random corpus:
/// full line / empty set, monotonicity, null-modification invariance,
/// and the intersection law as a biconditional. All verdicts exact.
pub fn suite_lattice_laws(seed: u64, pairs: usize, ctx: &mut EvalCtx) -> SuiteReport {
    let mut rep = SuiteReport::new("lattice-laws");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1a77);
    let gamma = ModulusFunction::Identity;
    let full = IntervalSet::full_line();
    let empty = IntervalSet::empty();

    for _ in 0..pairs {
        let a = random_interval_set(&mut rng);
        let b = random_interval_set(&mut rng);
        let inter = a.intersect(&b);
        let union = a.union(&b);
        for x in sample_points(&mut rng, &a, &b, 10) {
            let va = classify_exact(&gamma, &a, &x, ctx);
            let vb = classify_exact(&gamma, &b, &x, ctx);
            let vi = classify_exact(&gamma, &inter, &x, ctx);
            let vu = classify_exact(&gamma, &union, &x, ctx);

            // no Indeterminate on the finite-union corpus
            for v in [va, vb, vi, vu] {
                rep.check(v != PointClass::Indeterminate, || {
                    format!("indeterminate verdict at x={x}")
                });
            }

            // extremes
            rep.check(
                classify_exact(&gamma, &full, &x, ctx) == PointClass::GammaDensityPoint,
                || format!("full line not dense at {x}"),
            );
            rep.check(
                classify_exact(&gamma, &empty, &x, ctx) == PointClass::GammaDispersionPoint,
                || format!("empty set not dispersed at {x}"),
            );

            // monotonicity: A∩B ⊆ A ⊆ A∪B
            rep.check(
                !vi.is_density() || (va.is_density() && vb.is_density() && vu.is_density()),
                || format!("monotonicity broken at x={x}: A={a}, B={b}"),
            );
            rep.check(!va.is_density() || vu.is_density(), || {
                format!("monotonicity broken at x={x} for the union")
            });

            // null modification: finitely many added/removed points leave
            // every trace, hence every verdict, unchanged
            let modified = RepresentableSet::from_set(a.clone())
                .with_added(x.clone() + rat_int(1000))
                .with_removed(x.clone());
            let vm = classify_point(
                &gamma,
                &modified as &dyn TraceTarget,
                &x,
                &Grid::default(),
                &Policy::default(),
                ctx,
            )
            .expect("exact")
            .class;
            rep.check(vm == va, || format!("null modification changed verdict at x={x}"));

            // intersection law, both directions
            rep.check(
                vi.is_density() == (va.is_density() && vb.is_density()),
                || format!("intersection law broken at x={x}: A={a}, B={b}"),
            );
        }
    }
    rep
}

/// One-sided/two-sided equivalence, grid-vs-sequence agreement, and
/// exact translation equivariance.
pub fn suite_equivalences(seed: u64, ctx: &mut EvalCtx) -> SuiteReport {
    let mut rep = SuiteReport::new("equivalences");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xe9_01);
    let gamma = ModulusFunction::Identity;
    let grid = Grid::default();
    let policy = Policy::default();

    for _ in 0..40 {
        let a = random_interval_set(&mut rng);
        for x in sample_points(&mut rng, &a, &a, 3) {
            let one = one_sided_equivalence_check(&gamma, &a, &x, &grid, &policy, ctx)
                .expect("finite union");
            rep.check(one.equivalence_holds, || {
                format!("one-sided equivalence failed at x={x} on {a}")
            });
            rep.check(one.nested_window_violation <= 1e-9, || {
                format!("window nesting inequality violated at x={x}")
            });
            rep.check(one.doubling_violation <= 1e-9, || {
                format!("doubling inequality violated at x={x}")
            });

            let seq = sequential_criterion_check(&gamma, &a, &x, &policy, ctx)
                .expect("finite union");
            rep.check(seq.agree, || {
                format!("grid/sequence verdicts disagree at x={x} on {a}")
            });
            rep.check(seq.bridging_violation <= 1e-9, || {
                format!("bridging inequality violated at x={x}")
            });
        }
    }

    // the countably-constructed witness too, under two moduli
    for gamma in [ModulusFunction::Identity, ModulusFunction::LogModulus] {
        let one = one_sided_equivalence_check(
            &gamma,
            &ScaleFamily::dyadic_gap(),
            &rat_int(0),
            &grid,
            &policy,
            ctx,
        )
        .expect("anchor");
        rep.check(one.equivalence_holds, || {
            format!("anchor one-sided equivalence failed for {}", gamma.name())
        });
        let seq = sequential_criterion_check(
            &gamma,
            &ScaleFamily::dyadic_gap(),
            &rat_int(0),
            &policy,
            ctx,
        )
        .expect("anchor");
        rep.check(seq.agree, || {
            format!("anchor grid/sequence disagreement for {}", gamma.name())
        });
    }

    // translation equivariance for 20 random shifts, exact
    for _ in 0..20 {
        let a = random_interval_set(&mut rng);
        let z = random_rational(&mut rng);
        let shifted = a.translate(&z);
        for x in sample_points(&mut rng, &a, &a, 5) {
            let v1 = classify_exact(&gamma, &a, &x, ctx);
            let v2 = classify_exact(&gamma, &shifted, &(&x + &z), ctx);
            rep.check(v1 == v2, || {
                format!("translation by {z} changed verdict at x={x}")
            });
        }
    }
    rep
}

/// Certified moduli classify exactly like the classical baseline, both
/// pointwise and for openness; the slow modulus is the deliberate
/// exception at the gap-construction anchor.
pub fn suite_coincidence(seed: u64, ctx: &mut EvalCtx) -> SuiteReport {
    let mut rep = SuiteReport::new("coincidence");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc01c);
    let certified = [
        ModulusFunction::power(rat(1, 2)).unwrap(),
        ModulusFunction::Bounded,
    ];
    let identity = ModulusFunction::Identity;
    let grid = Grid::default();
    let policy = Policy::default();

    for _ in 0..60 {
        let a = random_interval_set(&mut rng);
        for x in sample_points(&mut rng, &a, &a, 5) {
            let base = classify_exact(&identity, &a, &x, ctx);
            for gamma in &certified {
                let v = classify_exact(gamma, &a, &x, ctx);
                rep.check(v == base, || {
                    format!("{} disagrees with baseline at x={x}", gamma.name())
                });
            }
        }

        // openness: certified moduli agree with the baseline; every
        // modulus-open set is classically open
        let spur = random_rational(&mut rng);
        let repset = RepresentableSet::from_set(a.clone()).with_added(spur);
        let base_open = is_gamma_open(&identity, &repset, &grid, &policy, ctx)
            .expect("finite")
            .is_open();
        for gamma in certified.iter().chain([&ModulusFunction::LogModulus]) {
            let open = is_gamma_open(gamma, &repset, &grid, &policy, ctx).expect("finite");
            if certified.iter().any(|g| g == gamma) {
                rep.check(open.is_open() == base_open, || {
                    format!("{} openness disagrees with baseline", gamma.name())
                });
            }
            rep.check(!open.is_open() || base_open, || {
                format!("{}-open set not classically open", gamma.name())
            });
        }
    }

    // both construction anchors are density points for every certified
    // modulus, matching the baseline
    for fam in [ScaleFamily::dyadic_gap(), ScaleFamily::bump_support()] {
        for gamma in certified.iter().chain([&identity]) {
            let v = classify_point(gamma, &fam, &rat_int(0), &grid, &policy, ctx)
                .expect("anchor");
            rep.check(v.class == PointClass::GammaDensityPoint, || {
                format!("{} missed density at a construction anchor", gamma.name())
            });
        }
    }

    // the deliberate disagreement: slow modulus at the gap anchor
    let slow = classify_point(
        &ModulusFunction::LogModulus,
        &ScaleFamily::dyadic_gap(),
        &rat_int(0),
        &grid,
        &policy,
        ctx,
    )
    .expect("anchor");
    rep.check(slow.class == PointClass::NotDensityPoint, || {
        format!("slow modulus unexpectedly {:?} at the gap anchor", slow.class)
    });
    let u = RepresentableSet::from_family(ScaleFamily::dyadic_gap()).with_added(rat_int(0));
    let open_id = is_gamma_open(&identity, &u, &grid, &policy, ctx).expect("anchor");
    let open_log = is_gamma_open(&ModulusFunction::LogModulus, &u, &grid, &policy, ctx)
        .expect("anchor");
    rep.check(open_id.is_open(), || "gap hull not classically open".into());
    rep.check(
        open_log == OpennessVerdict::NotOpen { witness: rat_int(0) },
        || "gap hull unexpectedly open under the slow modulus".into(),
    );
    rep
}

/// Uniform two-sided ratio bounds between moduli transfer verdicts and
/// openness unchanged (checked for the identity/bounded pair, whose
/// exact ratio is 1 + t on (0,1)).
pub fn suite_ratio_bound(seed: u64, ctx: &mut EvalCtx) -> SuiteReport {
    let mut rep = SuiteReport::new("ratio-bound");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xba0b);
    let id = ModulusFunction::Identity;
    let bd = ModulusFunction::Bounded;

    let rb = crate::modulus::ratio_bound(
        &id,
        &bd,
        &rat_int(1),
        &GeometricGrid::dyadic(1, 60),
        ctx,
    )
    .expect("grid");
    rep.check(rb.uniform, || "identity/bounded ratio not uniform".into());
    rep.check(rb.a_est >= 1.0 - 1e-12 && rb.b_est <= 2.0, || {
        format!("ratio bounds [{}, {}] escaped [1, 2]", rb.a_est, rb.b_est)
    });

    let grid = Grid::default();
    let policy = Policy::default();
    for _ in 0..60 {
        let a = random_interval_set(&mut rng);
        for x in sample_points(&mut rng, &a, &a, 5) {
            let v1 = classify_exact(&id, &a, &x, ctx);
            let v2 = classify_exact(&bd, &a, &x, ctx);
            rep.check(v1 == v2, || format!("verdicts diverge at x={x} on {a}"));
        }
        let repset = RepresentableSet::from_set(a.clone()).with_added(random_rational(&mut rng));
        let o1 = is_gamma_open(&id, &repset, &grid, &policy, ctx).expect("finite").is_open();
        let o2 = is_gamma_open(&bd, &repset, &grid, &policy, ctx).expect("finite").is_open();
        rep.check(o1 == o2, || "openness diverges between the pair".into());
    }
    rep
}

/// Countable sets are closed and discrete; an infinite one cannot be
/// compact (singleton-cover witness).
pub fn suite_countable_closed(ctx: &mut EvalCtx) -> SuiteReport {
    let mut rep = SuiteReport::new("countable-closed");
    let mut points: Vec<Rational> = (1..=10_000i64).map(|n| rat(1, n)).collect();
    points.push(rat_int(0));
    let c = RepresentableSet::points(points, Some("1/n".into()));
    let probes = vec![rat(-1, 2), rat(2, 3), rat_int(7), rat(5, 7)];
    for gamma in crate::modulus::catalog() {
        let report = countable_closed_check(&gamma, &c, &probes, &Grid::default())
            .expect("null family");
        rep.check(report.complement_open, || {
            format!("complement not open under {}", gamma.name())
        });
        rep.check(
            report.samples.iter().all(|(_, zero)| *zero),
            || format!("nonzero trace for a null family under {}", gamma.name()),
        );
    }
    let w = singleton_cover_witness(&c).expect("null family");
    rep.check(w.declared_infinite && !w.finite_subcover_exists, || {
        "singleton cover of an infinite countable set had a finite subcover".into()
    });
    let _ = ctx;
    rep
}

/// The unbounded-bump counterexample: exact peaks and sup, the quadratic
/// witness bound, and approximate continuity at 0.
pub fn suite_bump(ctx: &mut EvalCtx) -> SuiteReport {
    let mut rep = SuiteReport::new("bump");
    let n_max = 50u32;
    let f = build_bump_function(n_max);

    for n in 1..=n_max {
        let peak = crate::approx::bump_peak(n);
        rep.check(f.func.eval(&peak) == rat_int(n as i64), || {
            format!("peak value wrong at n={n}")
        });
    }
    let sup = crate::approx::sup_distance(
        &f.func,
        &RealFunction::zero(),
        &rat_int(0),
        &rat_int(1),
    );
    rep.check(sup == rat_int(n_max as i64), || {
        format!("sup of truncation is {sup}, expected {n_max}")
    });

    // witness complement measure: m(h) <= (4/3) h^2, exact on the grid
    let witness = ScaleFamily::bump_support();
    for k in 2..=60 {
        let h = crate::rational::pow2(-k);
        let m = witness
            .complement_trace_measure(&h, Side::Both)
            .expect("h within validity");
        let bound = rat(4, 3) * &h * &h;
        rep.check(m <= bound, || format!("witness bound broken at h=2^-{k}"));
    }

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
            ctx,
        )
        .expect("witness registered");
        rep.check(v.passes(), || {
            format!("bump function failed at 0 under {}", gamma.name())
        });
    }
    rep
}

fn random_polynomial(rng: &mut ChaCha8Rng) -> RealFunction {
    let deg = rng.gen_range(0..=2usize);
    let poly: Vec<Rational> = (0..=deg).map(|_| rat(rng.gen_range(-3..=3), 1)).collect();
    RealFunction::Piecewise {
        pieces: vec![Piece {
            lo: None,
            hi: None,
            poly,
        }],
    }
}

/// Vector-space and composition closure of the approximately continuous
/// functions on a random corpus of witnessed polynomials.
pub fn suite_approx_algebra(seed: u64, pairs: usize, ctx: &mut EvalCtx) -> SuiteReport {
    let mut rep = SuiteReport::new("approx-algebra");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xa99a);
    let gamma = ModulusFunction::Identity;
    let grid = Grid::default();
    let policy = Policy::default();

    for _ in 0..pairs {
        let x0 = rat(rng.gen_range(-3..=3), rng.gen_range(1..=4));
        let r = rat(1, rng.gen_range(1..=4));
        let witness_f = RepresentableSet::from_set(
            IntervalSet::interval(&x0 - &r, &x0 + &r).expect("r > 0"),
        );
        let witness_g = RepresentableSet::from_set(IntervalSet::full_line());

        let f = WitnessedFunction::new(random_polynomial(&mut rng))
            .with_witness(x0.clone(), witness_f);
        let g = WitnessedFunction::new(random_polynomial(&mut rng))
            .with_witness(x0.clone(), witness_g);

        let scalar = rat(rng.gen_range(-3..=3), 1);
        let report =
            sum_is_approx_continuous(&f, &g, &x0, &scalar, &gamma, &grid, &policy, ctx)
                .expect("witnesses present and combinable");
        rep.check(report.f_passes, || format!("left summand failed at {x0}"));
        rep.check(report.g_passes, || format!("right summand failed at {x0}"));
        rep.check(report.sum_passes, || format!("sum failed at {x0}"));
        rep.check(report.scaled_passes, || {
            format!("scalar multiple by {scalar} failed at {x0}")
        });

        for phi in [
            RealFunction::square(),
            RealFunction::affine(rat_int(3), rat_int(-1)),
            RealFunction::abs(),
        ] {
            let v = compose_continuous(&f, &phi, &x0, &gamma, &grid, &policy, ctx)
                .expect("continuous outer map");
            rep.check(v.passes(), || format!("composition failed at {x0}"));
        }
    }
    rep
}

/// Runs every suite with sub-seeds derived from the master seed.
pub fn run_all(seed: u64, ctx: &mut EvalCtx) -> SuiteSummary {
    let reports = vec![
        suite_modulus_axioms(ctx),
        suite_condition_a(ctx),
        suite_gap_reproduction(ctx),
        suite_lattice_laws(seed, 500, ctx),
        suite_equivalences(seed, ctx),
        suite_coincidence(seed, ctx),
        suite_ratio_bound(seed, ctx),
        suite_countable_closed(ctx),
        suite_bump(ctx),
        suite_approx_algebra(seed, 100, ctx),
    ];
    SuiteSummary { seed, reports }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_generation_is_deterministic() {
        let mut r1 = ChaCha8Rng::seed_from_u64(7);
        let mut r2 = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            assert_eq!(random_interval_set(&mut r1), random_interval_set(&mut r2));
        }
    }

    #[test]
    fn corpus_sets_are_small_and_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let s = random_interval_set(&mut rng);
            assert!(!s.is_empty());
            assert!(s.components().len() <= 6);
            assert!(s.is_bounded());
        }
    }

    #[test]
    fn quick_suites_pass() {
        let mut ctx = EvalCtx::new(60);
        for rep in [
            suite_modulus_axioms(&mut ctx),
            suite_gap_reproduction(&mut ctx),
            suite_lattice_laws(42, 30, &mut ctx),
            suite_countable_closed(&mut ctx),
            suite_bump(&mut ctx),
            suite_approx_algebra(42, 10, &mut ctx),
        ] {
            assert!(rep.passed(), "{}: {:?}", rep.name, rep.details);
            assert!(rep.cases > 0);
        }
    }

    #[test]
    fn summary_json_shape() {
        let rep = SuiteReport::new("demo");
        let s = SuiteSummary {
            seed: 42,
            reports: vec![rep],
        };
        let v = s.to_json();
        assert_eq!(v["seed"], 42);
        assert_eq!(v["all_passed"], true);
    }
}
