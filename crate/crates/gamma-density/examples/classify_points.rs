//! Classify points of a finite interval union exactly: interior points
//! are density points, points outside the closure are dispersion points,
//! component endpoints are neither, and a deleted interior point is still
//! a density point (single points are null).
//!
//!     cargo run --example classify_points

use gamma_density::density::{classify_point, one_sided_equivalence_check, Grid, Policy};
use gamma_density::hp::EvalCtx;
use gamma_density::interval::IntervalSet;
use gamma_density::modulus::ModulusFunction;
use gamma_density::rational::{rat, rat_int};

fn main() {
    let mut ctx = EvalCtx::from_env();
    let gamma = ModulusFunction::Identity;
    let grid = Grid::default();
    let policy = Policy::default();

    // (0,1) ∪ (1,2): the deleted point 1 is null, so 1 is still a
    // density point of the union
    let a = IntervalSet::normalize(vec![
        (rat_int(0), rat_int(1)),
        (rat_int(1), rat_int(2)),
    ])
    .unwrap();

    for x in [rat(1, 2), rat_int(1), rat_int(0), rat_int(5), rat(-1, 3)] {
        let v = classify_point(&gamma, &a, &x, &grid, &policy, &mut ctx).unwrap();
        println!(
            "x = {:>4}: {:<22} (exact verdict: {})",
            x.to_string(),
            v.class.as_str(),
            v.exact
        );
    }

    // one-sided structure at a component endpoint
    let report = one_sided_equivalence_check(&gamma, &a, &rat_int(2), &grid, &policy, &mut ctx)
        .unwrap();
    println!(
        "\nat x = 2: left {}, right {}, both {} (two-sided density ⇔ both sides dense: {})",
        report.left.as_str(),
        report.right.as_str(),
        report.both.as_str(),
        report.equivalence_holds
    );
}
