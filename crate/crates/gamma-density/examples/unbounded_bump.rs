//! An unbounded function that is approximately continuous at 0: triangular
//! bumps of height n sit on a support so thin (quadratically vanishing
//! complement trace) that 0 remains a density point of the witness set.
//!
//!     cargo run --example unbounded_bump

use gamma_density::approx::{build_bump_function, bump_peak, check_point, sup_distance, RealFunction};
use gamma_density::density::{Grid, Policy};
use gamma_density::hp::EvalCtx;
use gamma_density::modulus::ModulusFunction;
use gamma_density::rational::{rat, rat_int};

fn main() {
    let mut ctx = EvalCtx::from_env();
    let n_max = 50;
    let f = build_bump_function(n_max);

    for n in [1u32, 3, 10, 50] {
        let c = bump_peak(n);
        println!("bump {n:>2}: peak at {} with exact value {}", c, f.func.eval(&c));
    }

    let sup = sup_distance(&f.func, &RealFunction::zero(), &rat_int(0), &rat_int(1));
    println!("\nsup |f| on (0,1) with {n_max} bumps: {sup} (exact; grows without bound)");

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
            &mut ctx,
        )
        .unwrap();
        println!(
            "approximately continuous at 0 under {:<10}: {} (f(0) = {})",
            gamma.name(),
            v.passes(),
            f.func.eval(&rat_int(0))
        );
    }
}
