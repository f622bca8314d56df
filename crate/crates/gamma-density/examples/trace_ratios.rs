//! Trace the density ratio of the dyadic-gap construction at its anchor
//! under two moduli: the classical identity (ratio vanishes quadratically)
//! and the slow logarithmic modulus (ratio settles at 1/2, so the anchor
//! is *not* a density point there).
//!
//!     cargo run --example trace_ratios

use gamma_density::density::{ratio_trace, Grid, MeasureOf};
use gamma_density::hp::EvalCtx;
use gamma_density::interval::Side;
use gamma_density::modulus::ModulusFunction;
use gamma_density::plot::ascii_plot;
use gamma_density::rational::rat_int;
use gamma_density::scale::ScaleFamily;

fn main() {
    let mut ctx = EvalCtx::from_env();
    let fam = ScaleFamily::dyadic_gap();
    let anchor = rat_int(0);
    let grid = Grid::dyadic(10, 60);

    for gamma in [ModulusFunction::Identity, ModulusFunction::LogModulus] {
        let trace = ratio_trace(
            &gamma,
            &fam,
            &anchor,
            Side::Both,
            &grid,
            MeasureOf::Complement,
            &mut ctx,
        )
        .expect("anchor lies inside the family's validity radius");
        println!("== modulus: {} ==", gamma.name());
        println!("{}", ascii_plot(&trace, 64, 12));
        let ratios = trace.ratios();
        println!(
            "first ratio {:.6}, final ratio {:.6}\n",
            ratios.first().unwrap(),
            ratios.last().unwrap()
        );
    }
    println!("CSV schema: k,alpha_num,alpha_den,measure_num,measure_den,ratio");
}
