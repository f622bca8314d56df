//! Derive a modulus from a comparison weight psi (as in the weighted
//! density notion with denominator 2a·psi(2a)) and confirm the
//! implication: where the psi-weighted ratio vanishes, the derived
//! modulus also sees a density point.
//!
//!     cargo run --example derived_modulus

use gamma_density::density::{psi_density_check, psi_is_linearly_bounded, Grid, Policy};
use gamma_density::hp::EvalCtx;
use gamma_density::interval::IntervalSet;
use gamma_density::modulus::{ModulusFunction, PsiDescriptor};
use gamma_density::rational::{rat, rat_int};

fn main() {
    let mut ctx = EvalCtx::from_env();
    let psi = PsiDescriptor::linear(rat_int(1));
    println!("psi linearly bounded: {}", psi_is_linearly_bounded(&psi));

    let gamma = ModulusFunction::from_psi(psi.clone(), &mut ctx)
        .expect("linear psi passes the sampled subadditivity screen");
    println!("derived modulus: {}", gamma.name());

    let a = IntervalSet::interval(rat_int(0), rat_int(1)).unwrap();
    for x in [rat(1, 2), rat_int(0), rat_int(3)] {
        let rep = psi_density_check(
            &psi,
            &gamma,
            &a,
            &x,
            &Grid::default(),
            &Policy::default(),
            &mut ctx,
        )
        .unwrap();
        println!(
            "x = {:>3}: psi-ratio vanishes: {:<5} gamma verdict: {:<22} implication holds: {}",
            x.to_string(),
            rep.psi_ratio_vanishes,
            rep.gamma_class.as_str(),
            rep.implication_holds
        );
    }
}
