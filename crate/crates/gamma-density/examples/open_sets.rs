//! Openness in the modulus-density topology. The dyadic-gap hull with its
//! anchor adjoined is open classically but NOT open under the slow
//! logarithmic modulus — the anchor itself is the witness. The topology
//! also makes every countable set closed and discrete.
//!
//!     cargo run --example open_sets

use gamma_density::density::{Grid, Policy};
use gamma_density::hp::EvalCtx;
use gamma_density::modulus::{catalog, ModulusFunction};
use gamma_density::rational::{rat, rat_int};
use gamma_density::scale::ScaleFamily;
use gamma_density::topology::{
    countable_closed_check, is_gamma_open, singleton_cover_witness, RepresentableSet,
};

fn main() {
    let mut ctx = EvalCtx::from_env();
    let grid = Grid::default();
    let policy = Policy::default();

    let hull = RepresentableSet::from_family(ScaleFamily::dyadic_gap()).with_added(rat_int(0));
    for gamma in [ModulusFunction::Identity, ModulusFunction::LogModulus] {
        let verdict = is_gamma_open(&gamma, &hull, &grid, &policy, &mut ctx).unwrap();
        println!("gap hull + anchor under {:<10}: {:?}", gamma.name(), verdict);
    }

    // a countable set is closed for every catalog modulus
    let mut points: Vec<_> = (1..=1000i64).map(|n| rat(1, n)).collect();
    points.push(rat_int(0));
    let c = RepresentableSet::points(points, Some("1/n".into()));
    let probes = vec![rat(-1, 2), rat(2, 3), rat_int(7)];
    for gamma in catalog() {
        let rep = countable_closed_check(&gamma, &c, &probes, &grid).unwrap();
        println!(
            "complement of {{1/n}} open under {:<10}: {}",
            gamma.name(),
            rep.complement_open
        );
    }

    // ... and an infinite countable set can never be compact: its
    // singleton cover has no finite subcover
    let w = singleton_cover_witness(&c).unwrap();
    println!("\nsingleton cover: {}", w.conclusion);
}
