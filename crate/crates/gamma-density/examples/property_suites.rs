//! Run the seeded property suites that back the library's claims: the
//! lower-density-operator laws, one-sided/two-sided and grid/sequence
//! equivalences, coincidence of certified moduli with the classical
//! baseline, and closure of the approximate-continuity algebra.
//!
//!     cargo run --example property_suites            # trimmed sizes
//!     cargo run --release --example property_suites  # faster

use gamma_density::hp::EvalCtx;
use gamma_density::suites;

fn main() {
    let seed = 42;
    let mut ctx = EvalCtx::from_env();
    // trimmed case counts so the example finishes quickly; the CLI's
    // `verify --suite all` runs the full sizes
    let reports = vec![
        suites::suite_modulus_axioms(&mut ctx),
        suites::suite_gap_reproduction(&mut ctx),
        suites::suite_lattice_laws(seed, 50, &mut ctx),
        suites::suite_countable_closed(&mut ctx),
        suites::suite_bump(&mut ctx),
        suites::suite_approx_algebra(seed, 20, &mut ctx),
    ];
    let summary = suites::SuiteSummary { seed, reports };
    for rep in &summary.reports {
        println!(
            "{:<18} {:>6} cases, {} failures {}",
            rep.name,
            rep.cases,
            rep.failures,
            if rep.passed() { "✓" } else { "✗" }
        );
        for d in &rep.details {
            println!("    {d}");
        }
    }
    println!("\nall passed: {}", summary.all_passed());
    std::process::exit(if summary.all_passed() { 0 } else { 1 });
}
