//! Certify or refute the uniform-contraction ratio condition
//! gamma(c t)/gamma(t) < epsilon for each catalog modulus.
//! Power and identity moduli get certificates; the logarithmic modulus is
//! refuted: its deep-tail ratios stay near 1 for every contraction factor.
//!
//!     cargo run --example certify_contraction

use gamma_density::hp::EvalCtx;
use gamma_density::modulus::{
    catalog, check_condition_a, default_c_grid, default_t_grid, ConditionAOutcome,
};
use gamma_density::rational::rat_to_f64;

fn main() {
    let mut ctx = EvalCtx::from_env();
    let c_grid = default_c_grid();
    let t_grid = default_t_grid();

    for gamma in catalog() {
        for eps in [0.5, 0.1] {
            let outcome = check_condition_a(&gamma, eps, &c_grid, &t_grid, &mut ctx)
                .expect("grids are valid");
            match outcome {
                ConditionAOutcome::Certificate(c) => println!(
                    "{:<12} eps={eps}: certificate  c={} (≈{:.3e}), delta={}, max ratio {:.4}",
                    gamma.name(),
                    c.c_epsilon,
                    rat_to_f64(&c.c_epsilon),
                    c.delta_epsilon,
                    c.max_observed_ratio
                ),
                ConditionAOutcome::Refutation(r) => println!(
                    "{:<12} eps={eps}: REFUTED      deep-tail ratio floor {:.4} over {} factors",
                    gamma.name(),
                    r.floor,
                    r.per_c.len()
                ),
            }
        }
    }
}
