//! Exact Lebesgue measures on interval unions, modulus (gamma) density
//! points, the gamma-density topology, and gamma-approximately continuous
//! functions, with property suites verifying the underlying theory at desk
//! scale.

pub mod approx;
pub mod cli;
pub mod density;
pub mod hp;
pub mod interval;
pub mod modulus;
pub mod plot;
pub mod rational;
pub mod scale;
pub mod suites;
pub mod topology;
