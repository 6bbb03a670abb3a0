//! Named q-series: Lambert series, theta functions, `f`, `g` and their
//! alternative representations.

pub mod f;
pub mod lambert;
pub mod reps;
pub mod theta;
pub mod classical;
