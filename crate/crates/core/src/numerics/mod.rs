//! Quadrature, special functions, seeding and goodness-of-fit helpers.

pub mod ks;
pub mod quad;
pub mod rng;
pub mod special;

pub use quad::{integrate, integrate_lenient, Quad, QuadSpec};
pub use rng::{derive_seed, rng_for, SimRng};
