//! Seasonal link statistics in a Poisson network of moving base stations.
//!
//! A user sits at the origin while stations move on straight lines at a
//! common speed. Every station traces a *radial bird*: its distance to the
//! user over time. Special instants (handovers, closest approaches of the
//! serving station or of the nearest interferer, swaps of the two nearest
//! interferers) form stationary point processes on the time axis. This
//! crate
//!
//! * simulates the birds and detects those epochs ([`dynamics`]),
//! * samples epoch configurations directly from their Palm laws ([`palm`]),
//! * evaluates coverage probabilities and Shannon rates analytically
//!   ([`analytic`]),
//! * cross-checks all three against each other ([`validation`]),
//! * and runs batch experiments from a JSON config ([`cli`]).
//!
//! Runnable walkthroughs live in `examples/`.

pub mod analytic;
pub mod cli;
pub mod dynamics;
pub mod error;
pub mod geometry;
pub mod model;
pub mod numerics;
pub mod palm;
pub mod validation;

pub use error::{Error, Result};
pub use model::{Attenuation, Epoch, EpochKind, Metric, MetricQuery, SystemParams};
