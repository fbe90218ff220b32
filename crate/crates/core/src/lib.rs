//! Regularity dimensions of measures on metric spaces.
//!
//! This crate computes doubling constants `C(theta)`, uniform-perfectness
//! constants `K(theta)`, and upper/lower regularity dimensions of measures on
//! the line and on sampled process graphs. Measures are exposed behind a
//! single ball-mass query contract ([`measure::MeasureOracle`]); every
//! estimator is an extremal scan over a deterministic scale/location grid, so
//! results are reproducible bit-for-bit for a fixed grid and seed.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and parallel
//! orchestration live in the companion CLI crate. Scans expose partial
//! evaluation over center ranges so callers can partition work across threads
//! and merge with an order-independent reduction.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod error;
pub mod estimators;
pub mod events;
pub mod fmath;
pub mod geom;
pub mod levy;
pub mod measure;
pub mod qs;
pub mod stats;

pub use error::{CoreError, Result};
pub use geom::Point;
