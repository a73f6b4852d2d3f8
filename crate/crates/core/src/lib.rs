//! Deterministic simulation of wind-fleet power variability.
//!
//! The crate models the chain from wind to grid: parametric wind-speed
//! spectra and spatial coherence ([`spectra`]), seeded synthesis of
//! correlated wind fields ([`windgen`]), power-curve conversion with
//! cut-out hysteresis ([`turbine`]), plant/region aggregation ([`fleet`]),
//! ramp-event classification plus voltage-sag and storm-front injection
//! ([`events`]), and TSO curtailment dispatch ([`dispatch`]). The
//! [`scenario`] and [`engine`] modules bind everything into a reproducible
//! pipeline driven by a TOML scenario file.
//!
//! Everything is deterministic: the same scenario and seed produce
//! byte-identical outputs, regardless of internal parallelism.

pub mod dispatch;
pub mod engine;
pub mod error;
pub mod events;
pub mod fleet;
pub mod plot;
pub mod report;
pub mod scenario;
pub mod spectra;
pub mod timeseries;
pub mod turbine;
pub mod windgen;

pub use error::Error;
pub use timeseries::TimeSeries;
