//! Deterministic latency simulator for LEO satellite constellations.
//!
//! The crate generates Walker-style shells or loads TLE catalogs, builds
//! per-snapshot topologies of inter-satellite and ground links, routes
//! shortest-delay paths and records ping round-trip times between ground
//! stations.
//!
//! ```no_run
//! let scenario = leosim::presets::preset("exp1-isl")?;
//! let trace = leosim::simulation::run(&scenario)?;
//! println!("mean RTT {:.1} ms", trace.summary.mean_ms.unwrap());
//! # Ok::<(), leosim::Error>(())
//! ```

pub mod catalog;
pub mod commands;
pub mod constellation;
mod error;
pub mod geodesy;
pub mod orbits;
pub mod presets;
pub mod routing;
pub mod scenario;
pub mod simulation;
pub mod topology;

pub use error::{Error, Result, TleLine};
pub use scenario::{load_scenario, parse_scenario, ConstellationSource, Scenario};
pub use simulation::{RttSample, RttTrace, Summary};
