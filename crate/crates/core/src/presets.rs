//! Built-in experiment scenarios.
//!
//! | preset | shell | links | endpoints |
//! |---|---|---|---|
//! | `exp1-isl` | 24 x 66, 53 deg, 550 km | ISL grid, update 5 s, 120 min | London - New York |
//! | `exp1-relay-{6,12,24}planes` | 6/12/24 evenly spread planes x 66 | 14 ground relays | London - New York |
//! | `exp2-N{25,30,35}` | N x N, 90 deg, 550 km | ISL grid | Washington DC - Frankfurt |
//! | `fig1-granularity-{1,5,10,15}` | 10 x 66, 53 deg, 550 km | ISL grid, update 1/5/10/15 s | Washington DC - Frankfurt |
//! | `fig2-scalability` | 24 x 66 (sweep via [`scalability_sweep`]) | ISL grid, all-pairs, 5 min | Los Angeles - New York |
//! | `tle-relay` | TLE catalog | 10 ground relays | New York - Seattle |
//!
//! Relay positions are evenly spaced along the great circle between the two
//! endpoints; they stand in for relay sites whose coordinates are not public.

use std::path::PathBuf;

use crate::catalog::{self, corridor_relays};
use crate::constellation::ConstellationSpec;
use crate::error::{Error, Result};
use crate::routing::RoutingMode;
use crate::scenario::{ConstellationSource, Scenario};

pub const PRESET_NAMES: [&str; 13] = [
    "exp1-isl",
    "exp1-relay-6planes",
    "exp1-relay-12planes",
    "exp1-relay-24planes",
    "exp2-N25",
    "exp2-N30",
    "exp2-N35",
    "fig1-granularity-1",
    "fig1-granularity-5",
    "fig1-granularity-10",
    "fig1-granularity-15",
    "fig2-scalability",
    "tle-relay",
];

/// Shell altitude of the 2019+ first-phase filings.
pub const SHELL_ALTITUDE_KM: f64 = 550.0;
pub const SHELL_INCLINATION_DEG: f64 = 53.0;
pub const EXP1_RELAYS: usize = 14;
pub const TLE_RELAYS: usize = 10;
/// Default catalog path of the `tle-relay` preset, relative to the working
/// directory; override with [`tle_relay`].
pub const DEFAULT_TLE_FILE: &str = "starlink.tle";

const EXP1_DURATION_S: f64 = 7200.0;
const EXP2_DURATION_S: f64 = 7200.0;
const FIG1_DURATION_S: f64 = 1800.0;
const FIG2_DURATION_S: f64 = 300.0;
const TLE_DURATION_S: f64 = 3600.0;

/// Plane counts of the scalability sweep (66 satellites each).
pub const SCALABILITY_PLANES: [usize; 4] = [4, 10, 16, 24];

fn shell(planes: usize, sats: usize, inclination: f64, isl: bool) -> ConstellationSpec {
    ConstellationSpec::shell(planes, sats, inclination, SHELL_ALTITUDE_KM).with_isl(isl)
}

fn generated(
    name: &str,
    spec: ConstellationSpec,
    src: &str,
    dst: &str,
    duration_s: f64,
    update_interval_s: f64,
) -> Result<Scenario> {
    let mut s = Scenario::new(name, ConstellationSource::Generated(spec), src, dst, duration_s)?;
    s.update_interval_s = update_interval_s;
    Ok(s)
}

fn with_relays(mut s: Scenario, count: usize) -> Result<Scenario> {
    let a = catalog::lookup(&s.source)?.coord;
    let b = catalog::lookup(&s.destination)?.coord;
    s.stations.extend(corridor_relays(&a, &b, count, "relay"));
    s.validate()?;
    Ok(s)
}

/// Experiment 1 with a partially deployed shell and ground relays.
pub fn exp1_relay(planes: usize) -> Result<Scenario> {
    let s = generated(
        &format!("exp1-relay-{planes}planes"),
        shell(planes, 66, SHELL_INCLINATION_DEG, false),
        "London",
        "New York",
        EXP1_DURATION_S,
        5.0,
    )?;
    with_relays(s, EXP1_RELAYS)
}

/// Polar N x N constellation between Washington DC and Frankfurt.
pub fn exp2(n: usize) -> Result<Scenario> {
    generated(
        &format!("exp2-N{n}"),
        shell(n, n, 90.0, true),
        "Washington DC",
        "Frankfurt",
        EXP2_DURATION_S,
        5.0,
    )
}

/// 660-satellite ISL shell at the given routing update interval.
pub fn fig1_granularity(update_interval_s: u32) -> Result<Scenario> {
    generated(
        &format!("fig1-granularity-{update_interval_s}"),
        shell(10, 66, SHELL_INCLINATION_DEG, true),
        "Washington DC",
        "Frankfurt",
        FIG1_DURATION_S,
        update_interval_s as f64,
    )
}

/// Scalability scenario with `planes` x 66 satellites.
pub fn scalability(planes: usize) -> Result<Scenario> {
    let mut s = generated(
        &format!("fig2-scalability-{}", planes * 66),
        shell(planes, 66, SHELL_INCLINATION_DEG, true),
        "Los Angeles",
        "New York",
        FIG2_DURATION_S,
        1.0,
    )?;
    s.routing = RoutingMode::AllPairs;
    Ok(s)
}

/// The four scalability scenarios: 264, 660, 1056 and 1584 satellites.
pub fn scalability_sweep() -> Result<Vec<Scenario>> {
    SCALABILITY_PLANES.iter().map(|&p| scalability(p)).collect()
}

/// TLE-driven run between New York and Seattle with ten ground relays.
pub fn tle_relay(tle_file: impl Into<PathBuf>) -> Result<Scenario> {
    let s = Scenario::new(
        "tle-relay",
        ConstellationSource::Tle {
            path: tle_file.into(),
            sim_epoch: None,
        },
        "New York",
        "Seattle",
        TLE_DURATION_S,
    )?;
    with_relays(s, TLE_RELAYS)
}

/// Looks up a preset by name.
pub fn preset(name: &str) -> Result<Scenario> {
    let mut s = match name {
        "exp1-isl" => generated(
            name,
            shell(24, 66, SHELL_INCLINATION_DEG, true),
            "London",
            "New York",
            EXP1_DURATION_S,
            5.0,
        )?,
        "exp1-relay-6planes" => exp1_relay(6)?,
        "exp1-relay-12planes" => exp1_relay(12)?,
        "exp1-relay-24planes" => exp1_relay(24)?,
        "exp2-N25" => exp2(25)?,
        "exp2-N30" => exp2(30)?,
        "exp2-N35" => exp2(35)?,
        "fig1-granularity-1" => fig1_granularity(1)?,
        "fig1-granularity-5" => fig1_granularity(5)?,
        "fig1-granularity-10" => fig1_granularity(10)?,
        "fig1-granularity-15" => fig1_granularity(15)?,
        "fig2-scalability" => scalability(24)?,
        "tle-relay" => tle_relay(DEFAULT_TLE_FILE)?,
        other => return Err(Error::UnknownPreset(other.to_string())),
    };
    s.name = name.to_string();
    Ok(s)
}
