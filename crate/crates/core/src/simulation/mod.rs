//! Time-stepped latency simulation.
//!
//! Time advances in whole milliseconds. At every multiple of the update
//! interval all satellites are propagated, the snapshot is rebuilt and routes
//! recomputed; pings sent in `[k * update, (k + 1) * update)` then use that
//! snapshot. A ping's RTT is twice the one-way delay of the route at send
//! time, and reconfiguration at `t` happens before pings at `t`.

mod trace;

use std::path::Path;

use chrono::{DateTime, Utc};

use crate::constellation::{generate_fleet, ConstellationSpec};
use crate::error::{Error, Result};
use crate::geodesy::{great_circle_distance, CartesianPosition, GeodeticCoord, SPEED_OF_LIGHT_KM_S};
use crate::orbits::{parse_tle_file, tle_to_elements, Fleet, OrbitModel};
use crate::routing::RoutingState;
use crate::scenario::{ConstellationSource, Scenario};
use crate::topology::NodeId;

pub use trace::{read_trace_csv, write_summary_csv, write_trace_csv, TRACE_HEADER, SUMMARY_HEADER};

/// One ping.
#[derive(Debug, Clone, PartialEq)]
pub struct RttSample {
    /// Send time in seconds.
    pub t_s: f64,
    /// `None` when the destination was unreachable.
    pub rtt_ms: Option<f64>,
    pub hop_count: usize,
    pub path: Option<Vec<NodeId>>,
}

/// Statistics over reachable samples; the value fields are `None` when
/// every sample was an outage.
#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub mean_ms: Option<f64>,
    pub min_ms: Option<f64>,
    pub max_ms: Option<f64>,
    /// Sample standard deviation (n - 1 denominator); zero for one sample.
    pub stddev_ms: Option<f64>,
    pub outages: usize,
    pub samples: usize,
}

impl Summary {
    pub fn from_samples(samples: &[RttSample]) -> Self {
        let values: Vec<f64> = samples.iter().filter_map(|s| s.rtt_ms).collect();
        let outages = samples.len() - values.len();
        if values.is_empty() {
            return Summary {
                mean_ms: None,
                min_ms: None,
                max_ms: None,
                stddev_ms: None,
                outages,
                samples: samples.len(),
            };
        }
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let var = if values.len() > 1 {
            values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)
        } else {
            0.0
        };
        Summary {
            mean_ms: Some(mean),
            min_ms: values.iter().copied().reduce(f64::min),
            max_ms: values.iter().copied().reduce(f64::max),
            stddev_ms: Some(var.sqrt()),
            outages,
            samples: samples.len(),
        }
    }
}

/// Output of one simulation run.
#[derive(Debug, Clone, PartialEq)]
pub struct RttTrace {
    pub scenario_name: String,
    pub scenario_digest: String,
    pub samples: Vec<RttSample>,
    pub summary: Summary,
}

impl RttTrace {
    pub fn outage_count(&self) -> usize {
        self.summary.outages
    }

    pub fn reachable(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().filter_map(|s| s.rtt_ms)
    }
}

/// RTT of an ideal fiber laid along the great circle.
pub fn great_circle_fiber_rtt_ms(a: &GeodeticCoord, b: &GeodeticCoord, refractive_index: f64) -> f64 {
    2.0 * great_circle_distance(a, b) * refractive_index / SPEED_OF_LIGHT_KM_S * 1000.0
}

/// Vacuum light RTT along the great circle: no satellite path can beat it.
pub fn light_rtt_lower_bound_ms(a: &GeodeticCoord, b: &GeodeticCoord) -> f64 {
    great_circle_fiber_rtt_ms(a, b, 1.0)
}

/// Loads a TLE catalog. Without `sim_epoch` the newest element epoch in the
/// file becomes simulation time zero.
pub fn load_tle_fleet(path: &Path, sim_epoch: Option<DateTime<Utc>>) -> Result<Fleet> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Error::Scenario(format!("cannot read TLE file {}: {e}", path.display()))
    })?;
    let records = parse_tle_file(&text)?;
    if records.is_empty() {
        return Err(Error::Scenario(format!("{} holds no element sets", path.display())));
    }
    let epoch = match sim_epoch {
        Some(e) => e,
        None => records.iter().map(|r| r.epoch()).max().expect("non-empty"),
    };
    let elements = records
        .iter()
        .map(|r| tle_to_elements(r, epoch))
        .collect::<Result<Vec<_>>>()?;
    Fleet::new(elements)
}

/// A scenario resolved into propagatable satellites and fixed stations.
pub struct Simulator {
    scenario: Scenario,
    fleet: Fleet,
    isl: Option<ConstellationSpec>,
    grounds: Vec<CartesianPosition>,
    source: NodeId,
    destination: NodeId,
}

impl Simulator {
    pub fn new(scenario: &Scenario) -> Result<Self> {
        scenario.validate()?;
        let (fleet, isl) = match &scenario.constellation {
            ConstellationSource::Generated(spec) => {
                (generate_fleet(spec)?, spec.isl_enabled.then(|| spec.clone()))
            }
            ConstellationSource::Tle { path, sim_epoch } => (load_tle_fleet(path, *sim_epoch)?, None),
        };
        Self::with_fleet(scenario, fleet, isl)
    }

    /// Uses an explicit fleet instead of the scenario's constellation source.
    pub fn with_fleet(scenario: &Scenario, fleet: Fleet, isl: Option<ConstellationSpec>) -> Result<Self> {
        scenario.validate()?;
        let grounds = scenario.stations.iter().map(|s| s.coord.to_cartesian()).collect();
        let (src, _) = scenario.station(&scenario.source)?;
        let (dst, _) = scenario.station(&scenario.destination)?;
        Ok(Simulator {
            scenario: scenario.clone(),
            fleet,
            isl,
            grounds,
            source: NodeId::ground(src),
            destination: NodeId::ground(dst),
        })
    }

    pub fn fleet(&self) -> &Fleet {
        &self.fleet
    }

    pub fn run(&self) -> Result<RttTrace> {
        let sc = &self.scenario;
        let update_ms = sc.update_interval_ms();
        let ping_ms = sc.ping_interval_ms;
        let duration_ms = (sc.duration_s * 1000.0).round() as u64;

        let mut state = RoutingState::new(sc.update_interval_s, sc.routing)?;
        let mut sats = Vec::with_capacity(self.fleet.satellite_count());
        let mut samples = Vec::with_capacity((duration_ms / ping_ms + 1) as usize);
        let mut next_ping = 0u64;

        let mut k = 0u64;
        while k * update_ms < duration_ms {
            let t_ms = k * update_ms;
            let t_s = t_ms as f64 / 1000.0;
            self.fleet.positions_ecef(t_s, &mut sats)?;
            state.reconfigure(t_s, &sats, &self.grounds, self.isl.as_ref(), &sc.link_params)?;
            let route = state.route(self.source, self.destination)?;

            let epoch_end = (t_ms + update_ms).min(duration_ms);
            while next_ping < epoch_end {
                samples.push(RttSample {
                    t_s: next_ping as f64 / 1000.0,
                    rtt_ms: route.as_ref().map(|r| 2.0 * r.one_way_delay_ms),
                    hop_count: route.as_ref().map_or(0, |r| r.hop_count()),
                    path: if sc.record_paths {
                        route.as_ref().map(|r| r.hops.clone())
                    } else {
                        None
                    },
                });
                next_ping += ping_ms;
            }
            k += 1;
        }

        let summary = Summary::from_samples(&samples);
        Ok(RttTrace {
            scenario_name: sc.name.clone(),
            scenario_digest: sc.digest(),
            samples,
            summary,
        })
    }
}

/// Runs a scenario end to end.
pub fn run(scenario: &Scenario) -> Result<RttTrace> {
    Simulator::new(scenario)?.run()
}
