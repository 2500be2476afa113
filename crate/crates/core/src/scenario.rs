//! Scenario definition and its TOML file format.
//!
//! ```toml
//! name = "london-new-york"
//!
//! [constellation]          # either a generated shell ...
//! planes = 24
//! sats_per_plane = 66
//! inclination_deg = 53.0
//! altitude_km = 550.0
//! isl_enabled = true
//! # tle_file = "starlink.tle"   # ... or a TLE catalog (not both)
//! # sim_epoch = "2021-06-01T00:00:00Z"
//!
//! [links]
//! min_elevation_deg = 25.0
//!
//! [traffic]
//! source = "London"
//! destination = "New York"
//! duration_s = 7200.0
//! update_interval_s = 5.0
//! ping_interval_ms = 500
//!
//! [[stations]]             # catalog city by name, or explicit coordinates
//! name = "relay-01"
//! lat = 50.1
//! lon = -12.0
//! role = "relay"
//! ```
//!
//! Unknown keys are rejected. Source and destination stations are taken from
//! the built-in catalog when not listed under `[[stations]]`.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::catalog::{self, Station, StationRole};
use crate::constellation::ConstellationSpec;
use crate::error::{Error, Result};
use crate::geodesy::GeodeticCoord;
use crate::routing::RoutingMode;
use crate::topology::LinkParams;

pub const DEFAULT_UPDATE_INTERVAL_S: f64 = 1.0;
pub const DEFAULT_PING_INTERVAL_MS: u64 = 500;
/// Group index of silica fiber, used for the great-circle fiber baseline.
pub const FIBER_REFRACTIVE_INDEX: f64 = 1.468;

/// Where satellite orbits come from.
#[derive(Debug, Clone, PartialEq)]
pub enum ConstellationSource {
    Generated(ConstellationSpec),
    /// TLE catalog; ground relays only, no ISLs. Without `sim_epoch` the
    /// newest element epoch in the file is used.
    Tle {
        path: PathBuf,
        sim_epoch: Option<DateTime<Utc>>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub constellation: ConstellationSource,
    pub stations: Vec<Station>,
    pub link_params: LinkParams,
    pub update_interval_s: f64,
    pub ping_interval_ms: u64,
    pub duration_s: f64,
    pub source: String,
    pub destination: String,
    pub routing: RoutingMode,
    pub fiber_refractive_index: f64,
    /// Keep the hop list of every sample in the trace.
    pub record_paths: bool,
}

impl Scenario {
    /// A scenario with documented defaults between two catalog cities.
    pub fn new(
        name: impl Into<String>,
        constellation: ConstellationSource,
        source: &str,
        destination: &str,
        duration_s: f64,
    ) -> Result<Self> {
        let src = catalog::lookup(source)?;
        let dst = catalog::lookup(destination)?;
        let s = Scenario {
            name: name.into(),
            constellation,
            source: src.name.clone(),
            destination: dst.name.clone(),
            stations: vec![src, dst],
            link_params: LinkParams::default(),
            update_interval_s: DEFAULT_UPDATE_INTERVAL_S,
            ping_interval_ms: DEFAULT_PING_INTERVAL_MS,
            duration_s,
            routing: RoutingMode::OnDemand,
            fiber_refractive_index: FIBER_REFRACTIVE_INDEX,
            record_paths: false,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn station(&self, name: &str) -> Result<(usize, &Station)> {
        self.stations
            .iter()
            .enumerate()
            .find(|(_, s)| s.name == name)
            .ok_or_else(|| Error::UnknownStation(name.to_string()))
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Scenario(m));
        if let ConstellationSource::Generated(spec) = &self.constellation {
            spec.validate()
                .map_err(|e| Error::Scenario(format!("constellation: {e}")))?;
        }
        self.link_params
            .validate()
            .map_err(|e| Error::Scenario(format!("links: {e}")))?;
        if !(self.duration_s > 0.0) || !self.duration_s.is_finite() {
            return bad(format!("traffic.duration_s must be positive, got {}", self.duration_s));
        }
        if !(self.update_interval_s > 0.0) || !self.update_interval_s.is_finite() {
            return bad(format!(
                "traffic.update_interval_s must be positive, got {}",
                self.update_interval_s
            ));
        }
        let upd_ms = self.update_interval_s * 1000.0;
        if (upd_ms - upd_ms.round()).abs() > 1e-6 {
            return bad("traffic.update_interval_s must be a whole number of milliseconds".into());
        }
        if self.ping_interval_ms == 0 {
            return bad("traffic.ping_interval_ms must be positive".into());
        }
        if !(self.fiber_refractive_index >= 1.0) {
            return bad("traffic.fiber_refractive_index must be at least 1".into());
        }
        if self.source == self.destination {
            return bad(format!("source and destination are both {:?}", self.source));
        }
        let mut names = BTreeSet::new();
        for s in &self.stations {
            if !names.insert(s.name.as_str()) {
                return bad(format!("duplicate station name {:?}", s.name));
            }
        }
        self.station(&self.source)?;
        self.station(&self.destination)?;
        Ok(())
    }

    /// Update interval in whole milliseconds.
    pub fn update_interval_ms(&self) -> u64 {
        (self.update_interval_s * 1000.0).round() as u64
    }

    /// Canonical TOML with every default made explicit. Loading it back
    /// yields an identical scenario.
    pub fn to_toml(&self) -> String {
        let (constellation, tle) = match &self.constellation {
            ConstellationSource::Generated(spec) => (Some(spec.clone()), None),
            ConstellationSource::Tle { path, sim_epoch } => (
                None,
                Some(RawTle {
                    tle_file: path.clone(),
                    sim_epoch: *sim_epoch,
                }),
            ),
        };
        let raw = RawScenario {
            name: Some(self.name.clone()),
            constellation: RawConstellation {
                spec: constellation,
                tle,
            },
            links: self.link_params.clone(),
            traffic: RawTraffic {
                source: self.source.clone(),
                destination: self.destination.clone(),
                duration_s: self.duration_s,
                update_interval_s: self.update_interval_s,
                ping_interval_ms: self.ping_interval_ms,
                routing: self.routing,
                fiber_refractive_index: self.fiber_refractive_index,
                record_paths: self.record_paths,
            },
            stations: self
                .stations
                .iter()
                .map(|s| RawStation {
                    name: s.name.clone(),
                    lat: Some(s.coord.latitude_deg()),
                    lon: Some(s.coord.longitude_deg()),
                    role: Some(s.role),
                })
                .collect(),
        };
        toml::to_string(&raw.into_document()).expect("scenario serializes")
    }

    /// Hex SHA-256 of [`Scenario::to_toml`].
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.to_toml().as_bytes()))
    }
}

/// Reads and validates a scenario file. Relative TLE paths resolve against
/// the file's directory.
pub fn load_scenario(path: &Path) -> Result<Scenario> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Error::Scenario(format!("cannot read {}: {e}", path.display()))
    })?;
    let base = path.parent().unwrap_or(Path::new("."));
    parse_scenario(&text, base)
}

/// Parses scenario TOML; `base_dir` anchors relative TLE paths.
pub fn parse_scenario(text: &str, base_dir: &Path) -> Result<Scenario> {
    let doc: RawDocument = toml::from_str(text).map_err(|e| Error::Scenario(e.message().to_string()))?;
    RawScenario::from_document(doc)?.resolve(base_dir)
}

// --- raw file layout -------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    constellation: toml::Table,
    #[serde(default)]
    links: LinkParams,
    traffic: RawTraffic,
    #[serde(default)]
    stations: Vec<RawStation>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTle {
    tle_file: PathBuf,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sim_epoch: Option<DateTime<Utc>>,
}

#[derive(Debug)]
struct RawConstellation {
    spec: Option<ConstellationSpec>,
    tle: Option<RawTle>,
}

fn default_update() -> f64 {
    DEFAULT_UPDATE_INTERVAL_S
}

fn default_ping() -> u64 {
    DEFAULT_PING_INTERVAL_MS
}

fn default_fiber() -> f64 {
    FIBER_REFRACTIVE_INDEX
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTraffic {
    source: String,
    destination: String,
    duration_s: f64,
    #[serde(default = "default_update")]
    update_interval_s: f64,
    #[serde(default = "default_ping")]
    ping_interval_ms: u64,
    #[serde(default)]
    routing: RoutingMode,
    #[serde(default = "default_fiber")]
    fiber_refractive_index: f64,
    #[serde(default)]
    record_paths: bool,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStation {
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lat: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lon: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    role: Option<StationRole>,
}

struct RawScenario {
    name: Option<String>,
    constellation: RawConstellation,
    links: LinkParams,
    traffic: RawTraffic,
    stations: Vec<RawStation>,
}

const TLE_KEYS: [&str; 2] = ["tle_file", "sim_epoch"];
const SPEC_REQUIRED: [&str; 4] = ["planes", "sats_per_plane", "inclination_deg", "altitude_km"];

impl RawScenario {
    fn from_document(doc: RawDocument) -> Result<Self> {
        let table = doc.constellation;
        let has_tle = table.contains_key("tle_file");
        let spec_keys: Vec<&String> = table
            .keys()
            .filter(|k| !TLE_KEYS.contains(&k.as_str()))
            .collect();

        let constellation = if has_tle {
            if let Some(k) = spec_keys.first() {
                return Err(Error::Scenario(format!(
                    "constellation: conflicting sources, tle_file given together with shell key `{k}`"
                )));
            }
            let tle: RawTle = toml::Value::Table(table)
                .try_into()
                .map_err(|e: toml::de::Error| Error::Scenario(format!("constellation: {}", e.message())))?;
            RawConstellation {
                spec: None,
                tle: Some(tle),
            }
        } else {
            if table.contains_key("sim_epoch") {
                return Err(Error::Scenario(
                    "constellation: sim_epoch requires tle_file".into(),
                ));
            }
            if let Some(missing) = SPEC_REQUIRED.iter().find(|k| !table.contains_key(**k)) {
                return Err(Error::Scenario(format!(
                    "constellation: missing required field `{missing}` (or give tle_file)"
                )));
            }
            let spec: ConstellationSpec = toml::Value::Table(table)
                .try_into()
                .map_err(|e: toml::de::Error| Error::Scenario(format!("constellation: {}", e.message())))?;
            RawConstellation {
                spec: Some(spec),
                tle: None,
            }
        };
        Ok(RawScenario {
            name: doc.name,
            constellation,
            links: doc.links,
            traffic: doc.traffic,
            stations: doc.stations,
        })
    }

    fn into_document(self) -> RawDocument {
        let constellation = match (self.constellation.spec, self.constellation.tle) {
            (Some(spec), _) => match toml::Value::try_from(spec).expect("spec serializes") {
                toml::Value::Table(t) => t,
                _ => unreachable!("struct serializes to a table"),
            },
            (None, Some(tle)) => match toml::Value::try_from(tle).expect("tle serializes") {
                toml::Value::Table(t) => t,
                _ => unreachable!("struct serializes to a table"),
            },
            (None, None) => unreachable!("resolved scenarios always have a source"),
        };
        RawDocument {
            name: self.name,
            constellation,
            links: self.links,
            traffic: self.traffic,
            stations: self.stations,
        }
    }

    fn resolve(self, base_dir: &Path) -> Result<Scenario> {
        let constellation = match (self.constellation.spec, self.constellation.tle) {
            (Some(spec), _) => ConstellationSource::Generated(spec),
            (None, Some(tle)) => {
                let path = if tle.tle_file.is_absolute() {
                    tle.tle_file
                } else {
                    std::path::absolute(base_dir.join(&tle.tle_file))
                        .map_err(|e| Error::Scenario(format!("tle_file: {e}")))?
                };
                ConstellationSource::Tle {
                    path,
                    sim_epoch: tle.sim_epoch,
                }
            }
            (None, None) => unreachable!("from_document always sets a source"),
        };

        let mut stations = Vec::with_capacity(self.stations.len() + 2);
        for raw in self.stations {
            let station = match (raw.lat, raw.lon) {
                (Some(lat), Some(lon)) => Station::new(
                    raw.name,
                    GeodeticCoord::surface(lat, lon)
                        .map_err(|e| Error::Scenario(format!("stations: {e}")))?,
                    raw.role.unwrap_or_default(),
                ),
                (None, None) => {
                    let mut s = catalog::lookup(&raw.name)?;
                    if let Some(role) = raw.role {
                        s.role = role;
                    }
                    s
                }
                _ => {
                    return Err(Error::Scenario(format!(
                        "stations: {:?} needs both lat and lon",
                        raw.name
                    )))
                }
            };
            stations.push(station);
        }
        let mut endpoint = |name: &str| -> Result<String> {
            if let Some(s) = stations.iter().find(|s| s.name == name) {
                return Ok(s.name.clone());
            }
            let s = catalog::lookup(name)?;
            let canonical = s.name.clone();
            if !stations.iter().any(|x| x.name == canonical) {
                stations.push(s);
            }
            Ok(canonical)
        };
        let source = endpoint(&self.traffic.source)?;
        let destination = endpoint(&self.traffic.destination)?;

        let scenario = Scenario {
            name: self.name.unwrap_or_else(|| "scenario".to_string()),
            constellation,
            stations,
            link_params: self.links,
            update_interval_s: self.traffic.update_interval_s,
            ping_interval_ms: self.traffic.ping_interval_ms,
            duration_s: self.traffic.duration_s,
            source,
            destination,
            routing: self.traffic.routing,
            fiber_refractive_index: self.traffic.fiber_refractive_index,
            record_paths: self.traffic.record_paths,
        };
        scenario.validate()?;
        Ok(scenario)
    }
}
