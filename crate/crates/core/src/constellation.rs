//! Uniform constellation generation and the four-neighbor ISL grid.
//!
//! Satellites are numbered `0..P*S` plane-major: index `i` lives in plane
//! `i / S`, slot `i % S`. Each satellite links to the slots on either side in
//! its own plane and to the same slot in the two adjacent planes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geodesy::EARTH_RADIUS_KM;
use crate::orbits::{Fleet, OrbitalElements, MAX_ECCENTRICITY};

fn default_raan_spread() -> f64 {
    360.0
}

fn default_true() -> bool {
    true
}

/// Plane/slot layout of a generated constellation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstellationSpec {
    pub planes: usize,
    pub sats_per_plane: usize,
    pub inclination_deg: f64,
    pub altitude_km: f64,
    /// Walker phasing factor F; slot phase shifts by `F * 360 / (P*S)` per plane.
    #[serde(default)]
    pub phase_offset: f64,
    #[serde(default = "default_raan_spread")]
    pub raan_spread_deg: f64,
    #[serde(default)]
    pub eccentricity: f64,
    #[serde(default)]
    pub isl_enabled: bool,
    /// Link plane `P-1` back to plane 0.
    #[serde(default = "default_true")]
    pub isl_wrap_seam: bool,
}

impl ConstellationSpec {
    /// A circular shell with default phasing and RAAN spread, ISLs off.
    pub fn shell(planes: usize, sats_per_plane: usize, inclination_deg: f64, altitude_km: f64) -> Self {
        ConstellationSpec {
            planes,
            sats_per_plane,
            inclination_deg,
            altitude_km,
            phase_offset: 0.0,
            raan_spread_deg: default_raan_spread(),
            eccentricity: 0.0,
            isl_enabled: false,
            isl_wrap_seam: true,
        }
    }

    pub fn with_isl(mut self, enabled: bool) -> Self {
        self.isl_enabled = enabled;
        self
    }

    pub fn total(&self) -> usize {
        self.planes * self.sats_per_plane
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidInput(m));
        if self.planes == 0 || self.sats_per_plane == 0 {
            return bad("planes and sats_per_plane must be at least 1".into());
        }
        if !(0.0..=180.0).contains(&self.inclination_deg) {
            return bad(format!("inclination {} outside [0, 180]", self.inclination_deg));
        }
        if !(self.altitude_km > 0.0) || !self.altitude_km.is_finite() {
            return bad(format!("altitude {} km must be positive", self.altitude_km));
        }
        if !(0.0..self.planes as f64).contains(&self.phase_offset) {
            return bad(format!(
                "phase offset {} outside [0, {})",
                self.phase_offset, self.planes
            ));
        }
        if !(self.raan_spread_deg > 0.0 && self.raan_spread_deg <= 360.0) {
            return bad(format!(
                "raan spread {} outside (0, 360]",
                self.raan_spread_deg
            ));
        }
        if !(0.0..=MAX_ECCENTRICITY).contains(&self.eccentricity) {
            return bad(format!("eccentricity {} outside [0, 0.1]", self.eccentricity));
        }
        Ok(())
    }
}

/// Index of a satellite within a generated constellation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SatelliteId(pub usize);

pub fn plane_slot(id: SatelliteId, spec: &ConstellationSpec) -> Result<(usize, usize)> {
    if id.0 >= spec.total() {
        return Err(Error::IndexOutOfRange {
            index: id.0,
            total: spec.total(),
        });
    }
    Ok((id.0 / spec.sats_per_plane, id.0 % spec.sats_per_plane))
}

/// Elements for every satellite, in index order.
pub fn generate(spec: &ConstellationSpec) -> Result<Vec<OrbitalElements>> {
    spec.validate()?;
    let (p_count, s_count) = (spec.planes as f64, spec.sats_per_plane as f64);
    let a = EARTH_RADIUS_KM + spec.altitude_km;

    let mut out = Vec::with_capacity(spec.total());
    for p in 0..spec.planes {
        let raan = (p as f64 * spec.raan_spread_deg / p_count).rem_euclid(360.0);
        for s in 0..spec.sats_per_plane {
            let m = s as f64 * 360.0 / s_count
                + p as f64 * spec.phase_offset * 360.0 / (p_count * s_count);
            out.push(OrbitalElements {
                semi_major_axis_km: a,
                eccentricity: spec.eccentricity,
                inclination_deg: spec.inclination_deg,
                raan_deg: raan,
                arg_perigee_deg: 0.0,
                mean_anomaly_epoch_deg: wrap_degrees(m),
                epoch_s: 0.0,
            });
        }
    }
    Ok(out)
}

/// Convenience: a propagatable fleet for `spec`.
pub fn generate_fleet(spec: &ConstellationSpec) -> Result<Fleet> {
    Fleet::new(generate(spec)?)
}

// rem_euclid can round up to exactly 360.0 for tiny negative inputs.
fn wrap_degrees(x: f64) -> f64 {
    let w = x.rem_euclid(360.0);
    if w >= 360.0 {
        0.0
    } else {
        w
    }
}

/// ISL partners of `id`, sorted ascending and deduplicated (small planes or
/// small constellations can make two rules name the same satellite).
pub fn isl_neighbors(id: SatelliteId, spec: &ConstellationSpec) -> Result<Vec<SatelliteId>> {
    if !spec.isl_enabled {
        return Err(Error::IslDisabled);
    }
    let (p, s) = plane_slot(id, spec)?;
    let (pc, sc) = (spec.planes, spec.sats_per_plane);
    let index = |plane: usize, slot: usize| SatelliteId(plane * sc + slot);

    let mut out = Vec::with_capacity(4);
    if sc > 1 {
        out.push(index(p, (s + 1) % sc));
        out.push(index(p, (s + sc - 1) % sc));
    }
    if pc > 1 {
        if p + 1 < pc {
            out.push(index(p + 1, s));
        } else if spec.isl_wrap_seam {
            out.push(index(0, s));
        }
        if p > 0 {
            out.push(index(p - 1, s));
        } else if spec.isl_wrap_seam {
            out.push(index(pc - 1, s));
        }
    }
    out.retain(|&n| n != id);
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Whether `a` and `b` may hold an inter-satellite link.
pub fn is_inter_satellite_link(a: SatelliteId, b: SatelliteId, spec: &ConstellationSpec) -> bool {
    a != b
        && isl_neighbors(a, spec)
            .map(|n| n.binary_search(&b).is_ok())
            .unwrap_or(false)
}
