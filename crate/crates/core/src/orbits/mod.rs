//! Two-body orbit propagation.
//!
//! Generated constellations and TLE catalogs both reduce to a list of
//! [`OrbitalElements`]; a [`Fleet`] propagates them and hands Earth-fixed
//! positions to the topology builder through the [`OrbitModel`] trait.

mod kepler;
pub mod tle;

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geodesy::{CartesianPosition, Frame, EARTH_RADIUS_KM, EARTH_ROTATION_RATE_RAD_S, MU_KM3_S2};

pub use kepler::solve_kepler;
pub use tle::{encode_tle, parse_tle, parse_tle_file, tle_to_elements, TleRecord};

pub const MAX_ECCENTRICITY: f64 = 0.1;

/// Keplerian state of one satellite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrbitalElements {
    pub semi_major_axis_km: f64,
    pub eccentricity: f64,
    pub inclination_deg: f64,
    pub raan_deg: f64,
    pub arg_perigee_deg: f64,
    pub mean_anomaly_epoch_deg: f64,
    /// Element epoch relative to simulation start.
    pub epoch_s: f64,
}

impl OrbitalElements {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: String| Err(Error::InvalidInput(what));
        if !(self.semi_major_axis_km > EARTH_RADIUS_KM) {
            return bad(format!(
                "semi-major axis {} km does not exceed the Earth radius",
                self.semi_major_axis_km
            ));
        }
        if !(0.0..=MAX_ECCENTRICITY).contains(&self.eccentricity) {
            return bad(format!(
                "eccentricity {} outside [0, {MAX_ECCENTRICITY}]",
                self.eccentricity
            ));
        }
        if !(0.0..=180.0).contains(&self.inclination_deg) {
            return bad(format!("inclination {} outside [0, 180]", self.inclination_deg));
        }
        for (name, v) in [
            ("raan", self.raan_deg),
            ("argument of perigee", self.arg_perigee_deg),
            ("mean anomaly", self.mean_anomaly_epoch_deg),
        ] {
            if !(0.0..360.0).contains(&v) {
                return bad(format!("{name} {v} outside [0, 360)"));
            }
        }
        if !self.epoch_s.is_finite() {
            return bad("epoch is not finite".into());
        }
        Ok(())
    }

    /// Mean motion in rad/s.
    pub fn mean_motion_rad_s(&self) -> f64 {
        (MU_KM3_S2 / self.semi_major_axis_km.powi(3)).sqrt()
    }
}

/// Orbital period from Kepler's third law.
pub fn period_s(elements: &OrbitalElements) -> f64 {
    TAU * (elements.semi_major_axis_km.powi(3) / MU_KM3_S2).sqrt()
}

/// Inertial position at `t_s` seconds after simulation start.
pub fn propagate_eci(elements: &OrbitalElements, t_s: f64) -> Result<CartesianPosition> {
    let a = elements.semi_major_axis_km;
    let e = elements.eccentricity;
    let n = elements.mean_motion_rad_s();

    let m = (elements.mean_anomaly_epoch_deg.to_radians() + n * (t_s - elements.epoch_s))
        .rem_euclid(TAU);
    let ecc_anom = solve_kepler(m, e)?;
    let true_anom = 2.0
        * ((1.0 + e).sqrt() * (ecc_anom / 2.0).sin())
            .atan2((1.0 - e).sqrt() * (ecc_anom / 2.0).cos());
    let r = a * (1.0 - e * ecc_anom.cos());
    if r <= EARTH_RADIUS_KM {
        return Err(Error::Subterranean { radius_km: r });
    }

    // Argument of latitude, then perifocal -> inertial rotation.
    let u = elements.arg_perigee_deg.to_radians() + true_anom;
    let (sin_u, cos_u) = u.sin_cos();
    let (sin_i, cos_i) = elements.inclination_deg.to_radians().sin_cos();
    let (sin_o, cos_o) = elements.raan_deg.to_radians().sin_cos();

    Ok(CartesianPosition::new(
        r * (cos_o * cos_u - sin_o * sin_u * cos_i),
        r * (sin_o * cos_u + cos_o * sin_u * cos_i),
        r * (sin_u * sin_i),
        Frame::Eci,
    ))
}

/// Earth rotation angle at `t_s`; zero at simulation start.
pub fn earth_rotation_angle(t_s: f64) -> f64 {
    EARTH_ROTATION_RATE_RAD_S * t_s
}

/// Rotates an inertial position into the Earth-fixed frame.
pub fn eci_to_ecef(p: &CartesianPosition, t_s: f64) -> Result<CartesianPosition> {
    p.ensure_frame(Frame::Eci)?;
    let (s, c) = earth_rotation_angle(t_s).sin_cos();
    Ok(CartesianPosition::new(
        c * p.x_km + s * p.y_km,
        -s * p.x_km + c * p.y_km,
        p.z_km,
        Frame::Ecef,
    ))
}

/// Source of satellite positions over time.
///
/// Two-body [`Fleet`] is the only implementation shipped; a perturbation
/// propagator can slot in here without touching topology or routing.
pub trait OrbitModel {
    fn satellite_count(&self) -> usize;

    /// Writes every satellite's Earth-fixed position at `t_s` into `out`,
    /// replacing its contents; index `i` is satellite `i`.
    fn positions_ecef(&self, t_s: f64, out: &mut Vec<CartesianPosition>) -> Result<()>;
}

/// A set of satellites propagated with two-body dynamics.
#[derive(Debug, Clone, PartialEq)]
pub struct Fleet {
    elements: Vec<OrbitalElements>,
}

impl Fleet {
    pub fn new(elements: Vec<OrbitalElements>) -> Result<Self> {
        for el in &elements {
            el.validate()?;
        }
        Ok(Fleet { elements })
    }

    pub fn elements(&self) -> &[OrbitalElements] {
        &self.elements
    }
}

impl OrbitModel for Fleet {
    fn satellite_count(&self) -> usize {
        self.elements.len()
    }

    fn positions_ecef(&self, t_s: f64, out: &mut Vec<CartesianPosition>) -> Result<()> {
        out.clear();
        out.reserve(self.elements.len());
        for el in &self.elements {
            out.push(eci_to_ecef(&propagate_eci(el, t_s)?, t_s)?);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn circular(a: f64, inc: f64) -> OrbitalElements {
        OrbitalElements {
            semi_major_axis_km: a,
            eccentricity: 0.0,
            inclination_deg: inc,
            raan_deg: 0.0,
            arg_perigee_deg: 0.0,
            mean_anomaly_epoch_deg: 0.0,
            epoch_s: 0.0,
        }
    }

    fn dist(a: &CartesianPosition, b: &CartesianPosition) -> f64 {
        a.sub(b).norm()
    }

    #[test]
    fn period_examples() {
        let el = circular(EARTH_RADIUS_KM + 550.0, 53.0);
        // Oracle: 2*pi*sqrt(6921^3 / 398600.4418).
        assert!((period_s(&el) - 5730.127089334606).abs() < 1e-6);
        let doubled = circular(2.0 * el.semi_major_axis_km, 53.0);
        assert!((period_s(&doubled) / period_s(&el) - 2f64.powf(1.5)).abs() < 1e-12);
        // Oracle: a = (mu (T / 2 pi)^2)^(1/3) for T = 86164 s.
        let geo = circular(42164.140100123965, 0.0);
        assert!((period_s(&geo) - 86164.0).abs() < 1e-6);
    }

    #[test]
    fn reference_geometry() {
        let el = circular(7000.0, 0.0);
        let p = propagate_eci(&el, 0.0).unwrap();
        assert_eq!((p.x_km, p.y_km, p.z_km), (7000.0, 0.0, 0.0));
        let q = propagate_eci(&el, period_s(&el)).unwrap();
        assert!(dist(&p, &q) < 1e-6);
    }

    #[test]
    fn polar_quarter_orbit_is_over_pole() {
        let el = circular(7000.0, 90.0);
        let p = propagate_eci(&el, period_s(&el) / 4.0).unwrap();
        let pole = CartesianPosition::new(0.0, 0.0, 7000.0, Frame::Eci);
        assert!(dist(&p, &pole) < 1e-6, "{p:?}");
    }

    #[test]
    fn ecef_rotation() {
        let p = CartesianPosition::new(7000.0, 0.0, 0.0, Frame::Eci);
        assert_eq!(eci_to_ecef(&p, 0.0).unwrap(), CartesianPosition { frame: Frame::Ecef, ..p });
        let day = TAU / EARTH_ROTATION_RATE_RAD_S;
        let q = eci_to_ecef(&p, day).unwrap();
        assert!(dist(&q, &CartesianPosition { frame: Frame::Ecef, ..p }) < 1e-6);
        let r = eci_to_ecef(&p, day / 4.0).unwrap();
        assert!(dist(&r, &CartesianPosition::new(0.0, -7000.0, 0.0, Frame::Ecef)) < 1e-6);
        assert!(eci_to_ecef(&r, 0.0).is_err());
    }

    #[test]
    fn validate_rejects() {
        let mut el = circular(6000.0, 53.0);
        assert!(el.validate().is_err());
        el.semi_major_axis_km = 7000.0;
        el.eccentricity = 0.2;
        assert!(el.validate().is_err());
        el.eccentricity = 0.0;
        el.raan_deg = 360.0;
        assert!(el.validate().is_err());
    }

    #[test]
    fn low_perigee_is_subterranean() {
        let el = OrbitalElements {
            eccentricity: 0.1,
            ..circular(6600.0, 0.0)
        };
        // perigee radius 5940 km
        assert!(matches!(
            propagate_eci(&el, 0.0),
            Err(Error::Subterranean { .. })
        ));
    }

    fn elements() -> impl Strategy<Value = OrbitalElements> {
        (
            6600.0f64..8500.0,
            0.0f64..=0.02,
            0.0f64..180.0,
            0.0f64..360.0,
            0.0f64..360.0,
            0.0f64..360.0,
        )
            .prop_map(|(a, e, i, o, w, m)| OrbitalElements {
                semi_major_axis_km: a,
                eccentricity: e,
                inclination_deg: i,
                raan_deg: o,
                arg_perigee_deg: w,
                mean_anomaly_epoch_deg: m,
                epoch_s: 0.0,
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn periodicity(el in elements(), t in 0.0f64..86400.0) {
            let p = propagate_eci(&el, t).unwrap();
            let q = propagate_eci(&el, t + period_s(&el)).unwrap();
            prop_assert!(dist(&p, &q) < 1e-3);
        }

        #[test]
        fn circular_radius_and_z_bound(mut el in elements(), t in 0.0f64..86400.0) {
            el.eccentricity = 0.0;
            let p = propagate_eci(&el, t).unwrap();
            prop_assert!((p.norm() - el.semi_major_axis_km).abs() < 1e-6);
            let zmax = el.semi_major_axis_km * el.inclination_deg.to_radians().sin();
            prop_assert!(p.z_km.abs() <= zmax + 1e-6);
        }
    }
}
