//! Spherical Earth model, coordinate conversions and light-speed delay.
//!
//! Every node position is carried as latitude, longitude and altitude and
//! converted to Earth-centered Cartesian coordinates for distance math.
//! Angles are degrees at the public boundary and radians internally.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Mean Earth radius of the spherical model.
pub const EARTH_RADIUS_KM: f64 = 6371.0;
/// Sidereal rotation rate.
pub const EARTH_ROTATION_RATE_RAD_S: f64 = 7.2921159e-5;
/// Standard gravitational parameter of the Earth.
pub const MU_KM3_S2: f64 = 398600.4418;
pub const SPEED_OF_LIGHT_KM_S: f64 = 299792.458;

/// Latitude/longitude/altitude of a node above the spherical Earth.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawGeodetic", into = "RawGeodetic")]
pub struct GeodeticCoord {
    latitude_deg: f64,
    longitude_deg: f64,
    altitude_km: f64,
}

#[derive(Serialize, Deserialize)]
struct RawGeodetic {
    lat: f64,
    lon: f64,
    #[serde(default)]
    alt_km: f64,
}

impl TryFrom<RawGeodetic> for GeodeticCoord {
    type Error = Error;

    fn try_from(raw: RawGeodetic) -> Result<Self> {
        GeodeticCoord::new(raw.lat, raw.lon, raw.alt_km)
    }
}

impl From<GeodeticCoord> for RawGeodetic {
    fn from(g: GeodeticCoord) -> Self {
        RawGeodetic {
            lat: g.latitude_deg,
            lon: g.longitude_deg,
            alt_km: g.altitude_km,
        }
    }
}

impl GeodeticCoord {
    /// Validates latitude and altitude and normalizes longitude into (-180, 180].
    pub fn new(latitude_deg: f64, longitude_deg: f64, altitude_km: f64) -> Result<Self> {
        if !latitude_deg.is_finite() || !(-90.0..=90.0).contains(&latitude_deg) {
            return Err(Error::InvalidInput(format!(
                "latitude {latitude_deg} outside [-90, 90]"
            )));
        }
        if !longitude_deg.is_finite() {
            return Err(Error::InvalidInput(format!(
                "longitude {longitude_deg} is not finite"
            )));
        }
        if !altitude_km.is_finite() || altitude_km < 0.0 {
            return Err(Error::InvalidInput(format!(
                "altitude {altitude_km} km is negative"
            )));
        }
        Ok(GeodeticCoord {
            latitude_deg,
            longitude_deg: normalize_longitude(longitude_deg),
            altitude_km,
        })
    }

    /// A point on the surface (altitude 0).
    pub fn surface(latitude_deg: f64, longitude_deg: f64) -> Result<Self> {
        Self::new(latitude_deg, longitude_deg, 0.0)
    }

    pub fn latitude_deg(&self) -> f64 {
        self.latitude_deg
    }

    pub fn longitude_deg(&self) -> f64 {
        self.longitude_deg
    }

    pub fn altitude_km(&self) -> f64 {
        self.altitude_km
    }

    pub fn to_cartesian(&self) -> CartesianPosition {
        geodetic_to_cartesian(self)
    }
}

fn normalize_longitude(lon: f64) -> f64 {
    let mut l = lon % 360.0;
    if l > 180.0 {
        l -= 360.0;
    } else if l <= -180.0 {
        l += 360.0;
    }
    l
}

/// Reference frame of a Cartesian position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Frame {
    /// Earth-centered inertial.
    Eci,
    /// Earth-centered, Earth-fixed.
    Ecef,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartesianPosition {
    pub x_km: f64,
    pub y_km: f64,
    pub z_km: f64,
    pub frame: Frame,
}

impl CartesianPosition {
    pub const fn new(x_km: f64, y_km: f64, z_km: f64, frame: Frame) -> Self {
        CartesianPosition {
            x_km,
            y_km,
            z_km,
            frame,
        }
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub(crate) fn dot(&self, other: &CartesianPosition) -> f64 {
        self.x_km * other.x_km + self.y_km * other.y_km + self.z_km * other.z_km
    }

    pub(crate) fn sub(&self, other: &CartesianPosition) -> CartesianPosition {
        CartesianPosition::new(
            self.x_km - other.x_km,
            self.y_km - other.y_km,
            self.z_km - other.z_km,
            self.frame,
        )
    }

    pub(crate) fn ensure_frame(&self, expected: Frame) -> Result<()> {
        if self.frame == expected {
            Ok(())
        } else {
            Err(Error::FrameMismatch {
                expected,
                found: self.frame,
            })
        }
    }

    /// Inverse of [`geodetic_to_cartesian`]. Longitude at the poles is 0.
    pub fn to_geodetic(&self) -> Result<GeodeticCoord> {
        let r = self.norm();
        if r < EARTH_RADIUS_KM * (1.0 - 1e-12) {
            return Err(Error::InvalidInput(format!(
                "position radius {r} km is inside the Earth"
            )));
        }
        let lat = self.z_km.atan2(self.x_km.hypot(self.y_km)).to_degrees();
        let lon = if self.x_km == 0.0 && self.y_km == 0.0 {
            0.0
        } else {
            self.y_km.atan2(self.x_km).to_degrees()
        };
        GeodeticCoord::new(lat, lon, (r - EARTH_RADIUS_KM).max(0.0))
    }
}

/// Spherical geodetic to Earth-fixed Cartesian conversion.
pub fn geodetic_to_cartesian(g: &GeodeticCoord) -> CartesianPosition {
    let r = EARTH_RADIUS_KM + g.altitude_km;
    let lat = g.latitude_deg.to_radians();
    let lon = g.longitude_deg.to_radians();
    CartesianPosition::new(
        r * lat.cos() * lon.cos(),
        r * lat.cos() * lon.sin(),
        r * lat.sin(),
        Frame::Ecef,
    )
}

/// Straight-line distance between two positions in the same frame.
pub fn chord_distance(a: &CartesianPosition, b: &CartesianPosition) -> Result<f64> {
    b.ensure_frame(a.frame)?;
    Ok(a.sub(b).norm())
}

/// Haversine arc length over the sphere; altitudes are ignored.
pub fn great_circle_distance(a: &GeodeticCoord, b: &GeodeticCoord) -> f64 {
    let lat1 = a.latitude_deg.to_radians();
    let lat2 = b.latitude_deg.to_radians();
    let dlat = lat2 - lat1;
    let dlon = (b.longitude_deg - a.longitude_deg).to_radians();
    let h = (dlat / 2.0).sin().powi(2) + lat1.cos() * lat2.cos() * (dlon / 2.0).sin().powi(2);
    2.0 * EARTH_RADIUS_KM * h.sqrt().min(1.0).asin()
}

/// Elevation of `sat` above the local horizon of `ground`, in degrees.
pub fn elevation_angle_deg(ground: &GeodeticCoord, sat: &GeodeticCoord) -> Result<f64> {
    elevation_from_cartesian(&ground.to_cartesian(), &sat.to_cartesian())
}

/// Same as [`elevation_angle_deg`] on Earth-fixed Cartesian positions. The
/// up-vector is the radial direction of the ground position.
///
/// Evaluated as atan2(vertical, horizontal) of the line of sight, which equals
/// asin(vertical / range) but keeps full precision near the zenith.
pub fn elevation_from_cartesian(
    ground: &CartesianPosition,
    sat: &CartesianPosition,
) -> Result<f64> {
    sat.ensure_frame(ground.frame)?;
    let los = sat.sub(ground);
    let range = los.norm();
    if range == 0.0 {
        return Err(Error::Coincident(
            "ground station and satellite share a position".into(),
        ));
    }
    let r = ground.norm();
    let (ux, uy, uz) = (ground.x_km / r, ground.y_km / r, ground.z_km / r);
    let vertical = los.x_km * ux + los.y_km * uy + los.z_km * uz;
    let hx = los.x_km - vertical * ux;
    let hy = los.y_km - vertical * uy;
    let hz = los.z_km - vertical * uz;
    let horizontal = (hx * hx + hy * hy + hz * hz).sqrt();
    Ok(vertical.atan2(horizontal).to_degrees())
}

/// One-way light-speed delay over `distance_km`.
pub fn propagation_delay_ms(distance_km: f64) -> Result<f64> {
    if distance_km.is_nan() || distance_km < 0.0 {
        return Err(Error::InvalidInput(format!(
            "negative distance {distance_km} km"
        )));
    }
    Ok(distance_km / SPEED_OF_LIGHT_KM_S * 1000.0)
}
