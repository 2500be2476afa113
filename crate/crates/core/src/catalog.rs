//! Built-in ground stations and relay placement helpers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geodesy::{GeodeticCoord, EARTH_RADIUS_KM};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StationRole {
    #[default]
    Endpoint,
    Relay,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Station {
    pub name: String,
    pub coord: GeodeticCoord,
    pub role: StationRole,
}

impl Station {
    pub fn new(name: impl Into<String>, coord: GeodeticCoord, role: StationRole) -> Self {
        Station {
            name: name.into(),
            coord,
            role,
        }
    }
}

/// City-center coordinates from public geodata.
pub const CITIES: [(&str, f64, f64); 6] = [
    ("London", 51.5074, -0.1278),
    ("New York", 40.7128, -74.0060),
    ("Washington DC", 38.9072, -77.0369),
    ("Frankfurt", 50.1106, 8.6821),
    ("Seattle", 47.6062, -122.3321),
    ("Los Angeles", 34.0522, -118.2437),
];

/// Looks up a catalog city by name (case-insensitive) as an endpoint.
pub fn lookup(name: &str) -> Result<Station> {
    CITIES
        .iter()
        .find(|(n, _, _)| n.eq_ignore_ascii_case(name.trim()))
        .map(|&(n, lat, lon)| {
            Station::new(
                n,
                GeodeticCoord::surface(lat, lon).expect("catalog coordinates are valid"),
                StationRole::Endpoint,
            )
        })
        .ok_or_else(|| Error::UnknownStation(name.to_string()))
}

/// Point at fraction `f` of the way along the great circle from `a` to `b`
/// (spherical linear interpolation; surface altitude).
pub fn great_circle_point(a: &GeodeticCoord, b: &GeodeticCoord, f: f64) -> GeodeticCoord {
    let unit = |g: &GeodeticCoord| {
        let p = g.to_cartesian();
        let r = p.norm();
        [p.x_km / r, p.y_km / r, p.z_km / r]
    };
    let (ua, ub) = (unit(a), unit(b));
    let dot = (ua[0] * ub[0] + ua[1] * ub[1] + ua[2] * ub[2]).clamp(-1.0, 1.0);
    let omega = dot.acos();
    let (wa, wb) = if omega.abs() < 1e-12 {
        (1.0 - f, f)
    } else {
        (
            ((1.0 - f) * omega).sin() / omega.sin(),
            (f * omega).sin() / omega.sin(),
        )
    };
    let v = [
        wa * ua[0] + wb * ub[0],
        wa * ua[1] + wb * ub[1],
        wa * ua[2] + wb * ub[2],
    ];
    let p = crate::geodesy::CartesianPosition::new(
        v[0] * EARTH_RADIUS_KM,
        v[1] * EARTH_RADIUS_KM,
        v[2] * EARTH_RADIUS_KM,
        crate::geodesy::Frame::Ecef,
    );
    let g = p.to_geodetic().expect("surface point");
    GeodeticCoord::surface(g.latitude_deg(), g.longitude_deg()).expect("valid surface point")
}

/// `count` relays evenly spaced along the great circle from `a` to `b`,
/// excluding the endpoints, named `{prefix}-01`, `{prefix}-02`, ...
pub fn corridor_relays(a: &GeodeticCoord, b: &GeodeticCoord, count: usize, prefix: &str) -> Vec<Station> {
    (1..=count)
        .map(|k| {
            let f = k as f64 / (count + 1) as f64;
            Station::new(
                format!("{prefix}-{k:02}"),
                great_circle_point(a, b, f),
                StationRole::Relay,
            )
        })
        .collect()
}
