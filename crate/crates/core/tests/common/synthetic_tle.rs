//! Deterministic Starlink-like TLE catalogs.
//!
//! Satellites are drawn from a 72 x 22 shell at 53 deg and 550 km in a fixed
//! shuffled order, so a larger catalog always contains every satellite of a
//! smaller one with identical elements. Each satellite gets small orbit
//! perturbations and an epoch up to twelve hours before the reference epoch;
//! the first one drawn sits exactly on the reference epoch, which therefore
//! becomes simulation time zero.

use chrono::{DateTime, Duration, TimeZone, Utc};
use leosim::geodesy::{EARTH_RADIUS_KM, MU_KM3_S2};
use leosim::orbits::tle::{encode_tle, TleFields};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SHELL_PLANES: usize = 72;
pub const SHELL_SLOTS: usize = 22;

pub fn reference_epoch() -> DateTime<Utc> {
    Utc.with_ymd_and_hms(2021, 1, 15, 12, 0, 0).unwrap()
}

fn mean_motion_rev_day(altitude_km: f64) -> f64 {
    let a: f64 = EARTH_RADIUS_KM + altitude_km;
    (MU_KM3_S2 / a.powi(3)).sqrt() * 86_400.0 / std::f64::consts::TAU
}

/// Catalog text of the first `count` satellites (at most 1584).
pub fn synthetic_catalog(count: usize) -> String {
    let total = SHELL_PLANES * SHELL_SLOTS;
    assert!(count <= total, "at most {total} satellites");
    let mut rng = ChaCha8Rng::seed_from_u64(2021);
    let mut order: Vec<usize> = (0..total).collect();
    order.shuffle(&mut rng);

    // Perturbations are drawn for every slot up front so they do not depend
    // on `count`.
    let jitter: Vec<[f64; 6]> = (0..total)
        .map(|_| {
            [
                rng.gen_range(-0.3..0.3),     // raan
                rng.gen_range(-1.0..1.0),     // mean anomaly
                rng.gen_range(-2.0..2.0),     // altitude
                rng.gen_range(1e-4..3e-4),    // eccentricity
                rng.gen_range(0.0..360.0),    // argument of perigee
                rng.gen_range(0.0..43_200.0), // epoch offset, s
            ]
        })
        .collect();

    let reference = reference_epoch();
    let mut text = String::new();
    for (k, &slot) in order.iter().take(count).enumerate() {
        let (p, s) = (slot / SHELL_SLOTS, slot % SHELL_SLOTS);
        let [d_raan, d_m, d_alt, ecc, argp, offset] = jitter[slot];
        let offset = if k == 0 { 0.0 } else { offset };
        let n = mean_motion_rev_day(550.0 + d_alt);
        // Argument of latitude at reference time gives the slot; mean anomaly
        // is measured from perigee and wound back to the element epoch.
        let u_ref = s as f64 * 360.0 / SHELL_SLOTS as f64 + d_m;
        let m_ref = u_ref - argp;
        let m_epoch = m_ref - n * 360.0 * offset / 86_400.0;
        let catalog_number = 44_000 + slot as u32;
        let name = format!("STARLINK-{catalog_number}");
        let lines = encode_tle(&TleFields {
            name: &name,
            catalog_number,
            epoch: reference - Duration::milliseconds((offset * 1000.0) as i64),
            inclination_deg: 53.0,
            raan_deg: p as f64 * 360.0 / SHELL_PLANES as f64 + d_raan,
            eccentricity: ecc,
            arg_perigee_deg: argp,
            mean_anomaly_deg: m_epoch,
            mean_motion_rev_day: n,
        })
        .expect("synthetic fields fit the format");
        for line in lines {
            text.push_str(&line);
            text.push('\n');
        }
    }
    text
}
