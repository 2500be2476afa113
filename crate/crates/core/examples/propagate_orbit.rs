//! Two-body propagation of one circular 550 km orbit and its ground track.
//!
//!     cargo run --example propagate_orbit

use leosim::orbits::{eci_to_ecef, period_s, propagate_eci, OrbitalElements};

fn main() -> leosim::Result<()> {
    let el = OrbitalElements {
        semi_major_axis_km: 6371.0 + 550.0,
        eccentricity: 0.0,
        inclination_deg: 53.0,
        raan_deg: 0.0,
        arg_perigee_deg: 0.0,
        mean_anomaly_epoch_deg: 0.0,
        epoch_s: 0.0,
    };
    el.validate()?;
    let period = period_s(&el);
    println!("period {period:.3} s ({:.2} min)", period / 60.0);

    println!("{:>7} {:>9} {:>9} {:>8}", "t min", "lat", "lon", "alt km");
    for step in 0..=10 {
        let t = step as f64 * period / 10.0;
        let g = eci_to_ecef(&propagate_eci(&el, t)?, t)?.to_geodetic()?;
        println!(
            "{:>7.1} {:>9.3} {:>9.3} {:>8.3}",
            t / 60.0,
            g.latitude_deg(),
            g.longitude_deg(),
            g.altitude_km()
        );
    }
    // After one period the inertial position repeats; the track has moved
    // west by the Earth's rotation in the meantime.
    let start = propagate_eci(&el, 0.0)?;
    let end = propagate_eci(&el, period)?;
    println!("inertial drift after one period: {:.2e} km", (end.x_km - start.x_km).hypot(end.y_km - start.y_km));
    Ok(())
}
