//! Geodetic conversions, distances and the light-speed floor between the
//! built-in cities.
//!
//!     cargo run --example coordinates

use leosim::catalog::{self, CITIES};
use leosim::geodesy::{chord_distance, elevation_angle_deg, great_circle_distance, propagation_delay_ms, GeodeticCoord};
use leosim::simulation::{great_circle_fiber_rtt_ms, light_rtt_lower_bound_ms};
use leosim::scenario::FIBER_REFRACTIVE_INDEX;

fn main() -> leosim::Result<()> {
    let london = catalog::lookup("London")?.coord;
    let ny = catalog::lookup("New York")?.coord;

    let p = london.to_cartesian();
    println!("London ECEF: ({:.3}, {:.3}, {:.3}) km", p.x_km, p.y_km, p.z_km);
    let back = p.to_geodetic()?;
    println!("and back:    {:.10}, {:.10}", back.latitude_deg(), back.longitude_deg());

    println!(
        "London - New York: arc {:.3} km, chord {:.3} km",
        great_circle_distance(&london, &ny),
        chord_distance(&london.to_cartesian(), &ny.to_cartesian())?
    );
    println!("1000 km of vacuum: {:.6} ms", propagation_delay_ms(1000.0)?);

    // A satellite 550 km above a point 10 degrees east of London.
    let sat = GeodeticCoord::new(london.latitude_deg(), london.longitude_deg() + 10.0, 550.0)?;
    println!("elevation from London: {:.3} deg", elevation_angle_deg(&london, &sat)?);

    println!("\n{:<28} {:>10} {:>12} {:>12}", "pair", "arc km", "light RTT", "fiber RTT");
    for (i, a) in CITIES.iter().enumerate() {
        for b in &CITIES[i + 1..] {
            let ga = GeodeticCoord::surface(a.1, a.2)?;
            let gb = GeodeticCoord::surface(b.1, b.2)?;
            println!(
                "{:<28} {:>10.1} {:>9.3} ms {:>9.3} ms",
                format!("{} - {}", a.0, b.0),
                great_circle_distance(&ga, &gb),
                light_rtt_lower_bound_ms(&ga, &gb),
                great_circle_fiber_rtt_ms(&ga, &gb, FIBER_REFRACTIVE_INDEX)
            );
        }
    }
    Ok(())
}
