//! London - New York without laser links: 14 ground relays along the great
//! circle bounce traffic through partially deployed shells.
//!
//!     cargo run --release --example ground_relays

use leosim::presets;
use leosim::simulation;

fn main() -> leosim::Result<()> {
    println!("{:>6} {:>9} {:>9} {:>9} {:>8}", "planes", "mean ms", "min ms", "max ms", "outages");
    for planes in [6, 12, 24] {
        let trace = simulation::run(&presets::exp1_relay(planes)?)?;
        let s = &trace.summary;
        println!(
            "{planes:>6} {:>9.3} {:>9.3} {:>9.3} {:>8}",
            s.mean_ms.unwrap_or(f64::NAN),
            s.min_ms.unwrap_or(f64::NAN),
            s.max_ms.unwrap_or(f64::NAN),
            s.outages
        );
    }
    let relays = presets::exp1_relay(6)?;
    for st in relays.stations.iter().filter(|s| s.name.starts_with("relay")).take(3) {
        println!("{} at {:.3}, {:.3}", st.name, st.coord.latitude_deg(), st.coord.longitude_deg());
    }
    Ok(())
}
