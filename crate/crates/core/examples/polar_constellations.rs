//! Polar N x N constellations between Washington DC and Frankfurt: more
//! satellites, steadier latency.
//!
//!     cargo run --release --example polar_constellations

use leosim::presets;
use leosim::simulation;

fn main() -> leosim::Result<()> {
    println!("{:>4} {:>6} {:>9} {:>9} {:>9} {:>9}", "N", "sats", "mean ms", "min ms", "max ms", "stddev");
    for n in [25, 30, 35] {
        let trace = simulation::run(&presets::exp2(n)?)?;
        let s = &trace.summary;
        println!(
            "{n:>4} {:>6} {:>9.3} {:>9.3} {:>9.3} {:>9.3}",
            n * n,
            s.mean_ms.unwrap_or(f64::NAN),
            s.min_ms.unwrap_or(f64::NAN),
            s.max_ms.unwrap_or(f64::NAN),
            s.stddev_ms.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
