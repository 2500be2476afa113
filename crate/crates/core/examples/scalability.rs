//! Wall-clock cost of all-pairs routing as the constellation grows.
//!
//!     cargo run --release --example scalability [-- DURATION_S]
//!
//! The full five-minute sweep takes a few minutes; pass a shorter duration
//! for a quick look.

use std::time::Instant;

use leosim::presets;
use leosim::simulation;
use leosim::ConstellationSource;

fn main() -> leosim::Result<()> {
    let duration: Option<f64> = std::env::args().nth(1).and_then(|a| a.parse().ok());
    println!("{:>10} {:>9} {:>10}", "satellites", "mean ms", "runtime");
    for mut scenario in presets::scalability_sweep()? {
        if let Some(d) = duration {
            scenario.duration_s = d;
        }
        let ConstellationSource::Generated(spec) = &scenario.constellation else {
            unreachable!("sweep scenarios are generated");
        };
        let total = spec.total();
        let start = Instant::now();
        let trace = simulation::run(&scenario)?;
        let mean = trace.summary.mean_ms.map_or("no path".to_string(), |m| format!("{m:.3}"));
        println!("{total:>10} {mean:>9} {:>8.2} s", start.elapsed().as_secs_f64());
    }
    Ok(())
}
