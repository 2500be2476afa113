//! Routing update interval versus accuracy and wall-clock cost.
//!
//!     cargo run --release --example granularity

use std::time::Instant;

use leosim::presets;
use leosim::simulation;

fn main() -> leosim::Result<()> {
    println!("{:>10} {:>9} {:>9} {:>10}", "update s", "mean ms", "max ms", "runtime");
    for u in [1, 5, 10, 15] {
        let scenario = presets::fig1_granularity(u)?;
        let start = Instant::now();
        let trace = simulation::run(&scenario)?;
        let elapsed = start.elapsed();
        println!(
            "{u:>10} {:>9.3} {:>9.3} {:>8.0}ms",
            trace.summary.mean_ms.unwrap_or(f64::NAN),
            trace.summary.max_ms.unwrap_or(f64::NAN),
            elapsed.as_secs_f64() * 1000.0
        );
    }
    Ok(())
}
