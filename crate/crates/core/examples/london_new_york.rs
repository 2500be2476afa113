//! Two hours of pings between London and New York over the 1584-satellite
//! laser grid, against the fiber and internet baselines.
//!
//!     cargo run --release --example london_new_york [-- OUT_DIR]
//!
//! With OUT_DIR the trace, summary and scenario echo are written there.

use std::path::PathBuf;

use leosim::commands::run_command;
use leosim::presets;
use leosim::simulation::{self, great_circle_fiber_rtt_ms, light_rtt_lower_bound_ms};

const INTERNET_RTT_MS: f64 = 73.0;

fn main() -> leosim::Result<()> {
    let scenario = presets::preset("exp1-isl")?;
    let trace = match std::env::args().nth(1).map(PathBuf::from) {
        Some(dir) => run_command(&scenario, &dir, true)?.result,
        None => simulation::run(&scenario)?,
    };
    let a = scenario.station("London")?.1.coord;
    let b = scenario.station("New York")?.1.coord;
    let s = &trace.summary;
    println!("{} samples, {} outages", s.samples, s.outages);
    println!(
        "RTT mean {:.3} ms, min {:.3}, max {:.3}, stddev {:.3}",
        s.mean_ms.unwrap_or(f64::NAN),
        s.min_ms.unwrap_or(f64::NAN),
        s.max_ms.unwrap_or(f64::NAN),
        s.stddev_ms.unwrap_or(f64::NAN)
    );
    println!("vacuum great circle {:.3} ms", light_rtt_lower_bound_ms(&a, &b));
    println!("ideal fiber         {:.3} ms", great_circle_fiber_rtt_ms(&a, &b, scenario.fiber_refractive_index));
    println!("internet today      {INTERNET_RTT_MS:.3} ms");

    let hops: Vec<usize> = trace.samples.iter().map(|x| x.hop_count).collect();
    println!("hop count {}-{}", hops.iter().min().unwrap(), hops.iter().max().unwrap());
    Ok(())
}
