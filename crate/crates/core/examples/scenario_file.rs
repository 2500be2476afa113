//! Load a scenario file, run it and write the three output files.
//!
//!     cargo run --release --example scenario_file [-- scenario.toml [OUT_DIR]]
//!
//! Defaults to the bundled `scenarios/bent_pipe_relays.toml`.

use std::path::PathBuf;

use leosim::commands::run_command;
use leosim::load_scenario;

fn main() -> leosim::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenarios/bent_pipe_relays.toml"));
    let out = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("leosim-scenario-example"));

    let scenario = load_scenario(&path)?;
    println!("{} (digest {})", scenario.name, &scenario.digest()[..12]);
    for st in &scenario.stations {
        println!("  {:<14} {:?} {:>8.3} {:>9.3}", st.name, st.role, st.coord.latitude_deg(), st.coord.longitude_deg());
    }
    let output = run_command(&scenario, &out, true)?;
    println!(
        "mean {:.3} ms over {} samples -> {}",
        output.result.summary.mean_ms.unwrap_or(f64::NAN),
        output.result.summary.samples,
        output.trace.display()
    );
    Ok(())
}
