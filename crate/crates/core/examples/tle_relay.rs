//! New York - Seattle through ten ground relays over a TLE catalog.
//!
//!     cargo run --release --example tle_relay [-- catalog.tle ...]
//!
//! Without arguments, synthetic Starlink-like catalogs of 700 and 1300
//! satellites are generated and compared.

#[path = "../tests/common/synthetic_tle.rs"]
mod synthetic_tle;

use std::path::PathBuf;

use leosim::presets;
use leosim::simulation::{self, load_tle_fleet};
use leosim::orbits::OrbitModel;

fn main() -> leosim::Result<()> {
    let mut files: Vec<PathBuf> = std::env::args().skip(1).map(PathBuf::from).collect();
    let dir = std::env::temp_dir().join("leosim-tle-example");
    if files.is_empty() {
        std::fs::create_dir_all(&dir).map_err(|e| leosim::Error::InvalidInput(e.to_string()))?;
        for n in [700, 1300] {
            let path = dir.join(format!("starlink-{n}.tle"));
            std::fs::write(&path, synthetic_tle::synthetic_catalog(n))
                .map_err(|e| leosim::Error::InvalidInput(e.to_string()))?;
            files.push(path);
        }
    }
    for path in files {
        let satellites = load_tle_fleet(&path, None)?.satellite_count();
        let trace = simulation::run(&presets::tle_relay(&path)?)?;
        let s = &trace.summary;
        println!(
            "{}: {satellites} satellites, mean {:.3} ms, min {:.3}, max {:.3}, {} outages of {}",
            path.display(),
            s.mean_ms.unwrap_or(f64::NAN),
            s.min_ms.unwrap_or(f64::NAN),
            s.max_ms.unwrap_or(f64::NAN),
            s.outages,
            s.samples
        );
    }
    Ok(())
}
