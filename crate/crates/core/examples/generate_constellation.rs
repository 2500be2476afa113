//! Generate a Walker-style shell and dump its positions as CSV.
//!
//!     cargo run --example generate_constellation [-- PLANES SATS INCLINATION T_S]
//!
//! Defaults to 22 planes of 72 satellites at 53 degrees, t = 0.

use std::io::stdout;

use leosim::commands::generate_command;
use leosim::constellation::{generate, ConstellationSpec};

fn arg<T: std::str::FromStr>(i: usize, default: T) -> T {
    std::env::args().nth(i).and_then(|a| a.parse().ok()).unwrap_or(default)
}

fn main() -> leosim::Result<()> {
    let spec = ConstellationSpec::shell(arg(1, 22), arg(2, 72), arg(3, 53.0), 550.0);
    let elements = generate(&spec)?;
    eprintln!(
        "{} satellites; first plane RAANs {:?}",
        elements.len(),
        elements.iter().step_by(spec.sats_per_plane).take(4).map(|e| e.raan_deg).collect::<Vec<_>>()
    );
    generate_command(&spec, arg(4, 0.0), stdout().lock())?;
    Ok(())
}
