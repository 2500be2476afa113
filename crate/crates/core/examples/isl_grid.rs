//! The four-neighbor inter-satellite link grid and the seam between the
//! last and first plane.
//!
//!     cargo run --example isl_grid

use leosim::constellation::{generate_fleet, isl_neighbors, plane_slot, ConstellationSpec, SatelliteId};
use leosim::orbits::OrbitModel;
use leosim::topology::{build_graph, LinkParams};

fn main() -> leosim::Result<()> {
    let spec = ConstellationSpec::shell(24, 66, 53.0, 550.0).with_isl(true);
    for id in [0, 67, 1583] {
        let (p, s) = plane_slot(SatelliteId(id), &spec)?;
        let nb: Vec<String> = isl_neighbors(SatelliteId(id), &spec)?
            .iter()
            .map(|n| {
                let (np, ns) = plane_slot(*n, &spec).unwrap();
                format!("{} (p{np} s{ns})", n.0)
            })
            .collect();
        println!("sat {id} (p{p} s{s}) -> {}", nb.join(", "));
    }

    let fleet = generate_fleet(&spec)?;
    let mut sats = Vec::new();
    fleet.positions_ecef(0.0, &mut sats)?;
    for wrap in [true, false] {
        let spec = ConstellationSpec { isl_wrap_seam: wrap, ..spec.clone() };
        let g = build_graph(0.0, &sats, &[], Some(&spec), &LinkParams::default())?;
        let delays: Vec<f64> = g.edges().iter().map(|e| e.delay_ms).collect();
        println!(
            "seam wrap {wrap:<5}: {} links, delay {:.3}-{:.3} ms",
            delays.len(),
            delays.iter().copied().fold(f64::INFINITY, f64::min),
            delays.iter().copied().fold(0.0, f64::max)
        );
    }
    Ok(())
}
