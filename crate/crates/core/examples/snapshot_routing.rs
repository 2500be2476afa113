//! Build one topology snapshot and trace the shortest-delay route through it.
//!
//!     cargo run --example snapshot_routing [-- T_S]

use leosim::catalog;
use leosim::constellation::{generate_fleet, ConstellationSpec};
use leosim::orbits::OrbitModel;
use leosim::routing::shortest_path;
use leosim::topology::{build_graph, LinkParams, NodeId};

fn main() -> leosim::Result<()> {
    let t: f64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(0.0);
    let spec = ConstellationSpec::shell(24, 66, 53.0, 550.0).with_isl(true);
    let stations = [catalog::lookup("London")?, catalog::lookup("New York")?];
    let grounds: Vec<_> = stations.iter().map(|s| s.coord.to_cartesian()).collect();

    let mut sats = Vec::new();
    generate_fleet(&spec)?.positions_ecef(t, &mut sats)?;
    let graph = build_graph(t, &sats, &grounds, Some(&spec), &LinkParams::default())?;
    let ground_links = graph.edges().iter().filter(|e| !e.b.is_satellite()).count();
    println!(
        "t = {t} s: {} nodes, {} links ({} ground-satellite)",
        graph.node_count(),
        graph.edges().len(),
        ground_links
    );

    let Some(route) = shortest_path(&graph, NodeId::ground(0), NodeId::ground(1))? else {
        println!("London and New York are not connected at this instant");
        return Ok(());
    };
    println!("{} hops, one-way {:.3} ms, RTT {:.3} ms", route.hop_count(), route.one_way_delay_ms, 2.0 * route.one_way_delay_ms);
    for pair in route.hops.windows(2) {
        let g = graph.nodes()[graph.index_of(pair[1]).unwrap()].position.to_geodetic()?;
        println!(
            "  {:>6} -> {:<6} {:>7.3} ms   ({:>7.3}, {:>8.3}, {:>5.0} km)",
            pair[0].to_string(),
            pair[1].to_string(),
            graph.edge_delay(pair[0], pair[1]).unwrap(),
            g.latitude_deg(),
            g.longitude_deg(),
            g.altitude_km()
        );
    }
    Ok(())
}
