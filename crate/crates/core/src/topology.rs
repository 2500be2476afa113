//! Snapshot graph construction.
//!
//! At each reconfiguration instant every satellite and ground station becomes
//! a node, and candidate links survive only if they pass their filter:
//! ISLs must be grid neighbors with a clear line of sight, ground links must
//! clear the minimum elevation. Edge weight is one-way light delay.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::constellation::{isl_neighbors, ConstellationSpec, SatelliteId};
use crate::error::{Error, Result};
use crate::geodesy::{
    chord_distance, elevation_from_cartesian, propagation_delay_ms,
    CartesianPosition, Frame, GeodeticCoord, EARTH_RADIUS_KM,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum NodeKind {
    Satellite,
    GroundStation,
}

/// Stable node identity. Satellites order before ground stations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NodeId {
    pub kind: NodeKind,
    pub index: usize,
}

impl NodeId {
    pub const fn satellite(index: usize) -> Self {
        NodeId {
            kind: NodeKind::Satellite,
            index,
        }
    }

    pub const fn ground(index: usize) -> Self {
        NodeId {
            kind: NodeKind::GroundStation,
            index,
        }
    }

    pub fn is_satellite(&self) -> bool {
        self.kind == NodeKind::Satellite
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            NodeKind::Satellite => write!(f, "sat{}", self.index),
            NodeKind::GroundStation => write!(f, "gs{}", self.index),
        }
    }
}

fn default_min_elevation() -> f64 {
    25.0
}

fn default_true() -> bool {
    true
}

/// Link filter parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkParams {
    #[serde(default = "default_min_elevation")]
    pub min_elevation_deg: f64,
    /// Reject ISLs whose straight segment dips into the Earth.
    #[serde(default = "default_true")]
    pub isl_los_check: bool,
    /// Height above the surface an ISL segment must clear.
    #[serde(default)]
    pub isl_los_margin_km: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_gsl_range_km: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_isl_range_km: Option<f64>,
}

impl Default for LinkParams {
    fn default() -> Self {
        LinkParams {
            min_elevation_deg: default_min_elevation(),
            isl_los_check: true,
            isl_los_margin_km: 0.0,
            max_gsl_range_km: None,
            max_isl_range_km: None,
        }
    }
}

impl LinkParams {
    /// Minimum elevation of the 2018 filing era (1,100 km+ shells).
    pub const MIN_ELEVATION_2018_DEG: f64 = 40.0;

    pub fn with_min_elevation(mut self, deg: f64) -> Self {
        self.min_elevation_deg = deg;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..90.0).contains(&self.min_elevation_deg) {
            return Err(Error::InvalidInput(format!(
                "minimum elevation {} outside [0, 90)",
                self.min_elevation_deg
            )));
        }
        if !(self.isl_los_margin_km >= 0.0) {
            return Err(Error::InvalidInput("negative line-of-sight margin".into()));
        }
        for cap in [self.max_gsl_range_km, self.max_isl_range_km].into_iter().flatten() {
            if !(cap > 0.0) {
                return Err(Error::InvalidInput(format!("range cap {cap} km must be positive")));
            }
        }
        Ok(())
    }
}

/// Ground-to-satellite visibility: elevation at or above the minimum
/// (inclusive) and within the range cap, if any.
pub fn visible(ground: &GeodeticCoord, sat: &GeodeticCoord, params: &LinkParams) -> bool {
    visible_cartesian(&ground.to_cartesian(), &sat.to_cartesian(), params)
}

fn visible_cartesian(ground: &CartesianPosition, sat: &CartesianPosition, params: &LinkParams) -> bool {
    let Ok(el) = elevation_from_cartesian(ground, sat) else {
        return false;
    };
    if el < params.min_elevation_deg {
        return false;
    }
    match params.max_gsl_range_km {
        Some(cap) => chord_distance(ground, sat).is_ok_and(|d| d <= cap),
        None => true,
    }
}

/// Whether the segment `a`–`b` stays above `EARTH_RADIUS_KM + margin`.
pub fn los_clear(a: &CartesianPosition, b: &CartesianPosition, params: &LinkParams) -> bool {
    let floor = EARTH_RADIUS_KM + params.isl_los_margin_km;
    let d = b.sub(a);
    let len2 = d.dot(&d);
    let t = if len2 == 0.0 {
        0.0
    } else {
        (-a.dot(&d) / len2).clamp(0.0, 1.0)
    };
    let closest = CartesianPosition::new(
        a.x_km + t * d.x_km,
        a.y_km + t * d.y_km,
        a.z_km + t * d.z_km,
        a.frame,
    );
    closest.norm() > floor
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node {
    pub id: NodeId,
    pub position: CartesianPosition,
}

/// Undirected link; `a < b` always.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub a: NodeId,
    pub b: NodeId,
    pub delay_ms: f64,
}

/// Immutable network snapshot.
///
/// Nodes are kept sorted by [`NodeId`], so a node's dense index orders the
/// same way as its id; routing relies on that for tie-breaking.
#[derive(Debug, Clone)]
pub struct TopologyGraph {
    snapshot_time_s: f64,
    nodes: Vec<Node>,
    edges: Vec<Edge>,
    // CSR adjacency over dense node indices.
    offsets: Vec<usize>,
    adjacency: Vec<(u32, f64)>,
}

impl TopologyGraph {
    /// Assembles a graph from explicit nodes and edges. Edges are normalized
    /// to `a < b` and sorted; duplicates, self-loops, unknown endpoints and
    /// non-positive delays are rejected.
    pub fn from_parts(snapshot_time_s: f64, mut nodes: Vec<Node>, edges: Vec<Edge>) -> Result<Self> {
        nodes.sort_by_key(|n| n.id);
        if nodes.windows(2).any(|w| w[0].id == w[1].id) {
            return Err(Error::InvalidInput("duplicate node id".into()));
        }
        let mut edges: Vec<Edge> = edges
            .into_iter()
            .map(|e| if e.a <= e.b { e } else { Edge { a: e.b, b: e.a, ..e } })
            .collect();
        edges.sort_by(|x, y| (x.a, x.b).cmp(&(y.a, y.b)));

        let mut g = TopologyGraph {
            snapshot_time_s,
            nodes,
            edges: Vec::new(),
            offsets: Vec::new(),
            adjacency: Vec::new(),
        };
        for w in edges.windows(2) {
            if (w[0].a, w[0].b) == (w[1].a, w[1].b) {
                return Err(Error::InvalidInput(format!("duplicate edge {}-{}", w[0].a, w[0].b)));
            }
        }
        for e in &edges {
            if e.a == e.b {
                return Err(Error::InvalidInput(format!("self-loop on {}", e.a)));
            }
            if !(e.delay_ms > 0.0) || !e.delay_ms.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "edge {}-{} has non-positive delay {}",
                    e.a, e.b, e.delay_ms
                )));
            }
            for id in [e.a, e.b] {
                if g.index_of(id).is_none() {
                    return Err(Error::UnknownNode(id.to_string()));
                }
            }
        }
        g.edges = edges;
        g.build_adjacency();
        Ok(g)
    }

    fn build_adjacency(&mut self) {
        let n = self.nodes.len();
        let mut degree = vec![0usize; n + 1];
        let ends: Vec<(usize, usize, f64)> = self
            .edges
            .iter()
            .map(|e| {
                (
                    self.index_of(e.a).expect("validated"),
                    self.index_of(e.b).expect("validated"),
                    e.delay_ms,
                )
            })
            .collect();
        for &(a, b, _) in &ends {
            degree[a + 1] += 1;
            degree[b + 1] += 1;
        }
        for i in 0..n {
            degree[i + 1] += degree[i];
        }
        let mut fill = degree.clone();
        let mut adjacency = vec![(0u32, 0.0); 2 * ends.len()];
        for &(a, b, w) in &ends {
            adjacency[fill[a]] = (b as u32, w);
            fill[a] += 1;
            adjacency[fill[b]] = (a as u32, w);
            fill[b] += 1;
        }
        self.offsets = degree;
        self.adjacency = adjacency;
    }

    pub fn snapshot_time_s(&self) -> f64 {
        self.snapshot_time_s
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Dense index of `id`, if it is a node of this snapshot.
    pub fn index_of(&self, id: NodeId) -> Option<usize> {
        self.nodes.binary_search_by_key(&id, |n| n.id).ok()
    }

    pub fn id_at(&self, index: usize) -> NodeId {
        self.nodes[index].id
    }

    /// `(neighbor index, delay_ms)` pairs of the node at dense `index`.
    pub fn neighbors(&self, index: usize) -> &[(u32, f64)] {
        &self.adjacency[self.offsets[index]..self.offsets[index + 1]]
    }

    /// Delay of the edge between `a` and `b`, if present.
    pub fn edge_delay(&self, a: NodeId, b: NodeId) -> Option<f64> {
        let ia = self.index_of(a)?;
        let ib = self.index_of(b)? as u32;
        self.neighbors(ia).iter().find(|(n, _)| *n == ib).map(|&(_, w)| w)
    }
}

/// Builds the snapshot at `t_s` from Earth-fixed positions.
///
/// ISLs are considered only when `isl` is given with links enabled; its
/// satellite count must match `sats`. Ground stations never link to each
/// other.
pub fn build_graph(
    t_s: f64,
    sats: &[CartesianPosition],
    grounds: &[CartesianPosition],
    isl: Option<&ConstellationSpec>,
    params: &LinkParams,
) -> Result<TopologyGraph> {
    params.validate()?;
    for p in sats.iter().chain(grounds) {
        p.ensure_frame(Frame::Ecef)?;
    }

    let nodes: Vec<Node> = sats
        .iter()
        .enumerate()
        .map(|(i, &position)| Node {
            id: NodeId::satellite(i),
            position,
        })
        .chain(grounds.iter().enumerate().map(|(j, &position)| Node {
            id: NodeId::ground(j),
            position,
        }))
        .collect();

    let mut edges = Vec::new();
    let mut link = |a: NodeId, b: NodeId, pa: &CartesianPosition, pb: &CartesianPosition| -> Result<()> {
        let d = chord_distance(pa, pb)?;
        if d == 0.0 {
            return Err(Error::Coincident(format!("{a} and {b} share a position")));
        }
        edges.push(Edge {
            a,
            b,
            delay_ms: propagation_delay_ms(d)?,
        });
        Ok(())
    };

    if let Some(spec) = isl.filter(|s| s.isl_enabled) {
        if spec.total() != sats.len() {
            return Err(Error::InvalidInput(format!(
                "constellation has {} satellites but {} positions were given",
                spec.total(),
                sats.len()
            )));
        }
        for (i, pa) in sats.iter().enumerate() {
            for SatelliteId(j) in isl_neighbors(SatelliteId(i), spec)? {
                if j <= i {
                    continue;
                }
                let pb = &sats[j];
                if params.isl_los_check && !los_clear(pa, pb, params) {
                    continue;
                }
                if let Some(cap) = params.max_isl_range_km {
                    if chord_distance(pa, pb)? > cap {
                        continue;
                    }
                }
                link(NodeId::satellite(i), NodeId::satellite(j), pa, pb)?;
            }
        }
    }

    for (g, pg) in grounds.iter().enumerate() {
        for (s, ps) in sats.iter().enumerate() {
            if visible_cartesian(pg, ps, params) {
                link(NodeId::satellite(s), NodeId::ground(g), ps, pg)?;
            }
        }
    }

    TopologyGraph::from_parts(t_s, nodes, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constellation::generate;
    use crate::geodesy::elevation_angle_deg;
    use crate::orbits::{eci_to_ecef, propagate_eci};

    fn ecef(lat: f64, lon: f64, alt: f64) -> CartesianPosition {
        GeodeticCoord::new(lat, lon, alt).unwrap().to_cartesian()
    }

    #[test]
    fn visibility() {
        let params = LinkParams::default();
        let gs = GeodeticCoord::surface(10.0, 20.0).unwrap();
        let zenith = GeodeticCoord::new(10.0, 20.0, 550.0).unwrap();
        assert!(visible(&gs, &zenith, &params));
        let below = GeodeticCoord::new(-10.0, -160.0, 550.0).unwrap();
        assert!(!visible(&gs, &below, &params));
    }

    #[test]
    fn visibility_boundary_is_inclusive() {
        let gs = GeodeticCoord::surface(0.0, 0.0).unwrap();
        let sat = GeodeticCoord::new(0.0, 5.0, 550.0).unwrap();
        let el = elevation_angle_deg(&gs, &sat).unwrap();
        assert!(visible(&gs, &sat, &LinkParams::default().with_min_elevation(el)));
        assert!(!visible(&gs, &sat, &LinkParams::default().with_min_elevation(el + 1e-9)));
    }

    #[test]
    fn visibility_range_cap() {
        let gs = GeodeticCoord::surface(0.0, 0.0).unwrap();
        let sat = GeodeticCoord::new(0.0, 0.0, 550.0).unwrap();
        let params = LinkParams {
            max_gsl_range_km: Some(500.0),
            ..LinkParams::default()
        };
        assert!(!visible(&gs, &sat, &params));
    }

    #[test]
    fn line_of_sight() {
        let params = LinkParams::default();
        // Adjacent slots in a 66-slot plane at 550 km, 360/66 degrees apart.
        let a = ecef(0.0, 0.0, 550.0);
        let b = ecef(0.0, 360.0 / 66.0, 550.0);
        assert!(los_clear(&a, &b, &params));
        let c = ecef(0.0, 180.0, 550.0);
        assert!(!los_clear(&a, &c, &params));
        assert!(los_clear(&a, &a, &params));
        let strict = LinkParams {
            isl_los_margin_km: 545.0,
            ..LinkParams::default()
        };
        // Closest approach is 6921 cos(2.727 deg) ~ 6913.2 km, below 6916 km.
        assert!(!los_clear(&a, &b, &strict));
    }

    #[test]
    fn two_grounds_one_satellite() {
        let sats = [ecef(0.0, 0.0, 550.0)];
        let grounds = [ecef(0.5, 0.0, 0.0), ecef(-0.5, 0.0, 0.0)];
        let g = build_graph(0.0, &sats, &grounds, None, &LinkParams::default()).unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edges().len(), 2);
        assert!(g.edges().iter().all(|e| e.a.is_satellite() && !e.b.is_satellite()));
    }

    #[test]
    fn zenith_edge_weight() {
        let sats = [ecef(30.0, 40.0, 550.0)];
        let grounds = [ecef(30.0, 40.0, 0.0)];
        let params = LinkParams::default().with_min_elevation(0.0);
        let g = build_graph(0.0, &sats, &grounds, None, &params).unwrap();
        let expected = propagation_delay_ms(550.0).unwrap();
        assert!((g.edges()[0].delay_ms - expected).abs() < 1e-9);
    }

    #[test]
    fn full_grid_edge_count() {
        let spec = ConstellationSpec::shell(24, 66, 53.0, 550.0).with_isl(true);
        let sats: Vec<_> = generate(&spec)
            .unwrap()
            .iter()
            .map(|e| eci_to_ecef(&propagate_eci(e, 0.0).unwrap(), 0.0).unwrap())
            .collect();
        let g = build_graph(0.0, &sats, &[], Some(&spec), &LinkParams::default()).unwrap();
        assert_eq!(g.edges().len(), 3168);
        assert_eq!(g.node_count(), 1584);
        for n in 0..g.node_count() {
            assert_eq!(g.neighbors(n).len(), 4);
        }
    }

    #[test]
    fn edges_sorted_and_filtered() {
        let spec = ConstellationSpec::shell(6, 10, 53.0, 550.0).with_isl(true);
        let sats: Vec<_> = generate(&spec)
            .unwrap()
            .iter()
            .map(|e| eci_to_ecef(&propagate_eci(e, 100.0).unwrap(), 100.0).unwrap())
            .collect();
        let grounds = [ecef(51.5, 0.0, 0.0), ecef(40.7, -74.0, 0.0)];
        let params = LinkParams::default().with_min_elevation(10.0);
        let g = build_graph(100.0, &sats, &grounds, Some(&spec), &params).unwrap();
        assert!(g.edges().windows(2).all(|w| (w[0].a, w[0].b) < (w[1].a, w[1].b)));
        for e in g.edges() {
            assert!(e.a < e.b && e.delay_ms > 0.0);
            match (e.a.kind, e.b.kind) {
                (NodeKind::Satellite, NodeKind::Satellite) => assert!(
                    crate::constellation::is_inter_satellite_link(
                        SatelliteId(e.a.index),
                        SatelliteId(e.b.index),
                        &spec
                    )
                ),
                (NodeKind::Satellite, NodeKind::GroundStation) => {
                    let el = elevation_from_cartesian(&grounds[e.b.index], &sats[e.a.index]).unwrap();
                    assert!(el >= 10.0);
                }
                _ => panic!("ground-to-ground edge"),
            }
        }
    }

    #[test]
    fn isl_count_mismatch() {
        let spec = ConstellationSpec::shell(2, 3, 53.0, 550.0).with_isl(true);
        let sats = [ecef(0.0, 0.0, 550.0)];
        assert!(build_graph(0.0, &sats, &[], Some(&spec), &LinkParams::default()).is_err());
    }

    #[test]
    fn coincident_isl_rejected() {
        let spec = ConstellationSpec::shell(1, 2, 53.0, 550.0).with_isl(true);
        let p = ecef(0.0, 0.0, 550.0);
        assert!(matches!(
            build_graph(0.0, &[p, p], &[], Some(&spec), &LinkParams::default()),
            Err(Error::Coincident(_))
        ));
    }

    #[test]
    fn eci_positions_rejected() {
        let p = CartesianPosition::new(7000.0, 0.0, 0.0, Frame::Eci);
        assert!(matches!(
            build_graph(0.0, &[p], &[], None, &LinkParams::default()),
            Err(Error::FrameMismatch { .. })
        ));
    }

    #[test]
    fn from_parts_validation() {
        let node = |id| Node {
            id,
            position: ecef(0.0, 0.0, 550.0),
        };
        let nodes = vec![node(NodeId::satellite(0)), node(NodeId::satellite(1))];
        let e = |a, b, w| Edge { a, b, delay_ms: w };
        let (s0, s1) = (NodeId::satellite(0), NodeId::satellite(1));
        assert!(TopologyGraph::from_parts(0.0, nodes.clone(), vec![e(s0, s1, 0.0)]).is_err());
        assert!(TopologyGraph::from_parts(0.0, nodes.clone(), vec![e(s0, s0, 1.0)]).is_err());
        assert!(TopologyGraph::from_parts(0.0, nodes.clone(), vec![e(s0, NodeId::satellite(9), 1.0)]).is_err());
        assert!(TopologyGraph::from_parts(0.0, nodes.clone(), vec![e(s0, s1, 1.0), e(s1, s0, 1.0)]).is_err());
        let g = TopologyGraph::from_parts(0.0, nodes, vec![e(s1, s0, 2.0)]).unwrap();
        assert_eq!(g.edges()[0].a, s0);
        assert_eq!(g.edge_delay(s1, s0), Some(2.0));
    }
}
