//! Shortest-path routing over topology snapshots.
//!
//! [`RoutingState`] plays the role of a centralized configurator: on every
//! reconfiguration it drops the previous snapshot and its routing trees,
//! installs the new graph, and answers route queries from it. Node ids are
//! stable across reconfigurations.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap};

use serde::{Deserialize, Serialize};

use crate::constellation::ConstellationSpec;
use crate::error::{Error, Result};
use crate::geodesy::CartesianPosition;
use crate::topology::{build_graph, LinkParams, NodeId, TopologyGraph};

/// A path through one snapshot.
#[derive(Debug, Clone, PartialEq)]
pub struct Route {
    pub source: NodeId,
    pub destination: NodeId,
    pub hops: Vec<NodeId>,
    pub one_way_delay_ms: f64,
}

impl Route {
    /// Number of links traversed.
    pub fn hop_count(&self) -> usize {
        self.hops.len().saturating_sub(1)
    }
}

#[derive(Clone, Copy)]
struct HeapEntry {
    dist: f64,
    node: u32,
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for HeapEntry {}

impl Ord for HeapEntry {
    // Reversed for a min-heap; equal distances pop the smaller node first.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Single-source shortest-path tree over dense node indices.
#[derive(Debug, Clone)]
pub struct ShortestPathTree {
    source: usize,
    dist: Vec<f64>,
    pred: Vec<u32>,
}

const NO_PRED: u32 = u32::MAX;

impl ShortestPathTree {
    /// Dijkstra from the node at dense index `source`. Among equal-cost
    /// predecessors the one with the smaller node id wins.
    pub fn compute(graph: &TopologyGraph, source: usize) -> Self {
        Self::compute_with(graph, source, &mut BinaryHeap::new())
    }

    fn compute_with(graph: &TopologyGraph, source: usize, heap: &mut BinaryHeap<HeapEntry>) -> Self {
        let n = graph.node_count();
        let mut dist = vec![f64::INFINITY; n];
        let mut pred = vec![NO_PRED; n];

        heap.clear();
        dist[source] = 0.0;
        heap.push(HeapEntry {
            dist: 0.0,
            node: source as u32,
        });
        while let Some(HeapEntry { dist: d, node }) = heap.pop() {
            let u = node as usize;
            // Stale entry; the node was settled with a smaller distance.
            if d > dist[u] {
                continue;
            }
            for &(v, w) in graph.neighbors(u) {
                let vi = v as usize;
                let candidate = d + w;
                if candidate < dist[vi] {
                    dist[vi] = candidate;
                    pred[vi] = node;
                    heap.push(HeapEntry {
                        dist: candidate,
                        node: v,
                    });
                } else if candidate == dist[vi] && node < pred[vi] {
                    pred[vi] = node;
                }
            }
        }
        ShortestPathTree { source, dist, pred }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    /// Distance to dense index `target`; infinite when unreachable.
    pub fn distance(&self, target: usize) -> f64 {
        self.dist[target]
    }

    /// Path to `target`, or `None` when unreachable.
    pub fn route_to(&self, graph: &TopologyGraph, target: usize) -> Option<Route> {
        if !self.dist[target].is_finite() {
            return None;
        }
        let mut hops = vec![graph.id_at(target)];
        let mut cur = target;
        while cur != self.source {
            cur = self.pred[cur] as usize;
            hops.push(graph.id_at(cur));
        }
        hops.reverse();
        Some(Route {
            source: graph.id_at(self.source),
            destination: graph.id_at(target),
            hops,
            one_way_delay_ms: self.dist[target],
        })
    }
}

fn dense_index(graph: &TopologyGraph, id: NodeId) -> Result<usize> {
    graph
        .index_of(id)
        .ok_or_else(|| Error::UnknownNode(id.to_string()))
}

/// Minimum-delay route from `src` to `dst`; `Ok(None)` when unreachable.
pub fn shortest_path(graph: &TopologyGraph, src: NodeId, dst: NodeId) -> Result<Option<Route>> {
    let s = dense_index(graph, src)?;
    let d = dense_index(graph, dst)?;
    Ok(ShortestPathTree::compute(graph, s).route_to(graph, d))
}

/// How many routing trees a reconfiguration computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RoutingMode {
    /// Trees only for sources that are actually queried.
    #[default]
    OnDemand,
    /// A tree from every node, as a full routing-table configurator would.
    AllPairs,
}

/// Current snapshot plus the routing trees derived from it.
#[derive(Debug)]
pub struct RoutingState {
    update_interval_s: f64,
    mode: RoutingMode,
    graph: Option<TopologyGraph>,
    trees: BTreeMap<usize, ShortestPathTree>,
    reconfigurations: u64,
}

impl RoutingState {
    pub fn new(update_interval_s: f64, mode: RoutingMode) -> Result<Self> {
        if !(update_interval_s > 0.0) || !update_interval_s.is_finite() {
            return Err(Error::InvalidInput(format!(
                "update interval {update_interval_s} s must be positive"
            )));
        }
        Ok(RoutingState {
            update_interval_s,
            mode,
            graph: None,
            trees: BTreeMap::new(),
            reconfigurations: 0,
        })
    }

    pub fn update_interval_s(&self) -> f64 {
        self.update_interval_s
    }

    pub fn mode(&self) -> RoutingMode {
        self.mode
    }

    pub fn graph(&self) -> Option<&TopologyGraph> {
        self.graph.as_ref()
    }

    pub fn reconfigurations(&self) -> u64 {
        self.reconfigurations
    }

    /// Replaces the snapshot. All trees from the previous graph are dropped;
    /// in all-pairs mode every tree is recomputed immediately.
    pub fn install(&mut self, graph: TopologyGraph) {
        self.trees.clear();
        if self.mode == RoutingMode::AllPairs {
            let mut heap = BinaryHeap::with_capacity(graph.node_count());
            for s in 0..graph.node_count() {
                self.trees.insert(s, ShortestPathTree::compute_with(&graph, s, &mut heap));
            }
        }
        self.graph = Some(graph);
        self.reconfigurations += 1;
    }

    /// Builds the snapshot at `t_s` from the given positions and installs it.
    /// `t_s` must fall on a multiple of the update interval.
    pub fn reconfigure(
        &mut self,
        t_s: f64,
        sats: &[CartesianPosition],
        grounds: &[CartesianPosition],
        isl: Option<&ConstellationSpec>,
        params: &LinkParams,
    ) -> Result<()> {
        let ratio = t_s / self.update_interval_s;
        if !(t_s >= 0.0) || (ratio - ratio.round()).abs() > 1e-9 {
            return Err(Error::InvalidInput(format!(
                "reconfiguration at {t_s} s is not a multiple of the {} s update interval",
                self.update_interval_s
            )));
        }
        let graph = build_graph(t_s, sats, grounds, isl, params)?;
        self.install(graph);
        Ok(())
    }

    /// Route from `src` to `dst` on the current snapshot.
    pub fn route(&mut self, src: NodeId, dst: NodeId) -> Result<Option<Route>> {
        let graph = self
            .graph
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("routing state has no snapshot yet".into()))?;
        let s = dense_index(graph, src)?;
        let d = dense_index(graph, dst)?;
        let tree = self
            .trees
            .entry(s)
            .or_insert_with(|| ShortestPathTree::compute(graph, s));
        Ok(tree.route_to(graph, d))
    }
}
