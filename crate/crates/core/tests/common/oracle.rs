//! Exhaustive shortest-path reference over all simple paths.

use leosim::geodesy::{CartesianPosition, Frame};
use leosim::topology::{Edge, Node, NodeId, TopologyGraph};
use rand::Rng;

/// Minimum total weight over every simple path from `src` to `dst`, found by
/// depth-first enumeration on an adjacency matrix.
pub fn brute_force(weights: &[Vec<Option<f64>>], src: usize, dst: usize) -> Option<f64> {
    fn dfs(w: &[Vec<Option<f64>>], u: usize, dst: usize, acc: f64, seen: &mut [bool], best: &mut Option<f64>) {
        if u == dst {
            if best.map_or(true, |b| acc < b) {
                *best = Some(acc);
            }
            return;
        }
        for v in 0..w.len() {
            if let (Some(x), false) = (w[u][v], seen[v]) {
                seen[v] = true;
                dfs(w, v, dst, acc + x, seen, best);
                seen[v] = false;
            }
        }
    }
    let mut seen = vec![false; weights.len()];
    seen[src] = true;
    let mut best = None;
    dfs(weights, src, dst, 0.0, &mut seen, &mut best);
    best
}

/// Random connected graph on `n` nodes: a random spanning tree plus extra
/// edges. With `integer` weights many equal-cost paths appear.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, integer: bool) -> Vec<Vec<Option<f64>>> {
    let mut w = vec![vec![None; n]; n];
    let weight = |rng: &mut R| {
        if integer {
            rng.gen_range(1..=4) as f64
        } else {
            rng.gen_range(0.05..20.0)
        }
    };
    for v in 1..n {
        let u = rng.gen_range(0..v);
        let x = weight(rng);
        w[u][v] = Some(x);
        w[v][u] = Some(x);
    }
    let extra = rng.gen_range(0..=n);
    for _ in 0..extra {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && w[u][v].is_none() {
            let x = weight(rng);
            w[u][v] = Some(x);
            w[v][u] = Some(x);
        }
    }
    w
}

/// Node ids used for matrix index `i`: satellites first, then a few ground
/// stations, so dense indices and ids order identically.
pub fn node_id(i: usize, n: usize) -> NodeId {
    let grounds = n / 3;
    if i < n - grounds {
        NodeId::satellite(i)
    } else {
        NodeId::ground(i - (n - grounds))
    }
}

pub fn to_graph(w: &[Vec<Option<f64>>]) -> TopologyGraph {
    let n = w.len();
    let nodes = (0..n)
        .map(|i| Node {
            id: node_id(i, n),
            position: CartesianPosition::new(7000.0 + i as f64, 0.0, 0.0, Frame::Ecef),
        })
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if let Some(x) = w[u][v] {
                edges.push(Edge {
                    a: node_id(u, n),
                    b: node_id(v, n),
                    delay_ms: x,
                });
            }
        }
    }
    TopologyGraph::from_parts(0.0, nodes, edges).expect("valid random graph")
}
