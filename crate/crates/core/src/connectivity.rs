//! Global edge connectivity by unit-capacity max-flow.
//!
//! κ'(G) is the minimum over `t ≠ 0` of the maximum number of edge-disjoint
//! `0–t` paths: every global cut separates vertex 0 from some `t`.

use std::collections::VecDeque;

use crate::graph::{Bits, Graph};

struct FlowNetwork {
    n: usize,
    // flow[u][v] ∈ {-1, 0, 1}, antisymmetric; capacity is 1 on every edge.
    flow: Vec<Vec<i8>>,
}

impl FlowNetwork {
    fn new(n: usize) -> Self {
        FlowNetwork {
            n,
            flow: vec![vec![0; n]; n],
        }
    }

    fn reset(&mut self) {
        for row in &mut self.flow {
            row.fill(0);
        }
    }

    fn residual(&self, g: &Graph, u: usize, v: usize) -> bool {
        g.has_edge(u, v) && self.flow[u][v] < 1
    }

    /// Parents along a BFS in the residual graph; `None` for unreached.
    fn residual_bfs(&self, g: &Graph, s: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.n];
        parent[s] = Some(s);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if parent[v].is_none() && self.residual(g, u, v) {
                    parent[v] = Some(u);
                    queue.push_back(v);
                }
            }
        }
        parent
    }

    fn max_flow(&mut self, g: &Graph, s: usize, t: usize, cap: usize) -> usize {
        self.reset();
        let mut value = 0;
        while value < cap {
            let parent = self.residual_bfs(g, s);
            if parent[t].is_none() {
                break;
            }
            let mut v = t;
            while v != s {
                let u = parent[v].expect("on augmenting path");
                self.flow[u][v] += 1;
                self.flow[v][u] -= 1;
                v = u;
            }
            value += 1;
        }
        value
    }
}

/// Minimum number of edges whose removal disconnects `g`. Disconnected
/// graphs and graphs with fewer than two vertices give 0.
pub fn edge_connectivity(g: &Graph) -> usize {
    min_edge_cut(g).map_or(0, |cut| cut.len())
}

/// A minimum edge cut, or `None` when `g` is disconnected or trivial.
pub fn min_edge_cut(g: &Graph) -> Option<Vec<(usize, usize)>> {
    let n = g.order();
    if n < 2 || !g.is_connected() {
        return None;
    }
    // the edges at a minimum-degree vertex form a cut; flows only need to beat it
    let v_min = (0..n).min_by_key(|&v| g.degree(v)).expect("nonempty");
    let mut best = (g.degree(v_min), None);
    let mut net = FlowNetwork::new(n);
    for t in 1..n {
        let f = net.max_flow(g, 0, t, best.0);
        if f < best.0 {
            best = (f, Some(t));
        }
    }
    let side = match best.1 {
        Some(t) => {
            net.max_flow(g, 0, t, usize::MAX);
            net.residual_bfs(g, 0)
                .iter()
                .enumerate()
                .filter(|(_, p)| p.is_some())
                .fold(0u64, |m, (v, _)| m | 1 << v)
        }
        None => 1u64 << v_min,
    };
    let mut cut = Vec::new();
    for u in Bits(side) {
        for v in Bits(g.neighbor_mask(u) & !side) {
            cut.push((u.min(v), u.max(v)));
        }
    }
    cut.sort_unstable();
    Some(cut)
}
