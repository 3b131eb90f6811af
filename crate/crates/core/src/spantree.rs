//! Layered BFS spanning trees and their degree census.
//!
//! Layers are `S_0 = {root}`, `S_1 = N(root)`, `S_i = N(S_{i−1}) \ S_{i−2}`.
//! Edges inside a layer are dropped, and a vertex with several neighbors in
//! the previous layer keeps only the one maximal by (degree in `g`, index).

use std::fmt;

use thiserror::Error;

use crate::graph::{Bits, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpanTreeError {
    #[error("root {root} out of range for a graph on {order} vertices")]
    RootOutOfRange { root: usize, order: usize },
    #[error("graph is not connected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    pub tree: Graph,
    pub root: usize,
    pub layers: Vec<u64>,
    /// Edges of `g` missing from the tree, sorted, each as `(u, v)` with `u < v`.
    pub deleted: Vec<(usize, usize)>,
}

impl SpanningTree {
    /// Layer index of every vertex.
    pub fn depths(&self) -> Vec<usize> {
        let mut d = vec![0; self.tree.order()];
        for (i, &layer) in self.layers.iter().enumerate() {
            for v in Bits(layer) {
                d[v] = i;
            }
        }
        d
    }
}

pub fn spanning_tree(g: &Graph, root: usize) -> Result<SpanningTree, SpanTreeError> {
    let n = g.order();
    if root >= n {
        return Err(SpanTreeError::RootOutOfRange { root, order: n });
    }
    if !g.is_connected() {
        return Err(SpanTreeError::Disconnected);
    }
    let mut layers = vec![1u64 << root];
    let mut seen = 1u64 << root;
    loop {
        let last = *layers.last().unwrap();
        let next = Bits(last).fold(0, |m, v| m | g.neighbor_mask(v)) & !seen;
        if next == 0 {
            break;
        }
        seen |= next;
        layers.push(next);
    }

    let mut tree = Graph::empty(n).expect("order already validated");
    for pair in layers.windows(2) {
        let (prev, cur) = (pair[0], pair[1]);
        for x in Bits(cur) {
            let parent = Bits(g.neighbor_mask(x) & prev)
                .max_by_key(|&u| (g.degree(u), u))
                .expect("every vertex past the root has a parent");
            tree.add_edge(parent, x).expect("tree edge is new");
        }
    }
    let deleted = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| !tree.has_edge(u, v))
        .collect();
    Ok(SpanningTree {
        tree,
        root,
        layers,
        deleted,
    })
}

/// Tree vertex counts by degree; degrees above 3 are tallied in `higher`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DegreeCensus {
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub higher: usize,
}

impl DegreeCensus {
    pub fn total(&self) -> usize {
        self.n1 + self.n2 + self.n3 + self.higher
    }
}

impl fmt::Display for DegreeCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n1={} n2={} n3={}", self.n1, self.n2, self.n3)?;
        if self.higher > 0 {
            write!(f, " n4+={}", self.higher)?;
        }
        Ok(())
    }
}

pub fn degree_census(t: &SpanningTree) -> DegreeCensus {
    let mut c = DegreeCensus::default();
    for d in t.tree.degrees() {
        match d {
            0 => {}
            1 => c.n1 += 1,
            2 => c.n2 += 1,
            3 => c.n3 += 1,
            _ => c.higher += 1,
        }
    }
    c
}
