//! Prints every connected cubic graph on 4..=MAX vertices (default 12) in
//! graph6, one per line, grouped by order.
//!
//! Loopless cubic multigraphs on n + 2 vertices come from those on n by edge
//! insertion: subdivide two edges (possibly the same one twice) and join the
//! two new vertices. Insertion never creates a bridge, so bridged graphs are
//! built by subdividing one edge in each of two smaller graphs and joining
//! the new vertices. Starting from the 2-vertex theta graph this reaches
//! every simple one; the catalog tests check the counts 1, 2, 5, 19, 85.

use std::collections::HashMap;

use zfcore::iso::{are_isomorphic, invariant_key};
use zfcore::{write_graph6, Graph};

#[derive(Clone)]
struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    /// Every edge subdivided once; isomorphic subdivisions mean isomorphic
    /// multigraphs since original vertices have degree 3 and new ones 2.
    fn subdivision(&self) -> Graph {
        let mut g = Graph::empty(self.n + self.edges.len()).unwrap();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            g.add_edge(a, self.n + i).unwrap();
            g.add_edge(b, self.n + i).unwrap();
        }
        g
    }

    fn simple(&self) -> Option<Graph> {
        let mut g = Graph::empty(self.n).unwrap();
        for &(a, b) in &self.edges {
            g.add_edge(a, b).ok()?;
        }
        Some(g)
    }

    fn insertions(&self) -> Vec<Multigraph> {
        let (x, y) = (self.n, self.n + 1);
        let mut out = Vec::new();
        for i in 0..self.edges.len() {
            for j in i..self.edges.len() {
                let mut edges: Vec<_> = self
                    .edges
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i && k != j)
                    .map(|(_, &e)| e)
                    .collect();
                let (a, b) = self.edges[i];
                if i == j {
                    edges.extend([(a, x), (x, y), (x, y), (y, b)]);
                } else {
                    let (c, d) = self.edges[j];
                    edges.extend([(a, x), (x, b), (c, y), (y, d), (x, y)]);
                }
                out.push(Multigraph {
                    n: self.n + 2,
                    edges,
                });
            }
        }
        out
    }
}

fn bridge_join(g: &Multigraph, h: &Multigraph) -> Vec<Multigraph> {
    let (x, y) = (g.n + h.n, g.n + h.n + 1);
    let mut out = Vec::new();
    for i in 0..g.edges.len() {
        for j in 0..h.edges.len() {
            let mut edges: Vec<_> = g
                .edges
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, &e)| e)
                .collect();
            edges.extend(
                h.edges
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, &(a, b))| (a + g.n, b + g.n)),
            );
            let (a, b) = g.edges[i];
            let (c, d) = h.edges[j];
            edges.extend([(a, x), (x, b), (c + g.n, y), (y, d + g.n), (x, y)]);
            out.push(Multigraph { n: x + 2, edges });
        }
    }
    out
}

fn dedup(graphs: Vec<Multigraph>) -> Vec<Multigraph> {
    let mut buckets: HashMap<Vec<usize>, Vec<Graph>> = HashMap::new();
    let mut out = Vec::new();
    for m in graphs {
        let s = m.subdivision();
        let bucket = buckets.entry(invariant_key(&s)).or_default();
        if bucket.iter().any(|t| are_isomorphic(t, &s).is_isomorphic()) {
            continue;
        }
        bucket.push(s);
        out.push(m);
    }
    out
}

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .map_or(12, |s| s.parse().expect("order"));
    // levels[k] holds the multigraphs on 2k + 2 vertices
    let mut levels = vec![vec![Multigraph {
        n: 2,
        edges: vec![(0, 1); 3],
    }]];
    while 2 * levels.len() + 2 <= max {
        let k = levels.len();
        let mut next: Vec<Multigraph> = levels[k - 1]
            .iter()
            .flat_map(Multigraph::insertions)
            .collect();
        // sides on 2a + 2 and 2b + 2 vertices with a + b = k − 2
        if k >= 2 {
            for a in 0..=(k - 2) / 2 {
                let b = k - 2 - a;
                for (i, g) in levels[a].iter().enumerate() {
                    for h in &levels[b][if a == b { i } else { 0 }..] {
                        next.extend(bridge_join(g, h));
                    }
                }
            }
        }
        let level = dedup(next);
        let simple: Vec<Graph> = level.iter().filter_map(Multigraph::simple).collect();
        eprintln!(
            "n={}: {} multigraphs, {} simple",
            level[0].n,
            level.len(),
            simple.len()
        );
        for g in &simple {
            println!("{}", write_graph6(g).unwrap());
        }
        levels.push(level);
    }
}
