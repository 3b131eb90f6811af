//! Independent oracles and random graph sources shared by the integration
//! tests. Nothing here calls the solver code it is used to check.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zfcore::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|v| g.neighbors(v).collect()).collect()
}

/// Color-change rule applied until nothing changes, on plain lists.
pub fn naive_closure(adj: &[Vec<usize>], start: &[bool]) -> Vec<bool> {
    let mut black = start.to_vec();
    loop {
        let mut changed = false;
        for u in 0..adj.len() {
            if !black[u] {
                continue;
            }
            let white: Vec<usize> = adj[u].iter().copied().filter(|&w| !black[w]).collect();
            if white.len() == 1 {
                black[white[0]] = true;
                changed = true;
            }
        }
        if !changed {
            return black;
        }
    }
}

/// Smallest zero forcing set size by trying every subset.
pub fn naive_z(g: &Graph) -> usize {
    let n = g.order();
    let adj = adjacency_lists(g);
    let mut best = n;
    for mask in 0u64..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let start: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        if naive_closure(&adj, &start).iter().all(|&b| b) {
            best = size;
        }
    }
    best
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// A random spanning tree plus extra random edges, so always connected.
pub fn random_connected(rng: &mut impl Rng, n: usize, extra: usize) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).unwrap();
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Uniform random connected cubic graph by the pairing model with
/// rejection; `n` must be even and at least 4.
pub fn random_cubic(rng: &mut impl Rng, n: usize) -> Graph {
    assert!(n >= 4 && n.is_multiple_of(2));
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(rng);
        let mut g = Graph::empty(n).unwrap();
        let ok = points
            .chunks(2)
            .all(|pair| g.add_edge(pair[0], pair[1]).is_ok());
        if ok && g.is_connected() {
            return g;
        }
    }
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Every permutation of `0..n`, for brute-force isomorphism checks.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return false;
    }
    let edges = g.edges();
    permutations(n)
        .iter()
        .any(|p| edges.iter().all(|&(u, v)| h.has_edge(p[u], p[v])))
}

/// All graphs on `n` vertices up to isomorphism, by adding a vertex with
/// every neighborhood to each graph on `n − 1` vertices and deduplicating.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0).unwrap()];
    for k in 1..=n {
        let mut next = Vec::new();
        for g in &level {
            for nbhd in 0u64..(1u64 << (k - 1)) {
                let mut h = g.clone();
                let v = h.add_vertex().unwrap();
                for u in 0..k - 1 {
                    if nbhd >> u & 1 == 1 {
                        h.add_edge(u, v).unwrap();
                    }
                }
                next.push(h);
            }
        }
        level = zfcore::iso::dedup_isomorphic(next);
    }
    level
}

/// Rank of an integer matrix by fraction-free elimination.
pub fn exact_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let (m, n) = (a.len(), a.first().map_or(0, |r| r.len()));
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..n {
        let Some(pivot) = (rank..m).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..m {
            for c in col + 1..n {
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
        if rank == m {
            break;
        }
    }
    rank
}

pub fn catalog() -> Vec<Graph> {
    let text = include_str!("../data/cubic_connected_4_12.g6");
    zfcore::graph6::parse_catalog(text).expect("catalog parses")
}
