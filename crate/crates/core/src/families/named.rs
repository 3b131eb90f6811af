//! Fixed cubic constructions: permutation prisms, the Heawood graph, the
//! order-16 graph with Z = 8, and twin-bead necklaces.

use std::fmt;

use crate::graph::{Bits, Graph};
use crate::spectral::twin_classes;

use super::FamilyError;

/// Spoke permutation of a [`permutation_prism`], on `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sigma {
    Identity,
    Transposition(usize, usize),
}

impl Sigma {
    fn apply(self, k: usize) -> usize {
        match self {
            Sigma::Identity => k,
            Sigma::Transposition(i, j) if k == i => j,
            Sigma::Transposition(i, j) if k == j => i,
            Sigma::Transposition(..) => k,
        }
    }
}

impl fmt::Display for Sigma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sigma::Identity => write!(f, "id"),
            Sigma::Transposition(i, j) => write!(f, "({i} {j})"),
        }
    }
}

/// `(C_n)_σ`: outer cycle `u_1..u_n` (ids `0..n`), inner cycle `v_1..v_n`
/// (ids `n..2n`), spokes `u_k-v_σ(k)`.
pub fn permutation_prism(n: usize, sigma: Sigma) -> Result<Graph, FamilyError> {
    if n < 4 {
        return Err(FamilyError::InvalidParameter(format!(
            "prism needs n >= 4, got {n}"
        )));
    }
    if let Sigma::Transposition(i, j) = sigma {
        if i == j || !(1..=n).contains(&i) || !(1..=n).contains(&j) {
            return Err(FamilyError::InvalidParameter(format!(
                "({i} {j}) is not a transposition of 1..={n}"
            )));
        }
    }
    let mut g = Graph::empty(2 * n)?;
    for k in 0..n {
        g.add_edge(k, (k + 1) % n)?;
        g.add_edge(n + k, n + (k + 1) % n)?;
    }
    for k in 1..=n {
        g.add_edge(k - 1, n + sigma.apply(k) - 1)?;
    }
    Ok(g)
}

/// Point–block incidence graph of the Fano plane.
///
/// Points are residues `0..7` (ids `0..7`); block `j` is `{j+1, j+2, j+4}`
/// mod 7 (id `7 + j`), the cyclic development of a (7, 3, 1) difference set.
pub fn heawood() -> Graph {
    let mut g = Graph::empty(14).expect("order 14");
    for j in 0..7 {
        for d in [1, 2, 4] {
            g.add_edge((j + d) % 7, 7 + j).expect("fresh incidence");
        }
    }
    g
}

/// The Fano blocks used by [`heawood`], as point sets.
pub fn fano_blocks() -> Vec<[usize; 3]> {
    (0..7)
        .map(|j| [(j + 1) % 7, (j + 2) % 7, (j + 4) % 7])
        .collect()
}

/// A cubic graph of order 16 with zero forcing number 8.
///
/// Root `0` with branch vertices `1, 2, 3`; each branch vertex is joined to
/// the two degree-2 vertices of a K4-minus-an-edge gadget:
/// `1 → {4, 5 | 10, 11}`, `2 → {6, 7 | 12, 13}`, `3 → {8, 9 | 14, 15}`.
pub fn counterexample16() -> Graph {
    const EDGES: [(usize, usize); 24] = [
        (1, 2),
        (1, 3),
        (1, 4),
        (5, 2),
        (6, 2),
        (7, 3),
        (8, 3),
        (9, 4),
        (10, 4),
        (11, 5),
        (12, 5),
        (12, 11),
        (6, 11),
        (6, 12),
        (7, 13),
        (7, 14),
        (13, 14),
        (8, 14),
        (8, 13),
        (9, 15),
        (9, 16),
        (15, 16),
        (15, 10),
        (16, 10),
    ];
    let edges: Vec<_> = EDGES.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Graph::from_edges(16, &edges).expect("valid edge list")
}

/// Cyclic necklace of `beads` six-vertex beads.
///
/// Bead `i` occupies ids `6i..6i+6` as `entry, a, b, c, d, exit`: the entry
/// is joined to `a, b`; both of `a, b` to both of `c, d`; `c, d` to the exit;
/// the exit to the next bead's entry. `{a, b}` and `{c, d}` are twin pairs.
pub fn necklace(beads: usize) -> Result<Graph, FamilyError> {
    if beads < 2 {
        return Err(FamilyError::InvalidParameter(format!(
            "necklace needs >= 2 beads, got {beads}"
        )));
    }
    let n = 6 * beads;
    let mut g = Graph::empty(n)?;
    for i in 0..beads {
        let [e, a, b, c, d, x] = std::array::from_fn(|k| 6 * i + k);
        for (u, v) in [
            (e, a),
            (e, b),
            (a, c),
            (a, d),
            (b, c),
            (b, d),
            (c, x),
            (d, x),
        ] {
            g.add_edge(u, v)?;
        }
        g.add_edge(x, (6 * (i + 1)) % n)?;
    }
    let pairs = twin_classes(&g)
        .iter()
        .filter(|c| c.count_ones() == 2)
        .count();
    let larger = twin_classes(&g).iter().any(|c| c.count_ones() > 2);
    if pairs != 2 * beads || larger {
        return Err(FamilyError::Invalid(format!(
            "necklace({beads}) has {pairs} twin pairs, expected {}",
            2 * beads
        )));
    }
    Ok(g)
}

/// True when every vertex of `g` has degree 3 and `g` is connected.
pub fn is_connected_cubic(g: &Graph) -> bool {
    g.is_cubic() && g.is_connected()
}

/// Vertices of some 4-cycle of `g`, lowest first, if one exists.
pub fn find_four_cycle(g: &Graph) -> Option<u64> {
    let n = g.order();
    for a in 0..n {
        for c in a + 1..n {
            let common = g.neighbor_mask(a) & g.neighbor_mask(c);
            if common.count_ones() >= 2 {
                let mut it = Bits(common);
                let (b, d) = (it.next()?, it.next()?);
                return Some(1 << a | 1 << b | 1 << c | 1 << d);
            }
        }
    }
    None
}
