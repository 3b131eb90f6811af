//! Complete-graph minor models: verification and a bounded search.
//!
//! A `K_k` model is `k` disjoint, nonempty, connected branch sets that are
//! pairwise joined by at least one edge. Contracting each set yields `K_k`.

use std::fmt;

use crate::graph::{bit, format_set, Bits, Graph};

/// Largest host order [`find_complete_minor`] will search.
pub const MINOR_SEARCH_MAX_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorModel {
    pub branch_sets: Vec<u64>,
    /// Order of the complete graph being modelled.
    pub target: usize,
}

/// The first condition a model fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinorViolation {
    WrongCount { expected: usize, found: usize },
    Empty(usize),
    OutOfRange(usize),
    Disconnected(usize),
    Overlap(usize, usize),
    NotAdjacent(usize, usize),
}

impl fmt::Display for MinorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorViolation::WrongCount { expected, found } => {
                write!(f, "expected {expected} branch sets, found {found}")
            }
            MinorViolation::Empty(i) => write!(f, "branch set {i} is empty"),
            MinorViolation::OutOfRange(i) => write!(f, "branch set {i} names a missing vertex"),
            MinorViolation::Disconnected(i) => write!(f, "branch set {i} is not connected"),
            MinorViolation::Overlap(i, j) => write!(f, "branch sets {i} and {j} overlap"),
            MinorViolation::NotAdjacent(i, j) => {
                write!(f, "no edge between branch sets {i} and {j}")
            }
        }
    }
}

impl MinorModel {
    /// The lower bound a verified model licenses: M(G) ≥ ξ(K_k) = k − 1.
    pub fn nullity_bound(&self) -> usize {
        self.target.saturating_sub(1)
    }
}

impl fmt::Display for MinorModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: Vec<String> = self.branch_sets.iter().map(|&s| format_set(s)).collect();
        write!(f, "K{}[{}]", self.target, sets.join(" "))
    }
}

fn touches(g: &Graph, a: u64, b: u64) -> bool {
    Bits(a).any(|v| g.neighbor_mask(v) & b != 0)
}

/// Checks every model condition against `g`, reporting the first failure.
pub fn check_minor_model(g: &Graph, model: &MinorModel) -> Result<(), MinorViolation> {
    let sets = &model.branch_sets;
    if sets.len() != model.target {
        return Err(MinorViolation::WrongCount {
            expected: model.target,
            found: sets.len(),
        });
    }
    for (i, &s) in sets.iter().enumerate() {
        if s == 0 {
            return Err(MinorViolation::Empty(i));
        }
        if s & !g.vertex_mask() != 0 {
            return Err(MinorViolation::OutOfRange(i));
        }
        if !g.induces_connected(s) {
            return Err(MinorViolation::Disconnected(i));
        }
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i] & sets[j] != 0 {
                return Err(MinorViolation::Overlap(i, j));
            }
        }
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if !touches(g, sets[i], sets[j]) {
                return Err(MinorViolation::NotAdjacent(i, j));
            }
        }
    }
    Ok(())
}

pub fn verify_minor_model(g: &Graph, model: &MinorModel) -> bool {
    check_minor_model(g, model).is_ok()
}

/// Connected vertex sets of `g`, each listed once, smallest sets first.
fn connected_sets(g: &Graph) -> Vec<u64> {
    let mut out = Vec::new();
    // grow each set only by vertices larger than its minimum, and never by a
    // vertex already excluded on this branch, so every set appears once
    fn grow(g: &Graph, set: u64, frontier: u64, excluded: u64, out: &mut Vec<u64>) {
        out.push(set);
        let mut excluded = excluded;
        for v in Bits(frontier & !excluded) {
            let next = set | bit(v);
            let nf = (frontier | g.neighbor_mask(v)) & !next & !excluded & !bit(v);
            grow(g, next, nf, excluded, out);
            excluded |= bit(v);
        }
    }
    for root in 0..g.order() {
        let below = bit(root) - 1;
        grow(
            g,
            bit(root),
            g.neighbor_mask(root) & !below,
            below | bit(root),
            &mut out,
        );
    }
    out.sort_by_key(|s| (s.count_ones(), *s));
    out
}

/// Searches for a `K_k` model in a graph of order at most
/// [`MINOR_SEARCH_MAX_ORDER`]. Returns `None` when none exists or the graph
/// is too large to search.
pub fn find_complete_minor(g: &Graph, k: usize) -> Option<MinorModel> {
    if k == 0 || g.order() > MINOR_SEARCH_MAX_ORDER || g.order() < k {
        return None;
    }
    // every branch set needs an edge to each of the other k − 1 sets
    let candidates: Vec<u64> = connected_sets(g)
        .into_iter()
        .filter(|&s| {
            let out = Bits(s).fold(0u64, |m, v| m | g.neighbor_mask(v)) & !s;
            out.count_ones() as usize >= k - 1
        })
        .collect();
    let mut chosen = Vec::with_capacity(k);
    if search(g, &candidates, k, 0, 0, &mut chosen) {
        Some(MinorModel {
            branch_sets: chosen,
            target: k,
        })
    } else {
        None
    }
}

// Branch sets are chosen with strictly increasing minimum vertex.
fn search(
    g: &Graph,
    cands: &[u64],
    k: usize,
    used: u64,
    min_floor: u64,
    chosen: &mut Vec<u64>,
) -> bool {
    if chosen.len() == k {
        return true;
    }
    let remaining = (k - chosen.len()) as u32;
    if (g.vertex_mask() & !used).count_ones() < remaining {
        return false;
    }
    for &s in cands {
        let low = s & s.wrapping_neg();
        if low <= min_floor || s & used != 0 {
            continue;
        }
        if !chosen.iter().all(|&c| touches(g, c, s)) {
            continue;
        }
        chosen.push(s);
        if search(g, cands, k, used | s, low, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn singletons(k: usize) -> MinorModel {
        MinorModel {
            branch_sets: (0..k).map(bit).collect(),
            target: k,
        }
    }

    #[test]
    fn k5_singletons() {
        assert!(verify_minor_model(&named::complete(5), &singletons(5)));
    }

    #[test]
    fn violations() {
        let g = named::cycle(6);
        let m = MinorModel {
            branch_sets: vec![bit(0) | bit(2), bit(1), bit(3)],
            target: 3,
        };
        assert_eq!(
            check_minor_model(&g, &m),
            Err(MinorViolation::Disconnected(0))
        );
        let m = MinorModel {
            branch_sets: vec![bit(0), bit(1)],
            target: 3,
        };
        assert!(matches!(
            check_minor_model(&g, &m),
            Err(MinorViolation::WrongCount { .. })
        ));
        let m = MinorModel {
            branch_sets: vec![bit(0), 0, bit(2)],
            target: 3,
        };
        assert_eq!(check_minor_model(&g, &m), Err(MinorViolation::Empty(1)));
        let m = MinorModel {
            branch_sets: vec![bit(0) | bit(1), bit(1) | bit(2)],
            target: 2,
        };
        assert_eq!(
            check_minor_model(&g, &m),
            Err(MinorViolation::Overlap(0, 1))
        );
        let m = MinorModel {
            branch_sets: vec![bit(0), bit(3)],
            target: 2,
        };
        assert_eq!(
            check_minor_model(&g, &m),
            Err(MinorViolation::NotAdjacent(0, 1))
        );
        let m = MinorModel {
            branch_sets: vec![bit(9)],
            target: 1,
        };
        assert_eq!(
            check_minor_model(&g, &m),
            Err(MinorViolation::OutOfRange(0))
        );
        // C6 contracts to a triangle
        let m = MinorModel {
            branch_sets: vec![bit(0) | bit(1), bit(2) | bit(3), bit(4) | bit(5)],
            target: 3,
        };
        assert!(verify_minor_model(&g, &m));
    }

    #[test]
    fn connected_sets_enumerated_once() {
        // P3: {0},{1},{2},{0,1},{1,2},{0,1,2}
        assert_eq!(connected_sets(&named::path(3)).len(), 6);
        // K4: all 15 nonempty subsets are connected
        assert_eq!(connected_sets(&named::complete(4)).len(), 15);
        // C5: 5 singletons, 5 per length 2..4, 1 whole
        assert_eq!(connected_sets(&named::cycle(5)).len(), 5 * 4 + 1);
    }

    #[test]
    fn search_finds_and_refutes() {
        let m = find_complete_minor(&named::petersen(), 5).unwrap();
        assert!(verify_minor_model(&named::petersen(), &m));
        assert!(find_complete_minor(&named::cycle(8), 4).is_none());
        assert!(find_complete_minor(&named::complete_bipartite(3, 3), 4).is_some());
        assert!(find_complete_minor(&named::complete_bipartite(3, 3), 5).is_none());
    }
}
