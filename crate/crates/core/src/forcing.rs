//! The color-change rule, derived colorings and exact zero forcing numbers.
//!
//! A black vertex with exactly one white neighbor forces that neighbor
//! black. The derived coloring (closure) does not depend on the order in
//! which forces are applied, so the search only ever needs the final mask.

use std::collections::VecDeque;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{bit, full_mask, Bits, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForcingError {
    #[error("vertex set {mask:#x} contains ids outside 0..{order}")]
    OutOfRange { mask: u64, order: usize },
    #[error("zero forcing number of the empty graph is undefined")]
    EmptyGraph,
    #[error("zero forcing number exceeds budget {budget} (lower bound {lower_bound})")]
    ExceedsBudget { budget: usize, lower_bound: usize },
}

/// One application of the color-change rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Force {
    pub forcer: usize,
    pub forced: usize,
}

/// A black set on a host graph.
#[derive(Debug, Clone, Copy)]
pub struct ColoringState<'g> {
    graph: &'g Graph,
    black: u64,
}

impl<'g> ColoringState<'g> {
    pub fn new(graph: &'g Graph, black: u64) -> Result<Self, ForcingError> {
        check_range(graph, black)?;
        Ok(ColoringState { graph, black })
    }

    pub fn black(&self) -> u64 {
        self.black
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn is_all_black(&self) -> bool {
        self.black == self.graph.vertex_mask()
    }

    /// The unique white neighbor of `u`, if `u` is black and has exactly one.
    pub fn forcing_target(&self, u: usize) -> Option<usize> {
        if self.black & bit(u) == 0 {
            return None;
        }
        let white = self.graph.neighbor_mask(u) & !self.black;
        (white.count_ones() == 1).then(|| white.trailing_zeros() as usize)
    }

    /// Applies `force` if it is legal in the current state.
    pub fn apply(&mut self, force: Force) -> bool {
        if self.forcing_target(force.forcer) == Some(force.forced) {
            self.black |= bit(force.forced);
            true
        } else {
            false
        }
    }
}

/// Forces applied during a closure, in order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ForcingTrace {
    pub forces: Vec<Force>,
}

impl ForcingTrace {
    pub fn len(&self) -> usize {
        self.forces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forces.is_empty()
    }

    /// Replays the trace from `initial`, checking every force was legal when
    /// applied and no vertex was forced twice or was initially black.
    pub fn replay(&self, g: &Graph, initial: u64) -> Option<u64> {
        let mut state = ColoringState::new(g, initial).ok()?;
        for &f in &self.forces {
            if !state.apply(f) {
                return None;
            }
        }
        Some(state.black)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    pub black: u64,
    pub trace: ForcingTrace,
}

fn check_range(g: &Graph, mask: u64) -> Result<(), ForcingError> {
    if mask & !g.vertex_mask() != 0 {
        Err(ForcingError::OutOfRange {
            mask,
            order: g.order(),
        })
    } else {
        Ok(())
    }
}

#[inline]
fn single_white(adj: u64, black: u64) -> Option<u64> {
    let white = adj & !black;
    (white != 0 && white & (white - 1) == 0).then_some(white)
}

/// Derived coloring of `initial`, with the forces that produced it.
pub fn closure(g: &Graph, initial: u64) -> Result<Closure, ForcingError> {
    check_range(g, initial)?;
    let adj = g.neighbor_masks();
    let mut black = initial;
    let mut trace = ForcingTrace::default();
    let mut work: VecDeque<usize> = Bits(black)
        .filter(|&u| single_white(adj[u], black).is_some())
        .collect();
    while let Some(u) = work.pop_front() {
        let Some(w) = single_white(adj[u], black) else {
            continue;
        };
        let v = w.trailing_zeros() as usize;
        black |= w;
        trace.forces.push(Force {
            forcer: u,
            forced: v,
        });
        // v and its black neighbors are the only vertices whose white count moved
        for x in Bits((adj[v] & black) | w) {
            if single_white(adj[x], black).is_some() {
                work.push_back(x);
            }
        }
    }
    Ok(Closure { black, trace })
}

/// Closure on raw neighbor masks; the search hot path.
#[inline]
pub fn closure_mask(adj: &[u64], mut black: u64) -> u64 {
    loop {
        let before = black;
        for u in Bits(black) {
            if let Some(w) = single_white(adj[u], black) {
                black |= w;
            }
        }
        if black == before {
            return black;
        }
    }
}

pub fn is_zero_forcing_set(g: &Graph, set: u64) -> Result<bool, ForcingError> {
    check_range(g, set)?;
    Ok(closure_mask(g.neighbor_masks(), set) == g.vertex_mask())
}

/// A minimum zero forcing set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroForcing {
    pub z: usize,
    pub witness: u64,
}

/// Exact zero forcing number by enumerating k-subsets in increasing k.
///
/// Within one k, subsets are visited in colexicographic order (increasing
/// value of the bitmask), so the reported witness is the colex-least minimum
/// zero forcing set of each component, whatever the thread count.
#[derive(Debug, Clone, Copy, Default)]
pub struct ZeroForcingSolver {
    /// Largest total witness size to try.
    pub budget: Option<usize>,
    /// Skip sets `s` containing a vertex `v` already in the closure of `s \ {v}`.
    pub prune: bool,
    pub parallel: bool,
}

impl ZeroForcingSolver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn budget(mut self, budget: Option<usize>) -> Self {
        self.budget = budget;
        self
    }

    pub fn prune(mut self, on: bool) -> Self {
        self.prune = on;
        self
    }

    pub fn parallel(mut self, on: bool) -> Self {
        self.parallel = on;
        self
    }

    /// Z is additive over components; each component is solved alone.
    pub fn solve(&self, g: &Graph) -> Result<ZeroForcing, ForcingError> {
        if g.order() == 0 {
            return Err(ForcingError::EmptyGraph);
        }
        let parts: Vec<(Graph, Vec<usize>)> = g
            .components()
            .into_iter()
            .map(|c| g.induced_subgraph(c))
            .collect();
        let lower: Vec<usize> = parts.iter().map(|(h, _)| h.min_degree().max(1)).collect();
        let mut total = 0;
        let mut witness = 0u64;
        for (i, (h, map)) in parts.iter().enumerate() {
            let remaining = self.budget.map(|b| b.saturating_sub(total));
            let pending: usize = lower[i + 1..].iter().sum();
            match self.solve_connected(h, lower[i], remaining) {
                Ok(local) => {
                    total += local.count_ones() as usize;
                    witness |= Bits(local).fold(0, |m, v| m | bit(map[v]));
                }
                Err(reached) => {
                    return Err(ForcingError::ExceedsBudget {
                        budget: self.budget.unwrap_or(0),
                        lower_bound: total + reached + pending,
                    })
                }
            }
        }
        Ok(ZeroForcing { z: total, witness })
    }

    /// `Err(k)` means every set below size `k` was refuted and `k` is over budget.
    fn solve_connected(
        &self,
        h: &Graph,
        lower: usize,
        budget: Option<usize>,
    ) -> Result<u64, usize> {
        let n = h.order();
        let adj = h.neighbor_masks();
        let full = full_mask(n);
        for k in lower..=n {
            if budget.is_some_and(|b| k > b) {
                return Err(k);
            }
            if let Some(w) = self.search_k(adj, full, k) {
                return Ok(w);
            }
        }
        unreachable!("the full vertex set always forces")
    }

    fn search_k(&self, adj: &[u64], full: u64, k: usize) -> Option<u64> {
        let n = adj.len();
        // subsets whose largest element is `top` form one contiguous colex block
        let block = |top: usize| -> Option<u64> {
            let high = bit(top);
            KSubsets::new(top, k - 1)
                .map(|low| low | high)
                .find(|&s| self.accepts(adj, full, s))
        };
        if self.parallel {
            (k - 1..n).into_par_iter().find_map_first(block)
        } else {
            (k - 1..n).find_map(block)
        }
    }

    #[inline]
    fn accepts(&self, adj: &[u64], full: u64, s: u64) -> bool {
        if self.prune && Bits(s).any(|v| closure_mask(adj, s & !bit(v)) & bit(v) != 0) {
            return false;
        }
        closure_mask(adj, s) == full
    }
}

/// `k`-subsets of `0..n` as bitmasks in colexicographic order (Gosper's hack).
#[derive(Debug, Clone)]
pub struct KSubsets {
    next: Option<u64>,
    limit: u64,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n <= 63, "subset universe limited to 63 elements");
        let next = (k <= n).then(|| full_mask(k));
        KSubsets {
            next,
            limit: bit(n),
        }
    }
}

impl Iterator for KSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let x = self.next?;
        self.next = if x == 0 {
            None
        } else {
            let c = x & x.wrapping_neg();
            let r = x + c;
            let y = (((r ^ x) >> 2) / c) | r;
            (y < self.limit).then_some(y)
        };
        Some(x)
    }
}

/// Exact Z(G) with an optional cap on the witness size.
pub fn zero_forcing_number(g: &Graph, budget: Option<usize>) -> Result<ZeroForcing, ForcingError> {
    ZeroForcingSolver::new().budget(budget).solve(g)
}
