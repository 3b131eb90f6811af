//! Named cubic graphs and the apex/compound ladder families.

mod blocks;
pub mod generator;
mod named;

use std::collections::HashMap;

use rayon::prelude::*;

use crate::connectivity::edge_connectivity;
use crate::graph::Graph;
use crate::iso::{are_isomorphic, invariant_key};

pub use blocks::{
    apex, compound, ladder_m, ladder_t, Block, ColoredGraph, FamilyError, FamilySpec, Role,
    PERMUTATIONS_3,
};
pub use generator::{Generator, GeneratorError};
pub use named::{
    counterexample16, fano_blocks, find_four_cycle, heawood, is_connected_cubic, necklace,
    permutation_prism, Sigma,
};

/// One isomorphism class of the family with a spec that builds it.
#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub spec: FamilySpec,
    pub graph: Graph,
}

/// Ordered compositions of `total` into parts of at least `min`.
fn compositions(total: usize, min: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in min..=total {
        for mut rest in compositions(total - first, min) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All `M`-index sequences and `T` indices whose apex assembly has `order`
/// vertices, in a fixed order: `m` ascending, then fewer blocks first.
pub fn block_sequences(order: usize) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    if order < 4 || order % 2 == 1 {
        return out;
    }
    for m in 0..=(order - 4) / 2 {
        // each M_n block contributes 2(n + 2) vertices
        let half = (order - 4 - 2 * m) / 2;
        let mut seqs: Vec<Vec<usize>> = compositions(half, 2)
            .into_iter()
            .map(|c| c.into_iter().map(|p| p - 2).collect())
            .collect();
        seqs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out.extend(seqs.into_iter().map(|ns| (ns, m)));
    }
    out
}

fn all_matchings(t: usize) -> Vec<Vec<[u8; 3]>> {
    let mut out = vec![Vec::new()];
    for _ in 0..t {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                PERMUTATIONS_3.iter().map(move |p| {
                    let mut next = prefix.clone();
                    next.push(*p);
                    next
                })
            })
            .collect();
    }
    out
}

/// Every member of the apex family with block sequence `(M_{ns..}, T_m)`,
/// one per isomorphism class, in matching order.
pub fn members_with_blocks(ns: &[usize], m: usize) -> Result<Vec<FamilyMember>, FamilyError> {
    let specs: Vec<FamilySpec> = all_matchings(ns.len())
        .into_iter()
        .map(|ms| FamilySpec::apex_chain(ns, m, ms))
        .collect();
    let built = specs
        .into_par_iter()
        .map(|spec| {
            let graph = spec.assemble()?;
            Ok(FamilyMember { spec, graph })
        })
        .collect::<Result<Vec<_>, FamilyError>>()?;
    Ok(dedup_members(built.into_iter().filter(|m| valid(&m.graph))))
}

// Cubic and connected; κ' is checked separately by the tests.
fn valid(g: &Graph) -> bool {
    g.is_cubic() && g.is_connected()
}

fn dedup_members(members: impl IntoIterator<Item = FamilyMember>) -> Vec<FamilyMember> {
    let mut buckets: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    let mut out: Vec<FamilyMember> = Vec::new();
    for m in members {
        let bucket = buckets.entry(invariant_key(&m.graph)).or_default();
        if bucket
            .iter()
            .any(|&i| are_isomorphic(&out[i].graph, &m.graph).is_isomorphic())
        {
            continue;
        }
        bucket.push(out.len());
        out.push(m);
    }
    out
}

/// All members of the apex ladder family of the given order, up to
/// isomorphism, each with a spec that assembles it.
pub fn enumerate_family_members(order: usize) -> Result<Vec<FamilyMember>, FamilyError> {
    let mut all = Vec::new();
    for (ns, m) in block_sequences(order) {
        all.extend(members_with_blocks(&ns, m)?);
    }
    Ok(dedup_members(all))
}

/// Graphs of [`enumerate_family_members`].
pub fn enumerate_family(order: usize) -> Result<Vec<Graph>, FamilyError> {
    Ok(enumerate_family_members(order)?
        .into_iter()
        .map(|m| m.graph)
        .collect())
}

/// Validation used by the generators: cubic, connected and `κ' ≥ 3`.
pub fn satisfies_family_invariants(g: &Graph) -> bool {
    valid(g) && edge_connectivity(g) >= 3
}
