//! Recognition of connected cubic graphs with zero forcing number 3.
//!
//! Such graphs are exactly the apex ladder assemblies built in
//! [`crate::families`]. Recognition rejects `κ' < 3` immediately, then
//! matches the input against the (cached) family members of its order.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use thiserror::Error;

use crate::connectivity::min_edge_cut;
use crate::families::{enumerate_family_members, FamilyError, FamilyMember, FamilySpec};
use crate::forcing::{ForcingError, ZeroForcingSolver};
use crate::graph::Graph;
use crate::iso::{are_isomorphic, invariant_key};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognizeError {
    #[error("input is not 3-regular")]
    NotCubic,
    #[error("input is not connected")]
    Disconnected,
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Forcing(#[from] ForcingError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// `mapping[v]` sends input vertex `v` to its image in `spec.assemble()`.
    Member {
        spec: FamilySpec,
        mapping: Vec<usize>,
    },
    /// A zero forcing number of 3 needs edge connectivity at least 3.
    LowEdgeConnectivity { cut: Vec<(usize, usize)> },
    /// Not isomorphic to any family member; its zero forcing number.
    OutsideFamily { z: usize, witness: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognitionResult {
    pub certificate: Certificate,
}

impl RecognitionResult {
    pub fn is_member(&self) -> bool {
        matches!(self.certificate, Certificate::Member { .. })
    }
}

impl fmt::Display for RecognitionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.certificate {
            Certificate::Member { spec, .. } => write!(f, "member  spec={spec}"),
            Certificate::LowEdgeConnectivity { cut } => {
                let edges: Vec<String> = cut.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                write!(
                    f,
                    "non-member  kappa'={}  cut={{{}}}",
                    cut.len(),
                    edges.join(",")
                )
            }
            Certificate::OutsideFamily { z, .. } => write!(f, "non-member  Z={z}"),
        }
    }
}

type Members = Arc<Vec<(Vec<usize>, FamilyMember)>>;

fn cache() -> &'static RwLock<HashMap<usize, Arc<OnceLock<Members>>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<OnceLock<Members>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Family members of `order` with their invariant keys, computed once per
/// order and shared by all callers.
fn members(order: usize) -> Result<Members, FamilyError> {
    let slot = {
        let read = cache().read().expect("family cache poisoned");
        read.get(&order).cloned()
    };
    let slot = match slot {
        Some(s) => s,
        None => {
            let mut write = cache().write().expect("family cache poisoned");
            write.entry(order).or_default().clone()
        }
    };
    if let Some(m) = slot.get() {
        return Ok(m.clone());
    }
    let built = enumerate_family_members(order)?
        .into_iter()
        .map(|m| (invariant_key(&m.graph), m))
        .collect();
    Ok(slot.get_or_init(|| Arc::new(built)).clone())
}

/// Decides whether the connected cubic graph `g` has Z(g) = 3.
pub fn recognize_z3(g: &Graph) -> Result<RecognitionResult, RecognizeError> {
    if !g.is_cubic() {
        return Err(RecognizeError::NotCubic);
    }
    if !g.is_connected() {
        return Err(RecognizeError::Disconnected);
    }
    if let Some(cut) = min_edge_cut(g).filter(|c| c.len() < 3) {
        return Ok(RecognitionResult {
            certificate: Certificate::LowEdgeConnectivity { cut },
        });
    }
    let key = invariant_key(g);
    for (k, m) in members(g.order())?.iter() {
        if *k != key {
            continue;
        }
        if let Some(mapping) = are_isomorphic(g, &m.graph).mapping() {
            return Ok(RecognitionResult {
                certificate: Certificate::Member {
                    spec: m.spec.clone(),
                    mapping: mapping.to_vec(),
                },
            });
        }
    }
    let zf = ZeroForcingSolver::new().parallel(true).solve(g)?;
    Ok(RecognitionResult {
        certificate: Certificate::OutsideFamily {
            z: zf.z,
            witness: zf.witness,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{heawood, Block};
    use crate::graph::named;
    use crate::iso::is_isomorphism;

    #[test]
    fn k4_member() {
        let r = recognize_z3(&named::complete(4)).unwrap();
        assert_eq!(r.to_string(), "member  spec=apex(T0)");
        let Certificate::Member { spec, mapping } = r.certificate else {
            panic!()
        };
        assert_eq!(spec.blocks, vec![Block::T(0)]);
        assert!(is_isomorphism(
            &named::complete(4),
            &spec.assemble().unwrap(),
            &mapping
        ));
    }

    #[test]
    fn prism_member() {
        let prism = Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let r = recognize_z3(&prism).unwrap();
        assert_eq!(r.to_string(), "member  spec=apex(T1)");
    }

    #[test]
    fn non_members() {
        let r = recognize_z3(&heawood()).unwrap();
        assert!(matches!(
            r.certificate,
            Certificate::OutsideFamily { z: 6, .. }
        ));
        let r = recognize_z3(&named::complete_bipartite(3, 3)).unwrap();
        assert!(matches!(
            r.certificate,
            Certificate::OutsideFamily { z: 4, .. }
        ));
    }

    #[test]
    fn input_errors() {
        assert_eq!(
            recognize_z3(&named::cycle(5)),
            Err(RecognizeError::NotCubic)
        );
        let two = named::complete(4)
            .disjoint_union(&named::complete(4))
            .unwrap();
        assert_eq!(recognize_z3(&two), Err(RecognizeError::Disconnected));
    }
}
