//! Exact zero forcing numbers, cubic graph families with small zero forcing
//! number, and lower bounds that pin down the maximum nullity M(G).
//!
//! All graphs have at most 64 vertices and vertex sets are `u64` bitmasks.

pub mod connectivity;
pub mod families;
pub mod forcing;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod recognizer;
pub mod spantree;
pub mod spectral;

pub use connectivity::edge_connectivity;
pub use forcing::{
    closure, is_zero_forcing_set, zero_forcing_number, ZeroForcing, ZeroForcingSolver,
};
pub use graph::Graph;
pub use graph6::{parse_graph6, write_graph6};
pub use iso::{are_isomorphic, IsoWitness};
