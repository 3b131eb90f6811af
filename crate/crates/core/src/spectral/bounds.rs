//! Lower bounds on maximum nullity from the adjacency spectrum and from
//! twin classes.

use std::collections::BTreeMap;

use crate::graph::{bit, Graph};

use super::{eigen_decomposition, SpectralError, SymMatrix, DEFAULT_TOL};

/// Largest eigenvalue multiplicity of the adjacency matrix, with the
/// eigenvalue. `A − λI` lies in S(G) and has nullity equal to that
/// multiplicity, so this bounds M(G) from below.
pub fn max_multiplicity(g: &Graph, tol: f64) -> Result<(usize, f64), SpectralError> {
    if g.order() == 0 {
        return Err(SpectralError::Shape { n: 0, len: 0 });
    }
    let report = eigen_decomposition(&SymMatrix::adjacency(g), tol)?;
    let c = report.largest_cluster().expect("nonempty spectrum");
    Ok((c.multiplicity, c.value))
}

pub fn max_multiplicity_bound(g: &Graph) -> Result<usize, SpectralError> {
    max_multiplicity(g, DEFAULT_TOL).map(|(k, _)| k)
}

/// Multiplicity of 0 in the adjacency spectrum.
pub fn adjacency_nullity(g: &Graph, tol: f64) -> Result<usize, SpectralError> {
    let report = eigen_decomposition(&SymMatrix::adjacency(g), tol)?;
    Ok(report.multiplicity_near(0.0))
}

/// Maximal classes of two or more vertices sharing one open neighborhood,
/// ordered by smallest member.
pub fn twin_classes(g: &Graph) -> Vec<u64> {
    let mut by_nbhd: BTreeMap<u64, u64> = BTreeMap::new();
    for v in 0..g.order() {
        *by_nbhd.entry(g.neighbor_mask(v)).or_insert(0) |= bit(v);
    }
    let mut classes: Vec<u64> = by_nbhd
        .into_values()
        .filter(|c| c.count_ones() >= 2)
        .collect();
    classes.sort_by_key(|c| c.trailing_zeros());
    classes
}

/// Σ (|class| − 1) over twin classes. Twins give identical adjacency rows.
pub fn twin_bound(g: &Graph) -> usize {
    twin_classes(g)
        .iter()
        .map(|c| c.count_ones() as usize - 1)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn multiplicity_examples() {
        assert_eq!(max_multiplicity_bound(&named::complete(5)).unwrap(), 4);
        assert_eq!(max_multiplicity_bound(&named::petersen()).unwrap(), 5);
        let (k, lambda) = max_multiplicity(&named::complete(4), DEFAULT_TOL).unwrap();
        assert_eq!(k, 3);
        assert!((lambda + 1.0).abs() < 1e-9);
        assert!(max_multiplicity_bound(&Graph::empty(0).unwrap()).is_err());
    }

    #[test]
    fn twin_examples() {
        assert_eq!(twin_bound(&named::complete_bipartite(3, 3)), 4);
        assert_eq!(
            twin_classes(&named::complete_bipartite(3, 3)),
            vec![0b000111, 0b111000]
        );
        assert_eq!(twin_bound(&named::path(5)), 0);
        assert_eq!(twin_bound(&named::cycle(4)), 2);
        // isolated vertices share the empty neighborhood
        assert_eq!(twin_bound(&Graph::empty(3).unwrap()), 2);
    }

    #[test]
    fn nullity_examples() {
        assert_eq!(adjacency_nullity(&named::cycle(4), DEFAULT_TOL).unwrap(), 2);
        assert_eq!(
            adjacency_nullity(&named::complete(4), DEFAULT_TOL).unwrap(),
            0
        );
        assert_eq!(adjacency_nullity(&named::path(5), DEFAULT_TOL).unwrap(), 1);
    }
}
