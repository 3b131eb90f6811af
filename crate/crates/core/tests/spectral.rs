mod common;

use nalgebra::{DMatrix, SymmetricEigen};
use rand::Rng;
use zfcore::families::{heawood, necklace};
use zfcore::graph::named;
use zfcore::spectral::{
    cluster, eigen_decomposition, find_complete_minor, max_multiplicity, twin_bound, twin_classes,
    verify_minor_model, SpectralError, SymMatrix, CLUSTER_GAP, DEFAULT_TOL,
};
use zfcore::{zero_forcing_number, Graph};

fn random_symmetric(rng: &mut impl Rng, n: usize) -> SymMatrix {
    let mut m = SymMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            let x = rng.gen_range(-5.0..5.0);
            m.set(i, j, x);
            m.set(j, i, x);
        }
    }
    m
}

fn oracle_eigenvalues(m: &SymMatrix) -> Vec<f64> {
    let n = m.order();
    let d = DMatrix::from_row_slice(n, n, m.as_slice());
    let mut ev: Vec<f64> = SymmetricEigen::new(d).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

#[test]
fn random_matrices_match_oracle() {
    let mut rng = common::rng(21);
    for _ in 0..100 {
        let n = rng.gen_range(1..=20);
        let m = random_symmetric(&mut rng, n);
        let r = eigen_decomposition(&m, DEFAULT_TOL).unwrap();
        assert!(r.residual <= 1e-8, "residual {}", r.residual);
        assert!(r.orthogonality <= 1e-8, "orthogonality {}", r.orthogonality);
        for (a, b) in r.eigenvalues.iter().zip(oracle_eigenvalues(&m)) {
            assert!((a - b).abs() < 1e-8, "{a} vs {b}");
        }
        // each pair satisfies A v = λ v
        for (lambda, v) in r.eigenvalues.iter().zip(&r.eigenvectors) {
            for i in 0..n {
                let av: f64 = (0..n).map(|j| m.get(i, j) * v[j]).sum();
                assert!((av - lambda * v[i]).abs() < 1e-8);
            }
        }
    }
}

#[test]
fn shift_identity() {
    // mult(A, λ) equals the nullity of A − λI
    let mut rng = common::rng(22);
    for _ in 0..50 {
        let n = rng.gen_range(2..=16);
        let g = common::random_graph(&mut rng, n, 0.4);
        let a = SymMatrix::adjacency(&g);
        let r = eigen_decomposition(&a, DEFAULT_TOL).unwrap();
        for c in &r.clusters {
            let shifted = eigen_decomposition(&a.shifted(c.value), DEFAULT_TOL).unwrap();
            assert_eq!(shifted.multiplicity_near(0.0), c.multiplicity);
        }
        let total: usize = r.clusters.iter().map(|c| c.multiplicity).sum();
        assert_eq!(total, n);
    }
}

#[test]
fn clusters_stable_across_tolerances() {
    let graphs = [
        named::petersen(),
        heawood(),
        necklace(3).unwrap(),
        named::complete(7),
    ];
    for g in &graphs {
        let a = SymMatrix::adjacency(g);
        let reference = eigen_decomposition(&a, 1e-12).unwrap().multiplicities();
        for tol in [1e-10, 1e-9, 1e-8, 1e-7] {
            assert_eq!(
                eigen_decomposition(&a, tol).unwrap().multiplicities(),
                reference
            );
        }
    }
}

#[test]
fn named_spectra() {
    let r = eigen_decomposition(&SymMatrix::adjacency(&heawood()), DEFAULT_TOL).unwrap();
    let s2 = 2f64.sqrt();
    let expected = [(-3.0, 1), (-s2, 6), (s2, 6), (3.0, 1)];
    assert_eq!(r.clusters.len(), 4);
    for (c, (value, mult)) in r.clusters.iter().zip(expected) {
        assert!((c.value - value).abs() < 1e-9);
        assert_eq!(c.multiplicity, mult);
    }
    let (k, _) = max_multiplicity(&named::complete_bipartite(3, 3), DEFAULT_TOL).unwrap();
    assert_eq!(k, 4);
}

#[test]
fn clustering_edges() {
    assert_eq!(cluster(&[], CLUSTER_GAP), vec![]);
    let c = cluster(
        &[1.0, 1.0 + 0.9 * CLUSTER_GAP, 1.0 + 1.8 * CLUSTER_GAP],
        CLUSTER_GAP,
    );
    assert_eq!(c.len(), 1);
    assert_eq!(c[0].multiplicity, 3);
}

#[test]
fn rejects_bad_matrices() {
    assert!(matches!(
        SymMatrix::new(2, vec![0.0, 1.0, 2.0, 0.0]),
        Err(SpectralError::NotSymmetric { .. })
    ));
    assert!(matches!(
        SymMatrix::new(2, vec![0.0; 3]),
        Err(SpectralError::Shape { .. })
    ));
    assert!(matches!(
        SymMatrix::new(1, vec![f64::NAN]),
        Err(SpectralError::NonFinite { .. })
    ));
}

/// Random matrix in S(G): ±1..±3 on edges, small integers on the diagonal.
fn random_pattern_matrix(rng: &mut impl Rng, g: &Graph) -> Vec<Vec<i64>> {
    let n = g.order();
    let mut a = vec![vec![0i64; n]; n];
    for (u, v) in g.edges() {
        let mut x = rng.gen_range(1..=3);
        if rng.gen_bool(0.5) {
            x = -x;
        }
        a[u][v] = x;
        a[v][u] = x;
    }
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = rng.gen_range(-2..=2);
    }
    a
}

#[test]
#[allow(clippy::needless_range_loop)]
fn twin_bound_is_sound() {
    // copying one twin's row to the others gives a matrix in S(G) whose
    // nullity reaches the bound; the bound also never exceeds Z
    let mut rng = common::rng(23);
    for _ in 0..200 {
        let n = rng.gen_range(2..=10);
        let g = common::random_graph(&mut rng, n, 0.5);
        let tb = twin_bound(&g);
        assert!(tb <= zero_forcing_number(&g, None).unwrap().z);
        let mut a = random_pattern_matrix(&mut rng, &g);
        for class in twin_classes(&g) {
            let rep = class.trailing_zeros() as usize;
            for v in (0..n).filter(|&v| class >> v & 1 == 1) {
                for w in 0..n {
                    if class >> w & 1 == 0 {
                        a[v][w] = a[rep][w];
                        a[w][v] = a[rep][w];
                    }
                }
                a[v][v] = 0;
            }
        }
        let rank = common::exact_rank(&a);
        assert!(n - rank >= tb, "nullity {} < twin bound {tb}", n - rank);
    }
}

#[test]
fn minor_search_and_verification() {
    let k5_in_petersen = find_complete_minor(&named::petersen(), 5).unwrap();
    assert!(verify_minor_model(&named::petersen(), &k5_in_petersen));
    assert!(find_complete_minor(&named::petersen(), 6).is_none());
    // planar graphs have no K5 minor
    let cube = Graph::from_edges(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ],
    )
    .unwrap();
    assert!(find_complete_minor(&cube, 5).is_none());
    assert!(find_complete_minor(&cube, 4).is_some());
}
