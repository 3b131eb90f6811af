//! Cyclic Jacobi diagonalization of dense symmetric matrices.

use super::{SpectralError, SymMatrix};

/// Sweep cap; cyclic Jacobi converges quadratically, far below this.
pub const MAX_SWEEPS: usize = 100;

/// Default convergence threshold on the off-diagonal Frobenius norm.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Eigenvalues closer than this join one multiplicity cluster.
pub const CLUSTER_GAP: f64 = 1e-6;

/// A run of sorted eigenvalues with consecutive gaps ≤ [`CLUSTER_GAP`].
#[derive(Debug, Clone, PartialEq)]
pub struct Cluster {
    pub value: f64,
    pub lo: f64,
    pub hi: f64,
    pub multiplicity: usize,
}

impl Cluster {
    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo - CLUSTER_GAP && x <= self.hi + CLUSTER_GAP
    }
}

#[derive(Debug, Clone)]
pub struct SpectralReport {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[k]` belongs to `eigenvalues[k]`; unit length.
    pub eigenvectors: Vec<Vec<f64>>,
    pub clusters: Vec<Cluster>,
    /// `max |QΛQᵀ − A|`.
    pub residual: f64,
    /// `max |QᵀQ − I|`.
    pub orthogonality: f64,
    pub sweeps: usize,
}

impl SpectralReport {
    /// Multiplicity of the cluster containing `x`, zero if none does.
    pub fn multiplicity_near(&self, x: f64) -> usize {
        self.clusters
            .iter()
            .find(|c| c.contains(x))
            .map_or(0, |c| c.multiplicity)
    }

    /// Largest cluster; ties go to the smaller eigenvalue.
    pub fn largest_cluster(&self) -> Option<&Cluster> {
        self.clusters.iter().rev().max_by_key(|c| c.multiplicity)
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.clusters.iter().map(|c| c.multiplicity).collect()
    }
}

/// Groups ascending values into runs whose consecutive gaps are ≤ `gap`.
pub fn cluster(sorted: &[f64], gap: f64) -> Vec<Cluster> {
    let mut out: Vec<Cluster> = Vec::new();
    let mut sum = 0.0;
    for &x in sorted {
        match out.last_mut() {
            Some(c) if x - c.hi <= gap => {
                c.hi = x;
                c.multiplicity += 1;
                sum += x;
                c.value = sum / c.multiplicity as f64;
            }
            _ => {
                sum = x;
                out.push(Cluster {
                    value: x,
                    lo: x,
                    hi: x,
                    multiplicity: 1,
                });
            }
        }
    }
    out
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Eigen-decomposition by cyclic Jacobi rotations on an owned copy of `m`.
///
/// Iterates until the off-diagonal Frobenius norm drops below `tol` (or
/// below rounding level for the matrix scale, whichever is larger).
pub fn eigen_decomposition(m: &SymMatrix, tol: f64) -> Result<SpectralReport, SpectralError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(SpectralError::InvalidTolerance(tol));
    }
    let n = m.order();
    let mut a = m.as_slice().to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let scale = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = tol.max(4.0 * f64::EPSILON * scale);

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a, n);
        if off < threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(SpectralError::NoConvergence {
                sweeps,
                off_diagonal: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let eigenvectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&i| (0..n).map(|k| v[k * n + i]).collect())
        .collect();

    let mut residual = 0.0f64;
    let mut orthogonality = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let mut recon = 0.0;
            let mut dot = 0.0;
            for k in 0..n {
                recon += eigenvectors[k][i] * eigenvalues[k] * eigenvectors[k][j];
                dot += eigenvectors[i][k] * eigenvectors[j][k];
            }
            residual = residual.max((recon - m.get(i, j)).abs());
            orthogonality = orthogonality.max((dot - if i == j { 1.0 } else { 0.0 }).abs());
        }
    }

    Ok(SpectralReport {
        clusters: cluster(&eigenvalues, CLUSTER_GAP),
        eigenvalues,
        eigenvectors,
        residual,
        orthogonality,
        sweeps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn spectrum(g: &crate::graph::Graph) -> SpectralReport {
        eigen_decomposition(&SymMatrix::adjacency(g), DEFAULT_TOL).unwrap()
    }

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9)
    }

    #[test]
    fn k3_spectrum() {
        let r = spectrum(&named::complete(3));
        assert!(close(&r.eigenvalues, &[-1.0, -1.0, 2.0]));
        assert_eq!(r.multiplicities(), vec![2, 1]);
    }

    #[test]
    fn c4_spectrum() {
        let r = spectrum(&named::cycle(4));
        assert!(close(&r.eigenvalues, &[-2.0, 0.0, 0.0, 2.0]));
        assert_eq!(r.multiplicity_near(0.0), 2);
    }

    #[test]
    fn petersen_spectrum() {
        let r = spectrum(&named::petersen());
        assert_eq!(r.multiplicity_near(1.0), 5);
        assert_eq!(r.multiplicity_near(-2.0), 4);
        assert_eq!(r.multiplicity_near(3.0), 1);
        assert_eq!(r.largest_cluster().unwrap().multiplicity, 5);
        assert!(r.residual < 1e-10 && r.orthogonality < 1e-10);
    }

    #[test]
    fn trivial_orders() {
        let r = eigen_decomposition(&SymMatrix::zeros(0), 1e-12).unwrap();
        assert!(r.eigenvalues.is_empty() && r.clusters.is_empty());
        let r = eigen_decomposition(&SymMatrix::new(1, vec![2.5]).unwrap(), 1e-12).unwrap();
        assert_eq!(r.eigenvalues, vec![2.5]);
    }

    #[test]
    fn bad_tolerance() {
        let m = SymMatrix::zeros(2);
        assert!(matches!(
            eigen_decomposition(&m, 0.0),
            Err(SpectralError::InvalidTolerance(_))
        ));
        assert!(eigen_decomposition(&m, f64::NAN).is_err());
    }

    #[test]
    fn clustering_gap() {
        let c = cluster(&[0.0, 5e-7, 1e-6, 1.0, 1.0 + 2e-6], CLUSTER_GAP);
        assert_eq!(
            c.iter().map(|c| c.multiplicity).collect::<Vec<_>>(),
            vec![3, 1, 1]
        );
    }
}
