use crate::graph::Graph;

use super::SpectralError;

/// Entries this far apart still count as symmetric.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self, SpectralError> {
        if data.len() != n * n {
            return Err(SpectralError::Shape { n, len: data.len() });
        }
        if let Some(i) = data.iter().position(|x| !x.is_finite()) {
            return Err(SpectralError::NonFinite {
                row: i / n.max(1),
                col: i % n.max(1),
            });
        }
        for i in 0..n {
            for j in i + 1..n {
                if (data[i * n + j] - data[j * n + i]).abs() > SYMMETRY_TOL {
                    return Err(SpectralError::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymMatrix { n, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, SpectralError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(SpectralError::Shape { n, len: r.len() });
            }
            data.extend_from_slice(r);
        }
        SymMatrix::new(n, data)
    }

    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// 0/1 adjacency matrix of `g`.
    pub fn adjacency(g: &Graph) -> Self {
        let n = g.order();
        let mut m = SymMatrix::zeros(n);
        for (u, v) in g.edges() {
            m.data[u * n + v] = 1.0;
            m.data[v * n + u] = 1.0;
        }
        m
    }

    /// `self − λI`; same off-diagonal pattern, hence the same graph.
    pub fn shifted(&self, lambda: f64) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            m.data[i * self.n + i] -= lambda;
        }
        m
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, x: f64) {
        self.data[i * self.n + j] = x;
        self.data[j * self.n + i] = x;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Graph of the off-diagonal nonzero pattern.
    pub fn pattern(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("order within graph limits");
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j) != 0.0 {
                    g.add_edge(i, j).expect("fresh edge");
                }
            }
        }
        g
    }
}
