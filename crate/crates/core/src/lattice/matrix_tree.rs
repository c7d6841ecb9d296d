//! The tensor graph of a class key, its integer Laplacian, and the exact
//! spanning-tree count as a reduced-Laplacian determinant. The determinant
//! is computed by fraction-free Bareiss elimination over the integers;
//! floating point never enters.

use crate::lattice::{DeltaKey, LatticeError};
use crate::network::{Network, TensorId};

/// Simple graph on the tensors of a key: nodes are tensors, edges the
/// nonempty 2-chains among them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorGraph {
    nodes: Vec<TensorId>,
    edges: Vec<(usize, usize)>,
}

impl TensorGraph {
    pub fn over(net: &Network, key: &DeltaKey) -> Result<Self, LatticeError> {
        let nodes: Vec<TensorId> = key.tensors().iter().cloned().collect();
        let mut edges = Vec::new();
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                if net.chain_add(&nodes[i], &nodes[j])?.is_some() {
                    edges.push((i, j));
                }
            }
        }
        Ok(TensorGraph { nodes, edges })
    }

    pub fn nodes(&self) -> &[TensorId] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, node: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(i, j)| i == node || j == node)
            .count()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (0..self.nodes.len()).map(|i| self.degree(i)).collect();
        degs.sort_unstable();
        degs
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let pair = (a.min(b), a.max(b));
        self.edges.contains(&pair)
    }

    pub fn is_connected(&self) -> bool {
        crate::corpus::edge_list_connected(self.nodes.len(), &self.edges)
    }
}

/// Integer Laplacian of a tensor graph: off-diagonal -1 per 2-chain,
/// diagonal the degree. Symmetric with zero row sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Laplacian {
    nodes: Vec<TensorId>,
    matrix: Vec<Vec<i64>>,
}

impl Laplacian {
    pub fn of(graph: &TensorGraph) -> Self {
        let n = graph.nodes.len();
        let mut matrix = vec![vec![0i64; n]; n];
        for &(i, j) in &graph.edges {
            matrix[i][j] = -1;
            matrix[j][i] = -1;
            matrix[i][i] += 1;
            matrix[j][j] += 1;
        }
        debug_assert!(matrix
            .iter()
            .all(|row| row.iter().sum::<i64>() == 0));
        Laplacian {
            nodes: graph.nodes.clone(),
            matrix,
        }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// Determinant of the Laplacian with one row and column removed.
    pub fn reduced_determinant(&self, removed: usize) -> Result<i128, LatticeError> {
        let n = self.order();
        if removed >= n {
            return Err(LatticeError::BadIndex {
                index: removed,
                order: n,
            });
        }
        let reduced: Vec<Vec<i128>> = (0..n)
            .filter(|&i| i != removed)
            .map(|i| {
                (0..n)
                    .filter(|&j| j != removed)
                    .map(|j| self.matrix[i][j] as i128)
                    .collect()
            })
            .collect();
        Ok(bareiss_determinant(reduced))
    }
}

/// Fraction-free Bareiss elimination. Every division is exact.
pub(crate) fn bareiss_determinant(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Number of local minima of the class: the reduced-Laplacian determinant
/// of the matrix-tree theorem, independent of which row and column is
/// removed. A non-inducible key has no spanning trees and counts 0.
pub fn count_minima(
    net: &Network,
    key: &DeltaKey,
    removed_index: usize,
) -> Result<u64, LatticeError> {
    let graph = TensorGraph::over(net, key)?;
    let det = Laplacian::of(&graph).reduced_determinant(removed_index)?;
    debug_assert!(det >= 0, "a reduced Laplacian determinant counts trees");
    Ok(u64::try_from(det).expect("tree count fits in u64 at desk scale"))
}
