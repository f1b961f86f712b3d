//! Validated weighted graphs and the Schrödinger operator built on them.

use thiserror::Error;

use crate::dsu::DisjointSets;

/// Errors raised while validating raw graph input or applying the operator.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge {{{u}, {v}}} weight {weight} is not a positive finite real")]
    NonPositiveWeight { u: usize, v: usize, weight: f64 },
    #[error("potential at vertex {vertex} is {value}, which is not finite")]
    NonFinitePotential { vertex: usize, value: f64 },
    #[error("graph is not connected ({components} components)")]
    Disconnected { components: usize },
    #[error("expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// An undirected edge `{u, v}` with `u < v` and weight `b(u,v) > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

/// A finite, simple, loop-free, connected graph with positive edge weights
/// and a real potential on the vertices.
///
/// Vertices are the dense integers `0..n`. The graph is validated on
/// construction; every value of this type satisfies the invariants, so
/// downstream code never re-checks them.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
    potential: Vec<f64>,
    neighbors: Vec<Vec<(usize, f64)>>,
}

impl WeightedGraph {
    /// Validates raw input (vertex count, edge list, optional potential) and
    /// builds a graph. Edges may be given in either endpoint order.
    pub fn new(
        n: usize,
        edges: &[(usize, usize, f64)],
        potential: Option<Vec<f64>>,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let potential = match potential {
            Some(p) if p.len() != n => {
                return Err(GraphError::DimensionMismatch {
                    expected: n,
                    got: p.len(),
                })
            }
            Some(p) => p,
            None => vec![0.0; n],
        };
        for (vertex, &value) in potential.iter().enumerate() {
            if !value.is_finite() {
                return Err(GraphError::NonFinitePotential { vertex, value });
            }
        }

        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b, w) in edges {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            let (u, v) = (a.min(b), a.max(b));
            if !w.is_finite() || w <= 0.0 {
                return Err(GraphError::NonPositiveWeight { u, v, weight: w });
            }
            normalized.push(Edge { u, v, weight: w });
        }
        normalized.sort_by_key(|e| (e.u, e.v));
        for pair in normalized.windows(2) {
            if (pair[0].u, pair[0].v) == (pair[1].u, pair[1].v) {
                return Err(GraphError::DuplicateEdge {
                    u: pair[0].u,
                    v: pair[0].v,
                });
            }
        }

        let mut ds = DisjointSets::new(n);
        for e in &normalized {
            ds.union(e.u, e.v);
        }
        if ds.components() != 1 {
            return Err(GraphError::Disconnected {
                components: ds.components(),
            });
        }

        let mut neighbors = vec![Vec::new(); n];
        for e in &normalized {
            neighbors[e.u].push((e.v, e.weight));
            neighbors[e.v].push((e.u, e.weight));
        }

        Ok(WeightedGraph {
            n,
            edges: normalized,
            potential,
            neighbors,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted by `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn potential(&self) -> &[f64] {
        &self.potential
    }

    /// Neighbors of `x` as `(vertex, weight)` pairs, sorted by vertex.
    pub fn neighbors(&self, x: usize) -> &[(usize, f64)] {
        &self.neighbors[x]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.neighbors[a].iter().any(|&(y, _)| y == b)
    }

    /// Assembles the dense operator matrix
    /// `H[x][x] = Σ_{y~x} b(x,y) + v(x)`, `H[x][y] = -b(x,y)` for `x ~ y`.
    pub fn operator(&self) -> OperatorMatrix {
        let n = self.n;
        let mut data = vec![0.0; n * n];
        for x in 0..n {
            let mut diag = self.potential[x];
            for &(_, w) in &self.neighbors[x] {
                diag += w;
            }
            data[x * n + x] = diag;
        }
        for e in &self.edges {
            data[e.u * n + e.v] = -e.weight;
            data[e.v * n + e.u] = -e.weight;
        }
        OperatorMatrix { n, data }
    }

    /// Applies the operator edge-wise without materializing the matrix:
    /// `(Hf)(x) = Σ_{y~x} b(x,y)[f(x) - f(y)] + v(x) f(x)`.
    pub fn apply(&self, f: &[f64]) -> Result<Vec<f64>, GraphError> {
        self.check_len(f)?;
        let mut out = vec![0.0; self.n];
        for x in 0..self.n {
            let mut acc = self.potential[x] * f[x];
            for &(y, w) in &self.neighbors[x] {
                acc += w * (f[x] - f[y]);
            }
            out[x] = acc;
        }
        Ok(out)
    }

    /// The symmetrized quadratic form
    /// `½ Σ_{x,y} b(x,y)(f(x) - f(y))² + Σ_x v(x) f(x)²`, equal to `⟨Hf, f⟩`.
    pub fn quadratic_form(&self, f: &[f64]) -> Result<f64, GraphError> {
        self.check_len(f)?;
        let mut acc = 0.0;
        for e in &self.edges {
            let d = f[e.u] - f[e.v];
            acc += e.weight * d * d;
        }
        for (v, x) in self.potential.iter().zip(f) {
            acc += v * x * x;
        }
        Ok(acc)
    }

    fn check_len(&self, f: &[f64]) -> Result<(), GraphError> {
        if f.len() != self.n {
            return Err(GraphError::DimensionMismatch {
                expected: self.n,
                got: f.len(),
            });
        }
        Ok(())
    }
}

/// Dense symmetric matrix of the operator. Symmetry holds entry-for-entry
/// because both triangles are written from the same value.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    n: usize,
    data: Vec<f64>,
}

impl OperatorMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn apply(&self, f: &[f64]) -> Vec<f64> {
        assert_eq!(f.len(), self.n);
        (0..self.n)
            .map(|i| self.row(i).iter().zip(f).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub(crate) fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> WeightedGraph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1, 1.0)).collect();
        WeightedGraph::new(n, &edges, None).unwrap()
    }

    #[test]
    fn p2_is_valid() {
        let g = WeightedGraph::new(2, &[(0, 1, 1.0)], None).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn isolated_vertex_is_rejected() {
        let err = WeightedGraph::new(3, &[(0, 1, 1.0)], None).unwrap_err();
        assert_eq!(err, GraphError::Disconnected { components: 2 });
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            WeightedGraph::new(0, &[], None).unwrap_err(),
            GraphError::EmptyGraph
        );
        assert_eq!(
            WeightedGraph::new(2, &[(0, 2, 1.0)], None).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 2, n: 2 }
        );
        assert_eq!(
            WeightedGraph::new(2, &[(1, 1, 1.0)], None).unwrap_err(),
            GraphError::SelfLoop { vertex: 1 }
        );
        assert_eq!(
            WeightedGraph::new(2, &[(0, 1, 1.0), (1, 0, 2.0)], None).unwrap_err(),
            GraphError::DuplicateEdge { u: 0, v: 1 }
        );
        assert_eq!(
            WeightedGraph::new(2, &[(0, 1, 0.0)], None).unwrap_err(),
            GraphError::NonPositiveWeight {
                u: 0,
                v: 1,
                weight: 0.0
            }
        );
        assert_eq!(
            WeightedGraph::new(2, &[(0, 1, 1.0)], Some(vec![0.0])).unwrap_err(),
            GraphError::DimensionMismatch {
                expected: 2,
                got: 1
            }
        );
    }

    #[test]
    fn non_finite_inputs_are_rejected() {
        // NaN compares false to everything, so a bare `w <= 0.0` check would
        // accept it; make sure the constructor catches NaN and infinities for
        // both weights and potentials.
        for bad in [f64::NAN, f64::INFINITY, f64::NEG_INFINITY] {
            assert!(matches!(
                WeightedGraph::new(2, &[(0, 1, bad)], None).unwrap_err(),
                GraphError::NonPositiveWeight { u: 0, v: 1, .. }
            ));
            assert!(matches!(
                WeightedGraph::new(2, &[(0, 1, 1.0)], Some(vec![0.0, bad])).unwrap_err(),
                GraphError::NonFinitePotential { vertex: 1, .. }
            ));
        }
    }

    #[test]
    fn tree7_is_valid() {
        let edges = [(0, 1), (1, 2), (2, 3), (2, 4), (3, 5), (4, 6)];
        let edges: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1.0)).collect();
        let g = WeightedGraph::new(7, &edges, None).unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn p2_operator_matches_closed_form() {
        let g = WeightedGraph::new(2, &[(0, 1, 1.0)], None).unwrap();
        let h = g.operator();
        assert_eq!(
            [h.get(0, 0), h.get(0, 1), h.get(1, 0), h.get(1, 1)],
            [1.0, -1.0, -1.0, 1.0]
        );

        let g = WeightedGraph::new(2, &[(0, 1, 1.0)], Some(vec![1.0, 2.0])).unwrap();
        let h = g.operator();
        assert_eq!(
            [h.get(0, 0), h.get(0, 1), h.get(1, 0), h.get(1, 1)],
            [2.0, -1.0, -1.0, 3.0]
        );
    }

    #[test]
    fn star5_operator_is_degree_minus_adjacency() {
        let edges: Vec<_> = (1..5).map(|v| (0, v, 1.0)).collect();
        let g = WeightedGraph::new(5, &edges, None).unwrap();
        let h = g.operator();
        assert_eq!(h.get(0, 0), 4.0);
        for v in 1..5 {
            assert_eq!(h.get(v, v), 1.0);
            assert_eq!(h.get(0, v), -1.0);
            assert_eq!(h.get(v, 0), -1.0);
        }
        assert_eq!(h.get(1, 2), 0.0);
    }

    #[test]
    fn operator_is_exactly_symmetric() {
        let g = WeightedGraph::new(
            4,
            &[
                (0, 1, 0.3),
                (1, 2, 1.7),
                (2, 3, 0.9),
                (0, 3, 2.0),
                (0, 2, 1.1),
            ],
            Some(vec![0.5, -0.25, 0.0, 1.0]),
        )
        .unwrap();
        let h = g.operator();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(h.get(i, j), h.get(j, i));
            }
        }
    }

    #[test]
    fn constants_in_kernel_without_potential() {
        let g = path(2);
        assert_eq!(g.apply(&[1.0, 1.0]).unwrap(), vec![0.0, 0.0]);
        assert_eq!(g.apply(&[1.0, -1.0]).unwrap(), vec![2.0, -2.0]);

        let h = path(5).operator();
        let hf = h.apply(&[1.0; 5]);
        assert!(hf.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn apply_rejects_wrong_length() {
        let g = path(3);
        assert!(matches!(
            g.apply(&[1.0, 2.0]),
            Err(GraphError::DimensionMismatch {
                expected: 3,
                got: 2
            })
        ));
        assert!(matches!(
            g.quadratic_form(&[1.0]),
            Err(GraphError::DimensionMismatch {
                expected: 3,
                got: 1
            })
        ));
    }

    #[test]
    fn tree7_exact_eigenvector_numeric() {
        let edges = [(0, 1), (1, 2), (2, 3), (2, 4), (3, 5), (4, 6)];
        let edges: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1.0)).collect();
        let g = WeightedGraph::new(7, &edges, None).unwrap();
        let s5 = 5f64.sqrt();
        let f = [
            2.0,
            -1.0 - s5,
            0.0,
            (1.0 + s5) / 2.0,
            (1.0 + s5) / 2.0,
            -1.0,
            -1.0,
        ];
        let lambda = (3.0 + s5) / 2.0;
        let hf = g.apply(&f).unwrap();
        for x in 0..7 {
            assert!((hf[x] - lambda * f[x]).abs() <= 1e-12 * (1.0 + f[x].abs()));
        }
    }

    #[test]
    fn quadratic_form_examples() {
        let g = path(2);
        assert_eq!(g.quadratic_form(&[0.0, 0.0]).unwrap(), 0.0);
        assert_eq!(g.quadratic_form(&[1.0, -1.0]).unwrap(), 4.0);
    }

    #[test]
    fn quadratic_form_matches_inner_product_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for _ in 0..50 {
            let n = 8;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if u + 1 == v || rng.random_bool(0.4) {
                        edges.push((u, v, rng.random_range(0.0..2.0) + 1e-3));
                    }
                }
            }
            let pot: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
            let g = WeightedGraph::new(n, &edges, Some(pot)).unwrap();
            let f: Vec<f64> = (0..n).map(|_| rng.random_range(-2.0..2.0)).collect();
            let hf = g.apply(&f).unwrap();
            let ip: f64 = hf.iter().zip(&f).map(|(a, b)| a * b).sum();
            let q = g.quadratic_form(&f).unwrap();
            assert!((q - ip).abs() <= 1e-10 * (1.0 + q.abs().max(ip.abs())));
        }
    }

    #[test]
    fn apply_agrees_with_matrix_and_is_linear() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let g = WeightedGraph::new(
            6,
            &[
                (0, 1, 0.7),
                (1, 2, 1.3),
                (2, 3, 0.4),
                (3, 4, 1.9),
                (4, 5, 0.6),
                (0, 5, 1.1),
                (1, 4, 0.8),
            ],
            Some(vec![0.1, -0.4, 0.0, 0.9, -1.0, 0.3]),
        )
        .unwrap();
        let h = g.operator();
        let f: Vec<f64> = (0..6).map(|_| rng.random_range(-1.0..1.0)).collect();
        let e: Vec<f64> = (0..6).map(|_| rng.random_range(-1.0..1.0)).collect();

        let edgewise = g.apply(&f).unwrap();
        let matrix = h.apply(&f);
        for (a, b) in edgewise.iter().zip(&matrix) {
            assert!((a - b).abs() <= 1e-12 * (1.0 + b.abs()));
        }

        let (alpha, beta) = (0.37, -1.21);
        let combo: Vec<f64> = f
            .iter()
            .zip(&e)
            .map(|(a, b)| alpha * a + beta * b)
            .collect();
        let lhs = g.apply(&combo).unwrap();
        let (hf, he) = (g.apply(&f).unwrap(), g.apply(&e).unwrap());
        for x in 0..6 {
            let rhs = alpha * hf[x] + beta * he[x];
            assert!((lhs[x] - rhs).abs() <= 1e-12 * (1.0 + rhs.abs()));
        }
    }

    #[test]
    fn quadratic_form_nonnegative_without_potential() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(37);
        let g = path(6);
        for _ in 0..100 {
            let f: Vec<f64> = (0..6).map(|_| rng.random_range(-1.0..1.0)).collect();
            assert!(g.quadratic_form(&f).unwrap() >= 0.0);
        }
        // zero exactly on constants
        assert_eq!(g.quadratic_form(&[0.3; 6]).unwrap(), 0.0);
    }
}
