//! Seeded, reproducible generation of connected test graphs.
//!
//! All randomness flows from a ChaCha8 stream seeded with the caller's 64-bit
//! seed, so a `(kind, n, modes, seed)` tuple names one graph forever. Draw
//! order is fixed: topology first, then edge weights in edge-creation order,
//! then the potential by vertex.

use crate::dsu::DisjointSets;
use crate::graph::WeightedGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Path,
    Cycle,
    Star,
    /// Random recursive tree: vertex v attaches to a uniform earlier vertex.
    RandomTree,
    /// G(n, p) with p = clamp(2·ln n / n, 0.3, 0.9), rejection-sampled until
    /// connected.
    ErdosRenyi,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightMode {
    /// Every edge weight 1.
    Unit,
    /// Uniform in (0, 2]; zero excluded by construction.
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PotentialMode {
    /// No potential term.
    Zero,
    /// Uniform in [-1, 1] per vertex.
    Random,
}

#[derive(Debug, Error)]
pub enum GenerateError {
    #[error("cannot generate {kind:?} graph with n={n}: {reason}")]
    GenerationFailure {
        kind: GraphKind,
        n: usize,
        reason: String,
    },
}

const ER_MAX_ATTEMPTS: usize = 1000;

/// Build a connected weighted graph of the requested kind, deterministically
/// in all arguments.
pub fn generate_graph(
    kind: GraphKind,
    n: usize,
    weight_mode: WeightMode,
    potential_mode: PotentialMode,
    seed: u64,
) -> Result<WeightedGraph, GenerateError> {
    let fail = |reason: &str| GenerateError::GenerationFailure {
        kind,
        n,
        reason: reason.to_string(),
    };
    if n < 2 {
        return Err(fail("at least two vertices required"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let topology: Vec<(usize, usize)> = match kind {
        GraphKind::Path => (1..n).map(|v| (v - 1, v)).collect(),
        GraphKind::Cycle => {
            if n < 3 {
                return Err(fail("a cycle needs at least three vertices"));
            }
            (1..n).map(|v| (v - 1, v)).chain([(0, n - 1)]).collect()
        }
        GraphKind::Star => (1..n).map(|leaf| (0, leaf)).collect(),
        GraphKind::RandomTree => (1..n).map(|v| (rng.random_range(0..v), v)).collect(),
        GraphKind::ErdosRenyi => {
            let p = (2.0 * (n as f64).ln() / n as f64).clamp(0.3, 0.9);
            let mut accepted = None;
            for _ in 0..ER_MAX_ATTEMPTS {
                let mut edges = Vec::new();
                let mut dsu = DisjointSets::new(n);
                for u in 0..n {
                    for v in (u + 1)..n {
                        if rng.random::<f64>() < p {
                            edges.push((u, v));
                            dsu.union(u, v);
                        }
                    }
                }
                if dsu.components() == 1 {
                    accepted = Some(edges);
                    break;
                }
            }
            accepted.ok_or_else(|| fail("no connected instance found within the attempt cap"))?
        }
    };

    let edges: Vec<(usize, usize, f64)> = topology
        .into_iter()
        .map(|(u, v)| {
            let w = match weight_mode {
                WeightMode::Unit => 1.0,
                WeightMode::Random => 2.0 * (1.0 - rng.random::<f64>()),
            };
            (u, v, w)
        })
        .collect();
    let potential = match potential_mode {
        PotentialMode::Zero => None,
        PotentialMode::Random => Some((0..n).map(|_| rng.random_range(-1.0..=1.0)).collect()),
    };

    WeightedGraph::new(n, &edges, potential).map_err(|e| fail(&e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_structure() {
        let g =
            generate_graph(GraphKind::Path, 5, WeightMode::Unit, PotentialMode::Zero, 0).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 4);
        for (i, e) in g.edges().iter().enumerate() {
            assert_eq!((e.u, e.v, e.weight), (i, i + 1, 1.0));
        }
        assert!(g.potential().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn star_and_cycle_structure() {
        let s =
            generate_graph(GraphKind::Star, 5, WeightMode::Unit, PotentialMode::Zero, 9).unwrap();
        assert!(s.edges().iter().all(|e| e.u == 0));
        assert_eq!(s.edge_count(), 4);

        let c = generate_graph(
            GraphKind::Cycle,
            6,
            WeightMode::Unit,
            PotentialMode::Zero,
            9,
        )
        .unwrap();
        assert_eq!(c.edge_count(), 6);
        for v in 0..6 {
            assert_eq!(c.neighbors(v).len(), 2);
        }
    }

    #[test]
    fn cycle_below_three_vertices_fails() {
        assert!(matches!(
            generate_graph(
                GraphKind::Cycle,
                2,
                WeightMode::Unit,
                PotentialMode::Zero,
                0
            ),
            Err(GenerateError::GenerationFailure { .. })
        ));
        assert!(matches!(
            generate_graph(GraphKind::Path, 1, WeightMode::Unit, PotentialMode::Zero, 0),
            Err(GenerateError::GenerationFailure { .. })
        ));
    }

    #[test]
    fn same_seed_same_graph() {
        let a = generate_graph(
            GraphKind::ErdosRenyi,
            10,
            WeightMode::Random,
            PotentialMode::Random,
            42,
        )
        .unwrap();
        let b = generate_graph(
            GraphKind::ErdosRenyi,
            10,
            WeightMode::Random,
            PotentialMode::Random,
            42,
        )
        .unwrap();
        assert_eq!(a, b);
        let c = generate_graph(
            GraphKind::ErdosRenyi,
            10,
            WeightMode::Random,
            PotentialMode::Random,
            43,
        )
        .unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn random_tree_is_a_tree() {
        for seed in 0..5 {
            let g = generate_graph(
                GraphKind::RandomTree,
                9,
                WeightMode::Random,
                PotentialMode::Zero,
                seed,
            )
            .unwrap();
            assert_eq!(g.edge_count(), 8);
        }
    }

    #[test]
    fn all_kinds_connected_with_ranged_values() {
        let kinds = [
            GraphKind::Path,
            GraphKind::Cycle,
            GraphKind::Star,
            GraphKind::RandomTree,
            GraphKind::ErdosRenyi,
        ];
        for kind in kinds {
            for n in 3..=12 {
                for seed in 0..3 {
                    let g =
                        generate_graph(kind, n, WeightMode::Random, PotentialMode::Random, seed)
                            .unwrap();
                    assert_eq!(g.n(), n);
                    for e in g.edges() {
                        assert!(e.weight > 0.0 && e.weight <= 2.0);
                    }
                    for &v in g.potential() {
                        assert!((-1.0..=1.0).contains(&v));
                    }
                }
            }
        }
    }
}
