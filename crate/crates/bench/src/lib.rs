//! Seeded benchmark corpora for the spectral and nodal-domain pipeline.
//!
//! Every helper regenerates the same graph for the same arguments, so
//! benchmark numbers stay comparable across machines and commits.

use nodal_core::{GraphKind, PotentialMode, WeightMode, WeightedGraph};

/// Connected graph of the given kind and order with seeded random weights
/// in (0, 2] and potentials in [−1, 1].
///
/// # Panics
/// Only if the generator rejects the parameters; the fixed corpora used by
/// the benchmarks never trigger that.
pub fn random_graph(kind: GraphKind, n: usize, seed: u64) -> WeightedGraph {
    nodal_core::generate::generate_graph(kind, n, WeightMode::Random, PotentialMode::Random, seed)
        .expect("benchmark corpus parameters are valid")
}
