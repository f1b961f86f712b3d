//! Randomized verification campaigns: generate a seeded corpus of connected
//! graphs, verify the nodal domain bounds on each, and cross-check the fast
//! domain enumeration against the brute-force oracle on small instances.

use crate::courant::{self, CourantError};
use crate::generate::{self, GenerateError, GraphKind, PotentialMode, WeightMode};
use crate::graph::WeightedGraph;
use crate::nodal::{self, DomainKind};
use crate::spectra;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Largest graph the oracle cross-check runs on.
pub const ORACLE_MAX_N: usize = 8;

const KINDS: [GraphKind; 5] = [
    GraphKind::Path,
    GraphKind::Cycle,
    GraphKind::Star,
    GraphKind::RandomTree,
    GraphKind::ErdosRenyi,
];

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error(transparent)]
    Courant(#[from] CourantError),
    #[error(transparent)]
    Nodal(#[from] nodal::NodalError),
    #[error(transparent)]
    Spectra(#[from] spectra::SpectraError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    /// Number of graphs to generate and verify.
    pub cases: usize,
    /// Largest vertex count; sizes are drawn uniformly up to this.
    pub max_n: usize,
    /// Master seed; every graph and sample seed derives from it.
    pub seed: u64,
    /// Random eigenspace samples per degenerate cluster.
    pub samples_per_cluster: usize,
    /// Sign-zero tolerance.
    pub tau: f64,
}

/// What happened on one generated graph.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseOutcome {
    pub index: usize,
    pub kind: GraphKind,
    pub n: usize,
    pub graph_seed: u64,
    pub verify_seed: u64,
    /// `(k, sample)` records checked on this graph.
    pub record_count: usize,
    /// Records whose verdicts failed (should be zero).
    pub failed_records: usize,
    pub perron_ok: bool,
    /// Whether the graph was small enough for the brute-force cross-check.
    pub oracle_checked: bool,
    /// False only when the cross-check ran and found a mismatch.
    pub oracle_ok: bool,
}

impl CaseOutcome {
    pub fn pass(&self) -> bool {
        self.failed_records == 0 && self.perron_ok && self.oracle_ok
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub cases: Vec<CaseOutcome>,
    pub records_checked: usize,
    pub bound_violations: usize,
    pub perron_failures: usize,
    pub oracle_graphs: usize,
    pub oracle_mismatches: usize,
    pub pass: bool,
}

/// Run a verification campaign. Deterministic in the config: the master
/// ChaCha8 stream yields, per case, the vertex count, a graph seed, and a
/// sampling seed, in that order.
///
/// # Panics
/// If `cases` is zero, `max_n < 2`, or `tau` is outside `[0, 1)`.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    assert!(config.cases >= 1, "at least one case required");
    assert!(config.max_n >= 2, "graphs need at least two vertices");
    assert!(
        (0.0..1.0).contains(&config.tau),
        "zero tolerance {} must lie in [0, 1)",
        config.tau
    );

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut cases = Vec::with_capacity(config.cases);
    let mut records_checked = 0;
    let mut bound_violations = 0;
    let mut perron_failures = 0;
    let mut oracle_graphs = 0;
    let mut oracle_mismatches = 0;

    for index in 0..config.cases {
        // a cycle needs three vertices; at max_n = 2 every kind collapses to P₂
        let kind = if config.max_n < 3 {
            GraphKind::Path
        } else {
            KINDS[index % KINDS.len()]
        };
        let min_n = if kind == GraphKind::Cycle { 3 } else { 2 };
        let n = rng.random_range(min_n..=config.max_n.max(min_n));
        let graph_seed: u64 = rng.random();
        let verify_seed: u64 = rng.random();

        let graph = generate::generate_graph(
            kind,
            n,
            WeightMode::Random,
            PotentialMode::Random,
            graph_seed,
        )?;
        let report =
            courant::verify_graph(&graph, config.samples_per_cluster, verify_seed, config.tau)?;

        let failed_records = report.records.iter().filter(|r| !r.pass()).count();
        let perron_ok = report.perron.holds();
        records_checked += report.records.len();
        bound_violations += failed_records;
        if !perron_ok {
            perron_failures += 1;
        }

        let (oracle_checked, oracle_ok) = if n <= ORACLE_MAX_N {
            oracle_graphs += 1;
            let ok = oracle_equivalence(&graph, config.tau)?;
            if !ok {
                oracle_mismatches += 1;
            }
            (true, ok)
        } else {
            (false, true)
        };

        cases.push(CaseOutcome {
            index,
            kind,
            n,
            graph_seed,
            verify_seed,
            record_count: report.records.len(),
            failed_records,
            perron_ok,
            oracle_checked,
            oracle_ok,
        });
    }

    let pass = cases.iter().all(CaseOutcome::pass);
    Ok(SuiteReport {
        config: config.clone(),
        cases,
        records_checked,
        bound_violations,
        perron_failures,
        oracle_graphs,
        oracle_mismatches,
        pass,
    })
}

/// Compare fast weak/strong enumeration against the brute-force oracle on
/// every basis eigenvector of the graph's operator. Returns whether all of
/// them agree as sets of vertex sets.
pub fn oracle_equivalence(graph: &WeightedGraph, tau: f64) -> Result<bool, SuiteError> {
    let spectrum = spectra::eigendecompose(&graph.operator())?;
    for k in 1..=graph.n() {
        let signs = nodal::classify_signs(spectrum.eigenvector(k), tau)?;
        let weak_fast = nodal::weak_domains(graph, &signs)?;
        let weak_oracle = nodal::brute_force_domains(graph, &signs, DomainKind::Weak)?;
        if weak_fast.vertex_sets() != weak_oracle.vertex_sets() {
            return Ok(false);
        }
        let strong_fast = nodal::strong_domains(graph, &signs)?;
        let strong_oracle = nodal::brute_force_domains(graph, &signs, DomainKind::Strong)?;
        if strong_fast.vertex_sets() != strong_oracle.vertex_sets() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_campaign_passes_and_reproduces() {
        let config = SuiteConfig {
            cases: 15,
            max_n: 9,
            seed: 3,
            samples_per_cluster: 3,
            tau: 1e-8,
        };
        let a = run_suite(&config).unwrap();
        assert!(a.pass, "{a:?}");
        assert_eq!(a.bound_violations, 0);
        assert_eq!(a.perron_failures, 0);
        assert_eq!(a.oracle_mismatches, 0);
        assert!(a.oracle_graphs >= 1);
        assert!(a.records_checked >= 15 * 2);

        let b = run_suite(&config).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn minimum_size_campaign_only_builds_p2() {
        let config = SuiteConfig {
            cases: 4,
            max_n: 2,
            seed: 0,
            samples_per_cluster: 2,
            tau: 1e-8,
        };
        let report = run_suite(&config).unwrap();
        assert!(report.pass);
        assert!(report
            .cases
            .iter()
            .all(|c| c.n == 2 && c.kind == GraphKind::Path));
    }

    #[test]
    fn kinds_rotate_across_cases() {
        let config = SuiteConfig {
            cases: 5,
            max_n: 8,
            seed: 1,
            samples_per_cluster: 2,
            tau: 1e-8,
        };
        let report = run_suite(&config).unwrap();
        let kinds: Vec<GraphKind> = report.cases.iter().map(|c| c.kind).collect();
        assert_eq!(kinds, KINDS);
    }

    #[test]
    #[should_panic(expected = "at least one case")]
    fn zero_cases_is_rejected() {
        let _ = run_suite(&SuiteConfig {
            cases: 0,
            max_n: 5,
            seed: 0,
            samples_per_cluster: 1,
            tau: 1e-8,
        });
    }
}
