//! Schrödinger operators on finite weighted graphs and their nodal domains.
//!
//! The crate builds the operator
//!
//! ```text
//! (Hf)(x) = Σ_{y ~ x} b(x,y) [f(x) - f(y)] + v(x) f(x)
//! ```
//!
//! for a connected weighted graph with edge weights `b > 0` and vertex
//! potential `v`, computes its full symmetric eigendecomposition, enumerates
//! the weak and strong nodal domains of eigenfunctions, and verifies the
//! discrete nodal domain bounds (weak count ≤ k̲, strong count ≤ k̄) together
//! with the variational identities the bounds rest on.
//!
//! Modules:
//!
//! * [`graph`] — validated weighted graphs and operator assembly/application.
//! * [`spectra`] — dense symmetric eigendecomposition, eigenvalue multiplicity
//!   grouping (k̲/k̄), eigenspace sampling, Perron sanity check.
//! * [`nodal`] — sign classification and weak/strong nodal domain enumeration,
//!   with a brute-force maximal-subset oracle for cross-checking.
//! * [`courant`] — per-eigenfunction bound verification, discrete test
//!   functions, the remainder term, and the Rayleigh sandwich diagnostics.
//! * [`generate`] — seeded, reproducible graph corpus generation.
//! * [`suite`] — randomized verification campaigns over generated corpora.
//! * [`gallery`] — exact-arithmetic certification of the star and 7-vertex
//!   tree examples over ℚ(√5).
//!
//! All public operations are pure functions of immutable inputs and are safe
//! to call from concurrent workers. Randomized operations take an explicit
//! 64-bit seed and are driven by ChaCha8, so identical inputs give
//! bit-identical results on a given platform.

pub mod courant;
mod dsu;
pub mod gallery;
pub mod generate;
pub mod graph;
pub mod nodal;
mod solver;
pub mod spectra;
pub mod suite;

pub use courant::{
    CaseRecord, CourantError, DomainWeights, ProofDiagnostics, TestFunction, VerificationReport,
};
pub use gallery::{
    ExactCertificate, ExactEigenpair, IndexCheck, QuadNumber, StarCounterexample,
    Tree7Counterexample,
};
pub use generate::{GenerateError, GraphKind, PotentialMode, WeightMode};
pub use graph::{Edge, GraphError, OperatorMatrix, WeightedGraph};
pub use nodal::{DomainAdjacency, DomainKind, NodalDomain, NodalError, NodalPartition, SignVector};
pub use spectra::{EigenGroups, PerronReport, SpectraError, Spectrum};
pub use suite::{CaseOutcome, SuiteConfig, SuiteError, SuiteReport};
