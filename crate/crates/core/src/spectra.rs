//! Eigendecomposition of operator matrices, eigenvalue grouping, and
//! sampling from eigenspaces of multiplicity greater than one.
//!
//! All eigenvalue indices in the public API are 1-based: `k = 1` is the
//! smallest eigenvalue. Vertices stay 0-based. [`eigendecompose`] enforces a
//! numerical contract (residual and orthonormality bounds) and fails loudly
//! rather than returning a decomposition that silently misses it.

use crate::graph::OperatorMatrix;
use crate::solver;
use thiserror::Error;

/// Per-pair residual bound enforced by [`eigendecompose`], scaled by
/// `1 + ‖H‖_F`.
pub const RESIDUAL_TOL: f64 = 1e-10;
/// Absolute bound on `|⟨f_i, f_j⟩ − δ_ij|` enforced by [`eigendecompose`].
pub const ORTHO_TOL: f64 = 1e-10;
/// Default relative gap below which adjacent eigenvalues are treated as one
/// multiplicity cluster.
pub const DEFAULT_GROUP_TOL: f64 = 1e-7;

#[derive(Debug, Error)]
pub enum SpectraError {
    #[error(
        "QL iteration failed to converge for eigenvalue {index} after {iterations} iterations"
    )]
    ConvergenceFailure { index: usize, iterations: usize },
    #[error("decomposition violates the {what} contract: {value:e} > {bound:e}")]
    ContractViolation {
        what: &'static str,
        value: f64,
        bound: f64,
    },
    #[error("cluster has dimension {expected}, got {got} coefficients")]
    BadCoefficientLength { expected: usize, got: usize },
    #[error("coefficient vector must have unit norm, got {norm}")]
    NonUnitCoefficients { norm: f64 },
}

/// Full spectrum of an operator matrix: eigenvalues ascending, orthonormal
/// eigenvectors, and the worst per-pair residual actually achieved.
#[derive(Debug, Clone)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    eigenvectors: Vec<Vec<f64>>,
    residual_bound: f64,
    h_frobenius: f64,
}

impl Spectrum {
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    /// All eigenvalues in non-decreasing order.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Eigenvectors in the same order; `eigenvectors()[k-1]` pairs with
    /// `eigenvalue(k)`.
    pub fn eigenvectors(&self) -> &[Vec<f64>] {
        &self.eigenvectors
    }

    /// The k-th smallest eigenvalue, 1-based.
    ///
    /// # Panics
    /// If `k` is outside `1..=n`.
    pub fn eigenvalue(&self, k: usize) -> f64 {
        assert!(
            k >= 1 && k <= self.n(),
            "eigenvalue index {k} outside 1..={}",
            self.n()
        );
        self.eigenvalues[k - 1]
    }

    /// The unit eigenvector paired with [`Self::eigenvalue`], 1-based. The
    /// entry of largest magnitude is positive (ties: lowest vertex index).
    ///
    /// # Panics
    /// If `k` is outside `1..=n`.
    pub fn eigenvector(&self, k: usize) -> &[f64] {
        assert!(
            k >= 1 && k <= self.n(),
            "eigenvector index {k} outside 1..={}",
            self.n()
        );
        &self.eigenvectors[k - 1]
    }

    /// Largest `‖H f_k − λ_k f_k‖_2` over all pairs.
    pub fn residual_bound(&self) -> f64 {
        self.residual_bound
    }

    /// Frobenius norm of the decomposed matrix (the scale in the residual
    /// contract `residual ≤ RESIDUAL_TOL · (1 + ‖H‖_F)`).
    pub fn h_frobenius(&self) -> f64 {
        self.h_frobenius
    }
}

/// Decompose a symmetric operator matrix and verify the numerical contract.
///
/// Output is deterministic: the same matrix yields bit-identical eigenvalues
/// and eigenvectors on a given platform.
pub fn eigendecompose(op: &OperatorMatrix) -> Result<Spectrum, SpectraError> {
    let rows = op.to_rows();
    let eig = solver::symmetric_eigen(rows).map_err(|c| SpectraError::ConvergenceFailure {
        index: c.index,
        iterations: c.iterations,
    })?;
    let n = op.n();
    let h_frobenius = op.frobenius_norm();

    let mut residual_bound = 0.0f64;
    for (lambda, v) in eig.values.iter().zip(&eig.vectors) {
        let hv = op.apply(v);
        let r: f64 = hv
            .iter()
            .zip(v)
            .map(|(hvx, vx)| {
                let d = hvx - lambda * vx;
                d * d
            })
            .sum::<f64>()
            .sqrt();
        residual_bound = residual_bound.max(r);
    }
    let residual_limit = RESIDUAL_TOL * (1.0 + h_frobenius);
    if residual_bound > residual_limit {
        return Err(SpectraError::ContractViolation {
            what: "residual",
            value: residual_bound,
            bound: residual_limit,
        });
    }

    let mut ortho_defect = 0.0f64;
    for i in 0..n {
        for j in 0..=i {
            let dot: f64 = eig.vectors[i]
                .iter()
                .zip(&eig.vectors[j])
                .map(|(a, b)| a * b)
                .sum();
            let target = if i == j { 1.0 } else { 0.0 };
            ortho_defect = ortho_defect.max((dot - target).abs());
        }
    }
    if ortho_defect > ORTHO_TOL {
        return Err(SpectraError::ContractViolation {
            what: "orthonormality",
            value: ortho_defect,
            bound: ORTHO_TOL,
        });
    }

    Ok(Spectrum {
        eigenvalues: eig.values,
        eigenvectors: eig.vectors,
        residual_bound,
        h_frobenius,
    })
}

/// Multiplicity clusters of a spectrum. Cluster bounds are the 1-based
/// first/last eigenvalue indices of each cluster, so for an eigenvalue with
/// index `k` the pair `(lo(k), hi(k))` is its numerical multiplicity range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenGroups {
    clusters: Vec<(usize, usize)>,
    cluster_of: Vec<usize>,
}

impl EigenGroups {
    pub fn cluster_count(&self) -> usize {
        self.clusters.len()
    }

    /// 1-based inclusive `(first, last)` index pairs, ascending.
    pub fn clusters(&self) -> &[(usize, usize)] {
        &self.clusters
    }

    fn cluster(&self, k: usize) -> (usize, usize) {
        assert!(
            k >= 1 && k <= self.cluster_of.len(),
            "eigenvalue index {k} outside 1..={}",
            self.cluster_of.len()
        );
        self.clusters[self.cluster_of[k - 1]]
    }

    /// Smallest index in the cluster containing eigenvalue `k` (its lower
    /// multiplicity index).
    pub fn lo(&self, k: usize) -> usize {
        self.cluster(k).0
    }

    /// Largest index in the cluster containing eigenvalue `k` (its upper
    /// multiplicity index).
    pub fn hi(&self, k: usize) -> usize {
        self.cluster(k).1
    }

    /// Dimension of the cluster containing eigenvalue `k`.
    pub fn dim(&self, k: usize) -> usize {
        let (lo, hi) = self.cluster(k);
        hi - lo + 1
    }

    pub fn is_simple(&self, k: usize) -> bool {
        self.dim(k) == 1
    }
}

/// Partition eigenvalue indices into clusters: adjacent eigenvalues belong to
/// the same cluster when their gap is at most `tau · (1 + max |λ|)`.
///
/// # Panics
/// If `tau` is not positive and finite.
pub fn group_eigenvalues(spectrum: &Spectrum, tau: f64) -> EigenGroups {
    assert!(
        tau > 0.0 && tau.is_finite(),
        "grouping tolerance {tau} must be positive"
    );
    let lambda = spectrum.eigenvalues();
    let scale = 1.0 + lambda.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let threshold = tau * scale;

    let mut clusters = Vec::new();
    let mut cluster_of = Vec::with_capacity(lambda.len());
    let mut start = 1usize;
    for k in 1..=lambda.len() {
        let split = k == lambda.len() || lambda[k] - lambda[k - 1] > threshold;
        cluster_of.push(clusters.len());
        if split {
            clusters.push((start, k));
            start = k + 1;
        }
    }
    EigenGroups {
        clusters,
        cluster_of,
    }
}

/// A unit vector from the eigenspace cluster containing eigenvalue `k`:
/// the combination `Σ coeffs[j] · f_{lo(k)+j}`. `coeffs` must have the
/// cluster's dimension and unit Euclidean norm (within `1e-12`).
pub fn sample_eigenfunction(
    spectrum: &Spectrum,
    groups: &EigenGroups,
    k: usize,
    coeffs: &[f64],
) -> Result<Vec<f64>, SpectraError> {
    let (lo, hi) = (groups.lo(k), groups.hi(k));
    let dim = hi - lo + 1;
    if coeffs.len() != dim {
        return Err(SpectraError::BadCoefficientLength {
            expected: dim,
            got: coeffs.len(),
        });
    }
    let norm = coeffs.iter().map(|c| c * c).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(SpectraError::NonUnitCoefficients { norm });
    }
    let n = spectrum.n();
    let mut f = vec![0.0; n];
    for (j, &c) in coeffs.iter().enumerate() {
        let v = spectrum.eigenvector(lo + j);
        for x in 0..n {
            f[x] += c * v[x];
        }
    }
    Ok(f)
}

/// Ground-state facts for a connected graph: the lowest eigenvalue should be
/// simple and its eigenfunction strictly single-signed. Failures are reported,
/// not raised, so callers can surface them as verification results.
#[derive(Debug, Clone, PartialEq)]
pub struct PerronReport {
    /// Whether the first multiplicity cluster has dimension 1.
    pub simple: bool,
    /// Whether every entry of the first eigenvector is strictly positive
    /// after sign normalization.
    pub single_signed: bool,
    /// `λ_2 − λ_1`, or 0 for a single-vertex graph.
    pub gap: f64,
    /// Smallest entry of the first eigenvector.
    pub min_entry: f64,
}

impl PerronReport {
    pub fn holds(&self) -> bool {
        self.simple && self.single_signed
    }
}

/// Check the ground-state sign structure of a spectrum.
pub fn perron_check(spectrum: &Spectrum, groups: &EigenGroups) -> PerronReport {
    let f1 = spectrum.eigenvector(1);
    let min_entry = f1.iter().cloned().fold(f64::INFINITY, f64::min);
    let gap = if spectrum.n() >= 2 {
        spectrum.eigenvalue(2) - spectrum.eigenvalue(1)
    } else {
        0.0
    };
    PerronReport {
        simple: groups.is_simple(1),
        single_signed: min_entry > 0.0,
        gap,
        min_entry,
    }
}
