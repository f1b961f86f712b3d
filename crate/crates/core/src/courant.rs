//! Verification of the nodal domain bounds and of the variational identities
//! they rest on.
//!
//! For an eigenfunction of the k-th eigenvalue with multiplicity indices
//! k̲ ≤ k ≤ k̄, the weak domain count must not exceed k̲ and the strong count
//! must not exceed k̄. [`verify_eigenfunction`] checks this per function (plus
//! the Fiedler and Powers special cases), and [`verify_graph`] sweeps a whole
//! spectrum, sampling extra vectors from degenerate eigenspaces.
//!
//! The proof-side diagnostics rebuild the argument behind the bound: from a
//! weak partition `D_1..D_m` form blocks `g_i = f·1_{D_i∩S}`, pick domain
//! weights `α` making `g = Σ α_i g_i` orthogonal to the first `m−1`
//! eigenvectors, and check that the energy of `g` equals `λ_k + Rem` with a
//! non-positive remainder, while the variational principle forces it to be at
//! least `λ_m`.

use crate::graph::WeightedGraph;
use crate::nodal::{self, classify_signs, strong_domains, weak_domains, NodalPartition};
use crate::solver;
use crate::spectra::{self, EigenGroups, PerronReport, Spectrum};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Largest residual `‖Hf − λ_k f‖₂` (relative to `1 + ‖H‖_F`) accepted for
/// verification.
pub const RESIDUAL_PRECHECK_TOL: f64 = 1e-8;
/// The remainder must not exceed this (it is non-positive in exact
/// arithmetic).
pub const REMAINDER_TOL: f64 = 1e-10;
/// Tolerance for the energy identity and the variational inequality, scaled
/// by `1 + ‖H‖_F`.
pub const IDENTITY_TOL: f64 = 1e-8;
/// Absolute bound on `|⟨g, f_j⟩|` for `j < m`.
pub const ORTHOGONALITY_TOL: f64 = 1e-9;

/// Largest residual `‖Mα‖₂` (relative to `1 + ‖M‖_F`) the null-direction
/// solve may leave before the constraint system is declared degenerate.
const DEGENERATE_TOL: f64 = 1e-10;

#[derive(Debug, Error)]
pub enum CourantError {
    #[error("eigenfunction residual {residual:e} exceeds {bound:e}")]
    ResidualTooLarge { residual: f64, bound: f64 },
    #[error(
        "domain-weight system has no null direction (smallest singular value {sigma_min:e}); \
         with m unknowns and m-1 equations this indicates a bug"
    )]
    DegenerateSystem { sigma_min: f64 },
    #[error(transparent)]
    Spectra(#[from] spectra::SpectraError),
    #[error(transparent)]
    Nodal(#[from] nodal::NodalError),
}

/// One weight per nodal domain, plus the induced per-vertex map
/// `α(x) = α_i` for support vertices of `D_i` and 0 elsewhere.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainWeights {
    alpha: Vec<f64>,
    vertex_alpha: Vec<f64>,
}

impl DomainWeights {
    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }

    pub fn vertex_alpha(&self) -> &[f64] {
        &self.vertex_alpha
    }
}

/// The test function `g(x) = α(x)·f(x)` with unit norm, along with its
/// per-domain building blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct TestFunction {
    g: Vec<f64>,
    blocks: Vec<Vec<f64>>,
    orthogonality_defect: f64,
}

impl TestFunction {
    pub fn g(&self) -> &[f64] {
        &self.g
    }

    /// `blocks()[i]` is `f` restricted to the support vertices of domain `i`
    /// (zero elsewhere), before weighting.
    pub fn blocks(&self) -> &[Vec<f64>] {
        &self.blocks
    }

    /// Number of domains the function was built from.
    pub fn m(&self) -> usize {
        self.blocks.len()
    }

    /// `max_{j<m} |⟨g, f_j⟩|`.
    pub fn orthogonality_defect(&self) -> f64 {
        self.orthogonality_defect
    }
}

/// Build a unit-norm test function from an `m ≥ 2` domain partition of `f`,
/// choosing domain weights that make it orthogonal to the first `m−1`
/// eigenvectors. The weights solve the homogeneous system
/// `Σ_i α_i ⟨g_i, f_j⟩ = 0` (j = 1..m−1) through an orthogonal
/// factorization of the constraint matrix; the choice is deterministic.
///
/// # Panics
/// If the partition has fewer than two domains or `f` does not match the
/// partition's vertex count.
pub fn build_test_function(
    partition: &NodalPartition,
    spectrum: &Spectrum,
    f: &[f64],
) -> Result<(TestFunction, DomainWeights), CourantError> {
    let m = partition.count();
    assert!(m >= 2, "test function needs at least two domains, got {m}");
    let n = f.len();
    assert_eq!(n, partition.signs().len(), "partition/vector size mismatch");

    let blocks: Vec<Vec<f64>> = partition
        .domains()
        .iter()
        .map(|d| {
            let mut b = vec![0.0; n];
            for &x in &d.vertices {
                if partition.signs()[x] != 0 {
                    b[x] = f[x];
                }
            }
            b
        })
        .collect();

    // (m−1)×m constraint matrix M_{ji} = ⟨g_i, f_j⟩
    let mut constraint = vec![vec![0.0; m]; m - 1];
    for (j, row) in constraint.iter_mut().enumerate() {
        let fj = spectrum.eigenvector(j + 1);
        for (i, block) in blocks.iter().enumerate() {
            row[i] = block.iter().zip(fj).map(|(a, b)| a * b).sum();
        }
    }
    let alpha_raw = null_direction(&constraint, m);
    // With one more unknown than equations the null space is never empty, so
    // a sizable residual can only mean a broken factorization.
    let residual: f64 = constraint
        .iter()
        .map(|row| {
            let r: f64 = row.iter().zip(&alpha_raw).map(|(c, a)| c * a).sum();
            r * r
        })
        .sum::<f64>()
        .sqrt();
    let constraint_norm: f64 = constraint
        .iter()
        .flatten()
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt();
    if residual > DEGENERATE_TOL * (1.0 + constraint_norm) {
        return Err(CourantError::DegenerateSystem {
            sigma_min: residual,
        });
    }
    let alpha_raw = &alpha_raw;

    let mut vertex_alpha = vec![0.0; n];
    for (i, d) in partition.domains().iter().enumerate() {
        for &x in &d.vertices {
            if partition.signs()[x] != 0 {
                vertex_alpha[x] = alpha_raw[i];
            }
        }
    }
    let g_raw: Vec<f64> = (0..n).map(|x| vertex_alpha[x] * f[x]).collect();
    let norm = g_raw.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(CourantError::DegenerateSystem { sigma_min: 0.0 });
    }
    let scale = 1.0 / norm;
    let g: Vec<f64> = g_raw.iter().map(|x| x * scale).collect();
    let alpha: Vec<f64> = alpha_raw.iter().map(|x| x * scale).collect();
    for a in &mut vertex_alpha {
        *a *= scale;
    }

    let mut orthogonality_defect = 0.0f64;
    for j in 1..m {
        let dot: f64 = g
            .iter()
            .zip(spectrum.eigenvector(j))
            .map(|(a, b)| a * b)
            .sum();
        orthogonality_defect = orthogonality_defect.max(dot.abs());
    }

    Ok((
        TestFunction {
            g,
            blocks,
            orthogonality_defect,
        },
        DomainWeights {
            alpha,
            vertex_alpha,
        },
    ))
}

/// Unit vector orthogonal to every row of the `rows × cols` matrix `m_rows`
/// (`rows < cols`), computed as the last column of the orthogonal factor in a
/// Householder QR of the transpose. Because an upper-triangular `R` of shape
/// `cols × rows` has an all-zero final row, that column is a null direction of
/// the original matrix by construction; the residual it leaves is rounding
/// only, independent of the system's conditioning. Solving the normal
/// equations `MᵀMα = 0` instead would square the condition number and lose
/// half the attainable digits. Sign convention: largest-magnitude entry
/// positive, ties to the lowest index.
fn null_direction(m_rows: &[Vec<f64>], cols: usize) -> Vec<f64> {
    let rows = m_rows.len();
    debug_assert!(rows < cols, "need an underdetermined system");
    // a = Mᵀ (cols × rows); q accumulates the product of the reflections.
    let mut a: Vec<Vec<f64>> = (0..cols)
        .map(|i| (0..rows).map(|j| m_rows[j][i]).collect())
        .collect();
    let mut q: Vec<Vec<f64>> = (0..cols)
        .map(|i| {
            let mut row = vec![0.0; cols];
            row[i] = 1.0;
            row
        })
        .collect();
    for k in 0..rows {
        let norm = a[k..].iter().map(|row| row[k] * row[k]).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let pivot = -norm.copysign(a[k][k]);
        let mut v = vec![0.0; cols];
        for (i, row) in a.iter().enumerate().skip(k) {
            v[i] = row[k];
        }
        v[k] -= pivot;
        let vnorm2: f64 = v[k..].iter().map(|x| x * x).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        // reflect the remaining columns of a, then fold H into q from the right
        for j in k..rows {
            let dot: f64 = (k..cols).map(|i| v[i] * a[i][j]).sum();
            let factor = 2.0 * dot / vnorm2;
            for (i, row) in a.iter_mut().enumerate().skip(k) {
                row[j] -= factor * v[i];
            }
        }
        for row in q.iter_mut() {
            let dot: f64 = (k..cols).map(|i| row[i] * v[i]).sum();
            let factor = 2.0 * dot / vnorm2;
            for i in k..cols {
                row[i] -= factor * v[i];
            }
        }
    }
    let mut alpha: Vec<f64> = q.iter().map(|row| row[cols - 1]).collect();
    solver::normalize_sign(&mut alpha);
    alpha
}

/// The remainder term
/// `Rem = ½ Σ_{x,y} b(x,y) (α(x) − α(y))² f(x) f(y)`
/// evaluated over edges. For domain-constant weights on a nodal partition of
/// an eigenfunction this is non-positive.
pub fn remainder(graph: &WeightedGraph, f: &[f64], weights: &DomainWeights) -> f64 {
    let a = weights.vertex_alpha();
    graph
        .edges()
        .iter()
        .map(|e| {
            let d = a[e.u] - a[e.v];
            e.weight * d * d * f[e.u] * f[e.v]
        })
        .sum()
}

/// Diagnostics tying one test function to the spectrum: the energy identity
/// `⟨Hg, g⟩ = λ_k + Rem` and the variational floor `λ_m ≤ ⟨Hg, g⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProofDiagnostics {
    /// Number of domains in the partition used.
    pub m: usize,
    /// The remainder term.
    pub remainder: f64,
    /// `⟨Hg, g⟩`.
    pub rayleigh: f64,
    /// `|⟨g, g⟩ − 1|`.
    pub norm_defect: f64,
    /// `|⟨Hg, g⟩ − λ_k − Rem|`.
    pub identity_defect: f64,
    /// `⟨Hg, g⟩ − λ_m`; non-negative up to tolerance.
    pub variational_margin: f64,
    /// `max_{j<m} |⟨g, f_j⟩|`.
    pub orthogonality_defect: f64,
    pub remainder_ok: bool,
    pub identity_ok: bool,
    pub variational_ok: bool,
    pub orthogonality_ok: bool,
}

impl ProofDiagnostics {
    pub fn pass(&self) -> bool {
        self.remainder_ok && self.identity_ok && self.variational_ok && self.orthogonality_ok
    }
}

/// Check the energy identity and the variational inequality for a test
/// function built from an `m`-domain partition of an eigenfunction of
/// `λ_k`.
pub fn rayleigh_sandwich(
    graph: &WeightedGraph,
    spectrum: &Spectrum,
    k: usize,
    tf: &TestFunction,
    rem: f64,
) -> ProofDiagnostics {
    let g = tf.g();
    let rayleigh = graph
        .quadratic_form(g)
        .expect("test function length matches graph");
    let norm_sq: f64 = g.iter().map(|x| x * x).sum();
    let tol = IDENTITY_TOL * (1.0 + spectrum.h_frobenius());
    let m = tf.m();
    let identity_defect = (rayleigh - spectrum.eigenvalue(k) - rem).abs();
    let variational_margin = rayleigh - spectrum.eigenvalue(m);
    ProofDiagnostics {
        m,
        remainder: rem,
        rayleigh,
        norm_defect: (norm_sq - 1.0).abs(),
        identity_defect,
        variational_margin,
        orthogonality_defect: tf.orthogonality_defect(),
        remainder_ok: rem <= REMAINDER_TOL,
        identity_ok: identity_defect <= tol,
        variational_ok: variational_margin >= -tol,
        orthogonality_ok: tf.orthogonality_defect() <= ORTHOGONALITY_TOL,
    }
}

/// Verdicts for one `(eigenvalue index, eigenfunction sample)` pair.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseRecord {
    /// 1-based eigenvalue index the function belongs to.
    pub k: usize,
    /// 0 for the basis eigenvector, `1..=samples` for random cluster samples.
    pub sample: usize,
    pub lambda: f64,
    /// Lower multiplicity index k̲.
    pub k_lo: usize,
    /// Upper multiplicity index k̄.
    pub k_hi: usize,
    pub weak_count: usize,
    pub strong_count: usize,
    /// `weak_count ≤ k̲`.
    pub weak_ok: bool,
    /// `strong_count ≤ k̄`.
    pub strong_ok: bool,
    /// `weak_count == 2`; only checked when `k = 2` and λ₂ is simple.
    pub fiedler_ok: Option<bool>,
    /// `weak_count ≤ 2(k−1)`; only checked for `k ≥ 2`.
    pub powers_ok: Option<bool>,
    /// Present when the weak partition has at least two domains.
    pub proof: Option<ProofDiagnostics>,
}

impl CaseRecord {
    pub fn pass(&self) -> bool {
        self.weak_ok
            && self.strong_ok
            && self.fiedler_ok.unwrap_or(true)
            && self.powers_ok.unwrap_or(true)
            && self.proof.as_ref().is_none_or(ProofDiagnostics::pass)
    }
}

/// Verify the domain-count bounds for one eigenfunction `f` of the k-th
/// eigenvalue. `f` must be a unit vector with residual at most
/// `RESIDUAL_PRECHECK_TOL · (1 + ‖H‖_F)`; `tau` is the sign-zero tolerance.
pub fn verify_eigenfunction(
    graph: &WeightedGraph,
    spectrum: &Spectrum,
    groups: &EigenGroups,
    k: usize,
    f: &[f64],
    tau: f64,
) -> Result<CaseRecord, CourantError> {
    let lambda = spectrum.eigenvalue(k);
    let hf = graph.apply(f).expect("eigenfunction length matches graph");
    let residual: f64 = hf
        .iter()
        .zip(f)
        .map(|(h, x)| (h - lambda * x).powi(2))
        .sum::<f64>()
        .sqrt();
    let bound = RESIDUAL_PRECHECK_TOL * (1.0 + spectrum.h_frobenius());
    if residual > bound {
        return Err(CourantError::ResidualTooLarge { residual, bound });
    }

    let signs = classify_signs(f, tau)?;
    let weak = weak_domains(graph, &signs)?;
    let strong = strong_domains(graph, &signs)?;
    let (k_lo, k_hi) = (groups.lo(k), groups.hi(k));

    let proof = if weak.count() >= 2 {
        let (tf, weights) = build_test_function(&weak, spectrum, f)?;
        let rem = remainder(graph, f, &weights);
        Some(rayleigh_sandwich(graph, spectrum, k, &tf, rem))
    } else {
        None
    };

    Ok(CaseRecord {
        k,
        sample: 0,
        lambda,
        k_lo,
        k_hi,
        weak_count: weak.count(),
        strong_count: strong.count(),
        weak_ok: weak.count() <= k_lo,
        strong_ok: strong.count() <= k_hi,
        fiedler_ok: (k == 2 && groups.is_simple(2)).then(|| weak.count() == 2),
        powers_ok: (k >= 2).then(|| weak.count() <= 2 * (k - 1)),
        proof,
    })
}

/// Everything [`verify_graph`] learned about one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub n: usize,
    pub edge_count: usize,
    pub seed: u64,
    pub tau: f64,
    pub samples_per_cluster: usize,
    /// Eigenvalues ascending.
    pub eigenvalues: Vec<f64>,
    /// `(k̲, k̄)` for each 1-based index k.
    pub cluster_bounds: Vec<(usize, usize)>,
    /// Sorted by `(k, sample)`.
    pub records: Vec<CaseRecord>,
    pub perron: PerronReport,
    pub pass: bool,
}

/// Decompose a graph's operator and verify every basis eigenvector, plus
/// `samples_per_cluster` random unit vectors from each eigenspace cluster of
/// dimension at least two. Sampling is driven by ChaCha8 over `seed`;
/// identical inputs give identical reports.
pub fn verify_graph(
    graph: &WeightedGraph,
    samples_per_cluster: usize,
    seed: u64,
    tau: f64,
) -> Result<VerificationReport, CourantError> {
    let op = graph.operator();
    let spectrum = spectra::eigendecompose(&op)?;
    let groups = spectra::group_eigenvalues(&spectrum, spectra::DEFAULT_GROUP_TOL);
    let perron = spectra::perron_check(&spectrum, &groups);
    let n = graph.n();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut records = Vec::new();
    for k in 1..=n {
        records.push(verify_eigenfunction(
            graph,
            &spectrum,
            &groups,
            k,
            spectrum.eigenvector(k),
            tau,
        )?);
        let dim = groups.dim(k);
        if groups.lo(k) == k && dim >= 2 {
            for sample in 1..=samples_per_cluster {
                let coeffs = unit_coefficients(&mut rng, dim);
                let f = spectra::sample_eigenfunction(&spectrum, &groups, k, &coeffs)?;
                let mut rec = verify_eigenfunction(graph, &spectrum, &groups, k, &f, tau)?;
                rec.sample = sample;
                records.push(rec);
            }
        }
    }

    let pass = records.iter().all(CaseRecord::pass) && perron.holds();
    Ok(VerificationReport {
        n,
        edge_count: graph.edge_count(),
        seed,
        tau,
        samples_per_cluster,
        eigenvalues: spectrum.eigenvalues().to_vec(),
        cluster_bounds: (1..=n).map(|k| (groups.lo(k), groups.hi(k))).collect(),
        records,
        perron,
        pass,
    })
}

fn unit_coefficients(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    loop {
        let c: Vec<f64> = (0..dim).map(|_| standard_normal(rng)).collect();
        let norm = c.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-6 {
            return c.iter().map(|x| x / norm).collect();
        }
    }
}

fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    // Box-Muller; 1 - u keeps the log argument in (0, 1]
    let u1 = 1.0 - rng.random::<f64>();
    let u2: f64 = rng.random();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}
