//! Exact-arithmetic certification of the two families where strong nodal
//! domain counts outgrow the naive expectation: stars, whose second
//! eigenspace yields an eigenfunction with `n−1` strong domains, and a
//! 7-vertex tree whose fifth eigenfunction has 6 strong domains while edges
//! join strictly positive to strictly negative vertices.
//!
//! All eigen-equations here are verified in ℚ(√5) with zero rounding error;
//! the float pipeline is then cross-checked against the exact results.

mod quad;

pub use quad::QuadNumber;

use crate::graph::WeightedGraph;
use crate::nodal::{self, SignVector};
use crate::spectra::{self, SpectraError};

/// Tolerance for locating the certified eigenvalue in the numeric spectrum.
pub const INDEX_TOL: f64 = 1e-9;

/// A graph together with an exactly verified eigenvalue/eigenvector pair.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactEigenpair {
    /// Unit weights, zero potential.
    pub graph: WeightedGraph,
    pub lambda: QuadNumber,
    pub f: Vec<QuadNumber>,
}

/// Per-vertex residuals `ℋf(x) − λf(x)` in exact arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactCertificate {
    pub residuals: Vec<QuadNumber>,
    /// True iff every residual is exactly zero.
    pub pass: bool,
}

impl ExactCertificate {
    /// Vertices whose eigen-equation fails.
    pub fn failing_vertices(&self) -> Vec<usize> {
        (0..self.residuals.len())
            .filter(|&x| !self.residuals[x].is_zero())
            .collect()
    }
}

/// Evaluate the eigen-equation at every vertex in exact arithmetic.
///
/// # Panics
/// If the graph has non-unit weights or a non-zero potential (those are not
/// exactly representable here), or if `f` does not match the vertex count.
pub fn certify_exact(pair: &ExactEigenpair) -> ExactCertificate {
    let g = &pair.graph;
    assert!(
        g.edges().iter().all(|e| e.weight == 1.0),
        "exact certification requires unit weights"
    );
    assert!(
        g.potential().iter().all(|&v| v == 0.0),
        "exact certification requires zero potential"
    );
    assert_eq!(g.n(), pair.f.len(), "eigenvector length mismatch");

    let residuals: Vec<QuadNumber> = (0..g.n())
        .map(|x| {
            let degree = QuadNumber::from_integer(g.neighbors(x).len() as i64);
            let mut acc = degree * pair.f[x].clone();
            for &(y, _) in g.neighbors(x) {
                acc = acc - pair.f[y].clone();
            }
            acc - pair.lambda.clone() * pair.f[x].clone()
        })
        .collect();
    let pass = residuals.iter().all(QuadNumber::is_zero);
    ExactCertificate { residuals, pass }
}

/// The certified star eigenpair plus its exact signs and domain counts.
#[derive(Debug, Clone, PartialEq)]
pub struct StarCounterexample {
    pub pair: ExactEigenpair,
    pub signs: Vec<i8>,
    /// Always 2.
    pub weak_count: usize,
    /// Always `n − 1`: every leaf is its own strong domain.
    pub strong_count: usize,
}

/// Build the star `S_n` (hub 0) with the λ = 1 eigenvector that vanishes at
/// the hub and takes zero-sum non-zero integer values on the leaves: the
/// first ⌈(n−1)/2⌉ leaves get +1; with an even leaf count the rest get −1,
/// otherwise the last leaf absorbs the imbalance as −2.
///
/// # Panics
/// If `n < 3`, or if certification or the domain counts fail (construction
/// bugs).
pub fn star_counterexample(n: usize) -> StarCounterexample {
    assert!(n >= 3, "star counterexample needs n >= 3, got {n}");
    let leaves = n - 1;
    let edges: Vec<(usize, usize, f64)> = (1..n).map(|leaf| (0, leaf, 1.0)).collect();
    let graph = WeightedGraph::new(n, &edges, None).expect("star is a valid connected graph");

    let positives = leaves.div_ceil(2);
    let mut values = vec![0i64];
    values.extend(std::iter::repeat_n(1, positives));
    if leaves.is_multiple_of(2) {
        values.extend(std::iter::repeat_n(-1, leaves - positives));
    } else {
        values.extend(std::iter::repeat_n(-1, leaves - positives - 1));
        values.push(-2);
    }
    debug_assert_eq!(values.iter().sum::<i64>(), 0);

    let pair = ExactEigenpair {
        graph,
        lambda: QuadNumber::one(),
        f: values
            .iter()
            .map(|&v| QuadNumber::from_integer(v))
            .collect(),
    };
    let cert = certify_exact(&pair);
    assert!(cert.pass, "star eigen-equation must certify exactly");

    let signs: Vec<i8> = pair.f.iter().map(QuadNumber::sign).collect();
    let sv = SignVector::from_signs(signs.clone()).expect("star signs are not all zero");
    let weak = nodal::weak_domains(&pair.graph, &sv).expect("sign vector matches graph");
    let strong = nodal::strong_domains(&pair.graph, &sv).expect("sign vector matches graph");
    assert_eq!(weak.count(), 2, "star weak count");
    assert_eq!(strong.count(), n - 1, "star strong count");

    StarCounterexample {
        pair,
        signs,
        weak_count: weak.count(),
        strong_count: strong.count(),
    }
}

/// The certified 7-vertex tree eigenpair plus exact signs, counts, and the
/// edges joining strictly positive to strictly negative vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct Tree7Counterexample {
    pub pair: ExactEigenpair,
    pub signs: Vec<i8>,
    /// Always 5.
    pub weak_count: usize,
    /// Always 6.
    pub strong_count: usize,
    /// Non-empty: opposite strict signs do meet along edges here.
    pub pos_neg_edges: Vec<(usize, usize)>,
}

/// Build the depth-2 tree on vertices `(t, m, c, l₁, r₁, l₂, r₂) = 0..6`
/// (top to bottom, left branch before right): `c` is adjacent to `m`, `l₁`,
/// `r₁`; `t` hangs off `m`; `l₂` off `l₁`; `r₂` off `r₁`. Its eigenvalue
/// `(3+√5)/2` has multiplicity two (indices 5 and 6) with eigenvector
/// `(2, −1−√5, 0, (1+√5)/2, (1+√5)/2, −1, −1)`, giving 5 weak but 6 strong
/// nodal domains.
///
/// # Panics
/// If certification or the published counts fail (construction bugs).
pub fn tree7_counterexample() -> Tree7Counterexample {
    let graph = WeightedGraph::new(
        7,
        &[
            (0, 1, 1.0),
            (1, 2, 1.0),
            (2, 3, 1.0),
            (2, 4, 1.0),
            (3, 5, 1.0),
            (4, 6, 1.0),
        ],
        None,
    )
    .expect("tree is a valid connected graph");

    let pair = ExactEigenpair {
        graph,
        lambda: QuadNumber::with_root(3, 2, 1, 2),
        f: vec![
            QuadNumber::from_integer(2),
            QuadNumber::with_root(-1, 1, -1, 1),
            QuadNumber::zero(),
            QuadNumber::with_root(1, 2, 1, 2),
            QuadNumber::with_root(1, 2, 1, 2),
            QuadNumber::from_integer(-1),
            QuadNumber::from_integer(-1),
        ],
    };
    let cert = certify_exact(&pair);
    assert!(
        cert.pass,
        "tree eigen-equation must certify exactly; failing vertices {:?}",
        cert.failing_vertices()
    );

    let signs: Vec<i8> = pair.f.iter().map(QuadNumber::sign).collect();
    let sv = SignVector::from_signs(signs.clone()).expect("tree signs are not all zero");
    let weak = nodal::weak_domains(&pair.graph, &sv).expect("sign vector matches graph");
    let strong = nodal::strong_domains(&pair.graph, &sv).expect("sign vector matches graph");
    assert_eq!(weak.count(), 5, "tree weak count");
    assert_eq!(strong.count(), 6, "tree strong count");

    let adjacency = nodal::domain_adjacency(&pair.graph, &strong);
    let pos_neg_edges = adjacency.pos_neg_edges().to_vec();
    assert!(
        !pos_neg_edges.is_empty(),
        "the tree must exhibit positive-negative edges"
    );

    Tree7Counterexample {
        pair,
        signs,
        weak_count: weak.count(),
        strong_count: strong.count(),
        pos_neg_edges,
    }
}

/// Where the certified eigenvalue lands in the numeric spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexCheck {
    /// First 1-based index within [`INDEX_TOL`] of the certified value.
    pub k_lo: usize,
    /// Last such index.
    pub k_hi: usize,
    /// Worst agreement over the matched range.
    pub max_abs_error: f64,
    /// False when no numeric eigenvalue matches.
    pub pass: bool,
}

/// Decompose the pair's graph numerically and locate the certified
/// eigenvalue's index range. For a certified pair the range is exactly the
/// multiplicity cluster of λ.
pub fn index_check(pair: &ExactEigenpair) -> Result<IndexCheck, SpectraError> {
    let spectrum = spectra::eigendecompose(&pair.graph.operator())?;
    let target = pair.lambda.to_f64();
    let mut k_lo = 0usize;
    let mut k_hi = 0usize;
    let mut max_abs_error = 0.0f64;
    for k in 1..=spectrum.n() {
        let err = (spectrum.eigenvalue(k) - target).abs();
        if err <= INDEX_TOL {
            if k_lo == 0 {
                k_lo = k;
            }
            k_hi = k;
            max_abs_error = max_abs_error.max(err);
        }
    }
    Ok(IndexCheck {
        k_lo,
        k_hi,
        max_abs_error,
        pass: k_lo != 0,
    })
}
