//! Sign classification of eigenfunction values and enumeration of weak and
//! strong nodal domains.
//!
//! A strong nodal domain is a maximal connected vertex set on which the
//! function is strictly of one sign; a weak nodal domain is a maximal
//! connected set on which it does not change strict sign (zeros allowed).
//! The fast enumeration here computes strong domains as connected components
//! of the support under equal-sign edges, and weak domains by the two-sided
//! rule: components of the subgraph induced on `{sign ≥ 0}` containing at
//! least one strictly positive vertex, plus the mirror image on `{sign ≤ 0}`.
//! [`brute_force_domains`] enumerates maximal subsets directly and exists to
//! cross-check that equivalence on small graphs.

use crate::dsu::DisjointSets;
use crate::graph::WeightedGraph;
use std::collections::BTreeSet;
use thiserror::Error;

/// Default relative zero tolerance: entries with `|f(x)| ≤ τ·‖f‖_∞` count as
/// sign 0.
pub const DEFAULT_SIGN_TOL: f64 = 1e-8;

/// Vertex-count cap for [`brute_force_domains`].
pub const BRUTE_FORCE_MAX: usize = 20;

#[derive(Debug, Error)]
pub enum NodalError {
    #[error("every entry is within tolerance of zero; not an eigenfunction")]
    AllZero,
    #[error("brute-force enumeration is capped at {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("expected {expected} entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("sign value {value} at vertex {vertex}; signs must be -1, 0, or +1")]
    BadSignValue { vertex: usize, value: i8 },
}

/// Signs of a function's values: `+1`, `-1`, or `0` per vertex, together with
/// the tolerance that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct SignVector {
    signs: Vec<i8>,
    tau: f64,
    support: Vec<usize>,
}

impl SignVector {
    /// Wrap exactly known signs (no tolerance involved, `tau` reported as 0).
    pub fn from_signs(signs: Vec<i8>) -> Result<Self, NodalError> {
        for (vertex, &value) in signs.iter().enumerate() {
            if !(-1..=1).contains(&value) {
                return Err(NodalError::BadSignValue { vertex, value });
            }
        }
        let support: Vec<usize> = (0..signs.len()).filter(|&x| signs[x] != 0).collect();
        if support.is_empty() {
            return Err(NodalError::AllZero);
        }
        Ok(SignVector {
            signs,
            tau: 0.0,
            support,
        })
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign(&self, x: usize) -> i8 {
        self.signs[x]
    }

    /// The relative tolerance used to classify the signs.
    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// Vertices with non-zero sign, ascending.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }
}

/// Classify values into signs with relative zero tolerance `tau`:
/// `|f(x)| ≤ tau·‖f‖_∞` becomes 0, everything else keeps its strict sign.
///
/// # Panics
/// If `tau` is outside `[0, 1)`.
pub fn classify_signs(f: &[f64], tau: f64) -> Result<SignVector, NodalError> {
    assert!(
        (0.0..1.0).contains(&tau),
        "zero tolerance {tau} must lie in [0, 1)"
    );
    let norm = f.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let threshold = tau * norm;
    let signs: Vec<i8> = f
        .iter()
        .map(|&x| {
            if x.abs() <= threshold || x == 0.0 {
                0
            } else if x > 0.0 {
                1
            } else {
                -1
            }
        })
        .collect();
    let support: Vec<usize> = (0..signs.len()).filter(|&x| signs[x] != 0).collect();
    if support.is_empty() {
        return Err(NodalError::AllZero);
    }
    Ok(SignVector {
        signs,
        tau,
        support,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainKind {
    Weak,
    Strong,
}

/// One nodal domain: a connected vertex set of a single strict sign class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodalDomain {
    pub kind: DomainKind,
    /// +1 or -1: the strict sign the domain carries.
    pub sign: i8,
    /// Ascending vertex list; for weak domains this may include sign-0
    /// vertices.
    pub vertices: Vec<usize>,
}

/// All nodal domains of one kind for one sign vector, in deterministic order
/// (positive domains first, then by smallest vertex).
#[derive(Debug, Clone, PartialEq)]
pub struct NodalPartition {
    kind: DomainKind,
    domains: Vec<NodalDomain>,
    signs: Vec<i8>,
}

impl NodalPartition {
    pub fn kind(&self) -> DomainKind {
        self.kind
    }

    pub fn count(&self) -> usize {
        self.domains.len()
    }

    pub fn domains(&self) -> &[NodalDomain] {
        &self.domains
    }

    /// The vertex signs this partition was derived from.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Domain vertex sets only, for set-level comparisons.
    pub fn vertex_sets(&self) -> BTreeSet<Vec<usize>> {
        self.domains.iter().map(|d| d.vertices.clone()).collect()
    }

    fn assemble(kind: DomainKind, mut domains: Vec<NodalDomain>, signs: &[i8]) -> Self {
        domains.sort_by_key(|d| (std::cmp::Reverse(d.sign), d.vertices[0]));
        NodalPartition {
            kind,
            domains,
            signs: signs.to_vec(),
        }
    }
}

fn check_dims(g: &WeightedGraph, s: &SignVector) -> Result<(), NodalError> {
    if s.len() != g.n() {
        return Err(NodalError::DimensionMismatch {
            expected: g.n(),
            got: s.len(),
        });
    }
    Ok(())
}

/// Strong nodal domains: connected components of the support under edges
/// whose endpoints carry equal strict signs.
pub fn strong_domains(g: &WeightedGraph, s: &SignVector) -> Result<NodalPartition, NodalError> {
    check_dims(g, s)?;
    let n = g.n();
    let mut dsu = DisjointSets::new(n);
    for e in g.edges() {
        if s.sign(e.u) != 0 && s.sign(e.u) == s.sign(e.v) {
            dsu.union(e.u, e.v);
        }
    }
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &x in s.support() {
        members[dsu.find(x)].push(x);
    }
    let domains: Vec<NodalDomain> = members
        .into_iter()
        .filter(|m| !m.is_empty())
        .map(|vertices| NodalDomain {
            kind: DomainKind::Strong,
            sign: s.sign(vertices[0]),
            vertices,
        })
        .collect();
    Ok(NodalPartition::assemble(
        DomainKind::Strong,
        domains,
        s.signs(),
    ))
}

/// Weak nodal domains by the two-sided component rule. Sign-0 vertices may
/// appear in one positive and one negative domain at once; every vertex lies
/// in at least one domain.
pub fn weak_domains(g: &WeightedGraph, s: &SignVector) -> Result<NodalPartition, NodalError> {
    check_dims(g, s)?;
    let mut domains = Vec::new();
    for side in [1i8, -1i8] {
        domains.extend(weak_side(g, s, side));
    }
    Ok(NodalPartition::assemble(
        DomainKind::Weak,
        domains,
        s.signs(),
    ))
}

fn weak_side(g: &WeightedGraph, s: &SignVector, side: i8) -> Vec<NodalDomain> {
    let n = g.n();
    let keep: Vec<bool> = (0..n)
        .map(|x| s.sign(x) == 0 || s.sign(x) == side)
        .collect();
    let mut dsu = DisjointSets::new(n);
    for e in g.edges() {
        if keep[e.u] && keep[e.v] {
            dsu.union(e.u, e.v);
        }
    }
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut has_side = vec![false; n];
    for (x, &kept) in keep.iter().enumerate() {
        if kept {
            let root = dsu.find(x);
            members[root].push(x);
            if s.sign(x) == side {
                has_side[root] = true;
            }
        }
    }
    (0..n)
        .filter(|&root| has_side[root])
        .map(|root| NodalDomain {
            kind: DomainKind::Weak,
            sign: side,
            vertices: std::mem::take(&mut members[root]),
        })
        .collect()
}

/// Enumerate maximal connected sign-compatible subsets directly. Exponential;
/// a test oracle for the fast enumerations, capped at [`BRUTE_FORCE_MAX`]
/// vertices.
pub fn brute_force_domains(
    g: &WeightedGraph,
    s: &SignVector,
    kind: DomainKind,
) -> Result<NodalPartition, NodalError> {
    check_dims(g, s)?;
    let n = g.n();
    if n > BRUTE_FORCE_MAX {
        return Err(NodalError::TooLarge {
            n,
            max: BRUTE_FORCE_MAX,
        });
    }
    let adjacency: Vec<u32> = (0..n)
        .map(|x| {
            g.neighbors(x)
                .iter()
                .fold(0u32, |acc, &(y, _)| acc | (1 << y))
        })
        .collect();
    let compatible = |mask: u32| -> bool {
        let mut pos = false;
        let mut neg = false;
        let mut zero = false;
        for x in 0..n {
            if mask & (1 << x) != 0 {
                match s.sign(x) {
                    1 => pos = true,
                    -1 => neg = true,
                    _ => zero = true,
                }
            }
        }
        match kind {
            DomainKind::Strong => !zero && !(pos && neg),
            DomainKind::Weak => !(pos && neg),
        }
    };
    let connected = |mask: u32| -> bool {
        let start = mask.trailing_zeros();
        let mut reached = 1u32 << start;
        loop {
            let mut next = reached;
            for (x, adj) in adjacency.iter().enumerate() {
                if reached & (1 << x) != 0 {
                    next |= adj & mask;
                }
            }
            if next == reached {
                return reached == mask;
            }
            reached = next;
        }
    };

    let mut domains = Vec::new();
    for mask in 1u32..(1u32 << n) {
        if !compatible(mask) || !connected(mask) {
            continue;
        }
        // maximal iff no adjacent vertex extends it to another valid set;
        // any valid superset would provide such a one-vertex extension
        let fringe = (0..n)
            .filter(|&x| mask & (1 << x) == 0 && adjacency[x] & mask != 0)
            .fold(0u32, |acc, x| acc | (1 << x));
        let mut maximal = true;
        for x in 0..n {
            if fringe & (1 << x) != 0 && compatible(mask | (1 << x)) {
                maximal = false;
                break;
            }
        }
        if !maximal {
            continue;
        }
        let vertices: Vec<usize> = (0..n).filter(|&x| mask & (1 << x) != 0).collect();
        let sign = vertices
            .iter()
            .map(|&x| s.sign(x))
            .find(|&sg| sg != 0)
            .expect("maximal domain in a graph with non-empty support has a signed vertex");
        domains.push(NodalDomain {
            kind,
            sign,
            vertices,
        });
    }
    Ok(NodalPartition::assemble(kind, domains, s.signs()))
}

/// Which domains touch which, plus the edges joining strictly positive to
/// strictly negative vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainAdjacency {
    pairs: Vec<(usize, usize)>,
    pos_neg_edges: Vec<(usize, usize)>,
}

impl DomainAdjacency {
    /// Unordered adjacent domain index pairs `(i, j)` with `i < j`, sorted.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        let key = (i.min(j), i.max(j));
        self.pairs.binary_search(&key).is_ok()
    }

    /// Edges `{u, v}` with `sign(u)·sign(v) = -1`, in edge order.
    pub fn pos_neg_edges(&self) -> &[(usize, usize)] {
        &self.pos_neg_edges
    }
}

/// Compute the adjacency relation over a partition's domains: `D_i` touches
/// `D_j` when some edge joins a vertex of one to a vertex of the other that
/// the first does not contain.
pub fn domain_adjacency(g: &WeightedGraph, p: &NodalPartition) -> DomainAdjacency {
    let n = g.n();
    let mut membership: Vec<Vec<bool>> = Vec::with_capacity(p.count());
    let mut holding: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, d) in p.domains().iter().enumerate() {
        let mut member = vec![false; n];
        for &x in &d.vertices {
            member[x] = true;
            holding[x].push(i);
        }
        membership.push(member);
    }

    let mut pairs = BTreeSet::new();
    for e in g.edges() {
        for &i in &holding[e.u] {
            for &j in &holding[e.v] {
                if i != j && (!membership[i][e.v] || !membership[j][e.u]) {
                    pairs.insert((i.min(j), i.max(j)));
                }
            }
        }
    }

    let pos_neg_edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|e| p.signs()[e.u] as i32 * p.signs()[e.v] as i32 == -1)
        .map(|e| (e.u, e.v))
        .collect();

    DomainAdjacency {
        pairs: pairs.into_iter().collect(),
        pos_neg_edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(n: usize) -> WeightedGraph {
        let edges: Vec<(usize, usize, f64)> = (1..n).map(|leaf| (0, leaf, 1.0)).collect();
        WeightedGraph::new(n, &edges, None).unwrap()
    }

    fn path(n: usize) -> WeightedGraph {
        let edges: Vec<(usize, usize, f64)> = (1..n).map(|v| (v - 1, v, 1.0)).collect();
        WeightedGraph::new(n, &edges, None).unwrap()
    }

    fn tree7() -> WeightedGraph {
        WeightedGraph::new(
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
        .unwrap()
    }

    fn sets(p: &NodalPartition) -> Vec<Vec<usize>> {
        p.domains().iter().map(|d| d.vertices.clone()).collect()
    }

    #[test]
    fn classify_with_zero_entry() {
        let s = classify_signs(&[0.0, 1.0, 1.0, -1.0, -1.0], 1e-8).unwrap();
        assert_eq!(s.signs(), &[0, 1, 1, -1, -1]);
        assert_eq!(s.support(), &[1, 2, 3, 4]);
        assert_eq!(s.tau(), 1e-8);
    }

    #[test]
    fn classify_constant_vector() {
        let s = classify_signs(&[1.0, 1.0, 1.0], 0.5).unwrap();
        assert_eq!(s.signs(), &[1, 1, 1]);
    }

    #[test]
    fn classify_below_relative_threshold() {
        let s = classify_signs(&[1e-12, 1.0], 1e-8).unwrap();
        assert_eq!(s.signs(), &[0, 1]);
        // with zero tolerance the tiny entry keeps its sign
        let exact = classify_signs(&[1e-12, 1.0], 0.0).unwrap();
        assert_eq!(exact.signs(), &[1, 1]);
    }

    #[test]
    fn classify_rejects_zero_vector() {
        assert!(matches!(
            classify_signs(&[0.0, 0.0], 1e-8),
            Err(NodalError::AllZero)
        ));
    }

    #[test]
    #[should_panic(expected = "must lie in [0, 1)")]
    fn classify_rejects_tau_one() {
        let _ = classify_signs(&[1.0], 1.0);
    }

    #[test]
    fn from_signs_validates() {
        assert!(SignVector::from_signs(vec![0, 1, -1]).is_ok());
        assert!(matches!(
            SignVector::from_signs(vec![0, 0]),
            Err(NodalError::AllZero)
        ));
        assert!(matches!(
            SignVector::from_signs(vec![2, 0]),
            Err(NodalError::BadSignValue {
                vertex: 0,
                value: 2
            })
        ));
    }

    #[test]
    fn star_strong_domains_are_leaf_singletons() {
        let g = star(5);
        let s = SignVector::from_signs(vec![0, 1, 1, -1, -1]).unwrap();
        let p = strong_domains(&g, &s).unwrap();
        assert_eq!(p.count(), 4);
        assert_eq!(sets(&p), vec![vec![1], vec![2], vec![3], vec![4]]);
        let signs: Vec<i8> = p.domains().iter().map(|d| d.sign).collect();
        assert_eq!(signs, vec![1, 1, -1, -1]);
    }

    #[test]
    fn star_weak_domains_share_the_center() {
        let g = star(5);
        let s = SignVector::from_signs(vec![0, 1, 1, -1, -1]).unwrap();
        let p = weak_domains(&g, &s).unwrap();
        assert_eq!(p.count(), 2);
        assert_eq!(sets(&p), vec![vec![0, 1, 2], vec![0, 3, 4]]);
        assert_eq!(p.domains()[0].sign, 1);
        assert_eq!(p.domains()[1].sign, -1);
    }

    #[test]
    fn tree7_counts_match_published_example() {
        let g = tree7();
        // signs of (2, -1-√5, 0, (1+√5)/2, (1+√5)/2, -1, -1)
        let s = SignVector::from_signs(vec![1, -1, 0, 1, 1, -1, -1]).unwrap();
        let weak = weak_domains(&g, &s).unwrap();
        assert_eq!(weak.count(), 5);
        assert_eq!(
            sets(&weak),
            vec![vec![0], vec![2, 3, 4], vec![1, 2], vec![5], vec![6]]
        );
        let strong = strong_domains(&g, &s).unwrap();
        assert_eq!(strong.count(), 6);
        assert_eq!(
            sets(&strong),
            vec![vec![0], vec![3], vec![4], vec![1], vec![5], vec![6]]
        );
    }

    #[test]
    fn tree7_pos_neg_edges() {
        let g = tree7();
        let s = SignVector::from_signs(vec![1, -1, 0, 1, 1, -1, -1]).unwrap();
        let p = strong_domains(&g, &s).unwrap();
        let adj = domain_adjacency(&g, &p);
        assert_eq!(adj.pos_neg_edges(), &[(0, 1), (3, 5), (4, 6)]);
    }

    #[test]
    fn all_positive_vector_gives_one_domain_of_each_kind() {
        let g = tree7();
        let s = classify_signs(&[1.0; 7], 1e-8).unwrap();
        let weak = weak_domains(&g, &s).unwrap();
        let strong = strong_domains(&g, &s).unwrap();
        assert_eq!(sets(&weak), vec![vec![0, 1, 2, 3, 4, 5, 6]]);
        assert_eq!(sets(&strong), vec![vec![0, 1, 2, 3, 4, 5, 6]]);
        assert!(domain_adjacency(&g, &weak).pairs().is_empty());
    }

    #[test]
    fn alternating_path_brute_force() {
        let g = path(3);
        let s = SignVector::from_signs(vec![1, -1, 1]).unwrap();
        let strong = brute_force_domains(&g, &s, DomainKind::Strong).unwrap();
        assert_eq!(sets(&strong), vec![vec![0], vec![2], vec![1]]);
        let fast = strong_domains(&g, &s).unwrap();
        assert_eq!(fast.vertex_sets(), strong.vertex_sets());
    }

    #[test]
    fn zero_does_not_separate_equal_signs() {
        let g = path(3);
        let s = SignVector::from_signs(vec![1, 0, 1]).unwrap();
        let weak = brute_force_domains(&g, &s, DomainKind::Weak).unwrap();
        assert_eq!(sets(&weak), vec![vec![0, 1, 2]]);
        let fast = weak_domains(&g, &s).unwrap();
        assert_eq!(fast.vertex_sets(), weak.vertex_sets());
        let strong = strong_domains(&g, &s).unwrap();
        assert_eq!(sets(&strong), vec![vec![0], vec![2]]);
    }

    #[test]
    fn brute_force_respects_cap() {
        let g = path(BRUTE_FORCE_MAX + 1);
        let s = classify_signs(&[1.0; BRUTE_FORCE_MAX + 1], 1e-8).unwrap();
        assert!(matches!(
            brute_force_domains(&g, &s, DomainKind::Weak),
            Err(NodalError::TooLarge { n: 21, max: 20 })
        ));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let g = path(3);
        let s = SignVector::from_signs(vec![1, -1]).unwrap();
        assert!(matches!(
            weak_domains(&g, &s),
            Err(NodalError::DimensionMismatch {
                expected: 3,
                got: 2
            })
        ));
    }

    fn random_graph_and_signs(
        rng: &mut rand_chacha::ChaCha8Rng,
        max_n: usize,
    ) -> (WeightedGraph, SignVector) {
        use rand::Rng;
        let n = rng.random_range(2..=max_n);
        let mut edges: Vec<(usize, usize, f64)> =
            (1..n).map(|v| (rng.random_range(0..v), v, 1.0)).collect();
        for _ in 0..n {
            let u = rng.random_range(0..n);
            let v = rng.random_range(0..n);
            if u != v
                && !edges
                    .iter()
                    .any(|&(a, b, _)| (a, b) == (u.min(v), u.max(v)))
            {
                edges.push((u.min(v), u.max(v), 1.0));
            }
        }
        let g = WeightedGraph::new(n, &edges, None).unwrap();
        let s = loop {
            let signs: Vec<i8> = (0..n)
                .map(|_| match rng.random_range(0..5) {
                    0 => 0,
                    1 | 2 => 1,
                    _ => -1,
                })
                .collect();
            if let Ok(s) = SignVector::from_signs(signs) {
                break s;
            }
        };
        (g, s)
    }

    #[test]
    fn oracle_equivalence_on_random_small_graphs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(101);
        for _ in 0..60 {
            let (g, s) = random_graph_and_signs(&mut rng, 8);
            for kind in [DomainKind::Weak, DomainKind::Strong] {
                let fast = match kind {
                    DomainKind::Weak => weak_domains(&g, &s).unwrap(),
                    DomainKind::Strong => strong_domains(&g, &s).unwrap(),
                };
                let oracle = brute_force_domains(&g, &s, kind).unwrap();
                assert_eq!(
                    fast.vertex_sets(),
                    oracle.vertex_sets(),
                    "kind {kind:?} mismatch on {g:?} signs {:?}",
                    s.signs()
                );
                // identical order too, not just identical sets
                assert_eq!(sets(&fast), sets(&oracle));
            }
        }
    }

    #[test]
    fn weak_partition_properties_hold() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(103);
        for _ in 0..40 {
            let (g, s) = random_graph_and_signs(&mut rng, 10);
            let weak = weak_domains(&g, &s).unwrap();
            // (a) domains cover every vertex
            let mut covered = vec![false; g.n()];
            for d in weak.domains() {
                for &x in &d.vertices {
                    covered[x] = true;
                }
            }
            assert!(covered.iter().all(|&c| c));
            // (b) non-zero vertices of a domain share its sign
            for d in weak.domains() {
                assert!(d
                    .vertices
                    .iter()
                    .all(|&x| s.sign(x) == 0 || s.sign(x) == d.sign));
                assert!(d.vertices.iter().any(|&x| s.sign(x) == d.sign));
            }
            // (c) overlaps are zero vertices of opposite-signed domains
            for (i, a) in weak.domains().iter().enumerate() {
                for b in weak.domains().iter().skip(i + 1) {
                    let shared: Vec<usize> = a
                        .vertices
                        .iter()
                        .filter(|x| b.vertices.contains(x))
                        .cloned()
                        .collect();
                    if !shared.is_empty() {
                        assert_ne!(a.sign, b.sign);
                        assert!(shared.iter().all(|&x| s.sign(x) == 0));
                    }
                }
            }
            // adjacent weak domains carry opposite signs
            let adj = domain_adjacency(&g, &weak);
            for &(i, j) in adj.pairs() {
                assert_ne!(weak.domains()[i].sign, weak.domains()[j].sign);
            }
            // strong domains tile the support exactly
            let strong = strong_domains(&g, &s).unwrap();
            let mut seen = vec![false; g.n()];
            for d in strong.domains() {
                for &x in &d.vertices {
                    assert!(!seen[x], "strong domains must be disjoint");
                    seen[x] = true;
                    assert_eq!(s.sign(x), d.sign);
                }
            }
            for (x, &was_seen) in seen.iter().enumerate() {
                assert_eq!(was_seen, s.sign(x) != 0);
            }
        }
    }

    #[test]
    fn counts_invariant_under_negation_and_scaling() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(107);
        for _ in 0..30 {
            let n = rng.random_range(2..=9);
            let g = path(n);
            let f: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
            let s = classify_signs(&f, 1e-8).unwrap();
            let neg: Vec<f64> = f.iter().map(|x| -x).collect();
            let scaled: Vec<f64> = f.iter().map(|x| 7.25 * x).collect();
            let s_neg = classify_signs(&neg, 1e-8).unwrap();
            let s_scaled = classify_signs(&scaled, 1e-8).unwrap();
            for (a, b) in [(&s, &s_neg), (&s, &s_scaled)] {
                assert_eq!(
                    weak_domains(&g, a).unwrap().count(),
                    weak_domains(&g, b).unwrap().count()
                );
                assert_eq!(
                    strong_domains(&g, a).unwrap().count(),
                    strong_domains(&g, b).unwrap().count()
                );
            }
        }
    }

    #[test]
    fn star_weak_adjacency_is_single_opposite_pair() {
        let g = star(5);
        let s = SignVector::from_signs(vec![0, 1, 1, -1, -1]).unwrap();
        let weak = weak_domains(&g, &s).unwrap();
        let adj = domain_adjacency(&g, &weak);
        assert_eq!(adj.pairs(), &[(0, 1)]);
        assert!(adj.is_adjacent(1, 0));
        assert!(adj.pos_neg_edges().is_empty());
    }
}
