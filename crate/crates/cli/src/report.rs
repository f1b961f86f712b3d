//! Machine-readable report documents.
//!
//! Every document carries `schema_version` and a `command` discriminator.
//! Keys are emitted in struct declaration order and floating-point numbers in
//! scientific notation with 17 significant digits (enough to reconstruct any
//! `f64` exactly), so identical inputs always produce byte-identical output.

use std::io::{self, Write};

use nodal_core::{
    courant, spectra, CaseOutcome, CaseRecord, GraphKind, PerronReport, ProofDiagnostics,
    SuiteReport, VerificationReport, WeightedGraph,
};
use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter, Serializer};

pub const SCHEMA_VERSION: u32 = 1;

/// Serialize any document with the fixed report formatting (two-space pretty
/// printing, 17-significant-digit floats, trailing newline).
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = Serializer::with_formatter(&mut out, ReportFormatter::new());
    value
        .serialize(&mut ser)
        .expect("in-memory report serialization cannot fail");
    out.push(b'\n');
    String::from_utf8(out).expect("report JSON is UTF-8")
}

/// Pretty formatter whose float rendering is fixed-width scientific notation
/// rather than shortest-round-trip, pinning the byte-level output.
struct ReportFormatter<'a> {
    inner: PrettyFormatter<'a>,
}

impl ReportFormatter<'_> {
    fn new() -> Self {
        Self {
            inner: PrettyFormatter::new(),
        }
    }
}

impl Formatter for ReportFormatter<'_> {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        write!(writer, "{value:.16e}")
    }

    fn begin_array<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.begin_array(writer)
    }

    fn end_array<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.end_array(writer)
    }

    fn begin_array_value<W>(&mut self, writer: &mut W, first: bool) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.begin_array_value(writer, first)
    }

    fn end_array_value<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.end_array_value(writer)
    }

    fn begin_object<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.begin_object(writer)
    }

    fn end_object<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.end_object(writer)
    }

    fn begin_object_key<W>(&mut self, writer: &mut W, first: bool) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.begin_object_key(writer, first)
    }

    fn begin_object_value<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.begin_object_value(writer)
    }

    fn end_object_value<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.inner.end_object_value(writer)
    }
}

#[derive(Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edge_count: usize,
}

impl GraphSummary {
    pub fn of(graph: &WeightedGraph) -> Self {
        Self {
            n: graph.n(),
            edge_count: graph.edge_count(),
        }
    }
}

/// Every tolerance a verification run depends on, echoed so reports are
/// self-describing.
#[derive(Serialize)]
pub struct ToleranceSet {
    pub tau: f64,
    pub group_tol: f64,
    pub residual_tol: f64,
    pub ortho_tol: f64,
    pub remainder_tol: f64,
    pub identity_tol: f64,
    pub orthogonality_tol: f64,
}

impl ToleranceSet {
    pub fn with_tau(tau: f64) -> Self {
        Self {
            tau,
            group_tol: spectra::DEFAULT_GROUP_TOL,
            residual_tol: spectra::RESIDUAL_TOL,
            ortho_tol: spectra::ORTHO_TOL,
            remainder_tol: courant::REMAINDER_TOL,
            identity_tol: courant::IDENTITY_TOL,
            orthogonality_tol: courant::ORTHOGONALITY_TOL,
        }
    }
}

#[derive(Serialize)]
pub struct ClusterEntry {
    pub k_lo: usize,
    pub k_hi: usize,
    pub lambda: f64,
}

#[derive(Serialize)]
pub struct SpectrumDocument {
    pub schema_version: u32,
    pub command: &'static str,
    pub graph: GraphSummary,
    pub eigenvalues: Vec<f64>,
    pub clusters: Vec<ClusterEntry>,
}

pub fn spectrum_document(
    graph: &WeightedGraph,
    spectrum: &spectra::Spectrum,
    groups: &spectra::EigenGroups,
) -> SpectrumDocument {
    SpectrumDocument {
        schema_version: SCHEMA_VERSION,
        command: "spectrum",
        graph: GraphSummary::of(graph),
        eigenvalues: spectrum.eigenvalues().to_vec(),
        clusters: groups
            .clusters()
            .iter()
            .map(|&(k_lo, k_hi)| ClusterEntry {
                k_lo,
                k_hi,
                lambda: spectrum.eigenvalue(k_lo),
            })
            .collect(),
    }
}

#[derive(Serialize)]
pub struct DomainEntry {
    pub sign: i8,
    pub vertices: Vec<usize>,
}

#[derive(Serialize)]
pub struct DomainSection {
    pub count: usize,
    pub bound: usize,
    pub domains: Vec<DomainEntry>,
}

#[derive(Serialize)]
pub struct DomainsDocument {
    pub schema_version: u32,
    pub command: &'static str,
    pub graph: GraphSummary,
    pub k: usize,
    pub tau: f64,
    pub lambda: f64,
    pub k_lo: usize,
    pub k_hi: usize,
    pub weak: Option<DomainSection>,
    pub strong: Option<DomainSection>,
}

pub fn domain_section(partition: &nodal_core::NodalPartition, bound: usize) -> DomainSection {
    DomainSection {
        count: partition.count(),
        bound,
        domains: partition
            .domains()
            .iter()
            .map(|d| DomainEntry {
                sign: d.sign,
                vertices: d.vertices.clone(),
            })
            .collect(),
    }
}

#[derive(Serialize)]
pub struct ProofEntry {
    pub m: usize,
    pub remainder: f64,
    pub rayleigh: f64,
    pub norm_defect: f64,
    pub identity_defect: f64,
    pub variational_margin: f64,
    pub orthogonality_defect: f64,
    pub pass: bool,
}

impl ProofEntry {
    fn of(d: &ProofDiagnostics) -> Self {
        Self {
            m: d.m,
            remainder: d.remainder,
            rayleigh: d.rayleigh,
            norm_defect: d.norm_defect,
            identity_defect: d.identity_defect,
            variational_margin: d.variational_margin,
            orthogonality_defect: d.orthogonality_defect,
            pass: d.pass(),
        }
    }
}

#[derive(Serialize)]
pub struct RecordEntry {
    pub k: usize,
    pub sample: usize,
    pub lambda: f64,
    pub k_lo: usize,
    pub k_hi: usize,
    pub weak_count: usize,
    pub strong_count: usize,
    pub weak_ok: bool,
    pub strong_ok: bool,
    pub fiedler_ok: Option<bool>,
    pub powers_ok: Option<bool>,
    pub proof: Option<ProofEntry>,
    pub pass: bool,
}

impl RecordEntry {
    fn of(r: &CaseRecord) -> Self {
        Self {
            k: r.k,
            sample: r.sample,
            lambda: r.lambda,
            k_lo: r.k_lo,
            k_hi: r.k_hi,
            weak_count: r.weak_count,
            strong_count: r.strong_count,
            weak_ok: r.weak_ok,
            strong_ok: r.strong_ok,
            fiedler_ok: r.fiedler_ok,
            powers_ok: r.powers_ok,
            proof: r.proof.as_ref().map(ProofEntry::of),
            pass: r.pass(),
        }
    }
}

#[derive(Serialize)]
pub struct PerronEntry {
    pub simple: bool,
    pub single_signed: bool,
    pub gap: f64,
    pub min_entry: f64,
    pub pass: bool,
}

impl PerronEntry {
    fn of(p: &PerronReport) -> Self {
        Self {
            simple: p.simple,
            single_signed: p.single_signed,
            gap: p.gap,
            min_entry: p.min_entry,
            pass: p.holds(),
        }
    }
}

#[derive(Serialize)]
pub struct GroupEntry {
    pub k: usize,
    pub lambda: f64,
    pub k_lo: usize,
    pub k_hi: usize,
}

#[derive(Serialize)]
pub struct VerifyDocument {
    pub schema_version: u32,
    pub command: &'static str,
    pub graph: GraphSummary,
    pub seed: u64,
    pub samples_per_cluster: usize,
    pub tolerances: ToleranceSet,
    pub eigenvalues: Vec<f64>,
    pub groups: Vec<GroupEntry>,
    pub records: Vec<RecordEntry>,
    pub perron: PerronEntry,
    pub pass: bool,
}

pub fn verify_document(report: &VerificationReport) -> VerifyDocument {
    VerifyDocument {
        schema_version: SCHEMA_VERSION,
        command: "verify",
        graph: GraphSummary {
            n: report.n,
            edge_count: report.edge_count,
        },
        seed: report.seed,
        samples_per_cluster: report.samples_per_cluster,
        tolerances: ToleranceSet::with_tau(report.tau),
        eigenvalues: report.eigenvalues.clone(),
        groups: report
            .cluster_bounds
            .iter()
            .enumerate()
            .map(|(i, &(k_lo, k_hi))| GroupEntry {
                k: i + 1,
                lambda: report.eigenvalues[i],
                k_lo,
                k_hi,
            })
            .collect(),
        records: report.records.iter().map(RecordEntry::of).collect(),
        perron: PerronEntry::of(&report.perron),
        pass: report.pass,
    }
}

pub fn kind_name(kind: GraphKind) -> &'static str {
    match kind {
        GraphKind::Path => "path",
        GraphKind::Cycle => "cycle",
        GraphKind::Star => "star",
        GraphKind::RandomTree => "random-tree",
        GraphKind::ErdosRenyi => "erdos-renyi",
    }
}

#[derive(Serialize)]
pub struct CaseEntry {
    pub index: usize,
    pub kind: &'static str,
    pub n: usize,
    pub graph_seed: u64,
    pub verify_seed: u64,
    pub record_count: usize,
    pub failed_records: usize,
    pub perron_ok: bool,
    pub oracle_checked: bool,
    pub oracle_ok: bool,
    pub pass: bool,
}

impl CaseEntry {
    fn of(c: &CaseOutcome) -> Self {
        Self {
            index: c.index,
            kind: kind_name(c.kind),
            n: c.n,
            graph_seed: c.graph_seed,
            verify_seed: c.verify_seed,
            record_count: c.record_count,
            failed_records: c.failed_records,
            perron_ok: c.perron_ok,
            oracle_checked: c.oracle_checked,
            oracle_ok: c.oracle_ok,
            pass: c.pass(),
        }
    }
}

#[derive(Serialize)]
pub struct SuiteDocument {
    pub schema_version: u32,
    pub command: &'static str,
    pub cases: usize,
    pub max_n: usize,
    pub seed: u64,
    pub samples_per_cluster: usize,
    pub tau: f64,
    pub records_checked: usize,
    pub bound_violations: usize,
    pub perron_failures: usize,
    pub oracle_graphs: usize,
    pub oracle_mismatches: usize,
    pub case_results: Vec<CaseEntry>,
    pub pass: bool,
}

pub fn suite_document(report: &SuiteReport) -> SuiteDocument {
    SuiteDocument {
        schema_version: SCHEMA_VERSION,
        command: "suite",
        cases: report.config.cases,
        max_n: report.config.max_n,
        seed: report.config.seed,
        samples_per_cluster: report.config.samples_per_cluster,
        tau: report.config.tau,
        records_checked: report.records_checked,
        bound_violations: report.bound_violations,
        perron_failures: report.perron_failures,
        oracle_graphs: report.oracle_graphs,
        oracle_mismatches: report.oracle_mismatches,
        case_results: report.cases.iter().map(CaseEntry::of).collect(),
        pass: report.pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Probe {
        value: f64,
        list: Vec<f64>,
        flag: bool,
    }

    #[test]
    fn floats_use_seventeen_significant_digits() {
        let text = to_json_string(&Probe {
            value: 2.618033988749895,
            list: vec![0.0, 1.0, -0.5],
            flag: true,
        });
        assert!(text.contains("2.6180339887498949e0"), "{text}");
        assert!(text.contains("0.0000000000000000e0"), "{text}");
        assert!(text.contains("1.0000000000000000e0"), "{text}");
        assert!(text.contains("-5.0000000000000000e-1"), "{text}");
        assert!(text.ends_with("}\n"));
    }

    #[test]
    fn serialization_is_reproducible() {
        let probe = Probe {
            value: 1.0 / 3.0,
            list: vec![f64::MIN_POSITIVE, 1e300],
            flag: false,
        };
        assert_eq!(to_json_string(&probe), to_json_string(&probe));
    }

    #[test]
    fn scientific_form_reconstructs_the_exact_float() {
        for &v in &[1.0 / 3.0, 2.618033988749895, -1.2345678901234567e-8] {
            let text = format!("{v:.16e}");
            let back: f64 = text.parse().unwrap();
            assert_eq!(back, v);
        }
    }

    #[test]
    fn keys_appear_in_declaration_order() {
        let text = to_json_string(&Probe {
            value: 0.0,
            list: vec![],
            flag: true,
        });
        let value_at = text.find("\"value\"").unwrap();
        let list_at = text.find("\"list\"").unwrap();
        let flag_at = text.find("\"flag\"").unwrap();
        assert!(value_at < list_at && list_at < flag_at);
    }
}
