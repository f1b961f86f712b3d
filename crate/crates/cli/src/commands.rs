//! Implementations of the six subcommands.
//!
//! Every command follows one exit-code contract: 0 when all checks pass,
//! 1 when a mathematical verification fails, 2 on input or usage errors.
//! Returning `Err(message)` from a command means an input error; the caller
//! prints the diagnostic to stderr and exits 2. Mathematical failures are
//! reported inline and returned as exit code 1.

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::ValueEnum;
use nodal_core::{
    courant, gallery, nodal, spectra,
    suite::{self, SuiteConfig},
    CaseRecord, EigenGroups, NodalPartition, SignVector, Spectrum, SuiteError, VerificationReport,
    WeightedGraph,
};

use crate::{dot, format, report};

pub const DEFAULT_TAU: f64 = 1e-8;
pub const DEFAULT_SAMPLES: usize = 5;
pub const DEFAULT_SEED: u64 = 0;

#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Weak,
    Strong,
    Both,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "star")]
    Star,
    #[value(name = "tree7")]
    Tree7,
}

fn load_graph(path: &Path) -> Result<WeightedGraph, String> {
    let text =
        fs::read_to_string(path).map_err(|err| format!("cannot read {}: {err}", path.display()))?;
    format::parse_graph(&text).map_err(|err| format!("{}: {err}", path.display()))
}

fn math_failure(message: &str) -> ExitCode {
    eprintln!("verification failure: {message}");
    ExitCode::from(1)
}

fn decompose(graph: &WeightedGraph) -> Result<Spectrum, ExitCode> {
    spectra::eigendecompose(&graph.operator()).map_err(|err| math_failure(&err.to_string()))
}

fn check_k(k: usize, n: usize) -> Result<(), String> {
    if k < 1 || k > n {
        return Err(format!("k = {k} is outside 1..={n}"));
    }
    Ok(())
}

fn check_tau(tau: f64) -> Result<(), String> {
    if !tau.is_finite() || !(0.0..1.0).contains(&tau) {
        return Err(format!("tau = {tau} must lie in [0, 1)"));
    }
    Ok(())
}

/// Up to ten decimal places with trailing zeros trimmed, so small integers
/// print as themselves.
fn trim10(v: f64) -> String {
    let s = format!("{v:.10}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn spectrum_line(spectrum: &Spectrum, groups: &EigenGroups) -> String {
    let parts: Vec<String> = groups
        .clusters()
        .iter()
        .map(|&(lo, hi)| {
            if lo == hi {
                trim10(spectrum.eigenvalue(lo))
            } else {
                let values: Vec<String> =
                    (lo..=hi).map(|k| trim10(spectrum.eigenvalue(k))).collect();
                format!("[{}]", values.join(", "))
            }
        })
        .collect();
    parts.join(", ")
}

fn vertex_list(vertices: &[usize]) -> String {
    let items: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
    format!("[{}]", items.join(", "))
}

pub fn cmd_spectrum(file: &Path, json: bool) -> Result<ExitCode, String> {
    let graph = load_graph(file)?;
    let spectrum = match decompose(&graph) {
        Ok(s) => s,
        Err(code) => return Ok(code),
    };
    let groups = spectra::group_eigenvalues(&spectrum, spectra::DEFAULT_GROUP_TOL);
    if json {
        print!(
            "{}",
            report::to_json_string(&report::spectrum_document(&graph, &spectrum, &groups))
        );
    } else {
        println!("{}", spectrum_line(&spectrum, &groups));
    }
    Ok(ExitCode::SUCCESS)
}

pub fn cmd_domains(
    file: &Path,
    k: usize,
    mode: Mode,
    tau: f64,
    json: bool,
) -> Result<ExitCode, String> {
    let graph = load_graph(file)?;
    check_k(k, graph.n())?;
    check_tau(tau)?;
    let spectrum = match decompose(&graph) {
        Ok(s) => s,
        Err(code) => return Ok(code),
    };
    let groups = spectra::group_eigenvalues(&spectrum, spectra::DEFAULT_GROUP_TOL);
    let f = spectrum.eigenvector(k);
    let signs = nodal::classify_signs(f, tau).map_err(|err| err.to_string())?;
    let weak = if mode != Mode::Strong {
        Some(nodal::weak_domains(&graph, &signs).map_err(|err| err.to_string())?)
    } else {
        None
    };
    let strong = if mode != Mode::Weak {
        Some(nodal::strong_domains(&graph, &signs).map_err(|err| err.to_string())?)
    } else {
        None
    };
    if json {
        let doc = report::DomainsDocument {
            schema_version: report::SCHEMA_VERSION,
            command: "domains",
            graph: report::GraphSummary::of(&graph),
            k,
            tau,
            lambda: spectrum.eigenvalue(k),
            k_lo: groups.lo(k),
            k_hi: groups.hi(k),
            weak: weak
                .as_ref()
                .map(|p| report::domain_section(p, groups.lo(k))),
            strong: strong
                .as_ref()
                .map(|p| report::domain_section(p, groups.hi(k))),
        };
        print!("{}", report::to_json_string(&doc));
    } else {
        println!(
            "k = {k}: lambda = {}, cluster [{}, {}]",
            trim10(spectrum.eigenvalue(k)),
            groups.lo(k),
            groups.hi(k)
        );
        if let Some(p) = &weak {
            print_partition("weak", p, groups.lo(k));
        }
        if let Some(p) = &strong {
            print_partition("strong", p, groups.hi(k));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_partition(name: &str, p: &NodalPartition, bound: usize) {
    println!("{name}: count {} (bound {bound})", p.count());
    for d in p.domains() {
        let sign = if d.sign > 0 { '+' } else { '-' };
        println!("  {sign} {}", vertex_list(&d.vertices));
    }
}

pub fn cmd_verify(
    file: &Path,
    samples: usize,
    seed: u64,
    tau: f64,
    json: bool,
) -> Result<ExitCode, String> {
    let graph = load_graph(file)?;
    check_tau(tau)?;
    let outcome = match courant::verify_graph(&graph, samples, seed, tau) {
        Ok(r) => r,
        Err(err) => return Ok(math_failure(&err.to_string())),
    };
    if json {
        print!(
            "{}",
            report::to_json_string(&report::verify_document(&outcome))
        );
    } else {
        print_verify_summary(&outcome);
    }
    Ok(if outcome.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn flag(v: Option<bool>) -> &'static str {
    match v {
        None => "-",
        Some(true) => "ok",
        Some(false) => "FAIL",
    }
}

fn print_verify_summary(r: &VerificationReport) {
    println!("graph: n = {}, {} edges", r.n, r.edge_count);
    println!(
        "seed {}, tau {:e}, {} samples per cluster",
        r.seed, r.tau, r.samples_per_cluster
    );
    let failed: Vec<&CaseRecord> = r.records.iter().filter(|rec| !rec.pass()).collect();
    println!(
        "records checked: {} ({} passed, {} failed)",
        r.records.len(),
        r.records.len() - failed.len(),
        failed.len()
    );
    for rec in &failed {
        println!(
            "  FAIL k={} sample={} weak={}/{} strong={}/{} fiedler={} powers={} proof={}",
            rec.k,
            rec.sample,
            rec.weak_count,
            rec.k_lo,
            rec.strong_count,
            rec.k_hi,
            flag(rec.fiedler_ok),
            flag(rec.powers_ok),
            flag(rec.proof.as_ref().map(|p| p.pass())),
        );
    }
    println!("perron: {}", if r.perron.holds() { "pass" } else { "FAIL" });
    println!("result: {}", if r.pass { "PASS" } else { "FAIL" });
}

pub fn cmd_gallery(which: Which, n: Option<usize>) -> Result<ExitCode, String> {
    match which {
        Which::Star => {
            let n = n.unwrap_or(5);
            if n < 3 {
                return Err(format!("star requires --n at least 3, got {n}"));
            }
            let star = gallery::star_counterexample(n);
            run_gallery(
                &format!("star on {n} vertices"),
                &star.pair,
                &star.signs,
                star.weak_count,
                2,
                star.strong_count,
                n - 1,
            )
        }
        Which::Tree7 => {
            if n.is_some() {
                return Err("tree7 has a fixed vertex count; --n is not accepted".to_string());
            }
            let tree = gallery::tree7_counterexample();
            run_gallery(
                "tree7 (rooted binary tree on 7 vertices)",
                &tree.pair,
                &tree.signs,
                tree.weak_count,
                5,
                tree.strong_count,
                6,
            )
        }
    }
}

/// Shared gallery reporting: exact certificate, numeric index range, domain
/// counts against their certified bounds, and the positive-negative edge
/// list from the weak partition's adjacency.
fn run_gallery(
    title: &str,
    pair: &gallery::ExactEigenpair,
    signs: &[i8],
    weak_count: usize,
    weak_bound: usize,
    strong_count: usize,
    strong_bound: usize,
) -> Result<ExitCode, String> {
    let cert = gallery::certify_exact(pair);
    let idx = match gallery::index_check(pair) {
        Ok(idx) => idx,
        Err(err) => return Ok(math_failure(&err.to_string())),
    };
    let sign_vector = SignVector::from_signs(signs.to_vec()).map_err(|err| err.to_string())?;
    let weak = nodal::weak_domains(&pair.graph, &sign_vector).map_err(|err| err.to_string())?;
    let adjacency = nodal::domain_adjacency(&pair.graph, &weak);
    let pos_neg = adjacency.pos_neg_edges();

    let f_text: Vec<String> = pair.f.iter().map(|q| q.to_string()).collect();
    println!("{title}");
    println!(
        "certified eigenpair: H f = ({}) f, f = ({})",
        pair.lambda,
        f_text.join(", ")
    );
    println!(
        "exact residual check: {}",
        if cert.pass { "pass" } else { "FAIL" }
    );
    println!(
        "numeric index range: [{}, {}] (expected [{weak_bound}, {strong_bound}]), max |error| = {:e}",
        idx.k_lo, idx.k_hi, idx.max_abs_error
    );
    println!("weak domains: {weak_count} (bound {weak_bound})");
    println!("strong domains: {strong_count} (bound {strong_bound})");
    if pos_neg.is_empty() {
        println!("pos-neg edges: none");
    } else {
        let items: Vec<String> = pos_neg
            .iter()
            .map(|&(u, v)| format!("({u}, {v})"))
            .collect();
        println!("pos-neg edges: {}", items.join(", "));
    }
    let pass = cert.pass
        && idx.pass
        && idx.k_lo == weak_bound
        && idx.k_hi == strong_bound
        && weak_count == weak_bound
        && strong_count == strong_bound;
    println!("result: {}", if pass { "PASS" } else { "FAIL" });
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

pub fn cmd_suite(
    cases: usize,
    max_n: usize,
    seed: u64,
    samples: usize,
    json: bool,
) -> Result<ExitCode, String> {
    if cases < 1 {
        return Err("--cases must be at least 1".to_string());
    }
    if max_n < 2 {
        return Err("--max-n must be at least 2".to_string());
    }
    let config = SuiteConfig {
        cases,
        max_n,
        seed,
        samples_per_cluster: samples,
        tau: DEFAULT_TAU,
    };
    let outcome = match suite::run_suite(&config) {
        Ok(r) => r,
        Err(SuiteError::Generate(err)) => return Err(err.to_string()),
        Err(err) => return Ok(math_failure(&err.to_string())),
    };
    if json {
        print!(
            "{}",
            report::to_json_string(&report::suite_document(&outcome))
        );
    } else {
        println!(
            "suite: {cases} cases, max n {max_n}, seed {seed}, {samples} samples per cluster, tau {:e}",
            DEFAULT_TAU
        );
        println!("records checked: {}", outcome.records_checked);
        println!("bound violations: {}", outcome.bound_violations);
        println!("perron failures: {}", outcome.perron_failures);
        println!(
            "oracle graphs: {} ({} mismatches)",
            outcome.oracle_graphs, outcome.oracle_mismatches
        );
        println!("result: {}", if outcome.pass { "PASS" } else { "FAIL" });
    }
    Ok(if outcome.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

pub fn cmd_export_dot(
    file: &Path,
    k: usize,
    tau: f64,
    output: Option<&Path>,
) -> Result<ExitCode, String> {
    let graph = load_graph(file)?;
    check_k(k, graph.n())?;
    check_tau(tau)?;
    let spectrum = match decompose(&graph) {
        Ok(s) => s,
        Err(code) => return Ok(code),
    };
    let f = spectrum.eigenvector(k);
    let signs = nodal::classify_signs(f, tau).map_err(|err| err.to_string())?;
    let rendered = dot::render(&graph, f, &signs);
    match output {
        Some(path) => fs::write(path, &rendered)
            .map_err(|err| format!("cannot write {}: {err}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trim10_renders_clean_values() {
        assert_eq!(trim10(0.0), "0");
        assert_eq!(trim10(-3.2e-17), "0");
        assert_eq!(trim10(1.0000000000000002), "1");
        assert_eq!(trim10(5.0), "5");
        assert_eq!(trim10(2.618033988749895), "2.6180339887");
        assert_eq!(trim10(-0.25), "-0.25");
    }

    #[test]
    fn spectrum_line_brackets_clusters() {
        let g = WeightedGraph::new(
            5,
            &[(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0), (0, 4, 1.0)],
            None,
        )
        .unwrap();
        let spectrum = spectra::eigendecompose(&g.operator()).unwrap();
        let groups = spectra::group_eigenvalues(&spectrum, spectra::DEFAULT_GROUP_TOL);
        assert_eq!(spectrum_line(&spectrum, &groups), "0, [1, 1, 1], 5");
    }

    #[test]
    fn k_and_tau_validation() {
        assert!(check_k(1, 3).is_ok());
        assert!(check_k(3, 3).is_ok());
        assert!(check_k(0, 3).is_err());
        assert!(check_k(4, 3).is_err());
        assert!(check_tau(0.0).is_ok());
        assert!(check_tau(1e-8).is_ok());
        assert!(check_tau(1.0).is_err());
        assert!(check_tau(-0.1).is_err());
        assert!(check_tau(f64::NAN).is_err());
    }
}
