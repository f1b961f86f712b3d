//! Graph file ingestion and emission.
//!
//! Two formats are supported, both 0-indexed:
//!
//! * **JSON**: `{"n": 5, "edges": [[0, 1, 1.0], ...], "potential": [...]}`.
//!   `potential` may be omitted when it is all zeros; unknown keys and edge
//!   rows that are not exactly `[u, v, w]` are rejected.
//! * **Text**: lines starting with `#` are comments; `n <count>` declares the
//!   vertex count exactly once; `e <u> <v> <w>` adds an edge; `v <vertex>
//!   <value>` sets one potential entry, at most once per vertex. Unknown line
//!   tags are rejected.
//!
//! A document whose first non-whitespace character is `{` is parsed as JSON,
//! anything else as text. Either writer followed by either parser reproduces
//! the graph exactly: weights and potentials are emitted as shortest
//! round-trip decimal literals.

use nodal_core::WeightedGraph;
use serde::{Deserialize, Serialize};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    n: usize,
    edges: Vec<(usize, usize, f64)>,
    #[serde(default)]
    potential: Option<Vec<f64>>,
}

// The writers are the canonical emitters for both formats. They back the
// round-trip tests and keep the bundled graph files in `graphs/` in sync;
// no subcommand writes graph files, so outside tests they are unused.
#[cfg_attr(not(test), allow(dead_code))]
#[derive(Serialize)]
struct JsonGraphOut {
    n: usize,
    edges: Vec<(usize, usize, f64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    potential: Option<Vec<f64>>,
}

/// Parse either supported format, then validate through [`WeightedGraph`].
pub fn parse_graph(text: &str) -> Result<WeightedGraph, String> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

fn parse_json(text: &str) -> Result<WeightedGraph, String> {
    let doc: JsonGraph =
        serde_json::from_str(text).map_err(|err| format!("invalid JSON graph: {err}"))?;
    WeightedGraph::new(doc.n, &doc.edges, doc.potential).map_err(|err| err.to_string())
}

fn parse_text(text: &str) -> Result<WeightedGraph, String> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize, f64)> = Vec::new();
    let mut potential: Vec<(usize, f64)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match fields[0] {
            "n" => {
                if n.is_some() {
                    return Err(format!("line {line}: duplicate `n` line"));
                }
                let [_, count] = fields[..] else {
                    return Err(format!("line {line}: expected `n <count>`"));
                };
                n = Some(parse_token(count, line, "vertex count")?);
            }
            "e" => {
                let [_, u, v, w] = fields[..] else {
                    return Err(format!("line {line}: expected `e <u> <v> <w>`"));
                };
                let u = parse_token(u, line, "edge endpoint")?;
                let v = parse_token(v, line, "edge endpoint")?;
                let w = parse_real(w, line, "edge weight")?;
                edges.push((u, v, w));
            }
            "v" => {
                let [_, x, value] = fields[..] else {
                    return Err(format!("line {line}: expected `v <vertex> <value>`"));
                };
                let x: usize = parse_token(x, line, "vertex")?;
                let value = parse_real(value, line, "potential value")?;
                if potential.iter().any(|&(seen, _)| seen == x) {
                    return Err(format!(
                        "line {line}: duplicate potential entry for vertex {x}"
                    ));
                }
                potential.push((x, value));
            }
            tag => return Err(format!("line {line}: unknown line tag `{tag}`")),
        }
    }
    let n = n.ok_or_else(|| "missing `n <count>` line".to_string())?;
    let potential = if potential.is_empty() {
        None
    } else {
        let mut values = vec![0.0; n];
        for (x, value) in potential {
            if x >= n {
                return Err(format!("potential vertex {x} out of range for n = {n}"));
            }
            values[x] = value;
        }
        Some(values)
    };
    WeightedGraph::new(n, &edges, potential).map_err(|err| err.to_string())
}

fn parse_token<T: std::str::FromStr>(token: &str, line: usize, what: &str) -> Result<T, String> {
    token
        .parse()
        .map_err(|_| format!("line {line}: cannot parse {what} `{token}`"))
}

fn parse_real(token: &str, line: usize, what: &str) -> Result<f64, String> {
    let value: f64 = parse_token(token, line, what)?;
    if !value.is_finite() {
        return Err(format!("line {line}: {what} `{token}` is not finite"));
    }
    Ok(value)
}

/// Emit the JSON form; `potential` is omitted when identically zero.
#[cfg_attr(not(test), allow(dead_code))]
pub fn write_json(graph: &WeightedGraph) -> String {
    let doc = JsonGraphOut {
        n: graph.n(),
        edges: graph.edges().iter().map(|e| (e.u, e.v, e.weight)).collect(),
        potential: if graph.potential().iter().all(|&v| v == 0.0) {
            None
        } else {
            Some(graph.potential().to_vec())
        },
    };
    let mut text = serde_json::to_string(&doc).expect("graph serialization cannot fail");
    text.push('\n');
    text
}

/// Emit the text form; zero potential entries are omitted.
#[cfg_attr(not(test), allow(dead_code))]
pub fn write_text(graph: &WeightedGraph) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let _ = writeln!(out, "n {}", graph.n());
    for e in graph.edges() {
        let _ = writeln!(out, "e {} {} {}", e.u, e.v, e.weight);
    }
    for (x, &value) in graph.potential().iter().enumerate() {
        if value != 0.0 {
            let _ = writeln!(out, "v {x} {value}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> WeightedGraph {
        WeightedGraph::new(
            3,
            &[(0, 1, 0.30000000000000004), (1, 2, 2.0)],
            Some(vec![0.0, -0.25, 1.5]),
        )
        .unwrap()
    }

    #[test]
    fn json_graph_parses() {
        let g =
            parse_graph(r#"{"n": 3, "edges": [[0, 1, 1.0], [1, 2, 2]], "potential": [0, 0.5, 0]}"#)
                .unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.potential()[1], 0.5);
    }

    #[test]
    fn json_rejects_unknown_keys_and_bad_rows() {
        assert!(
            parse_graph(r#"{"n": 2, "edges": [[0, 1, 1.0]], "direction": "up"}"#)
                .unwrap_err()
                .contains("invalid JSON graph")
        );
        assert!(parse_graph(r#"{"n": 2, "edges": [[0, 1]]}"#).is_err());
        assert!(parse_graph(r#"{"n": 2, "edges": [[0, 1, 1.0, 9]]}"#).is_err());
    }

    #[test]
    fn text_graph_parses() {
        let text = "# triangle\nn 3\ne 0 1 1\ne 1 2 0.5\ne 2 0 2e0\nv 1 -0.25\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.potential(), &[0.0, -0.25, 0.0]);
    }

    #[test]
    fn text_rejects_malformed_lines() {
        assert!(parse_graph("n 2\nz 0 1\n")
            .unwrap_err()
            .contains("unknown line tag"));
        assert!(parse_graph("n 2\nn 3\ne 0 1 1\n")
            .unwrap_err()
            .contains("duplicate `n`"));
        assert!(parse_graph("e 0 1 1\n").unwrap_err().contains("missing `n"));
        assert!(parse_graph("n 2\ne 0 1\n")
            .unwrap_err()
            .contains("expected `e"));
        assert!(parse_graph("n 2\ne 0 1 inf\n")
            .unwrap_err()
            .contains("not finite"));
        assert!(parse_graph("n 2\ne 0 1 1\nv 0 1\nv 0 2\n")
            .unwrap_err()
            .contains("duplicate potential"));
        assert!(parse_graph("n 2\ne 0 1 1\nv 5 1\n")
            .unwrap_err()
            .contains("out of range"));
    }

    #[test]
    fn json_round_trip_is_exact() {
        let g = sample();
        let again = parse_graph(&write_json(&g)).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn text_round_trip_is_exact() {
        let g = sample();
        let again = parse_graph(&write_text(&g)).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn zero_potential_is_omitted_by_writers() {
        let g = WeightedGraph::new(2, &[(0, 1, 1.0)], None).unwrap();
        assert!(!write_json(&g).contains("potential"));
        assert!(!write_text(&g).contains('v'));
    }
}
