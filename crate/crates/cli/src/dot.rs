//! DOT (Graphviz) export of sign-colored graphs.
//!
//! Vertices are filled by the sign of the selected eigenfunction — positive,
//! negative, and zero each get one fixed color — and labeled with the
//! function value to six significant digits; edges carry their weights. The
//! output is plain deterministic text: the same graph and function always
//! render byte-identically.

use std::fmt::Write as _;

use nodal_core::{SignVector, WeightedGraph};

const POSITIVE_FILL: &str = "tomato";
const NEGATIVE_FILL: &str = "steelblue";
const ZERO_FILL: &str = "lightgray";

pub fn render(graph: &WeightedGraph, f: &[f64], signs: &SignVector) -> String {
    let mut out = String::from("graph G {\n  node [style=filled];\n");
    for (x, &value) in f.iter().enumerate() {
        let color = match signs.sign(x) {
            1 => POSITIVE_FILL,
            -1 => NEGATIVE_FILL,
            _ => ZERO_FILL,
        };
        let _ = writeln!(
            out,
            "  {x} [label=\"{x}: {}\", fillcolor=\"{color}\"];",
            sig6(value)
        );
    }
    for e in graph.edges() {
        let _ = writeln!(out, "  {} -- {} [label=\"{}\"];", e.u, e.v, sig6(e.weight));
    }
    out.push_str("}\n");
    out
}

/// Six significant digits: plain decimal in a moderate magnitude range,
/// scientific notation outside it.
fn sig6(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let exponent = v.abs().log10().floor() as i32;
    if !(-9..=14).contains(&exponent) {
        return format!("{v:.5e}");
    }
    let decimals = (5 - exponent).max(0) as usize;
    format!("{v:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use nodal_core::nodal::classify_signs;

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig6(0.0), "0");
        assert_eq!(sig6(1.0), "1.00000");
        assert_eq!(sig6(-2.6180339887), "-2.61803");
        assert_eq!(sig6(0.5), "0.500000");
        assert_eq!(sig6(123456.7), "123457");
        assert_eq!(sig6(-5.04458e-16), "-5.04458e-16");
        assert_eq!(sig6(3.0e20), "3.00000e20");
    }

    #[test]
    fn renders_all_three_colors_deterministically() {
        let g = WeightedGraph::new(3, &[(0, 1, 1.0), (1, 2, 0.5)], None).unwrap();
        let f = [1.0, 0.0, -1.0];
        let s = classify_signs(&f, 1e-8).unwrap();
        let dot = render(&g, &f, &s);
        assert!(dot.contains("0 [label=\"0: 1.00000\", fillcolor=\"tomato\"]"));
        assert!(dot.contains("1 [label=\"1: 0\", fillcolor=\"lightgray\"]"));
        assert!(dot.contains("2 [label=\"2: -1.00000\", fillcolor=\"steelblue\"]"));
        assert!(dot.contains("0 -- 1 [label=\"1.00000\"]"));
        assert!(dot.contains("1 -- 2 [label=\"0.500000\"]"));
        assert_eq!(dot, render(&g, &f, &s));
    }
}
