//! Graphviz export. Negative edges are dashed.

use std::fmt::Write as _;

use signed_total::{Sign, SignedGraph};

pub fn to_dot(g: &SignedGraph, name: &str) -> String {
    let mut out = format!("graph \"{}\" {{\n  node [shape=circle];\n", name.replace('"', "\\\""));
    for v in 0..g.vertex_count() {
        writeln!(out, "  {v};").unwrap();
    }
    for e in g.edges() {
        let (style, label) = match e.sign {
            Sign::Plus => ("solid", "+"),
            Sign::Minus => ("dashed", "-"),
        };
        writeln!(out, "  {} -- {} [style={style}, label=\"{label}\"];", e.u, e.v).unwrap();
    }
    out.push_str("}\n");
    out
}
