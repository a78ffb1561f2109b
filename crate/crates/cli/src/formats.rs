//! Line-oriented text formats.
//!
//! Graph file:
//!
//! ```text
//! SG 1
//! n 3
//! e 0 1 +
//! e 1 2 -
//! ```
//!
//! Orientation file, bound to a graph by the checksum of its edge list:
//!
//! ```text
//! OR 1
//! checksum 9e1b2c0d4f6a7788
//! o 0 +1 -1
//! o 1 +1 +1
//! ```
//!
//! Blank lines and lines starting with `#` are ignored in both.

use std::fmt::Write as _;

use signed_total::{Orientation, OrientationError, Sign, SignedGraph};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing {0}")]
    Missing(&'static str),
    #[error("invalid graph: {0}")]
    Graph(String),
    #[error("invalid orientation: {0}")]
    Orientation(#[from] OrientationError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// Non-comment lines with their 1-based line numbers, split into words.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn number<T: std::str::FromStr>(line: usize, word: &str, what: &str) -> Result<T, FormatError> {
    word.parse().map_err(|_| syntax(line, format!("bad {what} `{word}`")))
}

fn expect_header<'a>(
    records: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    magic: &'static str,
) -> Result<(), FormatError> {
    match records.next() {
        Some((_, words)) if words == [magic, "1"] => Ok(()),
        Some((line, words)) => Err(syntax(line, format!("expected `{magic} 1`, found `{}`", words.join(" ")))),
        None => Err(FormatError::Missing("header")),
    }
}

pub fn write_graph(g: &SignedGraph) -> String {
    let mut out = format!("SG 1\nn {}\n", g.vertex_count());
    for e in g.edges() {
        writeln!(out, "e {} {} {}", e.u, e.v, e.sign).unwrap();
    }
    out
}

/// Reads a graph file; edge ids follow the order of the `e` lines.
pub fn parse_graph(text: &str) -> Result<SignedGraph, FormatError> {
    let mut records = records(text);
    expect_header(&mut records, "SG")?;
    let n = match records.next() {
        Some((line, words)) if words.len() == 2 && words[0] == "n" => number::<usize>(line, words[1], "vertex count")?,
        Some((line, _)) => return Err(syntax(line, "expected `n <count>`")),
        None => return Err(FormatError::Missing("vertex count line")),
    };
    let mut edges = Vec::new();
    for (line, words) in records {
        if words.len() != 4 || words[0] != "e" {
            return Err(syntax(line, "expected `e <u> <v> <+|->`"));
        }
        let u = number(line, words[1], "endpoint")?;
        let v = number(line, words[2], "endpoint")?;
        let sign = match words[3] {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            other => return Err(syntax(line, format!("bad sign `{other}`"))),
        };
        edges.push((u, v, sign));
    }
    SignedGraph::new(n, edges).map_err(|e| FormatError::Graph(e.to_string()))
}

fn unit(sign: Sign) -> &'static str {
    match sign {
        Sign::Plus => "+1",
        Sign::Minus => "-1",
    }
}

pub fn write_orientation(eta: &Orientation) -> String {
    let mut out = format!("OR 1\nchecksum {:016x}\n", eta.checksum());
    for (id, &(a, b)) in eta.etas().iter().enumerate() {
        writeln!(out, "o {id} {} {}", unit(a), unit(b)).unwrap();
    }
    out
}

/// Reads an orientation file and checks it against `g`: the checksum must
/// match, every edge must appear exactly once, and every line must satisfy
/// `eta_u * eta_v = -sigma`.
pub fn parse_orientation(text: &str, g: &SignedGraph) -> Result<Orientation, FormatError> {
    let mut records = records(text);
    expect_header(&mut records, "OR")?;
    let checksum = match records.next() {
        Some((line, words)) if words.len() == 2 && words[0] == "checksum" => {
            u64::from_str_radix(words[1], 16).map_err(|_| syntax(line, format!("bad checksum `{}`", words[1])))?
        }
        Some((line, _)) => return Err(syntax(line, "expected `checksum <hex>`")),
        None => return Err(FormatError::Missing("checksum line")),
    };
    let mut etas: Vec<Option<(Sign, Sign)>> = Vec::new();
    for (line, words) in records {
        if words.len() != 4 || words[0] != "o" {
            return Err(syntax(line, "expected `o <edge-id> <±1> <±1>`"));
        }
        let id: usize = number(line, words[1], "edge id")?;
        let parse_unit = |w: &str| match w {
            "+1" | "1" => Ok(Sign::Plus),
            "-1" => Ok(Sign::Minus),
            other => Err(syntax(line, format!("bad incidence sign `{other}`"))),
        };
        let pair = (parse_unit(words[2])?, parse_unit(words[3])?);
        if id >= etas.len() {
            etas.resize(id + 1, None);
        }
        if etas[id].replace(pair).is_some() {
            return Err(syntax(line, format!("edge {id} listed twice")));
        }
    }
    let etas = etas
        .into_iter()
        .enumerate()
        .map(|(id, pair)| pair.ok_or_else(|| FormatError::Graph(format!("edge {id} has no orientation line"))))
        .collect::<Result<Vec<_>, _>>()?;
    let eta = Orientation::from_parts(checksum, etas);
    eta.check(g)?;
    Ok(eta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use signed_total::square_with_pendant;

    #[test]
    fn graph_round_trip() {
        let g = square_with_pendant();
        let text = write_graph(&g);
        assert_eq!(text, "SG 1\nn 5\ne 0 1 +\ne 1 2 +\ne 2 3 +\ne 0 3 -\ne 1 4 -\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn graph_comments_and_errors() {
        let g = parse_graph("# hand written\nSG 1\n\nn 2\n# edge\ne 1 0 -\n").unwrap();
        assert_eq!(g.edge(0).sign, Sign::Minus);
        assert_eq!(g.edge(0).u, 0);
        assert!(matches!(parse_graph("SG 2\nn 1\n"), Err(FormatError::Syntax { line: 1, .. })));
        assert!(matches!(parse_graph("SG 1\nn 2\ne 0 1 *\n"), Err(FormatError::Syntax { line: 3, .. })));
        assert!(matches!(parse_graph("SG 1\nn 2\ne 0 1 +\ne 1 0 -\n"), Err(FormatError::Graph(_))));
        assert_eq!(parse_graph(""), Err(FormatError::Missing("header")));
        assert_eq!(parse_graph("SG 1\n"), Err(FormatError::Missing("vertex count line")));
    }

    #[test]
    fn orientation_round_trip() {
        let g = square_with_pendant();
        let eta = Orientation::canonical(&g);
        let text = write_orientation(&eta);
        assert!(text.starts_with(&format!("OR 1\nchecksum {:016x}\no 0 +1 -1\n", g.checksum())));
        assert_eq!(parse_orientation(&text, &g).unwrap(), eta);
    }

    #[test]
    fn orientation_binding() {
        let g = square_with_pendant();
        let text = write_orientation(&Orientation::canonical(&g));
        assert!(matches!(
            parse_orientation(&text, &g.negate()),
            Err(FormatError::Orientation(OrientationError::ChecksumMismatch { .. }))
        ));
        let broken = text.replace("o 0 +1 -1", "o 0 +1 +1");
        assert!(matches!(
            parse_orientation(&broken, &g),
            Err(FormatError::Orientation(OrientationError::SignRule { edge: 0, .. }))
        ));
        let missing = text.replace("o 0 +1 -1\n", "");
        assert!(parse_orientation(&missing, &g).is_err());
        let doubled = text.replace("o 1 ", "o 0 ");
        assert!(matches!(parse_orientation(&doubled, &g), Err(FormatError::Syntax { .. })));
    }
}
