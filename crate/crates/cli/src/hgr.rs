//! The `p hgr` text format.
//!
//! ```text
//! c a comment
//! p hgr <n> <m>
//! <edge 1: 1-based vertex ids, repeats give multiplicity>
//! ...
//! <edge m>
//! ```
//!
//! Comment lines start with `c`. After the problem line every non-comment
//! line is an edge, including empty lines (empty edges). Blank lines after
//! the `m`-th edge are ignored.

use std::fmt::Write as _;

use hyperconn::{Edge, Hypergraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based line number; the line after the last one for missing input.
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

fn is_comment(line: &str) -> bool {
    line == "c" || line.starts_with("c ") || line.starts_with("c\t")
}

fn parse_count(token: Option<&str>, what: &str, line: usize) -> Result<usize, ParseError> {
    match token.map(str::parse::<usize>) {
        Some(Ok(k)) => Ok(k),
        Some(Err(_)) => fail(line, format!("{what} is not a non-negative integer")),
        None => fail(line, format!("problem line is missing {what}")),
    }
}

pub fn parse_hgr(text: &str) -> Result<Hypergraph, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end_matches('\r')));
    let (n, m) = loop {
        let Some((no, line)) = lines.next() else {
            return fail(text.lines().count() + 1, "missing `p hgr <n> <m>` line");
        };
        let trimmed = line.trim();
        if trimmed.is_empty() || is_comment(trimmed) {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        if tokens.next() != Some("p") || tokens.next() != Some("hgr") {
            return fail(no, format!("expected `p hgr <n> <m>`, found `{trimmed}`"));
        }
        let n = parse_count(tokens.next(), "the vertex count", no)?;
        let m = parse_count(tokens.next(), "the edge count", no)?;
        if let Some(extra) = tokens.next() {
            return fail(no, format!("unexpected `{extra}` after the edge count"));
        }
        break (n, m);
    };

    let mut edges = Vec::with_capacity(m);
    let mut last = 0;
    for (no, line) in lines {
        last = no;
        let trimmed = line.trim();
        if is_comment(trimmed) {
            continue;
        }
        if edges.len() == m {
            if trimmed.is_empty() {
                continue;
            }
            return fail(no, format!("more than {m} edge lines"));
        }
        let mut edge = Vec::new();
        for token in trimmed.split_whitespace() {
            let id: usize = match token.parse() {
                Ok(id) => id,
                Err(_) => return fail(no, format!("`{token}` is not a vertex id")),
            };
            if id == 0 || id > n {
                return fail(no, format!("vertex {id} out of range 1..={n}"));
            }
            edge.push(id - 1);
        }
        edges.push(Edge::from_vertices(edge));
    }
    if edges.len() < m {
        return fail(last + 1, format!("expected {m} edge lines, found {}", edges.len()));
    }
    Ok(Hypergraph::new(n, edges).expect("ids checked while parsing"))
}

pub fn write_hgr(h: &Hypergraph) -> String {
    let mut out = format!("p hgr {} {}\n", h.vertex_count(), h.edge_count());
    for e in h.edges() {
        let ids: Vec<String> = e
            .iter()
            .flat_map(|(v, k)| std::iter::repeat(v + 1).take(k))
            .map(|v| v.to_string())
            .collect();
        let _ = writeln!(out, "{}", ids.join(" "));
    }
    out
}
