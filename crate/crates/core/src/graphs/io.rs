//! Edge-list text format.
//!
//! ```text
//! # comment
//! n 4
//! 0 1
//! 1 2
//! ```
//!
//! Digraphs use `arc u v` lines instead of `u v`. Ids are 0-based; anything
//! after `#` on a line is ignored.

use std::fmt::Write as _;

use super::{DiGraph, SimpleGraph};
use crate::error::{CurlError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedGraph {
    Simple(SimpleGraph),
    Directed(DiGraph),
}

impl ParsedGraph {
    /// The graph whose degrees are analysed: digraphs collapse to their
    /// underlying simple graph.
    pub fn into_simple(self) -> SimpleGraph {
        match self {
            ParsedGraph::Simple(g) => g,
            ParsedGraph::Directed(d) => d.underlying(),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> CurlError {
    CurlError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_id(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid vertex id {tok:?}")))
}

/// True when the first meaningful line is an `n <count>` header.
pub fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.split_whitespace().next() == Some("n"))
}

pub fn parse_edge_list(text: &str) -> Result<ParsedGraph> {
    let mut vertex_count: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut arcs: Vec<(usize, usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match (vertex_count, toks.as_slice()) {
            (None, ["n", count]) => {
                let n = count
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("invalid vertex count {count:?}")))?;
                vertex_count = Some(n);
            }
            (None, _) => return Err(parse_err(line_no, "expected header \"n <vertex_count>\"")),
            (Some(_), ["n", ..]) => return Err(parse_err(line_no, "duplicate header")),
            (Some(_), ["arc", u, v]) => {
                arcs.push((parse_id(u, line_no)?, parse_id(v, line_no)?, line_no))
            }
            (Some(_), [u, v]) => {
                edges.push((parse_id(u, line_no)?, parse_id(v, line_no)?, line_no))
            }
            (Some(_), _) => return Err(parse_err(line_no, format!("unrecognised line {line:?}"))),
        }
    }

    let Some(n) = vertex_count else {
        return Err(parse_err(1, "missing header \"n <vertex_count>\""));
    };
    if !edges.is_empty() && !arcs.is_empty() {
        return Err(parse_err(
            arcs[0].2.max(edges[0].2),
            "cannot mix edge and arc lines",
        ));
    }
    // Validate one item at a time so errors carry their line number.
    let relabel = |e: CurlError, line: usize| match e {
        CurlError::InvalidParameter { reason, .. } => parse_err(line, reason),
        other => other,
    };
    if !arcs.is_empty() {
        let mut g = DiGraph::empty(n);
        for (u, v, line) in arcs {
            g.try_add_arc(u, v).map_err(|e| relabel(e, line))?;
        }
        return Ok(ParsedGraph::Directed(g));
    }
    let mut g = SimpleGraph::empty(n);
    for (u, v, line) in edges {
        g.try_add_edge(u, v).map_err(|e| relabel(e, line))?;
    }
    Ok(ParsedGraph::Simple(g))
}

pub fn write_edge_list(g: &SimpleGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n {}", g.vertex_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_arc_list(g: &DiGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n {}", g.vertex_count());
    for (u, v) in g.arcs() {
        let _ = writeln!(out, "arc {u} {v}");
    }
    out
}
