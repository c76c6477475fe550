//! The `gaingraph` text format.
//!
//! ```text
//! # unbalanced triangle
//! gaingraph 3
//! 1 2 +1
//! 2 3 pi:1/6
//! 1 3 rad:3.14159
//! order 3 1 2
//! ```
//!
//! Vertices are 1-based in files and 0-based in memory.

use std::collections::HashSet;
use std::fmt::Write as _;

use gainspec_core::{Error as CoreError, GainGraph, UnitGain, VertexOrdering};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}: vertex {vertex} is outside 1..={n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("graph is disconnected: vertex {vertex} is unreachable from vertex 1")]
    Disconnected { vertex: usize },
    #[error("line {line}: {message}")]
    Ordering { line: usize, message: String },
}

impl ParseError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "syntax",
            ParseError::OutOfRange { .. } => "out-of-range",
            ParseError::DuplicateEdge { .. } => "duplicate-edge",
            ParseError::SelfLoop { .. } => "self-loop",
            ParseError::Disconnected { .. } => "disconnected",
            ParseError::Ordering { .. } => "ordering",
        }
    }
}

#[derive(Clone, Debug)]
pub struct GraphFile {
    pub graph: GainGraph,
    /// `None` when the file has no `order` line.
    pub ordering: Option<VertexOrdering>,
}

impl GraphFile {
    /// Declared ordering, or the standard one.
    pub fn ordering_or_standard(&self) -> VertexOrdering {
        self.ordering.clone().unwrap_or_else(|| VertexOrdering::standard(self.graph.vertex_count()))
    }
}

// (1-based column, token)
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, column, message: message.into() }
}

/// Parses a gain token: `+1`, `-1`, `pi:<p>/<q>` or `rad:<float>`.
pub fn parse_gain(token: &str) -> Option<UnitGain> {
    match token {
        "+1" => return Some(UnitGain::one()),
        "-1" => return Some(UnitGain::minus_one()),
        _ => {}
    }
    if let Some(rest) = token.strip_prefix("pi:") {
        let (p, q) = rest.split_once('/')?;
        let p: i64 = p.parse().ok()?;
        let q: i64 = q.parse().ok()?;
        if q <= 0 {
            return None;
        }
        return Some(UnitGain::pi_fraction(p, q));
    }
    if let Some(rest) = token.strip_prefix("rad:") {
        let x: f64 = rest.parse().ok()?;
        return x.is_finite().then(|| UnitGain::from_radians(x));
    }
    None
}

fn parse_vertex(line: usize, (column, tok): (usize, &str), n: usize) -> Result<usize, ParseError> {
    let v: usize = tok.parse().map_err(|_| syntax(line, column, format!("expected a vertex index, found `{tok}`")))?;
    if v == 0 || v > n {
        return Err(ParseError::OutOfRange { line, vertex: v, n });
    }
    Ok(v - 1)
}

pub fn parse_graph(text: &str) -> Result<GraphFile, ParseError> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut ordering = None;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        let Some(&(col0, first)) = toks.first() else { continue };

        let Some(n) = n else {
            if first != "gaingraph" {
                return Err(syntax(line, col0, format!("expected `gaingraph <n>`, found `{first}`")));
            }
            let &(col, tok) = toks.get(1).ok_or_else(|| syntax(line, col0 + first.len(), "missing vertex count"))?;
            let count: usize = tok.parse().map_err(|_| syntax(line, col, format!("invalid vertex count `{tok}`")))?;
            if count == 0 {
                return Err(syntax(line, col, "vertex count must be at least 1"));
            }
            if let Some(&(col, _)) = toks.get(2) {
                return Err(syntax(line, col, "unexpected token after vertex count"));
            }
            n = Some(count);
            continue;
        };

        if first == "order" {
            if ordering.is_some() {
                return Err(ParseError::Ordering { line, message: "ordering declared twice".into() });
            }
            let rest = &toks[1..];
            if rest.len() != n {
                return Err(ParseError::Ordering {
                    line,
                    message: format!("ordering lists {} vertices, expected {n}", rest.len()),
                });
            }
            let seq = rest.iter().map(|&t| parse_vertex(line, t, n)).collect::<Result<Vec<_>, _>>()?;
            let ord = VertexOrdering::from_sequence(&seq).map_err(|_| ParseError::Ordering {
                line,
                message: "ordering repeats a vertex".into(),
            })?;
            ordering = Some(ord);
            continue;
        }

        if toks.len() != 3 {
            let col = toks.get(3).map_or(col0, |t| t.0);
            return Err(syntax(line, col, format!("expected `<u> <v> <gain>`, found {} tokens", toks.len())));
        }
        let u = parse_vertex(line, toks[0], n)?;
        let v = parse_vertex(line, toks[1], n)?;
        let (gcol, gtok) = toks[2];
        let gain = parse_gain(gtok).ok_or_else(|| syntax(line, gcol, format!("invalid gain `{gtok}`")))?;
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u + 1 });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::DuplicateEdge { line, u: u + 1, v: v + 1 });
        }
        edges.push((u, v, gain));
    }

    let n = n.ok_or_else(|| syntax(last_line.max(1), 1, "missing `gaingraph <n>` header"))?;
    let graph = GainGraph::new(n, edges).map_err(|e| match e {
        CoreError::Disconnected { vertex } => ParseError::Disconnected { vertex: vertex + 1 },
        other => unreachable!("edges were validated while parsing: {other}"),
    })?;
    Ok(GraphFile { graph, ordering })
}

/// Writes `g` (and `ordering`, if given) in the file format. Exact gains
/// round-trip exactly; `rad:` gains to within a few ulps.
pub fn write_graph(g: &GainGraph, ordering: Option<&VertexOrdering>) -> String {
    let mut out = format!("gaingraph {}\n", g.vertex_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.u + 1, e.v + 1, e.gain);
    }
    if let Some(ord) = ordering {
        out.push_str("order");
        for v in ord.sequence() {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    out
}
