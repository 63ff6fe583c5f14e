//! Text formats: graph6, a 1-based edge list, and DOT output.
//!
//! Edge-list layout: one edge `u v` per line, `#` starts a comment. A line
//! holding a single integer declares the vertex count; without one the
//! order is the largest label seen. The writer emits the count line only
//! when the last vertex is isolated, so the order would otherwise be lost.

use std::fmt::Write as _;

use crate::error::FormatError;
use crate::graph::{Graph, MAX_ORDER};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Encodes `g` in graph6 (no header, no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|b| b as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line. An optional `>>graph6<<` header is accepted.
pub fn read_graph6(text: &str) -> Result<Graph, FormatError> {
    let line = text.trim();
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(FormatError::Graph6Byte(b));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(FormatError::Graph6Header);
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[4..])
    };
    if n == 0 {
        return Err(FormatError::Graph6Header);
    }
    if n > MAX_ORDER {
        return Err(FormatError::TooLarge(n));
    }
    let pairs = n * (n - 1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(FormatError::Graph6Length {
            expected,
            found: body.len(),
        });
    }
    let mut g = Graph::empty(n).expect("order checked");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j).expect("indices in range");
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Edge list with 1-based labels.
pub fn write_edge_list(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if g.degree(n - 1) == 0 {
        writeln!(out, "{n}").unwrap();
    }
    for e in g.edges() {
        let [u, v] = e.labels();
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeListOptions {
    pub one_based: bool,
}

impl Default for EdgeListOptions {
    fn default() -> Self {
        EdgeListOptions { one_based: true }
    }
}

pub fn read_edge_list(text: &str, opts: EdgeListOptions) -> Result<Graph, FormatError> {
    let base: i64 = if opts.one_based { 1 } else { 0 };
    let mut declared: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<i64> = line
            .split_whitespace()
            .map(|t| t.parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| FormatError::EdgeList {
                line: line_no,
                message: format!("expected integers, found `{line}`"),
            })?;
        match fields[..] {
            [n] => {
                if declared.is_some() || !edges.is_empty() {
                    return Err(FormatError::EdgeList {
                        line: line_no,
                        message: "vertex count must come first and only once".into(),
                    });
                }
                if n <= 0 {
                    return Err(FormatError::EdgeList {
                        line: line_no,
                        message: format!("invalid vertex count {n}"),
                    });
                }
                if n as usize > MAX_ORDER {
                    return Err(FormatError::TooLarge(n as usize));
                }
                declared = Some((n as usize, line_no));
            }
            [a, b] => {
                let to_index = |x: i64| {
                    let i = x - base;
                    if i < 0 || i >= MAX_ORDER as i64 {
                        Err(FormatError::VertexOutOfRange {
                            line: line_no,
                            vertex: x,
                        })
                    } else {
                        Ok(i as usize)
                    }
                };
                let (u, v) = (to_index(a)?, to_index(b)?);
                if let Some((n, _)) = declared {
                    if u >= n || v >= n {
                        let bad = if u >= n { a } else { b };
                        return Err(FormatError::VertexOutOfRange {
                            line: line_no,
                            vertex: bad,
                        });
                    }
                }
                if u == v {
                    return Err(FormatError::Loop {
                        line: line_no,
                        vertex: a as usize,
                    });
                }
                edges.push((u, v, line_no));
            }
            _ => {
                return Err(FormatError::EdgeList {
                    line: line_no,
                    message: format!("expected `u v`, found `{line}`"),
                })
            }
        }
    }

    let n = match declared {
        Some((n, _)) => n,
        None => edges
            .iter()
            .map(|&(u, v, _)| u.max(v) + 1)
            .max()
            .ok_or(FormatError::Empty)?,
    };
    let mut g = Graph::empty(n).map_err(|_| FormatError::TooLarge(n))?;
    for (u, v, line) in edges {
        if g.has_edge(u, v) {
            let off = base as usize;
            let (lo, hi) = (u.min(v) + off, u.max(v) + off);
            return Err(FormatError::DuplicateEdge { line, u: lo, v: hi });
        }
        g.add_edge(u, v).expect("validated above");
    }
    Ok(g)
}

/// Undirected DOT with 1-based node names.
pub fn write_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 1..=g.order() {
        writeln!(out, "  {v};").unwrap();
    }
    for e in g.edges() {
        let [u, v] = e.labels();
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Reads either format, deciding by the first non-comment line: lines made
/// of integers are an edge list, anything else is graph6. Digits never
/// occur in graph6 text, so the two cannot be confused.
pub fn read_graph(text: &str) -> Result<Graph, FormatError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .ok_or(FormatError::Empty)?;
    let looks_numeric = first
        .split('#')
        .next()
        .unwrap_or("")
        .split_whitespace()
        .all(|t| t.bytes().all(|b| b.is_ascii_digit() || b == b'-'));
    if looks_numeric {
        read_edge_list(text, EdgeListOptions::default())
    } else {
        read_graph6(first)
    }
}
