//! graph6 tokens, 1-based edge lists and DOT export.
//!
//! Only the short graph6 header is supported: the first byte is `63 + n`
//! for `n <= 62`. The body packs the upper triangle of the adjacency
//! matrix column by column, `(0,1), (0,2), (1,2), (0,3), ...`, six bits
//! per byte (most significant first, offset by 63), zero padded.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Largest order representable by the short graph6 header.
pub const GRAPH6_MAX_ORDER: usize = 62;

const BIAS: u8 = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty graph6 token")]
    EmptyToken,
    #[error("byte {offset}: invalid graph6 length byte {byte:#04x}")]
    BadLengthByte { offset: usize, byte: u8 },
    #[error("byte {offset}: multi-byte graph6 length header (order > {GRAPH6_MAX_ORDER}) is not supported")]
    UnsupportedOrder { offset: usize },
    #[error("byte {offset}: non-printable graph6 byte {byte:#04x}")]
    NonPrintable { offset: usize, byte: u8 },
    #[error("byte {offset}: truncated graph6 body, expected {expected} body bytes, found {found}")]
    Truncated { offset: usize, expected: usize, found: usize },
    #[error("byte {offset}: unexpected bytes after graph6 body")]
    TrailingBytes { offset: usize },
    #[error("byte {offset}: nonzero padding bits in graph6 body")]
    NonzeroPadding { offset: usize },
    #[error("cannot encode order {order} as graph6 (maximum {GRAPH6_MAX_ORDER})")]
    OrderTooLarge { order: usize },
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("line {line}: {error}")]
    Line { line: usize, error: Box<FormatError> },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A graph read from a line-oriented source, with its position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphRecord {
    /// 1-based line number.
    pub line: usize,
    pub graph: Graph,
    pub token: String,
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(token: &str) -> Result<Graph, FormatError> {
    let bytes = token.as_bytes();
    let &head = bytes.first().ok_or(FormatError::EmptyToken)?;
    if head == 126 {
        return Err(FormatError::UnsupportedOrder { offset: 0 });
    }
    if !(BIAS..126).contains(&head) {
        return Err(FormatError::BadLengthByte { offset: 0, byte: head });
    }
    let n = (head - BIAS) as usize;
    let body = &bytes[1..];
    if let Some((i, &b)) = body.iter().enumerate().find(|(_, &b)| !(BIAS..=126).contains(&b)) {
        return Err(FormatError::NonPrintable { offset: i + 1, byte: b });
    }
    let expected = body_len(n);
    if body.len() < expected {
        return Err(FormatError::Truncated { offset: bytes.len(), expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(FormatError::TrailingBytes { offset: 1 + expected });
    }

    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let bit = (body[k / 6] - BIAS) >> (5 - k % 6) & 1;
            if bit == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let last = body[expected - 1] - BIAS;
        if last & ((1u8 << (6 - k % 6)) - 1) != 0 {
            return Err(FormatError::NonzeroPadding { offset: expected });
        }
    }
    Ok(Graph::from_rows(adj))
}

pub fn emit_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(FormatError::OrderTooLarge { order: n });
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(BIAS + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(BIAS + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses every non-blank line of `text` as a graph6 token.
pub fn parse_graph6_lines(text: &str) -> impl Iterator<Item = Result<GraphRecord, FormatError>> + '_ {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let token = raw.trim();
        if token.is_empty() {
            return None;
        }
        Some(
            parse_graph6(token)
                .map(|graph| GraphRecord { line: i + 1, graph, token: token.to_owned() })
                .map_err(|e| FormatError::Line { line: i + 1, error: Box::new(e) }),
        )
    })
}

/// Parses an edge list: the order on the first line, then one 1-based
/// `u v` pair per line. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    parse_edge_list_at(text, 1)
}

fn parse_edge_list_at(text: &str, first_line: usize) -> Result<Graph, FormatError> {
    let err = |line: usize, message: String| FormatError::EdgeList { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + first_line, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line, head) = lines.next().ok_or_else(|| err(first_line, "missing vertex count".into()))?;
    let n: usize = head
        .parse()
        .map_err(|_| err(line, format!("expected a vertex count, found {head:?}")))?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(err(line, format!("expected two labels, found {l:?}")));
        };
        let mut pair = [0usize; 2];
        for (slot, tok) in pair.iter_mut().zip([u, v]) {
            let label: usize = tok.parse().map_err(|_| err(line, format!("non-numeric label {tok:?}")))?;
            if label == 0 || label > n {
                return Err(err(line, format!("label {label} outside 1..={n}")));
            }
            *slot = label - 1;
        }
        if pair[0] == pair[1] {
            return Err(err(line, format!("loop at label {}", pair[0] + 1)));
        }
        edges.push((pair[0], pair[1]));
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// Splits `text` into edge-list blocks separated by blank lines and
/// parses each one.
pub fn parse_edge_list_blocks(text: &str) -> Vec<Result<GraphRecord, FormatError>> {
    let mut out = Vec::new();
    let mut block = String::new();
    let mut start = 0usize;
    let lines: Vec<&str> = text.lines().collect();
    for (i, l) in lines.iter().enumerate() {
        if l.trim().is_empty() {
            if !block.is_empty() {
                out.push(finish_block(&block, start));
                block.clear();
            }
            continue;
        }
        if block.is_empty() {
            start = i + 1;
        }
        block.push_str(l);
        block.push('\n');
    }
    if !block.is_empty() {
        out.push(finish_block(&block, start));
    }
    out
}

fn finish_block(block: &str, start: usize) -> Result<GraphRecord, FormatError> {
    let graph = parse_edge_list_at(block, start)?;
    let token = emit_graph6(&graph)?;
    Ok(GraphRecord { line: start, graph, token })
}

/// Renders `g` as an edge list readable by [`parse_edge_list`].
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// Renders `g` in DOT. Vertices are named `1..=n`; `labels`, when given,
/// supplies display labels.
pub fn emit_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        match labels.and_then(|l| l.get(v)) {
            Some(label) => {
                let escaped = label.replace('\\', "\\\\").replace('"', "\\\"");
                let _ = writeln!(out, "  {} [label=\"{}\"];", v + 1, escaped);
            }
            None => {
                let _ = writeln!(out, "  {};", v + 1);
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", u + 1, v + 1);
    }
    out.push_str("}\n");
    out
}
