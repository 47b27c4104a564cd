//! Text interchange formats: plain edge lists and graph6.
//!
//! Edge list: a header line `n m` followed by `m` lines `i j` with 0-based
//! endpoints. Anything after `#` on a line is ignored, as are blank lines.
//!
//! graph6: the header encodes `n` (one byte `63 + n` for `n < 63`, otherwise
//! `126` followed by 3 or, for `n >= 258048`, `126 126` followed by 6 six-bit
//! groups), then the upper triangle of the adjacency matrix is packed column
//! by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) into six-bit groups, each
//! offset by 63. The last group is zero padded.

use std::collections::BTreeSet;

use crate::error::ParseError;
use crate::graph::Graph;

const G6_OFFSET: u8 = 63;
const G6_MAX: u8 = 126;
const G6_PREFIX: &str = ">>graph6<<";

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let err = |line: usize, message: String| ParseError::EdgeList { line, message };
    let mut lines = text.lines().enumerate().filter_map(|(idx, raw)| {
        let content = raw.split('#').next().unwrap_or("").trim();
        (!content.is_empty()).then_some((idx + 1, content))
    });

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing header line \"n m\"".into()))?;
    let fields = parse_fields(header).map_err(|m| err(header_line, m))?;
    let &[n, m] = fields.as_slice() else {
        return Err(err(
            header_line,
            format!("header must be \"n m\", got {header:?}"),
        ));
    };

    let mut edges = BTreeSet::new();
    let mut seen = 0usize;
    for (line, content) in lines {
        let fields = parse_fields(content).map_err(|m| err(line, m))?;
        let &[i, j] = fields.as_slice() else {
            return Err(err(
                line,
                format!("edge line must be \"i j\", got {content:?}"),
            ));
        };
        if seen == m {
            return Err(err(
                line,
                format!("header declares {m} edges but more edge lines follow"),
            ));
        }
        if i >= n || j >= n {
            return Err(err(
                line,
                format!("vertex {} out of range for n = {n}", i.max(j)),
            ));
        }
        if i == j {
            return Err(err(line, format!("self-loop at vertex {i}")));
        }
        edges.insert((i.min(j), i.max(j)));
        seen += 1;
    }
    if seen < m {
        let last = text.lines().count().max(1);
        return Err(err(
            last,
            format!("header declares {m} edges, found {seen}"),
        ));
    }
    Ok(Graph::from_canonical_set(n, edges))
}

fn parse_fields(s: &str) -> Result<Vec<usize>, String> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| format!("expected a nonnegative integer, got {tok:?}"))
        })
        .collect()
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(i, j) in g.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` prefix are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let trimmed = text.trim();
    let (skip, body) = match trimmed.strip_prefix(G6_PREFIX) {
        Some(rest) => (G6_PREFIX.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    let err = |pos: usize, message: String| ParseError::Graph6 {
        byte: skip + pos + 1,
        message,
    };

    for (pos, &b) in body.iter().enumerate() {
        if !(G6_OFFSET..=G6_MAX).contains(&b) {
            return Err(err(
                pos,
                format!("byte {b:#04x} outside the graph6 range 63..=126"),
            ));
        }
    }

    let (n, header_len) = match body {
        [] => return Err(err(0, "empty input".into())),
        [G6_MAX, G6_MAX, rest @ ..] => {
            if rest.len() < 6 {
                return Err(err(body.len(), "truncated 8-byte size header".into()));
            }
            (pack_groups(&rest[..6]), 8)
        }
        [G6_MAX, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err(body.len(), "truncated 4-byte size header".into()));
            }
            (pack_groups(&rest[..3]), 4)
        }
        [b, ..] => (usize::from(b - G6_OFFSET), 1),
    };

    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() < needed {
        return Err(err(
            body.len(),
            format!(
                "truncated bit stream: n = {n} needs {needed} data bytes, found {}",
                data.len()
            ),
        ));
    }
    if data.len() > needed {
        return Err(err(
            header_len + needed,
            format!(
                "{} trailing bytes after the bit stream",
                data.len() - needed
            ),
        ));
    }

    let mut edges = BTreeSet::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = data[k / 6] - G6_OFFSET;
            if group >> (5 - k % 6) & 1 == 1 {
                edges.insert((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_canonical_set(n, edges))
}

fn pack_groups(groups: &[u8]) -> usize {
    groups
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - G6_OFFSET))
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(G6_OFFSET + n as u8);
    } else if n < 258_048 {
        out.push(G6_MAX);
        out.extend(
            (0..3)
                .rev()
                .map(|s| G6_OFFSET + ((n >> (6 * s)) & 0x3f) as u8),
        );
    } else {
        out.extend([G6_MAX, G6_MAX]);
        out.extend(
            (0..6)
                .rev()
                .map(|s| G6_OFFSET + ((n >> (6 * s)) & 0x3f) as u8),
        );
    }

    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(G6_OFFSET + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(G6_OFFSET + (group << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
