//! Text formats: a plain edge list and graph6.
//!
//! Edge list: `#` lines are comments, the first data line is `n m`, and each
//! of the following `m` data lines is `u v` with `0 <= u, v < n`, `u != v`.
//! Repeated edges are collapsed.
//!
//! graph6 follows <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields = parse_pair(line, line_no)?;
        match header {
            None => header = Some(fields),
            Some((n, m)) => {
                let (u, v) = fields;
                if u >= n || v >= n {
                    return Err(parse_err(
                        line_no,
                        format!("vertex out of range in edge {u} {v} (n = {n})"),
                    ));
                }
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
                }
                if edges.len() == m {
                    return Err(parse_err(
                        line_no,
                        format!("more edge lines than the declared m = {m}"),
                    ));
                }
                edges.push((u, v));
            }
        }
    }

    let Some((n, m)) = header else {
        return Err(parse_err(last_line.max(1), "missing `n m` header".into()));
    };
    if edges.len() != m {
        return Err(parse_err(
            last_line.max(1),
            format!("declared m = {m} but found {} edge lines", edges.len()),
        ));
    }
    Graph::from_edges(n, edges).map_err(|e| parse_err(last_line, e.to_string()))
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(line_no, format!("expected two integers, got `{line}`")))?;
        tok.parse::<usize>()
            .map_err(|_| parse_err(line_no, format!("not a non-negative integer: `{tok}`")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(parse_err(
            line_no,
            format!("expected two integers, got `{line}`"),
        ));
    }
    Ok((a, b))
}

fn parse_err(line: usize, message: String) -> Error {
    Error::Parse { line, message }
}

/// Serializes as an edge list with edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

const G6_HEADER: &str = ">>graph6<<";

/// Decodes a single graph6 line. A leading `>>graph6<<` header is accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(G6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!(
            "byte {pos} ({:?}) is outside the printable range 63..=126",
            bytes[pos] as char
        )));
    }
    let data: Vec<u8> = bytes.iter().map(|b| b - 63).collect();

    let (n, header_len) = if data[0] != 63 {
        (data[0] as usize, 1)
    } else if data.len() >= 2 && data[1] != 63 {
        if data.len() < 4 {
            return Err(Error::Graph6("truncated size field".into()));
        }
        (read_bits(&data[1..4]), 4)
    } else {
        if data.len() < 8 {
            return Err(Error::Graph6("truncated size field".into()));
        }
        (read_bits(&data[2..8]), 8)
    };

    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = header_len + bit_count.div_ceil(6);
    if data.len() != expected {
        return Err(Error::Graph6(format!(
            "length {} does not match n = {n} (expected {expected} bytes)",
            data.len()
        )));
    }

    let body = &data[header_len..];
    let mut edges = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[pos / 6] >> (5 - pos % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    Graph::from_edges(n, edges)
}

fn read_bits(chunks: &[u8]) -> usize {
    chunks.iter().fold(0, |acc, &c| (acc << 6) | c as usize)
}

/// Encodes without the optional `>>graph6<<` header and without a newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8);
    } else if n <= 258_047 {
        out.push(63);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8));
    } else {
        out.push(63);
        out.push(63);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (6 - filled));
    }
    out.into_iter().map(|b| (b + 63) as char).collect()
}

/// Parses every non-empty line of a graph6 corpus.
pub fn parse_graph6_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(parse_graph6)
        .collect()
}

/// Renders a vertex list as `{a,b,c}`.
pub fn format_set(vs: impl IntoIterator<Item = Vertex>) -> String {
    let parts: Vec<String> = vs.into_iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}
