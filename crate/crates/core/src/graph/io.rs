//! graph6 and plain edge-list serialization.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";

fn g6err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

/// Encodes `g` in graph6: size prefix followed by the upper triangle of the
/// adjacency matrix, column by column, six bits per printable byte.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(g6err("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(g6err(format!("byte {b:#04x} outside the printable range 63..=126")));
    }
    let (n, body) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(g6err(format!("8-byte size form unsupported (more than {MAX_VERTICES} vertices)")));
    } else if bytes.len() >= 4 {
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= 62 {
            return Err(g6err("non-minimal size encoding"));
        }
        (n, &bytes[4..])
    } else {
        return Err(g6err("truncated size header"));
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    let pairs = n * (n - 1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(g6err(format!("length mismatch: {} data bytes for {n} vertices, expected {expected}", body.len())));
    }
    let bit_at = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (pairs..expected * 6).any(bit_at) {
        return Err(g6err("nonzero padding bits"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(k) {
                g.insert_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// First line `n m`, then one `u v` line per edge with `u < v`.
pub fn encode_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn decode_edge_list(text: &str) -> Result<Graph> {
    let err = |msg: String| Error::EdgeList(msg);
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| err("empty input".into()))?;
    let parse_pair = |line: &str| -> Result<(usize, usize)> {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(err(format!("expected two non-negative integers, got {line:?}"))),
        }
    };
    let (n, m) = parse_pair(header)?;
    let mut g = Graph::empty(n)?;
    let mut count = 0;
    for line in lines {
        let (u, v) = parse_pair(line)?;
        g.insert_edge(u, v)?;
        count += 1;
    }
    if count != m {
        return Err(err(format!("header declares {m} edges, found {count}")));
    }
    Ok(g)
}

/// Accepts either serialization; edge lists are recognised by a first line
/// made of two integers.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    let looks_like_edge_list = {
        let fields: Vec<_> = first.split_whitespace().collect();
        fields.len() == 2 && fields.iter().all(|f| f.parse::<usize>().is_ok())
    };
    if looks_like_edge_list {
        decode_edge_list(text)
    } else {
        decode_graph6(text.trim())
    }
}
