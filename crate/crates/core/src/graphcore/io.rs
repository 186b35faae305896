//! Graph serialization: graph6 for simple graphs and a JSON schema
//! `{"vertices": n, "edges": [[u,v], ...]}` for multigraphs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{MultiGraph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("graph6 requires a simple graph (no loops or parallel edges)")]
    NotSimple,
    #[error("graph too large for graph6 encoding ({0} vertices)")]
    TooLarge(usize),
    #[error("invalid graph6 input: {0}")]
    Invalid(String),
    #[error("invalid multigraph JSON: {0}")]
    InvalidJson(String),
}

/// Encode a simple graph in graph6 format (bit-exact per the format
/// specification, no header).
pub fn to_graph6(g: &MultiGraph) -> Result<String, Graph6Error> {
    if !g.is_simple() {
        return Err(Graph6Error::NotSimple);
    }
    let n = g.vertex_count();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else if n <= 258047 {
        bytes.push(126);
        bytes.push(63 + ((n >> 12) & 0x3f) as u8);
        bytes.push(63 + ((n >> 6) & 0x3f) as u8);
        bytes.push(63 + (n & 0x3f) as u8);
    } else {
        return Err(Graph6Error::TooLarge(n));
    }
    // upper triangle, column by column: x(0,1), x(0,2), x(1,2), ...
    let mut bits: Vec<bool> = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge_between(VertexId(i), VertexId(j)));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut val = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                val |= 1 << (5 - k);
            }
        }
        bytes.push(63 + val);
    }
    Ok(String::from_utf8(bytes).expect("graph6 bytes are ascii"))
}

/// Decode a graph6 line (an optional `>>graph6<<` header is accepted).
pub fn from_graph6(s: &str) -> Result<MultiGraph, Graph6Error> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Invalid("empty input".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::Invalid(format!("byte {b} out of range")));
        }
    }
    let (n, pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Graph6Error::Invalid("8-byte sizes not supported".into()));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Invalid("truncated size".into()));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = nbits.div_ceil(6);
    if bytes.len() - pos != expect {
        return Err(Graph6Error::Invalid(format!(
            "expected {} data bytes for n={}, found {}",
            expect,
            n,
            bytes.len() - pos
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6] - 63;
            if byte & (1 << (5 - bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Ok(MultiGraph::from_edges(n, &edges))
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: usize,
    edges: Vec<[usize; 2]>,
}

/// Serialize a multigraph to the JSON schema
/// `{"vertices": n, "edges": [[u,v], ...]}`.
pub fn to_json(g: &MultiGraph) -> String {
    let doc = GraphJson {
        vertices: g.vertex_count(),
        edges: g.edges().iter().map(|e| [e.ends[0].0, e.ends[1].0]).collect(),
    };
    serde_json::to_string(&doc).expect("graph JSON serialization")
}

/// Parse the multigraph JSON schema.
pub fn from_json(s: &str) -> Result<MultiGraph, Graph6Error> {
    let doc: GraphJson =
        serde_json::from_str(s).map_err(|e| Graph6Error::InvalidJson(e.to_string()))?;
    for e in &doc.edges {
        if e[0] >= doc.vertices || e[1] >= doc.vertices {
            return Err(Graph6Error::InvalidJson(format!(
                "edge [{}, {}] out of range for {} vertices",
                e[0], e[1], doc.vertices
            )));
        }
    }
    let edges: Vec<(usize, usize)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
    Ok(MultiGraph::from_edges(doc.vertices, &edges))
}
