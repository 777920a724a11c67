//! The graph text format used by the command-line tools.
//!
//! ```text
//! c an optional comment
//! p <n> <m>
//! e <u> <v>
//! ```
//!
//! Vertex indices on `e` lines are 1-based and distinct. Exactly `m` edge
//! lines must follow the single `p` line; duplicate or looping `e` lines are
//! a parse error. Serialization is canonical: the `p` line, then edges in
//! lexicographic order, so parse/serialize round-trips byte-identically.

use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Graph};

pub fn parse_graph(text: &str) -> Result<Graph> {
    let err = |line: usize, msg: String| Error::Parse { line, msg };
    let mut graph: Option<Graph> = None;
    let mut declared_m = 0usize;
    let mut seen_m = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        match fields[0] {
            "p" => {
                if graph.is_some() {
                    return Err(err(lineno, "duplicate p line".into()));
                }
                if fields.len() != 3 {
                    return Err(err(lineno, "expected `p <n> <m>`".into()));
                }
                let n: usize = fields[1]
                    .parse()
                    .map_err(|_| err(lineno, format!("bad vertex count `{}`", fields[1])))?;
                declared_m = fields[2]
                    .parse()
                    .map_err(|_| err(lineno, format!("bad edge count `{}`", fields[2])))?;
                graph = Some(Graph::new(n));
            }
            "e" => {
                let g = graph
                    .take()
                    .ok_or_else(|| err(lineno, "e line before p line".into()))?;
                if fields.len() != 3 {
                    return Err(err(lineno, "expected `e <u> <v>`".into()));
                }
                let u: usize = fields[1]
                    .parse()
                    .map_err(|_| err(lineno, format!("bad vertex `{}`", fields[1])))?;
                let v: usize = fields[2]
                    .parse()
                    .map_err(|_| err(lineno, format!("bad vertex `{}`", fields[2])))?;
                if u == 0 || v == 0 {
                    return Err(err(lineno, "vertex indices are 1-based".into()));
                }
                if u == v {
                    return Err(err(lineno, format!("loop at vertex {u}")));
                }
                let e = EdgeRef::new(u - 1, v - 1).unwrap();
                graph = Some(g.add_edge(e).map_err(|e| match e {
                    Error::EdgeExists { u, v } => {
                        err(lineno, format!("duplicate edge {{{}, {}}}", u + 1, v + 1))
                    }
                    Error::VertexOutOfRange { v, .. } => {
                        err(lineno, format!("vertex {} out of range", v + 1))
                    }
                    other => other,
                })?);
                seen_m += 1;
            }
            other => {
                return Err(err(lineno, format!("unknown line type `{other}`")));
            }
        }
    }

    let g = graph.ok_or_else(|| err(0, "missing p line".into()))?;
    if seen_m != declared_m {
        return Err(err(
            0,
            format!("p line declares {declared_m} edges but {seen_m} were given"),
        ));
    }
    Ok(g)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for e in g.edges() {
        out.push_str(&format!("e {} {}\n", e.u() + 1, e.v() + 1));
    }
    out
}
