//! Edge-list and DIMACS graph formats.
//!
//! Edge lists hold one `u v` pair (0-based) per line. A `# n <n> m <m>`
//! header fixes the vertex count so isolated vertices survive; other `#`
//! lines are comments. DIMACS input (`p edge n m` then `e u v`, 1-based)
//! is detected by its `p` line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("# n {} m {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(s, "e {} {}", u + 1, v + 1).unwrap();
    }
    s
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => write_edge_list(g),
        GraphFormat::Dimacs => write_dimacs(g),
    }
}

fn detect(text: &str) -> GraphFormat {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with('c'));
    match first {
        Some(l) if l.starts_with('p') => GraphFormat::Dimacs,
        _ => GraphFormat::EdgeList,
    }
}

/// Parses either format; self-loops are rejected, duplicate edges merged.
pub fn parse_graph(text: &str) -> Result<Graph> {
    match detect(text) {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

fn number(line: usize, s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse { line, msg: format!("expected a vertex number, got {s:?}") })
}

fn finish(n: usize, edges: Vec<(usize, usize, usize)>) -> Result<Graph> {
    for &(line, u, v) in &edges {
        if u >= n || v >= n {
            return Err(Error::Parse { line, msg: format!("vertex {} out of range for {n} vertices", u.max(v)) });
        }
        if u == v {
            return Err(Error::Parse { line, msg: format!("self-loop at vertex {u}") });
        }
    }
    Graph::from_edges(n, edges.into_iter().map(|(_, u, v)| (u, v)))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if let Some(comment) = trimmed.strip_prefix('#') {
            let f: Vec<&str> = comment.split_whitespace().collect();
            if f.len() == 4 && f[0] == "n" && f[2] == "m" && declared.is_none() {
                declared = Some(number(line, f[1])?);
            }
            continue;
        }
        if trimmed.is_empty() {
            continue;
        }
        let f: Vec<&str> = trimmed.split_whitespace().collect();
        if f.len() != 2 {
            return Err(Error::Parse { line, msg: format!("expected `u v`, got {trimmed:?}") });
        }
        edges.push((line, number(line, f[0])?, number(line, f[1])?));
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(_, u, v)| u.max(v) + 1).max().unwrap_or(0));
    finish(n, edges)
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let f: Vec<&str> = raw.split_whitespace().collect();
        match f.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if f.len() != 4 || n.is_some() {
                    return Err(Error::Parse { line, msg: "expected a single `p edge <n> <m>` line".into() });
                }
                n = Some(number(line, f[2])?);
            }
            Some("e") if f.len() == 3 => {
                if n.is_none() {
                    return Err(Error::Parse { line, msg: "edge before problem line".into() });
                }
                let (u, v) = (number(line, f[1])?, number(line, f[2])?);
                if u == 0 || v == 0 {
                    return Err(Error::Parse { line, msg: "DIMACS vertices are 1-based".into() });
                }
                edges.push((line, u - 1, v - 1));
            }
            Some(_) => return Err(Error::Parse { line, msg: format!("unrecognized line {:?}", raw.trim()) }),
        }
    }
    let n = n.ok_or(Error::Parse { line: 1, msg: "missing problem line".into() })?;
    finish(n, edges)
}
