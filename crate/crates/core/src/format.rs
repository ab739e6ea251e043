//! The line-oriented graph file format and DOT rendering.
//!
//! ```text
//! # comment
//! p route <n> <m> <destination>
//! e <u> <v> <weight>      (m lines; weight is a decimal or num/den)
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{EdgeId, GraphError, NodeId, RoutingTree, WeightedGraph};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("invalid graph: {0}")]
    InvariantViolation(#[from] GraphError),
    #[error("tree does not belong to the rendered graph")]
    ForeignTree,
}

fn parse_err(line: usize, reason: impl Into<String>) -> FormatError {
    FormatError::Parse { line, reason: reason.into() }
}

/// Parses a graph file, returning the graph and its declared destination.
pub fn parse_graph<W: Scalar>(text: &str) -> Result<(WeightedGraph<W>, NodeId), FormatError> {
    let mut header: Option<(usize, usize, usize, usize)> = None;
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line_no, "duplicate header"));
                }
                if fields.len() != 5 || fields[1] != "route" {
                    return Err(parse_err(line_no, "expected `p route <n> <m> <d>`"));
                }
                let num = |s: &str, what: &str| {
                    s.parse::<usize>().map_err(|_| parse_err(line_no, format!("bad {what} `{s}`")))
                };
                let n = num(fields[2], "node count")?;
                let m = num(fields[3], "edge count")?;
                let d = num(fields[4], "destination")?;
                header = Some((n, m, d, line_no));
            }
            "e" => {
                if header.is_none() {
                    return Err(parse_err(line_no, "edge line before header"));
                }
                if fields.len() != 4 {
                    return Err(parse_err(line_no, "expected `e <u> <v> <w>`"));
                }
                let u =
                    fields[1].parse::<usize>().map_err(|_| parse_err(line_no, format!("bad node `{}`", fields[1])))?;
                let v =
                    fields[2].parse::<usize>().map_err(|_| parse_err(line_no, format!("bad node `{}`", fields[2])))?;
                let w = W::parse_exact(fields[3])
                    .ok_or_else(|| parse_err(line_no, format!("bad weight `{}`", fields[3])))?;
                edges.push((u, v, w));
            }
            other => return Err(parse_err(line_no, format!("unknown line type `{other}`"))),
        }
    }

    let (n, m, d, header_line) = header.ok_or_else(|| parse_err(0, "missing `p route` header"))?;
    if edges.len() != m {
        return Err(parse_err(header_line, format!("header declares {m} edges, found {}", edges.len())));
    }
    let graph = WeightedGraph::new(n, edges)?;
    let destination = NodeId(d);
    if !graph.contains_node(destination) {
        return Err(GraphError::DestinationOutOfRange(destination).into());
    }
    Ok((graph, destination))
}

/// Serializes a graph in the file format, edges in lexicographic order.
pub fn write_graph<W: Scalar>(g: &WeightedGraph<W>, destination: NodeId) -> String {
    let mut out = format!("p route {} {} {}\n", g.node_count(), g.edge_count(), destination);
    for (e, w) in g.edges() {
        let (a, b) = e.endpoints();
        let _ = writeln!(out, "e {a} {b} {w}");
    }
    out
}

/// One `e u v w` line per tree edge, lexicographic.
pub fn write_tree_edges<W: Scalar>(tree: &RoutingTree<'_, W>) -> String {
    let mut out = String::new();
    for e in tree.edges() {
        let (a, b) = e.endpoints();
        let w = tree.graph().weight(*e).expect("tree edge");
        let _ = writeln!(out, "e {a} {b} {w}");
    }
    out
}

/// Renders the graph as undirected DOT. Tree edges are bold; the
/// destination is double-circled when a tree is given.
pub fn emit_dot<W: Scalar>(g: &WeightedGraph<W>, tree: Option<&RoutingTree<'_, W>>) -> Result<String, FormatError> {
    if let Some(t) = tree {
        if t.graph() != g {
            return Err(FormatError::ForeignTree);
        }
    }
    let mut out = String::from("graph routing {\n");
    for v in g.nodes() {
        let shape = match tree {
            Some(t) if t.destination() == v => "doublecircle",
            _ => "circle",
        };
        let _ = writeln!(out, "  {v} [shape={shape}];");
    }
    for (e, w) in g.edges() {
        let (a, b) = e.endpoints();
        let style = match tree {
            Some(t) if t.contains(e) => ", style=bold, penwidth=3",
            Some(_) => ", style=dashed",
            None => "",
        };
        let _ = writeln!(out, "  {a} -- {b} [label=\"{w}\"{style}];");
    }
    out.push_str("}\n");
    Ok(out)
}

/// Writes a set of edges as `[u,v]` pairs; used in reports.
pub fn edge_list(edges: impl IntoIterator<Item = EdgeId>) -> Vec<[usize; 2]> {
    edges.into_iter().map(Into::into).collect()
}
