use std::io::{BufRead, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphFormat {
    /// `u v` per line, 0-based, `#` comments. An optional `# n=<order>` comment fixes the order.
    EdgeList,
    /// `p edge n m` header and `e u v` lines, 1-based.
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge_list" | "edge-list" | "edgelist" => Ok(Self::EdgeList),
            "dimacs" => Ok(Self::Dimacs),
            other => Err(Error::Parse { line: 0, message: format!("unknown graph format `{other}`") }),
        }
    }
}

pub fn read_graph(source: impl BufRead, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => read_edge_list(source),
        GraphFormat::Dimacs => read_dimacs(source),
    }
}

pub fn write_graph(g: &Graph, mut sink: impl Write, format: GraphFormat) -> Result<()> {
    match format {
        GraphFormat::EdgeList => {
            writeln!(sink, "# n={} m={}", g.n(), g.m())?;
            for (u, v) in g.edges() {
                writeln!(sink, "{u} {v}")?;
            }
        }
        GraphFormat::Dimacs => {
            writeln!(sink, "p edge {} {}", g.n(), g.m())?;
            for (u, v) in g.edges() {
                writeln!(sink, "e {} {}", u + 1, v + 1)?;
            }
        }
    }
    Ok(())
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_id(token: Option<&str>, line: usize) -> Result<usize> {
    let token = token.ok_or_else(|| parse_err(line, "missing vertex id"))?;
    token.parse().map_err(|_| parse_err(line, format!("invalid vertex id `{token}`")))
}

/// Reads `n=<value>` out of a comment body, if present.
fn declared_order(comment: &str) -> Option<usize> {
    comment.split_whitespace().find_map(|tok| tok.strip_prefix("n=")).and_then(|v| v.parse().ok())
}

fn read_edge_list(source: impl BufRead) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut order: Option<usize> = None;
    for (idx, line) in source.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let (content, comment) = match line.split_once('#') {
            Some((c, rest)) => (c, Some(rest)),
            None => (line.as_str(), None),
        };
        if order.is_none() {
            order = comment.and_then(declared_order);
        }
        let mut tokens = content.split_whitespace();
        let Some(first) = tokens.next() else { continue };
        let u = parse_id(Some(first), line_no)?;
        let v = parse_id(tokens.next(), line_no)?;
        if tokens.next().is_some() {
            return Err(parse_err(line_no, "expected exactly two vertex ids"));
        }
        if u == v {
            return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    let max_id = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match order {
        Some(n) if n < max_id => {
            return Err(parse_err(0, format!("declared order {n} but vertex id {} appears", max_id - 1)))
        }
        Some(n) => n,
        None => max_id,
    };
    Graph::from_edges(n, edges)
}

fn read_dimacs(source: impl BufRead) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, line) in source.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line_no, "repeated problem line"));
                }
                match tokens.next() {
                    Some("edge") | Some("col") => {}
                    _ => return Err(parse_err(line_no, "expected `p edge <n> <m>`")),
                }
                let n = parse_id(tokens.next(), line_no)?;
                let m = parse_id(tokens.next(), line_no)?;
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(parse_err(line_no, "edge line before problem line"));
                };
                let u = parse_id(tokens.next(), line_no)?;
                let v = parse_id(tokens.next(), line_no)?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(line_no, format!("vertex id out of range 1..={n}")));
                }
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(parse_err(line_no, format!("unexpected line tag `{other}`"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing problem line"))?;
    if edges.len() != m {
        return Err(parse_err(0, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphFamily, GraphFamilySpec};
    use proptest::prelude::*;

    fn p3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn reads_edge_list() {
        let g = read_graph("0 1\n1 2\n".as_bytes(), GraphFormat::EdgeList).unwrap();
        assert_eq!(g, p3());
        let g = read_graph("# a comment\n0 1 # trailing\n\n1 2\n".as_bytes(), GraphFormat::EdgeList).unwrap();
        assert_eq!(g, p3());
    }

    #[test]
    fn reads_dimacs() {
        let g = read_graph("c hi\np edge 3 2\ne 1 2\ne 2 3\n".as_bytes(), GraphFormat::Dimacs).unwrap();
        assert_eq!(g, p3());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = read_graph("0 x\n".as_bytes(), GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
        let err = read_graph("0 1\n2 2\n".as_bytes(), GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = read_graph("0 1\n1 0\n".as_bytes(), GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(err, Error::DuplicateEdge(0, 1)));
        let err = read_graph("p edge 3 1\ne 1 4\n".as_bytes(), GraphFormat::Dimacs).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn isolated_vertices_survive_round_trip() {
        let g = Graph::from_edges(5, [(0, 1)]).unwrap();
        for format in [GraphFormat::EdgeList, GraphFormat::Dimacs] {
            let mut buf = Vec::new();
            write_graph(&g, &mut buf, format).unwrap();
            assert_eq!(read_graph(buf.as_slice(), format).unwrap(), g);
        }
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..25, p in 0.0f64..1.0, seed in any::<u64>(), dimacs in any::<bool>()) {
            let g = generate(&GraphFamilySpec::new(GraphFamily::Gnp { n, p }, seed)).unwrap();
            let format = if dimacs { GraphFormat::Dimacs } else { GraphFormat::EdgeList };
            let mut buf = Vec::new();
            write_graph(&g, &mut buf, format).unwrap();
            let back = read_graph(buf.as_slice(), format).unwrap();
            let degree_sum: usize = back.vertices().map(|v| back.degree(v)).sum();
            prop_assert_eq!(degree_sum, 2 * back.m());
            prop_assert_eq!(back, g);
        }
    }
}
