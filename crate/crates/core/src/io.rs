//! Text formats: plain edge lists (`n m` header, 0-based pairs), DIMACS
//! `.col` (1-based), and the multigraph variant of the edge list that
//! tolerates loops and repeats.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Multigraph};

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    match tok {
        Some(t) => t
            .parse()
            .or_else(|_| parse_err(line, format!("{what}: expected an integer, got {t:?}"))),
        None => parse_err(line, format!("missing {what}")),
    }
}

/// Lines that carry content: trimmed, non-empty, not `#` comments.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// `(line, u, v)` triples.
type TaggedPairs = Vec<(usize, usize, usize)>;

/// Header and pairs, each pair tagged with its source line.
fn parse_pairs(text: &str) -> Result<(usize, TaggedPairs)> {
    let mut lines = content_lines(text);
    let Some((hl, header)) = lines.next() else {
        return parse_err(1, "empty input");
    };
    let mut toks = header.split_whitespace();
    let n = parse_num(toks.next(), hl, "vertex count")?;
    let m = parse_num(toks.next(), hl, "edge count")?;
    let mut edges = Vec::with_capacity(m);
    for (ln, l) in lines {
        let mut toks = l.split_whitespace();
        let u = parse_num(toks.next(), ln, "endpoint")?;
        let v = parse_num(toks.next(), ln, "endpoint")?;
        if u >= n || v >= n {
            return parse_err(ln, format!("endpoint out of range for n={n}"));
        }
        edges.push((ln, u, v));
    }
    if edges.len() != m {
        return parse_err(hl, format!("header declares {m} edges, found {}", edges.len()));
    }
    Ok((n, edges))
}

/// Simple graph from an edge list. Loops are errors; repeats collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let (n, edges) = parse_pairs(text)?;
    let mut g = Graph::new(n);
    for (ln, u, v) in edges {
        if u == v {
            return parse_err(ln, format!("self-loop at {u}"));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

pub fn parse_multigraph(text: &str) -> Result<Multigraph> {
    let (n, edges) = parse_pairs(text)?;
    Multigraph::new(n, edges.into_iter().map(|(_, u, v)| (u, v)).collect())
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut g: Option<Graph> = None;
    for (ln, l) in content_lines(text) {
        let mut toks = l.split_whitespace();
        match toks.next() {
            Some("c") => {}
            Some("p") => {
                if g.is_some() {
                    return parse_err(ln, "second problem line");
                }
                let _format = toks.next();
                let n = parse_num(toks.next(), ln, "vertex count")?;
                g = Some(Graph::new(n));
            }
            Some("e") => {
                let Some(graph) = g.as_mut() else {
                    return parse_err(ln, "edge before problem line");
                };
                let u = parse_num(toks.next(), ln, "endpoint")?;
                let v = parse_num(toks.next(), ln, "endpoint")?;
                if u == 0 || v == 0 || u > graph.n() || v > graph.n() {
                    return parse_err(ln, format!("endpoint out of range 1..={}", graph.n()));
                }
                if u == v {
                    return parse_err(ln, format!("self-loop at {u}"));
                }
                graph.add_edge(u - 1, v - 1);
            }
            Some(other) => return parse_err(ln, format!("unknown line type {other:?}")),
            None => {}
        }
    }
    g.ok_or_else(|| Error::Parse {
        line: 0,
        msg: "no problem line".into(),
    })
}

/// DIMACS if the first content line starts with `c` or `p`, edge list otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    match content_lines(text).next() {
        Some((_, l)) if l.starts_with('c') || l.starts_with('p') => parse_dimacs(text),
        _ => parse_edge_list(text),
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn write_multigraph(h: &Multigraph) -> String {
    let mut s = format!("{} {}\n", h.n, h.edges.len());
    for &(u, v) in &h.edges {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::cycle(6);
        let back = parse_edge_list(&write_edge_list(&g)).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn edge_list_errors_carry_lines() {
        match parse_edge_list("3 2\n0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(parse_edge_list("3 1\n0 0\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("2 1\n0 2\n").is_err());
    }

    #[test]
    fn dimacs_is_one_based() {
        let g = parse_dimacs("c tiny\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g, Graph::path(3));
        assert!(parse_dimacs("p edge 3 1\ne 0 1\n").is_err());
        assert!(parse_dimacs("e 1 2\n").is_err());
    }

    #[test]
    fn sniffing_picks_the_format() {
        assert_eq!(parse_graph("p edge 2 1\ne 1 2\n").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph("2 1\n0 1\n").unwrap(), Graph::complete(2));
    }

    #[test]
    fn multigraph_keeps_loops_and_repeats() {
        let h = parse_multigraph("2 3\n0 0\n0 1\n1 0\n").unwrap();
        assert_eq!(h.edges, vec![(0, 0), (0, 1), (1, 0)]);
        assert_eq!(parse_multigraph(&write_multigraph(&h)).unwrap(), h);
    }
}
