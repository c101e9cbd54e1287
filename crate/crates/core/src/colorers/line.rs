//! Coloring line graphs of multigraphs: Vizing on the simple part, then
//! loops and parallel copies appended greedily.

use std::collections::HashMap;

use crate::colorers::vizing::vizing_edge_color;
use crate::generators::line::{line_graph, LineGraph};
use crate::graph::{Coloring, Graph, Multigraph};

#[derive(Debug, Clone)]
pub struct LineColoring {
    pub line: LineGraph,
    pub coloring: Coloring,
}

pub fn color_line_graph(h: &Multigraph) -> LineColoring {
    let line = line_graph(h);
    let mut first: HashMap<(usize, usize), usize> = HashMap::new();
    let mut simple = Graph::new(h.n);
    for (i, &(u, v)) in h.edges.iter().enumerate() {
        if u != v {
            let key = (u.min(v), u.max(v));
            first.entry(key).or_insert_with(|| {
                simple.add_edge(u, v);
                i
            });
        }
    }
    let ec = vizing_edge_color(&simple);
    let mut coloring = Coloring::empty(line.graph.n());
    for (&(u, v), &c) in ec.edges.iter().zip(&ec.colors) {
        coloring.set(first[&(u, v)], c);
    }
    // Each remaining vertex is a loop (neighborhood a clique) or an adjacent
    // twin of its first parallel copy, so a color below Δ₂+3 stays free.
    for v in 0..line.graph.n() {
        if coloring.get(v).is_none() {
            let c = coloring.least_free(&line.graph, v);
            coloring.set(v, c);
        }
    }
    LineColoring { line, coloring }
}
