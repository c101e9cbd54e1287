//! Line graphs of multigraphs, keeping the vertex-to-edge map.

use crate::graph::{Graph, Multigraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraph {
    pub graph: Graph,
    /// Vertex `i` of `graph` is edge `edge_of[i]` of the root.
    pub edge_of: Vec<(usize, usize)>,
}

/// `L(h)`: one vertex per edge (loops and parallel copies included), two
/// adjacent iff the edges share an endpoint.
pub fn line_graph(h: &Multigraph) -> LineGraph {
    let m = h.edges.len();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); h.n];
    for (i, &(u, v)) in h.edges.iter().enumerate() {
        incident[u].push(i);
        if v != u {
            incident[v].push(i);
        }
    }
    let mut g = Graph::new(m);
    for inc in &incident {
        for (a, &i) in inc.iter().enumerate() {
            for &j in &inc[a + 1..] {
                g.add_edge(i, j);
            }
        }
    }
    LineGraph {
        graph: g,
        edge_of: h.edges.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_roots() {
        let k3 = Multigraph::from_graph(&Graph::complete(3));
        assert_eq!(line_graph(&k3).graph, Graph::complete(3));
        let p4 = Multigraph::from_graph(&Graph::path(4));
        assert_eq!(line_graph(&p4).graph, Graph::path(3));
    }

    #[test]
    fn loops_and_parallels() {
        let h = Multigraph::new(2, vec![(0, 0), (0, 1), (0, 1)]).unwrap();
        let l = line_graph(&h);
        assert_eq!(l.graph, Graph::complete(3));
        let single_loop = Multigraph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(line_graph(&single_loop).graph.n(), 1);
    }
}
