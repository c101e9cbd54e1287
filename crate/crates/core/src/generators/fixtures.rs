//! Fixed named graphs with frozen labelings.

use crate::graph::Graph;

/// Petersen graph: outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram
/// `i+5 -- (i+2)%5 + 5`.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    g
}

/// Icosahedron labels: 0..3 = `w1..w3`, 3..9 = `v1..v6`, 9..12 = `u1..u3`.
pub const ICOSAHEDRON_LABELS: [&str; 12] = ["w1", "w2", "w3", "v1", "v2", "v3", "v4", "v5", "v6", "u1", "u2", "u3"];

const ICOSAHEDRON_EDGES: [(&str, &str); 30] = [
    ("u1", "v2"),
    ("v2", "w1"),
    ("w1", "w3"),
    ("w3", "w2"),
    ("w2", "w1"),
    ("w1", "v1"),
    ("v1", "u1"),
    ("u1", "v3"),
    ("v3", "u2"),
    ("u2", "v5"),
    ("v5", "u3"),
    ("u3", "v6"),
    ("v6", "w3"),
    ("w3", "v4"),
    ("v4", "w2"),
    ("w2", "v2"),
    ("w1", "v6"),
    ("v6", "v5"),
    ("v5", "v4"),
    ("v4", "v3"),
    ("v3", "v2"),
    ("v2", "v1"),
    ("v1", "v6"),
    ("v4", "u2"),
    ("u2", "u3"),
    ("u3", "u1"),
    ("u1", "u2"),
    ("v5", "w3"),
    ("v3", "w2"),
    ("v1", "u3"),
];

fn label(s: &str) -> usize {
    ICOSAHEDRON_LABELS.iter().position(|&l| l == s).unwrap()
}

pub fn icosahedron() -> Graph {
    let mut g = Graph::new(12);
    for (a, b) in ICOSAHEDRON_EDGES {
        g.add_edge(label(a), label(b));
    }
    g
}

/// The stored proper 4-coloring of [`icosahedron`]: classes
/// `{w1, v4, u3}`, `{w2, v6, u1}`, `{w3, v2, u2}`, `{v1, v3, v5}`.
pub const ICOSAHEDRON_COLORING: [usize; 12] = [0, 1, 2, 3, 2, 3, 0, 3, 1, 1, 2, 0];

/// Five-wheel: hub 0, rim 1..6 in cyclic order.
pub fn w5() -> Graph {
    let mut g = Graph::new(6);
    for i in 1..6 {
        g.add_edge(0, i);
        g.add_edge(i, i % 5 + 1);
    }
    g
}

/// Complete bipartite `K_{a,b}`, sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for i in 0..a {
        for j in 0..b {
            g.add_edge(i, a + j);
        }
    }
    g
}
