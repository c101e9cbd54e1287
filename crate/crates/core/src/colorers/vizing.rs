//! Misra–Gries edge coloring: at most `Δ + 1` colors on a simple graph.

use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// Proper edge coloring; `colors[i]` belongs to `edges[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    pub edges: Vec<(usize, usize)>,
    pub colors: Vec<usize>,
}

impl EdgeColoring {
    pub fn num_colors(&self) -> usize {
        self.colors.iter().map(|c| c + 1).max().unwrap_or(0)
    }

    /// First pair of edges sharing an endpoint and a color, if any.
    pub fn conflict(&self) -> Option<(usize, usize)> {
        let mut seen = std::collections::HashMap::new();
        for (i, (&(u, v), &c)) in self.edges.iter().zip(&self.colors).enumerate() {
            for x in [u, v] {
                if let Some(&j) = seen.get(&(x, c)) {
                    return Some((j, i));
                }
                seen.insert((x, c), i);
            }
        }
        None
    }
}

struct State {
    k: usize,
    /// `at[u * k + c]` = the neighbor joined to `u` by an edge of color `c`.
    at: Vec<usize>,
    /// `col[u * n + v]` = color of edge `uv`.
    col: Vec<usize>,
    n: usize,
}

impl State {
    fn free(&self, u: usize, c: usize) -> bool {
        self.at[u * self.k + c] == NONE
    }

    fn first_free(&self, u: usize) -> usize {
        (0..self.k)
            .find(|&c| self.free(u, c))
            .expect("Δ+1 colors leave one free")
    }

    fn color(&self, u: usize, v: usize) -> usize {
        self.col[u * self.n + v]
    }

    fn set(&mut self, u: usize, v: usize, c: usize) {
        self.at[u * self.k + c] = v;
        self.at[v * self.k + c] = u;
        self.col[u * self.n + v] = c;
        self.col[v * self.n + u] = c;
    }

    fn unset(&mut self, u: usize, v: usize) {
        let c = self.color(u, v);
        if c != NONE {
            self.at[u * self.k + c] = NONE;
            self.at[v * self.k + c] = NONE;
            self.col[u * self.n + v] = NONE;
            self.col[v * self.n + u] = NONE;
        }
    }

    /// Maximal fan of `u` starting at `v`.
    fn fan(&self, g: &Graph, u: usize, v: usize) -> Vec<usize> {
        let mut fan = vec![v];
        let mut in_fan = vec![false; self.n];
        in_fan[v] = true;
        loop {
            let last = *fan.last().unwrap();
            let next = g.neighbors(u).find(|&w| {
                !in_fan[w] && {
                    let c = self.color(u, w);
                    c != NONE && self.free(last, c)
                }
            });
            match next {
                Some(w) => {
                    in_fan[w] = true;
                    fan.push(w);
                }
                None => return fan,
            }
        }
    }

    /// Swaps colors `c` and `d` along the maximal path from `u` that starts with a `d` edge.
    fn invert_path(&mut self, u: usize, c: usize, d: usize) {
        let mut path = Vec::new();
        let (mut x, mut want, mut other) = (u, d, c);
        loop {
            let y = self.at[x * self.k + want];
            if y == NONE {
                break;
            }
            path.push((x, y, want));
            x = y;
            std::mem::swap(&mut want, &mut other);
        }
        for &(a, b, _) in &path {
            self.unset(a, b);
        }
        for &(a, b, w) in &path {
            self.set(a, b, if w == c { d } else { c });
        }
    }

    fn is_fan(&self, u: usize, fan: &[usize]) -> bool {
        fan.windows(2).all(|w| {
            let c = self.color(u, w[1]);
            c != NONE && self.free(w[0], c)
        })
    }

    /// Shifts colors down the fan prefix and uncolors its last edge.
    fn rotate(&mut self, u: usize, fan: &[usize]) {
        let shifted: Vec<usize> = fan[1..].iter().map(|&w| self.color(u, w)).collect();
        for &w in fan {
            self.unset(u, w);
        }
        for (i, &c) in shifted.iter().enumerate() {
            self.set(u, fan[i], c);
        }
    }
}

pub fn vizing_edge_color(h: &Graph) -> EdgeColoring {
    let n = h.n();
    let k = h.max_degree() + 1;
    let mut st = State {
        k,
        at: vec![NONE; n * k],
        col: vec![NONE; n * n],
        n,
    };
    let edges = h.edges();
    for &(u, v) in &edges {
        let fan = st.fan(h, u, v);
        let c = st.first_free(u);
        let d = st.first_free(*fan.last().unwrap());
        st.invert_path(u, c, d);
        let w = (0..fan.len())
            .find(|&i| st.free(fan[i], d) && st.is_fan(u, &fan[..=i]))
            .expect("Misra–Gries guarantees a fan prefix ending at a d-free vertex");
        st.rotate(u, &fan[..=w]);
        st.set(u, fan[w], d);
    }
    let colors = edges.iter().map(|&(u, v)| st.color(u, v)).collect();
    EdgeColoring { edges, colors }
}
