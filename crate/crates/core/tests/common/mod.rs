//! Independent reference implementations used only by the tests.
#![allow(dead_code)]

use clawchrome::Graph;

/// All labeled graphs on `n` vertices, edge `k` of the lexicographic pair
/// list present iff bit `k` of the mask is set.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let mut g = Graph::new(n);
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    })
}

/// Matching number by trying every edge subset through plain recursion.
pub fn brute_matching_number(g: &Graph) -> usize {
    fn go(edges: &[(usize, usize)], used: &mut Vec<bool>, i: usize) -> usize {
        if i == edges.len() {
            return 0;
        }
        let skip = go(edges, used, i + 1);
        let (u, v) = edges[i];
        if used[u] || used[v] {
            return skip;
        }
        used[u] = true;
        used[v] = true;
        let take = 1 + go(edges, used, i + 1);
        used[u] = false;
        used[v] = false;
        skip.max(take)
    }
    go(&g.edges(), &mut vec![false; g.n()], 0)
}

/// Chromatic number by trying `k = 1, 2, ...` with index-order backtracking.
pub fn naive_chromatic_number(g: &Graph) -> usize {
    fn fits(g: &Graph, k: usize, col: &mut Vec<usize>, v: usize) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| !g.has_edge(u, v) || col[u] != c) {
                col[v] = c;
                if fits(g, k, col, v + 1) {
                    return true;
                }
            }
        }
        false
    }
    if g.n() == 0 {
        return 0;
    }
    let mut col = vec![0; g.n()];
    (1..=g.n()).find(|&k| fits(g, k, &mut col, 0)).unwrap()
}

/// Codegree by direct neighbor comparison, no bitsets.
pub fn naive_codegree(g: &Graph, u: usize, v: usize) -> usize {
    (0..g.n())
        .filter(|&w| w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w))
        .count()
}

pub fn naive_delta2(g: &Graph) -> usize {
    let n = g.n();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .map(|(u, v)| naive_codegree(g, u, v))
        .max()
        .unwrap_or(0)
}

pub fn naive_delta_e(g: &Graph) -> usize {
    g.edges()
        .into_iter()
        .map(|(u, v)| naive_codegree(g, u, v))
        .max()
        .unwrap_or(0)
}

/// Anticodegree counted directly: vertices other than `u, v` seeing neither.
pub fn naive_anticodegree(g: &Graph, u: usize, v: usize) -> usize {
    (0..g.n())
        .filter(|&w| w != u && w != v && !g.has_edge(u, w) && !g.has_edge(v, w))
        .count()
}

pub fn is_triangle_free_naive(g: &Graph) -> bool {
    let n = g.n();
    !(0..n).any(|a| (a + 1..n).any(|b| g.has_edge(a, b) && (b + 1..n).any(|c| g.has_edge(a, c) && g.has_edge(b, c))))
}

/// Exhaustive isomorphism test for small graphs.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == a.n() {
            return true;
        }
        for j in 0..b.n() {
            if used[j] || a.degree(i) != b.degree(j) {
                continue;
            }
            if (0..i).all(|k| a.has_edge(i, k) == b.has_edge(j, map[k])) {
                map.push(j);
                used[j] = true;
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[j] = false;
            }
        }
        false
    }
    a.n() == b.n() && a.edge_count() == b.edge_count() && extend(a, b, &mut Vec::new(), &mut vec![false; b.n()])
}
