//! Class recognizers and reducible configurations, each returning a witness
//! that can be re-checked against the host graph.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// `[center, a, b, c]`.
    Claw,
    Triad,
    Triangle,
    CliqueCutset,
    /// `[x, y]` with `N(y) ⊆ N[x]`.
    DominatedPair,
    /// `[t0, t1, t2, v]`: `v` outside triangle `t` sees 0, 2 or 3 of it.
    MixedVertex,
    /// `[v, c0, c1, ...]`: an odd cycle in the complement of `G[N(v)]`.
    OddAnticycle,
    /// Four vertices inducing a claw, `2K1 + K2` or `4K1`.
    AntiprismaticObstruction,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassWitness {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
}

impl ClassWitness {
    pub fn new(kind: WitnessKind, vertices: Vec<usize>) -> Self {
        ClassWitness { kind, vertices }
    }

    /// Re-checks the claimed configuration in `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        if vs.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let distinct = vs.iter().collect::<BTreeSet<_>>().len() == vs.len();
        if !distinct {
            return false;
        }
        match self.kind {
            WitnessKind::Claw => {
                vs.len() == 4 && vs[1..].iter().all(|&x| g.has_edge(vs[0], x)) && g.is_independent(&vs[1..])
            }
            WitnessKind::Triad => vs.len() == 3 && g.is_independent(vs),
            WitnessKind::Triangle => vs.len() == 3 && g.is_clique(vs),
            WitnessKind::CliqueCutset => !vs.is_empty() && g.is_clique(vs) && g.components_avoiding(vs).len() >= 2,
            WitnessKind::DominatedPair => vs.len() == 2 && dominates(g, vs[0], vs[1]),
            WitnessKind::MixedVertex => {
                vs.len() == 4 && g.is_clique(&vs[..3]) && {
                    let c = vs[..3].iter().filter(|&&t| g.has_edge(vs[3], t)).count();
                    c != 1
                }
            }
            WitnessKind::OddAnticycle => {
                if vs.len() < 4 {
                    return false;
                }
                let (v, cyc) = (vs[0], &vs[1..]);
                cyc.len() >= 3
                    && cyc.len() % 2 == 1
                    && cyc.iter().all(|&c| g.has_edge(v, c))
                    && (0..cyc.len()).all(|i| !g.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]))
            }
            WitnessKind::AntiprismaticObstruction => {
                vs.len() == 4 && antiprismatic_pattern(g, [vs[0], vs[1], vs[2], vs[3]])
            }
        }
    }
}

/// `N(y) ⊆ N[x]`, `x ≠ y`.
pub fn dominates(g: &Graph, x: usize, y: usize) -> bool {
    if x == y {
        return false;
    }
    let rx = g.row(x);
    let ry = g.row(y);
    let xw = x / 64;
    let xb = 1u64 << (x % 64);
    ry.iter().zip(rx).enumerate().all(|(i, (a, b))| {
        let closed = if i == xw { b | xb } else { *b };
        a & !closed == 0
    })
}

/// Center plus three pairwise non-adjacent neighbors, smallest center first.
pub fn find_claw(g: &Graph) -> Option<ClassWitness> {
    for v in 0..g.n() {
        let nb: Vec<usize> = g.neighbors(v).collect();
        if let Some(t) = triad_among(g, &nb) {
            return Some(ClassWitness::new(WitnessKind::Claw, vec![v, t[0], t[1], t[2]]));
        }
    }
    None
}

pub fn is_claw_free(g: &Graph) -> bool {
    find_claw(g).is_none()
}

fn triad_among(g: &Graph, verts: &[usize]) -> Option<[usize; 3]> {
    for (i, &a) in verts.iter().enumerate() {
        for (j, &b) in verts.iter().enumerate().skip(i + 1) {
            if g.has_edge(a, b) {
                continue;
            }
            for &c in &verts[j + 1..] {
                if !g.has_edge(a, c) && !g.has_edge(b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// Lexicographically least triad.
pub fn find_triad(g: &Graph) -> Option<ClassWitness> {
    let all: Vec<usize> = (0..g.n()).collect();
    triad_among(g, &all).map(|t| ClassWitness::new(WitnessKind::Triad, t.to_vec()))
}

/// Lexicographically least triangle.
pub fn find_triangle(g: &Graph) -> Option<ClassWitness> {
    for (a, b) in g.edges() {
        if let Some(c) = g.neighbors(a).find(|&c| c > b && g.has_edge(b, c)) {
            return Some(ClassWitness::new(WitnessKind::Triangle, vec![a, b, c]));
        }
    }
    None
}

pub fn is_triangle_free(g: &Graph) -> bool {
    find_triangle(g).is_none()
}

/// A vertex whose neighborhood is not the union of two cliques, with an odd
/// cycle in the complement of that neighborhood.
pub fn quasi_line_violation(g: &Graph) -> Option<ClassWitness> {
    for v in 0..g.n() {
        let nb: Vec<usize> = g.neighbors(v).collect();
        if let Some(cyc) = odd_anticycle(g, &nb) {
            let mut vs = vec![v];
            vs.extend(cyc);
            return Some(ClassWitness::new(WitnessKind::OddAnticycle, vs));
        }
    }
    None
}

pub fn is_quasi_line(g: &Graph) -> bool {
    quasi_line_violation(g).is_none()
}

/// BFS 2-coloring of the complement of `G[verts]`; on failure, the odd cycle
/// closed by the conflicting pair.
fn odd_anticycle(g: &Graph, verts: &[usize]) -> Option<Vec<usize>> {
    let k = verts.len();
    let anti = |i: usize, j: usize| i != j && !g.has_edge(verts[i], verts[j]);
    let mut side = vec![usize::MAX; k];
    let mut parent = vec![usize::MAX; k];
    for s in 0..k {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for y in 0..k {
                if !anti(x, y) {
                    continue;
                }
                if side[y] == usize::MAX {
                    side[y] = 1 - side[x];
                    parent[y] = x;
                    q.push_back(y);
                } else if side[y] == side[x] {
                    // Adjacent BFS vertices on the same side sit at equal depth, so
                    // stepping both up together meets at their common ancestor.
                    let (mut a, mut b) = (x, y);
                    let mut left = vec![a];
                    let mut right = vec![b];
                    while a != b {
                        a = parent[a];
                        b = parent[b];
                        left.push(a);
                        right.push(b);
                    }
                    right.pop();
                    right.reverse();
                    left.extend(right);
                    return Some(left.into_iter().map(|i| verts[i]).collect());
                }
            }
        }
    }
    None
}

/// Violation of the prismatic condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrismaticViolation {
    pub triangle: [usize; 3],
    pub vertex: usize,
    pub count: usize,
}

impl PrismaticViolation {
    pub fn witness(&self) -> ClassWitness {
        let t = self.triangle;
        ClassWitness::new(WitnessKind::MixedVertex, vec![t[0], t[1], t[2], self.vertex])
    }
}

pub fn prismatic_violation(g: &Graph) -> Option<PrismaticViolation> {
    for a in 0..g.n() {
        for b in g.neighbors(a).filter(|&b| b > a) {
            for c in g.neighbors(a).filter(|&c| c > b && g.has_edge(b, c)) {
                for v in 0..g.n() {
                    if v == a || v == b || v == c {
                        continue;
                    }
                    let count = [a, b, c].iter().filter(|&&t| g.has_edge(v, t)).count();
                    if count != 1 {
                        return Some(PrismaticViolation {
                            triangle: [a, b, c],
                            vertex: v,
                            count,
                        });
                    }
                }
            }
        }
    }
    None
}

pub fn is_prismatic(g: &Graph) -> bool {
    prismatic_violation(g).is_none()
}

/// Induced 4-vertex graphs excluded from antiprismatic graphs: 0 edges,
/// exactly 1 edge, or a claw.
fn antiprismatic_pattern(g: &Graph, q: [usize; 4]) -> bool {
    let mut deg = [0usize; 4];
    let mut edges = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if g.has_edge(q[i], q[j]) {
                deg[i] += 1;
                deg[j] += 1;
                edges += 1;
            }
        }
    }
    edges <= 1 || (edges == 3 && deg.contains(&3))
}

pub fn antiprismatic_violation(g: &Graph) -> Option<ClassWitness> {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if antiprismatic_pattern(g, [a, b, c, d]) {
                        return Some(ClassWitness::new(
                            WitnessKind::AntiprismaticObstruction,
                            vec![a, b, c, d],
                        ));
                    }
                }
            }
        }
    }
    None
}

pub fn is_antiprismatic(g: &Graph) -> bool {
    antiprismatic_violation(g).is_none()
}

/// Largest graph the minimal-separator enumeration is run on.
pub const CLIQUE_CUTSET_MAX_N: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "status", content = "cutset")]
pub enum CutsetSearch {
    Found(Vec<usize>),
    NoneExists,
    /// Graph too large for the enumeration.
    NotAttempted,
}

/// A clique whose removal disconnects `g`, searched among the minimal
/// separators. Every clique cutset contains a minimal separator, which is then
/// itself a clique, so the search is complete.
pub fn find_clique_cutset(g: &Graph) -> Result<CutsetSearch> {
    if !g.is_connected() {
        return invalid("clique cutset search needs a connected graph");
    }
    if g.n() > CLIQUE_CUTSET_MAX_N {
        return Ok(CutsetSearch::NotAttempted);
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    let mut push = |s: Vec<usize>, queue: &mut VecDeque<Vec<usize>>| -> Option<Vec<usize>> {
        if s.is_empty() || !seen.insert(s.clone()) {
            return None;
        }
        if g.is_clique(&s) {
            return Some(s);
        }
        queue.push_back(s);
        None
    };
    for v in 0..g.n() {
        let mut closed: Vec<usize> = g.neighbors(v).collect();
        closed.push(v);
        for comp in g.components_avoiding(&closed) {
            if let Some(s) = push(boundary(g, &comp), &mut queue) {
                return Ok(CutsetSearch::Found(s));
            }
        }
    }
    while let Some(s) = queue.pop_front() {
        for &x in &s {
            let mut removed = s.clone();
            removed.extend(g.neighbors(x));
            removed.sort_unstable();
            removed.dedup();
            for comp in g.components_avoiding(&removed) {
                if let Some(found) = push(boundary(g, &comp), &mut queue) {
                    return Ok(CutsetSearch::Found(found));
                }
            }
        }
    }
    Ok(CutsetSearch::NoneExists)
}

/// `N(C)`: vertices outside `comp` with a neighbor in it, sorted.
fn boundary(g: &Graph, comp: &[usize]) -> Vec<usize> {
    let inside = g.vertex_set(comp);
    let mut out = BTreeSet::new();
    for &c in comp {
        for w in g.neighbors(c) {
            if inside[w / 64] >> (w % 64) & 1 == 0 {
                out.insert(w);
            }
        }
    }
    out.into_iter().collect()
}

/// First `(x, y)` in lexicographic order with `N(y) ⊆ N[x]`.
pub fn find_dominated_pair(g: &Graph, require_adjacent: bool) -> Option<(usize, usize)> {
    for x in 0..g.n() {
        for y in 0..g.n() {
            if x != y && (!require_adjacent || g.has_edge(x, y)) && dominates(g, x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn claw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn claw_witness() {
        let w = find_claw(&claw()).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3]);
        assert!(w.holds_in(&claw()));
        assert!(find_claw(&Graph::cycle(6)).is_none());
    }

    #[test]
    fn triads_and_triangles() {
        assert!(find_triad(&Graph::cycle(5)).is_none());
        let t = find_triad(&Graph::cycle(7)).unwrap();
        assert!(t.holds_in(&Graph::cycle(7)));
        assert!(find_triad(&Graph::complete(6)).is_none());
        assert!(is_triangle_free(&Graph::path(6)));
        assert_eq!(find_triangle(&Graph::complete(4)).unwrap().vertices, vec![0, 1, 2]);
    }

    #[test]
    fn quasi_line_on_claw() {
        let w = quasi_line_violation(&claw()).unwrap();
        assert_eq!(w.vertices[0], 0);
        assert!(w.holds_in(&claw()));
        assert!(is_quasi_line(&Graph::cycle(5)));
    }

    #[test]
    fn prismatic_basics() {
        assert!(is_prismatic(&Graph::cycle(7)));
        let v = prismatic_violation(&Graph::complete(4)).unwrap();
        assert_eq!(v.count, 3);
        assert!(v.witness().holds_in(&Graph::complete(4)));
    }

    #[test]
    fn antiprismatic_basics() {
        assert!(is_antiprismatic(&Graph::complete(6)));
        assert!(!is_antiprismatic(&Graph::new(4)));
        assert!(!is_antiprismatic(&claw()));
    }

    #[test]
    fn clique_cutsets() {
        let p3 = Graph::path(3);
        assert_eq!(find_clique_cutset(&p3).unwrap(), CutsetSearch::Found(vec![1]));
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(find_clique_cutset(&diamond).unwrap(), CutsetSearch::Found(vec![1, 2]));
        assert_eq!(find_clique_cutset(&Graph::cycle(5)).unwrap(), CutsetSearch::NoneExists);
        assert_eq!(
            find_clique_cutset(&Graph::complete(5)).unwrap(),
            CutsetSearch::NoneExists
        );
        assert!(find_clique_cutset(&Graph::new(2)).is_err());
        assert_eq!(
            find_clique_cutset(&Graph::path(70)).unwrap(),
            CutsetSearch::NotAttempted
        );
    }

    #[test]
    fn dominated_pairs() {
        assert_eq!(find_dominated_pair(&Graph::complete(3), true), Some((0, 1)));
        assert!(find_dominated_pair(&Graph::cycle(5), false).is_none());
        // P3: an end vertex is dominated by the other end (non-adjacent).
        assert_eq!(find_dominated_pair(&Graph::path(3), false), Some((0, 2)));
        assert_eq!(find_dominated_pair(&Graph::path(3), true), Some((1, 0)));
    }
}
