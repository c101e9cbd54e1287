//! Simple graphs stored as adjacency bitsets, plus the small value types
//! (colorings, covers, matchings, lists) that travel with them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Undirected simple graph on vertices `0..n`.
///
/// Row `v` is a bitset over `0..n`; bit `u` is set iff `uv` is an edge.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "EdgeListForm", try_from = "EdgeListForm")]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

/// JSON shape of a graph: `{"n": .., "edges": [[u, v], ..]}`.
#[derive(Serialize, Deserialize)]
struct EdgeListForm {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<Graph> for EdgeListForm {
    fn from(g: Graph) -> Self {
        EdgeListForm {
            n: g.n,
            edges: g.edges(),
        }
    }
}

impl TryFrom<EdgeListForm> for Graph {
    type Error = Error;
    fn try_from(f: EdgeListForm) -> Result<Graph> {
        Graph::from_edges(f.n, &f.edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        if n >= 3 {
            for i in 0..n {
                g.add_edge(i, (i + 1) % n);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Builds a graph from an edge list, rejecting loops and out-of-range ids.
    /// Repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return invalid(format!("edge {u}-{v} out of range for n={n}"));
            }
            if u == v {
                return invalid(format!("self-loop at {u}"));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Panics on a loop; callers validate ids.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        self.row_mut(u)[v / WORD] |= 1 << (v % WORD);
        self.row_mut(v)[u / WORD] |= 1 << (u % WORD);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.row_mut(u)[v / WORD] &= !(1 << (v % WORD));
        self.row_mut(v)[u / WORD] &= !(1 << (u % WORD));
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> BitIter<'_> {
        BitIter::new(self.row(v))
    }

    /// `|N(u) ∩ N(v)|` by word-wise popcount.
    #[inline]
    pub fn common_count(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        self.neighbors(u).filter(|&w| self.has_edge(v, w)).collect()
    }

    /// Number of neighbors of `v` inside the vertex set `set` (a bitset).
    pub fn degree_into(&self, v: usize, set: &[u64]) -> usize {
        self.row(v)
            .iter()
            .zip(set)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Induced subgraph on `verts`; new vertex `i` is `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn is_clique(&self, verts: &[usize]) -> bool {
        verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    pub fn is_independent(&self, verts: &[usize]) -> bool {
        verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&[])
    }

    /// Components of `G - removed`.
    pub fn components_avoiding(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        for &r in removed {
            seen[r] = true;
        }
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// Bitset over `0..n` with the given members.
    pub fn vertex_set(&self, verts: &[usize]) -> Vec<u64> {
        let mut s = vec![0u64; self.words];
        for &v in verts {
            s[v / WORD] |= 1 << (v % WORD);
        }
        s
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::new(n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }
}

/// Iterator over set bits of a bitset slice.
pub struct BitIter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> BitIter<'a> {
    pub fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            idx: 0,
            cur: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + b);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

/// Multigraph with loops and parallel edges, as a plain edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return invalid(format!("edge {u}-{v} out of range for n={n}"));
        }
        Ok(Multigraph { n, edges })
    }

    pub fn from_graph(g: &Graph) -> Self {
        Multigraph {
            n: g.n(),
            edges: g.edges(),
        }
    }
}

/// Vertex-to-color map; `None` marks an uncolored vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Coloring {
    pub colors: Vec<Option<usize>>,
}

impl Coloring {
    pub fn empty(n: usize) -> Self {
        Coloring { colors: vec![None; n] }
    }

    pub fn from_total(colors: Vec<usize>) -> Self {
        Coloring {
            colors: colors.into_iter().map(Some).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    #[inline]
    pub fn get(&self, v: usize) -> Option<usize> {
        self.colors[v]
    }

    #[inline]
    pub fn set(&mut self, v: usize, c: usize) {
        self.colors[v] = Some(c);
    }

    pub fn is_complete(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// Number of distinct colors in use.
    pub fn num_colors(&self) -> usize {
        self.colors.iter().flatten().collect::<BTreeSet<_>>().len()
    }

    /// One past the largest color index in use.
    pub fn span(&self) -> usize {
        self.colors.iter().flatten().map(|c| c + 1).max().unwrap_or(0)
    }

    /// Colors as a total vector; errors if any vertex is uncolored.
    pub fn total(&self) -> Result<Vec<usize>> {
        self.colors
            .iter()
            .enumerate()
            .map(|(v, c)| c.ok_or_else(|| Error::InvalidArgument(format!("vertex {v} is uncolored"))))
            .collect()
    }

    /// Renumbers colors to `0..k` in order of first appearance.
    pub fn compacted(&self) -> Coloring {
        let mut map = BTreeMap::new();
        let colors = self
            .colors
            .iter()
            .map(|c| {
                c.map(|c| {
                    let next = map.len();
                    *map.entry(c).or_insert(next)
                })
            })
            .collect();
        Coloring { colors }
    }

    /// Smallest color not used on any colored neighbor of `v`.
    pub fn least_free(&self, g: &Graph, v: usize) -> usize {
        let used: BTreeSet<usize> = g.neighbors(v).filter_map(|w| self.colors[w]).collect();
        (0..).find(|c| !used.contains(c)).unwrap()
    }
}

impl Serialize for Coloring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<String, usize> = self
            .colors
            .iter()
            .enumerate()
            .filter_map(|(v, c)| c.map(|c| (v.to_string(), c)))
            .collect();
        map.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let map = BTreeMap::<String, usize>::deserialize(d)?;
        let mut entries = Vec::with_capacity(map.len());
        for (k, c) in map {
            let v: usize = k
                .parse()
                .map_err(|_| D::Error::custom(format!("bad vertex key {k:?}")))?;
            entries.push((v, c));
        }
        let n = entries.iter().map(|&(v, _)| v + 1).max().unwrap_or(0);
        let mut col = Coloring::empty(n);
        for (v, c) in entries {
            col.set(v, c);
        }
        Ok(col)
    }
}

/// Partition of the vertex set into cliques.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCover {
    pub parts: Vec<Vec<usize>>,
}

impl CliqueCover {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn validate(&self, h: &Graph) -> Result<()> {
        let mut seen = vec![false; h.n()];
        for part in &self.parts {
            if part.is_empty() {
                return invalid("empty part in clique cover");
            }
            for &v in part {
                if v >= h.n() {
                    return invalid(format!("vertex {v} out of range"));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return invalid(format!("vertex {v} covered twice"));
                }
            }
            if !h.is_clique(part) {
                return invalid(format!("part {part:?} is not a clique"));
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return invalid(format!("vertex {v} not covered"));
        }
        Ok(())
    }
}

/// A set of pairwise disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut used = vec![false; g.n()];
        for &(u, v) in &self.edges {
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                return invalid(format!("{u}-{v} is not an edge"));
            }
            for x in [u, v] {
                if std::mem::replace(&mut used[x], true) {
                    return invalid(format!("vertex {x} matched twice"));
                }
            }
        }
        Ok(())
    }
}

/// Per-vertex color lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListAssignment {
    pub lists: Vec<Vec<usize>>,
}

impl ListAssignment {
    /// Every vertex gets `0..k`.
    pub fn uniform(n: usize, k: usize) -> Self {
        ListAssignment {
            lists: vec![(0..k).collect(); n],
        }
    }

    /// Sorts and dedups each list.
    pub fn new(mut lists: Vec<Vec<usize>>) -> Self {
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
        }
        ListAssignment { lists }
    }

    pub fn min_size(&self) -> usize {
        self.lists.iter().map(Vec::len).min().unwrap_or(usize::MAX)
    }

    pub fn check_for(&self, g: &Graph, min: usize) -> Result<()> {
        if self.lists.len() != g.n() {
            return invalid(format!("{} lists for {} vertices", self.lists.len(), g.n()));
        }
        if let Some(v) = self.lists.iter().position(|l| l.len() < min.max(1)) {
            return Err(Error::InsufficientPalette {
                palette: self.lists[v].len(),
                required: min.max(1),
            });
        }
        Ok(())
    }

    pub fn allows(&self, v: usize, c: usize) -> bool {
        self.lists[v].binary_search(&c).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_span_multiple_words() {
        let mut g = Graph::new(130);
        g.add_edge(0, 129);
        g.add_edge(64, 65);
        assert!(g.has_edge(129, 0));
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![129]);
        assert_eq!(g.edge_count(), 2);
        g.remove_edge(0, 129);
        assert_eq!(g.degree(129), 0);
    }

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert_eq!(Graph::from_edges(3, &[(0, 1), (1, 0)]).unwrap().edge_count(), 1);
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let g = Graph::complete(5).complement();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.n(), 5);
    }

    #[test]
    fn components_of_two_paths() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert_eq!(g.components_avoiding(&[1]), vec![vec![0], vec![2], vec![3, 4]]);
    }

    #[test]
    fn coloring_json_is_a_vertex_map() {
        let c = Coloring::from_total(vec![2, 0, 1]);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"0":2,"1":0,"2":1}"#);
        let back: Coloring = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn compacted_keeps_classes() {
        let c = Coloring::from_total(vec![7, 3, 7, 9]).compacted();
        assert_eq!(c.total().unwrap(), vec![0, 1, 0, 2]);
    }

    #[test]
    fn cover_validation_catches_faults() {
        let g = Graph::path(3);
        assert!(CliqueCover {
            parts: vec![vec![0, 1], vec![2]]
        }
        .validate(&g)
        .is_ok());
        assert!(CliqueCover {
            parts: vec![vec![0, 2], vec![1]]
        }
        .validate(&g)
        .is_err());
        assert!(CliqueCover {
            parts: vec![vec![0, 1]]
        }
        .validate(&g)
        .is_err());
        assert!(CliqueCover {
            parts: vec![vec![0, 1], vec![1, 2]]
        }
        .validate(&g)
        .is_err());
    }
}
