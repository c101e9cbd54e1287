//! Structural certificates consumed by the colorers. Every certificate is
//! validated against its host graph before use.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{bad_cert, Result};
use crate::graph::Graph;

/// Cyclic vertex order plus arcs on positions `0..n`.
///
/// Arc `[lo, hi]` covers positions `lo, lo+1, ..., hi` going rightwards,
/// wrapping past `n-1`. Sub-arcs and singletons are implied, so adjacency is
/// "some arc holds both positions".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircularIntervalRep {
    pub order: Vec<usize>,
    pub arcs: Vec<[usize; 2]>,
}

impl CircularIntervalRep {
    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn arc_len(&self, arc: [usize; 2]) -> usize {
        let n = self.n();
        (arc[1] + n - arc[0]) % n + 1
    }

    /// Positions covered by an arc, left to right.
    pub fn arc_positions(&self, arc: [usize; 2]) -> impl Iterator<Item = usize> + '_ {
        let n = self.n();
        (0..self.arc_len(arc)).map(move |t| (arc[0] + t) % n)
    }

    /// Length of the longest arc; 1 for a nonempty order with no explicit arcs.
    pub fn longest(&self) -> usize {
        if self.n() == 0 {
            return 0;
        }
        self.arcs.iter().map(|&a| self.arc_len(a)).max().unwrap_or(1).max(1)
    }

    /// For each position `p`, the size of the longest interval whose
    /// rightmost position is `p` (i.e. `|I^L|` of the vertex at `p`).
    pub fn left_lengths(&self) -> Vec<usize> {
        let mut left = vec![1; self.n()];
        for &arc in &self.arcs {
            for (t, p) in self.arc_positions(arc).enumerate() {
                left[p] = left[p].max(t + 1);
            }
        }
        left
    }

    /// The graph on vertex ids that this representation defines.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.n());
        for &arc in &self.arcs {
            let verts: Vec<usize> = self.arc_positions(arc).map(|p| self.order[p]).collect();
            for (i, &u) in verts.iter().enumerate() {
                for &v in &verts[i + 1..] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        check_permutation(&self.order, g.n(), "circular order")?;
        if let Some(a) = self.arcs.iter().find(|a| a[0] >= g.n() || a[1] >= g.n()) {
            return bad_cert(format!("arc {a:?} out of range for {} positions", g.n()));
        }
        if &self.to_graph() != g {
            return bad_cert("arcs do not reproduce the graph's adjacency");
        }
        Ok(())
    }
}

fn check_permutation(order: &[usize], n: usize, what: &str) -> Result<()> {
    if order.len() != n {
        return bad_cert(format!("{what} has {} entries for {n} vertices", order.len()));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return bad_cert(format!("{what} is not a permutation (entry {v})"));
        }
    }
    Ok(())
}

/// Clique cover `(K1, K2, K3)` of the host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeCliquedCert {
    pub k1: Vec<usize>,
    pub k2: Vec<usize>,
    pub k3: Vec<usize>,
}

impl ThreeCliquedCert {
    pub fn parts(&self) -> [&[usize]; 3] {
        [&self.k1, &self.k2, &self.k3]
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let all: Vec<usize> = self.parts().iter().flat_map(|p| p.iter().copied()).collect();
        let mut sorted = all.clone();
        sorted.sort_unstable();
        check_permutation(&sorted, g.n(), "three-cliqued parts")?;
        for (i, p) in self.parts().iter().enumerate() {
            if !g.is_clique(p) {
                return bad_cert(format!("part K{} is not a clique", i + 1));
            }
        }
        Ok(())
    }

    /// The index of each vertex's part.
    pub fn part_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for (i, p) in self.parts().iter().enumerate() {
            for &v in *p {
                out[v] = i;
            }
        }
        out
    }
}

/// Kind-specific labeling of the `G2` side of a 2-join.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "kebab-case")]
pub enum StripData {
    /// Linear interval representation of `G2`: `order` lists its vertices
    /// left to right, intervals are inclusive position ranges.
    CanonicalInterval {
        order: Vec<usize>,
        intervals: Vec<[usize; 2]>,
    },
    /// Index roles `a_i, b_i, c_i`; `None` for removed vertices.
    Antihat {
        a: Vec<Option<usize>>,
        b: Vec<Option<usize>>,
        c: Vec<Option<usize>>,
    },
    Strange {
        a: [usize; 2],
        b: [usize; 3],
        c: [usize; 2],
    },
    /// Roles `v1..v10`; only `v9`, `v10` may be absent.
    Gear { v: [Option<usize>; 10] },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StripKind {
    CanonicalInterval,
    Antihat,
    Strange,
    Gear,
}

impl StripData {
    pub fn kind(&self) -> StripKind {
        match self {
            StripData::CanonicalInterval { .. } => StripKind::CanonicalInterval,
            StripData::Antihat { .. } => StripKind::Antihat,
            StripData::Strange { .. } => StripKind::Strange,
            StripData::Gear { .. } => StripKind::Gear,
        }
    }
}

/// Generalized 2-join `((X1, Y1), (X2, Y2))` between `G[V1]` and `G[V2]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoJoinCert {
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    pub x1: Vec<usize>,
    pub y1: Vec<usize>,
    pub x2: Vec<usize>,
    pub y2: Vec<usize>,
    #[serde(flatten)]
    pub strip: StripData,
}

fn set_of(v: &[usize]) -> BTreeSet<usize> {
    v.iter().copied().collect()
}

impl TwoJoinCert {
    pub fn kind(&self) -> StripKind {
        self.strip.kind()
    }

    /// Checks the partition, the join structure, and the strip labeling.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let mut all: Vec<usize> = self.v1.iter().chain(&self.v2).copied().collect();
        all.sort_unstable();
        check_permutation(&all, n, "V1 ∪ V2")?;
        let (s1, s2) = (set_of(&self.v1), set_of(&self.v2));
        for (name, sub, side) in [
            ("X1", &self.x1, &s1),
            ("Y1", &self.y1, &s1),
            ("X2", &self.x2, &s2),
            ("Y2", &self.y2, &s2),
        ] {
            if !sub.iter().all(|v| side.contains(v)) {
                return bad_cert(format!("{name} is not inside its side"));
            }
            if set_of(sub).len() != sub.len() {
                return bad_cert(format!("{name} repeats a vertex"));
            }
        }
        let x: Vec<usize> = self.x1.iter().chain(&self.x2).copied().collect();
        let y: Vec<usize> = self.y1.iter().chain(&self.y2).copied().collect();
        if !g.is_clique(&x) {
            return bad_cert("X1 ∪ X2 is not a clique");
        }
        if !g.is_clique(&y) {
            return bad_cert("Y1 ∪ Y2 is not a clique");
        }
        let (x1, y1, x2, y2) = (set_of(&self.x1), set_of(&self.y1), set_of(&self.x2), set_of(&self.y2));
        for &u in &self.v1 {
            for &w in &self.v2 {
                let expect = (x1.contains(&u) && x2.contains(&w)) || (y1.contains(&u) && y2.contains(&w));
                if g.has_edge(u, w) != expect {
                    return bad_cert(format!("cross pair {u}-{w} breaks the 2-join"));
                }
            }
        }
        self.validate_strip(g)
    }

    fn validate_strip(&self, g: &Graph) -> Result<()> {
        let (labels, expected, x2, y2) = match &self.strip {
            StripData::CanonicalInterval { order, intervals } => {
                let m = order.len();
                if intervals.iter().any(|iv| iv[0] > iv[1] || iv[1] >= m) {
                    return bad_cert("interval out of range or reversed");
                }
                let mut h = Graph::new(m);
                for iv in intervals {
                    for i in iv[0]..=iv[1] {
                        for j in i + 1..=iv[1] {
                            h.add_edge(i, j);
                        }
                    }
                }
                let (nx, ny) = (self.x2.len(), self.y2.len());
                if nx == 0 || ny == 0 || nx + ny > m {
                    return bad_cert("X2 and Y2 must be nonempty and disjoint");
                }
                if h.edge_count() == m * (m - 1) / 2 {
                    return bad_cert("a canonical interval strip is not a clique");
                }
                let x2 = order[..nx].to_vec();
                let y2 = order[m - ny..].to_vec();
                (order.clone(), h, x2, y2)
            }
            StripData::Antihat { a, b, c } => {
                let k = a.len();
                if k < 3 || b.len() != k || c.len() != k {
                    return bad_cert("antihat roles need k >= 3 entries per clique");
                }
                if c.iter().flatten().count() < 2 {
                    return bad_cert("antihat ribbon keeps fewer than two of C");
                }
                let mut roles = Vec::new();
                for (cl, list) in [a, b, c].into_iter().enumerate() {
                    for (i, v) in list.iter().enumerate() {
                        if let Some(v) = v {
                            roles.push((cl, i, *v));
                        }
                    }
                }
                let mut h = Graph::new(roles.len());
                for (p, &(cp, ip, _)) in roles.iter().enumerate() {
                    for (q, &(cq, iq, _)) in roles.iter().enumerate().skip(p + 1) {
                        let adj = match (cp, cq) {
                            _ if cp == cq => true,
                            (0, 1) => ip == iq,
                            (0, 2) | (1, 2) => ip != iq,
                            _ => unreachable!("roles are pushed in clique order"),
                        };
                        if adj {
                            h.add_edge(p, q);
                        }
                    }
                }
                let labels = roles.iter().map(|r| r.2).collect();
                (
                    labels,
                    h,
                    a.iter().flatten().copied().collect(),
                    b.iter().flatten().copied().collect(),
                )
            }
            StripData::Strange { a, b, c } => {
                let labels = vec![a[0], a[1], b[0], b[1], b[2], c[0], c[1]];
                (labels, strange_adjacency(), a.to_vec(), b.to_vec())
            }
            StripData::Gear { v } => {
                if v[..8].iter().any(Option::is_none) {
                    return bad_cert("gear roles v1..v8 are mandatory");
                }
                let keep: Vec<usize> = (0..10).filter(|&i| v[i].is_some()).collect();
                let h = gear_adjacency().induced(&keep);
                let labels = keep.iter().map(|&i| v[i].unwrap()).collect();
                (
                    labels,
                    h,
                    vec![v[0].unwrap(), v[1].unwrap()],
                    vec![v[3].unwrap(), v[4].unwrap()],
                )
            }
        };
        if set_of(&labels) != set_of(&self.v2) || labels.len() != self.v2.len() {
            return bad_cert("strip labels do not cover V2 exactly once");
        }
        if g.induced(&labels) != expected {
            return bad_cert(format!("G2 adjacency does not match the {:?} definition", self.kind()));
        }
        if set_of(&x2) != set_of(&self.x2) || set_of(&y2) != set_of(&self.y2) {
            return bad_cert("X2/Y2 do not match the strip's distinguished cliques");
        }
        Ok(())
    }
}

/// Strange ribbon on `a1, a2, b1, b2, b3, c1, c2` (indices 0..7).
pub(crate) fn strange_adjacency() -> Graph {
    let e = [
        (0, 1),
        (2, 3),
        (2, 4),
        (3, 4),
        (5, 6),
        (0, 2),
        (5, 1),
        (5, 3),
        (5, 4),
        (6, 0),
        (6, 1),
        (6, 2),
        (6, 3),
    ];
    Graph::from_edges(7, &e).unwrap()
}

/// Gear ribbon on `v1..v10` (indices 0..10).
pub(crate) fn gear_adjacency() -> Graph {
    let mut e: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    let extra: [(usize, &[usize]); 4] = [
        (7, &[1, 2, 3, 6]),
        (8, &[3, 4, 5, 6, 7]),
        (9, &[1, 3, 4, 6, 7, 8]),
        (10, &[2, 3, 5, 6, 7, 8]),
    ];
    for (v, nb) in extra {
        for &u in nb {
            e.push((v - 1, u - 1));
        }
    }
    Graph::from_edges(10, &e).unwrap()
}
