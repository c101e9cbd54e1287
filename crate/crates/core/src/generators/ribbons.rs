//! Strips for the 2-join side `G2` and the composition operation itself.

use crate::certificates::{gear_adjacency, strange_adjacency, StripData, TwoJoinCert};
use crate::error::{invalid, Result};
use crate::graph::Graph;

/// A strip `(G2, X2, Y2)` with its kind-specific labeling, all on local ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strip {
    pub graph: Graph,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub data: StripData,
}

impl Strip {
    /// Linear interval strip on positions `0..m` in order; `X2` is the first
    /// `nx` positions, `Y2` the last `ny`.
    pub fn canonical_interval(m: usize, intervals: &[[usize; 2]], nx: usize, ny: usize) -> Result<Strip> {
        if intervals.iter().any(|iv| iv[0] > iv[1] || iv[1] >= m) {
            return invalid("interval out of range or reversed");
        }
        if nx == 0 || ny == 0 || nx + ny > m {
            return invalid("X2 and Y2 must be nonempty and disjoint");
        }
        let mut graph = Graph::new(m);
        for iv in intervals {
            for i in iv[0]..=iv[1] {
                for j in i + 1..=iv[1] {
                    graph.add_edge(i, j);
                }
            }
        }
        let x: Vec<usize> = (0..nx).collect();
        let y: Vec<usize> = (m - ny..m).collect();
        if !graph.is_clique(&x) || !graph.is_clique(&y) {
            return invalid("end segments are not cliques");
        }
        if graph.is_clique(&(0..m).collect::<Vec<_>>()) {
            return invalid("strip is a clique");
        }
        Ok(Strip {
            graph,
            x,
            y,
            data: StripData::CanonicalInterval {
                order: (0..m).collect(),
                intervals: intervals.to_vec(),
            },
        })
    }

    fn relabel(&self, shift: usize) -> StripData {
        let s = |v: &usize| v + shift;
        let so = |v: &Option<usize>| v.map(|v| v + shift);
        match &self.data {
            StripData::CanonicalInterval { order, intervals } => StripData::CanonicalInterval {
                order: order.iter().map(s).collect(),
                intervals: intervals.clone(),
            },
            StripData::Antihat { a, b, c } => StripData::Antihat {
                a: a.iter().map(so).collect(),
                b: b.iter().map(so).collect(),
                c: c.iter().map(so).collect(),
            },
            StripData::Strange { a, b, c } => StripData::Strange {
                a: a.map(|v| v + shift),
                b: b.map(|v| v + shift),
                c: c.map(|v| v + shift),
            },
            StripData::Gear { v } => StripData::Gear {
                v: v.map(|x| x.map(|x| x + shift)),
            },
        }
    }
}

/// Disjoint union of `g1` and the strip (shifted by `|V(g1)|`), plus all edges
/// `X1 × X2` and `Y1 × Y2`.
pub fn compose_2join(g1: &Graph, x1: &[usize], y1: &[usize], strip: &Strip) -> Result<(Graph, TwoJoinCert)> {
    let n1 = g1.n();
    if x1.iter().chain(y1).any(|&v| v >= n1) {
        return invalid("X1/Y1 vertex out of range");
    }
    if !g1.is_clique(x1) || !g1.is_clique(y1) {
        return invalid("X1 and Y1 must be cliques of G1");
    }
    if !strip.graph.is_clique(&strip.x)
        || !strip.graph.is_clique(&strip.y)
        || strip.x.iter().any(|v| strip.y.contains(v))
    {
        return invalid("X2 and Y2 must be disjoint cliques of the strip");
    }
    let mut g = g1.disjoint_union(&strip.graph);
    for &u in x1 {
        for &w in &strip.x {
            g.add_edge(u, w + n1);
        }
    }
    for &u in y1 {
        for &w in &strip.y {
            g.add_edge(u, w + n1);
        }
    }
    let cert = TwoJoinCert {
        v1: (0..n1).collect(),
        v2: (n1..n1 + strip.graph.n()).collect(),
        x1: x1.to_vec(),
        y1: y1.to_vec(),
        x2: strip.x.iter().map(|v| v + n1).collect(),
        y2: strip.y.iter().map(|v| v + n1).collect(),
        strip: strip.relabel(n1),
    };
    Ok((g, cert))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntihatRibbon {
    pub strip: Strip,
    /// An induced `W5`, center first then the rim in cyclic order, if one exists.
    pub w5: Option<Vec<usize>>,
}

/// Antihat on cliques `A, B, C` of size `k` (before removal `a_i = i`,
/// `b_i = k + i`, `c_i = 2k + i`) minus `removed`; survivors keep their
/// relative order.
pub fn antihat_ribbon(k: usize, removed: &[usize]) -> Result<AntihatRibbon> {
    if k < 3 {
        return invalid("antihat needs k >= 3");
    }
    if removed.iter().any(|&v| v >= 3 * k) {
        return invalid("removed vertex out of range");
    }
    if (2 * k..3 * k).filter(|v| !removed.contains(v)).count() < 2 {
        return invalid("at least two vertices of C must survive");
    }
    let mut full = Graph::new(3 * k);
    for i in 0..k {
        for j in 0..k {
            for cl in 0..3 {
                if i < j {
                    full.add_edge(cl * k + i, cl * k + j);
                }
            }
            if i == j {
                full.add_edge(i, k + j);
            } else {
                full.add_edge(i, 2 * k + j);
                full.add_edge(k + i, 2 * k + j);
            }
        }
    }
    let keep: Vec<usize> = (0..3 * k).filter(|v| !removed.contains(v)).collect();
    let local = |v: usize| keep.iter().position(|&u| u == v);
    let role = |cl: usize| -> Vec<Option<usize>> { (0..k).map(|i| local(cl * k + i)).collect() };
    let (a, b, c) = (role(0), role(1), role(2));
    let graph = full.induced(&keep);
    let w5 = find_w5(&graph);
    let strip = Strip {
        x: a.iter().flatten().copied().collect(),
        y: b.iter().flatten().copied().collect(),
        graph,
        data: StripData::Antihat { a, b, c },
    };
    Ok(AntihatRibbon { strip, w5 })
}

/// First induced five-wheel: hub, then a rim cycle.
pub fn find_w5(g: &Graph) -> Option<Vec<usize>> {
    for hub in 0..g.n() {
        let nb: Vec<usize> = g.neighbors(hub).collect();
        let mut pick = Vec::with_capacity(5);
        if let Some(rim) = induced_c5(g, &nb, 0, &mut pick) {
            return Some(std::iter::once(hub).chain(rim).collect());
        }
    }
    None
}

fn induced_c5(g: &Graph, pool: &[usize], from: usize, pick: &mut Vec<usize>) -> Option<Vec<usize>> {
    if pick.len() == 5 {
        let h = g.induced(pick);
        if h.edge_count() != 5 || (0..5).any(|v| h.degree(v) != 2) {
            return None;
        }
        let mut cyc = vec![0];
        while cyc.len() < 5 {
            let last = *cyc.last().unwrap();
            let next = h.neighbors(last).find(|w| !cyc.contains(w)).unwrap();
            cyc.push(next);
        }
        return Some(cyc.into_iter().map(|i| pick[i]).collect());
    }
    for i in from..pool.len() {
        pick.push(pool[i]);
        if let Some(r) = induced_c5(g, pool, i + 1, pick) {
            return Some(r);
        }
        pick.pop();
    }
    None
}

/// Strange ribbon; ids `a1, a2, b1, b2, b3, c1, c2` = `0..7`, `X2 = A`, `Y2 = B`.
pub fn strange_ribbon() -> Strip {
    Strip {
        graph: strange_adjacency(),
        x: vec![0, 1],
        y: vec![2, 3, 4],
        data: StripData::Strange {
            a: [0, 1],
            b: [2, 3, 4],
            c: [5, 6],
        },
    }
}

/// Gear ribbon `v1..v10` = `0..10` minus `removed ⊆ {8, 9}`; `X2 = {v1, v2}`,
/// `Y2 = {v4, v5}`.
pub fn gear_ribbon(removed: &[usize]) -> Result<Strip> {
    if removed.iter().any(|&v| v != 8 && v != 9) {
        return invalid("gear ribbon may only drop v9 and v10");
    }
    let keep: Vec<usize> = (0..10).filter(|v| !removed.contains(v)).collect();
    let mut roles = [None; 10];
    for (i, &v) in keep.iter().enumerate() {
        roles[v] = Some(i);
    }
    Ok(Strip {
        graph: gear_adjacency().induced(&keep),
        x: vec![0, 1],
        y: vec![3, 4],
        data: StripData::Gear { v: roles },
    })
}
