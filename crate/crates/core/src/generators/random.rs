//! Seeded random instances. Every function is a pure function of its seed
//! (or of the state of the generator passed in).

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::certificates::{CircularIntervalRep, StripKind, TwoJoinCert};
use crate::colorers::circular::color_circular_interval;
use crate::error::{invalid, Error, Result};
use crate::generators::line::line_graph;
use crate::generators::ribbons::{antihat_ribbon, compose_2join, gear_ribbon, strange_ribbon, Strip};
use crate::generators::thicken::{random_matching, random_removal, thicken, ThickeningSpec};
use crate::graph::{Coloring, Graph, ListAssignment, Multigraph};
use crate::params::delta2_or_zero;
use crate::recognition::find_claw;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random arcs on a shuffled circle; the returned graph is `rep.to_graph()`.
pub fn random_circular_interval(
    n: usize,
    arc_count: usize,
    max_arc_len: usize,
    seed: u64,
) -> (Graph, CircularIntervalRep) {
    let mut rng = rng_from_seed(seed);
    circular_with(n, arc_count, max_arc_len, &mut rng)
}

fn circular_with<R: Rng>(n: usize, arc_count: usize, max_arc_len: usize, rng: &mut R) -> (Graph, CircularIntervalRep) {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let max_len = max_arc_len.clamp(1, n.max(1));
    let arcs = if n == 0 {
        vec![]
    } else {
        (0..arc_count)
            .map(|_| {
                let lo = rng.gen_range(0..n);
                let len = rng.gen_range(1..=max_len);
                [lo, (lo + len - 1) % n]
            })
            .collect()
    };
    let rep = CircularIntervalRep { order, arcs };
    (rep.to_graph(), rep)
}

/// `G(n, p)`, then for every triple `i < j < k` in lexicographic order that
/// still spans a triangle, delete its highest edge `jk`.
pub fn random_triangle_free(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return invalid(format!("edge probability {p} outside [0, 1]"));
    }
    let mut rng = rng_from_seed(seed);
    Ok(triangle_free_with(n, p, &mut rng))
}

fn triangle_free_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = gnp(n, p, rng);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if g.has_edge(i, j) && g.has_edge(i, k) && g.has_edge(j, k) {
                    g.remove_edge(j, k);
                }
            }
        }
    }
    g
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    LineOfRandom,
    CircularInterval,
    ThickenedRibbon,
    ComplementTrianglefree,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::LineOfRandom,
        Family::CircularInterval,
        Family::ThickenedRibbon,
        Family::ComplementTrianglefree,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::LineOfRandom => "line-of-random",
            Family::CircularInterval => "circular-interval",
            Family::ThickenedRibbon => "thickened-ribbon",
            Family::ComplementTrianglefree => "complement-trianglefree",
        }
    }

    /// Smallest `n` the family can produce.
    pub fn min_n(self) -> usize {
        match self {
            Family::ThickenedRibbon => 9,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family {s:?}")))
    }
}

/// How an instance was built; doubles as the certificate its colorers need.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Provenance {
    LineOfRandom {
        root: Multigraph,
    },
    CircularInterval {
        rep: CircularIntervalRep,
    },
    ComplementTrianglefree {
        p: f64,
    },
    ThickenedRibbon {
        ribbon: StripKind,
        two_join: Box<TwoJoinCert>,
        thickening: Box<ThickeningSpec>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClawFreeInstance {
    pub graph: Graph,
    pub provenance: Provenance,
}

pub fn random_claw_free(n: usize, family: Family, seed: u64) -> Result<ClawFreeInstance> {
    let mut rng = rng_from_seed(seed);
    claw_free_with(n, family, &mut rng)
}

pub fn claw_free_with<R: Rng>(n: usize, family: Family, rng: &mut R) -> Result<ClawFreeInstance> {
    if n < family.min_n() {
        return invalid(format!("family {family} needs n >= {}", family.min_n()));
    }
    let inst = match family {
        Family::LineOfRandom => {
            let r = rng.gen_range(2..=n.max(2));
            let edges = (0..n)
                .map(|_| {
                    let u = rng.gen_range(0..r);
                    let v = if rng.gen_bool(0.05) { u } else { rng.gen_range(0..r) };
                    (u.min(v), u.max(v))
                })
                .collect();
            let root = Multigraph::new(r, edges)?;
            ClawFreeInstance {
                graph: line_graph(&root).graph,
                provenance: Provenance::LineOfRandom { root },
            }
        }
        Family::CircularInterval => {
            let arcs = rng.gen_range(1..=n);
            let len = rng.gen_range(1..=n);
            let (graph, rep) = circular_with(n, arcs, len, rng);
            ClawFreeInstance {
                graph,
                provenance: Provenance::CircularInterval { rep },
            }
        }
        Family::ComplementTrianglefree => {
            let p = rng.gen_range(10..=90) as f64 / 100.0;
            let graph = triangle_free_with(n, p, rng).complement();
            ClawFreeInstance {
                graph,
                provenance: Provenance::ComplementTrianglefree { p },
            }
        }
        Family::ThickenedRibbon => thickened_ribbon(n, rng)?,
    };
    if let Some(w) = find_claw(&inst.graph) {
        return Err(Error::Internal(format!(
            "{family} generator produced a claw {:?}",
            w.vertices
        )));
    }
    Ok(inst)
}

/// Antihat ribbon with `k` in `4..=5` and a random removal set that keeps at
/// least two of `C` and an induced `W5`.
fn random_antihat<R: Rng>(max_n: usize, rng: &mut R) -> Option<Strip> {
    for _ in 0..200 {
        let k = rng.gen_range(4..=5);
        let removed: Vec<usize> = (0..3 * k).filter(|_| rng.gen_bool(0.25)).collect();
        if 3 * k - removed.len() > max_n {
            continue;
        }
        if let Ok(r) = antihat_ribbon(k, &removed) {
            if r.w5.is_some() {
                return Some(r.strip);
            }
        }
    }
    None
}

fn random_gear<R: Rng>(rng: &mut R) -> Strip {
    let removed: Vec<usize> = [8, 9].into_iter().filter(|_| rng.gen_bool(0.5)).collect();
    gear_ribbon(&removed).expect("v9/v10 removals are always valid")
}

fn random_ribbon<R: Rng>(kind: StripKind, max_n: usize, rng: &mut R) -> Option<Strip> {
    match kind {
        StripKind::Antihat => random_antihat(max_n, rng),
        StripKind::Strange => (max_n >= 7).then(strange_ribbon),
        StripKind::Gear => (max_n >= 8).then(|| random_gear(rng)).filter(|s| s.graph.n() <= max_n),
        StripKind::CanonicalInterval => Some(random_canonical_strip(rng.gen_range(2..=max_n.clamp(2, 8)), rng)),
    }
}

/// Linear interval strip on `m >= 2` positions with end cliques of random
/// sizes and a handful of random intervals; never a clique.
pub fn random_canonical_strip<R: Rng>(m: usize, rng: &mut R) -> Strip {
    assert!(m >= 2, "a canonical strip needs two positions");
    loop {
        let nx = rng.gen_range(1..=(m - 1).min(3));
        let ny = rng.gen_range(1..=(m - nx).min(3));
        let mut ivs = vec![[0, nx - 1], [m - ny, m - 1]];
        for _ in 0..rng.gen_range(0..=m) {
            let lo = rng.gen_range(0..m);
            let hi = (lo + rng.gen_range(0..3)).min(m - 1);
            ivs.push([lo, hi]);
        }
        if let Ok(s) = Strip::canonical_interval(m, &ivs, nx, ny) {
            return s;
        }
    }
}

/// Random clique of `g` of size at most `max`, grown from a random vertex.
fn random_clique<R: Rng>(g: &Graph, max: usize, rng: &mut R) -> Vec<usize> {
    let mut verts: Vec<usize> = (0..g.n()).collect();
    verts.shuffle(rng);
    let mut k = vec![verts[0]];
    for &v in &verts[1..] {
        if k.len() >= max {
            break;
        }
        if k.iter().all(|&u| g.has_edge(u, v)) {
            k.push(v);
        }
    }
    k.sort_unstable();
    k
}

fn thickened_ribbon<R: Rng>(n: usize, rng: &mut R) -> Result<ClawFreeInstance> {
    for _ in 0..100 {
        let kind = *[StripKind::Antihat, StripKind::Strange, StripKind::Gear]
            .choose(rng)
            .unwrap();
        let Some(strip) = random_ribbon(kind, n - 1, rng) else {
            continue;
        };
        let h = rng.gen_range(1..=(n - strip.graph.n()).min(4));
        let host = Graph::complete(h);
        let (x1, y1) = if h == 1 {
            (vec![0], vec![])
        } else {
            let cut = rng.gen_range(1..h);
            ((0..cut).collect(), (cut..h).collect())
        };
        let (base, cert) = compose_2join(&host, &x1, &y1, &strip)?;
        if find_claw(&base).is_some() {
            continue;
        }
        let mut sizes = vec![1; base.n()];
        for _ in base.n()..n {
            sizes[rng.gen_range(0..base.n())] += 1;
        }
        let matching = random_matching(&base, &sizes, rng);
        let removals: Vec<Vec<(usize, usize)>> = matching
            .iter()
            .map(|&(u, v)| random_removal(sizes[u], sizes[v], rng).expect("matched edges admit a removal"))
            .collect();
        let mut spec = ThickeningSpec {
            base,
            matching,
            sizes,
            removals,
        };
        let mut graph = thicken(&spec)?.graph;
        if find_claw(&graph).is_some() {
            // Plain clique substitution always keeps a claw-free base claw-free.
            spec.matching.clear();
            spec.removals.clear();
            graph = thicken(&spec)?.graph;
        }
        return Ok(ClawFreeInstance {
            graph,
            provenance: Provenance::ThickenedRibbon {
                ribbon: kind,
                two_join: Box::new(cert),
                thickening: Box::new(spec),
            },
        });
    }
    Err(Error::Internal(
        "no claw-free ribbon composite found in 100 draws".into(),
    ))
}

/// A composed 2-join instance for exercising the extenders.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoJoinInstance {
    pub graph: Graph,
    pub cert: TwoJoinCert,
    /// Proper on `V1`, uncolored on `V2`, inside `0..palette`.
    pub coloring1: Coloring,
    pub palette: usize,
}

/// Host `G1` is a random circular interval graph on `3..=max_host` vertices,
/// colored by the circular greedy with `Δ₂(G1) + 3` uniform lists; the strip
/// is a random ribbon of the requested kind.
pub fn random_two_join<R: Rng>(kind: StripKind, max_host: usize, rng: &mut R) -> Result<TwoJoinInstance> {
    let n1 = rng.gen_range(3..=max_host.max(3));
    let arcs = rng.gen_range(1..=n1);
    let len = rng.gen_range(1..=n1);
    let (g1, rep) = circular_with(n1, arcs, len, rng);
    let c1 = color_circular_interval(&g1, &rep, &ListAssignment::uniform(n1, delta2_or_zero(&g1) + 3))?;
    let x1 = random_clique(&g1, 3, rng);
    let y1 = random_clique(&g1, 3, rng);
    let strip = random_ribbon(kind, 15, rng).ok_or_else(|| Error::Internal(format!("no {kind:?} ribbon drawn")))?;
    let (graph, cert) = compose_2join(&g1, &x1, &y1, &strip)?;
    let palette = delta2_or_zero(&graph) + 3;
    let mut coloring1 = Coloring::empty(graph.n());
    for v in 0..n1 {
        coloring1.set(v, c1.get(v).unwrap());
    }
    Ok(TwoJoinInstance {
        graph,
        cert,
        coloring1,
        palette,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::is_triangle_free;

    #[test]
    fn circular_extremes() {
        let (g, rep) = random_circular_interval(7, 1, 7, 5);
        assert_eq!(rep.arcs.len(), 1);
        rep.validate(&g).unwrap();
        let full = CircularIntervalRep {
            order: (0..6).collect(),
            arcs: vec![[2, 1]],
        };
        assert_eq!(full.to_graph(), Graph::complete(6));
        let single = CircularIntervalRep {
            order: (0..6).collect(),
            arcs: vec![[3, 3]],
        };
        assert_eq!(single.to_graph().edge_count(), 0);
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(
            random_circular_interval(30, 12, 6, 9),
            random_circular_interval(30, 12, 6, 9)
        );
        assert_eq!(
            random_triangle_free(25, 0.4, 3).unwrap(),
            random_triangle_free(25, 0.4, 3).unwrap()
        );
        for f in Family::ALL {
            assert_eq!(
                random_claw_free(14, f, 77).unwrap(),
                random_claw_free(14, f, 77).unwrap()
            );
        }
    }

    #[test]
    fn triangle_free_output() {
        for seed in 0..20 {
            assert!(is_triangle_free(&random_triangle_free(20, 0.5, seed).unwrap()));
        }
        assert_eq!(random_triangle_free(10, 0.0, 1).unwrap().edge_count(), 0);
        assert!(random_triangle_free(4, 1.5, 1).is_err());
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn thickened_ribbon_sizes() {
        for seed in 0..10 {
            let inst = random_claw_free(16, Family::ThickenedRibbon, seed).unwrap();
            assert_eq!(inst.graph.n(), 16);
        }
        assert!(random_claw_free(8, Family::ThickenedRibbon, 0).is_err());
    }

    #[test]
    fn two_join_instances_validate() {
        let mut rng = rng_from_seed(4);
        for kind in [
            StripKind::CanonicalInterval,
            StripKind::Antihat,
            StripKind::Strange,
            StripKind::Gear,
        ] {
            let inst = random_two_join(kind, 8, &mut rng).unwrap();
            inst.cert.validate(&inst.graph).unwrap();
            assert_eq!(inst.cert.kind(), kind);
        }
    }
}
