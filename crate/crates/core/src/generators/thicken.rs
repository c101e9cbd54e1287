//! Thickening: blow each vertex up into a clique, join cliques along edges,
//! then thin the joins of matched edges.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::graph::Graph;

/// Recipe for a thickening of `base`. `removals[k]` lists pairs `(i, j)`
/// meaning "delete the edge between the `i`th vertex of `I(u)` and the `j`th
/// of `I(v)`", where `matching[k] = (u, v)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThickeningSpec {
    pub base: Graph,
    pub matching: Vec<(usize, usize)>,
    pub sizes: Vec<usize>,
    pub removals: Vec<Vec<(usize, usize)>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thickening {
    pub graph: Graph,
    /// `cliques[v]` = the vertices of `I(v)`, consecutive ids.
    pub cliques: Vec<Vec<usize>>,
}

impl ThickeningSpec {
    pub fn validate(&self) -> Result<()> {
        let n = self.base.n();
        if self.sizes.len() != n || self.sizes.contains(&0) {
            return invalid("every base vertex needs a positive clique size");
        }
        if self.removals.len() != self.matching.len() {
            return invalid("one removal set per matched edge");
        }
        let mut used = vec![false; n];
        for (k, &(u, v)) in self.matching.iter().enumerate() {
            if u >= n || v >= n || !self.base.has_edge(u, v) {
                return invalid(format!("matched pair {u}-{v} is not a base edge"));
            }
            if std::mem::replace(&mut used[u], true) || std::mem::replace(&mut used[v], true) {
                return invalid("matched edges share a vertex");
            }
            let rem = &self.removals[k];
            let full = self.sizes[u] * self.sizes[v];
            let mut uniq = rem.clone();
            uniq.sort_unstable();
            uniq.dedup();
            if uniq.len() != rem.len() || rem.iter().any(|&(i, j)| i >= self.sizes[u] || j >= self.sizes[v]) {
                return invalid(format!("removal set of {u}-{v} has repeats or out-of-range pairs"));
            }
            if rem.is_empty() || rem.len() == full {
                return invalid(format!("removal set of {u}-{v} must be nonempty and proper"));
            }
        }
        Ok(())
    }
}

pub fn thicken(spec: &ThickeningSpec) -> Result<Thickening> {
    spec.validate()?;
    let mut cliques = Vec::with_capacity(spec.sizes.len());
    let mut next = 0;
    for &s in &spec.sizes {
        cliques.push((next..next + s).collect::<Vec<_>>());
        next += s;
    }
    let mut g = Graph::new(next);
    for c in &cliques {
        for (i, &a) in c.iter().enumerate() {
            for &b in &c[i + 1..] {
                g.add_edge(a, b);
            }
        }
    }
    for (u, v) in spec.base.edges() {
        for &a in &cliques[u] {
            for &b in &cliques[v] {
                g.add_edge(a, b);
            }
        }
    }
    for (&(u, v), rem) in spec.matching.iter().zip(&spec.removals) {
        for &(i, j) in rem {
            g.remove_edge(cliques[u][i], cliques[v][j]);
        }
    }
    Ok(Thickening { graph: g, cliques })
}

/// Uniform nonempty proper subset of `I(u) × I(v)`, or `None` when both are
/// singletons (the only proper subset is empty).
pub fn random_removal<R: Rng>(su: usize, sv: usize, rng: &mut R) -> Option<Vec<(usize, usize)>> {
    let full = su * sv;
    if full < 2 {
        return None;
    }
    // Rejection from a fair subset draw keeps the result uniform.
    let pairs: Vec<(usize, usize)> = (0..su).flat_map(|i| (0..sv).map(move |j| (i, j))).collect();
    loop {
        let pick: Vec<(usize, usize)> = pairs.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        if !pick.is_empty() && pick.len() < full {
            return Some(pick);
        }
    }
}

/// Random matching among base edges that have a nonempty proper removal
/// (clique sizes with product at least 2).
pub fn random_matching<R: Rng>(base: &Graph, sizes: &[usize], rng: &mut R) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = base
        .edges()
        .into_iter()
        .filter(|&(u, v)| sizes[u] * sizes[v] >= 2)
        .collect();
    edges.shuffle(rng);
    let mut used = vec![false; base.n()];
    let mut m = Vec::new();
    for (u, v) in edges {
        if !used[u] && !used[v] && rng.gen_bool(0.5) {
            used[u] = true;
            used[v] = true;
            m.push((u, v));
        }
    }
    m.sort_unstable();
    m
}
