//! Exact graph parameters: codegree family, clique and independence numbers,
//! properness checks.

use crate::error::{invalid, Error, Result};
use crate::graph::{CliqueCover, Coloring, Graph};

pub fn complement(g: &Graph) -> Graph {
    g.complement()
}

fn distinct(g: &Graph, u: usize, v: usize) -> Result<()> {
    if u >= g.n() || v >= g.n() {
        return invalid(format!("vertex out of range: {u}, {v}"));
    }
    if u == v {
        return invalid(format!("codegree needs two distinct vertices, got {u} twice"));
    }
    Ok(())
}

pub fn codegree(g: &Graph, u: usize, v: usize) -> Result<usize> {
    distinct(g, u, v)?;
    Ok(g.common_count(u, v))
}

/// Maximum codegree over all unordered pairs.
pub fn delta2(g: &Graph) -> Result<usize> {
    if g.n() < 2 {
        return invalid("maximum codegree needs at least two vertices");
    }
    let mut best = 0;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            best = best.max(g.common_count(u, v));
        }
    }
    Ok(best)
}

/// `delta2` with the convention 0 for graphs on fewer than two vertices.
pub fn delta2_or_zero(g: &Graph) -> usize {
    delta2(g).unwrap_or(0)
}

/// Maximum codegree over adjacent pairs; 0 without edges.
pub fn delta_e(g: &Graph) -> usize {
    g.edges()
        .into_iter()
        .map(|(u, v)| g.common_count(u, v))
        .max()
        .unwrap_or(0)
}

/// Vertices outside `{u, v}` adjacent to neither: `n - |N(u) ∪ N(v) ∪ {u, v}|`.
pub fn anticodegree(g: &Graph, u: usize, v: usize) -> Result<usize> {
    distinct(g, u, v)?;
    Ok(anticodeg_unchecked(g, u, v))
}

fn anticodeg_unchecked(g: &Graph, u: usize, v: usize) -> usize {
    let union: usize = g
        .row(u)
        .iter()
        .zip(g.row(v))
        .map(|(a, b)| (a | b).count_ones() as usize)
        .sum();
    let mut covered = union;
    // u and v themselves, unless already counted as each other's neighbor.
    if !g.has_edge(u, v) {
        covered += 2;
    }
    g.n() - covered
}

pub fn max_anticodegree(g: &Graph) -> Result<usize> {
    if g.n() < 2 {
        return invalid("maximum anticodegree needs at least two vertices");
    }
    let mut best = 0;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            best = best.max(anticodeg_unchecked(g, u, v));
        }
    }
    Ok(best)
}

/// Maximum anticodegree over non-adjacent pairs, i.e. `delta_e` of the
/// complement. 0 when every pair is adjacent.
pub fn max_nonadjacent_anticodegree(g: &Graph) -> usize {
    let mut best = 0;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) {
                best = best.max(anticodeg_unchecked(g, u, v));
            }
        }
    }
    best
}

/// A maximum clique, found by branch and bound with a greedy-coloring bound.
pub fn maximum_clique(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    let mut current = Vec::new();
    let cand: Vec<usize> = (0..g.n()).collect();
    expand(g, &mut current, cand, &mut best);
    best.sort_unstable();
    best
}

fn expand(g: &Graph, current: &mut Vec<usize>, cand: Vec<usize>, best: &mut Vec<usize>) {
    if cand.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    let (order, bounds) = color_sort(g, &cand);
    for idx in (0..order.len()).rev() {
        if current.len() + bounds[idx] <= best.len() {
            return;
        }
        let v = order[idx];
        let next: Vec<usize> = order[..idx].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        current.push(v);
        expand(g, current, next, best);
        current.pop();
    }
}

/// Greedy sequential coloring of `cand`; returns the vertices ordered by
/// color class and, per position, the number of classes up to it.
fn color_sort(g: &Graph, cand: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in cand {
        match classes.iter_mut().find(|cl| cl.iter().all(|&w| !g.has_edge(v, w))) {
            Some(cl) => cl.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut order = Vec::with_capacity(cand.len());
    let mut bounds = Vec::with_capacity(cand.len());
    for (k, cl) in classes.into_iter().enumerate() {
        for v in cl {
            order.push(v);
            bounds.push(k + 1);
        }
    }
    (order, bounds)
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

fn check_shape(g: &Graph, c: &Coloring) -> Result<Vec<usize>> {
    if c.len() != g.n() {
        return invalid(format!("coloring covers {} vertices, graph has {}", c.len(), g.n()));
    }
    c.total()
}

/// `Ok(None)` if proper, `Ok(Some(edge))` with a monochromatic edge otherwise.
/// Partial colorings are rejected.
pub fn improper_edge(g: &Graph, c: &Coloring) -> Result<Option<(usize, usize)>> {
    let col = check_shape(g, c)?;
    Ok(g.edges().into_iter().find(|&(u, v)| col[u] == col[v]))
}

pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    Ok(improper_edge(g, c)?.is_none())
}

/// Like [`is_proper`] but turns a monochromatic edge into an error.
pub fn check_proper(g: &Graph, c: &Coloring) -> Result<()> {
    match improper_edge(g, c)? {
        None => Ok(()),
        Some((u, v)) => Err(Error::ImproperColoring(u, v)),
    }
}

/// Properness of the colored part of a partial coloring.
pub fn check_partial_proper(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.n() {
        return invalid(format!("coloring covers {} vertices, graph has {}", c.len(), g.n()));
    }
    for (u, v) in g.edges() {
        if c.get(u).is_some() && c.get(u) == c.get(v) {
            return Err(Error::ImproperColoring(u, v));
        }
    }
    Ok(())
}

/// Turns a clique cover of `complement(g)` into a coloring of `g`, one color per part.
pub fn cover_to_coloring(g: &Graph, cover: &CliqueCover) -> Result<Coloring> {
    cover.validate(&g.complement())?;
    let mut c = Coloring::empty(g.n());
    for (i, part) in cover.parts.iter().enumerate() {
        for &v in part {
            c.set(v, i);
        }
    }
    Ok(c)
}
