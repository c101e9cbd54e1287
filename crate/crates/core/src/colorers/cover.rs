//! Clique covers of triangle-free and prismatic graphs, and the colorings of
//! their complements (graphs with no triad, antiprismatic graphs).

use crate::error::{Error, Result};
use crate::graph::{CliqueCover, Coloring, Graph};
use crate::matching::maximum_matching;
use crate::params::cover_to_coloring;
use crate::recognition::{antiprismatic_violation, find_triad, find_triangle, prismatic_violation};

/// Maximum-matching edges as 2-cliques plus unmatched singletons; this has
/// exactly `|V| - m(h)` parts, which is optimal on triangle-free graphs.
pub fn cover_triangle_free(h: &Graph) -> Result<CliqueCover> {
    if let Some(t) = find_triangle(h) {
        return Err(Error::Rejected {
            reason: "clique cover by matching needs a triangle-free graph".into(),
            witness: t,
        });
    }
    Ok(matching_cover(h))
}

fn matching_cover(h: &Graph) -> CliqueCover {
    let m = maximum_matching(h);
    let mut matched = vec![false; h.n()];
    let mut parts: Vec<Vec<usize>> = Vec::with_capacity(h.n() - m.len());
    for &(u, v) in &m.edges {
        matched[u] = true;
        matched[v] = true;
        parts.push(vec![u, v]);
    }
    parts.extend((0..h.n()).filter(|&v| !matched[v]).map(|v| vec![v]));
    CliqueCover { parts }
}

/// Optimal coloring of a graph with no triad, through its triangle-free
/// complement. Uses at most `Δ₂(g) + 2` colors.
pub fn color_alpha2(g: &Graph) -> Result<Coloring> {
    if let Some(t) = find_triad(g) {
        return Err(Error::Rejected {
            reason: "graph has a triad".into(),
            witness: t,
        });
    }
    let cover = matching_cover(&g.complement());
    cover_to_coloring(g, &cover)
}

/// Greedily peels vertex-disjoint triangles (first found each time) until the
/// rest is triangle-free, then covers the rest by matching.
pub fn cover_prismatic(h: &Graph) -> Result<CliqueCover> {
    if let Some(v) = prismatic_violation(h) {
        return Err(Error::Rejected {
            reason: format!("not prismatic: vertex {} sees {} of a triangle", v.vertex, v.count),
            witness: v.witness(),
        });
    }
    let mut alive: Vec<usize> = (0..h.n()).collect();
    let mut parts = Vec::new();
    loop {
        let sub = h.induced(&alive);
        let Some(t) = find_triangle(&sub) else {
            let rest = matching_cover(&sub);
            parts.extend(
                rest.parts
                    .into_iter()
                    .map(|p| p.into_iter().map(|i| alive[i]).collect::<Vec<_>>()),
            );
            break;
        };
        let tri: Vec<usize> = t.vertices.iter().map(|&i| alive[i]).collect();
        alive.retain(|v| !tri.contains(v));
        parts.push(tri);
    }
    Ok(CliqueCover { parts })
}

/// Coloring of an antiprismatic graph from a prismatic cover of its complement.
pub fn color_antiprismatic(g: &Graph) -> Result<Coloring> {
    if let Some(w) = antiprismatic_violation(g) {
        return Err(Error::Rejected {
            reason: "not antiprismatic".into(),
            witness: w,
        });
    }
    let cover = cover_prismatic(&g.complement())?;
    cover_to_coloring(g, &cover)
}
