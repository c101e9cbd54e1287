//! Reductions that build a coloring of `G` from colorings of smaller pieces:
//! gluing along a clique cutset and extending to a dominated vertex.

use std::collections::{BTreeSet, HashMap};

use crate::error::{invalid, Error, Result};
use crate::graph::{Coloring, Graph};
use crate::oracle::{chromatic_number, ChiResult};
use crate::params::{check_partial_proper, check_proper, delta2_or_zero};
use crate::recognition::{dominates, find_dominated_pair};

/// `G[C ∪ S]` vertex sets for the components `C` of `G - S`, ordered by
/// smallest vertex of `C`.
pub fn clique_cutset_pieces(g: &Graph, cutset: &[usize]) -> Result<Vec<Vec<usize>>> {
    if cutset.iter().any(|&v| v >= g.n()) || !g.is_clique(cutset) {
        return invalid("cutset is not a clique of the graph");
    }
    let comps = g.components_avoiding(cutset);
    if comps.len() < 2 {
        return invalid("removing the cutset leaves the graph connected");
    }
    Ok(comps
        .into_iter()
        .map(|mut c| {
            c.extend_from_slice(cutset);
            c.sort_unstable();
            c
        })
        .collect())
}

/// Glues piece colorings (each indexed by position in its piece) into a
/// coloring of `g` with `max_i` over pieces of their color counts.
pub fn lift_clique_cutset(
    g: &Graph,
    cutset: &[usize],
    pieces: &[Vec<usize>],
    colorings: &[Coloring],
) -> Result<Coloring> {
    let expected = clique_cutset_pieces(g, cutset)?;
    let mut given: Vec<BTreeSet<usize>> = pieces.iter().map(|p| p.iter().copied().collect()).collect();
    let mut want: Vec<BTreeSet<usize>> = expected.iter().map(|p| p.iter().copied().collect()).collect();
    given.sort();
    want.sort();
    if given != want || colorings.len() != pieces.len() {
        return invalid("pieces are not the cutset's components plus the cutset");
    }
    for (p, c) in pieces.iter().zip(colorings) {
        check_proper(&g.induced(p), c)?;
    }
    let mut out = Coloring::empty(g.n());
    let mut reference: HashMap<usize, usize> = HashMap::new();
    for (k, (piece, col)) in pieces.iter().zip(colorings).enumerate() {
        let col = col.compacted();
        let mut map: HashMap<usize, usize> = HashMap::new();
        if k == 0 {
            for (i, &v) in piece.iter().enumerate() {
                reference.insert(v, col.get(i).unwrap());
            }
        }
        for (i, &v) in piece.iter().enumerate() {
            if cutset.contains(&v) {
                map.insert(col.get(i).unwrap(), reference[&v]);
            }
        }
        let taken: BTreeSet<usize> = map.values().copied().collect();
        let mut spare = (0..).filter(|c| !taken.contains(c));
        for (i, &v) in piece.iter().enumerate() {
            let local = col.get(i).unwrap();
            let target = match map.get(&local) {
                Some(&t) => t,
                None => {
                    let t = spare.next().unwrap();
                    map.insert(local, t);
                    t
                }
            };
            out.set(v, target);
        }
    }
    Ok(out)
}

/// Colors `y` with the least color absent from `N(y)`, given a proper
/// coloring of `g - y` (with `y` uncolored) inside a palette of at least
/// `Δ₂(g) + 2` colors.
pub fn extend_dominated(g: &Graph, pair: (usize, usize), coloring: &Coloring, palette: usize) -> Result<Coloring> {
    let (x, y) = pair;
    if x >= g.n() || y >= g.n() || !dominates(g, x, y) {
        return invalid(format!("{x} does not dominate {y}"));
    }
    let floor = delta2_or_zero(g) + 2;
    if palette < floor {
        return Err(Error::InsufficientPalette {
            palette,
            required: floor,
        });
    }
    check_partial_proper(g, coloring)?;
    if coloring.get(y).is_some() {
        return invalid(format!("vertex {y} is already colored"));
    }
    if let Some(v) = (0..g.n()).find(|&v| v != y && coloring.get(v).is_none_or(|c| c >= palette)) {
        return invalid(format!("vertex {v} is uncolored or outside the palette"));
    }
    let mut out = coloring.clone();
    let c = out.least_free(g, y);
    if c >= palette {
        return Err(Error::PaletteExhausted { vertex: y, palette });
    }
    out.set(y, c);
    Ok(out)
}

/// Deletes dominated vertices one at a time until none is left, colors the
/// remainder exactly, then adds the deleted vertices back in reverse with
/// [`extend_dominated`] inside a palette of `max(Δ₂(g) + 3, χ(base))`.
pub fn color_by_domination(g: &Graph, budget: u64) -> Result<Coloring> {
    let mut alive: Vec<usize> = (0..g.n()).collect();
    let mut peeled = Vec::new();
    loop {
        let sub = g.induced(&alive);
        let Some((x, y)) = find_dominated_pair(&sub, false) else {
            break;
        };
        peeled.push((alive[x], alive[y]));
        alive.remove(y);
    }
    let base = g.induced(&alive);
    let ChiResult::Exact { chi, coloring } = chromatic_number(&base, budget) else {
        return Err(Error::Internal("oracle budget exhausted on the reduced graph".into()));
    };
    let palette = (delta2_or_zero(g) + 3).max(chi);
    let mut out = Coloring::empty(g.n());
    for (i, &v) in alive.iter().enumerate() {
        out.set(v, coloring.get(i).unwrap());
    }
    while let Some((x, y)) = peeled.pop() {
        alive.push(y);
        alive.sort_unstable();
        let sub = g.induced(&alive);
        let local = |v: usize| alive.binary_search(&v).unwrap();
        let mut c = Coloring::empty(alive.len());
        for (i, &v) in alive.iter().enumerate() {
            if v != y {
                c.set(i, out.get(v).unwrap());
            }
        }
        let ext = extend_dominated(&sub, (local(x), local(y)), &c, palette)?;
        out.set(y, ext.get(local(y)).unwrap());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_triangles_on_an_edge() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let pieces = clique_cutset_pieces(&g, &[1, 2]).unwrap();
        assert_eq!(pieces, vec![vec![0, 1, 2], vec![1, 2, 3]]);
        let cols = vec![Coloring::from_total(vec![0, 1, 2]), Coloring::from_total(vec![2, 0, 1])];
        let out = lift_clique_cutset(&g, &[1, 2], &pieces, &cols).unwrap();
        check_proper(&g, &out).unwrap();
        assert_eq!(out.num_colors(), 3);
    }

    #[test]
    fn star_cut_at_center() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let pieces = clique_cutset_pieces(&g, &[0]).unwrap();
        let cols: Vec<Coloring> = (0..3).map(|i| Coloring::from_total(vec![i, i + 1])).collect();
        let out = lift_clique_cutset(&g, &[0], &pieces, &cols).unwrap();
        check_proper(&g, &out).unwrap();
        assert_eq!(out.num_colors(), 2);
    }

    #[test]
    fn cutset_must_separate() {
        assert!(clique_cutset_pieces(&Graph::complete(3), &[0]).is_err());
        assert!(clique_cutset_pieces(&Graph::path(3), &[0, 2]).is_err());
    }

    #[test]
    fn domination_peels_cliques_and_trees() {
        let g = Graph::complete(5);
        let c = color_by_domination(&g, 1_000).unwrap();
        check_proper(&g, &c).unwrap();
        assert_eq!(c.num_colors(), 5);
        let p = Graph::path(6);
        assert_eq!(color_by_domination(&p, 1_000).unwrap().num_colors(), 2);
    }

    #[test]
    fn twins_in_a_clique() {
        let g = Graph::complete(4);
        let mut c = Coloring::from_total(vec![0, 1, 2, 0]);
        c.colors[3] = None;
        let out = extend_dominated(&g, (0, 3), &c, 4).unwrap();
        assert_eq!(out.get(3), Some(3));
        assert!(extend_dominated(&Graph::cycle(5), (0, 2), &Coloring::empty(5), 5).is_err());
        assert!(matches!(
            extend_dominated(&g, (0, 3), &c, 3),
            Err(Error::InsufficientPalette { .. })
        ));
    }
}
