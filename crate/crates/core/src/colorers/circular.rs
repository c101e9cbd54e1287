//! List coloring of circular interval graphs: the plain rightward greedy
//! (lists of size `Δ₂+3`) and the single-swap variant (lists of size `Δ₂+2`).

use std::collections::VecDeque;

use crate::certificates::CircularIntervalRep;
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, ListAssignment};
use crate::params::delta2_or_zero;

/// Smallest color of `L(v)` unused on colored neighbors.
fn pick(g: &Graph, lists: &ListAssignment, c: &Coloring, v: usize) -> Option<usize> {
    lists.lists[v]
        .iter()
        .copied()
        .find(|&col| g.neighbors(v).all(|w| c.get(w) != Some(col)))
}

fn color_in_order(g: &Graph, lists: &ListAssignment, c: &mut Coloring, order: &[usize]) -> Result<()> {
    for &v in order {
        let col = pick(g, lists, c, v).ok_or(Error::PaletteExhausted {
            vertex: v,
            palette: lists.lists[v].len(),
        })?;
        c.set(v, col);
    }
    Ok(())
}

fn rotation(rep: &CircularIntervalRep, start: usize) -> Vec<usize> {
    let n = rep.n();
    (0..n).map(|t| rep.order[(start + t) % n]).collect()
}

/// Rightward greedy from the rightmost vertex of a longest interval.
pub fn color_circular_interval(g: &Graph, rep: &CircularIntervalRep, lists: &ListAssignment) -> Result<Coloring> {
    rep.validate(g)?;
    lists.check_for(g, delta2_or_zero(g) + 3)?;
    let mut c = Coloring::empty(g.n());
    if g.n() == 0 {
        return Ok(c);
    }
    let longest = rep.longest();
    let start = rep.left_lengths().iter().position(|&l| l == longest).unwrap();
    color_in_order(g, lists, &mut c, &rotation(rep, start))?;
    Ok(c)
}

/// The single-swap algorithm with the `Δ₂+2` list-size precondition.
pub fn color_circular_interval_tight(g: &Graph, rep: &CircularIntervalRep, lists: &ListAssignment) -> Result<Coloring> {
    rep.validate(g)?;
    lists.check_for(g, delta2_or_zero(g) + 2)?;
    tight_unchecked(g, rep, lists)
}

/// Runs the single-swap algorithm on whatever lists are given, failing with
/// `PaletteExhausted` if they run out. Used to probe smaller palettes.
pub fn tight_unchecked(g: &Graph, rep: &CircularIntervalRep, lists: &ListAssignment) -> Result<Coloring> {
    let n = g.n();
    let mut c = Coloring::empty(n);
    if n == 0 {
        return Ok(c);
    }
    let longest = rep.longest();
    let left = rep.left_lengths();
    let start = (0..n).find(|&p| left[p] == longest && left[(p + n - 1) % n] < longest);
    let Some(start) = start else {
        return power_fallback(g, lists);
    };
    let order = rotation(rep, start);
    let mut swapped = false;
    let mut i = 0;
    while i < n {
        let v = order[i];
        if let Some(col) = pick(g, lists, &c, v) {
            c.set(v, col);
            i += 1;
            continue;
        }
        // At most one vertex gets stuck; color it before its left neighbor.
        if swapped || i == 0 {
            return Err(Error::PaletteExhausted {
                vertex: v,
                palette: lists.lists[v].len(),
            });
        }
        swapped = true;
        let prev = order[i - 1];
        c.colors[prev] = None;
        color_in_order(g, lists, &mut c, &[v, prev])?;
        i += 1;
    }
    Ok(c)
}

/// Every position ends a longest interval: the graph is a circular power (or
/// complete). Lists are at least the degree here, so a Brooks-style order
/// works per component.
fn power_fallback(g: &Graph, lists: &ListAssignment) -> Result<Coloring> {
    let mut c = Coloring::empty(g.n());
    for comp in g.components() {
        if let Some(&root) = comp.iter().find(|&&v| lists.lists[v].len() > g.degree(v)) {
            let order = reverse_bfs(g, &[root]);
            color_in_order(g, lists, &mut c, &order)?;
            continue;
        }
        let Some(h) = degree_choosable_core(g, &comp) else {
            return Err(Error::PaletteExhausted {
                vertex: comp[0],
                palette: lists.lists[comp[0]].len(),
            });
        };
        let order = reverse_bfs(g, &h);
        let outside: Vec<usize> = order.into_iter().filter(|v| !h.contains(v)).collect();
        color_in_order(g, lists, &mut c, &outside)?;
        if !brute_force_extend(g, lists, &mut c, &h) {
            return Err(Error::PaletteExhausted {
                vertex: h[0],
                palette: lists.lists[h[0]].len(),
            });
        }
    }
    Ok(c)
}

/// Vertices reachable from `roots`, farthest first, roots last.
fn reverse_bfs(g: &Graph, roots: &[usize]) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut q = VecDeque::new();
    for &r in roots {
        dist[r] = 0;
        q.push_back(r);
    }
    let mut seen = Vec::new();
    while let Some(u) = q.pop_front() {
        seen.push(u);
        for w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
        }
    }
    seen.reverse();
    seen
}

/// An induced diamond or induced `C4` inside `comp`; both are degree-choosable.
fn degree_choosable_core(g: &Graph, comp: &[usize]) -> Option<Vec<usize>> {
    let k = comp.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    let q = [comp[a], comp[b], comp[c], comp[d]];
                    let h = g.induced(&q);
                    let e = h.edge_count();
                    let c4 = e == 4 && (0..4).all(|v| h.degree(v) == 2);
                    if e == 5 || c4 {
                        return Some(q.to_vec());
                    }
                }
            }
        }
    }
    None
}

fn brute_force_extend(g: &Graph, lists: &ListAssignment, c: &mut Coloring, h: &[usize]) -> bool {
    let Some((&v, rest)) = h.split_first() else {
        return true;
    };
    for &col in &lists.lists[v] {
        if g.neighbors(v).all(|w| c.get(w) != Some(col)) {
            c.set(v, col);
            if brute_force_extend(g, lists, c, rest) {
                return true;
            }
            c.colors[v] = None;
        }
    }
    false
}

/// Outcome of re-running the tight colorer with lists of size `Δₑ+2`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct DeltaEComparison {
    pub delta_e: usize,
    pub palette: usize,
    /// Colors used by the `Δₑ+2` run, `None` if it ran out of colors.
    pub colors_used: Option<usize>,
    /// True when `Δₑ+2` colors did not suffice.
    pub discrepancy: bool,
}

/// Tries uniform lists `0..Δₑ+2` with the tight algorithm and reports.
pub fn compare_delta_e(g: &Graph, rep: &CircularIntervalRep) -> Result<DeltaEComparison> {
    rep.validate(g)?;
    let de = crate::params::delta_e(g);
    let palette = de + 2;
    let lists = ListAssignment::uniform(g.n(), palette);
    let colors_used = tight_unchecked(g, rep, &lists).ok().map(|c| c.num_colors());
    Ok(DeltaEComparison {
        delta_e: de,
        palette,
        colors_used,
        discrepancy: colors_used.is_none(),
    })
}
