//! Certificate-free dispatch: triad-free base case, then the quasi-line
//! reductions (components, clique cutsets, dominated vertices), then the oracle.

use serde::{Deserialize, Serialize};

use crate::colorers::cover::color_alpha2;
use crate::colorers::reductions::{clique_cutset_pieces, extend_dominated, lift_clique_cutset};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::oracle::{chromatic_number, ChiResult};
use crate::params::delta2_or_zero;
use crate::recognition::{find_clique_cutset, find_dominated_pair, find_triad, is_quasi_line, CutsetSearch};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Step {
    Alpha2,
    Components,
    CliqueCutset,
    Dominated,
    Oracle,
}

/// Coloring plus the steps that fired, in the order they fired.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutoColoring {
    pub coloring: Coloring,
    pub steps: Vec<Step>,
}

pub fn color_auto(g: &Graph, budget: u64) -> Result<AutoColoring> {
    let mut steps = Vec::new();
    let coloring = auto(g, budget, &mut steps)?;
    Ok(AutoColoring { coloring, steps })
}

fn auto(g: &Graph, budget: u64, steps: &mut Vec<Step>) -> Result<Coloring> {
    let n = g.n();
    if n == 0 {
        return Ok(Coloring::empty(0));
    }
    if find_triad(g).is_none() {
        steps.push(Step::Alpha2);
        return color_alpha2(g);
    }
    let comps = g.components();
    if comps.len() > 1 {
        steps.push(Step::Components);
        let mut out = Coloring::empty(n);
        for comp in comps {
            let c = auto(&g.induced(&comp), budget, steps)?;
            for (i, &v) in comp.iter().enumerate() {
                out.set(v, c.get(i).unwrap());
            }
        }
        return Ok(out);
    }
    if is_quasi_line(g) {
        if let CutsetSearch::Found(s) = find_clique_cutset(g)? {
            steps.push(Step::CliqueCutset);
            let pieces = clique_cutset_pieces(g, &s)?;
            let colorings = pieces
                .iter()
                .map(|p| auto(&g.induced(p), budget, steps))
                .collect::<Result<Vec<_>>>()?;
            return lift_clique_cutset(g, &s, &pieces, &colorings);
        }
        if let Some((x, y)) = find_dominated_pair(g, false) {
            steps.push(Step::Dominated);
            let rest: Vec<usize> = (0..n).filter(|&v| v != y).collect();
            let sub = auto(&g.induced(&rest), budget, steps)?;
            let mut c = Coloring::empty(n);
            for (i, &v) in rest.iter().enumerate() {
                c.set(v, sub.get(i).unwrap());
            }
            let palette = (delta2_or_zero(g) + 3).max(sub.span());
            return extend_dominated(g, (x, y), &c, palette);
        }
    }
    steps.push(Step::Oracle);
    match chromatic_number(g, budget) {
        ChiResult::Exact { coloring, .. } => Ok(coloring),
        ChiResult::Unknown { .. } => Err(Error::Internal("oracle budget exhausted".into())),
    }
}
