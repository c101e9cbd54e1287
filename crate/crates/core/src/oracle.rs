//! Exact ground truth: branch-and-bound chromatic number, list-coloring
//! feasibility, and per-instance bound reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, ListAssignment};
use crate::params::{check_proper, clique_number, delta2_or_zero, delta_e, maximum_clique};

pub const DEFAULT_BUDGET: u64 = 10_000_000;
pub const BUDGET_ENV: &str = "CLAWCHROME_ORACLE_BUDGET";

/// Node cap from `CLAWCHROME_ORACLE_BUDGET`, else [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChiResult {
    Exact {
        chi: usize,
        coloring: Coloring,
    },
    /// Budget ran out; `lower <= χ <= upper`.
    Unknown {
        lower: usize,
        upper: usize,
    },
}

impl ChiResult {
    pub fn exact(&self) -> Option<usize> {
        match self {
            ChiResult::Exact { chi, .. } => Some(*chi),
            ChiResult::Unknown { .. } => None,
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    color: Vec<Option<usize>>,
    /// `seen[v][c]` = colored neighbors of `v` with color `c`.
    seen: Vec<Vec<u32>>,
    sat: Vec<usize>,
    best: usize,
    best_coloring: Vec<usize>,
    lower: usize,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = Some(c);
        for w in self.g.neighbors(v) {
            if self.seen[w][c] == 0 {
                self.sat[w] += 1;
            }
            self.seen[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v].take().unwrap();
        for w in self.g.neighbors(v) {
            self.seen[w][c] -= 1;
            if self.seen[w][c] == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    /// Uncolored vertex of maximum saturation, ties by degree then lowest index.
    fn next_vertex(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.color[v].is_none())
            .max_by_key(|&v| (self.sat[v], self.g.degree(v), std::cmp::Reverse(v)))
    }

    /// Returns false once the budget is spent.
    fn run(&mut self, used: usize) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        let Some(v) = self.next_vertex() else {
            self.best = used;
            self.best_coloring = self.color.iter().map(|c| c.unwrap()).collect();
            return true;
        };
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if self.seen[v][c] > 0 {
                continue;
            }
            self.assign(v, c);
            let ok = self.run(used.max(c + 1));
            self.unassign(v);
            if !ok {
                return false;
            }
            if self.best <= self.lower {
                return true;
            }
        }
        true
    }
}

/// DSATUR coloring without backtracking; an upper bound.
fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut s = Search {
        g,
        color: vec![None; n],
        seen: vec![vec![0; n + 1]; n],
        sat: vec![0; n],
        best: n + 1,
        best_coloring: vec![],
        lower: 0,
        nodes: 0,
        budget: 0,
    };
    while let Some(v) = s.next_vertex() {
        let c = (0..=n).find(|&c| s.seen[v][c] == 0).unwrap();
        s.assign(v, c);
    }
    s.color.into_iter().map(|c| c.unwrap()).collect()
}

/// Exact chromatic number with a node budget. A maximum clique is
/// precolored `0..ω` and gives the lower bound; DSATUR gives the first upper bound.
pub fn chromatic_number(g: &Graph, budget: u64) -> ChiResult {
    let n = g.n();
    if n == 0 {
        return ChiResult::Exact {
            chi: 0,
            coloring: Coloring::empty(0),
        };
    }
    let greedy = dsatur_greedy(g);
    let upper = greedy.iter().max().unwrap() + 1;
    let clique = maximum_clique(g);
    let lower = clique.len();
    let mut s = Search {
        g,
        color: vec![None; n],
        seen: vec![vec![0; n + 1]; n],
        sat: vec![0; n],
        best: upper,
        best_coloring: greedy,
        lower,
        nodes: 0,
        budget,
    };
    if lower < upper {
        for (i, &v) in clique.iter().enumerate() {
            s.assign(v, i);
        }
        if !s.run(lower) {
            return ChiResult::Unknown { lower, upper: s.best };
        }
    }
    ChiResult::Exact {
        chi: s.best,
        coloring: Coloring::from_total(s.best_coloring),
    }
}

/// Exact list-coloring feasibility by backtracking on the vertex with the
/// fewest remaining options. `None` when the budget runs out.
pub fn list_chromatic_feasible(g: &Graph, lists: &ListAssignment, budget: u64) -> Option<bool> {
    if lists.lists.len() != g.n() {
        return Some(false);
    }
    let mut color = vec![None; g.n()];
    let mut nodes = 0;
    list_search(g, lists, &mut color, &mut nodes, budget)
}

fn list_search(
    g: &Graph,
    lists: &ListAssignment,
    color: &mut [Option<usize>],
    nodes: &mut u64,
    budget: u64,
) -> Option<bool> {
    *nodes += 1;
    if *nodes > budget {
        return None;
    }
    let options = |v: usize, color: &[Option<usize>]| -> Vec<usize> {
        lists.lists[v]
            .iter()
            .copied()
            .filter(|&c| g.neighbors(v).all(|w| color[w] != Some(c)))
            .collect()
    };
    let pick = (0..g.n())
        .filter(|&v| color[v].is_none())
        .map(|v| (options(v, color), v))
        .min_by_key(|(o, v)| (o.len(), *v));
    let Some((opts, v)) = pick else {
        return Some(true);
    };
    for c in opts {
        color[v] = Some(c);
        let r = list_search(g, lists, color, nodes, budget);
        color[v] = None;
        if r != Some(false) {
            return r;
        }
    }
    Some(false)
}

/// `χ̄(h) = χ(complement(h))`.
pub fn clique_cover_number(h: &Graph, budget: u64) -> Option<usize> {
    chromatic_number(&h.complement(), budget).exact()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Delta2,
    DeltaE,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::Delta2 => "delta2",
            BoundKind::DeltaE => "delta_e",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<BoundKind> {
        match s {
            "delta2" => Ok(BoundKind::Delta2),
            "delta_e" => Ok(BoundKind::DeltaE),
            _ => Err(Error::InvalidArgument(format!("unknown bound {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Violation {
    /// `χ > parameter + slack`.
    Bound { bound: BoundKind, chi: usize, limit: usize },
    /// A colorer used more colors than its own guarantee.
    ColorerOverBound { colorer: String, used: usize, limit: usize },
    /// A colorer returned an improper coloring or failed although its preconditions held.
    ColorerFailed { colorer: String, error: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub graph_id: String,
    pub n: usize,
    pub delta2: usize,
    pub delta_e: usize,
    pub omega: usize,
    /// `None` when the oracle ran out of budget.
    pub chi_exact: Option<usize>,
    pub colors_used: BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
    /// Bounds met with equality, `χ = parameter + slack`.
    pub tight: Vec<BoundKind>,
}

impl BoundReport {
    pub fn parameter(&self, kind: BoundKind) -> usize {
        match kind {
            BoundKind::Delta2 => self.delta2,
            BoundKind::DeltaE => self.delta_e,
        }
    }

    pub fn has_violation(&self) -> bool {
        !self.violations.is_empty()
    }

    /// Records a colorer's outcome against an optional color-count guarantee.
    pub fn record_colorer(&mut self, g: &Graph, name: &str, outcome: Result<Coloring>, limit: Option<usize>) {
        let checked = outcome.and_then(|c| check_proper(g, &c).map(|_| c));
        match checked {
            Ok(c) => {
                let used = c.num_colors();
                self.colors_used.insert(name.to_string(), used);
                if let Some(limit) = limit.filter(|&l| used > l) {
                    self.violations.push(Violation::ColorerOverBound {
                        colorer: name.into(),
                        used,
                        limit,
                    });
                }
                if let Some(chi) = self.chi_exact.filter(|&chi| used < chi) {
                    self.violations.push(Violation::ColorerFailed {
                        colorer: name.into(),
                        error: format!("used {used} colors, below the oracle's {chi}"),
                    });
                }
            }
            Err(e) => self.violations.push(Violation::ColorerFailed {
                colorer: name.into(),
                error: e.to_string(),
            }),
        }
    }
}

/// Computes the parameters and `χ`, and flags every `kind` with
/// `χ > parameter + slack`.
pub fn verify_bound(g: &Graph, kinds: &[BoundKind], slack: usize, budget: u64) -> BoundReport {
    let chi = chromatic_number(g, budget).exact();
    let mut report = BoundReport {
        graph_id: String::new(),
        n: g.n(),
        delta2: delta2_or_zero(g),
        delta_e: delta_e(g),
        omega: clique_number(g),
        chi_exact: chi,
        colors_used: BTreeMap::new(),
        violations: vec![],
        tight: vec![],
    };
    if let Some(chi) = chi {
        for &k in kinds {
            let limit = report.parameter(k) + slack;
            if chi > limit {
                report.violations.push(Violation::Bound { bound: k, chi, limit });
            } else if chi == limit {
                report.tight.push(k);
            }
        }
    }
    report
}
