//! Seeded claw-free campaigns: generate, color, run the oracle, write JSONL
//! reports and a CSV summary.

use std::collections::{BTreeMap, HashSet};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::colorers::circular::{color_circular_interval, color_circular_interval_tight};
use crate::colorers::cover::{color_alpha2, color_antiprismatic};
use crate::colorers::line::color_line_graph;
use crate::colorers::reductions::color_by_domination;
use crate::error::{invalid, Error, Result};
use crate::generators::random::{claw_free_with, ClawFreeInstance, Family, Provenance};
use crate::graph::ListAssignment;
use crate::oracle::{budget_from_env, verify_bound, BoundKind, BoundReport};

fn default_bounds() -> Vec<BoundKind> {
    vec![BoundKind::Delta2, BoundKind::DeltaE]
}

fn default_slack() -> usize {
    3
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyPlan {
    pub family: Family,
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CampaignConfig {
    pub seed: u64,
    pub families: Vec<FamilyPlan>,
    #[serde(default = "default_bounds")]
    pub bounds: Vec<BoundKind>,
    #[serde(default = "default_slack")]
    pub slack: usize,
    /// Oracle node cap; falls back to the environment, then the default.
    #[serde(default)]
    pub budget: Option<u64>,
    #[serde(default)]
    pub jsonl: Option<PathBuf>,
    #[serde(default)]
    pub csv: Option<PathBuf>,
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<()> {
        if self.families.is_empty() {
            return invalid("campaign lists no families");
        }
        for p in &self.families {
            if p.count == 0 {
                return invalid(format!("count for {} must be positive", p.family));
            }
            if p.n_min > p.n_max || p.n_min < p.family.min_n() {
                return invalid(format!(
                    "size range {}..={} is invalid for {}",
                    p.n_min, p.n_max, p.family
                ));
            }
        }
        Ok(())
    }

    pub fn budget(&self) -> u64 {
        self.budget.unwrap_or_else(budget_from_env)
    }

    /// `(id, family, n_range, stream)` in campaign order.
    fn plan(&self) -> Vec<(String, &FamilyPlan, u64)> {
        let mut out = Vec::new();
        let mut stream = 0u64;
        for p in &self.families {
            for i in 0..p.count {
                out.push((format!("{}-{:05}", p.family, i), p, stream));
                stream += 1;
            }
        }
        out
    }
}

/// Instance `stream` of the campaign: ChaCha8 seeded by the campaign seed,
/// on its own stream, so instances are independent of evaluation order.
pub fn campaign_instance(seed: u64, stream: u64, plan: &FamilyPlan) -> Result<ClawFreeInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let n = rng.gen_range(plan.n_min..=plan.n_max);
    claw_free_with(n, plan.family, &mut rng)
}

/// Oracle report plus every applicable colorer checked against its guarantee.
pub fn evaluate(inst: &ClawFreeInstance, bounds: &[BoundKind], slack: usize, budget: u64) -> BoundReport {
    let g = &inst.graph;
    let mut r = verify_bound(g, bounds, slack, budget);
    let (d2, de) = (r.delta2, r.delta_e);
    match &inst.provenance {
        Provenance::LineOfRandom { root } => {
            let c = color_line_graph(root).coloring;
            r.record_colorer(g, "line", Ok(c), Some((d2 + 3).min(de + 3)));
        }
        Provenance::CircularInterval { rep } => {
            let n = g.n();
            let plain = color_circular_interval(g, rep, &ListAssignment::uniform(n, d2 + 3));
            r.record_colorer(g, "circular", plain, Some(d2 + 3));
            let tight = color_circular_interval_tight(g, rep, &ListAssignment::uniform(n, d2 + 2));
            r.record_colorer(g, "circular-tight", tight, Some(d2 + 2));
        }
        Provenance::ComplementTrianglefree { .. } => {
            r.record_colorer(g, "alpha2", color_alpha2(g), Some(d2 + 2));
            r.record_colorer(g, "antiprismatic", color_antiprismatic(g), Some(d2 + 2));
        }
        Provenance::ThickenedRibbon { .. } => {
            r.record_colorer(g, "dominated-reduction", color_by_domination(g, budget), Some(d2 + 3));
        }
    }
    r
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub instances: usize,
    /// Instances carrying at least one violation.
    pub violations: usize,
    /// Instances the oracle could not settle within budget.
    pub unknown: usize,
    pub tight: BTreeMap<String, usize>,
    pub resumed: usize,
}

impl CampaignSummary {
    pub fn exit_code(&self) -> i32 {
        i32::from(self.violations > 0)
    }
}

fn read_existing(path: &Path) -> Result<Vec<BoundReport>> {
    if !path.exists() {
        return Ok(vec![]);
    }
    let f = File::open(path).map_err(|e| io_err(path, e))?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(f).lines().enumerate() {
        let line = line.map_err(|e| io_err(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str(&line) {
            Ok(r) => out.push(r),
            Err(e) => {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("{}: {e}", path.display()),
                });
            }
        }
    }
    Ok(out)
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("{}: {e}", path.display()))
}

/// Drops a trailing partial line so appends start on a line boundary.
fn trim_torn_tail(path: &Path) -> Result<()> {
    if !path.exists() {
        return Ok(());
    }
    let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    if !text.is_empty() && !text.ends_with('\n') {
        let keep = text.rfind('\n').map_or(0, |i| i + 1);
        std::fs::write(path, &text[..keep]).map_err(|e| io_err(path, e))?;
    }
    Ok(())
}

const CHUNK: usize = 64;

/// Runs the campaign. Reports already present in the JSONL file (by id) are
/// kept and skipped; new ones are appended in id order, one chunk at a time.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<(CampaignSummary, Vec<BoundReport>)> {
    cfg.validate()?;
    let budget = cfg.budget();
    let mut reports = Vec::new();
    let mut sink = None;
    if let Some(path) = &cfg.jsonl {
        trim_torn_tail(path)?;
        reports = read_existing(path)?;
        let f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(|e| io_err(path, e))?;
        sink = Some((path.clone(), f));
    }
    let done: HashSet<String> = reports.iter().map(|r| r.graph_id.clone()).collect();
    let resumed = reports.len();
    let pending: Vec<_> = cfg.plan().into_iter().filter(|(id, _, _)| !done.contains(id)).collect();
    for chunk in pending.chunks(CHUNK) {
        let batch: Vec<BoundReport> = chunk
            .par_iter()
            .map(|(id, plan, stream)| {
                let inst = campaign_instance(cfg.seed, *stream, plan)?;
                let mut r = evaluate(&inst, &cfg.bounds, cfg.slack, budget);
                r.graph_id = id.clone();
                Ok(r)
            })
            .collect::<Result<_>>()?;
        if let Some((path, f)) = sink.as_mut() {
            for r in &batch {
                let line = serde_json::to_string(r).map_err(|e| Error::Internal(e.to_string()))?;
                writeln!(f, "{line}").map_err(|e| io_err(path, e))?;
            }
            f.flush().map_err(|e| io_err(path, e))?;
        }
        reports.extend(batch);
    }
    if let Some(path) = &cfg.csv {
        write_csv(path, &reports)?;
    }
    let mut summary = CampaignSummary {
        instances: reports.len(),
        resumed,
        ..Default::default()
    };
    for r in &reports {
        summary.violations += usize::from(r.has_violation());
        summary.unknown += usize::from(r.chi_exact.is_none());
        for k in &r.tight {
            *summary.tight.entry(k.to_string()).or_default() += 1;
        }
    }
    Ok((summary, reports))
}

pub fn write_csv(path: &Path, reports: &[BoundReport]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    let fail = |e: csv::Error| Error::InvalidArgument(format!("{}: {e}", path.display()));
    w.write_record(["graph_id", "n", "delta2", "delta_e", "chi", "bound_ok"])
        .map_err(fail)?;
    for r in reports {
        let chi = r.chi_exact.map(|c| c.to_string()).unwrap_or_default();
        w.write_record([
            r.graph_id.clone(),
            r.n.to_string(),
            r.delta2.to_string(),
            r.delta_e.to_string(),
            chi,
            (!r.has_violation()).to_string(),
        ])
        .map_err(fail)?;
    }
    w.flush().map_err(|e| io_err(path, e))
}
