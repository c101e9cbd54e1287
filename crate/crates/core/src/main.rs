use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use clawchrome::campaign::{run_campaign, CampaignConfig};
use clawchrome::certificates::{CircularIntervalRep, ThreeCliquedCert};
use clawchrome::colorers::auto::color_auto;
use clawchrome::colorers::circular::{color_circular_interval, color_circular_interval_tight};
use clawchrome::colorers::cover::{color_alpha2, color_antiprismatic, cover_prismatic};
use clawchrome::colorers::icosahedral::color_icosahedral;
use clawchrome::colorers::line::color_line_graph;
use clawchrome::colorers::three_cliqued::color_three_cliqued;
use clawchrome::generators::fixtures::{icosahedron, petersen, w5};
use clawchrome::generators::line::line_graph;
use clawchrome::generators::random::{random_claw_free, random_triangle_free, Family, Provenance};
use clawchrome::io::{parse_graph, parse_multigraph, write_edge_list, write_multigraph};
use clawchrome::matching::matching_number;
use clawchrome::oracle::{budget_from_env, chromatic_number, verify_bound, BoundKind, ChiResult};
use clawchrome::params::{
    clique_number, cover_to_coloring, delta2_or_zero, delta_e, independence_number, is_proper, max_anticodegree,
    max_nonadjacent_anticodegree,
};
use clawchrome::recognition::{
    antiprismatic_violation, find_claw, find_clique_cutset, find_dominated_pair, find_triad, find_triangle,
    prismatic_violation, quasi_line_violation, ClassWitness, CutsetSearch, WitnessKind,
};
use clawchrome::{Coloring, Error, Graph, ListAssignment, Multigraph};

#[derive(Parser)]
#[command(
    name = "clawchrome",
    version,
    about = "Codegree-bounded coloring of claw-free graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print Δ₂, Δₑ, anticodegrees, ω, α and the matching number.
    Params { file: PathBuf },
    /// Test class membership; prints a witness when the graph is outside the class.
    Recognize {
        file: PathBuf,
        #[arg(long, value_enum)]
        class: Class,
    },
    /// Color a graph and write a JSON coloring report.
    Color {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
        /// Certificate: root multigraph edge list for `line`, JSON for the others.
        #[arg(long)]
        cert: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the exact chromatic number with a codegree bound.
    Verify {
        file: PathBuf,
        #[arg(long, default_value = "delta2")]
        bound: BoundKind,
        #[arg(long, default_value_t = 3)]
        slack: usize,
    },
    /// Write a generated graph (`<out>.edges`) and its certificate (`<out>.cert.json`).
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 12)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Edge probability for `triangle-free`.
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a seeded campaign from a JSON config.
    Campaign {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    ClawFree,
    TriangleFree,
    TriadFree,
    QuasiLine,
    Prismatic,
    Antiprismatic,
    CliqueCutset,
    Dominated,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Method {
    Auto,
    Line,
    Circular,
    CircularTight,
    Alpha2,
    Prismatic,
    Antiprismatic,
    ThreeCliqued,
    Icosahedral,
    Oracle,
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(path: &Path) -> anyhow::Result<Graph> {
    Ok(parse_graph(&read(path)?)?)
}

/// Reads a JSON certificate; sidecars written by `generate` wrap it under `key`.
fn load_cert<T: serde::de::DeserializeOwned>(path: Option<&PathBuf>, key: &str) -> anyhow::Result<T> {
    let path = path.ok_or_else(|| anyhow!("this method needs --cert"))?;
    let mut v: Value = serde_json::from_str(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    if let Some(inner) = v.get_mut(key) {
        v = inner.take();
    }
    serde_json::from_value(v).with_context(|| format!("certificate {} has the wrong shape", path.display()))
}

fn emit(value: &Value, out: Option<&Path>) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_params(file: &Path) -> anyhow::Result<ExitCode> {
    let g = load_graph(file)?;
    let macodeg = if g.n() >= 2 { Some(max_anticodegree(&g)?) } else { None };
    emit(
        &json!({
            "n": g.n(),
            "m": g.edge_count(),
            "delta2": delta2_or_zero(&g),
            "delta_e": delta_e(&g),
            "max_anticodegree": macodeg,
            "max_nonadjacent_anticodegree": max_nonadjacent_anticodegree(&g),
            "omega": clique_number(&g),
            "alpha": independence_number(&g),
            "matching_number": matching_number(&g),
        }),
        None,
    )?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_recognize(file: &Path, class: Class) -> anyhow::Result<ExitCode> {
    let g = load_graph(file)?;
    let (name, witness): (&str, Option<ClassWitness>) = match class {
        Class::ClawFree => ("claw-free", find_claw(&g)),
        Class::TriangleFree => ("triangle-free", find_triangle(&g)),
        Class::TriadFree => ("triad-free", find_triad(&g)),
        Class::QuasiLine => ("quasi-line", quasi_line_violation(&g)),
        Class::Prismatic => ("prismatic", prismatic_violation(&g).map(|v| v.witness())),
        Class::Antiprismatic => ("antiprismatic", antiprismatic_violation(&g)),
        Class::CliqueCutset => {
            let found = if g.is_connected() {
                find_clique_cutset(&g)?
            } else {
                CutsetSearch::NoneExists
            };
            emit(
                &json!({ "class": "has-clique-cutset", "connected": g.is_connected(), "search": found }),
                None,
            )?;
            return Ok(ExitCode::SUCCESS);
        }
        Class::Dominated => {
            let w =
                find_dominated_pair(&g, false).map(|(x, y)| ClassWitness::new(WitnessKind::DominatedPair, vec![x, y]));
            emit(
                &json!({ "class": "has-dominated-vertex", "member": w.is_some(), "witness": w }),
                None,
            )?;
            return Ok(ExitCode::SUCCESS);
        }
    };
    emit(
        &json!({ "class": name, "member": witness.is_none(), "witness": witness }),
        None,
    )?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_color(file: &Path, method: Method, cert: Option<&PathBuf>, out: Option<&Path>) -> anyhow::Result<ExitCode> {
    let g = load_graph(file)?;
    let budget = budget_from_env();
    let d2 = delta2_or_zero(&g);
    let mut fired = Value::Null;
    let mut target = g.clone();
    let coloring: Coloring = match method {
        Method::Auto => {
            let r = color_auto(&g, budget)?;
            fired = json!(r.steps);
            r.coloring
        }
        Method::Line => {
            let path = cert.ok_or_else(|| anyhow!("method line needs --cert with the root multigraph"))?;
            let root = parse_multigraph(&read(path)?)?;
            let lc = color_line_graph(&root);
            if lc.line.graph != g {
                return Err(Error::InvalidCertificate("the root's line graph differs from the input".into()).into());
            }
            lc.coloring
        }
        Method::Circular => {
            let rep: CircularIntervalRep = load_cert(cert, "rep")?;
            color_circular_interval(&g, &rep, &ListAssignment::uniform(g.n(), d2 + 3))?
        }
        Method::CircularTight => {
            let rep: CircularIntervalRep = load_cert(cert, "rep")?;
            color_circular_interval_tight(&g, &rep, &ListAssignment::uniform(g.n(), d2 + 2))?
        }
        Method::Alpha2 => color_alpha2(&g)?,
        Method::Prismatic => {
            // A clique cover of `g`, reported as a coloring of its complement.
            let cover = cover_prismatic(&g)?;
            target = g.complement();
            cover_to_coloring(&target, &cover)?
        }
        Method::Antiprismatic => color_antiprismatic(&g)?,
        Method::ThreeCliqued => {
            let c: ThreeCliquedCert = load_cert(cert, "three_cliqued")?;
            color_three_cliqued(&g, &c)?
        }
        Method::Icosahedral => {
            let emb: Vec<usize> = match cert {
                Some(_) => load_cert(cert, "embedding")?,
                None if g == icosahedron() => (0..12).collect(),
                None => bail!("method icosahedral needs --cert with the embedding"),
            };
            color_icosahedral(&g, &emb)?
        }
        Method::Oracle => match chromatic_number(&g, budget) {
            ChiResult::Exact { coloring, .. } => coloring,
            ChiResult::Unknown { lower, upper } => bail!("oracle budget exhausted ({lower} <= chi <= {upper})"),
        },
    };
    let proper = is_proper(&target, &coloring)?;
    let mut report = json!({
        "method": method.to_possible_value().unwrap().get_name(),
        "colored": if method == Method::Prismatic { "complement" } else { "graph" },
        "proper": proper,
        "colors": coloring.num_colors(),
        "coloring": coloring,
    });
    if method == Method::Auto {
        report["fired"] = fired;
    }
    emit(&report, out)?;
    Ok(if proper { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_verify(file: &Path, bound: BoundKind, slack: usize) -> anyhow::Result<ExitCode> {
    let g = load_graph(file)?;
    let mut r = verify_bound(&g, &[bound], slack, budget_from_env());
    r.graph_id = file.display().to_string();
    emit(&serde_json::to_value(&r)?, None)?;
    if r.chi_exact.is_none() {
        eprintln!("oracle budget exhausted; instance not decided");
    }
    Ok(if r.has_violation() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn write_root(out: &Path, root: &Multigraph) -> anyhow::Result<()> {
    let path = out.with_extension("root");
    fs::write(&path, write_multigraph(root)).with_context(|| format!("writing {}", path.display()))
}

fn cmd_generate(family: &str, n: usize, seed: u64, p: f64, out: &Path) -> anyhow::Result<ExitCode> {
    let (g, cert): (Graph, Value) = match family {
        "petersen" => (petersen(), Value::Null),
        "icosahedron" => (icosahedron(), json!({ "embedding": (0..12).collect::<Vec<_>>() })),
        "w5" => (w5(), Value::Null),
        "line-petersen" => {
            let root = Multigraph::from_graph(&petersen());
            write_root(out, &root)?;
            (line_graph(&root).graph, Value::Null)
        }
        "triangle-free" => (random_triangle_free(n, p, seed)?, json!({ "family": family, "p": p })),
        other => {
            let fam: Family = other.parse()?;
            let inst = random_claw_free(n, fam, seed)?;
            if let Provenance::LineOfRandom { root } = &inst.provenance {
                write_root(out, root)?;
            }
            (inst.graph, serde_json::to_value(&inst.provenance)?)
        }
    };
    let edges = out.with_extension("edges");
    fs::write(&edges, write_edge_list(&g)).with_context(|| format!("writing {}", edges.display()))?;
    if !cert.is_null() {
        let path = out.with_extension("cert.json");
        fs::write(&path, serde_json::to_string_pretty(&cert)? + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_campaign(config: &Path) -> anyhow::Result<ExitCode> {
    let cfg: CampaignConfig =
        serde_json::from_str(&read(config)?).with_context(|| format!("parsing {}", config.display()))?;
    let (summary, _) = run_campaign(&cfg)?;
    emit(&serde_json::to_value(&summary)?, None)?;
    Ok(if summary.exit_code() == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn error_json(e: &anyhow::Error) -> Value {
    match e.downcast_ref::<Error>() {
        Some(Error::Rejected { reason, witness }) => {
            json!({ "error": "rejected", "message": reason, "witness": witness })
        }
        Some(err) => json!({ "error": kind_name(err), "message": err.to_string() }),
        None => json!({ "error": "io", "message": format!("{e:#}") }),
    }
}

fn kind_name(e: &Error) -> &'static str {
    match e {
        Error::InvalidArgument(_) => "invalid-argument",
        Error::InvalidCertificate(_) => "invalid-certificate",
        Error::Rejected { .. } => "rejected",
        Error::ImproperColoring(..) => "improper-coloring",
        Error::PaletteExhausted { .. } => "palette-exhausted",
        Error::InsufficientPalette { .. } => "insufficient-palette",
        Error::Parse { .. } => "parse",
        Error::Internal(_) => "internal",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Params { file } => cmd_params(&file),
        Cmd::Recognize { file, class } => cmd_recognize(&file, class),
        Cmd::Color {
            file,
            method,
            cert,
            out,
        } => cmd_color(&file, method, cert.as_ref(), out.as_deref()),
        Cmd::Verify { file, bound, slack } => cmd_verify(&file, bound, slack),
        Cmd::Generate {
            family,
            n,
            seed,
            p,
            out,
        } => cmd_generate(&family, n, seed, p, &out),
        Cmd::Campaign { config } => cmd_campaign(&config),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{}", error_json(&e));
            ExitCode::from(2)
        }
    }
}
