//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 budget exhausted,
//! 3 verification failure.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::budget::{SearchBudget, SearchOutcome};
use crate::constructions::{build_phi_r, build_qclass_coloring, build_turan_extremal};
use crate::error::{Error, Result};
use crate::hypergraph::{ColoringDoc, EdgeColoring, PartProfile, SubHypergraph, SubHypergraphDoc};
use crate::matching::{has_k_matching, max_matching};
use crate::oracles::{
    ar_m2_formula, default_grid, route, verify_grid, write_csv, Cell, Claim, ClaimStatus, OracleLimits,
};
use crate::rainbow::{cyclic_slices, cyclic_slices_colored, find_rainbow_k, max_rainbow_matching, SliceReport, Strategy};
use crate::sampling::random_surjective_coloring;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_FAILED: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    #[default]
    Generic,
    SliceGuided,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Generic => Strategy::Generic,
            StrategyArg::SliceGuided => Strategy::slice_guided(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    Phi,
    Turan,
    Qclass,
    Complete,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SolveKind {
    Matching,
    Rainbow,
}

#[derive(Debug, Parser)]
#[command(name = "antiramsey", version, about = "Anti-Ramsey and Turán numbers of matchings in complete r-partite hypergraphs")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Part sizes, e.g. 5x5x5.
    #[arg(long, global = true)]
    pub profile: Option<String>,
    #[arg(long, global = true)]
    pub k: Option<usize>,
    /// Number of colors for fuzzing.
    #[arg(long, global = true)]
    pub colors: Option<u32>,
    #[arg(long, global = true, default_value_t = 100)]
    pub trials: u64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 10_000_000)]
    pub budget_nodes: u64,
    #[arg(long, global = true, default_value_t = 600_000)]
    pub budget_ms: u64,
    /// Worker threads; 1 runs everything on the calling thread.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    #[arg(long, global = true, value_enum, default_value_t = StrategyArg::Generic)]
    pub strategy: StrategyArg,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build an extremal object and write its JSON form.
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
    },
    /// Run the matching or rainbow solver on a serialized object.
    Solve {
        #[arg(value_enum)]
        kind: SolveKind,
        /// Subhypergraph or coloring JSON; defaults to the complete host.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Check closed forms on a grid of cells.
    Verify {
        /// JSON list of {"profile": "3x3", "k": 3}.
        #[arg(long)]
        grid: Option<PathBuf>,
    },
    /// Random surjective colorings against the rainbow finder.
    Fuzz,
    /// Cyclic slices along two equal-size parts.
    Slices {
        #[arg(long)]
        input: Option<PathBuf>,
        /// Parts `a,b` (1-based).
        #[arg(long, default_value = "1,2")]
        axis: String,
    },
}

/// Command outcome before it becomes an exit code.
enum Done {
    Ok,
    Budget,
    Failed,
}

impl RunConfig {
    pub fn budget(&self) -> Result<SearchBudget> {
        SearchBudget::new(self.budget_nodes, self.budget_ms, self.seed)
    }

    pub fn limits(&self) -> Result<OracleLimits> {
        let search = self.budget()?;
        Ok(OracleLimits {
            partition_nodes: self.budget_nodes,
            time_cap_ms: self.budget_ms,
            search,
            ..OracleLimits::default()
        })
    }

    fn profile(&self) -> Result<PartProfile> {
        self.profile
            .as_deref()
            .ok_or_else(|| Error::Parse("--profile is required".into()))?
            .parse()
    }

    fn k(&self) -> Result<usize> {
        self.k.ok_or_else(|| Error::Parse("--k is required".into()))
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        if self.workers == 0 {
            return Err(Error::Parse("--workers must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| Error::Io(e.to_string()))
    }

    fn emit_json(&self, value: &impl Serialize) -> Result<()> {
        let mut text = serde_json::to_string_pretty(value)?;
        text.push('\n');
        self.emit(&text)
    }

    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => fs::write(path, text)?,
            None => std::io::stdout().write_all(text.as_bytes())?,
        }
        Ok(())
    }
}

/// Parses the process arguments and runs; returns the exit code.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(&config) {
        Ok(Done::Ok) => EXIT_OK,
        Ok(Done::Budget) => EXIT_BUDGET,
        Ok(Done::Failed) => EXIT_FAILED,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(config: &RunConfig) -> Result<Done> {
    match &config.command {
        Command::Construct { kind } => construct(config, *kind),
        Command::Solve { kind, input } => solve(config, *kind, input.as_deref()),
        Command::Verify { grid } => verify(config, grid.as_deref()),
        Command::Fuzz => fuzz(config),
        Command::Slices { input, axis } => slices(config, input.as_deref(), axis),
    }
}

fn construct(config: &RunConfig, kind: ConstructKind) -> Result<Done> {
    let profile = config.profile()?;
    let doc: Value = match kind {
        ConstructKind::Phi => {
            let phi = build_phi_r(&profile, config.k()?)?;
            eprintln!("phi on {profile}: q={} edges={}", phi.q(), phi.domain().len());
            coloring_out(config, &phi)?
        }
        ConstructKind::Qclass => {
            let c = build_qclass_coloring(&profile)?;
            eprintln!("qclass on {profile}: q={} edges={}", c.q(), c.domain().len());
            coloring_out(config, &c)?
        }
        ConstructKind::Turan => {
            let t = build_turan_extremal(&profile, config.k()?)?;
            eprintln!("turan on {profile}: edges={}", t.len());
            sub_out(config, &t)?
        }
        ConstructKind::Complete => {
            let t = SubHypergraph::complete(&profile);
            eprintln!("complete {profile}: edges={}", t.len());
            sub_out(config, &t)?
        }
    };
    if !doc.is_null() {
        config.emit_json(&doc)?;
    }
    Ok(Done::Ok)
}

fn coloring_out(config: &RunConfig, c: &EdgeColoring) -> Result<Value> {
    if config.format == Format::Csv {
        let profile = c.profile();
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["rank", "edge", "color"]).map_err(csv_err)?;
        for id in c.domain().iter() {
            let color = c.color(id).expect("domain edge");
            w.write_record([id.0.to_string(), profile.edge_string(id), color.to_string()])
                .map_err(csv_err)?;
        }
        config.emit(&String::from_utf8(w.into_inner().map_err(|e| Error::Io(e.to_string()))?).expect("utf-8"))?;
        return Ok(Value::Null);
    }
    Ok(serde_json::to_value(c.to_doc())?)
}

fn sub_out(config: &RunConfig, s: &SubHypergraph) -> Result<Value> {
    if config.format == Format::Csv {
        let mut text = String::from("rank,edge\n");
        for id in s.iter() {
            text.push_str(&format!("{},\"{}\"\n", id.0, s.profile().edge_string(id)));
        }
        config.emit(&text)?;
        return Ok(Value::Null);
    }
    Ok(serde_json::to_value(s.to_doc())?)
}

fn csv_err(e: csv::Error) -> Error {
    Error::Parse(format!("csv: {e}"))
}

/// A serialized object: colorings carry `q` and `assignments`.
enum Input {
    Sub(SubHypergraph),
    Coloring(EdgeColoring),
}

fn read_input(path: &Path) -> Result<Input> {
    let text = fs::read_to_string(path)?;
    let value: Value = serde_json::from_str(&text)?;
    if value.get("assignments").is_some() {
        let doc: ColoringDoc = serde_json::from_value(value)?;
        Ok(Input::Coloring(EdgeColoring::from_doc(&doc)?))
    } else {
        let doc: SubHypergraphDoc = serde_json::from_value(value)?;
        Ok(Input::Sub(SubHypergraph::from_doc(&doc)?))
    }
}

fn load(config: &RunConfig, input: Option<&Path>) -> Result<Input> {
    match input {
        Some(p) => read_input(p),
        None => Ok(Input::Sub(SubHypergraph::complete(&config.profile()?))),
    }
}

fn solve(config: &RunConfig, kind: SolveKind, input: Option<&Path>) -> Result<Done> {
    let budget = config.budget()?;
    let input = load(config, input)?;
    let (report, complete) = match kind {
        SolveKind::Matching => {
            let sub = match input {
                Input::Sub(s) => s,
                Input::Coloring(c) => c.domain().clone(),
            };
            let profile = sub.profile().clone();
            match config.k {
                Some(k) => outcome_report("matching", &profile, has_k_matching(&sub, k, &budget), None, k),
                None => {
                    let r = max_matching(&sub, &budget);
                    (
                        json!({
                            "kind": "matching",
                            "verdict": if r.optimal { "maximum" } else { "indeterminate" },
                            "size": r.matching.len(),
                            "witness": r.matching.edge_strings(&profile),
                            "nodes": r.nodes,
                        }),
                        r.optimal,
                    )
                }
            }
        }
        SolveKind::Rainbow => {
            let coloring = match input {
                Input::Coloring(c) => c,
                Input::Sub(_) => {
                    return Err(Error::InvalidColoring("rainbow search needs a coloring input".into()))
                }
            };
            let profile = coloring.profile().clone();
            match config.k {
                Some(k) => {
                    let f = find_rainbow_k(&coloring, k, config.strategy.into(), &budget);
                    outcome_report("rainbow", &profile, f.outcome, Some(f.nodes), k)
                }
                None => {
                    let r = max_rainbow_matching(&coloring, &budget);
                    (
                        json!({
                            "kind": "rainbow",
                            "verdict": if r.optimal { "maximum" } else { "indeterminate" },
                            "size": r.matching.len(),
                            "witness": r.matching.edge_strings(&profile),
                            "colors": coloring.colors_of(r.matching.ids()),
                            "nodes": r.nodes,
                        }),
                        r.optimal,
                    )
                }
            }
        }
    };
    eprintln!("{}: {}", report["kind"].as_str().unwrap_or(""), report["verdict"].as_str().unwrap_or(""));
    config.emit_json(&report)?;
    Ok(if complete { Done::Ok } else { Done::Budget })
}

fn outcome_report(kind: &str, profile: &PartProfile, outcome: SearchOutcome, nodes: Option<u64>, k: usize) -> (Value, bool) {
    let witness = outcome.witness().map(|m| m.edge_strings(profile));
    (
        json!({
            "kind": kind,
            "k": k,
            "verdict": outcome.label(),
            "witness": witness,
            "nodes": nodes,
        }),
        !matches!(outcome, SearchOutcome::Indeterminate),
    )
}

fn read_grid(path: &Path) -> Result<Vec<Cell>> {
    let text = fs::read_to_string(path)?;
    let cells: Vec<Cell> = serde_json::from_str(&text)?;
    if cells.is_empty() {
        return Err(Error::Parse("grid file lists no cells".into()));
    }
    Ok(cells)
}

fn verify(config: &RunConfig, grid: Option<&Path>) -> Result<Done> {
    let cells = match grid {
        Some(p) => read_grid(p)?,
        None => default_grid(),
    };
    let limits = config.limits()?;
    let reports = config.pool()?.install(|| verify_grid(&cells, &limits));
    for r in &reports {
        eprintln!("{} k={}: {}", r.profile, r.k, r.status.as_str());
    }
    let mut csv_bytes = Vec::new();
    write_csv(&reports, &mut csv_bytes)?;
    let json_text = serde_json::to_string_pretty(&reports)? + "\n";
    let report_path = match &config.out {
        Some(out) => {
            let json_path = out.with_extension("json");
            let csv_path = out.with_extension("csv");
            fs::write(&json_path, &json_text)?;
            fs::write(&csv_path, &csv_bytes)?;
            eprintln!("wrote {} and {}", json_path.display(), csv_path.display());
            Some(json_path)
        }
        None => {
            let text = match config.format {
                Format::Json => json_text,
                Format::Csv => String::from_utf8(csv_bytes).expect("utf-8"),
            };
            std::io::stdout().write_all(text.as_bytes())?;
            None
        }
    };
    let failed: Vec<_> = reports.iter().filter(|r| r.failed()).collect();
    if failed.is_empty() {
        return Ok(Done::Ok);
    }
    for r in failed {
        for c in r.claims.iter().filter(|c| c.status == ClaimStatus::Failed) {
            eprintln!("FAILED {} k={} {:?}: {}", r.profile, r.k, c.claim, c.detail);
            if let Some(cx) = &c.counterexample {
                eprintln!("  counterexample: {cx}");
            }
        }
    }
    if let Some(p) = report_path {
        eprintln!("counterexamples in {}", p.display());
    }
    Ok(Done::Failed)
}

/// Closed form for `ar(M_k)` when a proven range covers the cell.
fn ar_closed_form(profile: &PartProfile, k: usize) -> Option<u64> {
    if k == 2 {
        return ar_m2_formula(profile);
    }
    let covered = route(Claim::MainAr, profile, k) == ClaimStatus::VerifiedExact
        || route(Claim::BipartiteAr, profile, k) == ClaimStatus::VerifiedExact;
    covered.then(|| (k as u64 - 2) * profile.tail_product() as u64 + 1)
}

#[derive(Serialize)]
struct Trial {
    trial: u64,
    verdict: &'static str,
    witness: Option<Vec<String>>,
    colors: Option<Vec<u32>>,
    via_slice: Option<usize>,
    nodes: u64,
}

#[derive(Serialize)]
struct FuzzSummary {
    profile: String,
    k: usize,
    colors: u32,
    trials: u64,
    seed: u64,
    strategy: &'static str,
    ar_closed_form: Option<u64>,
    /// Every trial must contain a rainbow `M_k`.
    asserted: bool,
    found: u64,
    absent: u64,
    indeterminate: u64,
    /// Trial indices that disprove the closed form; replay with the same seed.
    failures: Vec<u64>,
    results: Vec<Trial>,
}

fn fuzz(config: &RunConfig) -> Result<Done> {
    let profile = config.profile()?;
    let k = config.k()?;
    let q = config.colors.ok_or_else(|| Error::Parse("--colors is required".into()))?;
    if config.trials == 0 {
        return Err(Error::Parse("--trials must be at least 1".into()));
    }
    if k == 0 {
        return Err(Error::Parse("--k must be at least 1".into()));
    }
    let budget = config.budget()?;
    // fail fast on an impossible color count
    random_surjective_coloring(&profile, q, config.seed, 0)?;
    let strategy: Strategy = config.strategy.into();
    let closed = ar_closed_form(&profile, k);
    let asserted = closed.is_some_and(|a| q as u64 > a);

    let results: Vec<Trial> = config.pool()?.install(|| {
        (0..config.trials)
            .into_par_iter()
            .map(|i| {
                let coloring = random_surjective_coloring(&profile, q, config.seed, i).expect("checked above");
                let f = find_rainbow_k(&coloring, k, strategy, &budget);
                let witness = f.outcome.witness();
                Trial {
                    trial: i,
                    verdict: f.outcome.label(),
                    witness: witness.map(|m| m.edge_strings(&profile)),
                    colors: witness.map(|m| coloring.colors_of(m.ids())),
                    via_slice: f.via_slice,
                    nodes: f.nodes,
                }
            })
            .collect()
    });
    let count = |v: &str| results.iter().filter(|t| t.verdict == v).count() as u64;
    let (found, absent, indeterminate) = (count("found"), count("absent"), count("indeterminate"));
    let failures: Vec<u64> = if asserted {
        results.iter().filter(|t| t.verdict == "absent").map(|t| t.trial).collect()
    } else {
        Vec::new()
    };
    let summary = FuzzSummary {
        profile: profile.to_string(),
        k,
        colors: q,
        trials: config.trials,
        seed: config.seed,
        strategy: match config.strategy {
            StrategyArg::Generic => "generic",
            StrategyArg::SliceGuided => "slice-guided",
        },
        ar_closed_form: closed,
        asserted,
        found,
        absent,
        indeterminate,
        failures,
        results,
    };
    eprintln!(
        "fuzz {profile} k={k} q={q}: {found}/{} rainbow M_{k} found, {absent} absent, {indeterminate} indeterminate",
        config.trials
    );
    match config.format {
        Format::Json => config.emit_json(&summary)?,
        Format::Csv => {
            let mut text = String::from("trial,verdict,nodes\n");
            for t in &summary.results {
                text.push_str(&format!("{},{},{}\n", t.trial, t.verdict, t.nodes));
            }
            config.emit(&text)?;
        }
    }
    if !summary.failures.is_empty() {
        for t in &summary.failures {
            eprintln!("FAILED trial {t} (seed {}): no rainbow M_{k}", config.seed);
        }
        Ok(Done::Failed)
    } else if summary.indeterminate > 0 {
        Ok(Done::Budget)
    } else {
        Ok(Done::Ok)
    }
}

fn parse_axis(s: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = s.split(',').collect();
    match parts.as_slice() {
        [a, b] => Ok((
            a.trim().parse().map_err(|_| Error::Parse(format!("bad axis {s:?}")))?,
            b.trim().parse().map_err(|_| Error::Parse(format!("bad axis {s:?}")))?,
        )),
        _ => Err(Error::Parse(format!("axis must look like 1,2 (got {s:?})"))),
    }
}

fn slices(config: &RunConfig, input: Option<&Path>, axis: &str) -> Result<Done> {
    let axis = parse_axis(axis)?;
    let views = match load(config, input)? {
        Input::Sub(s) => cyclic_slices(&s, axis)?,
        Input::Coloring(c) => cyclic_slices_colored(&c, axis)?,
    };
    let reports: Vec<SliceReport> = views.iter().map(|v| v.report()).collect();
    for r in &reports {
        eprintln!("slice {}: {} edges, {} colors", r.slice, r.edges.len(), r.colors);
    }
    config.emit_json(&reports)?;
    Ok(Done::Ok)
}
