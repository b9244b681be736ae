//! Command-line front end: `replicate`, `fit`, `compare`, `scaling-study`,
//! `bench` and `profile`.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bench::{timed_suite, write_bench_csv, SuiteOptions};
use crate::community::{read_partition, Partition};
use crate::error::{Error, Result};
use crate::graph::{read_edge_list, write_edge_list, DiameterMode, Graph};
use crate::metrics::{
    centrality_distributions, compare_graphs, profile_with, quantile_summary, CompareOptions, ProfileOptions, QUANTILES,
};
use crate::models::{self, FitOptions, Initiator, InitiatorChoice, ModelKind, ModelParams};
use crate::recon::{fit_recon, generate_with, ReconModel, ReconOptions};
use crate::rng::DEFAULT_SEED;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "recon", version, about = "Fit network models and build scaled replicas")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit a model to a graph and write a scaled replica plus JSON metadata.
    Replicate(ReplicateArgs),
    /// Print fitted model parameters as JSON.
    Fit(FitArgs),
    /// Profile two graphs and report replica/original ratios.
    Compare(CompareArgs),
    /// Feature vectors of replicas over several scales and seeds, as CSV.
    ScalingStudy(ScalingArgs),
    /// Time the algorithm suite on each input, as CSV.
    Bench(BenchArgs),
    /// Print the feature vector of a graph as JSON.
    Profile(ProfileArgs),
}

/// A model that can produce replicas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReplicaModel {
    Recon,
    Baseline(ModelKind),
}

impl FromStr for ReplicaModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("recon") {
            return Ok(ReplicaModel::Recon);
        }
        let kind: ModelKind = s.parse()?;
        if !kind.can_generate() {
            return Err(Error::UnsupportedModel(format!("{kind} has no generator; use `fit`")));
        }
        Ok(ReplicaModel::Baseline(kind))
    }
}

impl std::fmt::Display for ReplicaModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ReplicaModel::Recon => f.write_str("recon"),
            ReplicaModel::Baseline(k) => k.fmt(f),
        }
    }
}

/// A model whose parameters can be fitted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FitModel {
    Recon,
    Baseline(ModelKind),
}

impl FromStr for FitModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("recon") {
            Ok(FitModel::Recon)
        } else {
            s.parse().map(FitModel::Baseline)
        }
    }
}

/// RMAT initiator selection: `preset`, `random`, or `a,b,c,d`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum InitiatorArg {
    Preset,
    Random,
    Given(Initiator),
}

impl FromStr for InitiatorArg {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "preset" => Ok(InitiatorArg::Preset),
            "random" => Ok(InitiatorArg::Random),
            other => other.parse().map(InitiatorArg::Given),
        }
    }
}

impl InitiatorArg {
    fn choice(self, seed: u64) -> InitiatorChoice {
        match self {
            InitiatorArg::Preset => InitiatorChoice::Caltech36,
            InitiatorArg::Random => InitiatorChoice::Random(seed),
            InitiatorArg::Given(init) => InitiatorChoice::Given(init),
        }
    }
}

fn parse_with<T: FromStr<Err = Error>>(s: &str) -> std::result::Result<T, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct Common {
    /// Seed for every random choice.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads for ReCoN community chains and centralities.
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Args)]
pub struct ReplicateArgs {
    pub input: PathBuf,
    /// recon, er, ba, cl, esmc or rmat.
    #[arg(long, default_value = "recon", value_parser = parse_with::<ReplicaModel>)]
    pub model: ReplicaModel,
    #[arg(long, default_value_t = 1)]
    pub scale: usize,
    /// Community assignment file used instead of PLM (recon only).
    #[arg(long)]
    pub partition: Option<PathBuf>,
    /// Replica edge list.
    #[arg(long)]
    pub out: PathBuf,
    /// Metadata JSON; defaults to the output path with `.json` appended.
    #[arg(long)]
    pub meta: Option<PathBuf>,
    /// RMAT initiator: preset, random, or a,b,c,d.
    #[arg(long, default_value = "preset", value_parser = parse_with::<InitiatorArg>)]
    pub initiator: InitiatorArg,
    /// Leave wall-clock timings out of the metadata.
    #[arg(long)]
    pub no_timings: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    pub input: PathBuf,
    /// recon, er, ba, cl, esmc, rmat, hudg or lfr.
    #[arg(long, default_value = "recon", value_parser = parse_with::<FitModel>)]
    pub model: FitModel,
    #[arg(long, default_value_t = 1)]
    pub scale: usize,
    #[arg(long)]
    pub partition: Option<PathBuf>,
    #[arg(long, default_value = "preset", value_parser = parse_with::<InitiatorArg>)]
    pub initiator: InitiatorArg,
    /// Write the JSON here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    pub original: PathBuf,
    pub replica: PathBuf,
    #[arg(long, default_value = "exact", value_parser = parse_with::<DiameterMode>)]
    pub diameter: DiameterMode,
    /// JSON report path; stdout when neither --json nor --csv is given.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Per-feature CSV path.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct ScalingArgs {
    pub input: PathBuf,
    #[arg(long, default_value = "recon", value_parser = parse_with::<ReplicaModel>)]
    pub model: ReplicaModel,
    /// Comma-separated scale factors.
    #[arg(long, value_delimiter = ',', num_args = 0.., default_value = "1,2,4,8,16,32")]
    pub scales: Vec<usize>,
    /// Number of seeds per scale: seed, seed+1, ...
    #[arg(long, default_value_t = 1)]
    pub seeds: u64,
    #[arg(long, default_value = "exact", value_parser = parse_with::<DiameterMode>)]
    pub diameter: DiameterMode,
    #[arg(long, default_value = "preset", value_parser = parse_with::<InitiatorArg>)]
    pub initiator: InitiatorArg,
    /// CSV path; stdout by default.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    /// Timed repetitions per algorithm (mean reported).
    #[arg(long, default_value_t = 1)]
    pub reps: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    pub input: PathBuf,
    #[arg(long, default_value = "exact", value_parser = parse_with::<DiameterMode>)]
    pub diameter: DiameterMode,
    /// Add normalized centrality quantiles.
    #[arg(long)]
    pub centralities: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Replicate(a) => cmd_replicate(&a),
        Command::Fit(a) => cmd_fit(&a),
        Command::Compare(a) => cmd_compare(&a),
        Command::ScalingStudy(a) => cmd_scaling_study(&a),
        Command::Bench(a) => cmd_bench(&a),
        Command::Profile(a) => cmd_profile(&a),
    }
}

fn load(path: &Path) -> Result<Graph> {
    let loaded = read_edge_list(path).map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })?;
    if loaded.dropped.duplicates + loaded.dropped.self_loops > 0 {
        log::warn!(
            "{}: dropped {} duplicate edges and {} self-loops",
            path.display(),
            loaded.dropped.duplicates,
            loaded.dropped.self_loops
        );
    }
    Ok(loaded.graph)
}

fn load_partition(path: Option<&PathBuf>, g: &Graph) -> Result<Option<Partition>> {
    path.map(|p| read_partition(p, g)).transpose()
}

fn check_scale(scale: usize) -> Result<()> {
    if scale == 0 {
        return Err(Error::Usage("--scale must be a positive integer".into()));
    }
    Ok(())
}

/// Output sink: a file, or stdout when no path is given.
fn sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| Error::io(p, e))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json(path: Option<&Path>, value: &impl Serialize) -> Result<()> {
    let mut out = sink(path)?;
    let io_err = |e| Error::io(path.unwrap_or(Path::new("<stdout>")), e);
    serde_json::to_writer_pretty(&mut out, value)?;
    out.write_all(b"\n").map_err(io_err)?;
    out.flush().map_err(io_err)
}

/// Removes every `ms_*` key, recursively.
fn strip_timings(value: &mut Value) {
    match value {
        Value::Object(map) => {
            map.retain(|k, _| !k.starts_with("ms_"));
            map.values_mut().for_each(strip_timings);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timings),
        _ => {}
    }
}

fn ms_since(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Parameters with long degree lists reduced to length, sum and maximum.
fn params_summary(params: &ModelParams) -> Result<Value> {
    let mut value = serde_json::to_value(params)?;
    if let ModelParams::Cl { degrees } | ModelParams::Esmc { degrees } = params {
        value["degrees"] = json!({
            "len": degrees.len(),
            "sum": degrees.sum(),
            "max": degrees.max(),
        });
    }
    if let ModelParams::Rmat { .. } = params {
        value["note"] = json!("initiator is a preset or random substitute, not fitted to the input");
    }
    Ok(value)
}

fn recon_summary(model: &ReconModel) -> Value {
    json!({
        "model": "recon",
        "n": model.n,
        "m": model.m(),
        "k": model.k(),
        "mixing": model.mixing(),
        "community_sizes": model.community_sizes,
        "intra_edges": model.intra_edge_counts(),
        "inter_edges": model.inter_edges.len(),
    })
}

struct Generated {
    graph: Graph,
    params: Value,
    info: Value,
    ms_fit: f64,
    ms_generate: f64,
}

fn build_replica(
    g: &Graph,
    model: ReplicaModel,
    scale: usize,
    seed: u64,
    threads: usize,
    partition: Option<&Partition>,
    initiator: InitiatorArg,
) -> Result<Generated> {
    check_scale(scale)?;
    match model {
        ReplicaModel::Recon => {
            let start = Instant::now();
            let fitted = fit_recon(g, partition, seed)?;
            let ms_fit = ms_since(start);
            let opts = ReconOptions {
                threads,
                ..ReconOptions::default()
            };
            let replica = generate_with(&fitted, scale, seed, &opts)?;
            Ok(Generated {
                ms_generate: replica.info.ms_generate,
                params: recon_summary(&fitted),
                info: serde_json::to_value(&replica.info)?,
                graph: replica.graph,
                ms_fit,
            })
        }
        ReplicaModel::Baseline(kind) => {
            if partition.is_some() {
                return Err(Error::Usage("--partition only applies to recon".into()));
            }
            let start = Instant::now();
            let opts = FitOptions {
                initiator: initiator.choice(seed),
                seed,
            };
            let params = models::fit_with(g, kind, scale, &opts)?;
            let ms_fit = ms_since(start);
            let start = Instant::now();
            let graph = models::generate(&params, seed)?;
            Ok(Generated {
                ms_generate: ms_since(start),
                params: params_summary(&params)?,
                info: json!({ "scale": scale, "seed": seed }),
                graph,
                ms_fit,
            })
        }
    }
}

fn cmd_replicate(a: &ReplicateArgs) -> Result<()> {
    let g = load(&a.input)?;
    let partition = load_partition(a.partition.as_ref(), &g)?;
    let r = build_replica(
        &g,
        a.model,
        a.scale,
        a.common.seed,
        a.common.threads,
        partition.as_ref(),
        a.initiator,
    )?;
    write_edge_list(&r.graph, &a.out)?;
    let mut meta = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "replicate",
        "input": a.input.display().to_string(),
        "output": a.out.display().to_string(),
        "model": a.model.to_string(),
        "scale": a.scale,
        "seed": a.common.seed,
        "threads": a.common.threads,
        "original": { "n": g.n(), "m": g.m() },
        "replica": { "n": r.graph.n(), "m": r.graph.m() },
        "params": r.params,
        "generation": r.info,
        "timings": { "ms_fit": r.ms_fit, "ms_generate": r.ms_generate },
    });
    if a.no_timings {
        strip_timings(&mut meta);
        meta.as_object_mut().expect("object").remove("timings");
    }
    let meta_path = a.meta.clone().unwrap_or_else(|| {
        let mut p = a.out.clone().into_os_string();
        p.push(".json");
        PathBuf::from(p)
    });
    write_json(Some(&meta_path), &meta)
}

fn cmd_fit(a: &FitArgs) -> Result<()> {
    check_scale(a.scale)?;
    let g = load(&a.input)?;
    let partition = load_partition(a.partition.as_ref(), &g)?;
    let params = match a.model {
        FitModel::Recon => recon_summary(&fit_recon(&g, partition.as_ref(), a.common.seed)?),
        FitModel::Baseline(kind) => {
            if partition.is_some() {
                return Err(Error::Usage("--partition only applies to recon".into()));
            }
            let opts = FitOptions {
                initiator: a.initiator.choice(a.common.seed),
                seed: a.common.seed,
            };
            serde_json::to_value(models::fit_with(&g, kind, a.scale, &opts)?)?
        }
    };
    let report = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "fit",
        "input": a.input.display().to_string(),
        "scale": a.scale,
        "seed": a.common.seed,
        "params": params,
    });
    write_json(a.out.as_deref(), &report)
}

fn cmd_compare(a: &CompareArgs) -> Result<()> {
    let original = load(&a.original)?;
    let replica = load(&a.replica)?;
    let opts = CompareOptions {
        profile: ProfileOptions {
            diameter: a.diameter,
            seed: a.common.seed,
        },
        threads: a.common.threads,
    };
    let report = compare_graphs(&original, &replica, &opts)?;
    if let Some(path) = &a.csv {
        let file = File::create(path).map_err(|e| Error::io(path, e))?;
        report.write_csv(BufWriter::new(file))?;
    }
    if a.json.is_some() || a.csv.is_none() {
        let value = json!({
            "schema_version": SCHEMA_VERSION,
            "command": "compare",
            "original_path": a.original.display().to_string(),
            "replica_path": a.replica.display().to_string(),
            "seed": a.common.seed,
            "report": report,
        });
        write_json(a.json.as_deref(), &value)?;
    }
    Ok(())
}

/// One row of `scaling-study` output.
#[derive(Clone, Debug, Serialize)]
pub struct ScalingRow {
    pub model: String,
    pub scale: usize,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub degree_gini: f64,
    pub avg_clustering: f64,
    pub diameter: f64,
    pub diameter_mode: DiameterMode,
    pub components: usize,
    pub communities: usize,
    pub nontrivial_communities: usize,
}

fn cmd_scaling_study(a: &ScalingArgs) -> Result<()> {
    if a.scales.is_empty() {
        return Err(Error::Usage("--scales needs at least one value".into()));
    }
    if a.seeds == 0 {
        return Err(Error::Usage("--seeds must be at least 1".into()));
    }
    for &s in &a.scales {
        check_scale(s)?;
    }
    let g = load(&a.input)?;
    let mut w = csv::Writer::from_writer(sink(a.out.as_deref())?);
    for &scale in &a.scales {
        for i in 0..a.seeds {
            let seed = a.common.seed.wrapping_add(i);
            let r = build_replica(&g, a.model, scale, seed, a.common.threads, None, a.initiator)?;
            let f = profile_with(
                &r.graph,
                &ProfileOptions {
                    diameter: a.diameter,
                    seed,
                },
            )?;
            w.serialize(ScalingRow {
                model: a.model.to_string(),
                scale,
                seed,
                n: f.n,
                m: f.m,
                max_degree: f.max_degree,
                degree_gini: f.degree_gini,
                avg_clustering: f.avg_clustering,
                diameter: f.diameter,
                diameter_mode: f.diameter_mode,
                components: f.components,
                communities: f.communities,
                nontrivial_communities: f.nontrivial_communities,
            })?;
        }
    }
    w.flush().map_err(|e| Error::Csv(e.into()))
}

fn cmd_bench(a: &BenchArgs) -> Result<()> {
    let graphs = a
        .inputs
        .iter()
        .map(|p| load(p).map(|g| (p.display().to_string(), g)))
        .collect::<Result<Vec<_>>>()?;
    let opts = SuiteOptions {
        reps: a.reps,
        seed: a.seed,
    };
    let mut records = Vec::new();
    for (label, g) in &graphs {
        match timed_suite(g, label, &opts) {
            Ok(rows) => records.extend(rows),
            Err(e) => eprintln!("{label}: {e}"),
        }
    }
    write_bench_csv(&records, sink(a.out.as_deref())?)
}

fn cmd_profile(a: &ProfileArgs) -> Result<()> {
    let g = load(&a.input)?;
    let features = profile_with(
        &g,
        &ProfileOptions {
            diameter: a.diameter,
            seed: a.common.seed,
        },
    )?;
    let mut report = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "profile",
        "input": a.input.display().to_string(),
        "seed": a.common.seed,
        "features": features,
    });
    if a.centralities {
        let dists = centrality_distributions(&g, a.common.seed, a.common.threads)?;
        let summary: serde_json::Map<String, Value> = dists
            .iter()
            .map(|(c, xs)| (c.name().to_string(), json!(quantile_summary(xs))))
            .collect();
        report["quantiles"] = json!(QUANTILES);
        report["centralities"] = Value::Object(summary);
    }
    write_json(a.out.as_deref(), &report)
}
