//! Command-line interface: argument types, graph loading and the commands.

use std::path::PathBuf;
use std::str::FromStr;

use amnesiac_core::analysis::{audit_lemmas, classify, find_sharp_with, SharpTarget, SHARP_MAX_NODES};
use amnesiac_core::asynchronous::{
    run_async, Adversary, AsyncOutcome, RandomHoldAdversary, TriangleHoldAdversary, ZeroDelayAdversary,
};
use amnesiac_core::graph::NamedGraph;
use amnesiac_core::sync::{default_max_rounds, run_sync};
use amnesiac_core::{Graph, NodeId};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::edge_list::{parse_edge_list, render_edge_list};
use crate::parallel::parallel_sweep;
use crate::{json, CliError, ExitStatus};

/// Environment variable overriding every random seed.
pub const SEED_ENV: &str = "AMNESIA_SEED";

pub const DEFAULT_ASYNC_MAX_ROUNDS: usize = 64;
pub const DEFAULT_HOLD_CAP: u32 = 1;
const RANDOM_HOLD_PROBABILITY: f64 = 0.5;

#[derive(Debug, Parser)]
#[command(name = "amnesiac", version, about = "Simulate and verify amnesiac flooding on finite graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Flood a graph and print the trace (sync) or the verdict (async).
    Run(RunArgs),
    /// Classify a run against the termination window and audit its trace.
    Analyze(AnalyzeArgs),
    /// Check every connected labeled graph up to N nodes from every source.
    Sweep(SweepArgs),
    /// Search for graphs where flooding takes exactly e + d + 1 rounds.
    Sharp(SharpArgs),
    /// Print a graph as an edge list.
    Graph(GraphArgs),
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSourceArgs {
    /// Edge-list file.
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,
    /// hypercube:K, petersen, cycle:N, path:N, complete:N or triangle.
    #[arg(long, value_name = "KIND[:P]")]
    pub named: Option<NamedSpec>,
    /// Erdős–Rényi G(n, p) with a seed.
    #[arg(long, value_name = "N,P,SEED")]
    pub random: Option<RandomSpec>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub graph: GraphSourceArgs,
    /// Source node id or label.
    #[arg(long, default_value = "0")]
    pub source: String,
    /// sync, or async:ADVERSARY[,HOLD_CAP] with ADVERSARY one of zero, fig6
    /// (alias triangle-hold) or random.
    #[arg(long, default_value = "sync")]
    pub mode: Mode,
    /// Round budget; defaults to 2n+2 for sync and 64 for async.
    #[arg(long, value_name = "K")]
    pub max_rounds: Option<usize>,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub graph: GraphSourceArgs,
    #[arg(long, default_value = "0")]
    pub source: String,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_name = "N")]
    pub n_max: usize,
    #[arg(long, value_name = "J", default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SharpArgs {
    #[arg(long, value_name = "N", default_value_t = SHARP_MAX_NODES)]
    pub n_max: usize,
    /// Look for this eccentricity and diameter instead of any e < d.
    #[arg(long, value_name = "E,D")]
    pub target: Option<TargetSpec>,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub graph: GraphSourceArgs,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NamedSpec(pub NamedGraph);

impl FromStr for NamedSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, param) = match s.split_once(':') {
            Some((k, p)) => (k, Some(p)),
            None => (s, None),
        };
        let param = |name: &str| -> Result<usize, String> {
            param
                .ok_or_else(|| format!("{name} needs a parameter, e.g. {name}:4"))?
                .parse()
                .map_err(|_| format!("bad parameter in {s:?}"))
        };
        let named = match kind {
            "hypercube" => NamedGraph::Hypercube(param("hypercube")? as u32),
            "petersen" => NamedGraph::Petersen,
            "triangle" => NamedGraph::Cycle(3),
            "cycle" => NamedGraph::Cycle(param("cycle")?),
            "path" => NamedGraph::Path(param("path")?),
            "complete" => NamedGraph::Complete(param("complete")?),
            other => return Err(format!("unknown graph kind {other:?}")),
        };
        Ok(NamedSpec(named))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomSpec {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

impl FromStr for RandomSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [n, p, seed] = parts[..] else {
            return Err(format!("expected N,P,SEED, got {s:?}"));
        };
        Ok(RandomSpec {
            n: n.parse().map_err(|_| format!("bad node count {n:?}"))?,
            p: p.parse().map_err(|_| format!("bad probability {p:?}"))?,
            seed: seed.parse().map_err(|_| format!("bad seed {seed:?}"))?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TargetSpec {
    pub eccentricity: usize,
    pub diameter: usize,
}

impl FromStr for TargetSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (e, d) = s.split_once(',').ok_or_else(|| format!("expected E,D, got {s:?}"))?;
        Ok(TargetSpec {
            eccentricity: e.trim().parse().map_err(|_| format!("bad eccentricity {e:?}"))?,
            diameter: d.trim().parse().map_err(|_| format!("bad diameter {d:?}"))?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdversaryName {
    Zero,
    TriangleHold,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Sync,
    Async { adversary: AdversaryName, hold_cap: u32 },
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "sync" {
            return Ok(Mode::Sync);
        }
        let rest = s
            .strip_prefix("async:")
            .ok_or_else(|| format!("mode must be sync or async:NAME[,HOLD_CAP], got {s:?}"))?;
        let (name, cap) = match rest.split_once(',') {
            Some((n, c)) => (n, Some(c)),
            None => (rest, None),
        };
        let adversary = match name {
            "zero" | "zero-delay" => AdversaryName::Zero,
            "fig6" | "triangle-hold" => AdversaryName::TriangleHold,
            "random" => AdversaryName::Random,
            other => return Err(format!("unknown adversary {other:?}")),
        };
        let hold_cap = match cap {
            None => DEFAULT_HOLD_CAP,
            Some(c) => c.parse().ok().filter(|&c| c >= 1).ok_or_else(|| format!("bad hold cap {c:?}"))?,
        };
        Ok(Mode::Async { adversary, hold_cap })
    }
}

/// Where a graph comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphSource {
    File(PathBuf),
    Named(NamedGraph),
    Random { n: usize, p: f64, seed: u64 },
}

impl From<&GraphSourceArgs> for GraphSource {
    fn from(args: &GraphSourceArgs) -> Self {
        match (&args.graph, args.named, args.random) {
            (Some(path), _, _) => GraphSource::File(path.clone()),
            (_, Some(NamedSpec(kind)), _) => GraphSource::Named(kind),
            (_, _, Some(RandomSpec { n, p, seed })) => GraphSource::Random { n, p, seed },
            _ => unreachable!("clap requires exactly one graph source"),
        }
    }
}

impl GraphSource {
    /// Loads the graph; `seed_override` replaces the seed of random graphs.
    pub fn load(&self, seed_override: Option<u64>) -> Result<Graph, CliError> {
        Ok(match self {
            GraphSource::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|source| CliError::Read { path: path.clone(), source })?;
                parse_edge_list(&text)?
            }
            GraphSource::Named(kind) => Graph::named(*kind)?,
            GraphSource::Random { n, p, seed } => Graph::random(*n, *p, seed_override.unwrap_or(*seed))?,
        })
    }
}

/// A fully resolved `run` request.
#[derive(Clone, Debug, PartialEq)]
pub struct RunSpec {
    pub graph_source: GraphSource,
    pub source_node: String,
    pub mode: Mode,
    pub max_rounds: Option<usize>,
    pub output: Option<PathBuf>,
}

impl From<&RunArgs> for RunSpec {
    fn from(args: &RunArgs) -> Self {
        RunSpec {
            graph_source: (&args.graph).into(),
            source_node: args.source.clone(),
            mode: args.mode,
            max_rounds: args.max_rounds,
            output: args.out.clone(),
        }
    }
}

/// What a command produced: text for the output stream and an exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub status: ExitStatus,
}

fn resolve(g: &Graph, name: &str) -> Result<NodeId, CliError> {
    g.resolve(name).ok_or_else(|| CliError::UnknownNode(name.to_owned()))
}

fn connected_graph(source: &GraphSource, seed_override: Option<u64>) -> Result<Graph, CliError> {
    let g = source.load(seed_override)?;
    if !g.is_connected() {
        return Err(amnesiac_core::Error::Disconnected.into());
    }
    Ok(g)
}

pub fn cmd_run(spec: &RunSpec, seed_override: Option<u64>) -> Result<Output, CliError> {
    let g = connected_graph(&spec.graph_source, seed_override)?;
    let source = resolve(&g, &spec.source_node)?;
    match spec.mode {
        Mode::Sync => {
            let max_rounds = spec.max_rounds.unwrap_or_else(|| default_max_rounds(g.node_count()));
            let trace = run_sync(&g, source, max_rounds)?;
            Ok(Output { text: json::to_line(&json::trace(&g, &trace)), status: ExitStatus::Success })
        }
        Mode::Async { adversary, hold_cap } => {
            let mut adversary: Box<dyn Adversary> = match adversary {
                AdversaryName::Zero => Box::new(ZeroDelayAdversary),
                AdversaryName::TriangleHold => Box::new(TriangleHoldAdversary),
                AdversaryName::Random => {
                    Box::new(RandomHoldAdversary::new(seed_override.unwrap_or(0), RANDOM_HOLD_PROBABILITY))
                }
            };
            let max_rounds = spec.max_rounds.unwrap_or(DEFAULT_ASYNC_MAX_ROUNDS);
            let verdict = run_async(&g, source, adversary.as_mut(), max_rounds, hold_cap)?;
            let status = match verdict.outcome {
                AsyncOutcome::Terminated { .. } => ExitStatus::Success,
                AsyncOutcome::CycleDetected { .. } => ExitStatus::CycleDetected,
                AsyncOutcome::Exhausted { .. } => ExitStatus::Exhausted,
            };
            let value = json::async_run(&verdict, adversary.as_ref(), hold_cap);
            Ok(Output { text: json::to_line(&value), status })
        }
    }
}

pub fn cmd_analyze(graph: &GraphSource, node: &str, seed_override: Option<u64>) -> Result<Output, CliError> {
    let g = connected_graph(graph, seed_override)?;
    let source = resolve(&g, node)?;
    let report = classify(&g, source)?;
    let trace = run_sync(&g, source, default_max_rounds(g.node_count()))?;
    let audit = audit_lemmas(&g, source, &trace)?;
    let status = if report.window_ok && audit.all_passed() {
        ExitStatus::Success
    } else {
        ExitStatus::Violation
    };
    let value = json!({
        "classification": json::classification(&report),
        "audit": json::audit(&audit),
    });
    Ok(Output { text: json::to_line(&value), status })
}

pub fn cmd_sweep(n_max: usize, jobs: usize) -> Result<Output, CliError> {
    let summary = parallel_sweep(n_max, jobs)?;
    let status = if summary.is_clean() { ExitStatus::Success } else { ExitStatus::Violation };
    Ok(Output { text: json::to_line(&json::sweep(&summary)), status })
}

pub fn cmd_sharp(n_max: usize, target: Option<TargetSpec>) -> Result<Output, CliError> {
    let target = match target {
        None => SharpTarget::EccentricityBelowDiameter,
        Some(TargetSpec { eccentricity, diameter }) => SharpTarget::Exact { eccentricity, diameter },
    };
    let search = find_sharp_with(n_max, target)?;
    Ok(Output { text: json::to_line(&json::sharp(&search)), status: ExitStatus::Success })
}

pub fn cmd_graph(graph: &GraphSource, seed_override: Option<u64>) -> Result<Output, CliError> {
    let g = graph.load(seed_override)?;
    Ok(Output { text: render_edge_list(&g), status: ExitStatus::Success })
}

/// Reads the seed override from the environment.
pub fn seed_from_env() -> Result<Option<u64>, CliError> {
    match std::env::var(SEED_ENV) {
        Ok(value) => value
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::BadArgument(format!("{SEED_ENV} must be an unsigned integer, got {value:?}"))),
        Err(_) => Ok(None),
    }
}

/// Runs a parsed command line and delivers its output. Returns the exit
/// status; errors are reported on stderr.
pub fn execute(cli: &Cli) -> ExitStatus {
    match dispatch(cli) {
        Ok(status) => status,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_status()
        }
    }
}

fn dispatch(cli: &Cli) -> Result<ExitStatus, CliError> {
    let seed = seed_from_env()?;
    let (output, out) = match &cli.command {
        Command::Run(args) => (cmd_run(&RunSpec::from(args), seed)?, &args.out),
        Command::Analyze(args) => (cmd_analyze(&(&args.graph).into(), &args.source, seed)?, &args.out),
        Command::Sweep(args) => (cmd_sweep(args.n_max, args.jobs)?, &args.out),
        Command::Sharp(args) => (cmd_sharp(args.n_max, args.target)?, &args.out),
        Command::Graph(args) => (cmd_graph(&(&args.graph).into(), seed)?, &args.out),
    };
    match out {
        Some(path) => std::fs::write(path, &output.text)
            .map_err(|source| CliError::Write { path: path.clone(), source })?,
        None => print!("{}", output.text),
    }
    Ok(output.status)
}
