use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use routelab::axioms::{check, run_suite, AxiomId, CheckParams, OrdinalReading};
use routelab::corpus::{generate, Corpus, CorpusSpec, WeightDistribution};
use routelab::format::{emit_dot, parse_graph, write_graph, write_tree_edges};
use routelab::oracle::{certify_tree, Criterion};
use routelab::tightness::{grid, run_tightness, Status, TightnessCase, TightnessParams};
use routelab::{AlgorithmId, Graph, NodeId, Ratio, Weight};

/// Routing functions on weighted graphs and the axioms that characterize them.
#[derive(Parser)]
#[command(name = "routelab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the routing tree of a graph file, one `e u v w` line per edge.
    Route {
        graph: PathBuf,
        #[arg(long)]
        algo: String,
        /// Destination; defaults to the one declared in the file.
        #[arg(long)]
        dest: Option<usize>,
        /// Also write the graph with its tree highlighted as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check one axiom on one graph and print the report as JSON.
    Check {
        graph: PathBuf,
        #[arg(long)]
        algo: String,
        #[arg(long)]
        axiom: String,
        #[arg(long)]
        dest: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random samples per sampling checker.
        #[arg(long)]
        trials: Option<usize>,
        #[command(flatten)]
        reading: ReadingArgs,
    },
    /// Check a list of axioms over a generated corpus.
    Suite {
        #[arg(long)]
        algo: String,
        /// Comma-separated axiom names or codes, e.g. `1,2,3,4d,7`.
        #[arg(long, default_value = "1,2,3,4,4d,5,6,7")]
        axioms: String,
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Write the JSON here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
        #[command(flatten)]
        reading: ReadingArgs,
    },
    /// Generate one random graph in the file format.
    Gen {
        #[arg(long, default_value_t = 5)]
        nodes: usize,
        #[arg(long, default_value = "1/2")]
        density: String,
        #[arg(long, default_value_t = 1)]
        min_weight: i64,
        #[arg(long, default_value_t = 100)]
        max_weight: i64,
        /// Allow repeated weights.
        #[arg(long)]
        ties: bool,
        /// Exactly one cycle.
        #[arg(long)]
        unicyclic: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write the graph here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify a routing tree against every spanning tree or simple path.
    OracleVerify {
        graph: PathBuf,
        #[arg(long)]
        algo: String,
        #[arg(long)]
        dest: Option<usize>,
    },
    /// Drop one axiom from a characterization and look for another function
    /// that keeps the rest.
    Tightness {
        /// `mst`, `shortest-path` or `weakest-link`; omit with `--all`.
        target: Option<String>,
        #[arg(long, conflicts_with = "all")]
        drop: Option<String>,
        /// Run every cell of the grid.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write the JSON here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CorpusArgs {
    /// General graphs; half as many unicyclic graphs are added.
    #[arg(long, default_value_t = 200)]
    graphs: usize,
    #[arg(long, default_value_t = 2)]
    min_nodes: usize,
    #[arg(long, default_value_t = 8)]
    max_nodes: usize,
    /// Distinct weights within each graph (the default).
    #[arg(long, conflicts_with = "ties")]
    distinct: bool,
    /// Allow repeated weights within a graph.
    #[arg(long)]
    ties: bool,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args)]
struct ReadingArgs {
    /// Read the ordinal axiom literally rather than conservatively.
    #[arg(long)]
    literal_ordinal: bool,
}

impl ReadingArgs {
    fn params(&self) -> CheckParams {
        let ordinal_reading = if self.literal_ordinal { OrdinalReading::Literal } else { OrdinalReading::Conservative };
        CheckParams { ordinal_reading, ..CheckParams::default() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Route { graph, algo, dest, dot } => cmd_route(&graph, &algo, dest, dot.as_deref()),
        Command::Check { graph, algo, axiom, dest, seed, trials, reading } => {
            let mut params = reading.params();
            if let Some(t) = trials {
                params.samples = t;
                params.first_hop_trials = t;
            }
            cmd_check(&graph, &algo, &axiom, dest, seed, &params)
        }
        Command::Suite { algo, axioms, corpus, json, reading } => {
            cmd_suite(&algo, &axioms, &corpus, json.as_deref(), &reading.params())
        }
        Command::Gen { nodes, density, min_weight, max_weight, ties, unicyclic, seed, out } => {
            let density: Ratio<u64> = density.parse().map_err(|_| anyhow!("bad density `{density}`"))?;
            let spec = CorpusSpec {
                graph_count: 1,
                min_nodes: nodes,
                max_nodes: nodes,
                edge_density: density,
                weights: WeightDistribution::UniformInt { lo: min_weight, hi: max_weight },
                distinct_weights: !ties,
                unicyclic,
                seed,
            };
            spec.validate()?;
            let inst = generate::<Weight>(&spec, 0)?;
            emit(&write_graph(&inst.graph, inst.destination), out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::OracleVerify { graph, algo, dest } => cmd_oracle_verify(&graph, &algo, dest),
        Command::Tightness { target, drop, all, seed, json } => {
            cmd_tightness(target.as_deref(), drop.as_deref(), all, seed, json.as_deref())
        }
    }
}

fn load(path: &Path, dest: Option<usize>) -> Result<(Graph, NodeId)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let (g, d) = parse_graph::<Weight>(&text).with_context(|| format!("parsing {}", path.display()))?;
    let d = dest.map(NodeId).unwrap_or(d);
    if !g.contains_node(d) {
        bail!("destination {d} is not a node of the graph");
    }
    Ok((g, d))
}

fn algorithm(name: &str) -> Result<AlgorithmId> {
    Ok(name.parse()?)
}

/// Writes `text` to `path`, or to stdout when there is no path.
fn emit(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json<T: Serialize>(value: &T, path: Option<&Path>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    emit(&text, path)
}

fn exit_for(clean: bool) -> ExitCode {
    if clean {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_route(path: &Path, algo: &str, dest: Option<usize>, dot: Option<&Path>) -> Result<ExitCode> {
    let algo = algorithm(algo)?;
    let (g, d) = load(path, dest)?;
    let tree = algo.route(&g, d)?;
    print!("{}", write_tree_edges(&tree));
    if let Some(p) = dot {
        fs::write(p, emit_dot(&g, Some(&tree))?).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(
    path: &Path,
    algo: &str,
    axiom: &str,
    dest: Option<usize>,
    seed: u64,
    params: &CheckParams,
) -> Result<ExitCode> {
    let algo = algorithm(algo)?;
    let axiom: AxiomId = axiom.parse()?;
    let (g, d) = load(path, dest)?;
    let report = check(axiom, &algo, &g, d, seed, params)?;
    eprintln!("{}", report.summary());
    emit_json(&report, None)?;
    Ok(exit_for(report.passed()))
}

fn cmd_suite(
    algo: &str,
    axioms: &str,
    args: &CorpusArgs,
    json: Option<&Path>,
    params: &CheckParams,
) -> Result<ExitCode> {
    let algo = algorithm(algo)?;
    let axioms = AxiomId::parse_list(axioms)?;
    if axioms.is_empty() {
        bail!("no axioms given");
    }
    let general = CorpusSpec {
        graph_count: args.graphs,
        min_nodes: args.min_nodes,
        max_nodes: args.max_nodes,
        distinct_weights: !args.ties,
        ..CorpusSpec::standard_general(args.seed)
    };
    let unicyclic = CorpusSpec {
        graph_count: args.graphs / 2,
        min_nodes: args.min_nodes.max(3),
        max_nodes: args.max_nodes.max(3),
        distinct_weights: !args.ties,
        ..CorpusSpec::standard_unicyclic(args.seed)
    };
    let corpus = Corpus::<Weight>::new(&general, &unicyclic)?;
    let reports = run_suite(&algo, &axioms, &corpus, args.seed, params);
    for r in &reports {
        eprintln!("{}", r.summary());
    }
    emit_json(&reports, json)?;
    Ok(exit_for(reports.iter().all(|r| r.passed())))
}

fn cmd_oracle_verify(path: &Path, algo: &str, dest: Option<usize>) -> Result<ExitCode> {
    let algo = algorithm(algo)?;
    let criterion = Criterion::for_algorithm(algo)?;
    let (g, d) = load(path, dest)?;
    let tree = algo.route(&g, d)?;
    let ok = certify_tree(&tree, criterion)?;
    println!("{} {} {}", if ok { "PASS" } else { "FAIL" }, algo.name(), criterion.name());
    Ok(exit_for(ok))
}

fn cmd_tightness(
    target: Option<&str>,
    drop: Option<&str>,
    all: bool,
    seed: u64,
    json: Option<&Path>,
) -> Result<ExitCode> {
    let cells: Vec<(AlgorithmId, AxiomId)> = match (target, drop, all) {
        (None, None, true) => grid(),
        (Some(t), None, true) => {
            let t = algorithm(t)?;
            grid().into_iter().filter(|(target, _)| *target == t).collect()
        }
        (Some(t), Some(a), false) => vec![(algorithm(t)?, a.parse()?)],
        _ => bail!("give a target with --drop, or --all"),
    };
    if cells.is_empty() {
        bail!("no tightness cells for that target");
    }
    let corpus = Corpus::<Weight>::standard(seed);
    let params = TightnessParams { seed, ..TightnessParams::default() };
    let cases = cells
        .into_iter()
        .map(|(t, a)| run_tightness(t, a, &corpus, &params))
        .collect::<Result<Vec<TightnessCase>, _>>()?;
    for c in &cases {
        eprintln!("{:<14} {:<26} {:<17} {}", c.target.name(), c.dropped.name(), c.status.to_string(), c.alternative);
    }
    emit_json(&cases, json)?;
    Ok(exit_for(cases.iter().all(|c| c.status != Status::Unconfirmed)))
}
