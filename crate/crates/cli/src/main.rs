//! `contractive`: analysis of contractive self-maps from the command line.
//!
//! Exit codes: 0 when the analysis answers yes, 1 when it answers no (or
//! refuses because a mathematical precondition fails), 2 on misuse.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use contractive::catalog::{build_example, check_stated_modulus, figure1_graph, Example, ExampleId};
use contractive::chains::{contractions_constant_certificate, epsilon_chain};
use contractive::distance::parse_rational;
use contractive::graph::{connected_components, decide_graph, induced_subspace, natural_distance};
use contractive::io::{parse_edge_list, parse_map_json, parse_space, MapDescriptor, SpaceDescriptor};
use contractive::iteration::{check_fixed_point_uniqueness, iterate_to_fixed_point, IterationOutcome};
use contractive::oracle::{
    enumerate_all_maps, verify_finite_range_remark, verify_theorem_equivalence, SpaceGenerator, DEFAULT_CAP,
};
use contractive::rules::MapRule;
use contractive::theorem::{construct_witness, corollary_unique_minimal_pair, decide_nonconstant_exists, quotient_lift};
use contractive::{classify_map, min_positive_distance, verify_metric_axioms, Error, Graph, MetricSpace, QuotientStructure, SelfMap};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::report::{digest, render, stamp, Outcome};

const DEFAULT_WINDOW: usize = 10;
const DEFAULT_MAX_STEPS: usize = 1000;

#[derive(Parser)]
#[command(name = "contractive", version, about = "Contractive self-maps on discrete metric spaces and graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Default)]
struct Opts {
    /// Space descriptor: JSON (`{"kind":"table",…}` or `{"kind":"rule",…}`) or a TSV matrix.
    #[arg(long, global = true, value_name = "FILE")]
    space: Option<PathBuf>,
    /// Edge list, one `u v` pair per line.
    #[arg(long, global = true, value_name = "FILE")]
    edges: Option<PathBuf>,
    /// Vertex count for `--edges` (default: largest id + 1).
    #[arg(long, global = true)]
    vertices: Option<usize>,
    /// Named example space.
    #[arg(long, global = true, value_name = "EXAMPLE")]
    name: Option<String>,
    /// Window for rule spaces: points 0..=N. Chain length for figure1_graph.
    #[arg(long, global = true, value_name = "N")]
    window: Option<usize>,
    /// Drop the bridge edge of figure1_graph.
    #[arg(long, global = true)]
    no_bridge: bool,
    /// Map descriptor file, inline JSON, example map name or rule name.
    #[arg(long, global = true, value_name = "FILE-or-NAME")]
    map: Option<String>,
    /// Epsilon as P/Q; a comma-separated schedule for `certificate`.
    #[arg(long, global = true, value_name = "P/Q")]
    eps: Option<String>,
    #[arg(long, global = true, value_name = "K")]
    start: Option<usize>,
    #[arg(long, global = true, value_name = "K")]
    max_steps: Option<usize>,
    /// Chain source for `epsilon-chain`.
    #[arg(long, global = true, value_name = "X")]
    from: Option<usize>,
    /// Chain target for `epsilon-chain`.
    #[arg(long, global = true, value_name = "Y")]
    to: Option<usize>,
    /// Probe points for `certificate`, e.g. `0-20` or `0,3,7`.
    #[arg(long, global = true, value_name = "LIST")]
    probes: Option<String>,
    /// Vertex subset for `subgraph`, e.g. `0,2,4`.
    #[arg(long, global = true, value_name = "LIST")]
    subset: Option<String>,
    /// Largest space `enumerate` accepts.
    #[arg(long, global = true, value_name = "N")]
    cap: Option<usize>,
    /// Seed for a random space in `enumerate`.
    #[arg(long, global = true, value_name = "S")]
    seed: Option<u64>,
    /// Point count for a seeded random space.
    #[arg(long, global = true, value_name = "N")]
    points: Option<usize>,
    /// Operation to run on an `example` space.
    #[arg(long, global = true, value_name = "COMMAND")]
    op: Option<String>,
    /// Pretty-print the report.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand, ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Command {
    /// Check the metric axioms on the window.
    Verify,
    /// Minimal positive distance and the pairs attaining it.
    D0,
    /// Classes of the d0-jump relation and the quotient distance.
    Classes,
    /// Does a nonconstant contractive map exist?
    Decide,
    /// Build a nonconstant contractive map.
    Witness,
    /// Classify `--map` as constant / contraction / contractive.
    ClassifyMap,
    /// Follow the orbit of `--start` under `--map`.
    Iterate,
    /// List the fixed points of `--map`.
    FixedPoints,
    /// Lift a contractive `--map` to the quotient.
    Lift,
    /// Find a chain from `--from` to `--to` with steps at most eps·d0.
    EpsilonChain,
    /// Check eps-chains between all probe pairs for an eps schedule.
    Certificate,
    /// Decide via a unique minimal pair.
    Corollary,
    /// Connected components of `--edges`.
    GraphComponents,
    /// Does a graph carry a nonconstant contractive map?
    GraphDecide,
    /// Analyse the induced subspace on `--subset`.
    Subgraph,
    /// Classify every self-map of a small space.
    Enumerate,
    /// Describe a named example, or run `--op` on it.
    Example,
}

impl Command {
    fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_owned()
    }
}

enum Failure {
    Usage(anyhow::Error),
    Refused(Error),
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        Failure::Usage(err)
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::NoFiniteDistance
            | Error::ZeroDistance(..)
            | Error::TooFewPoints(_)
            | Error::SingleClass
            | Error::NotContractive(..)
            | Error::NotClassConstant(_)
            | Error::MultipleFixedPoints(_)
            | Error::NoEdges => Failure::Refused(err),
            other => Failure::Usage(other.into()),
        }
    }
}

type Handled = Result<Outcome, Failure>;

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Parses `0-20`, `0,3,7` or a mix like `0-3,9`.
fn parse_list(text: &str) -> anyhow::Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once('-') {
            Some((a, b)) => {
                let (a, b): (usize, usize) = (a.trim().parse()?, b.trim().parse()?);
                if a > b {
                    bail!("empty range `{part}`");
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().with_context(|| format!("bad point `{part}`"))?),
        }
    }
    Ok(out)
}

/// Resolved inputs plus a canonical description used for the digest.
struct Inputs<'a> {
    opts: &'a Opts,
    example: Option<Example>,
    graph: Option<Graph>,
    space: Option<MetricSpace>,
    canonical: serde_json::Map<String, Value>,
}

impl<'a> Inputs<'a> {
    fn resolve(opts: &'a Opts) -> anyhow::Result<Self> {
        let sources = [opts.space.is_some(), opts.edges.is_some(), opts.name.is_some()];
        if sources.iter().filter(|&&s| s).count() > 1 {
            bail!("give at most one of --space, --edges, --name");
        }
        let mut inputs = Inputs { opts, example: None, graph: None, space: None, canonical: Default::default() };
        if let Some(path) = &opts.space {
            let space = parse_space(&read(path)?)?;
            inputs.canonical.insert("space".into(), serde_json::to_value(SpaceDescriptor::of(&space))?);
            inputs.space = Some(space);
        } else if let Some(path) = &opts.edges {
            let graph = parse_edge_list(&read(path)?, opts.vertices)?;
            inputs.set_graph(graph);
        } else if let Some(name) = &opts.name {
            let id: ExampleId = name.parse()?;
            let window = opts.window.unwrap_or(DEFAULT_WINDOW);
            let mut example = build_example(id, window)?;
            if id == ExampleId::Figure1Graph && opts.no_bridge {
                let graph = figure1_graph(window, false);
                example.space = natural_distance(&graph)?;
                example.graph = Some(graph);
            }
            inputs.canonical.insert(
                "example".into(),
                json!({"name": id.name(), "window": window, "bridge": !opts.no_bridge || id != ExampleId::Figure1Graph}),
            );
            inputs.space = Some(example.space.clone());
            inputs.graph = example.graph.clone();
            inputs.example = Some(example);
        }
        let params = json!({
            "eps": opts.eps, "start": opts.start, "max_steps": opts.max_steps,
            "from": opts.from, "to": opts.to, "probes": opts.probes, "subset": opts.subset,
            "cap": opts.cap, "seed": opts.seed, "points": opts.points,
        });
        inputs.canonical.insert("params".into(), params);
        Ok(inputs)
    }

    fn set_graph(&mut self, graph: Graph) {
        let edges: Vec<(usize, usize)> = graph.edges().collect();
        self.canonical
            .insert("graph".into(), json!({"vertices": graph.vertex_count(), "edges": edges}));
        self.graph = Some(graph);
    }

    fn space(&mut self) -> Result<&MetricSpace, Failure> {
        if self.space.is_none() {
            let graph = self
                .graph
                .as_ref()
                .ok_or_else(|| anyhow!("no space given; use --space, --edges or --name"))?;
            self.space = Some(natural_distance(graph)?);
        }
        Ok(self.space.as_ref().unwrap())
    }

    fn graph(&self) -> anyhow::Result<&Graph> {
        self.graph.as_ref().ok_or_else(|| anyhow!("this command needs --edges or a graph example"))
    }

    fn map(&mut self) -> anyhow::Result<SelfMap> {
        let spec = self.opts.map.clone().ok_or_else(|| anyhow!("--map is required"))?;
        let map = if let Some(named) = self.example.as_ref().and_then(|e| e.map(&spec)) {
            named.map.clone()
        } else if let Ok(rule) = spec.parse::<MapRule>() {
            SelfMap::Rule(rule)
        } else if spec.trim_start().starts_with('{') {
            parse_map_json(&spec)?
        } else {
            parse_map_json(&read(Path::new(&spec))?)?
        };
        self.canonical.insert("map".into(), serde_json::to_value(MapDescriptor::of(&map))?);
        Ok(map)
    }

    fn eps(&self) -> anyhow::Result<Vec<contractive::BigRational>> {
        let text = self.opts.eps.as_deref().ok_or_else(|| anyhow!("--eps is required"))?;
        text.split(',').map(|e| Ok(parse_rational(e.trim())?)).collect()
    }

    fn digest(&self) -> String {
        digest(&Value::Object(self.canonical.clone()))
    }
}

fn with_error(err: &Error) -> Value {
    json!({ "error": err.to_string() })
}

fn run_command(command: Command, inputs: &mut Inputs) -> Handled {
    let opts = inputs.opts;
    match command {
        Command::Verify => {
            let report = verify_metric_axioms(inputs.space()?);
            let passed = report.passed;
            Ok(Outcome::new(report, passed)?)
        }
        Command::D0 => {
            let minimal = min_positive_distance(inputs.space()?)?;
            Ok(Outcome::new(minimal, true)?)
        }
        Command::Classes => {
            let q = QuotientStructure::of(inputs.space()?)?;
            let payload = json!({
                "d0": q.d0,
                "classes": q.classes,
                "class_count": q.class_count(),
                "quotient_d": q.quotient_d,
                "quotient_triangle_violation": q.triangle_violation(),
            });
            Ok(Outcome::new(payload, true)?)
        }
        Command::Decide => {
            let space = inputs.space()?;
            let q = QuotientStructure::of(space)?;
            let decision = decide_nonconstant_exists(space, &q);
            let payload = json!({
                "exists": decision.exists,
                "classes": decision.class_count,
                "witness": decision.witness.map(|images| json!({ "images": images })),
            });
            Ok(Outcome::new(payload, decision.exists)?)
        }
        Command::Witness => {
            let space = inputs.space()?;
            let q = QuotientStructure::of(space)?;
            let map = construct_witness(space, &q)?;
            let report = classify_map(space, &map)?;
            let payload = json!({ "witness": MapDescriptor::of(&map), "classification": report });
            Ok(Outcome::new(payload, true)?)
        }
        Command::ClassifyMap => {
            let map = inputs.map()?;
            let report = classify_map(inputs.space()?, &map)?;
            let stated = inputs
                .example
                .as_ref()
                .and_then(|e| e.maps.iter().find(|m| m.map == map))
                .and_then(|named| check_stated_modulus(named, &report));
            let positive = report.is_contractive;
            let mut payload = serde_json::to_value(report).map_err(anyhow::Error::from)?;
            payload["stated_modulus"] = serde_json::to_value(stated).map_err(anyhow::Error::from)?;
            Ok(Outcome::new(payload, positive)?)
        }
        Command::Iterate => {
            let map = inputs.map()?;
            let start = opts.start.unwrap_or(0);
            let max_steps = opts.max_steps.unwrap_or(DEFAULT_MAX_STEPS);
            let report = iterate_to_fixed_point(inputs.space()?, &map, start, max_steps)?;
            let positive = report.outcome == IterationOutcome::FixedPoint;
            Ok(Outcome::new(report, positive)?)
        }
        Command::FixedPoints => {
            let map = inputs.map()?;
            let report = check_fixed_point_uniqueness(inputs.space()?, &map)?;
            Ok(Outcome::new(report, true)?)
        }
        Command::Lift => {
            let map = inputs.map()?;
            let space = inputs.space()?;
            let q = QuotientStructure::of(space)?;
            let lift = quotient_lift(&map, space, &q)?;
            let payload = json!({ "classes": q.classes, "lift": lift });
            Ok(Outcome::new(payload, true)?)
        }
        Command::EpsilonChain => {
            let eps = inputs.eps()?;
            let [eps] = &eps[..] else {
                return Err(anyhow!("epsilon-chain takes a single --eps").into());
            };
            let (x, y) = match (opts.from, opts.to) {
                (Some(x), Some(y)) => (x, y),
                _ => return Err(anyhow!("--from and --to are required").into()),
            };
            let chain = epsilon_chain(inputs.space()?, x, y, eps)?;
            let found = chain.is_some();
            let payload = json!({
                "from": x, "to": y,
                "eps": contractive::ExtDistance::Finite(eps.clone()),
                "chain": chain,
            });
            Ok(Outcome::new(payload, found)?)
        }
        Command::Certificate => {
            let schedule = inputs.eps()?;
            let space = inputs.space()?;
            let probes = match &opts.probes {
                Some(list) => parse_list(list)?,
                None => (0..space.len()).collect(),
            };
            let report = contractions_constant_certificate(space, &probes, &schedule)?;
            let positive = report.hypothesis_on_window;
            Ok(Outcome::new(report, positive)?)
        }
        Command::Corollary => {
            let decision = corollary_unique_minimal_pair(inputs.space()?)?;
            let positive = decision.applicable && decision.exists == Some(true);
            Ok(Outcome::new(decision, positive)?)
        }
        Command::GraphComponents => {
            let components = connected_components(inputs.graph()?);
            let payload = json!({ "count": components.len(), "components": components });
            Ok(Outcome::new(payload, true)?)
        }
        Command::GraphDecide => {
            let decision = decide_graph(inputs.graph()?)?;
            let positive = decision.exists;
            Ok(Outcome::new(decision, positive)?)
        }
        Command::Subgraph => {
            let list = opts.subset.as_deref().ok_or_else(|| anyhow!("--subset is required"))?;
            let subset = parse_list(list)?;
            inputs.graph()?;
            let sub = induced_subspace(inputs.space()?, &subset)?;
            let q = QuotientStructure::of(&sub.space)?;
            let decision = decide_nonconstant_exists(&sub.space, &q);
            let classes: Vec<Vec<usize>> =
                q.classes.iter().map(|c| c.iter().map(|&i| sub.vertices[i]).collect()).collect();
            let payload = json!({
                "vertices": sub.vertices,
                "d0": sub.d0,
                "classes": classes,
                "exists": decision.exists,
                "witness": decision.witness.map(|images| json!({ "images": images })),
            });
            Ok(Outcome::new(payload, decision.exists)?)
        }
        Command::Enumerate => {
            let cap = opts.cap.unwrap_or(DEFAULT_CAP);
            if inputs.space.is_none() && inputs.graph.is_none() {
                let seed = opts.seed.ok_or_else(|| anyhow!("give a space or --seed"))?;
                let points = opts.points.unwrap_or(4);
                if points < 2 {
                    return Err(anyhow!("--points must be at least 2").into());
                }
                let generator = SpaceGenerator { min_points: points, max_points: points, ..Default::default() };
                let space = generator.generate(&mut ChaCha8Rng::seed_from_u64(seed));
                inputs.canonical.insert("space".into(), serde_json::to_value(SpaceDescriptor::of(&space)).map_err(anyhow::Error::from)?);
                inputs.space = Some(space);
            }
            let space = inputs.space()?;
            let summary = enumerate_all_maps(space, cap)?;
            let theorem = verify_theorem_equivalence(space, cap)?;
            let remark = verify_finite_range_remark(space, cap)?;
            let positive = theorem.agree && remark.holds;
            let payload = json!({
                "space": SpaceDescriptor::of(space),
                "summary": summary,
                "theorem_agrees": theorem.agree,
                "finite_range_remark_holds": remark.holds,
                "remark_failures": remark.failures,
            });
            Ok(Outcome::new(payload, positive)?)
        }
        Command::Example => {
            let example = inputs.example.as_ref().ok_or_else(|| anyhow!("example needs --name"))?;
            match &opts.op {
                None => {
                    let maps: Vec<&str> = example.maps.iter().map(|m| m.name).collect();
                    let payload = json!({
                        "name": example.id.name(),
                        "space": SpaceDescriptor::of(&example.space),
                        "maps": maps,
                    });
                    Ok(Outcome::new(payload, true)?)
                }
                Some(op) => {
                    let command = Command::from_str(op, true).map_err(|e| anyhow!("unknown --op: {e}"))?;
                    if command == Command::Example {
                        return Err(anyhow!("--op example would recurse").into());
                    }
                    run_command(command, inputs)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = cli.command;
    let mut inputs = match Inputs::resolve(&cli.opts) {
        Ok(inputs) => inputs,
        Err(err) => {
            eprintln!("error: {err:#}");
            return ExitCode::from(2);
        }
    };
    let (payload, code) = match run_command(command, &mut inputs) {
        Ok(outcome) => (outcome.payload, if outcome.positive { 0 } else { 1 }),
        Err(Failure::Refused(err)) => (with_error(&err), 1),
        Err(Failure::Usage(err)) => {
            eprintln!("error: {err:#}");
            return ExitCode::from(2);
        }
    };
    let window = inputs.space.as_ref().map(MetricSpace::len);
    let effective = match (command, &cli.opts.op) {
        (Command::Example, Some(op)) => op.clone(),
        _ => command.name(),
    };
    let report = stamp(&effective, payload, window, &inputs.digest());
    println!("{}", render(&report, cli.opts.pretty));
    ExitCode::from(code)
}
