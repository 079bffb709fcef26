use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pvc4::bench;
use pvc4::generate::{generate, GenSpec, Generated, Model, PRNG_ID};
use pvc4::io::{self as gio, format_vertex_list, parse_vertex_list, render, GraphFile};
use pvc4::report::Report;
use pvc4::rules::{rule_name, Fired, RuleOutcome};
use pvc4::selftest;
use pvc4::solver::{
    iterative_compression_with, minimize_disjoint_with, minimize_with, solve_disjoint_with, verify_cover,
    SearchObserver, SolveOptions, DEFAULT_NODE_CAP,
};
use pvc4::Instance;

const NODE_CAP_ENV: &str = "PVC4_NODE_CAP";

#[derive(Parser)]
#[command(name = "pvc4", version, about = "Exact solver for 4-path vertex cover")]
struct Cli {
    /// Search nodes allowed per disjoint solve [env: PVC4_NODE_CAP]
    #[arg(long, global = true)]
    node_cap: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a cover of size at most k exists
    Solve(SolveArgs),
    /// Find a minimum cover
    Minimize(MinimizeArgs),
    /// Check that a vertex set is a cover
    Verify(VerifyArgs),
    /// Write a generated graph or instance
    Gen(GenArgs),
    /// Tabulate search-tree sizes per budget on a seeded suite
    Bench(BenchArgs),
    /// Compare the solver with brute force on small inputs
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, short)]
    input: PathBuf,
    #[arg(short, allow_negative_numbers = true)]
    k: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Print one JSON line per rule application to standard error
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct MinimizeArgs {
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, short)]
    input: PathBuf,
    /// Comma-separated 1-based vertex ids, e.g. "1,4,7"
    #[arg(long)]
    cover: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelName {
    Gnp,
    Path,
    Cycle,
    Star,
    Caterpillar,
    CycleOfStars,
    RuleTrigger,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    model: ModelName,
    /// Vertex count (gnp, path, cycle), leaf count (star) or spine length
    /// (caterpillar)
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability (gnp)
    #[arg(long)]
    p: Option<f64>,
    /// Number of stars (cycle-of-stars)
    #[arg(long)]
    s: Option<usize>,
    /// Maximum legs per spine vertex (caterpillar)
    #[arg(long, default_value_t = 2)]
    legs: usize,
    /// Rule id (rule-trigger)
    #[arg(long)]
    rule: Option<u8>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; standard output if absent
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Gnp,
    Caterpillar,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum, default_value_t = Suite::Gnp)]
    suite: Suite,
    #[arg(long, default_value_t = 8)]
    kmax: i64,
    #[arg(long, default_value_t = 40)]
    n: usize,
    #[arg(long, default_value_t = 0.08)]
    p: f64,
    #[arg(long, default_value_t = 5)]
    instances: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct SelftestArgs {
    /// Largest vertex count for exhaustive graph enumeration (at most 6)
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    /// Rule fixtures checked per rule
    #[arg(long, default_value_t = 3)]
    seeds: u64,
}

/// Outcome of a subcommand that ran to completion.
enum Verdict {
    Yes,
    No,
}

type CliResult = Result<Verdict, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = match node_cap(cli.node_cap) {
        Ok(node_cap) => SolveOptions { node_cap },
        Err(e) => return fail(&e),
    };
    let result = match cli.command {
        Command::Solve(a) => solve(a, opts),
        Command::Minimize(a) => minimize(a, opts),
        Command::Verify(a) => verify(a),
        Command::Gen(a) => gen(a),
        Command::Bench(a) => run_bench(a, opts),
        Command::Selftest(a) => run_selftest(a, opts),
    };
    match result {
        Ok(Verdict::Yes) => ExitCode::SUCCESS,
        Ok(Verdict::No) => ExitCode::from(1),
        Err(e) => fail(&e),
    }
}

fn fail(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn node_cap(flag: Option<u64>) -> Result<u64, String> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(NODE_CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| format!("{NODE_CAP_ENV}={v:?} is not a node count")),
        Err(_) => Ok(DEFAULT_NODE_CAP),
    }
}

fn read_file(path: &Path) -> Result<GraphFile, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    gio::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(text: &str) -> Result<(), String> {
    io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string())
}

fn emit_report(report: &Report, format: Format) -> Result<(), String> {
    match format {
        Format::Text => emit(&report.to_text()),
        Format::Json => emit(&(report.to_json() + "\n")),
    }
}

#[derive(Serialize)]
struct TraceLine<'a> {
    depth: u64,
    rule: u8,
    name: &'a str,
    witness: Vec<usize>,
    branches: Vec<usize>,
}

/// Writes one JSON line per rule application to standard error.
struct Tracer;

impl SearchObserver for Tracer {
    fn on_rule(&mut self, _inst: &Instance, depth: u64, fired: &Fired) {
        let branches = match &fired.outcome {
            RuleOutcome::Branch(sets) => sets.iter().map(|s| s.len()).collect(),
            _ => Vec::new(),
        };
        let line = TraceLine {
            depth,
            rule: fired.rule_id(),
            name: rule_name(fired.rule_id()),
            witness: fired.matched.witness.iter().map(|v| v + 1).collect(),
            branches,
        };
        eprintln!("{}", serde_json::to_string(&line).expect("trace line serializes"));
    }
}

fn observer(trace: bool) -> Box<dyn SearchObserver> {
    if trace {
        Box::new(Tracer)
    } else {
        Box::new(pvc4::solver::Quiet)
    }
}

fn solve(a: SolveArgs, opts: SolveOptions) -> CliResult {
    let file = read_file(&a.input)?;
    let (n, m, v1) = (file.graph.num_vertices(), file.graph.num_edges(), file.v1.len());
    let mut obs = observer(a.trace);
    let res = if file.v1.is_empty() {
        if a.k < 0 {
            return Err(format!("budget must be non-negative, got {}", a.k));
        }
        iterative_compression_with(&file.graph, a.k, opts, obs.as_mut())
    } else {
        let inst = file.into_instance(a.k).map_err(|e| e.to_string())?;
        solve_disjoint_with(&inst, opts, obs.as_mut())
    }
    .map_err(|e| e.to_string())?;
    let report = Report::new("solve", n, m, v1, Some(a.k), res.cover.as_ref(), res.stats);
    emit_report(&report, a.format)?;
    Ok(if res.cover.is_some() { Verdict::Yes } else { Verdict::No })
}

fn minimize(a: MinimizeArgs, opts: SolveOptions) -> CliResult {
    let file = read_file(&a.input)?;
    let (n, m, v1) = (file.graph.num_vertices(), file.graph.num_edges(), file.v1.len());
    let mut obs = observer(a.trace);
    let best = if file.v1.is_empty() {
        minimize_with(&file.graph, opts, obs.as_mut())
    } else {
        let inst = file.into_instance(0).map_err(|e| e.to_string())?;
        minimize_disjoint_with(&inst, opts, obs.as_mut())
    }
    .map_err(|e| e.to_string())?;
    let report = Report::new("minimize", n, m, v1, None, Some(&best.cover), best.stats);
    emit_report(&report, a.format)?;
    Ok(Verdict::Yes)
}

fn verify(a: VerifyArgs) -> CliResult {
    let file = read_file(&a.input)?;
    let set = parse_vertex_list(&a.cover, file.graph.num_vertices()).map_err(|e| format!("--cover: {e}"))?;
    let forbidden: Vec<usize> = set.intersection(&file.v1).copied().collect();
    if !forbidden.is_empty() {
        emit(&format!("not a cover: uses V1 vertices {}\n", format_vertex_list(&forbidden.into_iter().collect())))?;
        return Ok(Verdict::No);
    }
    if verify_cover(&file.graph, &set) {
        emit(&format!("ok: {} vertices cover every 4-path\n", set.len()))?;
        return Ok(Verdict::Yes);
    }
    let p = file
        .graph
        .find_4path_where(|v| !set.contains(&v))
        .expect("verify_cover failed, so a 4-path remains");
    emit(&format!("not a cover: 4-path {} {} {} {} remains\n", p[0] + 1, p[1] + 1, p[2] + 1, p[3] + 1))?;
    Ok(Verdict::No)
}

fn required<T>(v: Option<T>, flag: &str, model: &str) -> Result<T, String> {
    v.ok_or_else(|| format!("--{flag} is required for model {model}"))
}

fn gen(a: GenArgs) -> CliResult {
    let model = match a.model {
        ModelName::Gnp => Model::Gnp { n: required(a.n, "n", "gnp")?, p: required(a.p, "p", "gnp")? },
        ModelName::Path => Model::Path { n: required(a.n, "n", "path")? },
        ModelName::Cycle => Model::Cycle { n: required(a.n, "n", "cycle")? },
        ModelName::Star => Model::Star { leaves: required(a.n, "n", "star")? },
        ModelName::Caterpillar => Model::Caterpillar { spine: required(a.n, "n", "caterpillar")?, legs: a.legs },
        ModelName::CycleOfStars => Model::CycleOfStars { s: required(a.s, "s", "cycle-of-stars")? },
        ModelName::RuleTrigger => Model::RuleTrigger { rule: required(a.rule, "rule", "rule-trigger")? },
    };
    let generated = generate(&GenSpec { model: model.clone(), seed: a.seed }).map_err(|e| e.to_string())?;
    let mut file = match &generated {
        Generated::Graph(g) => GraphFile::from_graph(g.clone()),
        Generated::Instance(inst) => GraphFile::from_instance(inst),
    };
    file = file
        .with_comment(format!("model: {model}"))
        .with_comment(format!("seed: {}", a.seed))
        .with_comment(format!("prng: {PRNG_ID}"));
    if let Generated::Instance(inst) = &generated {
        file = file.with_comment(format!("k: {}", inst.k()));
    }
    let text = render(&file);
    match a.output {
        Some(path) => fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?,
        None => emit(&text)?,
    }
    Ok(Verdict::Yes)
}

fn run_bench(a: BenchArgs, opts: SolveOptions) -> CliResult {
    let model = match a.suite {
        Suite::Gnp => Model::Gnp { n: a.n, p: a.p },
        Suite::Caterpillar => Model::Caterpillar { spine: a.n, legs: 2 },
    };
    let table = bench::run(&model, a.instances, a.seed, a.kmax, opts).map_err(|e| e.to_string())?;
    match a.format {
        Format::Text => emit(&table.to_text())?,
        Format::Json => emit(&(serde_json::to_string_pretty(&table).expect("table serializes") + "\n"))?,
    }
    let violations: u64 = table.rows.iter().map(|r| r.leaf_violations).sum();
    Ok(if violations == 0 { Verdict::Yes } else { Verdict::No })
}

fn run_selftest(a: SelftestArgs, opts: SolveOptions) -> CliResult {
    let r = selftest::run(a.max_n, a.seeds, opts).map_err(|e| e.to_string())?;
    let m = &r.monitor;
    let mut out = String::new();
    out += &format!("graphs checked: {}\n", r.graphs_checked);
    out += &format!("rule fixtures checked: {}\n", r.fixtures_checked);
    out += &format!("oracle mismatches: {}\n", r.mismatches.len());
    out += &format!("rule applications checked: {}\n", m.nodes_checked);
    out += &format!("observation violations: {}\n", m.observation_violations);
    out += &format!("disjoint solves: {}\n", m.disjoint_solves);
    out += &format!("leaf bound violations: {}\n", m.leaf_violations);
    for s in r.mismatches.iter().chain(&m.samples) {
        out += &format!("  {s}\n");
    }
    out += if r.passed() { "selftest: PASS\n" } else { "selftest: FAIL\n" };
    emit(&out)?;
    Ok(if r.passed() { Verdict::Yes } else { Verdict::No })
}
