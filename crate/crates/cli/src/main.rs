//! Command-line front door: graph ingestion, detector invocation, corpus
//! verification, JSON certificate emission. One graph per input line;
//! multi-graph files stream results as JSON lines on standard output.
//!
//! Exit codes: 0 success (whatever the verdicts), 1 verify found
//! counterexamples, 2 usage error, 3 malformed input, 4 budget or size guard
//! exceeded.

mod json;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use graphcore::{parse_dimacs, parse_graph6, Graph};
use lemmalab::{claim_by_name, generate, GeneratorSpec, Source, SuiteOptions};
use serde_json::json;

#[derive(Parser)]
#[command(name = "bergelab", version, about = "Berge graph workbench: detectors, decompositions, and corpus verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Graph6,
    Dimacs,
}

#[derive(Parser)]
struct InputArgs {
    /// Input file; - or absent reads standard input.
    file: Option<PathBuf>,
    /// Input format. graph6 is one graph per line; dimacs is one graph per
    /// file.
    #[arg(long, value_enum, default_value = "graph6")]
    format: InputFormat,
    /// Largest vertex count accepted (refusal, not truncation). The
    /// BERGE_MAX_N environment variable overrides the default.
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Detector {
    Prism,
    Wheel,
    DoubleDiamond,
    Lk33,
    Lk33e,
    AppearanceK4,
}

#[derive(Subcommand)]
enum Command {
    /// Berge test with an odd hole or antihole witness.
    Berge(InputArgs),
    /// Perfection test by the exhaustive induced-subgraph sweep.
    Perfect(InputArgs),
    /// Basic-class recognition (first match wins).
    Classify(InputArgs),
    /// Full decomposition verdict for Berge inputs.
    Decompose(InputArgs),
    /// Structure detectors.
    Detect {
        #[arg(value_enum)]
        which: Detector,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Skew partition stream with loose/balanced flags.
    Skew(InputArgs),
    /// Class ladder membership F1..F11.
    Fladder {
        /// Force the pseudowheel check regardless of size.
        #[arg(long)]
        check_f8: bool,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run a claim over a corpus and report counterexamples.
    Verify {
        #[arg(long)]
        claim: String,
        /// Exhaustive corpus on this many vertices (n <= 8).
        #[arg(long, conflicts_with_all = ["file", "family"])]
        exhaustive: Option<usize>,
        /// graph6 corpus file, one graph per line.
        #[arg(long, conflicts_with = "family")]
        file: Option<PathBuf>,
        /// Generator family, e.g. uniform:9:0.5, berge:9:0.4,
        /// bipartite:3:4:0.5, line-bipartite:3:3:0.6, bicograph:2:2, or
        /// complement:FAMILY.
        #[arg(long, requires = "samples")]
        family: Option<String>,
        #[arg(long)]
        samples: Option<usize>,
        /// Seed; required for sampled sources.
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads (output independent of the choice).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Per-graph binding budget.
        #[arg(long, default_value_t = 4096)]
        budget: u64,
    },
    /// Emit graphs from a seeded generator family as graph6 lines.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("bergelab: {}", e.message);
            e.code
        }
    }
}

struct Failure {
    code: ExitCode,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code: ExitCode::from(code), message: message.into() }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Berge(input) => per_graph(&input, 16, |g| {
            json::berge_json(g, &recognizers::berge_witness(g))
        }),
        Command::Perfect(input) => {
            let limit = guard(&input, 12);
            per_graph_checked(&input, limit, |g| {
                let report = recognizers::is_perfect_bounded(g, limit)
                    .map_err(|e| fail(4, e.to_string()))?;
                Ok(json!({
                    "graph6": graphcore::emit_graph6(g),
                    "perfect": report.perfect,
                    "witness": report.witness.map(|w| json!({
                        "subset": json::set_json(w.subset),
                        "omega": w.omega,
                        "chi": w.chi,
                    })),
                }))
            })
        }
        Command::Classify(input) => per_graph(&input, 16, |g| {
            match recognizers::classify_basic(g) {
                Some(cert) => {
                    let mut v = json::basic_json(&cert);
                    v.as_object_mut()
                        .unwrap()
                        .insert("graph6".into(), json!(graphcore::emit_graph6(g)));
                    v
                }
                None => json!({ "graph6": graphcore::emit_graph6(g), "class": null }),
            }
        }),
        Command::Decompose(input) => per_graph_checked(&input, guard(&input, 16), |g| {
            let verdict = decompositions::decompose(g).map_err(|e| fail(3, e.to_string()))?;
            Ok(json::verdict_json(g, &verdict))
        }),
        Command::Detect { which, input } => per_graph(&input, 14, |g| detect_json(which, g)),
        Command::Skew(input) => per_graph(&input, 16, |g| {
            let parts = decompositions::find_skew_partitions(g);
            json!({
                "graph6": graphcore::emit_graph6(g),
                "count": parts.len(),
                "partitions": parts.iter().map(json::skew_json).collect::<Vec<_>>(),
            })
        }),
        Command::Fladder { check_f8, input } => per_graph_checked(&input, guard(&input, 14), |g| {
            let opts = structures::LadderOptions {
                f8: if check_f8 { structures::F8Mode::On } else { structures::F8Mode::Auto },
                ..Default::default()
            };
            let report = structures::f_ladder(g, opts).map_err(|e| fail(3, e.to_string()))?;
            let mut obj = serde_json::Map::new();
            obj.insert("graph6".into(), json!(graphcore::emit_graph6(g)));
            for (i, flag) in report.flags.iter().enumerate() {
                let key = format!("f{}", i + 1);
                let value = match flag {
                    structures::Flag::Holds => json!(true),
                    structures::Flag::Fails => json!(false),
                    structures::Flag::Skipped => {
                        json!(report.f8_skipped.clone().unwrap_or_else(|| "skipped".into()))
                    }
                };
                obj.insert(key, value);
            }
            Ok(serde_json::Value::Object(obj))
        }),
        Command::Verify { claim, exhaustive, file, family, samples, seed, jobs, budget } => {
            let claim_id = claim_by_name(&claim)
                .ok_or_else(|| fail(2, format!("unknown claim '{claim}'")))?;
            let source = if let Some(n) = exhaustive {
                Source::Exhaustive(n)
            } else if let Some(path) = file {
                Source::File(path)
            } else if let Some(fam) = family {
                let spec = parse_family(&fam)?;
                let samples = samples.ok_or_else(|| fail(2, "--family needs --samples"))?;
                if seed.is_none() {
                    return Err(fail(2, "sampled sources require --seed"));
                }
                Source::Generator { spec, samples }
            } else {
                return Err(fail(2, "verify needs --exhaustive, --file, or --family"));
            };
            let opts = SuiteOptions { binding_budget: budget, jobs };
            let report = lemmalab::run_suite(claim_id, &source, seed.unwrap_or(0), opts)
                .map_err(|e| fail(3, e.to_string()))?;
            eprintln!(
                "verify {}: {} graphs in {} ms",
                report.claim, report.graphs_checked, report.wall_time_ms
            );
            emit(&json::report_json(&report));
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Gen { family, count, seed } => {
            let spec = parse_family(&family)?;
            let mut out = std::io::stdout().lock();
            for i in 0..count {
                let g = generate(&spec, seed ^ i as u64).map_err(|e| fail(4, e.to_string()))?;
                writeln!(out, "{}", graphcore::emit_graph6(&g)).map_err(|e| fail(3, e.to_string()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn detect_json(which: Detector, g: &Graph) -> serde_json::Value {
    let g6 = graphcore::emit_graph6(g);
    match which {
        Detector::Prism => {
            let prisms = structures::find_prisms(g);
            json!({
                "graph6": g6,
                "prisms": prisms.iter().map(|p| json!({
                    "a": json::seq_json(&p.a),
                    "b": json::seq_json(&p.b),
                    "paths": p.paths.iter().map(json::path_json).collect::<Vec<_>>(),
                    "kind": if p.kind == structures::PrismKind::Even { "even" } else { "odd" },
                    "long": p.long,
                })).collect::<Vec<_>>(),
            })
        }
        Detector::Wheel => {
            let wheels = structures::find_wheels(g);
            json!({
                "graph6": g6,
                "wheels": wheels.iter().map(|w| json!({
                    "rim": json::hole_json(&w.rim),
                    "hub": json::set_json(w.hub),
                    "segments": w.segments.iter().map(|s| json::seq_json(s)).collect::<Vec<_>>(),
                    "odd": w.odd,
                })).collect::<Vec<_>>(),
            })
        }
        Detector::DoubleDiamond | Detector::Lk33 | Detector::Lk33e => {
            let which = match which {
                Detector::DoubleDiamond => structures::FixedGraph::DoubleDiamond,
                Detector::Lk33 => structures::FixedGraph::LK33,
                _ => structures::FixedGraph::LK33MinusE,
            };
            json!({
                "graph6": g6,
                "found": structures::contains_fixed(g, which).map(json::set_json),
            })
        }
        Detector::AppearanceK4 => {
            match structures::find_appearances_k4(g, structures::DEFAULT_SUBSET_BUDGET) {
                Ok(apps) => json!({
                    "graph6": g6,
                    "appearances": apps.iter().map(|a| json!({
                        "vertices": json::set_json(a.vertices),
                        "root_graph6": graphcore::emit_graph6(&a.root),
                        "degenerate": a.degenerate,
                    })).collect::<Vec<_>>(),
                }),
                Err(e) => json!({ "graph6": g6, "error": e.to_string() }),
            }
        }
    }
}

fn guard(input: &InputArgs, default: usize) -> usize {
    input
        .max_n
        .or_else(|| std::env::var("BERGE_MAX_N").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(default)
}

fn read_graphs(input: &InputArgs) -> Result<Vec<Graph>, Failure> {
    let text = match &input.file {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| fail(3, format!("{}: {e}", p.display())))?,
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| fail(3, format!("stdin: {e}")))?;
            buf
        }
    };
    match input.format {
        InputFormat::Graph6 => {
            let mut graphs = Vec::new();
            for (i, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let g = parse_graph6(line)
                    .map_err(|e| fail(3, format!("line {}: {e}", i + 1)))?;
                graphs.push(g);
            }
            Ok(graphs)
        }
        InputFormat::Dimacs => {
            let g = parse_dimacs(&text).map_err(|e| fail(3, e.to_string()))?;
            Ok(vec![g])
        }
    }
}

fn per_graph(
    input: &InputArgs,
    default_guard: usize,
    f: impl Fn(&Graph) -> serde_json::Value,
) -> Result<ExitCode, Failure> {
    per_graph_checked(input, guard(input, default_guard), |g| Ok(f(g)))
}

fn per_graph_checked(
    input: &InputArgs,
    max_n: usize,
    f: impl Fn(&Graph) -> Result<serde_json::Value, Failure>,
) -> Result<ExitCode, Failure> {
    let graphs = read_graphs(input)?;
    for g in &graphs {
        if g.n() > max_n {
            return Err(fail(4, format!("graph on {} vertices exceeds the guard {max_n} (override with --max-n or BERGE_MAX_N)", g.n())));
        }
    }
    for g in &graphs {
        emit(&f(g)?);
    }
    Ok(ExitCode::SUCCESS)
}

fn emit(value: &serde_json::Value) {
    let bytes = json::emit_report(value);
    std::io::stdout().write_all(&bytes).expect("stdout");
}

fn parse_family(text: &str) -> Result<GeneratorSpec, Failure> {
    let bad = |m: String| fail(2, m);
    if let Some(rest) = text.strip_prefix("complement:") {
        return Ok(GeneratorSpec::ComplementOf(Box::new(parse_family(rest)?)));
    }
    let parts: Vec<&str> = text.split(':').collect();
    let usize_at = |i: usize| -> Result<usize, Failure> {
        parts
            .get(i)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad(format!("bad family '{text}': expected integer at position {i}")))
    };
    let f64_at = |i: usize| -> Result<f64, Failure> {
        parts
            .get(i)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad(format!("bad family '{text}': expected probability at position {i}")))
    };
    match parts[0] {
        "uniform" => Ok(GeneratorSpec::Uniform { n: usize_at(1)?, p: f64_at(2)? }),
        "berge" => Ok(GeneratorSpec::BergeRejection { n: usize_at(1)?, p: f64_at(2)? }),
        "bipartite" => {
            Ok(GeneratorSpec::Bipartite { n1: usize_at(1)?, n2: usize_at(2)?, p: f64_at(3)? })
        }
        "line-bipartite" => {
            Ok(GeneratorSpec::LineOfBipartite { n1: usize_at(1)?, n2: usize_at(2)?, p: f64_at(3)? })
        }
        "bicograph" => Ok(GeneratorSpec::Bicograph { m: usize_at(1)?, n: usize_at(2)? }),
        other => Err(bad(format!("unknown family '{other}'"))),
    }
}
