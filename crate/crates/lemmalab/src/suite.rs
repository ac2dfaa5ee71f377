//! Corpus orchestration: run one claim over an enumerated, on-disk, or
//! sampled family of graphs. Sample i draws its RNG stream from
//! `seed ^ i`, so distributing corpus members over workers cannot change the
//! report.

use std::path::PathBuf;
use std::time::Instant;

use graphcore::{parse_graph6, Graph};
use rayon::prelude::*;
use recognizers::is_berge;
use thiserror::Error;

use crate::claims::{check_claim, ClaimId};
use crate::enumerate::enumerate_all_graphs;
use crate::generate::{generate, GeneratorSpec};
use crate::report::CorpusReport;

#[derive(Debug, Clone)]
pub enum Source {
    /// Every graph on n vertices up to isomorphism (built-in for n <= 8).
    Exhaustive(usize),
    /// A graph6 file, one graph per line.
    File(PathBuf),
    /// An explicit list.
    Graphs(Vec<Graph>),
    /// `samples` draws from a seeded generator family.
    Generator { spec: GeneratorSpec, samples: usize },
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    /// Per-graph cap on hypothesis instantiations.
    pub binding_budget: u64,
    /// Worker threads; 1 means fully serial.
    pub jobs: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { binding_budget: 1 << 12, jobs: 1 }
    }
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Enumerate(#[from] crate::enumerate::EnumerateError),
    #[error("sample {index}: {source}")]
    Generate { index: usize, source: crate::generate::GenerateError },
    #[error("reading corpus file: {0}")]
    Io(#[from] std::io::Error),
    #[error("corpus line {line}: {source}")]
    Parse { line: usize, source: graphcore::Graph6Error },
}

/// Runs `claim` over every graph from `source`. Deterministic given
/// (claim, source, seed), whatever `jobs` is.
pub fn run_suite(
    claim: ClaimId,
    source: &Source,
    seed: u64,
    opts: SuiteOptions,
) -> Result<CorpusReport, SuiteError> {
    let started = Instant::now();
    let graphs = materialize(source, seed)?;
    let outcomes: Vec<GraphOutcome> = if opts.jobs <= 1 {
        graphs.iter().map(|g| check_one(claim, g, opts.binding_budget)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("worker pool");
        pool.install(|| {
            graphs.par_iter().map(|g| check_one(claim, g, opts.binding_budget)).collect()
        })
    };
    let mut report = CorpusReport {
        claim: claim.name().to_string(),
        graphs_checked: 0,
        skipped_non_berge: 0,
        bindings_checked: 0,
        budget_overflows: 0,
        counterexamples: Vec::new(),
        wall_time_ms: 0,
    };
    for outcome in outcomes {
        match outcome {
            GraphOutcome::SkippedNonBerge => report.skipped_non_berge += 1,
            GraphOutcome::Checked { bindings, overflowed, counterexamples } => {
                report.graphs_checked += 1;
                report.bindings_checked += bindings;
                report.budget_overflows += overflowed as usize;
                report.counterexamples.extend(counterexamples);
            }
        }
    }
    report.wall_time_ms = started.elapsed().as_millis();
    Ok(report)
}

enum GraphOutcome {
    SkippedNonBerge,
    Checked {
        bindings: u64,
        overflowed: bool,
        counterexamples: Vec<crate::report::LemmaCounterexample>,
    },
}

fn check_one(claim: ClaimId, g: &Graph, budget: u64) -> GraphOutcome {
    if claim.berge_only() && !is_berge(g) {
        return GraphOutcome::SkippedNonBerge;
    }
    let out = check_claim(claim, g, budget);
    GraphOutcome::Checked {
        bindings: out.bindings,
        overflowed: out.overflowed,
        counterexamples: out.counterexamples,
    }
}

fn materialize(source: &Source, seed: u64) -> Result<Vec<Graph>, SuiteError> {
    match source {
        Source::Exhaustive(n) => Ok(enumerate_all_graphs(*n)?),
        Source::Graphs(list) => Ok(list.clone()),
        Source::File(path) => {
            let text = std::fs::read_to_string(path)?;
            let mut graphs = Vec::new();
            for (i, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                let g = parse_graph6(line.trim())
                    .map_err(|source| SuiteError::Parse { line: i + 1, source })?;
                graphs.push(g);
            }
            Ok(graphs)
        }
        Source::Generator { spec, samples } => (0..*samples)
            .map(|i| {
                generate(spec, seed ^ i as u64)
                    .map_err(|source| SuiteError::Generate { index: i, source })
            })
            .collect(),
    }
}
