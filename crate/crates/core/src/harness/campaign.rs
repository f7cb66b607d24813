//! Batch law checking over enumerated, random or file-supplied graphs.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::dimacs::parse_dimacs;
use super::laws::{check_law_with, reverify, GraphFacts, Law};
use crate::constructions::{
    enumeration_cap, gnp_random_stream, labeled_count, labeled_graph, random_cap, read_graph6, to_graph6,
    GeneratorSeed,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::{format_rational, Rational};
use crate::verdict::LawVerdict;

/// Graphs processed per parallel work item.
const CHUNK: u64 = 4096;

#[derive(Debug, Clone)]
pub enum Source {
    /// Every labeled graph on `1..=max_n` vertices.
    Enumerate { max_n: usize, connected: bool },
    /// `count` samples of `G(n, p)`; sample `i` uses stream `i` of `seed`.
    Gnp { n: usize, p: Rational, count: u64, seed: u64 },
    /// DIMACS files, or graph6 lists for `.g6` / `.graph6` files.
    Files(Vec<PathBuf>),
}

impl Source {
    pub fn describe(&self) -> String {
        match self {
            Source::Enumerate { max_n, connected } => {
                let kind = if *connected { "connected" } else { "all" };
                format!("enumerate n<={max_n} {kind}")
            }
            Source::Gnp { n, p, count, seed } => {
                format!("gnp n={n} p={} count={count} seed={seed}", format_rational(*p))
            }
            Source::Files(paths) => {
                let names: Vec<String> = paths.iter().map(|p| p.display().to_string()).collect();
                format!("files {}", names.join(" "))
            }
        }
    }

    fn seed(&self) -> Option<u64> {
        match self {
            Source::Gnp { seed, .. } => Some(*seed),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct LawCounts {
    /// Non-skipped checks, `held + violated`.
    pub checked: u64,
    pub held: u64,
    pub skipped: u64,
    pub violated: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignReport {
    pub laws: Vec<String>,
    pub source: String,
    pub seed: Option<u64>,
    pub graphs: u64,
    pub counts: BTreeMap<String, LawCounts>,
    pub violations: Vec<LawVerdict>,
    /// Excluded from any stability comparison.
    pub wall_time_ms: u64,
}

impl CampaignReport {
    pub fn total_violations(&self) -> u64 {
        self.counts.values().map(|c| c.violated).sum()
    }
}

#[derive(Default)]
struct Partial {
    graphs: u64,
    counts: Vec<LawCounts>,
    violations: Vec<(Law, Graph, LawVerdict)>,
}

impl Partial {
    fn new(laws: usize) -> Self {
        Partial {
            graphs: 0,
            counts: vec![LawCounts::default(); laws],
            violations: Vec::new(),
        }
    }

    fn absorb(&mut self, g: &Graph, laws: &[Law]) {
        self.graphs += 1;
        let facts = GraphFacts::new(g);
        for (slot, &law) in self.counts.iter_mut().zip(laws) {
            let v = check_law_with(&facts, law, "");
            if v.is_skipped() {
                slot.skipped += 1;
            } else {
                slot.checked += 1;
                if v.holds {
                    slot.held += 1;
                } else {
                    slot.violated += 1;
                    let v = LawVerdict { graph: to_graph6(g), ..v };
                    self.violations.push((law, g.clone(), v));
                }
            }
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.graphs += other.graphs;
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            a.checked += b.checked;
            a.held += b.held;
            a.skipped += b.skipped;
            a.violated += b.violated;
        }
        self.violations.extend(other.violations);
        self
    }
}

/// Checks every graph of `source` against every law. `threads` fixes the
/// worker count (`None` uses rayon's default). Results are merged in
/// generation order, so the report does not depend on `threads` apart from
/// `wall_time_ms`. Each violation is re-verified before it is reported; a
/// violation that fails re-verification is an internal error.
pub fn run_campaign(source: &Source, laws: &[Law], threads: Option<usize>) -> Result<CampaignReport> {
    let started = Instant::now();
    let mut laws = laws.to_vec();
    laws.sort();
    laws.dedup();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::Assertion(format!("thread pool: {e}")))?;
    let partial = pool.install(|| collect(source, &laws))?;

    for (law, g, v) in &partial.violations {
        if !reverify(g, *law, v) {
            return Err(Error::Assertion(format!(
                "violation of {law} on {} failed re-verification",
                v.graph
            )));
        }
    }
    let counts = laws
        .iter()
        .zip(&partial.counts)
        .map(|(law, c)| (law.name().to_string(), *c))
        .collect();
    Ok(CampaignReport {
        laws: laws.iter().map(|l| l.name().to_string()).collect(),
        source: source.describe(),
        seed: source.seed(),
        graphs: partial.graphs,
        counts,
        violations: partial.violations.into_iter().map(|(_, _, v)| v).collect(),
        wall_time_ms: started.elapsed().as_millis() as u64,
    })
}

fn collect(source: &Source, laws: &[Law]) -> Result<Partial> {
    let empty = || Partial::new(laws.len());
    match source {
        Source::Enumerate { max_n, connected } => {
            let cap = enumeration_cap();
            if *max_n > cap {
                return Err(Error::CapExceeded { n: *max_n, cap });
            }
            let mut total = empty();
            for n in 1..=*max_n {
                let count = labeled_count(n);
                let chunks = count.div_ceil(CHUNK);
                let parts: Vec<Partial> = (0..chunks)
                    .into_par_iter()
                    .map(|c| {
                        let mut part = empty();
                        for mask in c * CHUNK..((c + 1) * CHUNK).min(count) {
                            let g = labeled_graph(n, mask);
                            if !*connected || g.is_connected() {
                                part.absorb(&g, laws);
                            }
                        }
                        part
                    })
                    .collect();
                total = parts.into_iter().fold(total, Partial::merge);
            }
            Ok(total)
        }
        Source::Gnp { n, p, count, seed } => {
            let cap = random_cap();
            if *n > cap {
                return Err(Error::CapExceeded { n: *n, cap });
            }
            let parts: Vec<Result<Partial>> = (0..*count)
                .into_par_iter()
                .map(|i| {
                    let g = gnp_random_stream(*n, *p, GeneratorSeed(*seed), i)?;
                    let mut part = empty();
                    part.absorb(&g, laws);
                    Ok(part)
                })
                .collect();
            parts.into_iter().try_fold(empty(), |acc, p| Ok(acc.merge(p?)))
        }
        Source::Files(paths) => {
            let mut graphs = Vec::new();
            for path in paths {
                graphs.extend(load_graphs(path)?);
            }
            let parts: Vec<Partial> = graphs
                .par_iter()
                .map(|g| {
                    let mut part = empty();
                    part.absorb(g, laws);
                    part
                })
                .collect();
            Ok(parts.into_iter().fold(empty(), Partial::merge))
        }
    }
}

/// Reads one graph file: graph6 lists for `.g6` / `.graph6`, DIMACS otherwise.
pub fn load_graphs(path: &std::path::Path) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6" | "graph6") => read_graph6(&text),
        _ => Ok(vec![parse_dimacs(&text)?]),
    }
}
