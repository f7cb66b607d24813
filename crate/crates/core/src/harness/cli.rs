//! Command-line front end. Every command prints one JSON object with sorted
//! keys and a `"schema"` field to stdout; diagnostics go to stderr.
//!
//! Exit codes: `0` success, `1` a law violation or a walk that did not end in
//! a clique certificate, `2` usage, parse, input or cap errors, `3` an
//! internal assertion failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use super::campaign::{load_graphs, run_campaign, CampaignReport, Source};
use super::laws::{check_law, reverify, Law};
use crate::constructions::{enumeration_cap, f_graph, labeled_count, labeled_graph, n_epsilon, to_graph6};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::{degree_report, format_rational, parse_rational, Rational};
use crate::partitioned::{all_global_minima, check_mozhan_lemma, enumerate_with_chi, PartitionSpec};
use crate::solvers::{chromatic_number, maximum_clique, optimal_coloring};
use crate::walk::{run_walk, WalkOutcome};

/// Value of the `"schema"` key in every JSON document.
pub const SCHEMA: &str = "delta2/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "delta2", version, about = "Degree parameters, exact coloring oracles and chromatic-bound checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degree parameters of a graph
    Params {
        file: PathBuf,
        /// Values of ε for Δ_ε, as a/b; repeatable
        #[arg(long = "eps", value_parser = parse_eps)]
        eps: Vec<Rational>,
    },
    /// Chromatic number with an optimal coloring
    Chi { file: PathBuf },
    /// Clique number with a maximum clique
    Omega { file: PathBuf },
    /// Check named laws on one graph
    Verify {
        file: PathBuf,
        #[arg(long = "law", required = true, value_parser = parse_law)]
        laws: Vec<Law>,
    },
    /// Check laws on seeded G(n, p) samples
    Fuzz {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_eps)]
        p: Rational,
        #[arg(long)]
        count: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long = "law", required = true, value_parser = parse_law)]
        laws: Vec<Law>,
        #[command(flatten)]
        threads: Threads,
    },
    /// Check laws on every labeled graph with 1 to N vertices
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long = "law", value_parser = parse_law, required_unless_present = "graph6")]
        laws: Vec<Law>,
        /// Only connected graphs
        #[arg(long)]
        connected: bool,
        /// List the graphs on exactly N vertices in graph6 instead of checking laws
        #[arg(long, conflicts_with = "laws")]
        graph6: bool,
        #[command(flatten)]
        threads: Threads,
    },
    /// Named constructions
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Run the swap walk that certifies a complete graph
    Walk {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        /// Iteration cap; defaults to 4 n χ
        #[arg(long = "max-iter")]
        max_iter: Option<usize>,
        /// Write the JSON event trace here
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Check the complete-or-odd-cycle property at every global minimum
    LemmaCheck {
        file: PathBuf,
        /// Group sizes r1,r2,…
        #[arg(long, value_parser = parse_spec)]
        spec: PartitionSpec,
        /// Restrict to colorings with this singleton (0-based)
        #[arg(long)]
        x: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// The graph F_n
    Fn {
        #[arg(long)]
        n: usize,
        /// Write the graph as DIMACS to this file
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// The order n_ε of the witness graph for ε
    Neps {
        #[arg(long, value_parser = parse_eps)]
        eps: Rational,
    },
}

#[derive(Args, Debug)]
struct Threads {
    /// Worker threads; results do not depend on this
    #[arg(long)]
    threads: Option<usize>,
}

fn parse_eps(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_law(s: &str) -> std::result::Result<Law, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_spec(s: &str) -> std::result::Result<PartitionSpec, String> {
    PartitionSpec::parse(s).map_err(|e| e.to_string())
}

/// Exit code for an error that escaped a command.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Assertion(_) => EXIT_INTERNAL,
        Error::Hypothesis(_) => EXIT_VIOLATION,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (program name first) and runs the command, writing JSON to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command) {
        Ok((doc, code)) => {
            let text = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
            let _ = writeln!(out, "{text}");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Entry point for the binary.
pub fn cli_dispatch<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}

fn document(value: impl Serialize) -> Value {
    let mut v = serde_json::to_value(value).expect("serializable");
    if let Value::Object(map) = &mut v {
        map.insert("schema".into(), SCHEMA.into());
    }
    v
}

fn load_one(path: &Path) -> Result<Graph> {
    let mut graphs = load_graphs(path)?;
    if graphs.len() != 1 {
        return Err(Error::InvalidParameter(format!(
            "{} holds {} graphs, expected one",
            path.display(),
            graphs.len()
        )));
    }
    Ok(graphs.pop().expect("one graph"))
}

fn campaign_doc(report: CampaignReport) -> (Value, i32) {
    let code = if report.total_violations() > 0 { EXIT_VIOLATION } else { EXIT_OK };
    (document(report), code)
}

fn execute(cmd: Command) -> Result<(Value, i32)> {
    match cmd {
        Command::Params { file, eps } => {
            let g = load_one(&file)?;
            Ok((document(degree_report(&g, &eps)?), EXIT_OK))
        }
        Command::Chi { file } => {
            let g = load_one(&file)?;
            let coloring = optimal_coloring(&g);
            let doc = json!({ "chi": chromatic_number(&g), "coloring": coloring.colors() });
            Ok((document(doc), EXIT_OK))
        }
        Command::Omega { file } => {
            let g = load_one(&file)?;
            let clique = maximum_clique(&g);
            Ok((document(json!({ "omega": clique.len(), "clique": clique })), EXIT_OK))
        }
        Command::Verify { file, mut laws } => {
            let g = load_one(&file)?;
            laws.sort();
            laws.dedup();
            let mut verdicts = Vec::new();
            let mut violated = false;
            for law in laws {
                let v = check_law(&g, law);
                if v.is_violation() {
                    if !reverify(&g, law, &v) {
                        return Err(Error::Assertion(format!("violation of {law} failed re-verification")));
                    }
                    violated = true;
                }
                verdicts.push(v);
            }
            let code = if violated { EXIT_VIOLATION } else { EXIT_OK };
            Ok((document(json!({ "graph": to_graph6(&g), "verdicts": verdicts })), code))
        }
        Command::Fuzz {
            n,
            p,
            count,
            seed,
            laws,
            threads,
        } => {
            if p < Rational::from_integer(0) || p > Rational::from_integer(1) {
                return Err(Error::InvalidParameter(format!("p = {} not in [0, 1]", format_rational(p))));
            }
            let src = Source::Gnp { n, p, count, seed };
            Ok(campaign_doc(run_campaign(&src, &laws, threads.threads)?))
        }
        Command::Enumerate {
            n,
            laws,
            connected,
            graph6,
            threads,
        } => {
            if graph6 {
                let cap = enumeration_cap();
                if n > cap {
                    return Err(Error::CapExceeded { n, cap });
                }
                let graphs: Vec<String> = (0..labeled_count(n))
                    .map(|mask| labeled_graph(n, mask))
                    .filter(|g| !connected || g.is_connected())
                    .map(|g| to_graph6(&g))
                    .collect();
                let doc = json!({ "n": n, "connected": connected, "count": graphs.len(), "graph6": graphs });
                return Ok((document(doc), EXIT_OK));
            }
            let src = Source::Enumerate { max_n: n, connected };
            Ok(campaign_doc(run_campaign(&src, &laws, threads.threads)?))
        }
        Command::Construct { what } => match what {
            Construct::Fn { n, output } => {
                let f = f_graph(n)?;
                let mut doc = json!({
                    "n": f.n,
                    "order": f.graph.order(),
                    "size": f.graph.size(),
                    "x": f.x,
                    "y": f.y,
                    "graph6": to_graph6(&f.graph),
                });
                if let Some(path) = output {
                    std::fs::write(&path, super::dimacs::write_dimacs(&f.graph))
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    doc["file"] = path.display().to_string().into();
                }
                Ok((document(doc), EXIT_OK))
            }
            Construct::Neps { eps } => {
                let n = n_epsilon(eps)?;
                Ok((document(json!({ "eps": format_rational(eps), "n_eps": n })), EXIT_OK))
            }
        },
        Command::Walk {
            file,
            k,
            max_iter,
            trace,
        } => {
            let g = load_one(&file)?;
            let outcome = run_walk(&g, k, max_iter)?;
            if let Some(path) = trace {
                let text = serde_json::to_string_pretty(outcome.trace()).expect("trace serializes");
                std::fs::write(&path, text + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            }
            let code = if outcome.is_certificate() { EXIT_OK } else { EXIT_VIOLATION };
            let mut doc = document(&outcome);
            if let Value::Object(map) = &mut doc {
                map.remove("trace");
                map.insert("trace_events".into(), outcome.trace().len().into());
            }
            if let WalkOutcome::CliqueCertificate { f, .. } = &outcome {
                doc["f_size"] = f.len().into();
            }
            Ok((doc, code))
        }
        Command::LemmaCheck { file, spec, x } => {
            let g = load_one(&file)?;
            let cap = enumeration_cap();
            if g.order() > cap {
                return Err(Error::CapExceeded { n: g.order(), cap });
            }
            let chi = chromatic_number(&g);
            let minima = match x {
                None => all_global_minima(&g, &spec, chi)?.map(|m| (m.objective, m.colorings)),
                Some(x) => {
                    let all: Vec<_> = enumerate_with_chi(&g, &spec, x, chi)?.collect();
                    let best = all.iter().map(|pc| pc.objective(&g)).min();
                    best.map(|b| (b, all.into_iter().filter(|pc| pc.objective(&g) == b).collect()))
                }
            };
            let Some((objective, colorings)) = minima else {
                return Err(Error::Infeasible(x.unwrap_or(0)));
            };
            let verdicts: Vec<_> = colorings.iter().map(|pc| check_mozhan_lemma(&g, pc)).collect();
            let violations: Vec<_> = verdicts.iter().filter(|v| v.is_violation()).cloned().collect();
            let code = if violations.is_empty() { EXIT_OK } else { EXIT_VIOLATION };
            let doc = json!({
                "graph": to_graph6(&g),
                "spec": spec.parts(),
                "singleton": x,
                "objective": objective,
                "minimal_colorings": colorings.len(),
                "holds": violations.is_empty(),
                "violations": violations,
            });
            Ok((document(doc), code))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("delta2").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn neps() {
        let (code, out, _) = call(&["construct", "neps", "--eps", "1/3"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["n_eps"], 7);
        assert_eq!(v["schema"], SCHEMA);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "x.col"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "x.col", "--law", "nope"]).0, EXIT_USAGE);
        assert_eq!(call(&["construct", "neps", "--eps", "3/2"]).0, EXIT_USAGE);
        assert_eq!(call(&["chi", "/nonexistent/graph.col"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }
}
