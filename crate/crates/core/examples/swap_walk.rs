//! The swap walk: on a graph meeting its hypotheses it ends with a vertex
//! whose closed neighborhood is a clique of size χ; otherwise it names the
//! failing hypothesis.
//!
//! ```text
//! cargo run --example swap_walk
//! ```

use delta2::constructions::{complete_graph, f_graph};
use delta2::walk::{check_hypotheses, replay, run_walk, TraceEvent, WalkOutcome};

fn main() -> delta2::Result<()> {
    let k12 = complete_graph(12)?;
    let outcome = run_walk(&k12, 2, None)?;
    if let WalkOutcome::CliqueCertificate { f, pivot, steps, trace } = &outcome {
        println!("K_12, k = 2: certificate after {steps} steps, pivot {pivot}, |F| = {}", f.len());
        for ev in trace {
            if let TraceEvent::Step { step, from, to, group, next_group, q, .. } = ev {
                println!("  step {step}: {from} -> {to} in group {group}, next group {next_group}, q[{}] = {}", q.vertex, q.value);
            }
        }
        println!("  trace replays identically: {}", replay(&k12, 2, trace)?);
    }

    let f9 = f_graph(9)?.graph;
    let k = f9.max_degree().unwrap_or(0) + 1 - 9;
    let verdict = check_hypotheses(&f9, k)?;
    let failed = verdict.witness.as_ref().map(|w| w["failed"].clone());
    println!("F_9, k = {k}: hypotheses hold = {}, failed = {}", verdict.holds, failed.unwrap_or_default());
    Ok(())
}
