//! Degree parameters of a few graphs, including Δ_ε at several values of ε.
//!
//! ```text
//! cargo run --example degree_params
//! ```

use delta2::constructions::{f_graph, petersen};
use delta2::params::{degree_report, parse_rational, threshold_subgraph};

fn main() -> delta2::Result<()> {
    let eps = ["0", "1/4", "1/2", "1"]
        .iter()
        .map(|s| parse_rational(s))
        .collect::<delta2::Result<Vec<_>>>()?;

    let graphs = [("petersen", petersen()), ("F_5", f_graph(5)?.graph), ("F_8", f_graph(8)?.graph)];
    for (name, g) in &graphs {
        let report = degree_report(g, &eps)?;
        println!("{name}: {}", serde_json::to_string(&report).expect("serializable"));
    }

    // Δ₂ + 1 is the least r for which the subgraph on vertices of degree >= r
    // has no edge
    let f8 = &graphs[2].1;
    for r in 6..=11 {
        let sub = threshold_subgraph(f8, r);
        println!("F_8 restricted to degree >= {r}: {} vertices, {} edges", sub.graph.order(), sub.graph.size());
    }
    Ok(())
}
