//! Exact chromatic number, clique number, criticality and list coloring.
//!
//! ```text
//! cargo run --example exact_oracles
//! ```

use delta2::constructions::{cycle, f_graph, petersen};
use delta2::solvers::{
    chromatic_number, critical_vertices, is_vertex_critical, list_color_feasible, maximum_clique, optimal_coloring,
    ListAssignment,
};
use delta2::Graph;

fn main() -> delta2::Result<()> {
    let wheel = cycle(5)?.join(&Graph::empty(1));
    for (name, g) in [("petersen", petersen()), ("odd wheel W_5", wheel.clone()), ("F_7", f_graph(7)?.graph)] {
        let coloring = optimal_coloring(&g);
        println!(
            "{name}: chi = {}, omega = {}, critical = {}, coloring = {:?}",
            chromatic_number(&g),
            maximum_clique(&g).len(),
            is_vertex_critical(&g)?,
            coloring.colors()
        );
    }

    // a pendant vertex is never critical
    let mut edges: Vec<_> = cycle(5)?.edges().collect();
    edges.push((0, 5));
    let pendant = Graph::from_edges(6, edges)?;
    println!("C_5 plus a pendant: critical vertices {:?}", critical_vertices(&pendant));

    // the 5-cycle is not 2-colorable, but lists can force or rescue a coloring
    let c5 = cycle(5)?;
    let two = ListAssignment::uniform(5, [0, 1]);
    println!("C_5 from lists {{0,1}}: {:?}", list_color_feasible(&c5, &two)?);
    let mut lists = two.0.clone();
    lists[0] = vec![2];
    println!("C_5 with vertex 0 forced to 2: {:?}", list_color_feasible(&c5, &ListAssignment(lists))?);
    Ok(())
}
