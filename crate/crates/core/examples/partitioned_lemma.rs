//! Minimal partitioned colorings and the complete-or-odd-cycle property of
//! the singleton's component.
//!
//! ```text
//! cargo run --example partitioned_lemma
//! ```

use delta2::constructions::cycle;
use delta2::partitioned::{all_global_minima, check_mozhan_lemma, feasible_specs};
use delta2::solvers::chromatic_number;
use delta2::Graph;

fn main() -> delta2::Result<()> {
    // the join of a 5-cycle and an edge: vertex-critical with chi = 5
    let g = cycle(5)?.join(&Graph::from_edges(2, [(0, 1)])?);
    let chi = chromatic_number(&g);
    println!("graph on {} vertices, chi = {chi}", g.order());

    for spec in feasible_specs(chi) {
        let Some(minima) = all_global_minima(&g, &spec, chi)? else {
            println!("{spec}: no partitioned coloring");
            continue;
        };
        let holds = minima.colorings.iter().all(|pc| check_mozhan_lemma(&g, pc).holds);
        println!(
            "{spec}: minimum objective {}, {} minimizers, property holds at all of them: {holds}",
            minima.objective,
            minima.colorings.len()
        );
        let pc = &minima.colorings[0];
        for i in 0..spec.groups() {
            let z = pc.z_component(&g, i);
            println!(
                "    group {i}: x = {}, d_Z(x) = {}, r = {}, Z = {:?} ({} edges)",
                pc.singleton(),
                pc.singleton_degree_in(&g, i),
                spec.r(i),
                z.old_ids,
                z.graph.size()
            );
        }
    }
    Ok(())
}
