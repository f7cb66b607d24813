//! Rotating colors along a path from the singleton to a vertex with too many
//! neighbors in its group lowers the objective; swapping with a neighbor in a
//! well-shaped component keeps it.
//!
//! ```text
//! cargo run --example kempe_shift
//! ```

use delta2::constructions::complete_graph;
use delta2::partitioned::{find_shift_path, global_min_coloring, kempe_path_shift, swap, PartitionSpec, PartitionedColoring};
use delta2::Graph;

fn main() -> delta2::Result<()> {
    // a 5-cycle 0-1-3-4-2 plus leaves on vertex 3; classes {1,4,5,6} and {2,3}
    let g = Graph::from_edges(7, [(0, 1), (0, 2), (1, 3), (3, 4), (2, 4), (3, 5), (3, 6)])?;
    let spec = PartitionSpec::new(vec![2])?;
    let pc = PartitionedColoring::from_classes(&g, &spec, 0, &[vec![vec![1, 4, 5, 6], vec![2, 3]]])?;
    println!("before: singleton {}, objective {}", pc.singleton(), pc.objective(&g));
    if let Some(path) = find_shift_path(&g, &pc, 0) {
        let next = kempe_path_shift(&g, &pc, 0, &path)?;
        println!("shift along {path:?}: singleton {}, objective {}", next.singleton(), next.objective(&g));
    }

    let k6 = complete_graph(6)?;
    let spec = PartitionSpec::new(vec![3, 2])?;
    let pc = global_min_coloring(&k6, &spec, 0)?;
    let y = pc.u_set(1)[0];
    let swapped = swap(&k6, &pc, 1, y)?;
    let back = swap(&k6, &swapped, 1, 0)?;
    println!(
        "K_6 swap 0 <-> {y}: objective {} -> {}, swapping back restores the coloring: {}",
        pc.objective(&k6),
        swapped.objective(&k6),
        back == pc
    );
    Ok(())
}
