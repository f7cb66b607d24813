//! Reading and writing DIMACS and graph6.
//!
//! ```text
//! cargo run --example dimacs_io
//! ```

use delta2::constructions::{f_graph, read_graph6, to_graph6};
use delta2::harness::dimacs::{parse_dimacs, write_dimacs};

fn main() -> delta2::Result<()> {
    let text = "c a triangle with a tail\np edge 4 4\ne 1 2\ne 2 3\ne 3 1\ne 3 4\ne 1 2\n";
    let g = parse_dimacs(text)?;
    println!("parsed {} vertices and {} edges (duplicate collapsed)", g.order(), g.size());
    print!("{}", write_dimacs(&g));

    match parse_dimacs("p edge 2 1\ne 2 2\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("self-loops are rejected"),
    }

    let f4 = f_graph(4)?.graph;
    let line = to_graph6(&f4);
    println!("F_4 in graph6: {line}");
    let back = read_graph6(&format!("{line}\nBw\n"))?;
    println!("read back {} graphs; first equals F_4: {}", back.len(), back[0] == f4);
    Ok(())
}
