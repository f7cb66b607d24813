//! The graphs F_n, whose chromatic number exceeds both ω and Δ_ε for small ε,
//! and the largest such n for each ε.
//!
//! ```text
//! cargo run --example f_construction
//! ```

use delta2::constructions::{f_graph, n_epsilon};
use delta2::params::{delta2, delta_eps, format_rational, parse_rational};
use delta2::solvers::{chromatic_number, clique_number};

fn main() -> delta2::Result<()> {
    println!(" n  order  chi  omega  Delta  Delta2");
    for n in 4..=10 {
        let f = f_graph(n)?.graph;
        println!(
            "{n:>2}  {:>5}  {:>3}  {:>5}  {:>5}  {:>6}",
            f.order(),
            chromatic_number(&f),
            clique_number(&f),
            f.max_degree().unwrap_or(0),
            delta2(&f).unwrap_or(0)
        );
    }

    println!();
    for s in ["1", "1/2", "1/3", "2/5", "3/7", "1/10"] {
        let eps = parse_rational(s)?;
        let n = n_epsilon(eps)?;
        let f = f_graph(n)?.graph;
        println!(
            "eps = {:>4}: n_eps = {n:>2}, Delta_eps(F_n) = {:?}, chi(F_n) = {}",
            format_rational(eps),
            delta_eps(&f, eps)?.unwrap_or(0),
            chromatic_number(&f)
        );
    }
    Ok(())
}
