//! Checking chromatic bounds over every small graph and over random graphs.
//!
//! ```text
//! cargo run --release --example law_campaign
//! ```

use delta2::harness::campaign::{run_campaign, Source};
use delta2::harness::laws::{check_law, Law};
use delta2::{constructions::petersen, Rational};

fn main() -> delta2::Result<()> {
    for law in Law::ALL {
        let v = check_law(&petersen(), law);
        println!("petersen {law}: holds = {}, skipped = {:?}", v.holds, v.skipped);
    }

    let exhaustive = run_campaign(&Source::Enumerate { max_n: 6, connected: true }, &Law::ALL, None)?;
    println!("\n{}: {} graphs", exhaustive.source, exhaustive.graphs);
    for (law, c) in &exhaustive.counts {
        println!("  {law:<13} checked {:>6}  skipped {:>6}  violated {}", c.checked, c.skipped, c.violated);
    }

    let random = Source::Gnp { n: 16, p: Rational::new(1, 2), count: 200, seed: 42 };
    let report = run_campaign(&random, &[Law::Main, Law::Brooks, Law::Stacho], Some(2))?;
    println!("\n{}: {} violations in {} ms", report.source, report.total_violations(), report.wall_time_ms);
    Ok(())
}
