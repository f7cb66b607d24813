//! Degree parameters, exact coloring oracles and partitioned-coloring
//! recoloring for small graphs, with checkers for Brooks-type chromatic bounds.

pub mod constructions;
pub mod error;
pub mod graph;
pub mod harness;
pub mod params;
pub mod partitioned;
pub mod solvers;
pub mod verdict;
pub mod walk;

pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, Vertex};
pub use params::Rational;
