//! Checking laws at scale and the command-line interface.

pub mod campaign;
pub mod cli;
pub mod dimacs;
pub mod laws;
