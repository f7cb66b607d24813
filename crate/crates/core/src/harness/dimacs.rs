//! DIMACS `col` graph files.
//!
//! ```text
//! c optional comments
//! p edge <n> <m>
//! e <u> <v>      (1-based)
//! ```
//!
//! `p col` is accepted as a synonym of `p edge`. The edge count on the
//! `p` line is not enforced; repeated edges collapse into one.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("{what} {tok:?} is not a non-negative integer")))
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut builder: Option<GraphBuilder> = None;
    let mut order = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if builder.is_some() {
                    return Err(parse_err(line, "second p line"));
                }
                match toks.next() {
                    Some("edge" | "col") => {}
                    other => return Err(parse_err(line, format!("expected 'p edge', found {other:?}"))),
                }
                order = number(toks.next(), line, "vertex count")?;
                number(toks.next(), line, "edge count")?;
                builder = Some(GraphBuilder::new(order));
            }
            Some("e") => {
                let b = builder
                    .as_mut()
                    .ok_or_else(|| parse_err(line, "edge line before the p line"))?;
                let u = number(toks.next(), line, "endpoint")?;
                let v = number(toks.next(), line, "endpoint")?;
                for w in [u, v] {
                    if w == 0 || w > order {
                        return Err(parse_err(line, format!("vertex {w} out of range 1..={order}")));
                    }
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop on vertex {u}")));
                }
                b.add_edge(u - 1, v - 1)?;
            }
            Some(tok) => return Err(parse_err(line, format!("unknown line type {tok:?}"))),
        }
        if toks.next().is_some() {
            return Err(parse_err(line, "trailing tokens"));
        }
    }
    builder
        .map(GraphBuilder::build)
        .ok_or_else(|| parse_err(0, "missing p line"))
}

/// `p edge n m` followed by `e u v` lines with `u < v`, sorted ascending.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("string write");
    }
    out
}
