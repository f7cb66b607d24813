//! Graph generators: classical families, the split-join extremal graph `F_n`,
//! the order `n_ε` of the tightness witness, seeded random graphs, labeled
//! small-graph enumeration and graph6 line ingestion.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Vertex};
use crate::params::Rational;

/// Environment variable overriding the labeled-enumeration order cap.
pub const ENUM_CAP_ENV: &str = "DELTA2_ENUM_CAP";
/// Environment variable overriding the order cap for random instances.
pub const RANDOM_CAP_ENV: &str = "DELTA2_RANDOM_CAP";

pub const DEFAULT_ENUM_CAP: usize = 8;
pub const DEFAULT_RANDOM_CAP: usize = 40;

fn cap_from_env(var: &str, default: usize) -> usize {
    std::env::var(var)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(default)
}

pub fn enumeration_cap() -> usize {
    cap_from_env(ENUM_CAP_ENV, DEFAULT_ENUM_CAP)
}

pub fn random_cap() -> usize {
    cap_from_env(RANDOM_CAP_ENV, DEFAULT_RANDOM_CAP)
}

/// Seed of the random-graph generator. Equal seeds and parameters give equal graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct GeneratorSeed(pub u64);

pub fn complete_graph(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            b.add_edge(u, v)?;
        }
    }
    Ok(b.build())
}

/// `C_n` with edges `i ~ i+1 (mod n)`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `K_{1,n}` with center 0.
pub fn star(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("star needs n >= 1".into()));
    }
    Graph::from_edges(n + 1, (1..=n).map(|i| (0, i)))
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).expect("static edge list")
}

/// `F_n` with its two designated nonadjacent vertices.
#[derive(Debug, Clone)]
pub struct FGraph {
    pub graph: Graph,
    pub x: Vertex,
    pub y: Vertex,
    pub n: usize,
}

/// Builds `F_n`: `K_n - xy` on vertices `0..n` (with `x = 0`, `y = 1`) and a
/// disjoint `K_{n-1}` on `n..2n-1`. The lowest `⌊(n-1)/2⌋` vertices of the
/// `K_{n-1}` are joined to `x`, the remaining `⌈(n-1)/2⌉` to `y`.
///
/// `F_3` is the 5-cycle; the closed forms for `H(F_n)` need `n >= 4`.
pub fn f_graph(n: usize) -> Result<FGraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("F_n needs n >= 3, got {n}")));
    }
    let (x, y) = (0, 1);
    let mut b = GraphBuilder::new(2 * n - 1);
    for u in 0..n {
        for v in u + 1..n {
            if (u, v) != (x, y) {
                b.add_edge(u, v)?;
            }
        }
    }
    for u in n..2 * n - 1 {
        for v in u + 1..2 * n - 1 {
            b.add_edge(u, v)?;
        }
    }
    let to_x = (n - 1) / 2;
    for (i, u) in (n..2 * n - 1).enumerate() {
        b.add_edge(if i < to_x { x } else { y }, u)?;
    }
    Ok(FGraph {
        graph: b.build(),
        x,
        y,
        n,
    })
}

/// Order of the tightness witness for `ε`: `1 + 2/ε` when `1/ε` is an
/// integer, `3 + 2⌊1/ε⌋` otherwise.
pub fn n_epsilon(eps: Rational) -> Result<usize> {
    if eps <= Rational::from_integer(0) || eps > Rational::from_integer(1) {
        return Err(Error::InvalidParameter(format!(
            "n_eps needs 0 < eps <= 1, got {eps}"
        )));
    }
    let inv = eps.recip();
    let n = if inv.is_integer() {
        1 + 2 * inv.to_integer()
    } else {
        3 + 2 * inv.floor().to_integer()
    };
    Ok(n as usize)
}

/// `G(n, p)` under a fixed scheme: a `ChaCha8Rng` seeded with `seed` draws one
/// `u64` uniform in `0..denom(p)` per vertex pair, pairs visited as
/// `(0,1), (0,2), …, (0,n-1), (1,2), …`; the pair is an edge iff the draw is
/// below `numer(p)`.
pub fn gnp_random(n: usize, p: Rational, seed: GeneratorSeed) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
    gnp_with(n, p, &mut rng)
}

/// As [`gnp_random`] but on stream `stream` of the seeded generator, so that
/// instance `i` of a campaign is independent of instances before it.
pub fn gnp_random_stream(n: usize, p: Rational, seed: GeneratorSeed, stream: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
    rng.set_stream(stream);
    gnp_with(n, p, &mut rng)
}

fn gnp_with(n: usize, p: Rational, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if *p.numer() < 0 || p > Rational::from_integer(1) {
        return Err(Error::InvalidParameter(format!("edge probability {p} not in [0, 1]")));
    }
    let numer = *p.numer() as u64;
    let denom = *p.denom() as u64;
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_range(0..denom) < numer {
                b.add_edge(u, v)?;
            }
        }
    }
    Ok(b.build())
}

/// Labeled graph on `n` vertices whose edge set is the bit pattern `mask`
/// over pairs in lexicographic order `(0,1), (0,2), …, (n-2,n-1)`.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let mut b = GraphBuilder::new(n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                b.add_edge(u, v).expect("in range");
            }
            bit += 1;
        }
    }
    b.build()
}

/// Number of labeled graphs on `n` vertices, `2^(n choose 2)`.
pub fn labeled_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Streams every labeled graph on `n` vertices in mask order, optionally
/// keeping only connected ones.
pub fn enumerate_small_graphs(n: usize, connected_only: bool) -> Result<impl Iterator<Item = Graph>> {
    let cap = enumeration_cap();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok((0..labeled_count(n))
        .map(move |mask| labeled_graph(n, mask))
        .filter(move |g| !connected_only || g.is_connected()))
}

/// Parses one graph6 line (an optional `>>graph6<<` prefix is accepted).
pub fn parse_graph6(line: &str) -> std::result::Result<Graph, String> {
    let body = line.trim_end_matches(['\r', '\n']);
    let body = body.strip_prefix(">>graph6<<").unwrap_or(body).as_bytes();
    if let Some(&c) = body.iter().find(|&&c| !(63..=126).contains(&c)) {
        return Err(format!("byte {c:#04x} outside the graph6 range"));
    }
    let (n, rest) = match body {
        [] => return Err("empty graph6 string".into()),
        [126, 126, ..] => return Err("graphs of order above 258047 are not supported".into()),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err("truncated order prefix".into()),
        [first, rest @ ..] => (*first as usize - 63, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if rest.len() != expected {
        return Err(format!(
            "order {n} needs {expected} data bytes, found {}",
            rest.len()
        ));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err("nonzero padding bits".into());
    }
    let mut b = GraphBuilder::new(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                b.add_edge(u, v).map_err(|e| e.to_string())?;
            }
            k += 1;
        }
    }
    Ok(b.build())
}

/// Reads a graph6 file: one graph per non-blank line.
pub fn read_graph6(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim()).map_err(|message| Error::Parse {
                line: i + 1,
                message,
            })
        })
        .collect()
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 is ascii")
}
