//! Degree-derived parameters: `Δ`, `δ`, the Ore-degree `θ`, Stacho's `Δ₂`,
//! the interpolating family `Δ_ε`, threshold subgraphs `G^{≥r}`, `H(G)` and
//! the low/high vertex classification.
//!
//! Parameters defined as a maximum over edges return `None` on edgeless graphs.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Induced};

/// Exact rational, always kept in lowest terms.
pub type Rational = Ratio<i64>;

/// Parses `a/b` or a plain integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidParameter(format!("not a rational: {s:?}"));
    let (num, den) = match s.trim().split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let num: i64 = num.parse().map_err(|_| bad())?;
    let den: i64 = den.parse().map_err(|_| bad())?;
    if den <= 0 {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn format_rational(r: Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn check_unit_interval(eps: Rational) -> Result<()> {
    if eps < Rational::from_integer(0) || eps > Rational::from_integer(1) {
        Err(Error::InvalidParameter(format!("eps = {eps} not in [0, 1]")))
    } else {
        Ok(())
    }
}

pub fn max_degree(g: &Graph) -> Result<usize> {
    g.max_degree().ok_or(Error::EmptyGraph)
}

pub fn min_degree(g: &Graph) -> Result<usize> {
    g.min_degree().ok_or(Error::EmptyGraph)
}

/// `θ(G) = max over edges xy of d(x) + d(y)`.
pub fn ore_degree(g: &Graph) -> Option<usize> {
    g.edges().map(|(u, v)| g.deg(u) + g.deg(v)).max()
}

/// `G^{≥r}`: induced on vertices whose degree in `g` is at least `r`.
pub fn threshold_subgraph(g: &Graph, r: usize) -> Induced {
    g.induced_subgraph(g.vertices().filter(|&v| g.deg(v) >= r))
        .expect("vertices come from g")
}

/// `Δ₂(G)`, the largest `min{d(x), d(y)}` over edges `xy`.
pub fn delta2(g: &Graph) -> Option<usize> {
    g.edges().map(|(u, v)| g.deg(u).min(g.deg(v))).max()
}

/// `Δ₂(G)` as `min{r ≥ 0 : G^{≥r} is edgeless} - 1`.
pub fn delta2_by_threshold(g: &Graph) -> Option<usize> {
    if g.is_edgeless() {
        return None;
    }
    let r = (0..=g.order())
        .find(|&r| threshold_subgraph(g, r).graph.is_edgeless())
        .expect("G^{>=n} is empty");
    Some(r - 1)
}

/// `Δ_ε(G) = ⌊max over edges of (1-ε)·min{d(x),d(y)} + ε·max{d(x),d(y)}⌋`.
pub fn delta_eps(g: &Graph, eps: Rational) -> Result<Option<usize>> {
    check_unit_interval(eps)?;
    let one = Rational::from_integer(1);
    Ok(g.edges()
        .map(|(u, v)| {
            let (lo, hi) = (g.deg(u).min(g.deg(v)), g.deg(u).max(g.deg(v)));
            (one - eps) * Rational::from_integer(lo as i64) + eps * Rational::from_integer(hi as i64)
        })
        .max()
        .map(|m| m.floor().to_integer() as usize))
}

/// `H(G) = G^{≥χ(G)}`; the caller supplies `χ`.
pub fn script_h(g: &Graph, chi: usize) -> Induced {
    threshold_subgraph(g, chi)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexClass {
    Low,
    High,
}

/// A vertex is low when its degree is exactly `χ - 1`.
pub fn classify_low_high(g: &Graph, chi: usize) -> Vec<VertexClass> {
    g.vertices()
        .map(|v| {
            if g.deg(v) + 1 == chi {
                VertexClass::Low
            } else {
                VertexClass::High
            }
        })
        .collect()
}

pub fn is_low(g: &Graph, chi: usize, v: usize) -> bool {
    g.deg(v) + 1 == chi
}

/// Every degree parameter of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub n: usize,
    pub m: usize,
    pub delta: Option<usize>,
    pub delta_min: Option<usize>,
    pub theta: Option<usize>,
    pub delta2: Option<usize>,
    /// Keyed by `ε` written as `a/b`.
    pub delta_eps: BTreeMap<String, Option<usize>>,
}

pub fn degree_report(g: &Graph, eps: &[Rational]) -> Result<DegreeReport> {
    let mut delta_eps_map = BTreeMap::new();
    for &e in eps {
        delta_eps_map.insert(format_rational(e), delta_eps(g, e)?);
    }
    Ok(DegreeReport {
        n: g.order(),
        m: g.size(),
        delta: g.max_degree(),
        delta_min: g.min_degree(),
        theta: ore_degree(g),
        delta2: delta2(g),
        delta_eps: delta_eps_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_graph, cycle, f_graph, gnp_random, star, GeneratorSeed};
    use proptest::prelude::*;

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("2/4").unwrap(), r(1, 2));
        assert_eq!(parse_rational(" 1 ").unwrap(), r(1, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/2").is_err());
        assert_eq!(format_rational(r(2, 6)), "1/3");
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(max_degree(&complete_graph(7).unwrap()).unwrap(), 6);
        assert_eq!(max_degree(&f_graph(5).unwrap().graph).unwrap(), 5);
        assert_eq!(max_degree(&cycle(9).unwrap()).unwrap(), 2);
        assert_eq!(max_degree(&Graph::empty(0)), Err(Error::EmptyGraph));
    }

    /// Ore-degree by brute force over all vertex pairs.
    fn theta_brute(g: &Graph) -> Option<usize> {
        let mut best = None;
        for u in g.vertices() {
            for v in g.vertices() {
                if u != v && g.has_edge(u, v) {
                    let t = g.neighbors(u).len() + g.neighbors(v).len();
                    best = best.max(Some(t));
                }
            }
        }
        best
    }

    #[test]
    fn ore_degree_examples() {
        assert_eq!(ore_degree(&complete_graph(4).unwrap()), Some(6));
        let f5 = f_graph(5).unwrap().graph;
        assert_eq!(theta_brute(&f5), Some(9));
        assert_eq!(ore_degree(&f5), Some(9));
        assert_eq!(ore_degree(&star(6).unwrap()), Some(7));
        assert_eq!(ore_degree(&Graph::empty(3)), None);
    }

    #[test]
    fn threshold_subgraph_examples() {
        let f5 = f_graph(5).unwrap();
        assert_eq!(threshold_subgraph(&f5.graph, 0).graph, f5.graph);
        let top = threshold_subgraph(&f5.graph, 5);
        assert_eq!(top.old_ids, vec![f5.x, f5.y]);
        assert!(top.graph.is_edgeless());
        assert_eq!(threshold_subgraph(&cycle(5).unwrap(), 3).graph.order(), 0);
    }

    #[test]
    fn delta2_examples() {
        assert_eq!(delta2(&complete_graph(4).unwrap()), Some(3));
        assert_eq!(delta2(&f_graph(5).unwrap().graph), Some(4));
        assert_eq!(delta2(&star(5).unwrap()), Some(1));
        assert_eq!(delta2(&Graph::empty(4)), None);
        assert_eq!(delta2_by_threshold(&Graph::empty(4)), None);
        assert_eq!(delta2_by_threshold(&star(5).unwrap()), Some(1));
    }

    #[test]
    fn delta_eps_examples() {
        let f5 = f_graph(5).unwrap().graph;
        assert_eq!(delta_eps(&f5, r(1, 1)).unwrap(), Some(5));
        assert_eq!(delta_eps(&f5, r(1, 2)).unwrap(), Some(4));
        assert_eq!(delta_eps(&f5, r(0, 1)).unwrap(), Some(4));
        assert!(delta_eps(&f5, r(-1, 3)).is_err());
        assert!(delta_eps(&f5, r(4, 3)).is_err());
        assert_eq!(delta_eps(&Graph::empty(2), r(1, 2)).unwrap(), None);
    }

    #[test]
    fn delta_eps_at_one_third_boundary() {
        // one edge with degrees (1, 4): (2/3)·1 + (1/3)·4 = 2 exactly
        let g = star(4).unwrap();
        assert_eq!(delta_eps(&g, r(1, 3)).unwrap(), Some(2));
    }

    #[test]
    fn script_h_examples() {
        assert_eq!(script_h(&complete_graph(6).unwrap(), 6).graph.order(), 0);
        let f5 = f_graph(5).unwrap();
        let h = script_h(&f5.graph, 5);
        assert_eq!(h.graph.order(), 2);
        assert!(h.graph.is_edgeless());
        assert_eq!(script_h(&cycle(5).unwrap(), 3).graph.order(), 0);
    }

    #[test]
    fn low_high_examples() {
        assert!(classify_low_high(&complete_graph(5).unwrap(), 5)
            .iter()
            .all(|&c| c == VertexClass::Low));
        let f4 = f_graph(4).unwrap();
        let classes = classify_low_high(&f4.graph, 4);
        for v in f4.graph.vertices() {
            let expected = if v == f4.y { VertexClass::High } else { VertexClass::Low };
            assert_eq!(classes[v], expected, "vertex {v}");
        }
        assert!(classify_low_high(&cycle(5).unwrap(), 3)
            .iter()
            .all(|&c| c == VertexClass::Low));
    }

    #[test]
    fn report_collects_everything() {
        let rep = degree_report(&f_graph(5).unwrap().graph, &[r(1, 2)]).unwrap();
        assert_eq!(rep.delta, Some(5));
        assert_eq!(rep.delta2, Some(4));
        assert_eq!(rep.theta, Some(9));
        assert_eq!(rep.delta_eps["1/2"], Some(4));
    }

    proptest! {
        #[test]
        fn parameter_chain_and_special_values(n in 2usize..14, a in 1i64..8, seed in any::<u64>()) {
            let g = gnp_random(n, r(a, 8), GeneratorSeed(seed)).unwrap();
            if let Some(theta) = ore_degree(&g) {
                let d2 = delta2(&g).unwrap();
                let d = g.max_degree().unwrap();
                prop_assert!(d2 <= theta / 2 && theta / 2 <= d);
                prop_assert_eq!(delta_eps(&g, r(1, 1)).unwrap(), Some(d));
                prop_assert_eq!(delta_eps(&g, r(1, 2)).unwrap(), Some(theta / 2));
                prop_assert_eq!(delta_eps(&g, r(0, 1)).unwrap(), Some(d2));
                prop_assert_eq!(delta2_by_threshold(&g), Some(d2));
            }
        }

        #[test]
        fn delta_eps_is_monotone(n in 2usize..12, seed in any::<u64>()) {
            let g = gnp_random(n, r(1, 2), GeneratorSeed(seed)).unwrap();
            let grid: Vec<_> = (0..=24).map(|i| r(i, 24)).collect();
            let vals: Vec<_> = grid.iter().map(|&e| delta_eps(&g, e).unwrap()).collect();
            prop_assert!(vals.windows(2).all(|w| w[0] <= w[1]));
        }

        #[test]
        fn threshold_vertex_sets_shrink(n in 1usize..12, seed in any::<u64>()) {
            let g = gnp_random(n, r(1, 2), GeneratorSeed(seed)).unwrap();
            for rr in 0..n {
                let a = threshold_subgraph(&g, rr).old_ids;
                let b = threshold_subgraph(&g, rr + 1).old_ids;
                prop_assert!(b.iter().all(|v| a.contains(v)));
            }
        }
    }
}
