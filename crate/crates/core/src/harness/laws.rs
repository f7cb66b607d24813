//! Named chromatic bounds, each checked with exact integer arithmetic.
//!
//! | law | precondition | statement |
//! |---|---|---|
//! | `brooks` | `Δ >= 3` | `χ <= max(ω, Δ)` |
//! | `stacho` | an edge | `χ <= Δ₂ + 1` |
//! | `ore` | `θ >= 10` | `χ <= max(ω, ⌊θ/2⌋)` |
//! | `main` | `Δ >= 3` | `6χ <= max(6ω, 6Δ₂, 5(Δ+1))` |
//! | `observation` | an edge | `χ > Δ₂` iff `H(G)` is edgeless |
//! | `corollary-k1` | vertex-critical, `χ >= Δ >= 6`, `H(G)` edgeless | `G` is complete |
//!
//! An unmet precondition yields a skipped verdict.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use crate::constructions::to_graph6;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::{delta2, ore_degree, script_h};
use crate::solvers::{chromatic_number, clique_number, is_vertex_critical_with_chi, k_colorable, maximum_clique};
use crate::verdict::LawVerdict;
use crate::witness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Law {
    Brooks,
    Stacho,
    Ore,
    Main,
    Observation,
    CorollaryK1,
}

impl Law {
    pub const ALL: [Law; 6] = [
        Law::Brooks,
        Law::Stacho,
        Law::Ore,
        Law::Main,
        Law::Observation,
        Law::CorollaryK1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Brooks => "brooks",
            Law::Stacho => "stacho",
            Law::Ore => "ore",
            Law::Main => "main",
            Law::Observation => "observation",
            Law::CorollaryK1 => "corollary-k1",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Law {
    type Err = Error;

    fn from_str(s: &str) -> Result<Law> {
        Law::ALL
            .into_iter()
            .find(|law| law.name() == s)
            .ok_or_else(|| Error::UnknownLaw(s.to_string()))
    }
}

/// Graph invariants computed on first use and shared between laws.
pub struct GraphFacts<'a> {
    g: &'a Graph,
    chi: OnceCell<usize>,
    omega: OnceCell<usize>,
    critical: OnceCell<bool>,
    h_edge: OnceCell<Option<(usize, usize)>>,
}

impl<'a> GraphFacts<'a> {
    pub fn new(g: &'a Graph) -> Self {
        GraphFacts {
            g,
            chi: OnceCell::new(),
            omega: OnceCell::new(),
            critical: OnceCell::new(),
            h_edge: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn chi(&self) -> usize {
        *self.chi.get_or_init(|| chromatic_number(self.g))
    }

    pub fn omega(&self) -> usize {
        *self.omega.get_or_init(|| clique_number(self.g))
    }

    pub fn delta(&self) -> usize {
        self.g.max_degree().unwrap_or(0)
    }

    pub fn delta2(&self) -> Option<usize> {
        delta2(self.g)
    }

    pub fn theta(&self) -> Option<usize> {
        ore_degree(self.g)
    }

    pub fn critical(&self) -> bool {
        *self
            .critical
            .get_or_init(|| matches!(is_vertex_critical_with_chi(self.g, self.chi()), Ok(true)))
    }

    /// An edge of `H(G)` in original labels, if any.
    pub fn h_edge(&self) -> Option<(usize, usize)> {
        *self.h_edge.get_or_init(|| {
            let h = script_h(self.g, self.chi());
            let edge = h.graph.edges().next();
            edge.map(|(u, v)| (h.old_ids[u], h.old_ids[v]))
        })
    }
}

pub fn check_law(g: &Graph, law: Law) -> LawVerdict {
    check_law_with(&GraphFacts::new(g), law, &to_graph6(g))
}

/// Checks `law` using cached facts; `id` names the graph in the verdict.
pub fn check_law_with(f: &GraphFacts<'_>, law: Law, id: &str) -> LawVerdict {
    let g = f.graph();
    let name = law.name();
    match law {
        Law::Brooks => {
            let delta = f.delta();
            if delta < 3 {
                return LawVerdict::skipped(name, id, format!("precondition Δ >= 3 unmet (Δ = {delta})"));
            }
            let (chi, omega) = (f.chi(), f.omega());
            let w = witness! { "chi" => chi, "omega" => omega, "delta" => delta };
            verdict(name, id, chi <= omega.max(delta), w)
        }
        Law::Stacho => {
            let Some(d2) = f.delta2() else {
                return LawVerdict::skipped(name, id, "precondition unmet: graph has no edge");
            };
            let chi = f.chi();
            verdict(name, id, chi <= d2 + 1, witness! { "chi" => chi, "delta2" => d2 })
        }
        Law::Ore => {
            let theta = f.theta().unwrap_or(0);
            if theta < 10 {
                return LawVerdict::skipped(name, id, format!("precondition θ >= 10 unmet (θ = {theta})"));
            }
            let (chi, omega) = (f.chi(), f.omega());
            let w = witness! { "chi" => chi, "omega" => omega, "theta" => theta };
            verdict(name, id, chi <= omega.max(theta / 2), w)
        }
        Law::Main => {
            let delta = f.delta();
            if delta < 3 {
                return LawVerdict::skipped(name, id, format!("precondition Δ >= 3 unmet (Δ = {delta})"));
            }
            let (chi, omega) = (f.chi(), f.omega());
            let d2 = f.delta2().expect("Δ >= 3 implies an edge");
            let bound6 = (6 * omega).max(6 * d2).max(5 * (delta + 1));
            let w = witness! {
                "chi" => chi, "omega" => omega, "delta" => delta, "delta2" => d2,
                "six_chi" => 6 * chi, "six_bound" => bound6,
            };
            verdict(name, id, 6 * chi <= bound6, w)
        }
        Law::Observation => {
            let Some(d2) = f.delta2() else {
                return LawVerdict::skipped(name, id, "precondition unmet: graph has no edge");
            };
            let chi = f.chi();
            let h_edge = f.h_edge();
            let w = witness! { "chi" => chi, "delta2" => d2, "h_edge" => h_edge };
            verdict(name, id, (chi > d2) == h_edge.is_none(), w)
        }
        Law::CorollaryK1 => {
            let delta = f.delta();
            let chi = f.chi();
            if !(chi >= delta && delta >= 6) {
                return LawVerdict::skipped(
                    name,
                    id,
                    format!("precondition χ >= Δ >= 6 unmet (χ = {chi}, Δ = {delta})"),
                );
            }
            if !f.critical() {
                return LawVerdict::skipped(name, id, "precondition unmet: not vertex-critical");
            }
            if f.h_edge().is_some() {
                return LawVerdict::skipped(name, id, "precondition unmet: H(G) has an edge");
            }
            let w = witness! { "chi" => chi, "delta" => delta, "n" => g.order() };
            verdict(name, id, g.is_complete(), w)
        }
    }
}

fn verdict(name: &str, id: &str, ok: bool, w: std::collections::BTreeMap<String, serde_json::Value>) -> LawVerdict {
    if ok {
        LawVerdict::holds(name, id).with_witness(w)
    } else {
        LawVerdict::violated(name, id, w)
    }
}

/// Confirms a violation independently before it is reported: the witness's
/// `chi` must be exact (a coloring with `chi` colors exists, none with one
/// fewer), its `omega` must be attained and maximal, and a fresh evaluation
/// must reproduce the verdict.
pub fn reverify(g: &Graph, law: Law, v: &LawVerdict) -> bool {
    let Some(w) = &v.witness else { return false };
    let as_usize = |key: &str| w.get(key).and_then(serde_json::Value::as_u64).map(|x| x as usize);
    if let Some(chi) = as_usize("chi") {
        let attained = k_colorable(g, chi).is_some_and(|c| c.is_proper(g) && c.num_colors() <= chi);
        if !attained || (chi > 0 && k_colorable(g, chi - 1).is_some()) {
            return false;
        }
    }
    if let Some(omega) = as_usize("omega") {
        let clique = maximum_clique(g);
        let is_clique = clique.iter().enumerate().all(|(i, &u)| clique[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if clique.len() != omega || !is_clique {
            return false;
        }
    }
    let again = check_law_with(&GraphFacts::new(g), law, &v.graph);
    again == *v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_graph, cycle, f_graph, petersen, star};

    #[test]
    fn names_round_trip() {
        for law in Law::ALL {
            assert_eq!(law.name().parse::<Law>().unwrap(), law);
        }
        assert_eq!("nope".parse::<Law>(), Err(Error::UnknownLaw("nope".into())));
    }

    #[test]
    fn petersen_main() {
        let v = check_law(&petersen(), Law::Main);
        assert!(v.holds && !v.is_skipped());
        let w = v.witness.unwrap();
        assert_eq!(w["chi"], 3);
        assert_eq!(w["six_bound"], 20);
    }

    #[test]
    fn f6_main_via_last_term() {
        let f6 = f_graph(6).unwrap().graph;
        let v = check_law(&f6, Law::Main);
        let w = v.witness.unwrap();
        assert!(v.holds);
        assert_eq!((w["chi"].as_u64(), w["delta"].as_u64(), w["delta2"].as_u64()), (Some(6), Some(7), Some(5)));
        assert_eq!(w["six_bound"], 40);
    }

    #[test]
    fn preconditions_skip() {
        assert!(check_law(&cycle(5).unwrap(), Law::Brooks).is_skipped());
        assert!(check_law(&Graph::empty(3), Law::Stacho).is_skipped());
        assert!(check_law(&Graph::empty(3), Law::Observation).is_skipped());
        assert!(check_law(&complete_graph(5).unwrap(), Law::Ore).is_skipped());
        assert!(check_law(&star(7).unwrap(), Law::CorollaryK1).is_skipped());
        let v = check_law(&complete_graph(4).unwrap(), Law::Brooks);
        assert!(v.holds && !v.is_skipped());
    }

    #[test]
    fn corollary_on_complete_graph() {
        let v = check_law(&complete_graph(7).unwrap(), Law::CorollaryK1);
        assert!(v.holds && !v.is_skipped(), "{v:?}");
    }

    #[test]
    fn reverify_rejects_fabricated_witness() {
        let g = complete_graph(4).unwrap();
        let mut v = check_law(&g, Law::Brooks);
        assert!(reverify(&g, Law::Brooks, &v));
        v.holds = false;
        assert!(!reverify(&g, Law::Brooks, &v));
        v.witness.as_mut().unwrap().insert("chi".into(), 3.into());
        assert!(!reverify(&g, Law::Brooks, &v));
    }
}
