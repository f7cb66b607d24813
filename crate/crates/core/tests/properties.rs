use delta2::constructions::{complete_graph, cycle, gnp_random, GeneratorSeed};
use delta2::params::is_low;
use delta2::partitioned::{
    all_global_minima, check_joined_lows, enumerate_with_chi, feasible_specs, local_descent, minimal_coloring_dp,
    JoinedLowsMode,
};
use delta2::solvers::{chromatic_number, is_vertex_critical_with_chi};
use delta2::{Graph, Rational};
use proptest::prelude::*;

/// A vertex-critical subgraph of `G(n, p)`: edges are dropped while `χ`
/// stays, then isolated vertices are removed.
fn random_critical(n: usize, seed: u64) -> Option<(Graph, usize)> {
    let g = gnp_random(n, Rational::new(2, 3), GeneratorSeed(seed)).ok()?;
    let chi = chromatic_number(&g);
    if chi < 3 {
        return None;
    }
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut i = 0;
    while i < edges.len() {
        let mut fewer = edges.clone();
        fewer.remove(i);
        if chromatic_number(&Graph::from_edges(n, fewer.iter().copied()).unwrap()) == chi {
            edges = fewer;
        } else {
            i += 1;
        }
    }
    let h = Graph::from_edges(n, edges).unwrap();
    let keep: Vec<usize> = h.vertices().filter(|&v| h.deg(v) > 0).collect();
    let h = h.induced_subgraph(keep).unwrap().graph;
    (is_vertex_critical_with_chi(&h, chi) == Ok(true)).then_some((h, chi))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dp_minimizer_matches_enumeration(n in 4usize..8, seed: u64) {
        if let Some((g, chi)) = random_critical(n, seed) {
            for spec in feasible_specs(chi) {
                let brute = all_global_minima(&g, &spec, chi).unwrap().expect("critical graphs have colorings");
                let dp = minimal_coloring_dp(&g, &spec, chi, None).unwrap();
                prop_assert_eq!(dp.objective(&g), brute.objective);
                prop_assert!(brute.colorings.contains(&dp));
            }
        }
    }

    #[test]
    fn low_singletons_see_r_i_in_every_group(n in 4usize..8, seed: u64) {
        if let Some((g, chi)) = random_critical(n, seed) {
            for spec in feasible_specs(chi) {
                for x in g.vertices().filter(|&x| is_low(&g, chi, x)) {
                    for pc in enumerate_with_chi(&g, &spec, x, chi).unwrap() {
                        for i in 0..spec.groups() {
                            prop_assert_eq!(pc.singleton_degree_in(&g, i), spec.r(i));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn local_descent_never_beats_the_global_minimum(n in 4usize..8, seed: u64) {
        if let Some((g, chi)) = random_critical(n, seed) {
            for spec in feasible_specs(chi) {
                let best = all_global_minima(&g, &spec, chi).unwrap().unwrap().objective;
                for x in g.vertices() {
                    if let Some(start) = enumerate_with_chi(&g, &spec, x, chi).unwrap().next() {
                        let end = local_descent(&g, &start);
                        end.check_invariants(&g).unwrap();
                        prop_assert!(end.objective(&g) <= start.objective(&g));
                        prop_assert!(end.objective(&g) >= best);
                    }
                }
            }
        }
    }
}

#[test]
fn joined_lows_holds_at_global_minima() {
    let c5 = cycle(5).unwrap();
    let graphs = [
        complete_graph(7).unwrap(),
        complete_graph(8).unwrap(),
        c5.join(&complete_graph(4).unwrap()),
        c5.join(&complete_graph(5).unwrap()),
    ];
    let mut checked = 0;
    for g in &graphs {
        let chi = chromatic_number(g);
        for spec in feasible_specs(chi).into_iter().filter(|s| s.parts().iter().filter(|&&r| r >= 3).count() >= 2) {
            let minima = all_global_minima(g, &spec, chi).unwrap().unwrap();
            for pc in &minima.colorings {
                for i in 0..spec.groups() {
                    for j in 0..spec.groups() {
                        let v = check_joined_lows(g, pc, chi, i, j, JoinedLowsMode::Strict);
                        assert!(v.holds, "{v:?}");
                        checked += !v.is_skipped() as usize;
                    }
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn generator_yields_critical_graphs() {
    let found = (0..64u64).filter_map(|seed| random_critical(6, seed)).count();
    assert!(found >= 32, "only {found} of 64 seeds gave a critical graph");
}
