//! The swap walk that certifies a vertex-critical graph with `χ >= Δ + 1 - k`,
//! `Δ + 1 >= 6k` and edgeless `H(G)` is complete.
//!
//! Starting from a minimal `(r_1, …, r_{k+1})`-partitioned coloring with a low
//! singleton, the walk repeatedly swaps the singleton with a low vertex of its
//! current `Z`-component, steering between groups and counting visits in `q`.
//! Once `k` once-visited vertices sit in the component for group 1 or 2, one
//! more swap exposes a vertex whose closed neighborhood is the clique `F`.
//!
//! Groups are 0-based here and in traces: the walk starts in group `0`, and
//! the "first two groups" are `0` and `1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::params::{is_low, script_h};
use crate::partitioned::{minimal_coloring_dp, swap, PartitionSpec, PartitionedColoring};
use crate::solvers::{chromatic_number, is_vertex_critical_with_chi};
use crate::verdict::LawVerdict;
use crate::witness;

pub const HYPOTHESES_LAW: &str = "walk-hypotheses";

/// Names used in [`check_hypotheses`] witnesses.
pub const VERTEX_CRITICAL: &str = "vertex_critical";
pub const CHI_BOUND: &str = "chi_ge_delta_plus_one_minus_k";
pub const SIX_K_BOUND: &str = "delta_plus_one_ge_6k";
pub const H_EDGELESS: &str = "h_edgeless";

/// Evaluates the four hypotheses of the walk. The verdict holds only if all
/// do; its witness records each condition with the numbers behind it and
/// lists the failing ones under `"failed"`.
pub fn check_hypotheses(g: &Graph, k: usize) -> Result<LawVerdict> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
    }
    let id = crate::constructions::to_graph6(g);
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let chi = chromatic_number(g);
    let delta = g.max_degree().expect("nonempty");
    let critical = matches!(is_vertex_critical_with_chi(g, chi), Ok(true));
    let chi_ok = chi + k > delta;
    let six_k_ok = delta + 1 >= 6 * k;
    let h = script_h(g, chi);
    let h_ok = h.graph.is_edgeless();
    let failed: Vec<&str> = [
        (VERTEX_CRITICAL, critical),
        (CHI_BOUND, chi_ok),
        (SIX_K_BOUND, six_k_ok),
        (H_EDGELESS, h_ok),
    ]
    .into_iter()
    .filter(|&(_, ok)| !ok)
    .map(|(name, _)| name)
    .collect();
    let h_edge = h
        .graph
        .edges()
        .next()
        .map(|(u, v)| [h.old_ids[u], h.old_ids[v]]);
    let w = witness! {
        "k" => k,
        "chi" => chi,
        "delta" => delta,
        VERTEX_CRITICAL => critical,
        CHI_BOUND => chi_ok,
        SIX_K_BOUND => six_k_ok,
        "six_k" => 6 * k,
        H_EDGELESS => h_ok,
        "h_edge" => h_edge,
        "failed" => failed,
    };
    Ok(if failed.is_empty() {
        LawVerdict::holds(HYPOTHESES_LAW, id).with_witness(w)
    } else {
        LawVerdict::violated(HYPOTHESES_LAW, id, w)
    })
}

/// Group sizes `(χ-1-(k+1)-3(k-1), k+1, 3, …, 3)` with `k + 1` groups.
/// Needs `χ >= 5k`, which makes the first size at least `k + 1`.
pub fn choose_partition_spec(chi: usize, k: usize) -> Result<PartitionSpec> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
    }
    if chi < 5 * k {
        return Err(Error::InvalidParameter(format!("chi = {chi} is below 5k = {}", 5 * k)));
    }
    let mut parts = vec![chi - 1 - (k + 1) - 3 * (k - 1), k + 1];
    parts.extend(std::iter::repeat_n(3, k - 1));
    PartitionSpec::new(parts)
}

/// Moves the singleton of a minimal coloring onto a low vertex. A high
/// singleton is swapped into the first group where it has `r_i` neighbors,
/// with the lowest-index low vertex of that group's component.
pub fn normalize_singleton_to_low(g: &Graph, pc: &PartitionedColoring, chi: usize) -> Result<PartitionedColoring> {
    let x = pc.singleton();
    if is_low(g, chi, x) {
        return Ok(pc.clone());
    }
    let spec = pc.spec();
    let i = (0..spec.groups())
        .find(|&i| pc.singleton_degree_in(g, i) == spec.r(i))
        .ok_or_else(|| Error::Hypothesis(format!("high singleton {x} has no group with d_Z(x) = r_i")))?;
    let y = pc
        .z_vertices(g, i)
        .into_iter()
        .find(|&y| y != x && is_low(g, chi, y))
        .ok_or_else(|| Error::Hypothesis(format!("no low vertex in Z_{i}({x}) - {x}")))?;
    swap(g, pc, i, y).map_err(|e| Error::Assertion(format!("normalizing swap failed: {e}")))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkState {
    /// Index `i` of the current state.
    pub step: usize,
    pub coloring: PartitionedColoring,
    pub q: Vec<usize>,
    /// Current group `p_i`.
    pub group: usize,
    /// `p_{i-1}`, absent in the initial state.
    pub prev_group: Option<usize>,
    /// `(x_j, p_j)` for `j < i`.
    pub trajectory: Vec<(Vertex, usize)>,
    /// Last index at which each vertex was the singleton.
    pub last_singleton: Vec<Option<usize>>,
}

impl WalkState {
    pub fn new(pc: PartitionedColoring) -> Self {
        let n = pc.colors().len();
        let mut last_singleton = vec![None; n];
        last_singleton[pc.singleton()] = Some(0);
        WalkState {
            step: 0,
            coloring: pc,
            q: vec![0; n],
            group: 0,
            prev_group: None,
            trajectory: Vec::new(),
            last_singleton,
        }
    }

    pub fn singleton(&self) -> Vertex {
        self.coloring.singleton()
    }
}

/// The counter update of one step: `q(vertex) = q(source) + 1`, read with
/// vertex identities after the swap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QUpdate {
    pub vertex: Vertex,
    pub source: Vertex,
    pub source_value: usize,
    pub old_value: usize,
    pub value: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum TraceEvent {
    Start {
        spec: Vec<usize>,
        colors: Vec<usize>,
        singleton: Vertex,
        objective: usize,
        normalized_from: Option<Vertex>,
    },
    Step {
        step: usize,
        from: Vertex,
        to: Vertex,
        group: usize,
        next_group: usize,
        fallback: bool,
        q: QUpdate,
    },
    Terminate {
        t: usize,
        group: usize,
        once_visited: Vec<Vertex>,
        pivot: Vertex,
    },
    FinalSwap {
        from: Vertex,
        to: Vertex,
    },
    Certificate {
        f: Vec<Vertex>,
        high: Vec<Vertex>,
        complete: bool,
    },
}

fn assert_walk(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Assertion(msg()))
    }
}

/// One pass of the walk: swap the singleton with the lowest-`q` low vertex of
/// its component in the current group (lowest index on ties), choose the next
/// group, and update the counter of the vertex that left the singleton class.
pub fn walk_step(g: &Graph, chi: usize, state: &mut WalkState) -> Result<TraceEvent> {
    let pc = &state.coloring;
    let x = pc.singleton();
    let p = state.group;
    let y = pc
        .z_vertices(g, p)
        .into_iter()
        .filter(|&y| y != x && is_low(g, chi, y))
        .min_by_key(|&y| (state.q[y], y))
        .ok_or_else(|| Error::Hypothesis(format!("no low vertex in Z_{p}({x}) - {x}")))?;
    let next = swap(g, pc, p, y).map_err(|e| Error::Assertion(format!("swap of {x} and {y} failed: {e}")))?;

    // x_1 … x_i, the singletons after the initial one, not counting y
    state.trajectory.push((x, p));
    let visited = |v: Vertex| state.trajectory[1..].iter().any(|&(u, _)| u == v);
    let a = next.spec().groups();
    let choice = (2..a)
        .filter(|&d| d != p)
        .find(|&d| !next.z_vertices(g, d).into_iter().any(visited));
    let (next_group, fallback) = match choice {
        Some(d) => (d, false),
        None => (if p == 0 { 1 } else { 0 }, true),
    };

    let update = QUpdate {
        vertex: x,
        source: y,
        source_value: state.q[y],
        old_value: state.q[x],
        value: state.q[y] + 1,
    };
    state.q[x] = update.value;
    state.step += 1;
    state.last_singleton[y] = Some(state.step);
    state.prev_group = Some(p);
    state.group = next_group;
    state.coloring = next;
    Ok(TraceEvent::Step {
        step: state.step - 1,
        from: x,
        to: y,
        group: p,
        next_group,
        fallback,
        q: update,
    })
}

/// Whether the walk stops in `state`: for the first of groups `0`, `1` other
/// than `p_{t-1}`, the once-visited vertices of `Z_p(x_t) - x_t`, in order of
/// when each was last the singleton, when there are exactly `k` of them.
fn termination(g: &Graph, k: usize, state: &WalkState) -> Option<(usize, Vec<Vertex>)> {
    let prev = state.prev_group?;
    let x = state.singleton();
    for p in (0..2).filter(|&p| p != prev) {
        let mut once: Vec<Vertex> = state
            .coloring
            .z_vertices(g, p)
            .into_iter()
            .filter(|&y| y != x && state.q[y] == 1)
            .collect();
        if once.len() == k {
            once.sort_by_key(|&y| (state.last_singleton[y], y));
            return Some((p, once));
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum WalkOutcome {
    CliqueCertificate {
        /// Vertex set of `F`, ascending.
        f: Vec<Vertex>,
        pivot: Vertex,
        steps: usize,
        trace: Vec<TraceEvent>,
    },
    HypothesisViolation {
        verdict: LawVerdict,
        trace: Vec<TraceEvent>,
    },
    IterationCapExceeded {
        cap: usize,
        singleton: Vertex,
        group: usize,
        q: Vec<usize>,
        trace: Vec<TraceEvent>,
    },
}

impl WalkOutcome {
    pub fn trace(&self) -> &[TraceEvent] {
        match self {
            WalkOutcome::CliqueCertificate { trace, .. }
            | WalkOutcome::HypothesisViolation { trace, .. }
            | WalkOutcome::IterationCapExceeded { trace, .. } => trace,
        }
    }

    pub fn is_certificate(&self) -> bool {
        matches!(self, WalkOutcome::CliqueCertificate { .. })
    }
}

/// Default iteration cap `4 n χ`.
pub fn default_cap(g: &Graph, chi: usize) -> usize {
    4 * g.order() * chi
}

/// Checks the hypotheses, builds a minimal coloring and walks until the stop
/// rule fires or `max_iter` steps have run. Broken internal invariants come
/// back as [`Error::Assertion`].
pub fn run_walk(g: &Graph, k: usize, max_iter: Option<usize>) -> Result<WalkOutcome> {
    let verdict = check_hypotheses(g, k)?;
    if !verdict.holds {
        return Ok(WalkOutcome::HypothesisViolation { verdict, trace: Vec::new() });
    }
    let chi = chromatic_number(g);
    let spec = choose_partition_spec(chi, k)?;
    let start = minimal_coloring_dp(g, &spec, chi, None)?;
    let cap = max_iter.unwrap_or_else(|| default_cap(g, chi));
    if cap == 0 {
        return Err(Error::InvalidParameter("max_iter must be at least 1".into()));
    }
    match walk_from(g, k, chi, &start, cap) {
        Err(Error::Hypothesis(reason)) => {
            let v = LawVerdict::violated(
                HYPOTHESES_LAW,
                verdict.graph,
                witness! { "during_walk" => reason },
            );
            Ok(WalkOutcome::HypothesisViolation { verdict: v, trace: Vec::new() })
        }
        other => other,
    }
}

/// Runs the walk from a given minimal coloring.
pub fn walk_from(g: &Graph, k: usize, chi: usize, start: &PartitionedColoring, cap: usize) -> Result<WalkOutcome> {
    let objective = start.objective(g);
    let pc = normalize_singleton_to_low(g, start, chi)?;
    assert_walk(pc.objective(g) == objective, || "normalizing changed the objective".into())?;
    let mut trace = vec![TraceEvent::Start {
        spec: pc.spec().parts().to_vec(),
        colors: pc.colors().to_vec(),
        singleton: pc.singleton(),
        objective,
        normalized_from: (pc.singleton() != start.singleton()).then_some(start.singleton()),
    }];
    let mut state = WalkState::new(pc);
    loop {
        if let Some((p, once)) = termination(g, k, &state) {
            return finish(g, chi, state, p, once, trace);
        }
        if state.step == cap {
            return Ok(WalkOutcome::IterationCapExceeded {
                cap,
                singleton: state.singleton(),
                group: state.group,
                q: state.q,
                trace,
            });
        }
        let before = state.q.clone();
        trace.push(walk_step(g, chi, &mut state)?);
        state
            .coloring
            .check_invariants(g)
            .map_err(|e| Error::Assertion(format!("step {}: {e}", state.step)))?;
        assert_walk(state.coloring.objective(g) == objective, || {
            format!("step {}: objective changed", state.step)
        })?;
        let changed = before.iter().zip(&state.q).filter(|(a, b)| a != b).count();
        assert_walk(changed <= 1, || format!("step {}: {changed} counters changed", state.step))?;
    }
}

fn finish(
    g: &Graph,
    chi: usize,
    state: WalkState,
    p: usize,
    once: Vec<Vertex>,
    mut trace: Vec<TraceEvent>,
) -> Result<WalkOutcome> {
    let x = state.singleton();
    let pivot = once[0];
    trace.push(TraceEvent::Terminate {
        t: state.step,
        group: p,
        once_visited: once,
        pivot,
    });
    swap(g, &state.coloring, p, pivot)
        .map_err(|e| Error::Assertion(format!("final swap of {x} and {pivot} failed: {e}")))?;
    trace.push(TraceEvent::FinalSwap { from: x, to: pivot });

    let mut f: Vec<Vertex> = g.neighbors(pivot).to_vec();
    f.push(pivot);
    f.sort_unstable();
    let high: Vec<Vertex> = f.iter().copied().filter(|&v| !is_low(g, chi, v)).collect();
    let induced = g.induced_subgraph(f.iter().copied())?;
    let complete = induced.graph.is_complete();
    trace.push(TraceEvent::Certificate {
        f: f.clone(),
        high,
        complete,
    });
    assert_walk(f.len() == chi, || format!("|F| = {} but chi = {chi}", f.len()))?;
    assert_walk(complete, || format!("F = N[{pivot}] is not complete"))?;
    Ok(WalkOutcome::CliqueCertificate {
        f,
        pivot,
        steps: state.step,
        trace,
    })
}

/// Re-runs the walk from the start event of `trace` and reports whether it
/// reproduces the trace exactly, compared as serialized JSON.
pub fn replay(g: &Graph, k: usize, trace: &[TraceEvent]) -> Result<bool> {
    let Some(TraceEvent::Start { spec, colors, .. }) = trace.first() else {
        return Err(Error::InvalidParameter("trace does not begin with a start event".into()));
    };
    let spec = PartitionSpec::new(spec.clone())?;
    let chi = spec.chromatic();
    let start = PartitionedColoring::from_colors(g, &spec, colors.clone())?;
    let steps = trace.iter().filter(|e| matches!(e, TraceEvent::Step { .. })).count();
    let again = walk_from(g, k, chi, &start, steps.max(1))?;
    let a = serde_json::to_string(trace).expect("trace serializes");
    let b = serde_json::to_string(again.trace()).expect("trace serializes");
    Ok(a == b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_graph, cycle, f_graph};

    fn k(n: usize) -> Graph {
        complete_graph(n).unwrap()
    }

    fn failed(v: &LawVerdict) -> Vec<String> {
        serde_json::from_value(v.witness.as_ref().unwrap()["failed"].clone()).unwrap()
    }

    #[test]
    fn hypotheses_on_examples() {
        let v = check_hypotheses(&k(12), 2).unwrap();
        assert!(v.holds, "{v:?}");
        for n in 8..=12 {
            let f = f_graph(n).unwrap().graph;
            let delta = f.max_degree().unwrap();
            let kk = delta + 1 - n;
            let v = check_hypotheses(&f, kk).unwrap();
            assert!(!v.holds);
            assert!(failed(&v).contains(&SIX_K_BOUND.to_string()), "n = {n}");
        }
        let mut edges: Vec<_> = cycle(5).unwrap().edges().collect();
        edges.push((0, 5));
        let pend = Graph::from_edges(6, edges).unwrap();
        let v = check_hypotheses(&pend, 2).unwrap();
        assert!(failed(&v).contains(&VERTEX_CRITICAL.to_string()));
        assert!(check_hypotheses(&k(12), 1).is_err());
    }

    #[test]
    fn spec_rule() {
        let parts = |chi, k| choose_partition_spec(chi, k).unwrap().parts().to_vec();
        assert_eq!(parts(12, 2), vec![5, 3, 3]);
        assert_eq!(parts(11, 2), vec![4, 3, 3]);
        assert_eq!(parts(16, 3), vec![5, 4, 3, 3]);
        assert_eq!(parts(10, 2), vec![3, 3, 3]);
        assert!(choose_partition_spec(9, 2).is_err());
        for kk in 2..6 {
            for chi in 5 * kk..5 * kk + 8 {
                let s = choose_partition_spec(chi, kk).unwrap();
                assert_eq!(s.chromatic(), chi);
                assert_eq!(s.groups(), kk + 1);
                assert!(s.r(0) > kk && s.r(1) > kk);
                assert!(s.parts()[2..].iter().all(|&r| r >= 3));
            }
        }
    }

    #[test]
    fn normalize_moves_high_singleton() {
        // K_4 with a pendant path a-b attached to vertex 0: 0 has degree 4 > chi - 1
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5)]).unwrap();
        let spec = PartitionSpec::new(vec![2, 1]).unwrap();
        let pc = PartitionedColoring::from_classes(&g, &spec, 0, &[vec![vec![1, 5], vec![2]], vec![vec![3, 4]]]).unwrap();
        let out = normalize_singleton_to_low(&g, &pc, 4).unwrap();
        assert!(is_low(&g, 4, out.singleton()));
        assert_eq!(out.singleton(), 1);
        assert_eq!(out.objective(&g), pc.objective(&g));
        let low = normalize_singleton_to_low(&g, &out, 4).unwrap();
        assert_eq!(low, out);
    }

    #[test]
    fn first_step_on_k12() {
        let g = k(12);
        let spec = choose_partition_spec(12, 2).unwrap();
        let pc = minimal_coloring_dp(&g, &spec, 12, None).unwrap();
        let x = pc.singleton();
        let lowest = pc.z_vertices(&g, 0).into_iter().find(|&v| v != x).unwrap();
        let mut state = WalkState::new(pc);
        let ev = walk_step(&g, 12, &mut state).unwrap();
        let TraceEvent::Step { from, to, group, next_group, fallback, q, .. } = ev else {
            panic!("expected a step")
        };
        assert_eq!((from, group), (x, 0));
        assert_eq!(state.coloring.group_of(x), Some(0));
        // all q are 0, so the lowest index in U_0 is chosen
        assert_eq!(to, lowest);
        assert_eq!(q.value, 1);
        assert_eq!(state.q[x], 1);
        assert_eq!((next_group, fallback), (2, false));
    }

    #[test]
    fn complete_graphs_certify() {
        for (n, kk) in [(12, 2), (13, 2)] {
            let g = k(n);
            let out = run_walk(&g, kk, None).unwrap();
            match &out {
                WalkOutcome::CliqueCertificate { f, .. } => assert_eq!(f, &(0..n).collect::<Vec<_>>()),
                other => panic!("K_{n}: {other:?}"),
            }
            assert!(replay(&g, kk, out.trace()).unwrap());
        }
    }

    #[test]
    fn replay_detects_tampering() {
        let g = k(12);
        let out = run_walk(&g, 2, None).unwrap();
        let mut trace = out.trace().to_vec();
        if let Some(TraceEvent::Step { fallback, .. }) = trace.iter_mut().find(|e| matches!(e, TraceEvent::Step { .. })) {
            *fallback = !*fallback;
        }
        assert!(!replay(&g, 2, &trace).unwrap());
        assert!(replay(&g, 2, &[]).is_err());
    }

    #[test]
    fn cap_is_reported() {
        let out = run_walk(&k(12), 2, Some(1)).unwrap();
        assert!(matches!(out, WalkOutcome::IterationCapExceeded { cap: 1, .. }));
        assert!(run_walk(&k(12), 2, Some(0)).is_err());
    }

    #[test]
    fn trace_json_round_trips() {
        let out = run_walk(&k(12), 2, None).unwrap();
        let text = serde_json::to_string(out.trace()).unwrap();
        let back: Vec<TraceEvent> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, out.trace());
    }
}
