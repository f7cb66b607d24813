//! Partitioned colorings: a proper `χ(G)`-coloring with one singleton class
//! `{x}` whose other classes are split into groups of prescribed sizes
//! `r_1, …, r_a`, plus the recoloring moves and checkers that operate on them.
//!
//! Colors are numbered so that the singleton holds color `0` and class `j` of
//! group `i` holds color `1 + r_0 + … + r_{i-1} + j`. Groups and classes are
//! 0-based throughout.
//!
//! The objective of a partitioned coloring is the total number of edges inside
//! the groups, `Σ_i |E(G[U_i])|` with `U_i` the union of group `i`'s classes.

use std::collections::VecDeque;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{Graph, Induced, Vertex};
use crate::params::is_low;
use crate::solvers::chromatic_number;
use crate::verdict::LawVerdict;
use crate::witness;

/// Group sizes `r_1, …, r_a`, each at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PartitionSpec(Vec<usize>);

impl PartitionSpec {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter("partition spec needs at least one group".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidParameter("group sizes must be positive".into()));
        }
        Ok(PartitionSpec(parts))
    }

    /// Parses `r1,r2,…`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad group size {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn groups(&self) -> usize {
        self.0.len()
    }

    pub fn r(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `Σ r_i`, the number of non-singleton classes.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// The chromatic number this spec is meant for, `1 + Σ r_i`.
    pub fn chromatic(&self) -> usize {
        1 + self.total()
    }

    /// First color id of group `i`.
    pub fn color_offset(&self, i: usize) -> usize {
        1 + self.0[..i].iter().sum::<usize>()
    }

    /// Group holding color `c`, or `None` for the singleton color.
    pub fn group_of_color(&self, c: usize) -> Option<usize> {
        if c == 0 {
            return None;
        }
        let mut acc = 1;
        for (i, &r) in self.0.iter().enumerate() {
            if c < acc + r {
                return Some(i);
            }
            acc += r;
        }
        None
    }
}

impl std::fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Every spec for chromatic number `chi`, as non-increasing integer
/// partitions of `chi - 1`.
pub fn feasible_specs(chi: usize) -> Vec<PartitionSpec> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<PartitionSpec>) {
        if left == 0 {
            out.push(PartitionSpec(cur.clone()));
            return;
        }
        for part in (1..=max.min(left)).rev() {
            cur.push(part);
            rec(left - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if chi >= 2 {
        rec(chi - 1, chi - 1, &mut Vec::new(), &mut out);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionedColoring {
    spec: PartitionSpec,
    singleton: Vertex,
    colors: Vec<usize>,
}

impl PartitionedColoring {
    /// Validates a color vector against the numbering described in the module docs.
    pub fn from_colors(g: &Graph, spec: &PartitionSpec, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != g.order() {
            return Err(Error::InvalidParameter(format!(
                "coloring has {} entries for {} vertices",
                colors.len(),
                g.order()
            )));
        }
        let k = spec.chromatic();
        let mut counts = vec![0usize; k];
        for (v, &c) in colors.iter().enumerate() {
            if c >= k {
                return Err(Error::InvalidParameter(format!("vertex {v} has color {c} >= {k}")));
            }
            counts[c] += 1;
        }
        if counts[0] != 1 {
            return Err(Error::InvalidParameter(format!(
                "singleton color held by {} vertices",
                counts[0]
            )));
        }
        if let Some(c) = counts.iter().position(|&n| n == 0) {
            return Err(Error::InvalidParameter(format!("color class {c} is empty")));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| colors[u] == colors[v]) {
            return Err(Error::ImproperColoring(u, v));
        }
        let singleton = colors.iter().position(|&c| c == 0).expect("counted above");
        Ok(PartitionedColoring {
            spec: spec.clone(),
            singleton,
            colors,
        })
    }

    /// Builds from `groups[i][j]`, the vertex set `L_ij`.
    pub fn from_classes(g: &Graph, spec: &PartitionSpec, singleton: Vertex, groups: &[Vec<Vec<Vertex>>]) -> Result<Self> {
        g.check_vertex(singleton)?;
        if groups.len() != spec.groups() || groups.iter().zip(spec.parts()).any(|(grp, &r)| grp.len() != r) {
            return Err(Error::InvalidParameter(format!("class layout does not match spec {spec}")));
        }
        let mut colors = vec![usize::MAX; g.order()];
        colors[singleton] = 0;
        for (i, grp) in groups.iter().enumerate() {
            for (j, class) in grp.iter().enumerate() {
                for &v in class {
                    g.check_vertex(v)?;
                    if colors[v] != usize::MAX {
                        return Err(Error::InvalidParameter(format!("vertex {v} appears twice")));
                    }
                    colors[v] = spec.color_offset(i) + j;
                }
            }
        }
        if let Some(v) = colors.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidParameter(format!("vertex {v} is not covered")));
        }
        Self::from_colors(g, spec, colors)
    }

    pub fn spec(&self) -> &PartitionSpec {
        &self.spec
    }

    pub fn singleton(&self) -> Vertex {
        self.singleton
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: Vertex) -> usize {
        self.colors[v]
    }

    /// Group containing `v`; `None` for the singleton.
    pub fn group_of(&self, v: Vertex) -> Option<usize> {
        self.spec.group_of_color(self.colors[v])
    }

    /// `L_ij`, ascending.
    pub fn class(&self, i: usize, j: usize) -> Vec<Vertex> {
        let c = self.spec.color_offset(i) + j;
        (0..self.colors.len()).filter(|&v| self.colors[v] == c).collect()
    }

    /// All classes of group `i`.
    pub fn classes(&self, i: usize) -> Vec<Vec<Vertex>> {
        (0..self.spec.r(i)).map(|j| self.class(i, j)).collect()
    }

    /// `U_i`, ascending.
    pub fn u_set(&self, i: usize) -> Vec<Vertex> {
        (0..self.colors.len()).filter(|&v| self.group_of(v) == Some(i)).collect()
    }

    /// Color ids `C_i` of group `i`.
    pub fn group_colors(&self, i: usize) -> std::ops::Range<usize> {
        let off = self.spec.color_offset(i);
        off..off + self.spec.r(i)
    }

    /// `Σ_i |E(G[U_i])|`.
    pub fn objective(&self, g: &Graph) -> usize {
        g.edges()
            .filter(|&(u, v)| {
                let gu = self.group_of(u);
                gu.is_some() && gu == self.group_of(v)
            })
            .count()
    }

    /// Vertex set of `Z_i(x)`, the component of the singleton in `G[{x} ∪ U_i]`.
    pub fn z_vertices(&self, g: &Graph, i: usize) -> Vec<Vertex> {
        let x = self.singleton;
        g.component_within(x, |v| self.group_of(v) == Some(i))
    }

    /// `Z_i(x)` as an induced subgraph.
    pub fn z_component(&self, g: &Graph, i: usize) -> Induced {
        g.induced_subgraph(self.z_vertices(g, i)).expect("vertices from g")
    }

    /// `d_{Z_i(x)}(v)`; `v` must lie in `Z_i(x)`.
    fn z_degree(&self, g: &Graph, i: usize, v: Vertex) -> usize {
        g.neighbors(v)
            .iter()
            .filter(|&&u| u == self.singleton || self.group_of(u) == Some(i))
            .count()
    }

    /// `d_{Z_i(x)}(x)`, the number of neighbors of `x` in `U_i`.
    pub fn singleton_degree_in(&self, g: &Graph, i: usize) -> usize {
        self.z_degree(g, i, self.singleton)
    }

    /// Re-checks partition, independence and class counts.
    pub fn check_invariants(&self, g: &Graph) -> Result<()> {
        Self::from_colors(g, &self.spec, self.colors.clone()).map(|_| ())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let groups: Vec<Vec<Vec<Vertex>>> = (0..self.spec.groups()).map(|i| self.classes(i)).collect();
        json!({
            "spec": self.spec.parts(),
            "singleton": self.singleton,
            "groups": groups,
        })
    }
}

/// Set partitions of `V - x` into exactly `m` independent classes, classes
/// ordered by their least vertex, in restricted-growth order.
struct SetPartitions<'a> {
    g: &'a Graph,
    vs: Vec<Vertex>,
    m: usize,
    classes: Vec<Vec<Vertex>>,
    choice: Vec<usize>,
    started: bool,
    done: bool,
}

impl<'a> SetPartitions<'a> {
    fn new(g: &'a Graph, x: Vertex, m: usize) -> Self {
        let vs: Vec<Vertex> = g.vertices().filter(|&v| v != x).collect();
        let done = m == 0 && !vs.is_empty() || vs.len() < m;
        SetPartitions {
            g,
            vs,
            m,
            classes: Vec::new(),
            choice: Vec::new(),
            started: false,
            done,
        }
    }

    fn pop(&mut self) -> Option<usize> {
        let c = self.choice.pop()?;
        self.classes[c].pop();
        if self.classes[c].is_empty() {
            self.classes.pop();
        }
        Some(c)
    }
}

impl Iterator for SetPartitions<'_> {
    type Item = Vec<Vec<Vertex>>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let mut start = 0;
        if self.started {
            match self.pop() {
                Some(c) => start = c + 1,
                None => {
                    self.done = true;
                    return None;
                }
            }
        }
        self.started = true;
        loop {
            let d = self.choice.len();
            if d == self.vs.len() {
                if self.classes.len() == self.m {
                    return Some(self.classes.clone());
                }
                match self.pop() {
                    Some(c) => {
                        start = c + 1;
                        continue;
                    }
                    None => {
                        self.done = true;
                        return None;
                    }
                }
            }
            let v = self.vs[d];
            let used = self.classes.len();
            let hi = used.min(self.m - 1);
            let remaining_after = self.vs.len() - d - 1;
            let placed = (start..=hi).find(|&c| {
                let opens = c == used;
                remaining_after + used + opens as usize >= self.m
                    && (opens || self.classes[c].iter().all(|&u| !self.g.has_edge(u, v)))
            });
            match placed {
                Some(c) => {
                    if c == used {
                        self.classes.push(vec![v]);
                    } else {
                        self.classes[c].push(v);
                    }
                    self.choice.push(c);
                    start = 0;
                }
                None => match self.pop() {
                    Some(c) => start = c + 1,
                    None => {
                        self.done = true;
                        return None;
                    }
                },
            }
        }
    }
}

/// Assignments of `Σ r_i` ordered classes to groups, modulo the order of
/// classes inside a group and modulo permuting groups of equal size: equal-size
/// groups are ordered by their first class.
fn canonical_groupings(spec: &PartitionSpec) -> Vec<Vec<usize>> {
    fn rec(c: usize, spec: &PartitionSpec, fill: &mut [usize], assign: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if c == spec.total() {
            out.push(assign.clone());
            return;
        }
        for gi in 0..spec.groups() {
            if fill[gi] == spec.r(gi) {
                continue;
            }
            if fill[gi] == 0 && (0..gi).any(|h| fill[h] == 0 && spec.r(h) == spec.r(gi)) {
                continue;
            }
            fill[gi] += 1;
            assign.push(gi);
            rec(c + 1, spec, fill, assign, out);
            assign.pop();
            fill[gi] -= 1;
        }
    }
    let mut out = Vec::new();
    rec(0, spec, &mut vec![0; spec.groups()], &mut Vec::new(), &mut out);
    out
}

fn colors_for(n: usize, x: Vertex, classes: &[Vec<Vertex>], assign: &[usize], spec: &PartitionSpec) -> Vec<usize> {
    let mut colors = vec![0; n];
    let mut pos = vec![0; spec.groups()];
    for (class, &gi) in classes.iter().zip(assign) {
        let c = spec.color_offset(gi) + pos[gi];
        pos[gi] += 1;
        for &v in class {
            colors[v] = c;
        }
    }
    colors[x] = 0;
    colors
}

/// Stream of every partitioned coloring with singleton `x`.
pub struct PartitionedColorings<'a> {
    g: &'a Graph,
    spec: PartitionSpec,
    x: Vertex,
    partitions: SetPartitions<'a>,
    groupings: Vec<Vec<usize>>,
    current: Option<Vec<Vec<Vertex>>>,
    next_grouping: usize,
}

impl Iterator for PartitionedColorings<'_> {
    type Item = PartitionedColoring;

    fn next(&mut self) -> Option<PartitionedColoring> {
        loop {
            if let Some(classes) = &self.current {
                if let Some(assign) = self.groupings.get(self.next_grouping) {
                    self.next_grouping += 1;
                    let colors = colors_for(self.g.order(), self.x, classes, assign, &self.spec);
                    return Some(PartitionedColoring {
                        spec: self.spec.clone(),
                        singleton: self.x,
                        colors,
                    });
                }
            }
            self.current = Some(self.partitions.next()?);
            self.next_grouping = 0;
        }
    }
}

fn check_spec(spec: &PartitionSpec, chi: usize) -> Result<()> {
    if spec.chromatic() != chi {
        Err(Error::SpecMismatch {
            sum: spec.total(),
            chi,
        })
    } else {
        Ok(())
    }
}

/// Every `spec`-partitioned coloring of `g` with singleton `x`, each once up
/// to reordering classes within a group (and equal-size groups).
pub fn enumerate_partitioned_colorings<'a>(g: &'a Graph, spec: &PartitionSpec, x: Vertex) -> Result<PartitionedColorings<'a>> {
    enumerate_with_chi(g, spec, x, chromatic_number(g))
}

/// As [`enumerate_partitioned_colorings`] with `χ(g)` supplied by the caller.
pub fn enumerate_with_chi<'a>(g: &'a Graph, spec: &PartitionSpec, x: Vertex, chi: usize) -> Result<PartitionedColorings<'a>> {
    g.check_vertex(x)?;
    check_spec(spec, chi)?;
    Ok(PartitionedColorings {
        g,
        spec: spec.clone(),
        x,
        partitions: SetPartitions::new(g, x, spec.total()),
        groupings: canonical_groupings(spec),
        current: None,
        next_grouping: 0,
    })
}

/// First coloring of least objective in enumeration order, singleton fixed to `x`.
pub fn global_min_coloring(g: &Graph, spec: &PartitionSpec, x: Vertex) -> Result<PartitionedColoring> {
    let mut best: Option<(usize, PartitionedColoring)> = None;
    for pc in enumerate_partitioned_colorings(g, spec, x)? {
        let obj = pc.objective(g);
        if best.as_ref().is_none_or(|(b, _)| obj < *b) {
            best = Some((obj, pc));
        }
    }
    best.map(|(_, pc)| pc).ok_or(Error::Infeasible(x))
}

/// All minimizers of the objective over every singleton choice.
#[derive(Debug, Clone)]
pub struct GlobalMinima {
    pub objective: usize,
    pub colorings: Vec<PartitionedColoring>,
}

/// Minimizes over all partitioned colorings of `g`, whatever their singleton,
/// and returns every minimizer. `None` when no vertex can be a singleton.
pub fn all_global_minima(g: &Graph, spec: &PartitionSpec, chi: usize) -> Result<Option<GlobalMinima>> {
    check_spec(spec, chi)?;
    let mut best: Option<GlobalMinima> = None;
    for x in g.vertices() {
        for pc in enumerate_with_chi(g, spec, x, chi)? {
            let obj = pc.objective(g);
            match &mut best {
                Some(b) if obj > b.objective => {}
                Some(b) if obj == b.objective => b.colorings.push(pc),
                _ => {
                    best = Some(GlobalMinima {
                        objective: obj,
                        colorings: vec![pc],
                    })
                }
            }
        }
    }
    Ok(best)
}

/// Largest number of classes the subset-DP minimizer accepts.
pub const DP_MAX_CLASSES: usize = 24;

/// Exact minimizer by dynamic programming over class subsets: for each set
/// partition of `V - x` the best grouping is found by filling groups in order,
/// so only the set partitions are enumerated. Minimizes over every singleton
/// when `singleton` is `None`. Suited to graphs whose classes are few and rigid
/// (complete graphs of order up to `DP_MAX_CLASSES + 1`).
pub fn minimal_coloring_dp(g: &Graph, spec: &PartitionSpec, chi: usize, singleton: Option<Vertex>) -> Result<PartitionedColoring> {
    check_spec(spec, chi)?;
    let m = spec.total();
    if m > DP_MAX_CLASSES {
        return Err(Error::InvalidParameter(format!(
            "subset DP supports at most {DP_MAX_CLASSES} classes, spec has {m}"
        )));
    }
    let xs: Vec<Vertex> = match singleton {
        Some(x) => {
            g.check_vertex(x)?;
            vec![x]
        }
        None => g.vertices().collect(),
    };
    let mut best: Option<(usize, PartitionedColoring)> = None;
    for &x in &xs {
        for classes in SetPartitions::new(g, x, m) {
            let (cost, assign) = best_grouping(g, &classes, spec);
            if best.as_ref().is_none_or(|(b, _)| cost < *b) {
                let colors = colors_for(g.order(), x, &classes, &assign, spec);
                best = Some((
                    cost,
                    PartitionedColoring {
                        spec: spec.clone(),
                        singleton: x,
                        colors,
                    },
                ));
            }
        }
    }
    match best {
        Some((_, pc)) => Ok(pc),
        None => Err(Error::Infeasible(singleton.unwrap_or(0))),
    }
}

fn for_each_combination(items: &[usize], r: usize, f: &mut impl FnMut(u32)) {
    fn rec(items: &[usize], r: usize, start: usize, mask: u32, f: &mut impl FnMut(u32)) {
        if r == 0 {
            f(mask);
            return;
        }
        for k in start..=items.len() - r {
            rec(items, r - 1, k + 1, mask | 1 << items[k], f);
        }
    }
    if r <= items.len() {
        rec(items, r, 0, 0, f);
    }
}

/// Cheapest assignment of the (ordered) classes to groups.
fn best_grouping(g: &Graph, classes: &[Vec<Vertex>], spec: &PartitionSpec) -> (usize, Vec<usize>) {
    let m = classes.len();
    let mut class_of = vec![usize::MAX; g.order()];
    for (c, class) in classes.iter().enumerate() {
        for &v in class {
            class_of[v] = c;
        }
    }
    let mut between = vec![0u32; m * m];
    for (u, v) in g.edges() {
        let (cu, cv) = (class_of[u], class_of[v]);
        if cu != usize::MAX && cv != usize::MAX {
            between[cu * m + cv] += 1;
            between[cv * m + cu] += 1;
        }
    }
    let full: u32 = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let mut cost = vec![0u32; 1usize << m];
    for s in 1..=full as usize {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        let mut extra = 0;
        let mut bits = rest;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            extra += between[low * m + b];
            bits &= bits - 1;
        }
        cost[s] = cost[rest] + extra;
    }
    // group index reached at each popcount boundary
    let mut group_at = vec![usize::MAX; m + 1];
    let mut acc = 0;
    for (i, &r) in spec.parts().iter().enumerate() {
        group_at[acc] = i;
        acc += r;
    }
    const UNKNOWN: u32 = u32::MAX;
    let mut memo = vec![UNKNOWN; 1usize << m];
    let mut pick = vec![0u32; 1usize << m];

    fn solve(
        mask: u32,
        full: u32,
        spec: &PartitionSpec,
        group_at: &[usize],
        cost: &[u32],
        memo: &mut [u32],
        pick: &mut [u32],
    ) -> u32 {
        if mask == full {
            return 0;
        }
        if memo[mask as usize] != UNKNOWN {
            return memo[mask as usize];
        }
        let gi = group_at[mask.count_ones() as usize];
        let free: Vec<usize> = (0..32).filter(|&b| full >> b & 1 == 1 && mask >> b & 1 == 0).collect();
        let mut best = UNKNOWN;
        let mut best_s = 0;
        let mut subsets = Vec::new();
        for_each_combination(&free, spec.r(gi), &mut |s| subsets.push(s));
        for s in subsets {
            let sub = solve(mask | s, full, spec, group_at, cost, memo, pick);
            let total = cost[s as usize] + sub;
            if total < best {
                best = total;
                best_s = s;
            }
        }
        memo[mask as usize] = best;
        pick[mask as usize] = best_s;
        best
    }

    let total = solve(0, full, spec, &group_at, &cost, &mut memo, &mut pick);
    let mut assign = vec![0; m];
    let mut mask = 0u32;
    while mask != full {
        let gi = group_at[mask.count_ones() as usize];
        let s = pick[mask as usize];
        for (c, a) in assign.iter_mut().enumerate() {
            if s >> c & 1 == 1 {
                *a = gi;
            }
        }
        mask |= s;
    }
    canonicalize_equal_groups(&mut assign, spec);
    (total as usize, assign)
}

/// Relabels equal-size groups so they appear in order of their first class.
fn canonicalize_equal_groups(assign: &mut [usize], spec: &PartitionSpec) {
    let a = spec.groups();
    let first: Vec<usize> = (0..a)
        .map(|gi| assign.iter().position(|&x| x == gi).unwrap_or(usize::MAX))
        .collect();
    let mut relabel: Vec<usize> = (0..a).collect();
    let mut sizes: Vec<usize> = spec.parts().to_vec();
    sizes.sort_unstable();
    sizes.dedup();
    for size in sizes {
        let mut members: Vec<usize> = (0..a).filter(|&gi| spec.r(gi) == size).collect();
        let slots = members.clone();
        members.sort_by_key(|&gi| first[gi]);
        for (slot, gi) in slots.into_iter().zip(members) {
            relabel[gi] = slot;
        }
    }
    for x in assign.iter_mut() {
        *x = relabel[*x];
    }
}

/// The move from the proof of the lemma: a shortest path in `Z_i(x)` from the
/// singleton to the nearest vertex whose `Z_i`-degree exceeds `r_i` (nearest
/// by distance, then lowest index; BFS visits neighbors in ascending order).
/// `None` when `Δ(Z_i(x)) <= r_i`.
pub fn find_shift_path(g: &Graph, pc: &PartitionedColoring, i: usize) -> Option<Vec<Vertex>> {
    let x = pc.singleton;
    let r = pc.spec.r(i);
    let in_z = |v: Vertex| v == x || pc.group_of(v) == Some(i);
    let mut parent = vec![usize::MAX; g.order()];
    let mut dist = vec![usize::MAX; g.order()];
    dist[x] = 0;
    let mut queue = VecDeque::from([x]);
    let mut best: Option<Vertex> = None;
    while let Some(u) = queue.pop_front() {
        if let Some(b) = best {
            if dist[u] > dist[b] {
                break;
            }
        }
        if pc.z_degree(g, i, u) > r && best.is_none_or(|b| dist[u] < dist[b] || u < b) {
            best = Some(u);
        }
        for &w in g.neighbors(u) {
            if in_z(w) && dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![best?];
    while let Some(&v) = path.last() {
        if v == x {
            break;
        }
        path.push(parent[v]);
    }
    path.reverse();
    Some(path)
}

/// Rotates colors along `path = x_1 … x_t` inside `Z_i(x)`: `x_k` takes the
/// color of `x_{k+1}` for `k < t` and `x_t` takes the singleton color, so
/// `x_t` becomes the new singleton.
///
/// Requires `x_1` to be the singleton, consecutive path vertices adjacent, and
/// every `x_k` with `k < t` to have exactly one neighbor in each class of
/// group `i` other than its own.
pub fn kempe_path_shift(g: &Graph, pc: &PartitionedColoring, i: usize, path: &[Vertex]) -> Result<PartitionedColoring> {
    if i >= pc.spec.groups() {
        return Err(Error::InvalidParameter(format!("group {i} out of range")));
    }
    let x = pc.singleton;
    match path {
        [first, _, ..] if *first == x => {}
        [first, _, ..] => {
            return Err(Error::Precondition {
                vertex: *first,
                reason: "path must start at the singleton".into(),
            })
        }
        _ => return Err(Error::InvalidParameter("path needs at least two vertices".into())),
    }
    let z = pc.z_vertices(g, i);
    let mut seen = vec![false; g.order()];
    for &v in path {
        g.check_vertex(v)?;
        if z.binary_search(&v).is_err() {
            return Err(Error::NotInComponent { vertex: v, group: i });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::Precondition {
                vertex: v,
                reason: "path repeats a vertex".into(),
            });
        }
    }
    for w in path.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(Error::Precondition {
                vertex: w[0],
                reason: format!("not adjacent to next path vertex {}", w[1]),
            });
        }
    }
    for &v in &path[..path.len() - 1] {
        for c in pc.group_colors(i) {
            if c == pc.colors[v] {
                continue;
            }
            let hits = g.neighbors(v).iter().filter(|&&u| pc.colors[u] == c).count();
            if hits != 1 {
                return Err(Error::Precondition {
                    vertex: v,
                    reason: format!("has {hits} neighbors of color {c}, expected exactly one"),
                });
            }
        }
    }
    let mut colors = pc.colors.clone();
    for w in path.windows(2) {
        colors[w[0]] = pc.colors[w[1]];
    }
    colors[*path.last().expect("nonempty")] = pc.colors[x];
    PartitionedColoring::from_colors(g, &pc.spec, colors)
}

/// Exchanges the colors of the singleton `x` and `y ∈ Z_i(x)`. Requires
/// `d_{Z_i(x)}(x) = r_i`; fails if the exchange is improper.
pub fn swap(g: &Graph, pc: &PartitionedColoring, i: usize, y: Vertex) -> Result<PartitionedColoring> {
    g.check_vertex(y)?;
    if i >= pc.spec.groups() {
        return Err(Error::InvalidParameter(format!("group {i} out of range")));
    }
    let x = pc.singleton;
    if y == x || pc.group_of(y) != Some(i) || pc.z_vertices(g, i).binary_search(&y).is_err() {
        return Err(Error::NotInComponent { vertex: y, group: i });
    }
    let dx = pc.singleton_degree_in(g, i);
    if dx != pc.spec.r(i) {
        return Err(Error::Precondition {
            vertex: x,
            reason: format!("d_Z(x) = {dx} but r_{i} = {}", pc.spec.r(i)),
        });
    }
    let mut colors = pc.colors.clone();
    colors.swap(x, y);
    PartitionedColoring::from_colors(g, &pc.spec, colors)
}

/// Steepest-descent heuristic. Moves: the lemma's path shift, then
/// single-vertex moves between non-singleton classes that keep the coloring
/// proper and every class nonempty. Stops at a local minimum; carries no
/// global guarantee and is never used by the lemma checkers.
pub fn local_descent(g: &Graph, start: &PartitionedColoring) -> PartitionedColoring {
    let mut pc = start.clone();
    let k = pc.spec.chromatic();
    'outer: loop {
        let obj = pc.objective(g);
        for i in 0..pc.spec.groups() {
            if pc.singleton_degree_in(g, i) != pc.spec.r(i) {
                continue;
            }
            if let Some(path) = find_shift_path(g, &pc, i) {
                if let Ok(next) = kempe_path_shift(g, &pc, i, &path) {
                    if next.objective(g) < obj {
                        pc = next;
                        continue 'outer;
                    }
                }
            }
        }
        let mut sizes = vec![0usize; k];
        for &c in &pc.colors {
            sizes[c] += 1;
        }
        for v in g.vertices() {
            let from = pc.colors[v];
            if from == 0 || sizes[from] == 1 {
                continue;
            }
            for to in 1..k {
                if to == from || g.neighbors(v).iter().any(|&u| pc.colors[u] == to) {
                    continue;
                }
                let mut colors = pc.colors.clone();
                colors[v] = to;
                let next = PartitionedColoring {
                    spec: pc.spec.clone(),
                    singleton: pc.singleton,
                    colors,
                };
                if next.objective(g) < obj {
                    pc = next;
                    continue 'outer;
                }
            }
        }
        return pc;
    }
}

/// Checks that every group with `d_{Z_i(x)}(x) = r_i` has `Z_i(x)` complete
/// (`r_i >= 3`) or an odd cycle (`r_i = 2`). The statement only binds at a
/// global minimum of the objective; that is the caller's responsibility.
pub fn check_mozhan_lemma(g: &Graph, pc: &PartitionedColoring) -> LawVerdict {
    let id = crate::constructions::to_graph6(g);
    let mut checked = Vec::new();
    for i in 0..pc.spec.groups() {
        let r = pc.spec.r(i);
        if pc.singleton_degree_in(g, i) != r || r < 2 {
            continue;
        }
        checked.push(i);
        let z = pc.z_component(g, i);
        let ok = if r >= 3 { z.graph.is_complete() } else { z.graph.is_odd_cycle() };
        if !ok {
            return LawVerdict::violated(
                "mozhan-lemma",
                id,
                witness! {
                    "assumption" => "caller supplied a global minimum",
                    "coloring" => pc.to_json(),
                    "group" => i,
                    "r" => r,
                    "z_vertices" => z.old_ids,
                    "z_edges" => z.graph.size(),
                },
            );
        }
    }
    LawVerdict::holds("mozhan-lemma", id).with_witness(witness! {
        "assumption" => "caller supplied a global minimum",
        "groups_checked" => checked,
    })
}

/// Hypothesis handling for [`check_joined_lows`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JoinedLowsMode {
    /// Both groups must have at least 3 classes.
    Strict,
    /// Drops the size requirement, to probe whether it is needed.
    Permissive,
}

/// With `x` low and low `w ∈ U_i ∩ N(x)` adjacent to low `z ∈ U_j ∩ N(x)`,
/// checks that every low vertex of `W = (U_i ∪ U_j) ∩ N(x)` is adjacent to
/// all of `W`. Reports "not applicable" as a skip when the hypotheses fail.
pub fn check_joined_lows(
    g: &Graph,
    pc: &PartitionedColoring,
    chi: usize,
    i: usize,
    j: usize,
    mode: JoinedLowsMode,
) -> LawVerdict {
    const LAW: &str = "joined-lows";
    let id = crate::constructions::to_graph6(g);
    let a = pc.spec.groups();
    if i >= a || j >= a || i == j {
        return LawVerdict::skipped(LAW, id, "not applicable: need two distinct groups");
    }
    if mode == JoinedLowsMode::Strict && pc.spec.r(i).min(pc.spec.r(j)) < 3 {
        return LawVerdict::skipped(LAW, id, "not applicable: r_i, r_j >= 3 fails");
    }
    let x = pc.singleton;
    if !is_low(g, chi, x) {
        return LawVerdict::skipped(LAW, id, "not applicable: singleton is high");
    }
    let near = |grp: usize| -> Vec<Vertex> {
        g.neighbors(x)
            .iter()
            .copied()
            .filter(|&v| pc.group_of(v) == Some(grp))
            .collect()
    };
    let (ni, nj) = (near(i), near(j));
    let trigger = ni.iter().find_map(|&w| {
        nj.iter()
            .find(|&&z| is_low(g, chi, w) && is_low(g, chi, z) && g.has_edge(w, z))
            .map(|&z| (w, z))
    });
    let Some((w, z)) = trigger else {
        return LawVerdict::skipped(LAW, id, "not applicable: no adjacent low pair across the groups");
    };
    let mut set = ni;
    set.extend(nj);
    set.sort_unstable();
    for &v in &set {
        if !is_low(g, chi, v) {
            continue;
        }
        if let Some(&u) = set.iter().find(|&&u| u != v && !g.has_edge(u, v)) {
            return LawVerdict::violated(
                LAW,
                id,
                witness! {
                    "coloring" => pc.to_json(),
                    "groups" => [i, j],
                    "trigger" => [w, z],
                    "low_vertex" => v,
                    "non_neighbor" => u,
                },
            );
        }
    }
    LawVerdict::holds(LAW, id).with_witness(witness! { "trigger" => [w, z], "set" => set })
}
