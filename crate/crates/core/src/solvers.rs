//! Exact oracles for desk-scale graphs: k-colorability, chromatic number,
//! clique number, vertex criticality and list-coloring feasibility.
//!
//! Colorability is decided by a DSATUR-ordered backtracking search. The vertex
//! with the fewest available colors is branched on first (ties: larger degree,
//! then lower index) and colors are tried in ascending order, so witnesses are
//! reproducible. Two prunings keep pigeonhole-shaped instances cheap: forward
//! checking on neighbors, and a Hall-type count on a fixed family of cliques
//! (a clique whose uncolored members see fewer available colors than their
//! number cannot be finished).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A proper coloring with colors `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ProperColoring {
    colors: Vec<usize>,
}

impl ProperColoring {
    /// Wraps `colors` after checking it is proper for `g`.
    pub fn new(g: &Graph, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != g.order() {
            return Err(Error::InvalidParameter(format!(
                "coloring has {} entries for {} vertices",
                colors.len(),
                g.order()
            )));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| colors[u] == colors[v]) {
            return Err(Error::ImproperColoring(u, v));
        }
        Ok(ProperColoring { colors })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: Vertex) -> usize {
        self.colors[v]
    }

    /// Number of distinct colors used.
    pub fn num_colors(&self) -> usize {
        let mut seen: Vec<usize> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.order() && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.colors
    }
}

/// Allowed colors per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment(pub Vec<Vec<usize>>);

impl ListAssignment {
    pub fn uniform(n: usize, colors: impl IntoIterator<Item = usize> + Clone) -> Self {
        ListAssignment((0..n).map(|_| colors.clone().into_iter().collect()).collect())
    }
}

const NONE: usize = usize::MAX;

struct Search<'a> {
    g: &'a Graph,
    palette: usize,
    /// `allowed[v * palette + c]`
    allowed: Vec<bool>,
    /// Number of neighbors of `v` holding `c`.
    forbid: Vec<u32>,
    avail: Vec<usize>,
    /// Available-color masks, kept only when the palette fits in 128 bits.
    masks: Option<Vec<u128>>,
    color: Vec<usize>,
    cliques: Vec<Vec<Vertex>>,
    /// Every vertex may use every color, so colors are interchangeable.
    symmetric: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, palette: usize, allowed: Vec<bool>, symmetric: bool) -> Self {
        let n = g.order();
        let avail = (0..n)
            .map(|v| allowed[v * palette..(v + 1) * palette].iter().filter(|&&a| a).count())
            .collect();
        let masks = (palette <= 128).then(|| {
            (0..n)
                .map(|v| {
                    (0..palette)
                        .filter(|&c| allowed[v * palette + c])
                        .fold(0u128, |m, c| m | 1 << c)
                })
                .collect()
        });
        Search {
            g,
            palette,
            allowed,
            forbid: vec![0; n * palette],
            avail,
            masks,
            color: vec![NONE; n],
            cliques: clique_family(g),
            symmetric,
        }
    }

    fn assign(&mut self, v: Vertex, c: usize) {
        self.color[v] = c;
        for &u in self.g.neighbors(v) {
            let i = u * self.palette + c;
            self.forbid[i] += 1;
            if self.forbid[i] == 1 && self.allowed[i] {
                self.avail[u] -= 1;
                if let Some(m) = &mut self.masks {
                    m[u] &= !(1 << c);
                }
            }
        }
    }

    fn unassign(&mut self, v: Vertex) {
        let c = self.color[v];
        self.color[v] = NONE;
        for &u in self.g.neighbors(v) {
            let i = u * self.palette + c;
            self.forbid[i] -= 1;
            if self.forbid[i] == 0 && self.allowed[i] {
                self.avail[u] += 1;
                if let Some(m) = &mut self.masks {
                    m[u] |= 1 << c;
                }
            }
        }
    }

    fn pick(&self) -> Option<Vertex> {
        self.g
            .vertices()
            .filter(|&v| self.color[v] == NONE)
            .min_by_key(|&v| (self.avail[v], std::cmp::Reverse(self.g.deg(v)), v))
    }

    fn dead_end(&self, v: Vertex) -> bool {
        if self
            .g
            .neighbors(v)
            .iter()
            .any(|&u| self.color[u] == NONE && self.avail[u] == 0)
        {
            return true;
        }
        let Some(masks) = &self.masks else {
            return false;
        };
        self.cliques.iter().any(|clique| {
            let mut open = 0u32;
            let mut union = 0u128;
            for &u in clique {
                if self.color[u] == NONE {
                    open += 1;
                    union |= masks[u];
                }
            }
            union.count_ones() < open
        })
    }

    /// `top` is one past the largest color in use.
    fn solve(&mut self, top: usize) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        if self.avail[v] == 0 {
            return false;
        }
        let limit = if self.symmetric {
            (top + 1).min(self.palette)
        } else {
            self.palette
        };
        for c in 0..limit {
            let i = v * self.palette + c;
            if !self.allowed[i] || self.forbid[i] != 0 {
                continue;
            }
            self.assign(v, c);
            if !self.dead_end(v) && self.solve(top.max(c + 1)) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}

/// One greedily grown clique per vertex (size at least 3, duplicates removed).
/// Growth adds the candidate with the most neighbors among the remaining
/// candidates, lowest index on ties.
fn clique_family(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut out: Vec<Vec<Vertex>> = Vec::new();
    for v in g.vertices() {
        let mut clique = vec![v];
        let mut cand: Vec<Vertex> = g.neighbors(v).to_vec();
        while !cand.is_empty() {
            let best = *cand
                .iter()
                .max_by_key(|&&u| {
                    let inside = cand.iter().filter(|&&w| g.has_edge(u, w)).count();
                    (inside, std::cmp::Reverse(u))
                })
                .expect("nonempty");
            clique.push(best);
            cand.retain(|&w| w != best && g.has_edge(best, w));
        }
        if clique.len() >= 3 {
            clique.sort_unstable();
            if !out.contains(&clique) {
                out.push(clique);
            }
        }
    }
    out
}

/// A proper `k`-coloring if one exists.
pub fn k_colorable(g: &Graph, k: usize) -> Option<ProperColoring> {
    let n = g.order();
    if n == 0 {
        return Some(ProperColoring { colors: Vec::new() });
    }
    if k == 0 {
        return None;
    }
    if k >= n {
        return Some(ProperColoring {
            colors: (0..n).collect(),
        });
    }
    let mut s = Search::new(g, k, vec![true; n * k], true);
    s.solve(0).then_some(ProperColoring { colors: s.color })
}

/// Greedy DSATUR coloring without backtracking; an upper bound for `χ`.
pub fn dsatur_greedy(g: &Graph) -> ProperColoring {
    let n = g.order();
    let mut color = vec![NONE; n];
    let mut seen: Vec<Vec<bool>> = vec![vec![false; n + 1]; n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = g
            .vertices()
            .filter(|&v| color[v] == NONE)
            .max_by_key(|&v| (sat[v], g.deg(v), std::cmp::Reverse(v)))
            .expect("uncolored vertex remains");
        let c = (0..=n).find(|&c| !seen[v][c]).expect("n + 1 colors suffice");
        color[v] = c;
        for &u in g.neighbors(v) {
            if !seen[u][c] {
                seen[u][c] = true;
                sat[u] += 1;
            }
        }
    }
    ProperColoring { colors: color }
}

/// An optimal coloring, searched upward from the clique bound.
pub fn optimal_coloring(g: &Graph) -> ProperColoring {
    if g.order() == 0 {
        return ProperColoring { colors: Vec::new() };
    }
    let greedy = dsatur_greedy(g);
    let upper = greedy.num_colors();
    let lower = clique_number(g);
    for k in lower..upper {
        if let Some(c) = k_colorable(g, k) {
            return c;
        }
    }
    greedy
}

/// `χ(G)`; zero for the graph with no vertices.
pub fn chromatic_number(g: &Graph) -> usize {
    optimal_coloring(g).num_colors()
}

/// A maximum clique, ascending. Branch and bound with greedy-coloring bounds.
pub fn maximum_clique(g: &Graph) -> Vec<Vertex> {
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.deg(v)), v));
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand_clique(g, &mut current, order, &mut best);
    best.sort_unstable();
    best
}

fn expand_clique(g: &Graph, current: &mut Vec<Vertex>, cand: Vec<Vertex>, best: &mut Vec<Vertex>) {
    if cand.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    // greedy color classes over the candidates give an upper bound per prefix
    let mut classes: Vec<Vec<Vertex>> = Vec::new();
    for &v in &cand {
        match classes
            .iter_mut()
            .find(|cls| cls.iter().all(|&u| !g.has_edge(u, v)))
        {
            Some(cls) => cls.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut ordered: Vec<(Vertex, usize)> = Vec::with_capacity(cand.len());
    for (i, cls) in classes.iter().enumerate() {
        for &v in cls {
            ordered.push((v, i + 1));
        }
    }
    while let Some((v, bound)) = ordered.pop() {
        if current.len() + bound <= best.len() {
            return;
        }
        current.push(v);
        let next: Vec<Vertex> = ordered
            .iter()
            .map(|&(u, _)| u)
            .filter(|&u| g.has_edge(u, v))
            .collect();
        expand_clique(g, current, next, best);
        current.pop();
    }
}

/// `ω(G)`.
pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

/// Vertices whose removal lowers the chromatic number.
pub fn critical_vertices(g: &Graph) -> Vec<Vertex> {
    let chi = chromatic_number(g);
    critical_vertices_with_chi(g, chi)
}

pub fn critical_vertices_with_chi(g: &Graph, chi: usize) -> Vec<Vertex> {
    g.vertices()
        .filter(|&v| {
            let h = g.remove_vertex(v).expect("v in range");
            chi > 0 && k_colorable(&h, chi - 1).is_some()
        })
        .collect()
}

/// Whether every vertex is critical. Defined on connected graphs only.
pub fn is_vertex_critical(g: &Graph) -> Result<bool> {
    is_vertex_critical_with_chi(g, chromatic_number(g))
}

pub fn is_vertex_critical_with_chi(g: &Graph, chi: usize) -> Result<bool> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    // a critical vertex of a chi-chromatic graph has degree at least chi - 1
    if g.min_degree().unwrap_or(0) + 1 < chi {
        return Ok(false);
    }
    Ok(g.vertices().all(|v| {
        let h = g.remove_vertex(v).expect("v in range");
        chi > 0 && k_colorable(&h, chi - 1).is_some()
    }))
}

/// Colors every vertex from its list with adjacent vertices distinct, if possible.
pub fn list_color_feasible(g: &Graph, lists: &ListAssignment) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    if lists.0.len() != n {
        return Err(Error::InvalidParameter(format!(
            "list assignment covers {} of {} vertices",
            lists.0.len(),
            n
        )));
    }
    let mut palette: Vec<usize> = lists.0.iter().flatten().copied().collect();
    palette.sort_unstable();
    palette.dedup();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if palette.is_empty() {
        return Ok(None);
    }
    let p = palette.len();
    let mut allowed = vec![false; n * p];
    for (v, list) in lists.0.iter().enumerate() {
        for c in list {
            let idx = palette.binary_search(c).expect("collected above");
            allowed[v * p + idx] = true;
        }
    }
    let mut s = Search::new(g, p, allowed, false);
    Ok(s.solve(0).then(|| s.color.iter().map(|&i| palette[i]).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_graph, cycle, f_graph, path, petersen, star};

    /// Smallest k admitting a proper coloring, by trying every assignment.
    fn chi_naive(g: &Graph) -> usize {
        let n = g.order();
        (0..=n)
            .find(|&k| {
                let total = (k as u64).pow(n as u32);
                (0..total).any(|mut code| {
                    let mut col = vec![0; n];
                    for c in col.iter_mut() {
                        *c = (code % k as u64) as usize;
                        code /= k as u64;
                    }
                    g.edges().all(|(u, v)| col[u] != col[v])
                })
            })
            .unwrap()
    }

    #[test]
    fn k_colorability_examples() {
        let c5 = cycle(5).unwrap();
        assert!(k_colorable(&c5, 2).is_none());
        let c = k_colorable(&c5, 3).unwrap();
        assert!(c.is_proper(&c5));
        assert!(k_colorable(&f_graph(4).unwrap().graph, 3).is_none());
        assert!(k_colorable(&Graph::empty(3), 0).is_none());
        assert!(k_colorable(&Graph::empty(0), 0).is_some());
    }

    #[test]
    fn chromatic_number_examples() {
        assert_eq!(chromatic_number(&complete_graph(7).unwrap()), 7);
        assert_eq!(chromatic_number(&f_graph(6).unwrap().graph), 6);
        let p = petersen();
        assert!(k_colorable(&p, 2).is_none());
        assert!(k_colorable(&p, 3).is_some());
        assert_eq!(chromatic_number(&p), 3);
        assert_eq!(chromatic_number(&Graph::empty(4)), 1);
        assert_eq!(chromatic_number(&Graph::empty(0)), 0);
    }

    #[test]
    fn chromatic_number_agrees_with_naive_on_named_graphs() {
        for g in [
            cycle(5).unwrap(),
            cycle(6).unwrap(),
            star(4).unwrap(),
            complete_graph(5).unwrap(),
            f_graph(3).unwrap().graph,
            cycle(5).unwrap().join(&complete_graph(1).unwrap()),
        ] {
            assert_eq!(chromatic_number(&g), chi_naive(&g), "{g:?}");
        }
    }

    /// Largest vertex subset that is pairwise adjacent.
    fn omega_brute(g: &Graph) -> usize {
        let n = g.order();
        (0u32..1 << n)
            .filter(|&s| {
                (0..n).all(|u| (u + 1..n).all(|v| s >> u & 1 == 0 || s >> v & 1 == 0 || g.has_edge(u, v)))
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn clique_number_examples() {
        // K_6 minus the perfect matching {01, 23, 45}
        let cocktail = Graph::from_edges(
            6,
            (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).filter(|&(u, v)| !(u % 2 == 0 && v == u + 1)),
        )
        .unwrap();
        assert_eq!(omega_brute(&cocktail), 3);
        assert_eq!(clique_number(&cocktail), 3);
        let f5 = f_graph(5).unwrap().graph;
        assert_eq!(omega_brute(&f5), 4);
        assert_eq!(clique_number(&f5), 4);
        assert_eq!(clique_number(&cycle(7).unwrap()), 2);
        let q = maximum_clique(&f5);
        assert!(q.iter().all(|&u| q.iter().all(|&v| u == v || f5.has_edge(u, v))));
    }

    #[test]
    fn criticality_examples() {
        assert!(is_vertex_critical(&complete_graph(5).unwrap()).unwrap());
        assert!(is_vertex_critical(&cycle(5).unwrap()).unwrap());
        let mut edges: Vec<_> = cycle(5).unwrap().edges().collect();
        edges.push((0, 5));
        let pendant = Graph::from_edges(6, edges).unwrap();
        assert!(!is_vertex_critical(&pendant).unwrap());
        assert_eq!(is_vertex_critical(&Graph::empty(2)), Err(Error::Disconnected));
        assert_eq!(is_vertex_critical(&Graph::empty(0)), Err(Error::EmptyGraph));
    }

    /// Vertices `v` with chi(G - v) < chi(G), using the naive chromatic number.
    fn critical_brute(g: &Graph) -> Vec<usize> {
        let chi = chi_naive(g);
        g.vertices()
            .filter(|&v| chi_naive(&g.remove_vertex(v).unwrap()) < chi)
            .collect()
    }

    #[test]
    fn critical_vertex_sets() {
        assert_eq!(critical_vertices(&complete_graph(4).unwrap()), vec![0, 1, 2, 3]);
        let p3 = path(3).unwrap();
        assert_eq!(critical_brute(&p3), vec![1]);
        assert_eq!(critical_vertices(&p3), vec![1]);
        let k13 = star(3).unwrap();
        assert_eq!(critical_brute(&k13), vec![0]);
        assert_eq!(critical_vertices(&k13), vec![0]);
    }

    #[test]
    fn list_coloring_examples() {
        let k3 = complete_graph(3).unwrap();
        let sol = list_color_feasible(&k3, &ListAssignment::uniform(3, 0..3)).unwrap().unwrap();
        assert!(k3.edges().all(|(u, v)| sol[u] != sol[v]));
        assert!(list_color_feasible(&k3, &ListAssignment::uniform(3, 0..2))
            .unwrap()
            .is_none());
        // lists larger than the degree always succeed
        let p = petersen();
        let lists = ListAssignment(p.vertices().map(|v| (10 * v..10 * v + p.deg(v) + 1).collect()).collect());
        let sol = list_color_feasible(&p, &lists).unwrap().unwrap();
        assert!(p.vertices().all(|v| lists.0[v].contains(&sol[v])));
        assert!(p.edges().all(|(u, v)| sol[u] != sol[v]));
        assert!(list_color_feasible(&p, &ListAssignment(vec![])).is_err());
    }

    #[test]
    fn list_coloring_with_sparse_palette() {
        // path a-b-c with L(a) = {7}, L(b) = {7, 9}, L(c) = {9}
        let g = path(3).unwrap();
        let lists = ListAssignment(vec![vec![7], vec![7, 9], vec![9]]);
        assert!(list_color_feasible(&g, &lists).unwrap().is_none());
        let lists = ListAssignment(vec![vec![7], vec![7, 8, 9], vec![9]]);
        assert_eq!(list_color_feasible(&g, &lists).unwrap(), Some(vec![7, 8, 9]));
    }

    #[test]
    fn pigeonhole_instances_stay_fast() {
        // F_12 needs 12 colors but its clique number is 11
        let f12 = f_graph(12).unwrap().graph;
        assert!(k_colorable(&f12, 11).is_none());
        assert_eq!(chromatic_number(&f12), 12);
    }

    #[test]
    fn witnesses_are_deterministic() {
        let p = petersen();
        assert_eq!(k_colorable(&p, 3), k_colorable(&p, 3));
    }
}
