//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! A [`Graph`] is immutable once built. Neighbor lists are kept sorted so that
//! every iteration order in the crate is deterministic, and a packed adjacency
//! matrix backs constant-time [`Graph::has_edge`].

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Dense vertex index in `0..graph.order()`.
pub type Vertex = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    words: usize,
    matrix: Vec<u64>,
    edges: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Accumulates edges before freezing them into a [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    adj: Vec<BTreeSet<Vertex>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            n,
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// Adds `uv`; repeated edges collapse.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<&mut Self> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(self)
    }

    pub fn build(self) -> Graph {
        let n = self.n;
        let words = n.div_ceil(64).max(1);
        let mut matrix = vec![0u64; n * words];
        let mut edges = 0;
        let adj: Vec<Vec<Vertex>> = self
            .adj
            .into_iter()
            .enumerate()
            .map(|(u, set)| {
                for &v in &set {
                    matrix[u * words + v / 64] |= 1 << (v % 64);
                    if u < v {
                        edges += 1;
                    }
                }
                set.into_iter().collect()
            })
            .collect();
        let g = Graph {
            adj,
            words,
            matrix,
            edges,
        };
        debug_assert!(g.is_well_formed());
        g
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Sorted neighbor list of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order()
            && v < self.order()
            && self.matrix[u * self.words + v / 64] & (1 << (v % 64)) != 0
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    /// Degree without range checking, for hot loops over known vertices.
    pub fn deg(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges == 0
    }

    /// Induced subgraph on `s`. New ids follow the ascending order of `s`.
    pub fn induced_subgraph<I>(&self, s: I) -> Result<Induced>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let set: BTreeSet<Vertex> = s.into_iter().collect();
        for &v in &set {
            self.check_vertex(v)?;
        }
        let old_ids: Vec<Vertex> = set.into_iter().collect();
        let mut to_new = vec![None; self.order()];
        for (new, &old) in old_ids.iter().enumerate() {
            to_new[old] = Some(new);
        }
        let mut b = GraphBuilder::new(old_ids.len());
        for (new_u, &u) in old_ids.iter().enumerate() {
            for &v in &self.adj[u] {
                if let Some(new_v) = to_new[v] {
                    if new_u < new_v {
                        b.add_edge(new_u, new_v)?;
                    }
                }
            }
        }
        Ok(Induced {
            graph: b.build(),
            old_ids,
            to_new,
        })
    }

    /// Number of edges of the subgraph induced on the vertices flagged in `members`.
    pub fn induced_edge_count(&self, members: &[bool]) -> usize {
        self.edges().filter(|&(u, v)| members[u] && members[v]).count()
    }

    /// Vertex set of the component containing `v`, ascending.
    pub fn component_of(&self, v: Vertex) -> Result<Vec<Vertex>> {
        self.check_vertex(v)?;
        Ok(self.component_within(v, |_| true))
    }

    /// Component of `v` in the subgraph induced by the vertices accepted by `allowed`.
    /// `v` itself is always included.
    pub fn component_within<F>(&self, v: Vertex, allowed: F) -> Vec<Vertex>
    where
        F: Fn(Vertex) -> bool,
    {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([v]);
        seen[v] = true;
        let mut out = Vec::new();
        while let Some(u) = queue.pop_front() {
            out.push(u);
            for &w in &self.adj[u] {
                if !seen[w] && allowed(w) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for v in self.vertices() {
            if !seen[v] {
                let comp = self.component_within(v, |_| true);
                for &u in &comp {
                    seen[u] = true;
                }
                out.push(comp);
            }
        }
        out
    }

    /// True for the empty graph as well.
    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.component_within(0, |_| true).len() == self.order()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|ns| ns.len() + 1 == n)
    }

    /// Connected, 2-regular and of odd order at least 3.
    pub fn is_odd_cycle(&self) -> bool {
        let n = self.order();
        n >= 3 && n % 2 == 1 && self.adj.iter().all(|ns| ns.len() == 2) && self.is_connected()
    }

    pub fn remove_vertex(&self, v: Vertex) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self
            .induced_subgraph(self.vertices().filter(|&u| u != v))?
            .graph)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut b = GraphBuilder::new(shift + other.order());
        for (u, v) in self.edges() {
            b.add_edge(u, v).expect("in range");
        }
        for (u, v) in other.edges() {
            b.add_edge(u + shift, v + shift).expect("in range");
        }
        b.build()
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut b = GraphBuilder::new(shift + other.order());
        for (u, v) in self.edges().chain(other.edges().map(|(u, v)| (u + shift, v + shift))) {
            b.add_edge(u, v).expect("in range");
        }
        for u in 0..shift {
            for v in 0..other.order() {
                b.add_edge(u, v + shift).expect("in range");
            }
        }
        b.build()
    }

    fn is_well_formed(&self) -> bool {
        self.adj.iter().enumerate().all(|(u, ns)| {
            ns.windows(2).all(|w| w[0] < w[1])
                && ns.iter().all(|&v| v != u && self.adj[v].binary_search(&u).is_ok())
        })
    }
}

/// An induced subgraph together with its id translation.
#[derive(Debug, Clone)]
pub struct Induced {
    pub graph: Graph,
    /// `old_ids[new]` is the id of `new` in the parent graph.
    pub old_ids: Vec<Vertex>,
    to_new: Vec<Option<Vertex>>,
}

impl Induced {
    pub fn new_id(&self, old: Vertex) -> Option<Vertex> {
        self.to_new.get(old).copied().flatten()
    }
}
