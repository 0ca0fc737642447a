//! Finite simple undirected graphs on dense vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Induced subgraphs are usually handled
//! implicitly as `(graph, vertex set)` pairs; [`Graph::induced_subgraph`]
//! materializes one with relabeled vertices when a standalone copy is needed.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Sorted, each pair `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    adjacency: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list, dropping duplicate edges.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![VertexSet::new(); n];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InputFormat(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InputFormat(format!("self-loop at vertex {u}")));
            }
            if adjacency[u].insert(v) {
                adjacency[v].insert(u);
                normalized.push((u.min(v), u.max(v)));
            }
        }
        normalized.sort_unstable();
        Ok(Self {
            n,
            edges: normalized,
            adjacency,
        })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            adjacency: vec![VertexSet::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_edge_list(n, &edges).expect("valid by construction")
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::from_edge_list(n, &edges).expect("cycle needs at least 3 vertices")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edge_list(n, &edges).expect("valid by construction")
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i + 5`.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Self::from_edge_list(10, &edges).expect("valid by construction")
    }

    /// Disjoint union, with `other`'s vertices shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Graph::from_edge_list(self.n + other.n, &edges).expect("valid by construction")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// `d_D(x) = |N(x) ∩ D|`. Whether `x` itself lies in `D` does not matter.
    #[inline]
    pub fn degree_in(&self, x: usize, d: &VertexSet) -> usize {
        self.adjacency[x].intersection_len(d)
    }

    /// `Δ(G)`, zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Maximum degree of `G[s]`.
    pub fn max_degree_in(&self, s: &VertexSet) -> usize {
        s.iter().map(|v| self.degree_in(v, s)).max().unwrap_or(0)
    }

    /// Number of edges of `G[s]`.
    pub fn edge_count_in(&self, s: &VertexSet) -> usize {
        s.iter().map(|v| self.degree_in(v, s)).sum::<usize>() / 2
    }

    fn check_members(&self, s: &VertexSet) -> Result<()> {
        match s.last() {
            Some(v) if v >= self.n => Err(Error::Contract(format!(
                "vertex {v} is not in a graph on {} vertices",
                self.n
            ))),
            _ => Ok(()),
        }
    }

    /// `G[s]`, relabeled to `0..|s|` in ascending order of original id.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Subgraph> {
        self.check_members(s)?;
        let labels = s.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|(u, v)| s.contains(*u) && s.contains(*v))
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Ok(Subgraph {
            graph: Graph::from_edge_list(labels.len(), &edges)?,
            labels,
        })
    }

    /// Vertices reachable from `start` inside `within` (`start` included).
    pub fn reach(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen.clone();
        while let Some(u) = frontier.pop_first() {
            let mut fresh = self.adjacency[u].intersection(within);
            fresh.difference_with(&seen);
            seen.union_with(&fresh);
            frontier.union_with(&fresh);
        }
        seen
    }

    /// Components of `G[s]` in original ids, ordered by smallest member.
    pub fn components(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut rest = s.clone();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reach(v, &rest);
            rest.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// `c(G[s])`.
    pub fn component_count(&self, s: &VertexSet) -> usize {
        self.components(s).len()
    }

    /// Whether `G[s]` is a nonempty connected graph.
    pub fn is_connected_set(&self, s: &VertexSet) -> bool {
        match s.first() {
            Some(v) => self.reach(v, s).len() == s.len(),
            None => false,
        }
    }

    /// Connectivity in the sense of the class of finite simple connected
    /// graphs: the graph on zero vertices is not connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_set(&self.vertices())
    }

    pub fn is_independent_set(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adjacency[v].intersects(s))
    }

    /// Whether `G[s]` is complete. Relies on `|E(G[s])| = |s|(|s|-1)/2`.
    pub fn is_complete_set(&self, s: &VertexSet) -> bool {
        let k = s.len();
        self.edge_count_in(s) == k * k.saturating_sub(1) / 2
    }
}

/// An induced subgraph with its vertices renumbered to `0..len`.
#[derive(Clone, Debug)]
pub struct Subgraph {
    graph: Graph,
    labels: Vec<usize>,
}

impl Subgraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Original id of subgraph vertex `i`.
    pub fn original(&self, i: usize) -> usize {
        self.labels[i]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Maps a set of subgraph vertices back to original ids.
    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|i| self.labels[i]).collect()
    }
}
