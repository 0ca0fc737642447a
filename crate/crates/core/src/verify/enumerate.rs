use itertools::Itertools;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count [`enumerate_connected_graphs`] accepts by default.
pub const DEFAULT_MAX_VERTICES: usize = 7;

/// All vertex pairs `(u, v)`, `u < v`, in lexicographic order. Bit `i` of an
/// edge mask selects pair `i`.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// The graph on `n` vertices whose edges are the pairs selected by `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edge_list(n, &edges).expect("pairs are in range")
}

/// Every connected labeled graph on `n` vertices, once each, by increasing
/// edge mask.
#[derive(Clone, Debug)]
pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl ConnectedGraphs {
    /// Number of edge masks, `2^(n choose 2)`.
    pub fn mask_count(&self) -> u64 {
        1u64 << self.pairs.len()
    }

    /// Restricts the walk to masks in `start..end`, for sharding.
    pub fn range(mut self, start: u64, end: u64) -> Self {
        self.next = start;
        self.end = end.min(self.mask_count());
        self
    }

    fn connected(&self, mask: u64) -> bool {
        let mut adj = [0u16; 16];
        for (i, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let all = ((1u32 << self.n) - 1) as u16;
        let mut seen = 1u16;
        let mut frontier = 1u16;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == all
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            if self.connected(mask) {
                return Some(graph_from_mask(self.n, mask));
            }
        }
        None
    }
}

pub fn enumerate_connected_graphs(n: usize) -> Result<ConnectedGraphs> {
    enumerate_connected_graphs_up_to(n, DEFAULT_MAX_VERTICES)
}

/// As [`enumerate_connected_graphs`] with a custom vertex limit (at most 11,
/// so that edge masks fit in 64 bits).
pub fn enumerate_connected_graphs_up_to(n: usize, max: usize) -> Result<ConnectedGraphs> {
    if n > max || n > 11 {
        return Err(Error::Size(format!(
            "cannot enumerate graphs on {n} vertices (limit {})",
            max.min(11)
        )));
    }
    let pairs = pairs(n);
    let end = if n == 0 { 0 } else { 1u64 << pairs.len() };
    Ok(ConnectedGraphs {
        n,
        pairs,
        next: 0,
        end,
    })
}

/// Minimum upper-triangle adjacency encoding over all vertex permutations.
/// Equal codes exactly when the graphs are isomorphic; exponential in `n`.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical codes need n <= 11");
    let pairs = pairs(n);
    (0..n)
        .permutations(n)
        .map(|perm| {
            pairs
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| g.has_edge(perm[u], perm[v]))
                .fold(0u64, |code, (i, _)| code | 1 << i)
        })
        .min()
        .unwrap_or(0)
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, the first in mask order.
pub fn connected_graphs_up_to_isomorphism(n: usize) -> Result<Vec<Graph>> {
    let mut seen = HashSet::new();
    Ok(enumerate_connected_graphs(n)?
        .filter(|g| seen.insert(canonical_code(g)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_cases() {
        let one: Vec<_> = enumerate_connected_graphs(1).unwrap().collect();
        assert_eq!(one, vec![Graph::empty(1)]);
        let two: Vec<_> = enumerate_connected_graphs(2).unwrap().collect();
        assert_eq!(two, vec![Graph::complete(2)]);
        assert_eq!(enumerate_connected_graphs(0).unwrap().count(), 0);
    }

    #[test]
    fn three_vertices() {
        let three: Vec<_> = enumerate_connected_graphs(3).unwrap().collect();
        assert_eq!(three.len(), 4);
        assert_eq!(three.iter().filter(|g| g.edge_count() == 2).count(), 3);
        assert_eq!(connected_graphs_up_to_isomorphism(3).unwrap().len(), 2);
    }

    #[test]
    fn unlabeled_counts() {
        let counts: Vec<_> = (1..=5)
            .map(|n| connected_graphs_up_to_isomorphism(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn size_limits() {
        assert!(enumerate_connected_graphs(8).is_err());
        assert!(enumerate_connected_graphs_up_to(8, 8).is_ok());
        assert!(enumerate_connected_graphs_up_to(12, 20).is_err());
    }

    #[test]
    fn sharded_walk_covers_everything() {
        let all = enumerate_connected_graphs(5).unwrap();
        let total = all.mask_count();
        let sharded: usize = (0..4)
            .map(|i| {
                all.clone()
                    .range(i * total / 4, (i + 1) * total / 4)
                    .count()
            })
            .sum();
        assert_eq!(sharded, all.count());
    }
}
