//! Partitioning the vertices of a graph into parts of bounded induced degree
//! whose components all have height zero.
//!
//! Given budgets `r_1, ..., r_k` with `r_1 + ... + r_k >= Δ(G) + 2 - k` and an
//! `r_i`-height function `h_i` for each part, [`partition_main`] produces a
//! partition `V_1, ..., V_k` such that every `G[V_i]` has maximum degree at
//! most `r_i` and every component `D` of `G[V_i]` has `h_i(D) = 0`.
//!
//! The search is a local descent on the lexicographic potential
//! `(f, c, h)` (see [`Potential`]). When the partition is degree-feasible but
//! still contains a component of positive height, critical vertices are
//! shuffled between parts until either the potential drops or a leftover
//! component is revisited, at which point the recorded history is rearranged
//! into a strictly better partition.
//!
//! ```
//! use hpart::{Graph, HeightFunction, Problem, partition_main, verify_partition};
//!
//! let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
//! let problem = Problem::new(
//!     c5,
//!     vec![2, 0],
//!     vec![HeightFunction::noncomplete_regular(2).unwrap(), HeightFunction::zero(0)],
//! )
//! .unwrap();
//! let partition = partition_main(&problem).unwrap();
//! assert!(verify_partition(&problem, &partition).is_ok());
//! ```

pub mod engine;
mod error;
pub mod graph;
pub mod heights;
pub mod verify;
mod vertex_set;

pub use engine::{
    degree_fix, find_targets, partition_lovasz, partition_main, potential, rearrange,
    resolve_bad_component, CommitKind, CommitRecord, MoveKind, MoveRecord, Outcome, Partition,
    Potential, Problem, ShuffleRecord, ShuffleState, Solver, Stats, Trace,
};
pub use error::{Error, Result};
pub use graph::{Graph, Subgraph};
pub use heights::{critical_vertices, height_of_graph, is_critical_pair, HeightFunction};
pub use verify::{
    brute_force_exists, check_height_properties, enumerate_connected_graphs, verify_partition,
    verify_parts, AxiomFailure, AxiomReport, ValidationReport, Violation, ViolationKind,
};
pub use vertex_set::VertexSet;
