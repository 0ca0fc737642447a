//! Independent checks: a partition validator, an exhaustive existence
//! oracle, enumeration of small connected graphs, and a checker for the four
//! height-function properties.

mod axioms;
mod enumerate;
mod oracle;
mod validate;

pub use axioms::{
    check_graph_properties, check_height_properties, check_height_properties_with, AxiomFailure,
    AxiomOptions, AxiomReport,
};
pub use enumerate::{
    canonical_code, connected_graphs_up_to_isomorphism, enumerate_connected_graphs,
    enumerate_connected_graphs_up_to, graph_from_mask, ConnectedGraphs, DEFAULT_MAX_VERTICES,
};
pub use oracle::{brute_force_exists, brute_force_exists_capped, DEFAULT_ASSIGNMENT_CAP};
pub use validate::{verify_partition, verify_parts, ValidationReport, Violation, ViolationKind};
