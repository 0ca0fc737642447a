//! Batch front end for `hpart`: DIMACS graph input, partition documents,
//! report serialization, and the command dispatcher behind the `hpart`
//! binary.

pub mod dimacs;
pub mod document;
pub mod report;
pub mod run;

pub use dimacs::{parse_graph, write_graph, ParseError, ParsedGraph};
pub use document::{format_partition, Format, PartitionDocument};
pub use run::{run, Cli, Command, Output};
