//! Balanced vertex separators on sparse graphs.
//!
//! * [`graph`], [`generate`], [`catalog`]: the graph type, random and exhaustive
//!   generators, and an isomorphism-class catalog of small connected graphs.
//! * [`separator`]: partitions `(I, V1, V2)`, boundary statistics, niceness, and the
//!   two balance conditions.
//! * [`gadget`]: the concentric-cycle gadget and the local-replacement reduction to
//!   max-degree-3 graphs, with an optional completion to a 3-regular graph.
//! * [`solver`]: exact minimum balanced separators, a decision wrapper, certificate
//!   checking, and a brute-force oracle for small graphs.
//! * [`harness`]: an audit of the balance-equivalence argument on cubic graphs.

pub mod alpha;
pub mod catalog;
pub mod error;
pub mod format;
pub mod gadget;
pub mod generate;
pub mod graph;
pub mod harness;
pub mod separator;
pub mod solver;

pub use alpha::Alpha;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use separator::{SeparatorPartition, Side};
pub use solver::{Problem, SolverConfig};
