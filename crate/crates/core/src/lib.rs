//! Exact solvers for graph strength, domination, covering and independence
//! numbers, and a harness that audits stated relations between them over
//! exhaustive small-graph corpora.

pub mod claims;
pub mod corpus;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod strength;

pub use graph::{Family, Graph, GraphError, VertexSet};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
