//! Exact Ehrenfeucht–Fraïssé game solving and first-order distinguishability
//! for small graphs, together with the graph families, pattern-graph
//! analysis and reproducible experiments built on top of it.

pub mod bits;
pub mod ef;
pub mod error;
pub mod experiments;
pub mod families;
pub mod graph;
pub mod logic;
pub mod pattern;

pub use error::{Error, Result};
pub use graph::Graph;
