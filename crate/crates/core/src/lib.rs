//! Algorithms for the multiway near-separator problem.
//!
//! Given an undirected graph G, a terminal set T and a budget k, find at most
//! k non-terminals whose deletion leaves no two terminals joined by two
//! internally vertex-disjoint paths.

pub mod blockcut;
pub mod blocker;
pub mod cli;
pub mod generate;
pub mod graph;
pub mod io;
pub mod mwns;
pub mod reducer;
pub mod separators;
pub mod solver;

pub use graph::{Graph, Vertex, VertexSet};
pub use mwns::{is_mwns, Instance, SolveResult};
