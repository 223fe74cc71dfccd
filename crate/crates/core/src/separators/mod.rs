//! Flows, vertex separators, important separators and Q-path packings.

mod flow;
mod gallai;
mod important;
mod paths;

use thiserror::Error;

pub use flow::{is_separator, max_vertex_flow, min_separator, Capacity, Flow, FlowValue, SeparatorQuery};
pub use gallai::{gallai_q_paths, QPaths};
pub use important::{enumerate_important_separators, is_important, ImportantSeparatorSet};
pub use paths::{max_terminals_on_path, path_through_forced_vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeparatorError {
    #[error("no finite separator exists")]
    NoFiniteSeparator,
    #[error("vertices {0} and {1} are in different components")]
    Disconnected(crate::graph::Vertex, crate::graph::Vertex),
    #[error("block {0:?} on the path holds two or more terminals")]
    BlockWithTwoTerminals(crate::graph::VertexSet),
}
