//! Text formats: graph6, edge lists and DOT.

mod dot;
mod edgelist;
mod graph6;

pub use dot::{to_dot, DotOptions};
pub use edgelist::{from_edge_list_text, to_edge_list_text};
pub use graph6::{from_graph6, to_graph6};
