//! Graph representation, parsing, traversal and instance generators.

pub mod coloring;
pub mod error;
pub mod generate;
pub mod graph;

pub use coloring::{parse_coloring, Coloring};
pub use error::GraphError;
pub use graph::{
    bfs_distance, bfs_distances, connected_components, parse_edge_list, parse_vertex_list, Graph,
    GraphBuilder, VertexSet,
};
