//! Path decompositions (validation, nice and semi-nice forms, exact small
//! pathwidth) and exact structural certificates.

pub mod certs;
pub mod path;
pub mod seminice;

pub use certs::{
    compute_cluster_modulator_exact, compute_fvs_exact, compute_type_partition, is_cluster_modulator,
    is_fvs, StructuralCertificate, TypePartition,
};
pub use path::{
    make_nice, parse_path_decomposition, pathwidth_exact_small, validate_path_decomposition,
    PathDecomposition, Violation,
};
pub use seminice::{
    make_semi_nice, parse_semi_nice, validate_semi_nice, BagTag, SemiNicePathDecomposition, TaggedBag,
};

use graph_core::GraphError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid path decomposition: {0:?}")]
    Invalid(Vec<Violation>),
    #[error("not a nice path decomposition: {0}")]
    NotNice(String),
    #[error("graph has {n} vertices, exact search cap is {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("internal error: {0}")]
    Internal(String),
}

/// Optimal semi-nice decomposition for a small graph.
pub fn semi_nice_exact(g: &graph_core::Graph, n_cap: usize) -> Result<SemiNicePathDecomposition, DecompError> {
    let pd = pathwidth_exact_small(g, n_cap)?;
    let nice = make_nice(g, &pd)?;
    make_semi_nice(g, &nice)
}
