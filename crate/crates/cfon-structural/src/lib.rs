//! Colorings lifted from neighborhood-diversity type graphs and from
//! distance-to-cluster modulators, in both open and closed variants.

pub mod dc;
pub mod nd;

pub use dc::{cfcn_by_dc, cfon_by_dc, DcCase, DcRun};
pub use nd::{cfcn_by_nd, cfcn_by_nd_with, cfon_by_nd, cfon_by_nd_with, BadFix, LiftedColoring};

use std::collections::BTreeMap;

use graph_core::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructuralError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] verify_exact::VerifyError),
    #[error("removing the modulator does not leave disjoint cliques")]
    BadModulator,
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

/// Color counts over N(v), or N[v] when `closed`.
pub(crate) fn counts(g: &Graph, color: &[Option<u32>], v: usize, closed: bool) -> BTreeMap<u32, usize> {
    let mut out = BTreeMap::new();
    let own = closed.then_some(v);
    for &w in g.neighbors(v).iter().chain(own.iter()) {
        if let Some(c) = color[w] {
            *out.entry(c).or_default() += 1;
        }
    }
    out
}

/// Smallest unique color around each vertex.
pub(crate) fn witnesses(g: &Graph, color: &[Option<u32>], closed: bool) -> Vec<Option<u32>> {
    (0..g.n())
        .map(|v| counts(g, color, v, closed).into_iter().find(|&(_, k)| k == 1).map(|(c, _)| c))
        .collect()
}

/// Colors a clique directly: 1, 2, then 3 for everyone else.
pub(crate) fn clique_colors(n: usize) -> Vec<u32> {
    (0..n).map(|i| (i as u32 + 1).min(3)).collect()
}
