//! Partial conflict-free open-neighborhood colorings of planar graphs (at most
//! 5 colors) and outerplanar graphs (at most 4 colors).
//!
//! A maximal distance-3 set V0 gets color 1, its neighborhood V1 is properly
//! colored through the contracted graph G', and everything else stays
//! uncolored.

pub mod distance3;
pub mod proper;

pub use distance3::{
    build_contracted_graph, check_distance3, maximal_distance3_set, Contracted, Distance3Partition,
};
pub use proper::{is_proper, proper_color_planar5, proper_coloring, ProperOutcome, DEFAULT_BUDGET};

use graph_core::{Coloring, Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlanarError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("no proper {k}-coloring of the contracted graph: {reason}")]
    ProperColoring { k: u32, reason: String },
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialRun {
    pub coloring: Coloring,
    pub partition: Distance3Partition,
    pub contracted: Contracted,
    /// The exact search ran out of budget and the Kempe 5-coloring was used.
    pub fallback_used: bool,
    pub bound: usize,
    pub colors_used: usize,
    /// Search nodes spent by the exact proper coloring.
    pub nodes: u64,
}

impl PartialRun {
    /// The distance-3 set is a single vertex because nothing lies 3 away.
    pub fn singleton_set(&self) -> bool {
        self.partition.v0.len() == 1
    }
}

fn prepare(g: &Graph) -> Result<(Distance3Partition, Contracted), PlanarError> {
    g.require_no_isolated()?;
    g.require_connected()?;
    let v0 = maximal_distance3_set(g, 0);
    let p = Distance3Partition::new(g, v0);
    if let Some(e) = p.check(g).into_iter().next() {
        return Err(PlanarError::Internal(e));
    }
    let c = build_contracted_graph(g, &p);
    Ok((p, c))
}

fn lift(g: &Graph, p: Distance3Partition, c: Contracted, proper: &[u32], fallback: bool, bound: usize, nodes: u64) -> PartialRun {
    let mut colors = vec![None; g.n()];
    for &v in p.v0.members() {
        colors[v] = Some(1);
    }
    for (i, &v) in c.to_original.iter().enumerate() {
        colors[v] = Some(proper[i] + 2);
    }
    // f(v) carries the unique color of every v in V0 and V2; V1 sees color 1
    let mut witness = vec![Some(1); g.n()];
    for (&v, &w) in &p.f {
        witness[v] = colors[w];
    }
    let coloring = Coloring::partial(colors).with_witness(witness);
    PartialRun {
        colors_used: coloring.colors_used(),
        coloring,
        partition: p,
        contracted: c,
        fallback_used: fallback,
        bound,
        nodes,
    }
}

/// At most 5 colors when the exact 4-coloring of G' succeeds within `budget`,
/// otherwise at most 6 through the Kempe 5-coloring.
pub fn partial_cfon_planar_with(g: &Graph, budget: u64) -> Result<PartialRun, PlanarError> {
    let (p, c) = prepare(g)?;
    let (outcome, nodes) = proper_coloring(&c.graph, 4, budget);
    match outcome {
        ProperOutcome::Colored(col) => Ok(lift(g, p, c, &col, false, 5, nodes)),
        ProperOutcome::Infeasible | ProperOutcome::BudgetExhausted => {
            let col = proper_color_planar5(&c.graph).map_err(|reason| PlanarError::ProperColoring { k: 5, reason })?;
            Ok(lift(g, p, c, &col, true, 6, nodes))
        }
    }
}

pub fn partial_cfon_planar(g: &Graph) -> Result<PartialRun, PlanarError> {
    partial_cfon_planar_with(g, DEFAULT_BUDGET)
}

/// At most 4 colors through a proper 3-coloring of G'.
pub fn partial_cfon_outerplanar(g: &Graph) -> Result<PartialRun, PlanarError> {
    let (p, c) = prepare(g)?;
    let (outcome, nodes) = proper_coloring(&c.graph, 3, DEFAULT_BUDGET);
    match outcome {
        ProperOutcome::Colored(col) => Ok(lift(g, p, c, &col, false, 4, nodes)),
        ProperOutcome::Infeasible => {
            Err(PlanarError::ProperColoring { k: 3, reason: "the contracted graph is not 3-colorable".into() })
        }
        ProperOutcome::BudgetExhausted => {
            Err(PlanarError::ProperColoring { k: 3, reason: "search budget exhausted".into() })
        }
    }
}
