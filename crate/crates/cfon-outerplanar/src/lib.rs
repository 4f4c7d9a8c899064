//! Conflict-free open-neighborhood coloring of outerplanar graphs with at
//! most 4 colors, block by block and face by face.
//!
//! Every colored vertex v carries C(v) and a witness color U(v) that appears
//! exactly once around it. Faces are added as ears on an already colored
//! edge; new neighbors of a colored vertex never take its witness color.

mod blocks;
mod paint;

use std::collections::{BTreeSet, VecDeque};

use graph_core::{Coloring, Graph, GraphError};

pub use blocks::{
    block_decomposition, ear_decomposition, ear_path, edge_faces, inner_faces, outer_cycle, weak_dual_is_tree, BlockTree,
    Ear, EarDecomposition, OuterCycle,
};
pub use paint::{OpStep, PathCase};

use paint::{BlockCtx, Painter};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OuterplanarError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("not outerplanar: {0}")]
    NotOuterplanar(String),
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterplanarRun {
    pub coloring: Coloring,
    pub blocks: BlockTree,
    pub steps: Vec<OpStep>,
    /// Edges that fail the star condition once both ends are colored; each
    /// is a bridge or already has all its faces colored.
    pub exempt: Vec<(usize, usize)>,
    /// G is one block whose inner faces are all pentagons.
    pub pentagons_only: bool,
    pub bound: usize,
    pub colors_used: usize,
}

fn block_graph(g: &Graph, vs: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| vs.binary_search(&a).is_ok() && vs.binary_search(&b).is_ok())
        .collect();
    Graph::from_edges(g.n(), &edges).expect("edges of g")
}

/// Outer cycle and chords of every non-bridge block.
pub fn check_outerplanar(g: &Graph) -> Result<Vec<Option<OuterCycle>>, OuterplanarError> {
    let bt = block_decomposition(g);
    (0..bt.blocks.len())
        .map(|b| {
            if bt.is_bridge(b) {
                Ok(None)
            } else {
                outer_cycle(&block_graph(g, &bt.blocks[b])).map(Some)
            }
        })
        .collect()
}

pub fn is_outerplanar(g: &Graph) -> bool {
    check_outerplanar(g).is_ok()
}

pub fn color_outerplanar(g: &Graph) -> Result<OuterplanarRun, OuterplanarError> {
    g.require_no_isolated()?;
    g.require_connected()?;
    let bt = block_decomposition(g);
    let cycles = check_outerplanar(g)?;
    let mut painter = Painter::new(g);
    let mut pentagons_only = false;

    let root = bt.blocks_of(0).first().copied().unwrap_or(0);
    let mut seen = vec![false; bt.blocks.len()];
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(b) = queue.pop_front() {
        let vs = &bt.blocks[b];
        let colored: Vec<usize> = vs.iter().copied().filter(|&v| painter.c[v].is_some()).collect();
        let pre = match colored[..] {
            [] if b == root => None,
            [v] => Some(v),
            _ => return Err(OuterplanarError::Internal(format!("block {} reached with {} colored vertices", b + 1, colored.len()))),
        };
        match &cycles[b] {
            None => {
                match pre {
                    None => painter.root_bridge(vs[0], vs[1])?,
                    Some(v) => painter.bridge(v, if vs[0] == v { vs[1] } else { vs[0] })?,
                }
                painter.audit(None, true)?;
            }
            Some(oc) => {
                let faces = inner_faces(oc);
                let five = pre.is_none() && faces.iter().all(|f| f.len() == 5);
                let f0 = match pre {
                    Some(v) => faces.iter().position(|f| f.contains(&v)),
                    None if five => Some(0),
                    None => faces.iter().position(|f| f.len() != 5),
                }
                .ok_or_else(|| OuterplanarError::Internal("no starting face".into()))?;
                let ed = ear_decomposition(oc, f0);
                let mut ctx = BlockCtx { by_edge: edge_faces(&ed.faces), done: vec![false; ed.faces.len()], faces: ed.faces };
                match pre {
                    Some(v) => painter.one_precolored(&mut ctx, f0, v)?,
                    None if five => painter.five_first(&mut ctx, f0)?,
                    None => painter.fresh_face(&mut ctx, f0)?,
                }
                painter.audit(Some(&ctx), !five)?;
                for ear in &ed.ears {
                    if ctx.done[ear.face] {
                        continue;
                    }
                    let (a, b) = ear.base;
                    if five {
                        painter.five_ear(&mut ctx, ear.face, a, b)?;
                    } else {
                        painter.path(&mut ctx, ear.face, a, b)?;
                    }
                    painter.audit(Some(&ctx), !five)?;
                }
                if ctx.done.iter().any(|d| !d) {
                    return Err(OuterplanarError::Internal("a face was left uncolored".into()));
                }
                pentagons_only = five && bt.blocks.len() == 1;
            }
        }
        for &nb in &bt.adjacency[b] {
            if !seen[nb] {
                seen[nb] = true;
                queue.push_back(nb);
            }
        }
    }

    let mut color = Vec::with_capacity(g.n());
    let mut witness = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let (Some(c), Some(u)) = (painter.c[v], painter.u[v]) else {
            return Err(OuterplanarError::Internal(format!("vertex {} left uncolored", v + 1)));
        };
        if g.neighbors(v).iter().filter(|&&w| painter.c[w] == Some(u)).count() != 1 {
            return Err(OuterplanarError::Internal(format!("witness color of vertex {} is not unique", v + 1)));
        }
        color.push(c);
        witness.push(Some(u));
    }
    let coloring = Coloring::total(color).with_witness(witness);
    let bound = if pentagons_only { 3 } else { 4 };
    let colors_used = coloring.colors_used();
    if colors_used > bound {
        return Err(OuterplanarError::Internal(format!("{colors_used} colors exceed the bound {bound}")));
    }
    let exempt: BTreeSet<(usize, usize)> = painter.exempt;
    Ok(OuterplanarRun {
        coloring,
        blocks: bt,
        steps: painter.steps,
        exempt: exempt.into_iter().collect(),
        pentagons_only,
        bound,
        colors_used,
    })
}
