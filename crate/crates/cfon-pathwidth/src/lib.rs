//! Conflict-free open-neighborhood coloring along a semi-nice path
//! decomposition, using at most floor(5(w+1)/3) colors for width w.
//!
//! Every vertex gets a color `C(v)` and a witness color `U(v)` when it is
//! introduced. Colors inside a bag stay distinct, and a vertex introduced next
//! to `x` never takes color `U(x)`, so witnesses survive to the end.

use std::collections::{BTreeMap, BTreeSet};

use decomposition::{validate_semi_nice, BagTag, SemiNicePathDecomposition};
use graph_core::{Coloring, Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathwidthError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid semi-nice decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("vertex {0} has no neighbor in the previous bag")]
    NoNeighborInBag(usize),
    #[error("special bag must introduce two distinct vertices")]
    BadSpecialPair,
    #[error("vertex {0} in the bag is uncolored")]
    Uncolored(usize),
    #[error("invariant broken: {0}")]
    Invariant(String),
}

/// Partial `C` and `U` maps during the sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepState {
    pub c: Vec<Option<u32>>,
    pub u: Vec<Option<u32>>,
}

impl SweepState {
    pub fn new(n: usize) -> Self {
        SweepState { c: vec![None; n], u: vec![None; n] }
    }

    fn cu(&self, x: usize) -> Result<(u32, u32), PathwidthError> {
        match (self.c[x], self.u[x]) {
            (Some(c), Some(u)) => Ok((c, u)),
            _ => Err(PathwidthError::Uncolored(x + 1)),
        }
    }
}

/// Free colors of a bag split by how many bag vertices use them as witness.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeColorPartition {
    pub f1: BTreeSet<u32>,
    pub f_gt1: BTreeSet<u32>,
}

impl FreeColorPartition {
    pub fn all(&self) -> BTreeSet<u32> {
        self.f1.union(&self.f_gt1).copied().collect()
    }
}

pub fn free_colors(bag: &[usize], state: &SweepState) -> Result<FreeColorPartition, PathwidthError> {
    let mut colors = BTreeSet::new();
    let mut witness_count: BTreeMap<u32, usize> = BTreeMap::new();
    for &x in bag {
        let (c, u) = state.cu(x)?;
        colors.insert(c);
        *witness_count.entry(u).or_default() += 1;
    }
    let mut out = FreeColorPartition::default();
    for (u, k) in witness_count {
        if colors.contains(&u) {
            continue;
        }
        if k == 1 {
            out.f1.insert(u);
        } else {
            out.f_gt1.insert(u);
        }
    }
    Ok(out)
}

/// Rule 1 over the previous bag `prev`. `extra_forbidden` holds colors that
/// must be avoided in addition to the neighbors' witness colors.
fn rule1(
    g: &Graph,
    v: usize,
    prev: &[usize],
    state: &SweepState,
    extra_forbidden: &[u32],
) -> Result<u32, PathwidthError> {
    let free = free_colors(prev, state)?;
    let mut forbidden: BTreeSet<u32> = extra_forbidden.iter().copied().collect();
    for &x in prev {
        if g.has_edge(v, x) {
            forbidden.insert(state.cu(x)?.1);
        }
    }
    let f1: Vec<u32> = free.f1.iter().copied().filter(|c| !forbidden.contains(c)).collect();
    if !f1.is_empty() {
        let mut best = (usize::MAX, 0u32);
        for &c in &f1 {
            let w = *prev.iter().find(|&&w| state.u[w] == Some(c)).unwrap();
            let cw = state.c[w].unwrap();
            let key = prev.iter().filter(|&&x| state.u[x] == Some(cw)).count();
            if key < best.0 {
                best = (key, c);
            }
        }
        return Ok(best.1);
    }
    if let Some(&c) = free.f_gt1.iter().find(|c| !forbidden.contains(c)) {
        return Ok(c);
    }
    let mut used: BTreeSet<u32> = forbidden;
    for &x in prev {
        let (c, u) = state.cu(x)?;
        used.insert(c);
        used.insert(u);
    }
    Ok((1..).find(|c| !used.contains(c)).unwrap())
}

/// Rule 2: the witness color of `v` is the color of a neighbor in `prev`,
/// preferring needy neighbors whose witness color is least shared.
fn rule2(g: &Graph, v: usize, prev: &[usize], state: &SweepState) -> Result<u32, PathwidthError> {
    let free = free_colors(prev, state)?.all();
    let nbrs: Vec<usize> = prev.iter().copied().filter(|&x| g.has_edge(v, x)).collect();
    if nbrs.is_empty() {
        return Err(PathwidthError::NoNeighborInBag(v + 1));
    }
    let mut best: Option<(usize, usize)> = None;
    for &y in &nbrs {
        let uy = state.cu(y)?.1;
        if !free.contains(&uy) {
            continue;
        }
        let key = prev.iter().filter(|&&x| state.u[x] == Some(uy)).count();
        if best.map_or(true, |(k, _)| key < k) {
            best = Some((key, y));
        }
    }
    let y = best.map(|(_, y)| y).unwrap_or(nbrs[0]);
    Ok(state.c[y].unwrap())
}

/// Colors a vertex introduced alone after bag `prev`.
pub fn assign_intro_one(
    g: &Graph,
    v: usize,
    prev: &[usize],
    state: &mut SweepState,
) -> Result<(), PathwidthError> {
    if !prev.iter().any(|&x| g.has_edge(v, x)) {
        return Err(PathwidthError::NoNeighborInBag(v + 1));
    }
    let c = rule1(g, v, prev, state, &[])?;
    let u = rule2(g, v, prev, state)?;
    state.c[v] = Some(c);
    state.u[v] = Some(u);
    Ok(())
}

/// Colors a special pair introduced together after bag `prev`. The second
/// vertex also avoids the first one's color, keeping colors in the bag distinct.
pub fn assign_intro_special(
    g: &Graph,
    v: usize,
    v_hat: usize,
    prev: &[usize],
    state: &mut SweepState,
) -> Result<(), PathwidthError> {
    if v == v_hat {
        return Err(PathwidthError::BadSpecialPair);
    }
    if !g.has_edge(v, v_hat) || prev.iter().any(|&x| g.has_edge(v, x) || g.has_edge(v_hat, x)) {
        return Err(PathwidthError::InvalidDecomposition(format!(
            "special pair ({}, {}) is not mutually isolated in its bag",
            v + 1,
            v_hat + 1
        )));
    }
    let cv = rule1(g, v, prev, state, &[])?;
    let cw = rule1(g, v_hat, prev, state, &[cv])?;
    state.c[v] = Some(cv);
    state.c[v_hat] = Some(cw);
    state.u[v] = Some(cw);
    state.u[v_hat] = Some(cv);
    Ok(())
}

/// Size of the largest subset whose C and U values are all distinct.
/// Returns `None` for bags above 20 vertices.
pub fn max_expensive_subset(pairs: &[(u32, u32)]) -> Option<usize> {
    fn rec(pairs: &[(u32, u32)], i: usize, used: &mut BTreeSet<u32>, size: usize, best: &mut usize) {
        if size + (pairs.len() - i) <= *best {
            return;
        }
        if i == pairs.len() {
            *best = size;
            return;
        }
        let (c, u) = pairs[i];
        if c != u && !used.contains(&c) && !used.contains(&u) {
            used.insert(c);
            used.insert(u);
            rec(pairs, i + 1, used, size + 1, best);
            used.remove(&c);
            used.remove(&u);
        }
        rec(pairs, i + 1, used, size, best);
    }
    if pairs.len() > 20 {
        return None;
    }
    let mut best = 0;
    rec(pairs, 0, &mut BTreeSet::new(), 0, &mut best);
    Some(best)
}

/// Result of the expensive-subset audit over a whole run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpensiveAudit {
    /// Largest expensive subset seen in any bag.
    pub k_star: usize,
    pub max_bag: usize,
    /// Bags skipped because they exceed the exhaustive-search limit.
    pub skipped: usize,
    /// max_bag >= ceil(3 k* / 2)
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathwidthRun {
    pub coloring: Coloring,
    pub width: usize,
    pub bound: usize,
    pub colors_used: usize,
    pub audit: ExpensiveAudit,
}

pub fn bound_for_width(width: usize) -> usize {
    5 * (width + 1) / 3
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SweepOptions {
    /// After every bag, check that the processed part is conflict-free and
    /// that colors in the bag are distinct.
    pub check_each_step: bool,
}

pub fn color_by_pathwidth(g: &Graph, snd: &SemiNicePathDecomposition) -> Result<PathwidthRun, PathwidthError> {
    color_by_pathwidth_with(g, snd, SweepOptions::default())
}

pub fn color_by_pathwidth_with(
    g: &Graph,
    snd: &SemiNicePathDecomposition,
    opts: SweepOptions,
) -> Result<PathwidthRun, PathwidthError> {
    g.require_no_isolated()?;
    g.require_connected()?;
    let problems = validate_semi_nice(g, snd);
    if let Some(p) = problems.first() {
        return Err(PathwidthError::InvalidDecomposition(p.clone()));
    }
    let n = g.n();
    let mut state = SweepState::new(n);
    let mut k_star = 0;
    let mut skipped = 0;
    let mut seen = vec![false; n];
    for i in 1..snd.bags.len() {
        let prev = &snd.bags[i - 1].vertices;
        match snd.bags[i].tag {
            BagTag::Introduce(v) => {
                assign_intro_one(g, v, prev, &mut state)?;
                seen[v] = true;
            }
            BagTag::Special(v, w) => {
                assign_intro_special(g, v, w, prev, &mut state)?;
                seen[v] = true;
                seen[w] = true;
            }
            BagTag::Forget(_) | BagTag::Empty => {}
        }
        let bag = &snd.bags[i].vertices;
        let pairs: Vec<(u32, u32)> = bag.iter().map(|&x| state.cu(x)).collect::<Result<_, _>>()?;
        match max_expensive_subset(&pairs) {
            Some(k) => k_star = k_star.max(k),
            None => skipped += 1,
        }
        if opts.check_each_step {
            check_step(g, bag, &state, &seen)?;
        }
    }
    let colors: Vec<u32> = state.c.iter().map(|c| c.unwrap()).collect();
    let coloring = Coloring::total(colors).with_witness(state.u.clone());
    let width = snd.width();
    let max_bag = snd.bags.iter().map(|b| b.vertices.len()).max().unwrap_or(0);
    let audit = ExpensiveAudit { k_star, max_bag, skipped, holds: 2 * max_bag >= 3 * k_star };
    Ok(PathwidthRun {
        colors_used: coloring.colors_used(),
        coloring,
        width,
        bound: bound_for_width(width),
        audit,
    })
}

/// Bag colors distinct; every processed vertex whose neighbors are all
/// processed sees its witness color exactly once; no processed vertex sees its
/// witness color twice.
fn check_step(g: &Graph, bag: &[usize], state: &SweepState, seen: &[bool]) -> Result<(), PathwidthError> {
    let mut colors = BTreeSet::new();
    for &x in bag {
        if !colors.insert(state.c[x]) {
            return Err(PathwidthError::Invariant(format!("color repeated in bag containing {}", x + 1)));
        }
    }
    for v in (0..g.n()).filter(|&v| seen[v]) {
        let u = state.u[v];
        let hits = g.neighbors(v).iter().filter(|&&w| seen[w] && state.c[w] == u).count();
        if hits != 1 {
            return Err(PathwidthError::Invariant(format!(
                "vertex {} sees its witness color {} times",
                v + 1,
                hits
            )));
        }
    }
    Ok(())
}
