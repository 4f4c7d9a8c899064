//! Colorings from a cluster modulator X: G - X is a disjoint union of cliques.
//! Vertex `X[i]` owns color `i + 1`, d = |X|.

use std::collections::BTreeMap;

use decomposition::is_cluster_modulator;
use graph_core::{connected_components, Coloring, Graph, VertexSet};

use crate::{clique_colors, counts, witnesses, StructuralError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DcCase {
    /// X is empty and G is one clique.
    CliqueOnly,
    /// Step 2(a): singleton clique `w` with uncolored neighbors in X.
    SingletonGroup { w: usize, colored: Vec<usize> },
    /// Step 2(b): `w` already sees a unique color.
    SingletonSeesUnique { w: usize },
    /// Step 2(b): `recolored` switched from d+1 to its own color.
    SingletonRepair { w: usize, recolored: usize },
    /// Step 3: clique vertex `w` takes the color of modulator vertex `v`.
    Inject { v: usize, w: usize },
    /// Closed variant, case 1: clique vertex `u` next to two or more of X - Y.
    ClosedShared { u: usize, group: Vec<usize> },
    /// Closed variant, case 2: an edge inside X.
    ClosedEdge { vi: usize, vj: usize },
    /// Closed variant, case 3.
    ClosedThree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DcRun {
    pub coloring: Coloring,
    pub bound: usize,
    pub colors_used: usize,
    pub steps: Vec<DcCase>,
}

struct Setup {
    index: Vec<u32>,
    cliques: Vec<Vec<usize>>,
}

fn setup(g: &Graph, x: &VertexSet) -> Result<Setup, StructuralError> {
    x.check_bounds(g.n())?;
    g.require_no_isolated()?;
    g.require_connected()?;
    if !is_cluster_modulator(g, x.members()) {
        return Err(StructuralError::BadModulator);
    }
    let mut index = vec![0u32; g.n()];
    for (i, &v) in x.members().iter().enumerate() {
        index[v] = i as u32 + 1;
    }
    let cliques = connected_components(&g.without(x.members()))
        .into_iter()
        .map(|c| c.into_vec())
        .filter(|c| index[c[0]] == 0)
        .collect();
    Ok(Setup { index, cliques })
}

fn done(g: &Graph, color: Vec<Option<u32>>, bound: usize, steps: Vec<DcCase>, closed: bool) -> Result<DcRun, StructuralError> {
    if let Some(v) = color.iter().position(Option::is_none) {
        return Err(StructuralError::Internal(format!("vertex {} left uncolored", v + 1)));
    }
    let w = witnesses(g, &color, closed);
    let coloring = Coloring::partial(color).with_witness(w);
    Ok(DcRun { colors_used: coloring.colors_used(), coloring, bound, steps })
}

/// Open variant, at most |X| + 3 colors.
pub fn cfon_by_dc(g: &Graph, x: &VertexSet) -> Result<DcRun, StructuralError> {
    let Setup { index, cliques } = setup(g, x)?;
    let xv = x.members();
    if xv.is_empty() {
        let color = clique_colors(g.n()).into_iter().map(Some).collect();
        return done(g, color, 3, vec![DcCase::CliqueOnly], false);
    }
    let d = xv.len() as u32;
    let in_x = |v: usize| index[v] > 0;
    let mut color: Vec<Option<u32>> = vec![None; g.n()];
    let mut steps = Vec::new();
    // reserved witness color -> number of vertices that carry it
    let mut reserved: BTreeMap<u32, usize> = BTreeMap::new();
    let mut reserve = |c: u32, k: usize| -> Result<(), StructuralError> {
        match reserved.insert(c, k) {
            None => Ok(()),
            Some(_) => Err(StructuralError::Internal(format!("witness color {c} reserved twice"))),
        }
    };

    for &v in xv {
        if g.neighbors(v).iter().any(|&w| in_x(w)) {
            color[v] = Some(index[v]);
        }
    }
    let singletons: Vec<usize> = cliques.iter().filter(|c| c.len() == 1).map(|c| c[0]).collect();
    for &w in &singletons {
        let group: Vec<usize> = g.neighbors(w).iter().copied().filter(|&v| color[v].is_none()).collect();
        if !group.is_empty() {
            let i1 = index[group[0]];
            color[group[0]] = Some(i1);
            color[w] = Some(i1);
            reserve(i1, 2)?;
            for &v in &group[1..] {
                color[v] = Some(d + 1);
            }
            steps.push(DcCase::SingletonGroup { w, colored: group });
            continue;
        }
        let around = counts(g, &color, w, false);
        if around.values().any(|&k| k == 1) {
            color[w] = Some(d + 1);
            steps.push(DcCase::SingletonSeesUnique { w });
            continue;
        }
        let pick = g
            .neighbors(w)
            .iter()
            .copied()
            .find(|&v| color[v] == Some(d + 1))
            .ok_or_else(|| StructuralError::Internal(format!("singleton {} has no repeated d+1", w + 1)))?;
        color[pick] = Some(index[pick]);
        reserve(index[pick], 1)?;
        color[w] = Some(d + 1);
        steps.push(DcCase::SingletonRepair { w, recolored: pick });
    }
    for &v in xv {
        if color[v].is_some() || counts(g, &color, v, false).values().any(|&k| k == 1) {
            continue;
        }
        let w = g
            .neighbors(v)
            .iter()
            .copied()
            .find(|&w| color[w].is_none())
            .ok_or_else(|| StructuralError::Internal(format!("no free neighbor for {}", v + 1)))?;
        color[w] = Some(index[v]);
        reserve(index[v], 1)?;
        steps.push(DcCase::Inject { v, w });
    }
    for &v in xv {
        if color[v].is_none() {
            color[v] = Some(d + 1);
        }
    }
    for k in cliques.iter().filter(|c| c.len() >= 2) {
        let mut fresh = [d + 2, d + 3].into_iter();
        let already = k.iter().filter(|&&v| color[v].is_some()).count();
        let mut need = 2usize.saturating_sub(already);
        for &v in k {
            if color[v].is_none() {
                color[v] = Some(if need > 0 {
                    need -= 1;
                    fresh.next().unwrap()
                } else {
                    d + 1
                });
            }
        }
    }
    for (&c, &k) in &reserved {
        let used = color.iter().filter(|&&x| x == Some(c)).count();
        if used != k {
            return Err(StructuralError::Internal(format!("witness color {c} was reused")));
        }
    }
    done(g, color, d as usize + 3, steps, false)
}

/// Closed variant, at most max(3, |X| + 1) colors.
pub fn cfcn_by_dc(g: &Graph, x: &VertexSet) -> Result<DcRun, StructuralError> {
    let Setup { index, cliques } = setup(g, x)?;
    let xv = x.members();
    let d = xv.len() as u32;
    let in_x = |v: usize| index[v] > 0;
    let in_y = |v: usize| in_x(v) && g.neighbors(v).iter().any(|&w| in_x(w));
    let bound = 3.max(d as usize + 1);
    let mut color: Vec<Option<u32>> = vec![None; g.n()];

    let mut case1 = None;
    let mut clique_vertices: Vec<usize> = cliques.iter().flatten().copied().collect();
    clique_vertices.sort_unstable();
    for &u in &clique_vertices {
        let group: Vec<usize> = g.neighbors(u).iter().copied().filter(|&v| in_x(v) && !in_y(v)).collect();
        if group.len() >= 2 {
            case1 = Some((u, group));
            break;
        }
    }
    if let Some((u, group)) = case1 {
        let (i1, i2) = (index[group[0]], index[group[1]]);
        color[u] = Some(i1);
        for &v in &group {
            color[v] = Some(d + 1);
        }
        for &v in xv {
            if color[v].is_none() {
                color[v] = Some(index[v]);
            }
        }
        for k in &cliques {
            let has = k.iter().any(|&v| color[v].is_some());
            for (pos, &v) in k.iter().enumerate() {
                if color[v].is_none() {
                    color[v] = Some(if !has && pos == 0 { i2 } else { d + 1 });
                }
            }
        }
        return done(g, color, bound, vec![DcCase::ClosedShared { u, group }], true);
    }
    let edge = xv.iter().find_map(|&vi| g.neighbors(vi).iter().copied().find(|&w| in_x(w)).map(|vj| (vi, vj)));
    if let Some((vi, vj)) = edge {
        color[vi] = Some(index[vi]);
        color[vj] = Some(d + 1);
        for &v in xv {
            if color[v].is_none() {
                color[v] = Some(index[v]);
            }
        }
        for k in &cliques {
            color[k[0]] = Some(index[vj]);
            for &v in &k[1..] {
                color[v] = Some(d + 1);
            }
        }
        return done(g, color, bound, vec![DcCase::ClosedEdge { vi, vj }], true);
    }
    for k in &cliques {
        color[k[0]] = Some(1);
        for &v in &k[1..] {
            color[v] = Some(2);
        }
    }
    for &v in xv {
        color[v] = Some(3);
    }
    done(g, color, bound, vec![DcCase::ClosedThree], true)
}
