//! Conflict-free open-neighborhood coloring from a feedback vertex set F,
//! using at most |F| + 2 colors.
//!
//! The forest G - F is colored with two tree colors; vertices of F take colors
//! named after their own index in F, and a short sequence of repair cases makes
//! sure every vertex of F and every singleton tree sees a unique color.

use std::collections::{BTreeMap, VecDeque};

use graph_core::{connected_components, Coloring, Graph, GraphError, VertexSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FvsError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("removing the given set leaves a cycle")]
    NotFvs,
    #[error("tree coloring needs at least two vertices")]
    SingletonTree,
    #[error("vertex {0} has no neighbor in the tree")]
    NoNeighborInTree(usize),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

/// A tree of G - F with its root, special vertex, parents and depths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    pub vertices: Vec<usize>,
    pub root: usize,
    pub special: Option<usize>,
    pub parent: BTreeMap<usize, usize>,
    pub depth: BTreeMap<usize, usize>,
}

impl RootedTree {
    /// Roots the tree spanned by `vertices` at `root`; the special vertex is the
    /// root's lowest-id tree neighbor.
    pub fn new(g: &Graph, vertices: &[usize], root: usize) -> Self {
        let mut inside = vec![false; g.n()];
        for &v in vertices {
            inside[v] = true;
        }
        let mut parent = BTreeMap::new();
        let mut depth = BTreeMap::from([(root, 0)]);
        let mut q = VecDeque::from([root]);
        while let Some(v) = q.pop_front() {
            for &w in g.neighbors(v) {
                if inside[w] && !depth.contains_key(&w) {
                    depth.insert(w, depth[&v] + 1);
                    parent.insert(w, v);
                    q.push_back(w);
                }
            }
        }
        let special = g.neighbors(root).iter().copied().find(|&w| inside[w]);
        let mut vertices = vertices.to_vec();
        vertices.sort_unstable();
        RootedTree { vertices, root, special, parent, depth }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.depth.contains_key(&v)
    }
}

/// Two-color tree coloring: root `a`, special vertex `b`, the root's other
/// children `a`, everyone else the opposite of its grandparent. Returns
/// `(vertex, color)` pairs in vertex order.
pub fn color_tree(t: &RootedTree, palette: (u32, u32)) -> Result<Vec<(usize, u32)>, FvsError> {
    if t.len() < 2 {
        return Err(FvsError::SingletonTree);
    }
    let (a, b) = palette;
    let mut color: BTreeMap<usize, u32> = BTreeMap::new();
    let mut order: Vec<usize> = t.vertices.clone();
    order.sort_by_key(|v| (t.depth[v], *v));
    for v in order {
        let c = if v == t.root {
            a
        } else if Some(v) == t.special {
            b
        } else if t.parent[&v] == t.root {
            a
        } else {
            let gp = t.parent[&t.parent[&v]];
            if color[&gp] == a {
                b
            } else {
                a
            }
        };
        color.insert(v, c);
    }
    Ok(color.into_iter().collect())
}

/// Witness vertex of each tree vertex under [`color_tree`]: the parent, and
/// the special vertex for the root.
pub fn tree_witness(t: &RootedTree, v: usize) -> usize {
    if v == t.root {
        t.special.unwrap()
    } else {
        t.parent[&v]
    }
}

/// Neighbor of `v` in `t` of maximum depth; ties avoid the special vertex,
/// then take the lowest id.
pub fn deepest_neighbor(g: &Graph, t: &RootedTree, v: usize) -> Result<usize, FvsError> {
    g.neighbors(v)
        .iter()
        .copied()
        .filter(|&w| t.contains(w))
        .max_by_key(|&w| (t.depth[&w], Some(w) != t.special, std::cmp::Reverse(w)))
        .ok_or(FvsError::NoNeighborInTree(v + 1))
}

/// Which repair step fired, for the audit log.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FvsStep {
    TreeOnly,
    SingleSingleton { w: usize },
    SingleDeep { tree: usize, deep: usize },
    SingleReroot { tree: usize, new_root: usize },
    SingleAllPairs { kept: usize },
    Singleton { w: usize, colored: Vec<usize> },
    SingletonRepair { w: usize, recolored: usize },
    SpecialShared { tree: usize, colored: Vec<usize> },
    Deep { v: usize, tree: usize, deep: usize },
    FreeColor { v: usize, tree: usize, color: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FvsRun {
    pub coloring: Coloring,
    pub bound: usize,
    pub colors_used: usize,
    pub steps: Vec<FvsStep>,
}

struct Forest {
    trees: Vec<RootedTree>,
    singletons: Vec<usize>,
}

fn forest(g: &Graph, f: &[usize]) -> Result<Forest, FvsError> {
    let mut in_f = vec![false; g.n()];
    for &v in f {
        in_f[v] = true;
    }
    let rest = g.without(f);
    if !rest.is_acyclic() {
        return Err(FvsError::NotFvs);
    }
    let mut trees = Vec::new();
    let mut singletons = Vec::new();
    for comp in connected_components(&rest) {
        let m = comp.members();
        if in_f[m[0]] {
            continue;
        }
        if m.len() == 1 {
            singletons.push(m[0]);
        } else {
            trees.push(RootedTree::new(g, m, m[0]));
        }
    }
    Ok(Forest { trees, singletons })
}

fn apply_tree(color: &mut [Option<u32>], t: &RootedTree, palette: (u32, u32)) -> Result<(), FvsError> {
    for (v, c) in color_tree(t, palette)? {
        color[v] = Some(c);
    }
    Ok(())
}

fn finish(g: &Graph, color: Vec<Option<u32>>, bound: usize, steps: Vec<FvsStep>) -> Result<FvsRun, FvsError> {
    if let Some(v) = color.iter().position(Option::is_none) {
        return Err(FvsError::Internal(format!("vertex {} left uncolored", v + 1)));
    }
    let coloring = Coloring::partial(color);
    let witness = unique_witness(g, &coloring);
    let coloring = coloring.with_witness(witness);
    Ok(FvsRun { colors_used: coloring.colors_used(), coloring, bound, steps })
}

/// Every colored vertex in `around` or next to it still sees some color
/// exactly once among its colored neighbors.
fn locally_ok(g: &Graph, color: &[Option<u32>], around: &[usize]) -> bool {
    let mut check: Vec<usize> = around.to_vec();
    for &x in around {
        check.extend_from_slice(g.neighbors(x));
    }
    check.into_iter().all(|x| {
        let mut count: BTreeMap<u32, usize> = BTreeMap::new();
        for &w in g.neighbors(x) {
            if let Some(c) = color[w] {
                *count.entry(c).or_default() += 1;
            }
        }
        color[x].is_none() || count.values().any(|&k| k == 1)
    })
}

/// Smallest color occurring exactly once in N(v), per vertex.
fn unique_witness(g: &Graph, c: &Coloring) -> Vec<Option<u32>> {
    (0..g.n())
        .map(|v| {
            let mut count: BTreeMap<u32, usize> = BTreeMap::new();
            for &w in g.neighbors(v) {
                if let Some(x) = c.get(w) {
                    *count.entry(x).or_default() += 1;
                }
            }
            count.into_iter().find(|&(_, k)| k == 1).map(|(x, _)| x)
        })
        .collect()
}

/// Three-color case of a single-vertex feedback vertex set `{v}`.
pub fn color_fvs1(g: &Graph, v: usize) -> Result<FvsRun, FvsError> {
    g.check_vertex(v)?;
    g.require_no_isolated()?;
    g.require_connected()?;
    let Forest { mut trees, singletons } = forest(g, &[v])?;
    let mut color = vec![None; g.n()];
    for t in &trees {
        apply_tree(&mut color, t, (2, 3))?;
    }
    for &w in &singletons {
        color[w] = Some(2);
    }
    color[v] = Some(1);
    let mut steps = Vec::new();
    if let Some(&w) = singletons.first() {
        color[w] = Some(1);
        steps.push(FvsStep::SingleSingleton { w });
        return finish(g, color, 3, steps);
    }
    let case2 = |t: &RootedTree| -> Option<usize> {
        let deep = deepest_neighbor(g, t, v).ok()?;
        (Some(deep) != t.special || !g.has_edge(t.root, v)).then_some(deep)
    };
    for (i, t) in trees.iter().enumerate() {
        if let Some(deep) = case2(t) {
            color[deep] = Some(1);
            steps.push(FvsStep::SingleDeep { tree: i, deep });
            return finish(g, color, 3, steps);
        }
    }
    // Every tree meets v exactly in its root and special vertex.
    if let Some(i) = trees.iter().position(|t| t.len() >= 3) {
        let t = &trees[i];
        let w = t.vertices.iter().copied().find(|&x| x != t.root && Some(x) != t.special).unwrap();
        let vertices = t.vertices.clone();
        trees[i] = RootedTree::new(g, &vertices, w);
        apply_tree(&mut color, &trees[i], (2, 3))?;
        steps.push(FvsStep::SingleReroot { tree: i, new_root: w });
        let deep = case2(&trees[i])
            .ok_or_else(|| FvsError::Internal("re-rooting did not move the deepest neighbor".into()))?;
        color[deep] = Some(1);
        steps.push(FvsStep::SingleDeep { tree: i, deep });
        return finish(g, color, 3, steps);
    }
    let kept = trees.first().ok_or_else(|| FvsError::Internal("no tree next to the feedback vertex".into()))?;
    for w in 0..g.n() {
        if w != v && !kept.contains(w) {
            color[w] = Some(2);
        }
    }
    steps.push(FvsStep::SingleAllPairs { kept: kept.root });
    finish(g, color, 3, steps)
}

/// Colors `g` with at most |F| + 2 colors. Vertex `F[i]` owns color `i + 1`.
pub fn color_by_fvs(g: &Graph, f: &VertexSet) -> Result<FvsRun, FvsError> {
    f.check_bounds(g.n())?;
    g.require_no_isolated()?;
    g.require_connected()?;
    let fv = f.members();
    match fv.len() {
        0 => {
            let Forest { trees, .. } = forest(g, &[])?;
            let t = trees.first().ok_or(FvsError::SingletonTree)?;
            let mut color = vec![None; g.n()];
            apply_tree(&mut color, t, (1, 2))?;
            return finish(g, color, 2, vec![FvsStep::TreeOnly]);
        }
        1 => return color_fvs1(g, fv[0]),
        _ => {}
    }
    let k = fv.len() as u32;
    let Forest { trees, singletons } = forest(g, fv)?;
    let mut index = vec![0u32; g.n()];
    for (i, &v) in fv.iter().enumerate() {
        index[v] = i as u32 + 1;
    }
    let in_f = |x: usize| index[x] > 0;
    let mut color: Vec<Option<u32>> = vec![None; g.n()];
    for t in &trees {
        apply_tree(&mut color, t, (k + 1, k + 2))?;
    }
    let mut steps = Vec::new();
    let mut free: u32 = 0;

    let y: Vec<usize> = fv.iter().copied().filter(|&v| g.neighbors(v).iter().any(|&w| in_f(w))).collect();
    for &v in &y {
        color[v] = Some(index[v]);
    }
    if let Some(&v) = y.first() {
        free = index[v];
    }
    let uncolored_f = |color: &[Option<u32>], x: usize| in_f(x) && color[x].is_none();

    // Singletons next to uncolored vertices of F.
    loop {
        let hit = singletons.iter().copied().find(|&w| {
            color[w].is_none() && g.neighbors(w).iter().any(|&x| uncolored_f(&color, x))
        });
        let Some(w) = hit else { break };
        let group: Vec<usize> = g.neighbors(w).iter().copied().filter(|&x| uncolored_f(&color, x)).collect();
        let i1 = index[group[0]];
        color[group[0]] = Some(i1);
        color[w] = Some(i1);
        if let Some(&second) = group.get(1) {
            let i2 = index[second];
            for &x in &group[1..] {
                color[x] = Some(i2);
            }
        }
        free = i1;
        steps.push(FvsStep::Singleton { w, colored: group });
    }
    // Uncolored singletons whose colored neighborhood has no unique color.
    for &w in &singletons {
        if color[w].is_some() {
            continue;
        }
        let mut count: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for &x in g.neighbors(w) {
            let c = color[x].ok_or_else(|| FvsError::Internal(format!("neighbor {} of singleton uncolored", x + 1)))?;
            count.entry(c).or_default().push(x);
        }
        if count.values().any(|xs| xs.len() == 1) {
            continue;
        }
        let present: Vec<u32> = count.keys().copied().collect();
        let (_, pair) = count.iter().next().unwrap();
        let (a, b) = (pair[0], pair[1]);
        let pick = if !present.contains(&index[a]) {
            a
        } else if !present.contains(&index[b]) {
            b
        } else {
            return Err(FvsError::Internal(format!("no recolorable neighbor for singleton {}", w + 1)));
        };
        color[pick] = Some(index[pick]);
        color[w] = Some(k + 1);
        free = index[pick];
        steps.push(FvsStep::SingletonRepair { w, recolored: pick });
    }
    for &w in &singletons {
        if color[w].is_none() {
            color[w] = Some(k + 1);
        }
    }
    // Special vertices shared by two or more uncolored vertices of F.
    loop {
        let hit = trees.iter().enumerate().find_map(|(ti, t)| {
            let s = t.special?;
            let group: Vec<usize> = g.neighbors(s).iter().copied().filter(|&x| uncolored_f(&color, x)).collect();
            (group.len() >= 2).then_some((ti, s, group))
        });
        let Some((ti, s, group)) = hit else { break };
        let (i1, i2) = (index[group[0]], index[group[1]]);
        color[s] = Some(i1);
        for &x in &group {
            color[x] = Some(i2);
        }
        free = i2;
        steps.push(FvsStep::SpecialShared { tree: ti, colored: group });
    }
    // Deepest-neighbor repair for the remaining uncolored vertices of F.
    loop {
        let mut hit = None;
        'search: for &v in fv {
            if color[v].is_some() {
                continue;
            }
            for (ti, t) in trees.iter().enumerate() {
                let Ok(deep) = deepest_neighbor(g, t, v) else { continue };
                if Some(deep) != t.special || !g.has_edge(t.root, v) {
                    hit = Some((v, ti, deep));
                    break 'search;
                }
            }
        }
        let Some((v, ti, deep)) = hit else { break };
        color[deep] = Some(index[v]);
        color[v] = Some(index[v]);
        free = index[v];
        steps.push(FvsStep::Deep { v, tree: ti, deep });
    }
    // What is left meets every adjacent tree exactly in its root and special vertex.
    for &v in fv {
        if color[v].is_some() {
            continue;
        }
        if free == 0 {
            return Err(FvsError::Graph(GraphError::Disconnected));
        }
        // The plain choice is the first tree and c'. That color can already
        // be the witness of a root or special vertex next to v, so every
        // (tree, color) pair is checked locally and the first safe one wins.
        let mut candidates: Vec<(usize, u32)> = Vec::new();
        let lean: Vec<usize> = (0..trees.len())
            .filter(|&ti| trees[ti].special.is_some_and(|s| g.has_edge(v, s)))
            .collect();
        if lean.is_empty() {
            return Err(FvsError::Internal(format!("vertex {} has no tree to lean on", v + 1)));
        }
        for &ti in &lean {
            candidates.push((ti, free));
        }
        for &ti in &lean {
            candidates.extend((1..=k + 2).filter(|&c| c != free).map(|c| (ti, c)));
        }
        let mut chosen = None;
        for (ti, c) in candidates {
            let s = trees[ti].special.unwrap();
            let old = color[s];
            color[s] = Some(index[v]);
            color[v] = Some(c);
            if locally_ok(g, &color, &[v, s]) {
                chosen = Some((ti, c));
                break;
            }
            color[s] = old;
            color[v] = None;
        }
        let (ti, free) =
            chosen.ok_or_else(|| FvsError::Internal(format!("no safe free color for vertex {}", v + 1)))?;
        steps.push(FvsStep::FreeColor { v, tree: ti, color: free });
    }
    finish(g, color, fv.len() + 2, steps)
}
