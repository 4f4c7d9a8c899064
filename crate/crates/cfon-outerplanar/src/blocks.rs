//! Blocks, outer cycles, inner faces and ear orders of outerplanar graphs.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use graph_core::{Graph, VertexSet};

use crate::OuterplanarError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockTree {
    /// Sorted vertex lists; bridges are two-vertex blocks.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: VertexSet,
    /// Blocks sharing a cut vertex.
    pub adjacency: Vec<Vec<usize>>,
}

impl BlockTree {
    pub fn is_bridge(&self, b: usize) -> bool {
        self.blocks[b].len() == 2
    }

    /// Blocks containing `v`, ascending.
    pub fn blocks_of(&self, v: usize) -> Vec<usize> {
        (0..self.blocks.len()).filter(|&b| self.blocks[b].binary_search(&v).is_ok()).collect()
    }
}

/// Biconnected components by lowpoints (iterative DFS).
pub fn block_decomposition(g: &Graph) -> BlockTree {
    const NONE: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![NONE; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut estack: Vec<(usize, usize)> = Vec::new();
    let mut found: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if disc[s] != NONE {
            continue;
        }
        disc[s] = time;
        low[s] = time;
        time += 1;
        let mut stack: Vec<(usize, usize, usize)> = vec![(s, NONE, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, p) = (top.0, top.1);
            if top.2 < g.neighbors(v).len() {
                let w = g.neighbors(v)[top.2];
                top.2 += 1;
                if disc[w] == NONE {
                    estack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != p && disc[w] < disc[v] {
                    estack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if let Some(&(u, _, _)) = stack.last() {
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    let mut vs = BTreeSet::new();
                    while let Some((a, b)) = estack.pop() {
                        vs.insert(a);
                        vs.insert(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    found.push(vs.into_iter().collect());
                }
            }
        }
    }
    found.sort();
    let mut count = vec![0usize; n];
    for b in &found {
        for &v in b {
            count[v] += 1;
        }
    }
    let cut_vertices: VertexSet = (0..n).filter(|&v| count[v] > 1).collect();
    let adjacency = (0..found.len())
        .map(|i| {
            (0..found.len())
                .filter(|&j| j != i && found[i].iter().any(|v| found[j].binary_search(v).is_ok()))
                .collect()
        })
        .collect();
    BlockTree { blocks: found, cut_vertices, adjacency }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterCycle {
    /// Hamiltonian cycle, starting at the lowest vertex, second entry the
    /// smaller of its two cycle neighbors.
    pub cycle: Vec<usize>,
    pub chords: Vec<(usize, usize)>,
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn not_outerplanar(msg: impl Into<String>) -> OuterplanarError {
    OuterplanarError::NotOuterplanar(msg.into())
}

/// Outer face of a 2-connected outerplanar graph, found by shortcutting
/// degree-2 vertices down to a triangle and re-inserting them.
///
/// Only vertices with at least one edge take part, so this also works on a
/// block embedded in a larger vertex range.
pub fn outer_cycle(g: &Graph) -> Result<OuterCycle, OuterplanarError> {
    let verts: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    let n = verts.len();
    if n < 3 {
        return Err(not_outerplanar("a block needs three vertices to have a cycle"));
    }
    if g.m() > 2 * n - 3 {
        return Err(not_outerplanar(format!("{} edges exceed 2n-3 = {}", g.m(), 2 * n - 3)));
    }
    let mut adj: BTreeMap<usize, BTreeSet<usize>> =
        verts.iter().map(|&v| (v, g.neighbors(v).iter().copied().collect())).collect();
    let mut removed = Vec::new();
    while adj.len() > 3 {
        let v = adj
            .iter()
            .find(|(_, nb)| nb.len() == 2)
            .map(|(&v, _)| v)
            .ok_or_else(|| not_outerplanar("no degree-2 vertex left to shortcut"))?;
        let nb: Vec<usize> = adj.remove(&v).unwrap().into_iter().collect();
        let (u, w) = (nb[0], nb[1]);
        for (x, y) in [(u, w), (w, u)] {
            let s = adj.get_mut(&x).unwrap();
            s.remove(&v);
            s.insert(y);
        }
        removed.push((v, u, w));
    }
    let mut cycle: Vec<usize> = adj.keys().copied().collect();
    if adj.values().any(|s| s.len() != 2) {
        return Err(not_outerplanar("shortcutting did not end in a triangle"));
    }
    while let Some((v, u, w)) = removed.pop() {
        let k = cycle.len();
        let iu = cycle.iter().position(|&x| x == u).unwrap();
        if cycle[(iu + 1) % k] == w {
            cycle.insert(iu + 1, v);
        } else if cycle[(iu + k - 1) % k] == w {
            cycle.insert(iu, v);
        } else {
            return Err(not_outerplanar(format!("vertex {} cannot be put back on the outer cycle", v + 1)));
        }
    }
    let k = cycle.len();
    let start = cycle.iter().enumerate().min_by_key(|&(_, &v)| v).unwrap().0;
    cycle.rotate_left(start);
    if cycle[k - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    let on_cycle: BTreeSet<(usize, usize)> = (0..k).map(|i| key(cycle[i], cycle[(i + 1) % k])).collect();
    for &(a, b) in &on_cycle {
        if !g.has_edge(a, b) {
            return Err(not_outerplanar("recovered cycle uses a non-edge"));
        }
    }
    let chords: Vec<(usize, usize)> = g.edges().into_iter().filter(|e| !on_cycle.contains(e)).collect();
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    for (i, &(a, b)) in chords.iter().enumerate() {
        let (p, q) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
        for &(c, d) in &chords[i + 1..] {
            let inside = |x: usize| p < pos[x] && pos[x] < q;
            let shared = [c, d].iter().any(|&x| x == a || x == b);
            if !shared && inside(c) != inside(d) {
                return Err(not_outerplanar(format!("chords {}-{} and {}-{} cross", a + 1, b + 1, c + 1, d + 1)));
            }
        }
    }
    Ok(OuterCycle { cycle, chords })
}

/// Inner faces, each listed in outer-cycle order from its first cycle
/// position, sorted by their sorted vertex lists.
pub fn inner_faces(oc: &OuterCycle) -> Vec<Vec<usize>> {
    let k = oc.cycle.len();
    let mut pos = BTreeMap::new();
    for (i, &v) in oc.cycle.iter().enumerate() {
        pos.insert(v, i);
    }
    let chords: Vec<(usize, usize)> = oc.chords.iter().map(|&(a, b)| key(pos[&a], pos[&b])).collect();
    let mut work = vec![(0..k).collect::<Vec<usize>>()];
    let mut faces = Vec::new();
    while let Some(poly) = work.pop() {
        let len = poly.len();
        let split = chords.iter().find_map(|&(p, q)| {
            let ip = poly.binary_search(&p).ok()?;
            let iq = poly.binary_search(&q).ok()?;
            (iq - ip != 1 && iq - ip != len - 1).then_some((ip, iq))
        });
        match split {
            Some((ip, iq)) => {
                let mut other: Vec<usize> = poly[..=ip].to_vec();
                other.extend_from_slice(&poly[iq..]);
                work.push(poly[ip..=iq].to_vec());
                work.push(other);
            }
            None => faces.push(poly.iter().map(|&i| oc.cycle[i]).collect::<Vec<usize>>()),
        }
    }
    faces.sort_by_key(|f| {
        let mut s = f.clone();
        s.sort_unstable();
        s
    });
    faces
}

/// Face edges mapped to the faces that contain them.
pub fn edge_faces(faces: &[Vec<usize>]) -> BTreeMap<(usize, usize), Vec<usize>> {
    let mut map: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, f) in faces.iter().enumerate() {
        for j in 0..f.len() {
            map.entry(key(f[j], f[(j + 1) % f.len()])).or_default().push(i);
        }
    }
    map
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ear {
    pub face: usize,
    /// The already present edge, first entry followed by `path[0]`.
    pub base: (usize, usize),
    pub path: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EarDecomposition {
    pub faces: Vec<Vec<usize>>,
    pub f0: usize,
    /// Root-to-leaf BFS order over the weak dual.
    pub ears: Vec<Ear>,
}

/// Splits face `f` at its edge {p, q}: returns (a, interior, b) where the
/// outer-cycle order runs b, a, interior.
pub fn ear_path(f: &[usize], p: usize, q: usize) -> (usize, Vec<usize>, usize) {
    let k = f.len();
    let ip = f.iter().position(|&x| x == p).expect("endpoint on face");
    let (a, b, ia) = if f[(ip + 1) % k] == q {
        (q, p, (ip + 1) % k)
    } else {
        (p, q, ip)
    };
    let interior = (1..k - 1).map(|j| f[(ia + j) % k]).collect();
    (a, interior, b)
}

pub fn ear_decomposition(oc: &OuterCycle, f0: usize) -> EarDecomposition {
    let faces = inner_faces(oc);
    let by_edge = edge_faces(&faces);
    let mut seen = vec![false; faces.len()];
    seen[f0] = true;
    let mut queue = VecDeque::from([f0]);
    let mut ears = Vec::new();
    while let Some(f) = queue.pop_front() {
        let k = faces[f].len();
        for j in 0..k {
            let (x, y) = (faces[f][j], faces[f][(j + 1) % k]);
            for &h in &by_edge[&key(x, y)] {
                if !seen[h] {
                    seen[h] = true;
                    let (a, path, b) = ear_path(&faces[h], x, y);
                    ears.push(Ear { face: h, base: (a, b), path });
                    queue.push_back(h);
                }
            }
        }
    }
    EarDecomposition { faces, f0, ears }
}

/// Whether the inner faces of `oc` and their shared chords form a tree.
pub fn weak_dual_is_tree(oc: &OuterCycle) -> bool {
    let faces = inner_faces(oc);
    let by_edge = edge_faces(&faces);
    let shared = by_edge.values().filter(|v| v.len() == 2).count();
    if by_edge.values().any(|v| v.len() > 2) || shared != faces.len() - 1 {
        return false;
    }
    ear_decomposition(oc, 0).ears.len() == faces.len() - 1
}
