//! Instance generators. Every output is connected, and seeded generators are
//! deterministic in their seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;
use crate::graph::{Graph, GraphBuilder, VertexSet};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Certificate planted by a structured generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Planted {
    /// Removing these vertices leaves disjoint cliques.
    Modulator(VertexSet),
    /// Vertex classes of equal neighborhood type, each flagged clique (`true`) or independent.
    Partition(Vec<(VertexSet, bool)>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Star { leaves: usize },
    RandomTree { n: usize },
    RandomMaximalOuterplanar { n: usize },
    RandomClusterPlusModulator { cliques: Vec<usize>, d: usize },
    RandomBoundedNd { types: usize, max_class: usize },
    SubdividedClique { n: usize },
    RandomConnected { n: usize, p: f64 },
    RandomPlanar { n: usize },
}

pub fn generate_family(family: &Family, seed: u64) -> Result<(Graph, Option<Planted>), GraphError> {
    Ok(match family {
        Family::Path { n } => (path(*n)?, None),
        Family::Cycle { n } => (cycle(*n)?, None),
        Family::Star { leaves } => (star(*leaves)?, None),
        Family::RandomTree { n } => (random_tree(*n, seed)?, None),
        Family::RandomMaximalOuterplanar { n } => (random_maximal_outerplanar(*n, seed)?, None),
        Family::RandomClusterPlusModulator { cliques, d } => {
            let (g, x) = random_cluster_plus_modulator(cliques, *d, seed)?;
            (g, Some(Planted::Modulator(x)))
        }
        Family::RandomBoundedNd { types, max_class } => {
            let (g, p) = random_bounded_nd(*types, *max_class, seed)?;
            (g, Some(Planted::Partition(p)))
        }
        Family::SubdividedClique { n } => (subdivided_clique(*n)?, None),
        Family::RandomConnected { n, p } => (random_connected(*n, *p, seed)?, None),
        Family::RandomPlanar { n } => (random_planar(*n, seed)?, None),
    })
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::Infeasible("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::Infeasible("cycle needs n >= 3".into()));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Center is vertex 0.
pub fn star(leaves: usize) -> Result<Graph, GraphError> {
    if leaves == 0 {
        return Err(GraphError::Infeasible("star needs at least one leaf".into()));
    }
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &edges)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::Infeasible("complete graph needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a == 0 || b == 0 {
        return Err(GraphError::Infeasible("both sides must be nonempty".into()));
    }
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::from_edges(a + b, &edges)
}

/// Tree decoded from a Prüfer sequence (entries `< n`).
pub fn tree_from_pruefer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).expect("Prüfer decoding yields a simple tree")
}

/// Uniform labelled tree on `n` vertices.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, GraphError> {
    match n {
        0 => Err(GraphError::Infeasible("tree needs n >= 1".into())),
        1 => Ok(Graph::empty(1)),
        2 => Graph::from_edges(2, &[(0, 1)]),
        _ => {
            let mut r = rng(seed);
            let seq: Vec<usize> = (0..n - 2).map(|_| r.gen_range(0..n)).collect();
            Ok(tree_from_pruefer(&seq))
        }
    }
}

/// Random triangulation of a convex polygon, with vertex labels shuffled.
pub fn random_maximal_outerplanar(n: usize, seed: u64) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::Infeasible("maximal outerplanar graph needs n >= 3".into()));
    }
    let mut r = rng(seed);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    // Split polygon chains [i..=j] by a random apex until only triangles remain.
    let mut stack = vec![(0usize, n - 1)];
    while let Some((i, j)) = stack.pop() {
        if j - i < 2 {
            continue;
        }
        let k = r.gen_range(i + 1..j);
        if k - i >= 2 {
            edges.push((i, k));
        }
        if j - k >= 2 {
            edges.push((k, j));
        }
        stack.push((i, k));
        stack.push((k, j));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut r);
    let edges: Vec<_> = edges.into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(n, &edges)
}

/// Disjoint cliques of the given sizes plus a modulator of `d` vertices joined to
/// them at random. The modulator occupies the last `d` ids.
pub fn random_cluster_plus_modulator(
    cliques: &[usize],
    d: usize,
    seed: u64,
) -> Result<(Graph, VertexSet), GraphError> {
    if cliques.is_empty() || cliques.contains(&0) {
        return Err(GraphError::Infeasible("clique sizes must be positive".into()));
    }
    if d == 0 && (cliques.len() > 1 || cliques[0] < 2) {
        return Err(GraphError::Infeasible("without a modulator there must be one clique of size >= 2".into()));
    }
    let mut r = rng(seed);
    let c: usize = cliques.iter().sum();
    let n = c + d;
    let mut b = GraphBuilder::new(n);
    let mut start = 0;
    let mut members = Vec::new();
    for &size in cliques {
        let ids: Vec<usize> = (start..start + size).collect();
        for (i, &u) in ids.iter().enumerate() {
            for &v in &ids[i + 1..] {
                b.add_edge(u, v)?;
            }
        }
        members.push(ids);
        start += size;
    }
    let xs: Vec<usize> = (c..n).collect();
    for (i, &x) in xs.iter().enumerate() {
        for &y in &xs[i + 1..] {
            if r.gen_bool(0.3) {
                b.add_edge(x, y)?;
            }
        }
        for v in 0..c {
            if r.gen_bool(0.25) {
                b.add_edge(x, v)?;
            }
        }
    }
    if d > 0 {
        for ids in &members {
            let v = ids[r.gen_range(0..ids.len())];
            let x = xs[r.gen_range(0..d)];
            b.add_edge(x, v)?;
        }
    }
    let g = connect_through(b, &xs, &mut r)?;
    Ok((g, VertexSet::new(xs)))
}

/// Adds edges between components, always with one endpoint in `hubs`, until
/// the graph is connected. Keeps a cluster modulator valid.
fn connect_through(b: GraphBuilder, hubs: &[usize], r: &mut ChaCha8Rng) -> Result<Graph, GraphError> {
    let mut g = b.clone().build();
    let mut b = b;
    loop {
        let comps = crate::graph::connected_components(&g);
        if comps.len() <= 1 {
            return Ok(g);
        }
        let a = &comps[0];
        let other = &comps[1];
        let hub_a = a.members().iter().copied().find(|v| hubs.contains(v));
        let hub_b = other.members().iter().copied().find(|v| hubs.contains(v));
        let (x, v) = match (hub_a, hub_b) {
            (Some(x), _) => (x, other.members()[r.gen_range(0..other.len())]),
            (None, Some(x)) => (x, a.members()[r.gen_range(0..a.len())]),
            (None, None) => {
                return Err(GraphError::Infeasible("component without a modulator vertex".into()))
            }
        };
        b.add_edge(x, v)?;
        g = b.clone().build();
    }
}

/// Random connected type graph on `types` classes, each expanded into a clique
/// or independent set of size `1..=max_class`.
pub fn random_bounded_nd(
    types: usize,
    max_class: usize,
    seed: u64,
) -> Result<(Graph, Vec<(VertexSet, bool)>), GraphError> {
    if types < 2 || max_class == 0 {
        return Err(GraphError::Infeasible("need at least two types and positive class size".into()));
    }
    let mut r = rng(seed);
    let h = random_connected(types, 0.35, r.gen())?;
    let mut classes = Vec::new();
    let mut next = 0;
    for _ in 0..types {
        let size = r.gen_range(1..=max_class);
        let clique = size > 1 && r.gen_bool(0.5);
        classes.push(((next..next + size).collect::<Vec<_>>(), clique));
        next += size;
    }
    let mut b = GraphBuilder::new(next);
    for (ids, clique) in &classes {
        if *clique {
            for (i, &u) in ids.iter().enumerate() {
                for &v in &ids[i + 1..] {
                    b.add_edge(u, v)?;
                }
            }
        }
    }
    for (i, j) in h.edges() {
        for &u in &classes[i].0 {
            for &v in &classes[j].0 {
                b.add_edge(u, v)?;
            }
        }
    }
    let classes = classes.into_iter().map(|(ids, c)| (VertexSet::new(ids), c)).collect();
    Ok((b.build(), classes))
}

/// K*_n: the complete graph with every edge subdivided once. Original vertices
/// are `0..n`.
pub fn subdivided_clique(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::Infeasible("subdivided clique needs n >= 3".into()));
    }
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let s = b.add_vertex();
            b.add_edge(u, s)?;
            b.add_edge(s, v)?;
        }
    }
    Ok(b.build())
}

/// K4 with every edge subdivided and a pendant vertex on each original vertex.
pub fn subdivided_k4_with_pendants() -> Graph {
    let mut b = GraphBuilder::new(4);
    for u in 0..4 {
        for v in u + 1..4 {
            let s = b.add_vertex();
            b.add_edge(u, s).unwrap();
            b.add_edge(s, v).unwrap();
        }
    }
    for u in 0..4 {
        let p = b.add_vertex();
        b.add_edge(u, p).unwrap();
    }
    b.build()
}

/// Erdős–Rényi graph made connected by joining consecutive components.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if n == 0 || !(0.0..=1.0).contains(&p) {
        return Err(GraphError::Infeasible("need n >= 1 and p in [0, 1]".into()));
    }
    let mut r = rng(seed);
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                b.add_edge(u, v)?;
            }
        }
    }
    let g = b.clone().build();
    let comps = crate::graph::connected_components(&g);
    for pair in comps.windows(2) {
        let u = pair[0].members()[r.gen_range(0..pair[0].len())];
        let v = pair[1].members()[r.gen_range(0..pair[1].len())];
        b.add_edge(u, v)?;
    }
    Ok(b.build())
}

/// Random planar graph: a stacked triangulation with random edge flips, then
/// random edge deletions that keep it connected.
pub fn random_planar(n: usize, seed: u64) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::Infeasible("planar generator needs n >= 3".into()));
    }
    let mut r = rng(seed);
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    for v in 3..n {
        let i = r.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        faces.push([a, b, v]);
        faces.push([b, c, v]);
        faces.push([c, a, v]);
    }
    for _ in 0..n {
        flip_random_edge(&mut faces, &mut r);
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for f in &faces {
        for k in 0..3 {
            let (u, v) = (f[k], f[(k + 1) % 3]);
            edges.push((u.min(v), u.max(v)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    edges.shuffle(&mut r);
    let target = edges.len() - r.gen_range(0..=edges.len() / 3);
    let mut keep = edges.clone();
    let mut i = 0;
    while keep.len() > target && i < keep.len() {
        let mut trial = keep.clone();
        trial.remove(i);
        let g = Graph::from_edges(n, &trial)?;
        if g.is_connected() {
            keep = trial;
        } else {
            i += 1;
        }
    }
    Graph::from_edges(n, &keep)
}

/// Flips the shared edge of two adjacent triangles when it keeps the graph simple.
fn flip_random_edge(faces: &mut [[usize; 3]], r: &mut ChaCha8Rng) {
    let i = r.gen_range(0..faces.len());
    let k = r.gen_range(0..3);
    let (a, b) = (faces[i][k], faces[i][(k + 1) % 3]);
    let c = faces[i][(k + 2) % 3];
    // the other face traverses the edge as (b, a)
    let Some((j, kj)) = faces.iter().enumerate().find_map(|(j, f)| {
        (j != i).then(|| (0..3).find(|&t| f[t] == b && f[(t + 1) % 3] == a).map(|t| (j, t))).flatten()
    }) else {
        return;
    };
    let d = faces[j][(kj + 2) % 3];
    if c == d {
        return;
    }
    let exists = faces.iter().any(|f| (0..3).any(|t| {
        let (x, y) = (f[t], f[(t + 1) % 3]);
        (x == c && y == d) || (x == d && y == c)
    }));
    if exists {
        return;
    }
    faces[i] = [a, d, c];
    faces[j] = [b, c, d];
}

/// Chain of `k` pentagons where consecutive pentagons share an edge (`shared`)
/// or a single vertex.
pub fn pentagon_chain(k: usize, share_edge: bool) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(GraphError::Infeasible("need at least one pentagon".into()));
    }
    let mut b = GraphBuilder::new(5);
    for i in 0..5 {
        b.add_edge(i, (i + 1) % 5)?;
    }
    let mut last = [0usize, 1, 2, 3, 4];
    for _ in 1..k {
        let mut cyc = Vec::new();
        if share_edge {
            // attach on the edge opposite to the previous attachment
            let (u, v) = (last[2], last[3]);
            cyc.push(v);
            cyc.push(u);
            for _ in 0..3 {
                cyc.push(b.add_vertex());
            }
        } else {
            cyc.push(last[3]);
            for _ in 0..4 {
                cyc.push(b.add_vertex());
            }
        }
        for i in 0..5 {
            let (x, y) = (cyc[i], cyc[(i + 1) % 5]);
            if !(share_edge && i == 0) {
                b.add_edge(x, y)?;
            }
        }
        last = [cyc[0], cyc[1], cyc[2], cyc[3], cyc[4]];
    }
    Ok(b.build())
}

/// Chord sets of every triangulation of the convex polygon `0..n`.
pub fn polygon_triangulations(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(i: usize, j: usize, memo: &mut std::collections::HashMap<(usize, usize), Vec<Vec<(usize, usize)>>>) -> Vec<Vec<(usize, usize)>> {
        if j - i < 2 {
            return vec![Vec::new()];
        }
        if let Some(v) = memo.get(&(i, j)) {
            return v.clone();
        }
        let mut out = Vec::new();
        for k in i + 1..j {
            let left = rec(i, k, memo);
            let right = rec(k, j, memo);
            for l in &left {
                for r in &right {
                    let mut t = l.clone();
                    t.extend_from_slice(r);
                    if k - i >= 2 {
                        t.push((i, k));
                    }
                    if j - k >= 2 {
                        t.push((k, j));
                    }
                    out.push(t);
                }
            }
        }
        memo.insert((i, j), out.clone());
        out
    }
    if n < 3 {
        return Vec::new();
    }
    let mut memo = std::collections::HashMap::new();
    let mut all = rec(0, n - 1, &mut memo);
    for t in &mut all {
        t.sort_unstable();
    }
    all
}
