//! Maximal distance-3 sets, the V0/V1/V2 partition and the contracted graph G'.

use std::collections::BTreeMap;

use graph_core::{bfs_distances, Graph, GraphBuilder, VertexSet};

/// Greedy maximal distance-3 set grown from `start`. Candidates are scanned in
/// ascending id and the scan repeats until nothing changes.
pub fn maximal_distance3_set(g: &Graph, start: usize) -> VertexSet {
    let n = g.n();
    let mut s = vec![start];
    // distance from the current set, and whether some member is at exactly 3
    let mut near = bfs_distances(g, start);
    loop {
        let pick = (0..n).find(|&w| {
            near[w].is_some_and(|d| d >= 3)
                && s.iter().any(|&x| bfs_distances(g, x)[w] == Some(3))
        });
        let Some(w) = pick else { break };
        s.push(w);
        for (v, d) in bfs_distances(g, w).into_iter().enumerate() {
            if let Some(d) = d {
                near[v] = Some(near[v].map_or(d, |e| e.min(d)));
            }
        }
    }
    VertexSet::new(s)
}

/// Violations of the three defining clauses, empty when `s` is a maximal
/// distance-3 set of the connected graph `g`.
pub fn check_distance3(g: &Graph, s: &VertexSet) -> Vec<String> {
    let mut out = Vec::new();
    let dist: Vec<Vec<Option<usize>>> = s.members().iter().map(|&x| bfs_distances(g, x)).collect();
    for (i, &a) in s.members().iter().enumerate() {
        for &b in s.members() {
            if a != b && dist[i][b].is_some_and(|d| d < 3) {
                out.push(format!("members {} and {} closer than 3", a + 1, b + 1));
            }
        }
        if s.len() > 1 && !s.members().iter().any(|&b| dist[i][b] == Some(3)) {
            out.push(format!("member {} has no member at distance 3", a + 1));
        }
    }
    for v in 0..g.n() {
        if !s.contains(v) && !dist.iter().any(|d| d[v].is_some_and(|d| d < 3)) {
            out.push(format!("vertex {} is 3 or more away from every member", v + 1));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distance3Partition {
    pub v0: VertexSet,
    pub v1: VertexSet,
    pub v2: VertexSet,
    /// Chosen V1 neighbor for every vertex of V0 and V2.
    pub f: BTreeMap<usize, usize>,
}

impl Distance3Partition {
    /// V1 = N(V0), V2 the rest; f picks the lowest-id V1 neighbor.
    pub fn new(g: &Graph, v0: VertexSet) -> Self {
        let n = g.n();
        let mut level = vec![2u8; n];
        for &v in v0.members() {
            level[v] = 0;
        }
        for &v in v0.members() {
            for &w in g.neighbors(v) {
                if level[w] == 2 {
                    level[w] = 1;
                }
            }
        }
        let pick = |l: u8| -> VertexSet { (0..n).filter(|&v| level[v] == l).collect() };
        let (v1, v2) = (pick(1), pick(2));
        let mut f = BTreeMap::new();
        for v in (0..n).filter(|&v| level[v] != 1) {
            if let Some(&w) = g.neighbors(v).iter().find(|&&w| level[w] == 1) {
                f.insert(v, w);
            }
        }
        Distance3Partition { v0, v1, v2, f }
    }

    /// Checks the five partition properties and the choice of f.
    pub fn check(&self, g: &Graph) -> Vec<String> {
        let mut out = Vec::new();
        for &v in self.v0.members() {
            if g.neighbors(v).iter().any(|&w| self.v0.contains(w)) {
                out.push(format!("V0 vertex {} has a V0 neighbor", v + 1));
            }
            if !g.neighbors(v).iter().any(|&w| self.v1.contains(w)) {
                out.push(format!("V0 vertex {} has no V1 neighbor", v + 1));
            }
            if g.neighbors(v).iter().any(|&w| self.v2.contains(w)) {
                out.push(format!("V0 vertex {} has a V2 neighbor", v + 1));
            }
        }
        for &w in self.v1.members() {
            let k = g.neighbors(w).iter().filter(|&&x| self.v0.contains(x)).count();
            if k != 1 {
                out.push(format!("V1 vertex {} has {} V0 neighbors", w + 1, k));
            }
        }
        for &v in self.v2.members() {
            if !g.neighbors(v).iter().any(|&w| self.v1.contains(w)) {
                out.push(format!("V2 vertex {} has no V1 neighbor", v + 1));
            }
        }
        for v in self.v0.members().iter().chain(self.v2.members()) {
            match self.f.get(v) {
                Some(&w) if self.v1.contains(w) && g.has_edge(*v, w) => {}
                _ => out.push(format!("f({}) is not a V1 neighbor", v + 1)),
            }
        }
        out
    }
}

/// G' on V1, with `to_original[i]` the vertex of G behind vertex `i` of G'.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contracted {
    pub graph: Graph,
    pub to_original: Vec<usize>,
}

/// Drops the edges inside V2, then contracts every v in V0 and V2 into f(v).
pub fn build_contracted_graph(g: &Graph, p: &Distance3Partition) -> Contracted {
    let to_original = p.v1.members().to_vec();
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in to_original.iter().enumerate() {
        local[v] = i;
    }
    let mut b = GraphBuilder::new(to_original.len());
    for (u, v) in g.edges() {
        if p.v1.contains(u) && p.v1.contains(v) {
            b.add_edge(local[u], local[v]).expect("distinct endpoints");
        }
    }
    for (&v, &fv) in &p.f {
        for &w in g.neighbors(v) {
            if p.v1.contains(w) && w != fv {
                b.add_edge(local[fv], local[w]).expect("distinct endpoints");
            }
        }
    }
    Contracted { graph: b.build(), to_original }
}
