use graph_core::{Graph, VertexSet};

/// Certificate for one of the structural parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructuralCertificate {
    Fvs(VertexSet),
    ClusterModulator(VertexSet),
    TypePartition(TypePartition),
}

impl StructuralCertificate {
    pub fn check(&self, g: &Graph) -> bool {
        match self {
            StructuralCertificate::Fvs(s) => is_fvs(g, s.members()),
            StructuralCertificate::ClusterModulator(x) => is_cluster_modulator(g, x.members()),
            StructuralCertificate::TypePartition(p) => p.check(g),
        }
    }
}

pub fn is_fvs(g: &Graph, s: &[usize]) -> bool {
    let rest = g.without(s);
    // removed vertices are isolated in `rest` and do not affect acyclicity
    rest.is_acyclic()
}

pub fn is_cluster_modulator(g: &Graph, x: &[usize]) -> bool {
    let mut alive = vec![true; g.n()];
    for &v in x {
        alive[v] = false;
    }
    find_p3(g, &alive).is_none()
}

/// Smallest feedback vertex set of size at most `k_max`, or `None`.
pub fn compute_fvs_exact(g: &Graph, k_max: usize) -> Option<VertexSet> {
    let alive = vec![true; g.n()];
    for k in 0..=k_max.min(g.n()) {
        let mut picked = Vec::new();
        if fvs_branch(g, alive.clone(), k, &mut picked) {
            return Some(VertexSet::new(picked));
        }
    }
    None
}

fn fvs_branch(g: &Graph, mut alive: Vec<bool>, k: usize, picked: &mut Vec<usize>) -> bool {
    // Vertices of degree <= 1 lie on no cycle.
    loop {
        let mut changed = false;
        for v in 0..g.n() {
            if alive[v] && g.neighbors(v).iter().filter(|&&w| alive[w]).count() <= 1 {
                alive[v] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let Some(cycle) = shortest_cycle(g, &alive) else {
        return true;
    };
    if k == 0 {
        return false;
    }
    for v in cycle {
        let mut next = alive.clone();
        next[v] = false;
        picked.push(v);
        if fvs_branch(g, next, k - 1, picked) {
            return true;
        }
        picked.pop();
    }
    false
}

/// Vertices of a shortest cycle among alive vertices, found by BFS from each vertex.
fn shortest_cycle(g: &Graph, alive: &[bool]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for s in (0..n).filter(|&v| alive[v]) {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        'bfs: while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !alive[w] || w == parent[v] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else {
                    let len = dist[v] + dist[w] + 1;
                    if best.as_ref().map_or(true, |b| len < b.len()) {
                        let mut a = vec![v];
                        let mut b = vec![w];
                        while a.last() != b.last() {
                            let (x, y) = (*a.last().unwrap(), *b.last().unwrap());
                            if dist[x] >= dist[y] {
                                a.push(parent[x]);
                            } else {
                                b.push(parent[y]);
                            }
                        }
                        b.pop();
                        a.extend(b.into_iter().rev());
                        best = Some(a);
                    }
                    break 'bfs;
                }
            }
        }
    }
    best
}

/// Smallest set whose removal leaves disjoint cliques, of size at most `d_max`.
pub fn compute_cluster_modulator_exact(g: &Graph, d_max: usize) -> Option<VertexSet> {
    for k in 0..=d_max.min(g.n()) {
        let mut alive = vec![true; g.n()];
        let mut picked = Vec::new();
        if cluster_branch(g, &mut alive, k, &mut picked) {
            return Some(VertexSet::new(picked));
        }
    }
    None
}

fn cluster_branch(g: &Graph, alive: &mut [bool], k: usize, picked: &mut Vec<usize>) -> bool {
    let Some(p3) = find_p3(g, alive) else {
        return true;
    };
    if k == 0 {
        return false;
    }
    for v in p3 {
        alive[v] = false;
        picked.push(v);
        if cluster_branch(g, alive, k - 1, picked) {
            return true;
        }
        picked.pop();
        alive[v] = true;
    }
    false
}

/// Induced path u - v - w among alive vertices, lowest center first.
fn find_p3(g: &Graph, alive: &[bool]) -> Option<[usize; 3]> {
    for v in (0..g.n()).filter(|&v| alive[v]) {
        let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if !g.has_edge(u, w) {
                    return Some([u, v, w]);
                }
            }
        }
    }
    None
}

/// Twin-class partition with its quotient (type) graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypePartition {
    /// Classes sorted by smallest member.
    pub classes: Vec<VertexSet>,
    /// `true` for classes of size >= 2 that form a clique. Singletons are `false`.
    pub is_clique: Vec<bool>,
    pub class_of: Vec<usize>,
    pub type_graph: Graph,
}

impl TypePartition {
    /// Number of non-singleton clique classes.
    pub fn cl(&self) -> usize {
        self.is_clique.iter().filter(|&&c| c).count()
    }

    /// Number of non-singleton independent classes.
    pub fn ind(&self) -> usize {
        self.classes.iter().zip(&self.is_clique).filter(|(c, &q)| c.len() > 1 && !q).count()
    }

    pub fn check(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for (i, c) in self.classes.iter().enumerate() {
            for &v in c.members() {
                if seen[v] || self.class_of[v] != i {
                    return false;
                }
                seen[v] = true;
            }
            let m = c.members();
            for (a, &v) in m.iter().enumerate() {
                for &w in &m[a + 1..] {
                    if !same_type(g, v, w) || g.has_edge(v, w) != self.is_clique[i] {
                        return false;
                    }
                }
            }
        }
        if !seen.iter().all(|&s| s) {
            return false;
        }
        // expanding H must reproduce g exactly
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let (a, b) = (self.class_of[u], self.class_of[v]);
                let expected = if a == b { self.is_clique[a] } else { self.type_graph.has_edge(a, b) };
                if expected != g.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

pub fn same_type(g: &Graph, v: usize, w: usize) -> bool {
    let a = g.neighbors(v).iter().filter(|&&x| x != w);
    let b = g.neighbors(w).iter().filter(|&&x| x != v);
    a.eq(b)
}

pub fn compute_type_partition(g: &Graph) -> TypePartition {
    let n = g.n();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if let Some(i) = classes.iter().position(|c| same_type(g, c[0], v)) {
            class_of[v] = i;
            classes[i].push(v);
        } else {
            class_of[v] = classes.len();
            classes.push(vec![v]);
        }
    }
    let is_clique: Vec<bool> = classes.iter().map(|c| c.len() > 1 && g.has_edge(c[0], c[1])).collect();
    let t = classes.len();
    let mut edges = Vec::new();
    for i in 0..t {
        for j in i + 1..t {
            if g.has_edge(classes[i][0], classes[j][0]) {
                edges.push((i, j));
            }
        }
    }
    let type_graph = Graph::from_edges(t, &edges).expect("quotient of a simple graph is simple");
    TypePartition {
        classes: classes.into_iter().map(VertexSet::new).collect(),
        is_clique,
        class_of,
        type_graph,
    }
}
