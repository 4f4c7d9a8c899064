use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::GraphError;

/// Simple undirected graph. Vertices are `0..n` internally and `1..=n` in files.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from 0-indexed edges. Duplicates are merged, self-loops rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// External 1-indexed name of an internal vertex.
    pub fn label(&self, v: usize) -> usize {
        v + 1
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex(v + 1))
        }
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Fails on the first isolated vertex. Coloring entry points call this.
    pub fn require_no_isolated(&self) -> Result<(), GraphError> {
        match self.isolated_vertices().first() {
            Some(&v) => Err(GraphError::IsolatedVertex(v + 1)),
            None => Ok(()),
        }
    }

    pub fn require_connected(&self) -> Result<(), GraphError> {
        if self.n() > 0 && connected_components(self).len() > 1 {
            return Err(GraphError::Disconnected);
        }
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || connected_components(self).len() == 1
    }

    /// Subgraph induced by `keep` (in the given order). Returns the graph and the
    /// map from new ids to old ids.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![Vec::new(); keep.len()];
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if pos[w] != usize::MAX {
                    adj[i].push(pos[w]);
                }
            }
            adj[i].sort_unstable();
        }
        (Graph { adj }, keep.to_vec())
    }

    /// Graph with the vertices of `remove` deleted (ids kept, vertices become isolated).
    pub fn without(&self, remove: &[usize]) -> Graph {
        let mut gone = vec![false; self.n()];
        for &v in remove {
            gone[v] = true;
        }
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, list)| {
                if gone[v] {
                    Vec::new()
                } else {
                    list.iter().copied().filter(|&w| !gone[w]).collect()
                }
            })
            .collect();
        Graph { adj }
    }

    /// Plain "u v" form, one edge per line, lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        let edges = self.edges();
        if edges.is_empty() || self.isolated_vertices().iter().any(|&v| v + 1 == self.n()) {
            // keep n recoverable when the last vertex has no edge
            let _ = writeln!(s, "p edge {} {}", self.n(), self.m());
        }
        for (u, v) in edges {
            let _ = writeln!(s, "{} {}", u + 1, v + 1);
        }
        s
    }

    pub fn is_acyclic(&self) -> bool {
        let comps = connected_components(self).len();
        self.m() + comps == self.n()
    }
}

/// Mutable builder; the only place a graph is mutated.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    adj: Vec<Vec<usize>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder { adj: vec![Vec::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.adj.len();
        if u >= n {
            return Err(GraphError::InvalidVertex(u + 1));
        }
        if v >= n {
            return Err(GraphError::InvalidVertex(v + 1));
        }
        if u == v {
            return Err(GraphError::SelfLoop { line: 0, vertex: u + 1 });
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(())
    }

    pub fn build(mut self) -> Graph {
        for list in &mut self.adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj: self.adj }
    }
}

/// Parses the edge-list format: "u v" lines, "c" comments, optional
/// "p edge n m" header and DIMACS "e u v" lines.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut header_n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut max_label = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let nums: &[&str] = match toks[0] {
            "p" => {
                if toks.len() != 4 {
                    return Err(GraphError::parse(line_no, "expected \"p edge n m\""));
                }
                let n = parse_label(toks[2], line_no, true)?;
                header_n = Some(n);
                continue;
            }
            "e" => &toks[1..],
            _ => &toks[..],
        };
        if nums.len() != 2 {
            return Err(GraphError::parse(line_no, "expected two vertex ids"));
        }
        let u = parse_label(nums[0], line_no, false)?;
        let v = parse_label(nums[1], line_no, false)?;
        if u == v {
            return Err(GraphError::SelfLoop { line: line_no, vertex: u });
        }
        max_label = max_label.max(u).max(v);
        edges.push((u - 1, v - 1, line_no));
    }
    let n = match header_n {
        Some(h) if h < max_label => {
            return Err(GraphError::parse(0, format!("vertex {max_label} exceeds header n={h}")))
        }
        Some(h) => h,
        None => max_label,
    };
    let mut b = GraphBuilder::new(n);
    for (u, v, _) in edges {
        b.add_edge(u, v)?;
    }
    Ok(b.build())
}

fn parse_label(tok: &str, line: usize, allow_zero: bool) -> Result<usize, GraphError> {
    match tok.parse::<usize>() {
        Ok(0) if !allow_zero => Err(GraphError::parse(line, "vertex ids start at 1")),
        Ok(x) => Ok(x),
        Err(_) => Err(GraphError::parse(line, format!("not a non-negative integer: {tok:?}"))),
    }
}

/// Sorted list of vertex ids without duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn check_bounds(&self, n: usize) -> Result<(), GraphError> {
        match self.0.last() {
            Some(&v) if v >= n => Err(GraphError::InvalidVertex(v + 1)),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

/// Parses a vertex list file: 1-indexed ids, whitespace separated, "c" comments.
pub fn parse_vertex_list(text: &str, n: usize) -> Result<VertexSet, GraphError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('#') {
            continue;
        }
        for tok in line.split_whitespace() {
            let v = parse_label(tok, idx + 1, false)?;
            if v > n {
                return Err(GraphError::InvalidVertex(v));
            }
            out.push(v - 1);
        }
    }
    Ok(VertexSet::new(out))
}

pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        out.push(VertexSet::new(comp));
    }
    out
}

/// BFS distances from `s`; `None` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(v) = q.pop_front() {
        let d = dist[v].unwrap();
        for &w in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                q.push_back(w);
            }
        }
    }
    dist
}

pub fn bfs_distance(g: &Graph, u: usize, v: usize) -> Result<Option<usize>, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(bfs_distances(g, u)[v])
}
