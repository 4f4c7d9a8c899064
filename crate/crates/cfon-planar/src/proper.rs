//! Proper vertex colorings: exact DSATUR backtracking and a Kempe-chain
//! 5-coloring for planar graphs. Colors are 0-based here.

use std::collections::VecDeque;

use graph_core::Graph;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProperOutcome {
    Colored(Vec<u32>),
    /// The search finished without a coloring.
    Infeasible,
    BudgetExhausted,
}

/// Backtracking k-coloring. The next vertex has the most distinct neighbor
/// colors, ties to the lowest id; colors are tried in ascending order.
pub fn proper_coloring(g: &Graph, k: u32, budget: u64) -> (ProperOutcome, u64) {
    let n = g.n();
    let mut color: Vec<Option<u32>> = vec![None; n];
    let mut nodes = 0u64;
    fn rec(g: &Graph, k: u32, color: &mut Vec<Option<u32>>, left: usize, nodes: &mut u64, budget: u64) -> Option<bool> {
        if left == 0 {
            return Some(true);
        }
        *nodes += 1;
        if *nodes > budget {
            return None;
        }
        let mut best: Option<(usize, usize)> = None;
        for v in (0..g.n()).filter(|&v| color[v].is_none()) {
            let mut seen: Vec<u32> = g.neighbors(v).iter().filter_map(|&w| color[w]).collect();
            seen.sort_unstable();
            seen.dedup();
            if best.map_or(true, |(s, _)| seen.len() > s) {
                best = Some((seen.len(), v));
            }
        }
        let (_, v) = best.unwrap();
        let used_max = color.iter().flatten().copied().max().map_or(0, |m| m + 1);
        // a color above every used one is interchangeable with any other unused one
        for c in 0..k.min(used_max + 1) {
            if g.neighbors(v).iter().any(|&w| color[w] == Some(c)) {
                continue;
            }
            color[v] = Some(c);
            match rec(g, k, color, left - 1, nodes, budget) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            color[v] = None;
        }
        Some(false)
    }
    let outcome = match rec(g, k, &mut color, n, &mut nodes, budget) {
        Some(true) => ProperOutcome::Colored(color.into_iter().map(Option::unwrap).collect()),
        Some(false) => ProperOutcome::Infeasible,
        None => ProperOutcome::BudgetExhausted,
    };
    (outcome, nodes)
}

/// Smallest-last order with a Kempe-chain swap when a vertex sees all five
/// colors. Fails when some remaining vertex has degree above 5, or when no
/// swap frees a color; both mean the input is not planar.
pub fn proper_color_planar5(g: &Graph) -> Result<Vec<u32>, String> {
    let n = g.n();
    let mut removed = vec![false; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).unwrap();
        if deg[v] > 5 {
            return Err(format!("every remaining vertex has degree above 5 (vertex {})", v + 1));
        }
        removed[v] = true;
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
        order.push(v);
    }
    let mut color: Vec<Option<u32>> = vec![None; n];
    for &v in order.iter().rev() {
        let taken = |color: &[Option<u32>]| -> Vec<bool> {
            let mut t = vec![false; 5];
            for &w in g.neighbors(v) {
                if let Some(c) = color[w] {
                    t[c as usize] = true;
                }
            }
            t
        };
        if let Some(c) = taken(&color).iter().position(|&t| !t) {
            color[v] = Some(c as u32);
            continue;
        }
        let nbrs: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| color[w].is_some()).collect();
        let mut done = false;
        'pairs: for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                let (ca, cb) = (color[a].unwrap(), color[b].unwrap());
                let chain = kempe_chain(g, &color, a, ca, cb);
                if chain[b] {
                    continue;
                }
                for x in 0..n {
                    if chain[x] {
                        color[x] = Some(if color[x] == Some(ca) { cb } else { ca });
                    }
                }
                if let Some(c) = taken(&color).iter().position(|&t| !t) {
                    color[v] = Some(c as u32);
                    done = true;
                    break 'pairs;
                }
            }
        }
        if !done {
            return Err(format!("no Kempe swap frees a color at vertex {}", v + 1));
        }
    }
    Ok(color.into_iter().map(Option::unwrap).collect())
}

/// Vertices reachable from `start` through colors `a` and `b`.
fn kempe_chain(g: &Graph, color: &[Option<u32>], start: usize, a: u32, b: u32) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut q = VecDeque::from([start]);
    while let Some(x) = q.pop_front() {
        for &y in g.neighbors(x) {
            if !seen[y] && (color[y] == Some(a) || color[y] == Some(b)) {
                seen[y] = true;
                q.push_back(y);
            }
        }
    }
    seen
}

pub fn is_proper(g: &Graph, color: &[u32]) -> bool {
    g.edges().iter().all(|&(u, v)| color[u] != color[v])
}
