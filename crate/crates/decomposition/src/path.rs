use std::fmt::Write as _;

use graph_core::{Graph, GraphError};

use crate::DecompError;

/// Ordered bags; each bag is a sorted vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathDecomposition {
    pub bags: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    VertexMissing(usize),
    EdgeUncovered(usize, usize),
    NotContiguous { vertex: usize, bag: usize },
    VertexOutOfRange { vertex: usize, bag: usize },
}

impl PathDecomposition {
    pub fn new(bags: Vec<Vec<usize>>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        PathDecomposition { bags }
    }

    /// Max bag size minus one; an empty decomposition has width 0.
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn max_bag(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn to_text(&self, n: usize) -> String {
        let mut s = String::new();
        writeln!(s, "s pd {} {} {}", self.bags.len(), self.max_bag(), n).unwrap();
        for (i, b) in self.bags.iter().enumerate() {
            write!(s, "b {}", i + 1).unwrap();
            for v in b {
                write!(s, " {}", v + 1).unwrap();
            }
            s.push('\n');
        }
        s
    }
}

/// Checks the three path-decomposition axioms and reports every violation.
pub fn validate_path_decomposition(g: &Graph, pd: &PathDecomposition) -> Vec<Violation> {
    let n = g.n();
    let mut out = Vec::new();
    let mut first = vec![usize::MAX; n];
    let mut last = vec![0usize; n];
    let mut count = vec![0usize; n];
    for (i, bag) in pd.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                out.push(Violation::VertexOutOfRange { vertex: v, bag: i });
                continue;
            }
            first[v] = first[v].min(i);
            last[v] = i;
            count[v] += 1;
        }
    }
    for v in 0..n {
        if count[v] == 0 {
            out.push(Violation::VertexMissing(v));
        } else if count[v] != last[v] - first[v] + 1 {
            let gap = (first[v]..=last[v]).find(|&i| !pd.bags[i].contains(&v)).unwrap();
            out.push(Violation::NotContiguous { vertex: v, bag: gap });
        }
    }
    for (u, v) in g.edges() {
        if !pd.bags.iter().any(|b| b.contains(&u) && b.contains(&v)) {
            out.push(Violation::EdgeUncovered(u, v));
        }
    }
    out
}

/// Standard normalization: between consecutive bags, forget first (ascending
/// id), then introduce (ascending id). Starts and ends with an empty bag.
pub fn make_nice(g: &Graph, pd: &PathDecomposition) -> Result<PathDecomposition, DecompError> {
    let bad = validate_path_decomposition(g, pd);
    if !bad.is_empty() {
        return Err(DecompError::Invalid(bad));
    }
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    let mut cur: Vec<usize> = Vec::new();
    let end: Vec<usize> = Vec::new();
    let targets = pd.bags.iter().chain(std::iter::once(&end));
    for target in targets {
        for v in cur.clone() {
            if !target.contains(&v) {
                cur.retain(|&x| x != v);
                out.push(cur.clone());
            }
        }
        for &v in target {
            if !cur.contains(&v) {
                cur.push(v);
                cur.sort_unstable();
                out.push(cur.clone());
            }
        }
    }
    Ok(PathDecomposition { bags: out })
}

/// Minimum-width decomposition by dynamic programming over placed sets
/// (vertex separation number). Ties pick the lowest vertex id.
pub fn pathwidth_exact_small(g: &Graph, n_cap: usize) -> Result<PathDecomposition, DecompError> {
    let n = g.n();
    if n > n_cap || n > 24 {
        return Err(DecompError::CapExceeded { n, cap: n_cap.min(24) });
    }
    if n == 0 {
        return Ok(PathDecomposition { bags: Vec::new() });
    }
    let nb: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let full = (1u32 << n) - 1;
    let boundary = |s: u32| -> u32 {
        (0..n).filter(|&v| s >> v & 1 == 1 && nb[v] & !s != 0).count() as u32
    };
    let size = 1usize << n;
    let mut best = vec![u32::MAX; size];
    best[0] = 0;
    for s in 1..size as u32 {
        let here = boundary(s);
        let mut m = u32::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            m = m.min(best[(s & !(1 << v)) as usize]);
        }
        best[s as usize] = m.max(here);
    }
    // Walk back from the full set, placing the last vertex first.
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let target = best[s as usize];
        let v = (0..n as u32)
            .filter(|&v| s >> v & 1 == 1)
            .find(|&v| best[(s & !(1 << v)) as usize].max(boundary(s)) == target)
            .unwrap();
        order.push(v as usize);
        s &= !(1 << v);
    }
    order.reverse();
    let mut bags = Vec::with_capacity(n);
    let mut placed = 0u32;
    for &v in &order {
        let mut bag: Vec<usize> =
            (0..n).filter(|&u| placed >> u & 1 == 1 && nb[u] & !placed != 0).collect();
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
        placed |= 1 << v;
    }
    Ok(PathDecomposition { bags })
}

/// Parses the "s pd" format. Tag tokens after the bag index are skipped here;
/// see [`crate::parse_semi_nice`] for tagged input.
pub fn parse_path_decomposition(text: &str) -> Result<(PathDecomposition, usize), DecompError> {
    let (header, bags) = parse_raw(text)?;
    let pd = PathDecomposition::new(bags.into_iter().map(|(_, vs)| vs).collect());
    check_header(&pd, header)?;
    Ok((pd, header.2))
}

pub(crate) type RawBag = (Vec<String>, Vec<usize>);

pub(crate) fn parse_raw(text: &str) -> Result<((usize, usize, usize), Vec<RawBag>), DecompError> {
    let mut header = None;
    let mut bags = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let num = |t: &str| -> Result<usize, DecompError> {
            t.parse::<usize>()
                .map_err(|_| GraphError::parse(line_no, format!("expected integer, got {t:?}")).into())
        };
        match toks[0] {
            "s" => {
                if toks.len() != 5 || toks[1] != "pd" {
                    return Err(GraphError::parse(line_no, "expected \"s pd <bags> <max> <n>\"").into());
                }
                header = Some((num(toks[2])?, num(toks[3])?, num(toks[4])?));
            }
            "b" => {
                if header.is_none() {
                    return Err(GraphError::parse(line_no, "bag before header").into());
                }
                if toks.len() < 2 || num(toks[1])? != bags.len() + 1 {
                    return Err(GraphError::parse(line_no, "bag indices must be 1, 2, 3, ...").into());
                }
                let mut i = 2;
                let mut tag = Vec::new();
                let arity = match toks.get(2).copied() {
                    Some("I") | Some("F") => 1,
                    Some("S") => 2,
                    Some("E") => 0,
                    _ => usize::MAX,
                };
                if arity != usize::MAX {
                    if toks.len() < 3 + arity {
                        return Err(GraphError::parse(line_no, "truncated bag tag").into());
                    }
                    tag = toks[2..3 + arity].iter().map(|s| s.to_string()).collect();
                    i = 3 + arity;
                }
                let mut vs = Vec::new();
                for t in &toks[i..] {
                    let v = num(t)?;
                    if v == 0 {
                        return Err(GraphError::parse(line_no, "vertex ids start at 1").into());
                    }
                    vs.push(v - 1);
                }
                bags.push((tag, vs));
            }
            _ => return Err(GraphError::parse(line_no, format!("unknown line type {:?}", toks[0])).into()),
        }
    }
    let header = header.ok_or_else(|| DecompError::from(GraphError::parse(0, "missing \"s pd\" header")))?;
    Ok((header, bags))
}

pub(crate) fn check_header(pd: &PathDecomposition, h: (usize, usize, usize)) -> Result<(), DecompError> {
    if h.0 != pd.bags.len() {
        return Err(GraphError::parse(0, format!("header says {} bags, found {}", h.0, pd.bags.len())).into());
    }
    if h.1 != pd.max_bag() {
        return Err(GraphError::parse(0, format!("header says max bag {}, found {}", h.1, pd.max_bag())).into());
    }
    if let Some(v) = pd.bags.iter().flatten().find(|&&v| v >= h.2) {
        return Err(GraphError::InvalidVertex(v + 1).into());
    }
    Ok(())
}
