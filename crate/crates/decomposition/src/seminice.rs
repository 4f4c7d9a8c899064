use std::fmt::Write as _;

use graph_core::{Graph, GraphError};

use crate::path::{check_header, parse_raw, validate_path_decomposition, PathDecomposition};
use crate::DecompError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BagTag {
    /// The leading empty bag.
    Empty,
    Introduce(usize),
    Forget(usize),
    /// Introduces `v` and `v_hat`, each the other's only neighbor in the bag.
    Special(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedBag {
    pub tag: BagTag,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiNicePathDecomposition {
    pub bags: Vec<TaggedBag>,
}

impl SemiNicePathDecomposition {
    pub fn untagged(&self) -> PathDecomposition {
        PathDecomposition { bags: self.bags.iter().map(|b| b.vertices.clone()).collect() }
    }

    pub fn width(&self) -> usize {
        self.untagged().width()
    }

    pub fn to_text(&self, n: usize) -> String {
        let max = self.bags.iter().map(|b| b.vertices.len()).max().unwrap_or(0);
        let mut s = String::new();
        writeln!(s, "s pd {} {} {}", self.bags.len(), max, n).unwrap();
        for (i, b) in self.bags.iter().enumerate() {
            write!(s, "b {}", i + 1).unwrap();
            match b.tag {
                BagTag::Empty => write!(s, " E"),
                BagTag::Introduce(v) => write!(s, " I {}", v + 1),
                BagTag::Forget(v) => write!(s, " F {}", v + 1),
                BagTag::Special(v, w) => write!(s, " S {} {}", v + 1, w + 1),
            }
            .unwrap();
            for v in &b.vertices {
                write!(s, " {}", v + 1).unwrap();
            }
            s.push('\n');
        }
        s
    }
}

/// Checks the semi-nice rules; returns human-readable problems.
pub fn validate_semi_nice(g: &Graph, snd: &SemiNicePathDecomposition) -> Vec<String> {
    let mut out: Vec<String> =
        validate_path_decomposition(g, &snd.untagged()).iter().map(|v| format!("{v:?}")).collect();
    let bags = &snd.bags;
    if bags.is_empty() {
        if g.n() > 0 {
            out.push("no bags".into());
        }
        return out;
    }
    if !bags[0].vertices.is_empty() || !bags[bags.len() - 1].vertices.is_empty() {
        out.push("first and last bags must be empty".into());
    }
    if bags[0].tag != BagTag::Empty {
        out.push("first bag must be tagged E".into());
    }
    for i in 1..bags.len() {
        let prev = &bags[i - 1].vertices;
        let cur = &bags[i].vertices;
        let b = &bags[i];
        let diff_ok = match b.tag {
            BagTag::Empty => false,
            BagTag::Introduce(v) => {
                let ok = with(prev, &[v]) == *cur && !prev.contains(&v);
                if ok && !cur.iter().any(|&x| g.has_edge(x, v)) {
                    out.push(format!("bag {}: introduced vertex {} has no neighbor in the bag", i + 1, v + 1));
                }
                ok
            }
            BagTag::Forget(v) => prev.contains(&v) && without(prev, v) == *cur,
            BagTag::Special(v, w) => {
                let ok = v != w && !prev.contains(&v) && !prev.contains(&w) && with(prev, &[v, w]) == *cur;
                if ok {
                    let nv: Vec<usize> = cur.iter().copied().filter(|&x| g.has_edge(x, v)).collect();
                    let nw: Vec<usize> = cur.iter().copied().filter(|&x| g.has_edge(x, w)).collect();
                    if nv != [w] || nw != [v] {
                        out.push(format!("bag {}: special pair ({}, {}) breaks the mutual-only-neighbor rule", i + 1, v + 1, w + 1));
                    }
                }
                ok
            }
        };
        if !diff_ok {
            out.push(format!("bag {}: tag {:?} does not match the bag difference", i + 1, b.tag));
        }
    }
    out
}

fn with(base: &[usize], extra: &[usize]) -> Vec<usize> {
    let mut v = base.to_vec();
    v.extend_from_slice(extra);
    v.sort_unstable();
    v
}

fn without(base: &[usize], x: usize) -> Vec<usize> {
    base.iter().copied().filter(|&y| y != x).collect()
}

/// Converts a nice decomposition to a semi-nice one by repeatedly repairing the
/// leftmost violating introduce bag. Each repair removes exactly one violation.
pub fn make_semi_nice(g: &Graph, nice: &PathDecomposition) -> Result<SemiNicePathDecomposition, DecompError> {
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(GraphError::IsolatedVertex(v + 1).into());
    }
    let bad = validate_path_decomposition(g, nice);
    if !bad.is_empty() {
        return Err(DecompError::Invalid(bad));
    }
    let mut bags = tag_nice(nice)?;
    let mut violations = count_violations(g, &bags);
    while let Some(p1) = first_violation(g, &bags) {
        let BagTag::Introduce(v) = bags[p1].tag else { unreachable!() };
        let q = (p1 + 1..bags.len())
            .find(|&i| bags[i].vertices.iter().any(|&x| g.has_edge(x, v)))
            .expect("a vertex with neighbors meets one before it is forgotten");
        let BagTag::Introduce(v_hat) = bags[q].tag else {
            return Err(DecompError::Internal(format!("bag {} should introduce a neighbor of {}", q + 1, v + 1)));
        };
        let case1 = bags[q].vertices.iter().filter(|&&x| g.has_edge(x, v_hat)).count() > 1;
        let mut next: Vec<TaggedBag> = bags[..p1].to_vec();
        for b in &bags[p1 + 1..q] {
            next.push(TaggedBag { tag: b.tag, vertices: without(&b.vertices, v) });
        }
        if case1 {
            next.push(TaggedBag { tag: BagTag::Introduce(v_hat), vertices: without(&bags[q].vertices, v) });
            next.push(TaggedBag { tag: BagTag::Introduce(v), vertices: bags[q].vertices.clone() });
        } else {
            next.push(TaggedBag { tag: BagTag::Special(v, v_hat), vertices: bags[q].vertices.clone() });
        }
        next.extend_from_slice(&bags[q + 1..]);
        bags = next;
        let now = count_violations(g, &bags);
        if now + 1 != violations {
            return Err(DecompError::Internal("fix-up did not remove exactly one violation".into()));
        }
        violations = now;
    }
    Ok(SemiNicePathDecomposition { bags })
}

fn tag_nice(nice: &PathDecomposition) -> Result<Vec<TaggedBag>, DecompError> {
    let b = &nice.bags;
    if b.is_empty() || !b[0].is_empty() || !b[b.len() - 1].is_empty() {
        return Err(DecompError::NotNice("first and last bags must be empty".into()));
    }
    let mut out = vec![TaggedBag { tag: BagTag::Empty, vertices: Vec::new() }];
    for i in 1..b.len() {
        let (prev, cur) = (&b[i - 1], &b[i]);
        let tag = if cur.len() == prev.len() + 1 && prev.iter().all(|x| cur.contains(x)) {
            BagTag::Introduce(*cur.iter().find(|x| !prev.contains(x)).unwrap())
        } else if prev.len() == cur.len() + 1 && cur.iter().all(|x| prev.contains(x)) {
            BagTag::Forget(*prev.iter().find(|x| !cur.contains(x)).unwrap())
        } else {
            return Err(DecompError::NotNice(format!("bags {} and {} differ by more than one vertex", i, i + 1)));
        };
        out.push(TaggedBag { tag, vertices: cur.clone() });
    }
    Ok(out)
}

fn is_violating(g: &Graph, b: &TaggedBag) -> bool {
    matches!(b.tag, BagTag::Introduce(v) if !b.vertices.iter().any(|&x| g.has_edge(x, v)))
}

fn first_violation(g: &Graph, bags: &[TaggedBag]) -> Option<usize> {
    bags.iter().position(|b| is_violating(g, b))
}

fn count_violations(g: &Graph, bags: &[TaggedBag]) -> usize {
    bags.iter().filter(|b| is_violating(g, b)).count()
}

/// Parses a tagged decomposition. Every bag except the first needs a tag.
pub fn parse_semi_nice(text: &str) -> Result<(SemiNicePathDecomposition, usize), DecompError> {
    let (header, raw) = parse_raw(text)?;
    let mut bags = Vec::new();
    for (i, (tag, mut vs)) in raw.into_iter().enumerate() {
        vs.sort_unstable();
        vs.dedup();
        let num = |k: usize| -> Result<usize, DecompError> {
            let v: usize = tag[k].parse().map_err(|_| GraphError::parse(0, format!("bad tag vertex in bag {}", i + 1)))?;
            if v == 0 {
                return Err(GraphError::parse(0, "vertex ids start at 1").into());
            }
            Ok(v - 1)
        };
        let t = match tag.first().map(String::as_str) {
            Some("E") => BagTag::Empty,
            Some("I") => BagTag::Introduce(num(1)?),
            Some("F") => BagTag::Forget(num(1)?),
            Some("S") => BagTag::Special(num(1)?, num(2)?),
            _ if i == 0 => BagTag::Empty,
            _ => return Err(GraphError::parse(0, format!("bag {} has no tag", i + 1)).into()),
        };
        bags.push(TaggedBag { tag: t, vertices: vs });
    }
    let snd = SemiNicePathDecomposition { bags };
    check_header(&snd.untagged(), header)?;
    Ok((snd, header.2))
}
