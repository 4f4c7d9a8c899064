use std::collections::BTreeMap;

use graph_core::{Coloring, Graph};

use crate::VerifyError;

/// Outcome of a verifier run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub valid: bool,
    pub violations: Vec<(usize, String)>,
    pub colors_used: usize,
    /// Per vertex, the smallest color that occurs exactly once in its neighborhood.
    pub witness: Vec<Option<u32>>,
}

impl Verdict {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if self.valid {
            s.push_str("valid\n");
        } else {
            s.push_str("invalid\n");
            for (v, why) in &self.violations {
                s.push_str(&format!("vertex {}: {}\n", v + 1, why));
            }
        }
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Open,
    Closed,
    PartialOpen,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Open => "open",
            Variant::Closed => "closed",
            Variant::PartialOpen => "partial-open",
        }
    }
}

fn unique_colors(g: &Graph, c: &Coloring, v: usize, closed: bool) -> Vec<u32> {
    let mut count: BTreeMap<u32, usize> = BTreeMap::new();
    let own = closed.then_some(v);
    for w in g.neighbors(v).iter().copied().chain(own) {
        if let Some(col) = c.get(w) {
            *count.entry(col).or_default() += 1;
        }
    }
    count.into_iter().filter(|&(_, k)| k == 1).map(|(c, _)| c).collect()
}

fn check(g: &Graph, c: &Coloring, closed: bool) -> Verdict {
    let mut violations = Vec::new();
    let mut witness = vec![None; g.n()];
    for v in 0..g.n() {
        match unique_colors(g, c, v, closed).first() {
            Some(&u) => witness[v] = Some(u),
            None => violations.push((v, "no uniquely colored neighbor".to_string())),
        }
    }
    Verdict { valid: violations.is_empty(), violations, colors_used: c.colors_used(), witness }
}

fn require_shape(g: &Graph, c: &Coloring, total: bool) -> Result<(), VerifyError> {
    if c.n() != g.n() {
        return Err(VerifyError::SizeMismatch { graph: g.n(), coloring: c.n() });
    }
    if total && !c.is_total() {
        return Err(VerifyError::PartialColoring);
    }
    Ok(())
}

/// Every vertex has a color occurring exactly once in N(v).
pub fn verify_cfon(g: &Graph, c: &Coloring) -> Result<Verdict, VerifyError> {
    require_shape(g, c, true)?;
    Ok(check(g, c, false))
}

/// Every vertex has a color occurring exactly once in N[v].
pub fn verify_cfcn(g: &Graph, c: &Coloring) -> Result<Verdict, VerifyError> {
    require_shape(g, c, true)?;
    Ok(check(g, c, true))
}

/// Like [`verify_cfon`], but unassigned vertices are allowed and do not count.
pub fn verify_partial_cfon(g: &Graph, c: &Coloring) -> Result<Verdict, VerifyError> {
    require_shape(g, c, false)?;
    Ok(check(g, c, false))
}

pub fn verify(g: &Graph, c: &Coloring, variant: Variant) -> Result<Verdict, VerifyError> {
    match variant {
        Variant::Open => verify_cfon(g, c),
        Variant::Closed => verify_cfcn(g, c),
        Variant::PartialOpen => verify_partial_cfon(g, c),
    }
}

/// Checks a claimed witness map: for each vertex with a witness `u`, exactly
/// one neighbor has color `u`. Vertices without a witness entry are violations.
pub fn verify_witness(
    g: &Graph,
    c: &Coloring,
    u: &[Option<u32>],
    closed: bool,
) -> Result<Verdict, VerifyError> {
    require_shape(g, c, false)?;
    if u.len() != g.n() {
        return Err(VerifyError::SizeMismatch { graph: g.n(), coloring: u.len() });
    }
    let mut violations = Vec::new();
    for v in 0..g.n() {
        let Some(want) = u[v] else {
            violations.push((v, "no witness".to_string()));
            continue;
        };
        let own = closed.then_some(v);
        let hits = g
            .neighbors(v)
            .iter()
            .copied()
            .chain(own)
            .filter(|&w| c.get(w) == Some(want))
            .count();
        if hits != 1 {
            violations.push((v, format!("witness color {want} occurs {hits} times")));
        }
    }
    Ok(Verdict {
        valid: violations.is_empty(),
        violations,
        colors_used: c.colors_used(),
        witness: u.to_vec(),
    })
}
