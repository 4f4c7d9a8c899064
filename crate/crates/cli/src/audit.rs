//! Method-specific invariant audits for `cfon audit`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use cfon_outerplanar::{block_decomposition, check_outerplanar, edge_faces, inner_faces, OuterplanarRun};
use cfon_pathwidth::color_by_pathwidth;
use cfon_structural::{DcCase, DcRun, LiftedColoring};
use decomposition::{compute_cluster_modulator_exact, semi_nice_exact};
use graph_core::{Graph, VertexSet};
use verify_exact::{cap_from_env, verify_cfcn, verify_cfon};

use crate::color::ids;
use crate::{CliError, CERT_K_MAX};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum AuditMethod {
    Pathwidth,
    Nd,
    Dc,
    Outerplanar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub method: &'static str,
    pub lines: Vec<(String, String)>,
    pub problems: Vec<String>,
}

impl AuditReport {
    pub fn holds(&self) -> bool {
        self.problems.is_empty()
    }

    pub fn render(&self) -> String {
        let mut s = String::from("[AUDIT]\n");
        writeln!(s, "method: {}", self.method).unwrap();
        for (k, v) in &self.lines {
            writeln!(s, "{k}: {v}").unwrap();
        }
        for p in &self.problems {
            writeln!(s, "problem: {p}").unwrap();
        }
        writeln!(s, "holds: {}", self.holds()).unwrap();
        s
    }
}

fn p(k: &str, v: impl ToString) -> (String, String) {
    (k.to_string(), v.to_string())
}

pub fn audit(g: &Graph, method: AuditMethod) -> Result<AuditReport, CliError> {
    g.require_no_isolated()?;
    g.require_connected()?;
    let mut lines = Vec::new();
    let mut problems = Vec::new();
    let name = match method {
        AuditMethod::Pathwidth => {
            let snd = semi_nice_exact(g, cap_from_env())?;
            let r = color_by_pathwidth(g, &snd)?;
            let a = &r.audit;
            let required = (3 * a.k_star).div_ceil(2);
            lines.extend([
                p("pathwidth", r.width),
                p("k_star", a.k_star),
                p("max_bag", a.max_bag),
                p("required_max_bag", required),
                p("skipped_bags", a.skipped),
            ]);
            if a.max_bag < required {
                problems.push(format!("max bag {} is below {required}", a.max_bag));
            }
            "pathwidth"
        }
        AuditMethod::Nd => {
            for (closed, r) in [(false, cfon_structural::cfon_by_nd(g)?), (true, cfon_structural::cfcn_by_nd(g)?)] {
                let tag = if closed { "closed" } else { "open" };
                let ok = if closed { verify_cfcn(g, &r.coloring)? } else { verify_cfon(g, &r.coloring)? };
                lines.push(p(&format!("{tag}_bad_sets"), r.bad_log.len()));
                for (class, fix) in &r.bad_log {
                    lines.push(p(&format!("{tag}_fix"), format!("class {} {:?}", class + 1, fix)));
                }
                problems.extend(nd_bad_set_audit(&r, closed).into_iter().map(|e| format!("{tag}: {e}")));
                if !ok.valid {
                    problems.push(format!("{tag}: coloring does not verify"));
                }
            }
            "nd"
        }
        AuditMethod::Dc => {
            let x = compute_cluster_modulator_exact(g, CERT_K_MAX)
                .ok_or_else(|| CliError::Cap(format!("no cluster modulator of size at most {CERT_K_MAX}")))?;
            let r = cfon_structural::cfon_by_dc(g, &x)?;
            lines.push(p("modulator", ids(x.members())));
            lines.push(p("steps", r.steps.len()));
            problems.extend(dc_reserved_audit(g, &x, &r));
            "dc"
        }
        AuditMethod::Outerplanar => {
            let r = cfon_outerplanar::color_outerplanar(g)?;
            let (classes, errs) = outerplanar_exempt_audit(g, &r)?;
            for (e, class) in &classes {
                lines.push(p("exempt", format!("{}-{} {class}", e.0 + 1, e.1 + 1)));
            }
            for class in ["bridge", "double-covered", "single-face"] {
                lines.push(p(class, classes.values().filter(|c| **c == class).count()));
            }
            problems.extend(errs);
            "outerplanar"
        }
    };
    Ok(AuditReport { method: name, lines, problems })
}

/// Every bad class of the lifting shows up in the log exactly once, and
/// nothing else does.
pub fn nd_bad_set_audit(r: &LiftedColoring, closed: bool) -> Vec<String> {
    let tp = &r.partition;
    let bad: BTreeSet<usize> = (0..tp.classes.len())
        .filter(|&i| {
            let kind = if closed { tp.classes[i].len() > 1 && !tp.is_clique[i] } else { tp.is_clique[i] };
            // a one-class graph skips the lifting and has no C_H/U_H
            kind && r.u_h.get(i).is_some_and(|u| r.c_h.get(i) == Some(u))
        })
        .collect();
    let mut seen = BTreeMap::new();
    for (class, _) in &r.bad_log {
        *seen.entry(*class).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    for (&c, &k) in &seen {
        if k > 1 {
            out.push(format!("class {} fixed {k} times", c + 1));
        }
        if !bad.contains(&c) {
            out.push(format!("class {} is logged but not bad", c + 1));
        }
    }
    for &c in &bad {
        if !seen.contains_key(&c) {
            out.push(format!("bad class {} never fixed", c + 1));
        }
    }
    out
}

/// Each reserved modulator color (a group witness, a repaired singleton
/// witness or an injected color) is carried by exactly the vertices that
/// reserved it.
pub fn dc_reserved_audit(g: &Graph, x: &VertexSet, r: &DcRun) -> Vec<String> {
    let index = |v: usize| x.members().iter().position(|&y| y == v).map(|i| i as u32 + 1);
    let mut expect: BTreeMap<u32, usize> = BTreeMap::new();
    let mut out = Vec::new();
    let mut reserve = |c: Option<u32>, k: usize, out: &mut Vec<String>| match c {
        Some(c) if expect.insert(c, k).is_none() => {}
        Some(c) => out.push(format!("color {c} reserved twice")),
        None => out.push("reserving vertex is not in the modulator".into()),
    };
    for s in &r.steps {
        match s {
            DcCase::SingletonGroup { colored, .. } => reserve(index(colored[0]), 2, &mut out),
            DcCase::SingletonRepair { recolored, .. } => reserve(index(*recolored), 1, &mut out),
            DcCase::Inject { v, .. } => reserve(index(*v), 1, &mut out),
            _ => {}
        }
    }
    for (&c, &k) in &expect {
        let used = (0..g.n()).filter(|&v| r.coloring.get(v) == Some(c)).count();
        if used != k {
            out.push(format!("reserved color {c} is used {used} times, expected {k}"));
        }
    }
    out
}

fn star(c: &[u32], u: &[u32], v: usize, w: usize) -> bool {
    let set: BTreeSet<u32> = [c[v], u[v], c[w], u[w]].into_iter().collect();
    c[v] != c[w] && set.len() == 3
}

/// Classifies every logged exempt edge by the inner faces around it, and
/// checks that every edge failing the star condition was logged. Blocks
/// colored by the three-color pentagon rule do not keep the star condition
/// and are skipped.
#[allow(clippy::type_complexity)]
pub fn outerplanar_exempt_audit(
    g: &Graph,
    r: &OuterplanarRun,
) -> Result<(BTreeMap<(usize, usize), &'static str>, Vec<String>), CliError> {
    let bt = block_decomposition(g);
    let cycles = check_outerplanar(g)?;
    let mut cover: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut five_block: BTreeSet<(usize, usize)> = BTreeSet::new();
    let root = bt.blocks_of(0).first().copied();
    for (b, oc) in cycles.iter().enumerate() {
        let Some(oc) = oc else { continue };
        let faces = inner_faces(oc);
        for (e, fs) in edge_faces(&faces) {
            cover.insert(e, fs.len());
            if Some(b) == root && faces.iter().all(|f| f.len() == 5) {
                five_block.insert(e);
            }
        }
    }
    let c: Vec<u32> = (0..g.n()).map(|v| r.coloring.get(v).unwrap_or(0)).collect();
    let u: Vec<u32> = match &r.coloring.witness {
        Some(w) => w.iter().map(|x| x.unwrap_or(0)).collect(),
        None => return Err(CliError::Internal("outerplanar run has no witness colors".into())),
    };
    let logged: BTreeSet<(usize, usize)> = r.exempt.iter().copied().collect();
    let mut classes = BTreeMap::new();
    for &e in &logged {
        let class = match cover.get(&e) {
            None => "bridge",
            Some(2) => "double-covered",
            Some(_) => "single-face",
        };
        classes.insert(e, class);
    }
    let mut problems = Vec::new();
    for (v, w) in g.edges() {
        if !star(&c, &u, v, w) && !logged.contains(&(v, w)) && !five_block.contains(&(v, w)) {
            problems.push(format!("edge {}-{} breaks the star condition but was not logged", v + 1, w + 1));
        }
    }
    Ok((classes, problems))
}
