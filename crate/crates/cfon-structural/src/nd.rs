//! Lifting a coloring of the type graph H to G.
//!
//! Each class gets a representative carrying H's color, the rest of the class
//! gets color 0. Classes whose members then lack a unique color ("bad sets")
//! are repaired with a few extra colors. Color 0 is renamed to the top color
//! on output.

use decomposition::{compute_type_partition, TypePartition};
use graph_core::{Coloring, Graph};
use verify_exact::{cap_from_env, exact_chi_cn, exact_chi_on};

use crate::{clique_colors, counts, witnesses, StructuralError};

/// How a bad class was repaired.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BadFix {
    /// A class next to two or more bad sets got a fresh color on its representative.
    Reduction { center: usize },
    /// Two adjacent bad sets, otherwise isolated from bad sets.
    Pair { partner: usize },
    /// A bad set with no bad neighbor.
    Alone,
    /// Closed variant: the class was the lead set of an iteration.
    Lead { iteration: usize },
    /// Closed variant: a bad neighbor of a lead set.
    LeadNeighbor { lead: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedColoring {
    pub coloring: Coloring,
    pub partition: TypePartition,
    /// Coloring of H and the unique color chosen for every class.
    pub c_h: Vec<u32>,
    pub u_h: Vec<u32>,
    pub chi_h: u32,
    pub reps: Vec<usize>,
    /// Every bad class, once, with the rule that fixed it.
    pub bad_log: Vec<(usize, BadFix)>,
    pub bound: usize,
    pub colors_used: usize,
}

pub fn cfon_by_nd(g: &Graph) -> Result<LiftedColoring, StructuralError> {
    cfon_by_nd_with(g, cap_from_env())
}

pub fn cfcn_by_nd(g: &Graph) -> Result<LiftedColoring, StructuralError> {
    cfcn_by_nd_with(g, cap_from_env())
}

/// Unique colors of `H` around class `i`, preferring one different from
/// the class's own color.
fn choose_unique(h: &Graph, c_h: &[u32], i: usize, closed: bool) -> Result<u32, StructuralError> {
    let color: Vec<Option<u32>> = c_h.iter().map(|&c| Some(c)).collect();
    let unique: Vec<u32> = counts(h, &color, i, closed).into_iter().filter(|&(_, k)| k == 1).map(|(c, _)| c).collect();
    unique
        .iter()
        .copied()
        .find(|&c| c != c_h[i])
        .or_else(|| unique.first().copied())
        .ok_or_else(|| StructuralError::Internal(format!("type class {} has no unique color", i + 1)))
}

struct Base {
    tp: TypePartition,
    chi: u32,
    c_h: Vec<u32>,
    u_h: Vec<u32>,
    reps: Vec<usize>,
    color: Vec<u32>,
}

fn base(g: &Graph, cap: usize, closed: bool) -> Result<Base, StructuralError> {
    let tp = compute_type_partition(g);
    let h = &tp.type_graph;
    let (chi, ch) = if closed { exact_chi_cn(h, cap)? } else { exact_chi_on(h, cap)? };
    let c_h: Vec<u32> = (0..h.n()).map(|i| ch.get(i).unwrap()).collect();
    let u_h = (0..h.n()).map(|i| choose_unique(h, &c_h, i, closed)).collect::<Result<Vec<_>, _>>()?;
    let reps: Vec<usize> = tp.classes.iter().map(|c| c.members()[0]).collect();
    let mut color = vec![0; g.n()];
    for (i, &r) in reps.iter().enumerate() {
        color[r] = c_h[i];
    }
    Ok(Base { tp, chi, c_h, u_h, reps, color })
}

fn finish(
    g: &Graph,
    b: Base,
    mut color: Vec<u32>,
    zero_to: u32,
    bad_log: Vec<(usize, BadFix)>,
    bound: usize,
    closed: bool,
) -> LiftedColoring {
    for c in color.iter_mut() {
        if *c == 0 {
            *c = zero_to;
        }
    }
    let opt: Vec<Option<u32>> = color.iter().map(|&c| Some(c)).collect();
    let coloring = Coloring::total(color).with_witness(witnesses(g, &opt, closed));
    LiftedColoring {
        colors_used: coloring.colors_used(),
        coloring,
        partition: b.tp,
        c_h: b.c_h,
        u_h: b.u_h,
        chi_h: b.chi,
        reps: b.reps,
        bad_log,
        bound,
    }
}

/// Open variant, at most chi_ON(H) + ceil(cl/2) + 2 colors.
pub fn cfon_by_nd_with(g: &Graph, cap: usize) -> Result<LiftedColoring, StructuralError> {
    g.require_no_isolated()?;
    g.require_connected()?;
    let tp = compute_type_partition(g);
    if tp.classes.len() == 1 {
        // H is a single vertex, so G is a clique
        let color = clique_colors(g.n());
        let opt: Vec<Option<u32>> = color.iter().map(|&c| Some(c)).collect();
        let coloring = Coloring::total(color).with_witness(witnesses(g, &opt, false));
        return Ok(LiftedColoring {
            colors_used: coloring.colors_used(),
            coloring,
            partition: tp,
            c_h: vec![],
            u_h: vec![],
            chi_h: 0,
            reps: vec![0],
            bad_log: vec![],
            bound: 3,
        });
    }
    let b = base(g, cap, false)?;
    let h = &b.tp.type_graph;
    let t = h.n();
    let mut color = b.color.clone();
    let mut bad: Vec<bool> =
        (0..t).map(|i| b.tp.is_clique[i] && b.u_h[i] == b.c_h[i]).collect();
    let mut log = Vec::new();
    let a_size = b.tp.cl() as u32 / 2;
    let mut next_a = b.chi + 1;

    loop {
        let bad_nbrs = |i: usize, bad: &[bool]| -> Vec<usize> {
            h.neighbors(i).iter().copied().filter(|&j| bad[j]).collect()
        };
        let Some(i) = (0..t).find(|&i| bad_nbrs(i, &bad).len() >= 2) else { break };
        if next_a > b.chi + a_size {
            return Err(StructuralError::Internal("reserved colors for the reduction ran out".into()));
        }
        color[b.reps[i]] = next_a;
        next_a += 1;
        let mut fixed = bad_nbrs(i, &bad);
        if bad[i] {
            fixed.push(i);
        }
        fixed.sort_unstable();
        for j in fixed {
            bad[j] = false;
            log.push((j, BadFix::Reduction { center: i }));
        }
    }
    let s = b.chi + a_size;
    for i in 0..t {
        if !bad[i] {
            continue;
        }
        let partner = h.neighbors(i).iter().copied().find(|&j| bad[j]);
        color[b.reps[i]] = s + 1;
        bad[i] = false;
        match partner {
            Some(j) => {
                bad[j] = false;
                log.push((i, BadFix::Pair { partner: j }));
                log.push((j, BadFix::Pair { partner: i }));
            }
            None => log.push((i, BadFix::Alone)),
        }
    }
    let bound = b.chi as usize + b.tp.cl().div_ceil(2) + 2;
    Ok(finish(g, b, color, s + 2, log, bound, false))
}

/// Closed variant, at most chi_CN(H) + ceil(ind/3) + 3 colors.
pub fn cfcn_by_nd_with(g: &Graph, cap: usize) -> Result<LiftedColoring, StructuralError> {
    g.require_no_isolated()?;
    g.require_connected()?;
    let b = base(g, cap, true)?;
    let h = &b.tp.type_graph;
    let t = h.n();
    let members = |i: usize| b.tp.classes[i].members();
    let mut color = b.color.clone();
    let mut bad: Vec<bool> = (0..t)
        .map(|i| members(i).len() > 1 && !b.tp.is_clique[i] && b.u_h[i] == b.c_h[i])
        .collect();
    let mut log = Vec::new();
    let max_iter = b.tp.ind() / 3;
    let mut iteration = 0;

    loop {
        let bad_nbrs = |i: usize, bad: &[bool]| -> Vec<usize> {
            h.neighbors(i).iter().copied().filter(|&j| bad[j]).collect()
        };
        let Some(i) = (0..t).find(|&i| bad[i] && bad_nbrs(i, &bad).len() >= 2) else { break };
        iteration += 1;
        if iteration > max_iter {
            return Err(StructuralError::Internal("more lead sets than the color budget allows".into()));
        }
        let lead_color = b.chi + iteration as u32;
        let rest: Vec<usize> = members(i).iter().copied().filter(|&x| x != b.reps[i]).collect();
        color[rest[0]] = lead_color;
        for &x in &rest[1..] {
            color[x] = lead_color + 1;
        }
        bad[i] = false;
        log.push((i, BadFix::Lead { iteration }));
        for j in bad_nbrs(i, &bad) {
            bad[j] = false;
            log.push((j, BadFix::LeadNeighbor { lead: i }));
        }
    }
    let s = b.chi + max_iter as u32;
    let first_other = |i: usize| members(i).iter().copied().find(|&x| x != b.reps[i]).unwrap();
    for i in 0..t {
        if !bad[i] {
            continue;
        }
        bad[i] = false;
        match h.neighbors(i).iter().copied().find(|&j| bad[j]) {
            Some(j) => {
                bad[j] = false;
                color[first_other(i)] = s + 1;
                color[first_other(j)] = s + 2;
                log.push((i, BadFix::Pair { partner: j }));
                log.push((j, BadFix::Pair { partner: i }));
            }
            None => {
                for &x in members(i) {
                    if x != b.reps[i] {
                        color[x] = s + 2;
                    }
                }
                log.push((i, BadFix::Alone));
            }
        }
    }
    let bound = b.chi as usize + b.tp.ind().div_ceil(3) + 3;
    Ok(finish(g, b, color, s + 3, log, bound, true))
}
