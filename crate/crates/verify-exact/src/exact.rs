//! Exhaustive conflict-free chromatic numbers for small graphs.
//!
//! Vertices are assigned in descending-degree order. A vertex may only open
//! the next unused color (first-use symmetry breaking). Each neighborhood keeps
//! running color counts, so a vertex fails as soon as all its colors are
//! repeated or its last neighbor is placed without a unique color.

use graph_core::{Coloring, Graph};

use crate::verify::{verify, Variant};
use crate::VerifyError;

pub const DEFAULT_CAP: usize = 12;

/// Oracle cap from `CFON_ORACLE_CAP`, falling back to [`DEFAULT_CAP`].
pub fn cap_from_env() -> usize {
    std::env::var("CFON_ORACLE_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

pub fn exact_chi_on(g: &Graph, cap: usize) -> Result<(u32, Coloring), VerifyError> {
    exact(g, cap, Variant::Open)
}

pub fn exact_chi_cn(g: &Graph, cap: usize) -> Result<(u32, Coloring), VerifyError> {
    exact(g, cap, Variant::Closed)
}

pub fn exact_chi_on_partial(g: &Graph, cap: usize) -> Result<(u32, Coloring), VerifyError> {
    exact(g, cap, Variant::PartialOpen)
}

/// Minimum number of colors for the variant, with a coloring attaining it.
pub fn exact(g: &Graph, cap: usize, variant: Variant) -> Result<(u32, Coloring), VerifyError> {
    if g.n() > cap {
        return Err(VerifyError::CapExceeded { n: g.n(), cap });
    }
    if variant != Variant::Closed {
        if let Some(&v) = g.isolated_vertices().first() {
            return Err(VerifyError::NoColoring(v + 1));
        }
    }
    if g.n() == 0 {
        return Ok((0, Coloring::total(Vec::new())));
    }
    for k in 1..=g.n() as u32 {
        if let Some(c) = Search::new(g, k, variant).run() {
            let verdict = verify(g, &c, variant)?;
            assert!(verdict.valid, "oracle returned an invalid coloring");
            let c = c.with_witness(verdict.witness);
            return Ok((k, c));
        }
    }
    // a total coloring with distinct colors is always conflict-free here
    unreachable!("no coloring with n colors")
}

/// True when a valid coloring with at most `k` colors exists.
pub fn feasible(g: &Graph, k: u32, variant: Variant) -> bool {
    Search::new(g, k, variant).run().is_some()
}

struct Search {
    k: usize,
    partial: bool,
    order: Vec<usize>,
    color: Vec<u32>,
    // watchers[v]: vertices whose neighborhood contains v
    watchers: Vec<Vec<usize>>,
    count: Vec<Vec<u8>>,
    remaining: Vec<usize>,
    ones: Vec<usize>,
    dead: Vec<usize>,
}

impl Search {
    fn new(g: &Graph, k: u32, variant: Variant) -> Self {
        let n = g.n();
        let closed = variant == Variant::Closed;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let watchers: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let mut w = g.neighbors(v).to_vec();
                if closed {
                    w.push(v);
                }
                w
            })
            .collect();
        let remaining = (0..n).map(|v| g.degree(v) + closed as usize).collect();
        Search {
            k: k as usize,
            partial: variant == Variant::PartialOpen,
            order,
            color: vec![0; n],
            watchers,
            count: vec![vec![0; k as usize + 1]; n],
            remaining,
            ones: vec![0; n],
            dead: vec![0; n],
        }
    }

    fn run(mut self) -> Option<Coloring> {
        if self.dfs(0, 0) {
            let colors = self.color.iter().map(|&c| (c > 0).then_some(c)).collect();
            Some(Coloring::partial(colors))
        } else {
            None
        }
    }

    /// Places color `c` (0 = unassigned) on `v`; returns false if some
    /// neighborhood became hopeless. Always leaves state consistent for `unplace`.
    fn place(&mut self, v: usize, c: u32) -> bool {
        self.color[v] = c;
        let mut ok = true;
        for i in 0..self.watchers[v].len() {
            let w = self.watchers[v][i];
            self.remaining[w] -= 1;
            if c > 0 {
                let cnt = &mut self.count[w][c as usize];
                *cnt += 1;
                match *cnt {
                    1 => self.ones[w] += 1,
                    2 => {
                        self.ones[w] -= 1;
                        self.dead[w] += 1;
                    }
                    _ => {}
                }
            }
            if self.ones[w] == 0 && (self.remaining[w] == 0 || self.dead[w] == self.k) {
                ok = false;
            }
        }
        ok
    }

    fn unplace(&mut self, v: usize) {
        let c = self.color[v];
        for i in 0..self.watchers[v].len() {
            let w = self.watchers[v][i];
            self.remaining[w] += 1;
            if c > 0 {
                let cnt = &mut self.count[w][c as usize];
                match *cnt {
                    1 => self.ones[w] -= 1,
                    2 => {
                        self.ones[w] += 1;
                        self.dead[w] -= 1;
                    }
                    _ => {}
                }
                *cnt -= 1;
            }
        }
        self.color[v] = 0;
    }

    fn dfs(&mut self, pos: usize, max_used: u32) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let v = self.order[pos];
        let top = (max_used + 1).min(self.k as u32);
        for c in 1..=top {
            let ok = self.place(v, c);
            if ok && self.dfs(pos + 1, max_used.max(c)) {
                return true;
            }
            self.unplace(v);
        }
        if self.partial {
            let ok = self.place(v, 0);
            if ok && self.dfs(pos + 1, max_used) {
                return true;
            }
            self.unplace(v);
        }
        false
    }
}
