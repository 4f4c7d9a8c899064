use std::fmt::Write;
use std::time::Duration;

use graph_core::{Coloring, Graph};
use verify_exact::{verify, Variant};

use crate::CliError;

/// Everything `cfon color` prints. The verdict fields are always recomputed
/// by [`Report::new`], never copied from the algorithm.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub method: &'static str,
    /// Set when `auto` picked the method.
    pub auto: bool,
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub params: Vec<(String, String)>,
    pub declared_bound: usize,
    pub colors_used: usize,
    pub variant: Variant,
    pub valid: bool,
    pub violations: Vec<(usize, String)>,
    pub fallback_used: bool,
    pub coloring: Coloring,
    pub witness: Vec<Option<u32>>,
    pub audit: Vec<(String, String)>,
    pub elapsed: Duration,
}

pub(crate) struct Draft {
    pub method: &'static str,
    pub params: Vec<(String, String)>,
    pub declared_bound: usize,
    pub variant: Variant,
    pub fallback_used: bool,
    pub coloring: Coloring,
    pub audit: Vec<(String, String)>,
}

impl Report {
    pub(crate) fn new(g: &Graph, graph: &str, d: Draft, auto: bool, elapsed: Duration) -> Result<Report, CliError> {
        let verdict = verify(g, &d.coloring, d.variant)?;
        let witness = match &d.coloring.witness {
            Some(w) => w.clone(),
            None => verdict.witness.clone(),
        };
        Ok(Report {
            method: d.method,
            auto,
            graph: graph.to_string(),
            n: g.n(),
            m: g.m(),
            params: d.params,
            declared_bound: d.declared_bound,
            colors_used: verdict.colors_used,
            variant: d.variant,
            valid: verdict.valid,
            violations: verdict.violations,
            fallback_used: d.fallback_used,
            coloring: d.coloring,
            witness,
            audit: d.audit,
            elapsed,
        })
    }

    pub fn within_bound(&self) -> bool {
        self.colors_used <= self.declared_bound
    }

    /// Exit status of `cfon color`: 0 for a valid coloring within its bound,
    /// 4 otherwise (either means a bug in the method).
    pub fn exit_code(&self) -> i32 {
        if self.valid && (self.within_bound() || self.fallback_used) {
            0
        } else {
            4
        }
    }

    /// The text report. With `timing` false the output depends only on the
    /// input and flags.
    pub fn render(&self, timing: bool) -> String {
        let mut s = String::new();
        let kv = |s: &mut String, k: &str, v: &dyn std::fmt::Display| {
            writeln!(s, "{k}: {v}").unwrap();
        };
        s.push_str("[HEADER]\n");
        kv(&mut s, "method", &self.method);
        if self.auto {
            kv(&mut s, "requested", &"auto");
        }
        kv(&mut s, "graph", &self.graph);
        kv(&mut s, "n", &self.n);
        kv(&mut s, "m", &self.m);
        s.push_str("\n[PARAMS]\n");
        for (k, v) in &self.params {
            kv(&mut s, k, v);
        }
        s.push_str("\n[BOUND]\n");
        kv(&mut s, "declared_bound", &self.declared_bound);
        kv(&mut s, "colors_used", &self.colors_used);
        kv(&mut s, "within_bound", &self.within_bound());
        s.push_str("\n[COLORING]\n```\n");
        s.push_str(&self.coloring.to_text());
        s.push_str("```\n\n[WITNESS]\n```\n");
        for (v, u) in self.witness.iter().enumerate() {
            match u {
                Some(u) => writeln!(s, "{} {}", v + 1, u).unwrap(),
                None => writeln!(s, "{} -", v + 1).unwrap(),
            }
        }
        s.push_str("```\n");
        if !self.audit.is_empty() {
            s.push_str("\n[AUDIT]\n");
            for (k, v) in &self.audit {
                kv(&mut s, k, v);
            }
        }
        s.push_str("\n[VERDICT]\n");
        kv(&mut s, "variant", &self.variant.name());
        kv(&mut s, "valid", &self.valid);
        kv(&mut s, "fallback_used", &self.fallback_used);
        for (v, why) in &self.violations {
            writeln!(s, "violation: vertex {}: {}", v + 1, why).unwrap();
        }
        if timing {
            kv(&mut s, "time_ms", &format!("{:.3}", self.elapsed.as_secs_f64() * 1e3));
        }
        s
    }
}
