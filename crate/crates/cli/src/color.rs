use std::time::Instant;

use cfon_outerplanar::{color_outerplanar, is_outerplanar};
use cfon_pathwidth::color_by_pathwidth;
use cfon_planar::{partial_cfon_outerplanar, partial_cfon_planar, PartialRun};
use decomposition::{
    compute_cluster_modulator_exact, compute_fvs_exact, make_nice, make_semi_nice, parse_path_decomposition,
    parse_semi_nice, semi_nice_exact, validate_path_decomposition, validate_semi_nice, SemiNicePathDecomposition,
};
use graph_core::{parse_vertex_list, Graph, VertexSet};
use verify_exact::{cap_from_env, Variant};

use crate::report::{Draft, Report};
use crate::{CliError, CERT_K_MAX};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Pathwidth,
    Fvs,
    Nd,
    Dc,
    PlanarPartial,
    OuterplanarPartial,
    Outerplanar,
    Auto,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Pathwidth => "pathwidth",
            Method::Fvs => "fvs",
            Method::Nd => "nd",
            Method::Dc => "dc",
            Method::PlanarPartial => "planar-partial",
            Method::OuterplanarPartial => "outerplanar-partial",
            Method::Outerplanar => "outerplanar",
            Method::Auto => "auto",
        }
    }
}

/// Optional inputs of `cfon color`, as file contents.
#[derive(Clone, Debug, Default)]
pub struct ColorInput {
    pub decomposition: Option<String>,
    pub certificate: Option<String>,
    pub seed: Option<u64>,
}

pub(crate) fn ids(vs: &[usize]) -> String {
    if vs.is_empty() {
        return "-".into();
    }
    vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn p(k: &str, v: impl ToString) -> (String, String) {
    (k.to_string(), v.to_string())
}

pub fn color(g: &Graph, graph_name: &str, method: Method, input: &ColorInput) -> Result<Report, CliError> {
    let start = Instant::now();
    g.require_no_isolated()?;
    g.require_connected()?;
    if input.decomposition.is_some() && method != Method::Pathwidth {
        return Err(CliError::Precondition("--decomposition is only used by --method pathwidth".into()));
    }
    if input.certificate.is_some() && !matches!(method, Method::Fvs | Method::Dc) {
        return Err(CliError::Precondition("--certificate is only used by --method fvs or dc".into()));
    }
    let (chosen, auto) = match method {
        Method::Auto => (pick_auto(g), true),
        m => (m, false),
    };
    let mut draft = run(g, chosen, input)?;
    if let Some(seed) = input.seed {
        // every method is deterministic; the seed is only echoed
        draft.params.push(p("seed", seed));
    }
    Report::new(g, graph_name, draft, auto, start.elapsed())
}

/// First applicable method in the fixed order outerplanar, fvs, dc,
/// pathwidth, planar-partial.
pub fn pick_auto(g: &Graph) -> Method {
    if is_outerplanar(g) {
        Method::Outerplanar
    } else if compute_fvs_exact(g, CERT_K_MAX).is_some() {
        Method::Fvs
    } else if compute_cluster_modulator_exact(g, CERT_K_MAX).is_some() {
        Method::Dc
    } else if g.n() <= cap_from_env() {
        Method::Pathwidth
    } else {
        Method::PlanarPartial
    }
}

fn certificate(g: &Graph, text: Option<&str>, exact: impl Fn() -> Option<VertexSet>, what: &str) -> Result<(VertexSet, &'static str), CliError> {
    match text {
        Some(t) => Ok((parse_vertex_list(t, g.n())?, "file")),
        None => exact()
            .map(|s| (s, "exact"))
            .ok_or_else(|| CliError::Cap(format!("no {what} of size at most {CERT_K_MAX}"))),
    }
}

/// Reads a tagged decomposition, or an untagged one that is then normalized.
pub fn load_decomposition(g: &Graph, text: &str) -> Result<(SemiNicePathDecomposition, &'static str), CliError> {
    let (snd, n, source) = match parse_semi_nice(text) {
        Ok((snd, n)) => (snd, n, "file"),
        Err(tagged) => {
            let (pd, n) = parse_path_decomposition(text).map_err(|_| CliError::from(tagged))?;
            if n != g.n() {
                return Err(CliError::Precondition(format!("decomposition is for {n} vertices, graph has {}", g.n())));
            }
            let bad = validate_path_decomposition(g, &pd);
            if !bad.is_empty() {
                return Err(CliError::Precondition(format!("invalid path decomposition: {bad:?}")));
            }
            (make_semi_nice(g, &make_nice(g, &pd)?)?, n, "file, normalized")
        }
    };
    if n != g.n() {
        return Err(CliError::Precondition(format!("decomposition is for {n} vertices, graph has {}", g.n())));
    }
    if let Some(e) = validate_semi_nice(g, &snd).into_iter().next() {
        return Err(CliError::Precondition(format!("invalid semi-nice decomposition: {e}")));
    }
    Ok((snd, source))
}

fn partial(run: PartialRun, method: &'static str) -> Draft {
    let params = vec![
        p("v0_size", run.partition.v0.len()),
        p("v0", ids(run.partition.v0.members())),
        p("singleton_set", run.singleton_set()),
        p("contracted_n", run.contracted.graph.n()),
        p("contracted_m", run.contracted.graph.m()),
        p("search_nodes", run.nodes),
    ];
    Draft {
        method,
        params,
        declared_bound: run.bound,
        variant: Variant::PartialOpen,
        fallback_used: run.fallback_used,
        coloring: run.coloring,
        audit: vec![],
    }
}

fn run(g: &Graph, method: Method, input: &ColorInput) -> Result<Draft, CliError> {
    let name = method.name();
    let open = |params, bound, coloring, audit| Draft {
        method: name,
        params,
        declared_bound: bound,
        variant: Variant::Open,
        fallback_used: false,
        coloring,
        audit,
    };
    Ok(match method {
        Method::Pathwidth => {
            let (snd, source) = match &input.decomposition {
                Some(t) => load_decomposition(g, t)?,
                None => (semi_nice_exact(g, cap_from_env())?, "exact"),
            };
            let r = color_by_pathwidth(g, &snd)?;
            let params = vec![p("pathwidth", r.width), p("bags", snd.bags.len()), p("decomposition", source)];
            let a = &r.audit;
            let audit = vec![
                p("k_star", a.k_star),
                p("max_bag", a.max_bag),
                p("required_max_bag", (3 * a.k_star).div_ceil(2)),
                p("skipped_bags", a.skipped),
                p("holds", a.holds),
            ];
            open(params, r.bound, r.coloring, audit)
        }
        Method::Fvs => {
            let (f, source) = certificate(g, input.certificate.as_deref(), || compute_fvs_exact(g, CERT_K_MAX), "feedback vertex set")?;
            let r = cfon_fvs::color_by_fvs(g, &f)?;
            let params = vec![p("fvs_size", f.len()), p("fvs", ids(f.members())), p("certificate", source)];
            open(params, r.bound, r.coloring, vec![])
        }
        Method::Nd => {
            let r = cfon_structural::cfon_by_nd(g)?;
            let params = vec![
                p("nd", r.partition.classes.len()),
                p("cl", r.partition.cl()),
                p("ind", r.partition.ind()),
                p("chi_on_type_graph", r.chi_h),
            ];
            let audit = vec![p("bad_sets", r.bad_log.len())];
            open(params, r.bound, r.coloring, audit)
        }
        Method::Dc => {
            let (x, source) = certificate(
                g,
                input.certificate.as_deref(),
                || compute_cluster_modulator_exact(g, CERT_K_MAX),
                "cluster modulator",
            )?;
            let r = cfon_structural::cfon_by_dc(g, &x)?;
            let params = vec![p("dc", x.len()), p("modulator", ids(x.members())), p("certificate", source)];
            open(params, r.bound, r.coloring, vec![])
        }
        Method::PlanarPartial => partial(partial_cfon_planar(g)?, name),
        Method::OuterplanarPartial => partial(partial_cfon_outerplanar(g)?, name),
        Method::Outerplanar => {
            let r = color_outerplanar(g)?;
            let params = vec![
                p("blocks", r.blocks.blocks.len()),
                p("cut_vertices", r.blocks.cut_vertices.len()),
                p("pentagons_only", r.pentagons_only),
                p("steps", r.steps.len()),
            ];
            let audit = vec![p("star_exempt_edges", r.exempt.len())];
            open(params, r.bound, r.coloring, audit)
        }
        Method::Auto => unreachable!("auto is resolved before dispatch"),
    })
}
