//! Acceptance run: one PASS/FAIL line per criterion.
//!
//!     cargo test --release -p cli --test acceptance -- --nocapture
//!
//! Criteria run on parallel threads; each line carries its own wall time and
//! the budget it is held to.

use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use cfon_cli::{color, dc_reserved_audit, nd_bad_set_audit, ColorInput, Method};
use cfon_fvs::{color_by_fvs, color_tree, RootedTree};
use cfon_outerplanar::{color_outerplanar, is_outerplanar};
use cfon_pathwidth::{bound_for_width, color_by_pathwidth};
use cfon_planar::{partial_cfon_outerplanar, partial_cfon_planar};
use cfon_structural::{cfcn_by_dc, cfcn_by_nd, cfon_by_dc, cfon_by_nd};
use decomposition::{compute_cluster_modulator_exact, compute_fvs_exact, semi_nice_exact};
use graph_core::generate::*;
use graph_core::{Coloring, Graph};
use petgraph::graph::UnGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use verify_exact::{exact_chi_cn, exact_chi_on, exact_chi_on_partial, verify_cfcn, verify_cfon, verify_partial_cfon};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

type Bucket = Vec<(UnGraph<(), ()>, usize)>;

/// Isomorphism classes: buckets keyed by a degree invariant, VF2 inside.
#[derive(Default)]
struct Classes {
    buckets: HashMap<Vec<usize>, Bucket>,
    reps: Vec<Graph>,
}

impl Classes {
    fn class_of(&mut self, g: &Graph) -> usize {
        let deg = |v: usize| g.degree(v);
        let mut inv: Vec<Vec<usize>> = (0..g.n())
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| deg(w)).collect();
                nb.sort_unstable();
                nb.insert(0, deg(v));
                nb
            })
            .collect();
        inv.sort();
        let mut key = vec![g.n(), g.m()];
        for row in inv {
            key.push(usize::MAX);
            key.extend(row);
        }
        let mut pg = UnGraph::<(), ()>::from_edges(g.edges().iter().map(|&(a, b)| (a as u32, b as u32)));
        while pg.node_count() < g.n() {
            pg.add_node(());
        }
        let bucket = self.buckets.entry(key).or_default();
        for (h, id) in bucket.iter() {
            if petgraph::algo::is_isomorphic(h, &pg) {
                return *id;
            }
        }
        let id = self.reps.len();
        bucket.push((pg, id));
        self.reps.push(g.clone());
        id
    }
}

/// Connected graphs on `0..n` spanned by the polygon sides and the chords of
/// one triangulation; up to isomorphism this is every connected outerplanar
/// graph on n vertices.
fn polygon_subgraphs(n: usize) -> Vec<Graph> {
    if n == 2 {
        return vec![path(2).unwrap()];
    }
    let mut out = Vec::new();
    for tri in polygon_triangulations(n) {
        let mut all: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        all.extend(tri);
        let m = all.len();
        for mask in 0u32..1 << m {
            if (mask.count_ones() as usize) < n - 1 {
                continue;
            }
            let e: Vec<(usize, usize)> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| all[i]).collect();
            let h = Graph::from_edges(n, &e).unwrap();
            if h.is_connected() {
                out.push(h);
            }
        }
    }
    out
}

/// Every labelled graph on n vertices without isolated vertices.
fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    (0u64..1 << pairs.len())
        .filter_map(|mask| {
            let e: Vec<(usize, usize)> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            let g = Graph::from_edges(n, &e).unwrap();
            g.isolated_vertices().is_empty().then_some(g)
        })
        .collect()
}

fn c1_tight_family() -> Outcome {
    let mut parts = Vec::new();
    for n in 3..=5 {
        let g = subdivided_clique(n).unwrap();
        let (chi, _) = exact_chi_on(&g, 15).map_err(|e| e.to_string())?;
        ensure(chi as usize == n, || format!("exact chi_ON(K*{n}) = {chi}, expected {n}"))?;
        let f = compute_fvs_exact(&g, n).ok_or("no FVS found")?;
        ensure(f.len() == n - 2, || format!("fvs(K*{n}) = {}, expected {}", f.len(), n - 2))?;
        let r = color_by_fvs(&g, &f).map_err(|e| e.to_string())?;
        ensure(verify_cfon(&g, &r.coloring).unwrap().valid, || format!("K*{n}: fvs coloring invalid"))?;
        ensure(r.colors_used == n, || format!("K*{n}: fvs coloring uses {}, expected {n}", r.colors_used))?;
        parts.push(format!("K*{n}: chi={chi} fvs={} used={}", f.len(), r.colors_used));
    }
    Ok(parts.join("; "))
}

fn c2_trees() -> Outcome {
    let mut max_n = 0;
    for seed in 1..=200u64 {
        let n = rng(seed).gen_range(2..=200);
        max_n = max_n.max(n);
        let g = random_tree(n, seed).unwrap();
        let all: Vec<usize> = (0..n).collect();
        let t = RootedTree::new(&g, &all, 0);
        let pairs = color_tree(&t, (1, 2)).map_err(|e| e.to_string())?;
        let mut colors = vec![0; n];
        for (v, c) in pairs {
            colors[v] = c;
        }
        let c = Coloring::total(colors);
        ensure(verify_cfon(&g, &c).unwrap().valid, || format!("seed {seed}: tree coloring invalid"))?;
        ensure(c.colors_used() <= 2, || format!("seed {seed}: {} colors", c.colors_used()))?;
    }
    Ok(format!("200 trees, n up to {max_n}, all verified with <= 2 colors"))
}

fn c3_pathwidth() -> Outcome {
    let mut cases: Vec<Graph> = Vec::new();
    // all trees up to 8 vertices, up to isomorphism
    let mut trees = Classes::default();
    for n in 2..=8usize {
        if n == 2 {
            trees.class_of(&path(2).unwrap());
            continue;
        }
        let mut seq = vec![0usize; n - 2];
        loop {
            trees.class_of(&tree_from_pruefer(&seq));
            let Some(i) = seq.iter().rposition(|&x| x + 1 < n) else { break };
            seq[i] += 1;
            for x in &mut seq[i + 1..] {
                *x = 0;
            }
        }
    }
    let n_trees = trees.reps.len();
    cases.extend(trees.reps);
    cases.extend((3..=8).map(|n| cycle(n).unwrap()));
    for seed in 0..500u64 {
        let mut r = rng(1000 + seed);
        let n = r.gen_range(2..=8);
        let p = r.gen_range(0.15..0.9);
        cases.push(random_connected(n, p, seed).unwrap());
    }
    let mut worst = 0usize;
    for g in &cases {
        let snd = semi_nice_exact(g, 12).map_err(|e| e.to_string())?;
        let r = color_by_pathwidth(g, &snd).map_err(|e| format!("{:?}: {e}", g.edges()))?;
        ensure(verify_cfon(g, &r.coloring).unwrap().valid, || format!("{:?}: invalid", g.edges()))?;
        let bound = bound_for_width(r.width);
        ensure(bound == 5 * (r.width + 1) / 3, || "bound formula".into())?;
        ensure(r.colors_used <= bound, || format!("{:?}: {} colors > {bound}", g.edges(), r.colors_used))?;
        let a = &r.audit;
        ensure(a.skipped == 0 && a.max_bag >= ceil_div(3 * a.k_star, 2), || {
            format!("{:?}: audit k*={} max bag={} skipped={}", g.edges(), a.k_star, a.max_bag, a.skipped)
        })?;
        worst = worst.max(r.colors_used);
    }
    Ok(format!(
        "{} graphs ({n_trees} trees, 6 cycles, 500 random), all within floor(5(pw+1)/3), audit holds; max colors {worst}",
        cases.len()
    ))
}

fn c4_fvs() -> Outcome {
    let mut above = 0;
    for seed in 0..500u64 {
        let mut r = rng(2000 + seed);
        let n = r.gen_range(2..=10);
        let p = r.gen_range(0.1..0.9);
        let g = random_connected(n, p, seed).unwrap();
        let f = compute_fvs_exact(&g, n).ok_or("no FVS")?;
        let run = color_by_fvs(&g, &f).map_err(|e| format!("{:?}: {e}", g.edges()))?;
        ensure(verify_cfon(&g, &run.coloring).unwrap().valid, || format!("{:?}: invalid", g.edges()))?;
        ensure(run.colors_used <= f.len() + 2, || format!("{:?}: {} > fvs+2", g.edges(), run.colors_used))?;
        let (opt, _) = exact_chi_on(&g, 12).map_err(|e| e.to_string())?;
        ensure(run.colors_used >= opt as usize, || format!("{:?}: below the optimum {opt}", g.edges()))?;
        if run.colors_used > opt as usize {
            above += 1;
        }
    }
    Ok(format!("500 graphs verified within fvs+2 and >= optimum ({above} above optimum)"))
}

fn c5_nd() -> Outcome {
    let mut bad_total = 0;
    for seed in 0..200u64 {
        let mut r = rng(3000 + seed);
        let types = r.gen_range(2..=6);
        let max_class = r.gen_range(1..=4);
        let (g, _) = random_bounded_nd(types, max_class, seed).unwrap();
        let on = cfon_by_nd(&g).map_err(|e| e.to_string())?;
        let cn = cfcn_by_nd(&g).map_err(|e| e.to_string())?;
        ensure(verify_cfon(&g, &on.coloring).unwrap().valid, || format!("seed {seed}: open lifting invalid"))?;
        ensure(verify_cfcn(&g, &cn.coloring).unwrap().valid, || format!("seed {seed}: closed lifting invalid"))?;
        let h = &on.partition.type_graph;
        let (open_bound, closed_bound) = if h.n() >= 2 {
            let chi_on = exact_chi_on(h, 12).map_err(|e| e.to_string())?.0 as usize;
            let chi_cn = exact_chi_cn(h, 12).map_err(|e| e.to_string())?.0 as usize;
            (
                chi_on + ceil_div(on.partition.cl(), 2) + 2,
                chi_cn + ceil_div(on.partition.ind(), 3) + 3,
            )
        } else {
            // one clique class: colored directly
            (3, 3)
        };
        ensure(on.colors_used <= open_bound, || format!("seed {seed}: open {} > {open_bound}", on.colors_used))?;
        ensure(cn.colors_used <= closed_bound, || format!("seed {seed}: closed {} > {closed_bound}", cn.colors_used))?;
        let mut audit = nd_bad_set_audit(&on, false);
        audit.extend(nd_bad_set_audit(&cn, true));
        ensure(audit.is_empty(), || format!("seed {seed}: {audit:?}"))?;
        bad_total += on.bad_log.len() + cn.bad_log.len();
    }
    Ok(format!("200 graphs, both liftings within bounds, {bad_total} bad sets each fixed once"))
}

fn c6_dc() -> Outcome {
    for seed in 0..200u64 {
        let mut r = rng(4000 + seed);
        let k = r.gen_range(1..=4);
        let cliques: Vec<usize> = (0..k).map(|_| r.gen_range(1..=4)).collect();
        let d = r.gen_range(1..=6);
        let (g, x) = random_cluster_plus_modulator(&cliques, d, seed).unwrap();
        let on = cfon_by_dc(&g, &x).map_err(|e| e.to_string())?;
        let cn = cfcn_by_dc(&g, &x).map_err(|e| e.to_string())?;
        ensure(verify_cfon(&g, &on.coloring).unwrap().valid, || format!("seed {seed}: open invalid"))?;
        ensure(verify_cfcn(&g, &cn.coloring).unwrap().valid, || format!("seed {seed}: closed invalid"))?;
        ensure(on.colors_used <= d + 3, || format!("seed {seed}: open {} > d+3", on.colors_used))?;
        ensure(cn.colors_used <= 3.max(d + 1), || format!("seed {seed}: closed {} > max(3, d+1)", cn.colors_used))?;
        let audit = dc_reserved_audit(&g, &x, &on);
        ensure(audit.is_empty(), || format!("seed {seed}: {audit:?}"))?;
    }
    let ks = subdivided_clique(4).unwrap();
    let x = compute_cluster_modulator_exact(&ks, 10).ok_or("no modulator for K*4")?;
    ensure(x.len() == 4, || format!("dc(K*4) = {}", x.len()))?;
    Ok("200 planted instances within d+3 and max(3, d+1), reserved colors single-use; dc(K*4) = 4".into())
}

fn c7_planar() -> Outcome {
    let mut worst = 0;
    for seed in 0..100u64 {
        let n = rng(5000 + seed).gen_range(4..=30);
        let g = random_planar(n, seed).unwrap();
        let r = partial_cfon_planar(&g).map_err(|e| e.to_string())?;
        ensure(!r.fallback_used, || format!("seed {seed}: fallback used"))?;
        ensure(verify_partial_cfon(&g, &r.coloring).unwrap().valid, || format!("seed {seed}: invalid"))?;
        ensure(r.colors_used <= 5, || format!("seed {seed}: {} colors", r.colors_used))?;
        worst = worst.max(r.colors_used);
    }
    let g = subdivided_k4_with_pendants();
    let (chi, _) = exact_chi_on_partial(&g, g.n()).map_err(|e| e.to_string())?;
    ensure(chi == 4, || format!("partial chi of the lower-bound graph is {chi}"))?;
    Ok(format!("100 planar graphs, max {worst} colors, no fallback; lower-bound graph needs {chi}"))
}

fn c8_outerplanar_partial() -> Outcome {
    for seed in 0..100u64 {
        let n = rng(6000 + seed).gen_range(3..=100);
        let g = random_maximal_outerplanar(n, seed).unwrap();
        let r = partial_cfon_outerplanar(&g).map_err(|e| e.to_string())?;
        ensure(verify_partial_cfon(&g, &r.coloring).unwrap().valid, || format!("seed {seed}: invalid"))?;
        ensure(r.colors_used <= 4, || format!("seed {seed}: {} colors", r.colors_used))?;
    }
    Ok("100 maximal outerplanar graphs, verified with <= 4 colors".into())
}

fn check_full(g: &Graph) -> Result<usize, String> {
    let r = color_outerplanar(g).map_err(|e| format!("{:?}: {e}", g.edges()))?;
    ensure(verify_cfon(g, &r.coloring).unwrap().valid, || format!("{:?}: invalid", g.edges()))?;
    ensure(r.colors_used <= 4, || format!("{:?}: {} colors", g.edges(), r.colors_used))?;
    Ok(r.colors_used)
}

fn c9_outerplanar() -> Outcome {
    // (a) every connected outerplanar graph on at most 8 vertices
    let mut classes = Classes::default();
    let mut labelled = 0;
    let mut per_class: Vec<usize> = Vec::new();
    for n in 2..=8 {
        for g in polygon_subgraphs(n) {
            ensure(is_outerplanar(&g), || format!("{:?} rejected", g.edges()))?;
            let used = check_full(&g)?;
            let id = classes.class_of(&g);
            if id == per_class.len() {
                per_class.push(used);
            }
            per_class[id] = per_class[id].min(used);
            labelled += 1;
        }
    }
    // up to 6 vertices, cross-check against every graph that passes the filter
    let mut brute = Classes::default();
    for n in 2..=6 {
        for g in all_graphs(n).into_iter().filter(|g| g.is_connected() && is_outerplanar(g)) {
            brute.class_of(&g);
        }
    }
    let small = classes.reps.iter().filter(|g| g.n() <= 6).count();
    ensure(small == brute.reps.len(), || format!("{small} classes from polygons, {} by filtering", brute.reps.len()))?;
    for (id, g) in classes.reps.iter().enumerate() {
        let (opt, _) = exact_chi_on(g, 12).map_err(|e| e.to_string())?;
        ensure(per_class[id] >= opt as usize, || format!("{:?}: below optimum {opt}", g.edges()))?;
    }
    // (b)
    for seed in 0..200u64 {
        let n = rng(7000 + seed).gen_range(3..=200);
        check_full(&random_maximal_outerplanar(n, seed).unwrap())?;
    }
    // (c)
    for k in 1..=30 {
        let g = pentagon_chain(k, true).unwrap();
        let used = check_full(&g)?;
        ensure(used <= 3, || format!("pentagon chain of {k}: {used} colors"))?;
    }
    Ok(format!(
        "(a) {labelled} labelled graphs, {} classes, >= optimum; (b) 200 maximal; (c) 30 pentagon chains <= 3",
        classes.reps.len()
    ))
}

fn c10_oracle() -> Outcome {
    let (p3, _) = exact_chi_on(&path(3).unwrap(), 12).map_err(|e| e.to_string())?;
    let (c5, _) = exact_chi_on(&cycle(5).unwrap(), 12).map_err(|e| e.to_string())?;
    ensure(p3 == 2 && c5 == 3, || format!("P3 -> {p3}, C5 -> {c5}"))?;
    let mut classes = Classes::default();
    for n in 2..=6 {
        for g in all_graphs(n) {
            classes.class_of(&g);
        }
    }
    let mut cases = classes.reps;
    let count = cases.len();
    for seed in 0..100u64 {
        let mut r = rng(8000 + seed);
        let n = r.gen_range(7..=10);
        cases.push(random_connected(n, r.gen_range(0.1..0.8), seed).unwrap());
    }
    for g in &cases {
        let (full, c) = exact_chi_on(g, 12).map_err(|e| e.to_string())?;
        let (part, pc) = exact_chi_on_partial(g, 12).map_err(|e| e.to_string())?;
        ensure(part <= full && full <= part + 1, || format!("{:?}: partial {part}, full {full}", g.edges()))?;
        ensure(verify_cfon(g, &c).unwrap().valid && verify_partial_cfon(g, &pc).unwrap().valid, || {
            format!("{:?}: oracle coloring invalid", g.edges())
        })?;
    }
    Ok(format!("P3=2, C5=3; partial <= full <= partial+1 on {count} classes up to 6 vertices and 100 random"))
}

fn c11_determinism() -> Outcome {
    let graphs = [
        ("path7", path(7).unwrap()),
        ("kstar4", subdivided_clique(4).unwrap()),
        ("outerplanar", random_maximal_outerplanar(11, 3).unwrap()),
        ("planar", random_planar(12, 4).unwrap()),
        ("nd", random_bounded_nd(4, 3, 5).unwrap().0),
    ];
    let methods = [
        Method::Pathwidth,
        Method::Fvs,
        Method::Nd,
        Method::Dc,
        Method::PlanarPartial,
        Method::OuterplanarPartial,
        Method::Outerplanar,
        Method::Auto,
    ];
    let mut runs = 0;
    for (name, g) in &graphs {
        for m in methods {
            let input = ColorInput { seed: Some(11), ..Default::default() };
            let a = color(g, name, m, &input);
            let b = color(g, name, m, &input);
            match (a, b) {
                (Ok(a), Ok(b)) => {
                    ensure(a.render(false) == b.render(false), || format!("{name}/{}: reports differ", m.name()))?;
                    runs += 1;
                }
                (Err(a), Err(b)) => ensure(a == b, || format!("{name}/{}: errors differ", m.name()))?,
                _ => return Err(format!("{name}/{}: one run failed", m.name())),
            }
        }
    }
    let o = random_maximal_outerplanar(40, 9).unwrap();
    ensure(color_outerplanar(&o) == color_outerplanar(&o), || "outerplanar run differs".into())?;
    ensure(cfon_by_nd(&o) == cfon_by_nd(&o), || "nd run differs".into())?;
    Ok(format!("{runs} method/graph pairs give byte-identical reports"))
}

#[test]
fn acceptance() {
    type Criterion = (u32, &'static str, u64, fn() -> Outcome);
    let criteria: [Criterion; 11] = [
        (1, "tight family K*_n", 60, c1_tight_family),
        (2, "tree bound", 1, c2_trees),
        (3, "pathwidth bound", 300, c3_pathwidth),
        (4, "fvs bound", 300, c4_fvs),
        (5, "neighborhood diversity bounds", 120, c5_nd),
        (6, "distance to cluster bounds", 120, c6_dc),
        (7, "planar partial", 600, c7_planar),
        (8, "outerplanar partial", 60, c8_outerplanar_partial),
        (9, "outerplanar full", 600, c9_outerplanar),
        (10, "oracle self-consistency", 600, c10_oracle),
        (11, "determinism", 600, c11_determinism),
    ];
    let results: Vec<(Outcome, Duration)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|&(_, _, _, f)| {
                s.spawn(move || {
                    let t = Instant::now();
                    let out = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
                    (out, t.elapsed())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut failed = BTreeSet::new();
    for ((id, name, budget, _), (out, took)) in criteria.iter().zip(results) {
        let secs = took.as_secs_f64();
        let out = out.and_then(|d| {
            if secs <= *budget as f64 {
                Ok(d)
            } else {
                Err(format!("{d}; but took {secs:.1} s, budget {budget} s"))
            }
        });
        match out {
            Ok(d) => println!("PASS {id:>2} {name}: {d} [{secs:.2} s / {budget} s]"),
            Err(e) => {
                println!("FAIL {id:>2} {name}: {e} [{secs:.2} s / {budget} s]");
                failed.insert(*id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
