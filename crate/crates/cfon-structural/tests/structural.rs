use cfon_structural::*;
use decomposition::compute_cluster_modulator_exact;
use graph_core::generate::*;
use graph_core::{Graph, VertexSet};
use proptest::prelude::*;
use verify_exact::{exact_chi_cn, exact_chi_on, verify_cfcn, verify_cfon};

fn set(v: &[usize]) -> VertexSet {
    VertexSet::new(v.to_vec())
}

#[test]
fn nd_open_examples() {
    let k23 = complete_bipartite(2, 3).unwrap();
    let run = cfon_by_nd(&k23).unwrap();
    assert_eq!((run.chi_h, run.bound, run.colors_used), (1, 3, 2));
    assert!(verify_cfon(&k23, &run.coloring).unwrap().valid);

    let k4 = complete(4).unwrap();
    let run = cfon_by_nd(&k4).unwrap();
    assert_eq!(run.colors_used, 3);
    assert!(verify_cfon(&k4, &run.coloring).unwrap().valid);
    // (1,1,2,2) already works on K4
    assert_eq!(exact_chi_on(&k4, 12).unwrap().0, 2);

    // all classes singletons: nothing gets color 0
    let c5 = cycle(5).unwrap();
    let run = cfon_by_nd(&c5).unwrap();
    assert_eq!(run.colors_used as u32, run.chi_h);
    assert!(run.bad_log.is_empty());

    // star: leaves form one independent class, never bad
    let s = star(4).unwrap();
    let run = cfon_by_nd(&s).unwrap();
    assert!(run.bad_log.is_empty());
    assert_eq!(run.colors_used as u32, run.chi_h + 1);
}

#[test]
fn nd_open_repairs_bad_cliques() {
    // twin cliques {0,1,2} and {3,4,5}, both joined to the hub 6
    let g = Graph::from_edges(
        7,
        &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 6), (1, 6), (2, 6), (3, 6), (4, 6), (5, 6)],
    )
    .unwrap();
    let run = cfon_by_nd(&g).unwrap();
    assert!(verify_cfon(&g, &run.coloring).unwrap().valid);
    assert!(run.colors_used <= run.bound);
    assert!(!run.bad_log.is_empty());
}

#[test]
fn nd_closed_examples() {
    let k23 = complete_bipartite(2, 3).unwrap();
    let run = cfcn_by_nd(&k23).unwrap();
    assert!(verify_cfcn(&k23, &run.coloring).unwrap().valid && run.colors_used <= run.bound);

    let k5 = complete(5).unwrap();
    let run = cfcn_by_nd(&k5).unwrap();
    assert_eq!(run.chi_h, 1);
    assert_eq!(run.colors_used, 2);
    assert!(run.colors_used <= run.bound && verify_cfcn(&k5, &run.coloring).unwrap().valid);
}

#[test]
fn dc_open_examples() {
    let k4 = complete(4).unwrap();
    let run = cfon_by_dc(&k4, &set(&[])).unwrap();
    assert_eq!(run.coloring.colors, vec![Some(1), Some(2), Some(3), Some(3)]);

    let ks = subdivided_clique(4).unwrap();
    let run = cfon_by_dc(&ks, &set(&[0, 1, 2, 3])).unwrap();
    assert!(verify_cfon(&ks, &run.coloring).unwrap().valid);
    assert!(run.colors_used <= 7 && run.colors_used >= 4);

    let p3 = path(3).unwrap();
    let run = cfon_by_dc(&p3, &set(&[1])).unwrap();
    assert!(verify_cfon(&p3, &run.coloring).unwrap().valid && run.colors_used <= 4);
    assert_eq!(exact_chi_on(&p3, 12).unwrap().0, 2);

    assert!(matches!(cfon_by_dc(&path(4).unwrap(), &set(&[])), Err(StructuralError::BadModulator)));
}

#[test]
fn dc_closed_examples() {
    let k4 = complete(4).unwrap();
    let run = cfcn_by_dc(&k4, &set(&[])).unwrap();
    assert!(run.colors_used <= 3 && verify_cfcn(&k4, &run.coloring).unwrap().valid);

    let p3 = path(3).unwrap();
    let run = cfcn_by_dc(&p3, &set(&[1])).unwrap();
    assert!(run.colors_used <= 3 && verify_cfcn(&p3, &run.coloring).unwrap().valid);

    // modulator {0,1} with an edge inside it
    let g = Graph::from_edges(6, &[(0, 1), (0, 2), (2, 3), (1, 4), (4, 5), (1, 3)]).unwrap();
    let run = cfcn_by_dc(&g, &set(&[0, 1])).unwrap();
    assert!(matches!(run.steps[..], [DcCase::ClosedEdge { .. }]));
    assert!(run.colors_used <= 3 && verify_cfcn(&g, &run.coloring).unwrap().valid);
}

#[test]
fn subdivided_k4_distance_to_cluster() {
    let ks = subdivided_clique(4).unwrap();
    let x = compute_cluster_modulator_exact(&ks, 6).unwrap();
    assert_eq!(x.len(), 4);
    let run = cfon_by_dc(&ks, &x).unwrap();
    assert!(verify_cfon(&ks, &run.coloring).unwrap().valid && run.colors_used <= 7);
}

fn check_nd(g: &Graph) -> Result<(), TestCaseError> {
    let small = g.n() <= 10;
    let on = cfon_by_nd(g).unwrap();
    prop_assert!(verify_cfon(g, &on.coloring).unwrap().valid, "{:?} {:?}", g.edges(), on);
    prop_assert!(on.colors_used <= on.bound);
    prop_assert!(on.partition.check(g));
    let cn = cfcn_by_nd(g).unwrap();
    prop_assert!(verify_cfcn(g, &cn.coloring).unwrap().valid, "{:?} {:?}", g.edges(), cn);
    prop_assert!(cn.colors_used <= cn.bound);
    if small {
        prop_assert!(on.colors_used as u32 >= exact_chi_on(g, 12).unwrap().0);
        prop_assert!(cn.colors_used as u32 >= exact_chi_cn(g, 12).unwrap().0);
    }
    prop_assert_eq!(&on, &cfon_by_nd(g).unwrap());
    Ok(())
}

fn check_dc(g: &Graph, x: &VertexSet) -> Result<(), TestCaseError> {
    let on = cfon_by_dc(g, x).unwrap();
    prop_assert!(verify_cfon(g, &on.coloring).unwrap().valid, "{:?} X={:?} {:?}", g.edges(), x, on);
    prop_assert!(on.colors_used <= x.len() + 3);
    let cn = cfcn_by_dc(g, x).unwrap();
    prop_assert!(verify_cfcn(g, &cn.coloring).unwrap().valid, "{:?} X={:?} {:?}", g.edges(), x, cn);
    prop_assert!(cn.colors_used <= 3.max(x.len() + 1));
    if g.n() <= 10 {
        prop_assert!(on.colors_used as u32 >= exact_chi_on(g, 12).unwrap().0);
        prop_assert!(cn.colors_used as u32 >= exact_chi_cn(g, 12).unwrap().0);
    }
    Ok(())
}

fn cases(default: u32) -> u32 {
    std::env::var("PROPTEST_CASES").ok().and_then(|s| s.parse().ok()).unwrap_or(default)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(cases(200)))]

    #[test]
    fn nd_on_bounded_diversity(types in 2usize..7, max_class in 1usize..4, seed in any::<u64>()) {
        let (g, _) = random_bounded_nd(types, max_class, seed).unwrap();
        check_nd(&g)?;
    }

    #[test]
    fn nd_on_random_graphs(n in 2usize..10, p in 0.2f64..0.9, seed in any::<u64>()) {
        check_nd(&random_connected(n, p, seed).unwrap())?;
    }

    #[test]
    fn dc_on_planted(sizes in prop::collection::vec(1usize..4, 1..4), d in 1usize..4, seed in any::<u64>()) {
        let (g, x) = random_cluster_plus_modulator(&sizes, d, seed).unwrap();
        check_dc(&g, &x)?;
    }

    #[test]
    fn dc_on_random_graphs(n in 2usize..10, p in 0.2f64..0.9, seed in any::<u64>(), mask in any::<u16>()) {
        let g = random_connected(n, p, seed).unwrap();
        let x = compute_cluster_modulator_exact(&g, n).unwrap();
        check_dc(&g, &x)?;
        let wider: VertexSet = (0..n).filter(|&v| x.contains(v) || mask >> v & 1 == 1).collect();
        check_dc(&g, &wider)?;
    }
}
