use cfon_planar::*;
use graph_core::generate::*;
use graph_core::{Graph, VertexSet};
use proptest::prelude::*;
use verify_exact::{exact_chi_on_partial, verify_partial_cfon};

fn set(v: &[usize]) -> VertexSet {
    VertexSet::new(v.to_vec())
}

fn icosahedron() -> Graph {
    let mut e = vec![];
    for i in 1..=5 {
        let next = i % 5 + 1;
        e.push((0, i));
        e.push((i, next));
        e.push((i + 5, next + 5));
        e.push((11, i + 5));
        e.push((i, i + 5));
        e.push((i, next + 5));
    }
    Graph::from_edges(12, &e).unwrap()
}

#[test]
fn distance3_examples() {
    let p7 = path(7).unwrap();
    let s = maximal_distance3_set(&p7, 0);
    assert_eq!(s, set(&[0, 3, 6]));
    assert!(check_distance3(&p7, &s).is_empty());
    let st = star(5).unwrap();
    assert_eq!(maximal_distance3_set(&st, 0), set(&[0]));
    let c6 = cycle(6).unwrap();
    let s = maximal_distance3_set(&c6, 0);
    assert_eq!(s, set(&[0, 3]));
    assert!(check_distance3(&c6, &s).is_empty());
    // {0} alone misses vertex 3 of P7
    assert!(!check_distance3(&p7, &set(&[0])).is_empty());
}

#[test]
fn contraction_examples() {
    let p5 = path(5).unwrap();
    let p = Distance3Partition::new(&p5, set(&[0, 3]));
    assert_eq!((p.v1.clone(), p.v2.clone()), (set(&[1, 2, 4]), set(&[])));
    assert_eq!((p.f[&0], p.f[&3]), (1, 2));
    let c = build_contracted_graph(&p5, &p);
    assert_eq!(c.to_original, vec![1, 2, 4]);
    assert_eq!(c.graph.edges(), vec![(0, 1), (1, 2)]);

    // pendants only: G' is the core
    let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 0), (4, 1), (5, 2)]).unwrap();
    let p = Distance3Partition::new(&g, set(&[3, 4, 5]));
    assert!(p.check(&g).is_empty());
    let c = build_contracted_graph(&g, &p);
    assert_eq!(c.graph.edges(), vec![(0, 1), (0, 2), (1, 2)]);
}

#[test]
fn proper_coloring_examples() {
    let p3 = path(3).unwrap();
    assert_eq!(proper_coloring(&p3, 4, DEFAULT_BUDGET).0, ProperOutcome::Colored(vec![0, 1, 0]));
    let k4 = complete(4).unwrap();
    assert_eq!(proper_coloring(&k4, 3, DEFAULT_BUDGET).0, ProperOutcome::Infeasible);
    assert!(matches!(proper_coloring(&k4, 4, DEFAULT_BUDGET).0, ProperOutcome::Colored(_)));
    assert_eq!(proper_coloring(&complete(6).unwrap(), 5, 3).0, ProperOutcome::BudgetExhausted);

    let c5 = cycle(5).unwrap();
    let col = proper_color_planar5(&c5).unwrap();
    assert!(is_proper(&c5, &col) && col.iter().all(|&c| c < 5));
    let col = proper_color_planar5(&k4).unwrap();
    assert!(is_proper(&k4, &col));
    let ico = icosahedron();
    assert!(ico.edges().len() == 30 && (0..12).all(|v| ico.degree(v) == 5));
    let col = proper_color_planar5(&ico).unwrap();
    assert!(is_proper(&ico, &col) && col.iter().all(|&c| c < 5));
    assert!(proper_color_planar5(&complete(7).unwrap()).is_err());
}

#[test]
fn planar_pipeline_examples() {
    let p5 = path(5).unwrap();
    let run = partial_cfon_planar(&p5).unwrap();
    assert_eq!(run.coloring.colors, vec![Some(1), Some(2), Some(3), Some(1), Some(2)]);
    assert!(verify_partial_cfon(&p5, &run.coloring).unwrap().valid);

    let k = subdivided_k4_with_pendants();
    let run = partial_cfon_planar(&k).unwrap();
    assert!(verify_partial_cfon(&k, &run.coloring).unwrap().valid);
    assert!(run.colors_used <= 5 && !run.fallback_used);

    let c6 = cycle(6).unwrap();
    let run = partial_cfon_planar(&c6).unwrap();
    assert!(verify_partial_cfon(&c6, &run.coloring).unwrap().valid && run.colors_used <= 5);

    let ico = icosahedron();
    let run = partial_cfon_planar(&ico).unwrap();
    assert_eq!(run.partition.v0, set(&[0, 11]));
    assert!(verify_partial_cfon(&ico, &run.coloring).unwrap().valid);

    let wheel = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap();
    let run = partial_cfon_planar(&wheel).unwrap();
    assert!(run.singleton_set());
    assert!(verify_partial_cfon(&wheel, &run.coloring).unwrap().valid);
}

#[test]
fn outerplanar_pipeline_examples() {
    let c5 = cycle(5).unwrap();
    let run = partial_cfon_outerplanar(&c5).unwrap();
    assert!(verify_partial_cfon(&c5, &run.coloring).unwrap().valid && run.colors_used <= 4);

    let hex = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (0, 3), (0, 4)]).unwrap();
    let run = partial_cfon_outerplanar(&hex).unwrap();
    assert!(verify_partial_cfon(&hex, &run.coloring).unwrap().valid && run.colors_used <= 4);

    // K4 contracts to a triangle, which 3 colors handle; K5 contracts to K4
    let k4 = complete(4).unwrap();
    assert!(partial_cfon_outerplanar(&k4).is_ok());
    assert!(matches!(
        partial_cfon_outerplanar(&complete(5).unwrap()),
        Err(PlanarError::ProperColoring { k: 3, .. })
    ));
}

fn check(g: &Graph, run: &PartialRun, max: usize) -> Result<(), TestCaseError> {
    prop_assert!(verify_partial_cfon(g, &run.coloring).unwrap().valid);
    prop_assert!(run.partition.check(g).is_empty());
    prop_assert!(check_distance3(g, &run.partition.v0).is_empty());
    prop_assert!(run.contracted.graph.m() <= g.m());
    prop_assert!(run.colors_used <= max);
    if g.n() <= 10 {
        prop_assert!(run.colors_used as u32 >= exact_chi_on_partial(g, 12).unwrap().0);
    }
    Ok(())
}

fn cases(default: u32) -> u32 {
    std::env::var("PROPTEST_CASES").ok().and_then(|s| s.parse().ok()).unwrap_or(default)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(cases(200)))]

    #[test]
    fn random_planar_graphs(n in 3usize..31, seed in any::<u64>()) {
        let g = random_planar(n, seed).unwrap();
        let run = partial_cfon_planar(&g).unwrap();
        prop_assert!(!run.fallback_used);
        check(&g, &run, 5)?;
        let col = proper_color_planar5(&g).unwrap();
        prop_assert!(is_proper(&g, &col));
    }

    #[test]
    fn random_outerplanar_graphs(n in 3usize..31, seed in any::<u64>()) {
        let g = random_maximal_outerplanar(n, seed).unwrap();
        check(&g, &partial_cfon_outerplanar(&g).unwrap(), 4)?;
    }

    #[test]
    fn random_trees(n in 2usize..25, seed in any::<u64>()) {
        let g = random_tree(n, seed).unwrap();
        check(&g, &partial_cfon_outerplanar(&g).unwrap(), 4)?;
    }
}
