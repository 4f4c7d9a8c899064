use decomposition::*;
use graph_core::generate::*;
use graph_core::{parse_edge_list, Graph};
use proptest::prelude::*;

fn pd(bags: &[&[usize]]) -> PathDecomposition {
    PathDecomposition::new(bags.iter().map(|b| b.to_vec()).collect())
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

/// Minimum over all vertex orderings of the largest boundary of a prefix.
fn brute_pathwidth(g: &Graph) -> usize {
    fn perms(rest: &mut Vec<usize>, cur: &mut Vec<usize>, g: &Graph, best: &mut usize) {
        if rest.is_empty() {
            let mut w = 0;
            for i in 0..cur.len() {
                let prefix = &cur[..i];
                let b = prefix.iter().filter(|&&u| g.neighbors(u).iter().any(|w| !prefix.contains(w))).count();
                w = w.max(b);
            }
            *best = (*best).min(w);
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            cur.push(v);
            perms(rest, cur, g, best);
            cur.pop();
            rest.insert(i, v);
        }
    }
    let mut best = usize::MAX;
    perms(&mut (0..g.n()).collect(), &mut Vec::new(), g, &mut best);
    best
}

#[test]
fn validation_examples() {
    let p3 = path(3).unwrap();
    let good = pd(&[&[0, 1], &[1, 2]]);
    assert!(validate_path_decomposition(&p3, &good).is_empty());
    assert_eq!(good.width(), 1);
    assert_eq!(validate_path_decomposition(&p3, &pd(&[&[0, 1], &[2]])), vec![Violation::EdgeUncovered(1, 2)]);
    let e = path(2).unwrap();
    assert_eq!(
        validate_path_decomposition(&e, &pd(&[&[0], &[1], &[0, 1]])),
        vec![Violation::NotContiguous { vertex: 0, bag: 1 }]
    );
}

#[test]
fn nice_examples() {
    let p3 = path(3).unwrap();
    let nice = make_nice(&p3, &pd(&[&[0, 1], &[1, 2]])).unwrap();
    assert_eq!(nice, pd(&[&[], &[0], &[0, 1], &[1], &[1, 2], &[2], &[]]));
    assert_eq!(make_nice(&p3, &nice).unwrap(), nice);
    let e = path(2).unwrap();
    assert_eq!(make_nice(&e, &pd(&[&[0, 1]])).unwrap(), pd(&[&[], &[0], &[0, 1], &[1], &[]]));
    assert!(make_nice(&p3, &pd(&[&[0, 1]])).is_err());
}

#[test]
fn semi_nice_single_edge_becomes_special() {
    let e = path(2).unwrap();
    let nice = pd(&[&[], &[0], &[0, 1], &[1], &[]]);
    let snd = make_semi_nice(&e, &nice).unwrap();
    let tags: Vec<BagTag> = snd.bags.iter().map(|b| b.tag).collect();
    assert_eq!(tags, vec![BagTag::Empty, BagTag::Special(0, 1), BagTag::Forget(0), BagTag::Forget(1)]);
    assert_eq!(snd.untagged(), pd(&[&[], &[0, 1], &[1], &[]]));
    assert!(validate_semi_nice(&e, &snd).is_empty());
}

#[test]
fn semi_nice_p3_only_first_introduce_is_repaired() {
    let p3 = path(3).unwrap();
    let nice = pd(&[&[], &[1], &[0, 1], &[0, 1, 2], &[1, 2], &[2], &[]]);
    // The bag after the empty one can never hold a neighbor, so the center is
    // paired with its first neighbor; the later introduce is already fine.
    let snd = make_semi_nice(&p3, &nice).unwrap();
    assert!(validate_semi_nice(&p3, &snd).is_empty());
    let tags: Vec<BagTag> = snd.bags.iter().map(|b| b.tag).collect();
    assert_eq!(&tags[..3], &[BagTag::Empty, BagTag::Special(1, 0), BagTag::Introduce(2)]);
    let nice2 = pd(&[&[], &[0], &[0, 1], &[0, 1, 2], &[1, 2], &[2], &[]]);
    let snd2 = make_semi_nice(&p3, &nice2).unwrap();
    assert!(validate_semi_nice(&p3, &snd2).is_empty());
    assert_eq!(snd2.untagged().bags.len(), 6);
}

#[test]
fn semi_nice_star() {
    let s = star(3).unwrap();
    // leaf first: delayed until the center arrives
    let nice = pd(&[&[], &[1], &[0, 1], &[0, 1, 2], &[0, 1, 2, 3], &[0, 2, 3], &[0, 3], &[0], &[]]);
    let snd = make_semi_nice(&s, &nice).unwrap();
    assert!(validate_semi_nice(&s, &snd).is_empty());
    assert_eq!(snd.bags[1].tag, BagTag::Special(1, 0));
    assert!(snd.width() <= nice.width());
}

#[test]
fn semi_nice_case_one_delays() {
    // 0 is introduced alone, its neighbor 2 arrives next to 1 which is also adjacent to 2
    let g = parse_edge_list("1 3\n2 3").unwrap();
    let nice = pd(&[&[], &[0], &[0, 1], &[0, 1, 2], &[0, 2], &[2], &[]]);
    let snd = make_semi_nice(&g, &nice).unwrap();
    assert!(validate_semi_nice(&g, &snd).is_empty());
    let tags: Vec<BagTag> = snd.bags.iter().map(|b| b.tag).collect();
    assert!(tags.contains(&BagTag::Introduce(0)));
}

#[test]
fn semi_nice_rejects_isolated() {
    let g = parse_edge_list("p edge 3 1\n1 2").unwrap();
    let nice = pd(&[&[], &[0], &[0, 1], &[1], &[], &[2], &[]]);
    assert!(make_semi_nice(&g, &nice).is_err());
}

#[test]
fn exact_pathwidth_examples() {
    assert_eq!(pathwidth_exact_small(&path(5).unwrap(), 12).unwrap().width(), 1);
    assert_eq!(pathwidth_exact_small(&cycle(5).unwrap(), 12).unwrap().width(), 2);
    assert_eq!(pathwidth_exact_small(&complete(4).unwrap(), 12).unwrap().width(), 3);
    assert!(pathwidth_exact_small(&path(13).unwrap(), 12).is_err());
}

#[test]
fn decomposition_text_round_trip() {
    let g = cycle(6).unwrap();
    let snd = semi_nice_exact(&g, 12).unwrap();
    let text = snd.to_text(g.n());
    let (back, n) = parse_semi_nice(&text).unwrap();
    assert_eq!((back, n), (snd.clone(), 6));
    let (plain, _) = parse_path_decomposition(&snd.untagged().to_text(6)).unwrap();
    assert_eq!(plain, snd.untagged());
    assert!(parse_path_decomposition("s pd 2 1 3\nb 1 1\n").is_err());
}

#[test]
fn fvs_examples() {
    assert_eq!(compute_fvs_exact(&random_tree(12, 3).unwrap(), 3).unwrap().len(), 0);
    assert_eq!(compute_fvs_exact(&cycle(5).unwrap(), 3).unwrap().len(), 1);
    let k4 = subdivided_clique(4).unwrap();
    let f = compute_fvs_exact(&k4, 4).unwrap();
    assert_eq!(f.len(), 2);
    assert!(is_fvs(&k4, f.members()));
    assert!(compute_fvs_exact(&complete(6).unwrap(), 2).is_none());
}

#[test]
fn cluster_examples() {
    let (g, _) = random_cluster_plus_modulator(&[3], 0, 1).unwrap();
    assert_eq!(compute_cluster_modulator_exact(&g, 3).unwrap().len(), 0);
    assert_eq!(compute_cluster_modulator_exact(&path(3).unwrap(), 3).unwrap().len(), 1);
    let k4 = subdivided_clique(4).unwrap();
    assert_eq!(compute_cluster_modulator_exact(&k4, 6).unwrap().len(), 4);
}

#[test]
fn type_partition_examples() {
    let k23 = complete_bipartite(2, 3).unwrap();
    let t = compute_type_partition(&k23);
    assert_eq!(t.classes.len(), 2);
    assert_eq!((t.cl(), t.ind()), (0, 2));
    assert_eq!(t.type_graph.edges(), vec![(0, 1)]);
    let k4 = complete(4).unwrap();
    let t = compute_type_partition(&k4);
    assert_eq!((t.classes.len(), t.cl()), (1, 1));
    assert_eq!(compute_type_partition(&path(4).unwrap()).classes.len(), 4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(80))]

    #[test]
    fn exact_pathwidth_matches_permutations(n in 1usize..7, p in 0.1f64..0.9, seed in any::<u64>()) {
        let g = random_connected(n, p, seed).unwrap();
        let d = pathwidth_exact_small(&g, 12).unwrap();
        prop_assert!(validate_path_decomposition(&g, &d).is_empty());
        prop_assert_eq!(d.width(), brute_pathwidth(&g));
    }

    #[test]
    fn semi_nice_invariants(n in 2usize..11, p in 0.1f64..0.7, seed in any::<u64>()) {
        let g = random_connected(n, p, seed).unwrap();
        let d = pathwidth_exact_small(&g, 12).unwrap();
        let nice = make_nice(&g, &d).unwrap();
        prop_assert_eq!(nice.bags.len(), 2 * n + 1);
        prop_assert_eq!(nice.width(), d.width());
        let snd = make_semi_nice(&g, &nice).unwrap();
        prop_assert!(validate_semi_nice(&g, &snd).is_empty());
        prop_assert!(snd.width() <= nice.width());
        prop_assert!(snd.bags.len() <= nice.bags.len());
    }

    #[test]
    fn semi_nice_from_arbitrary_orders(n in 2usize..10, p in 0.1f64..0.7, seed in any::<u64>()) {
        // a deliberately bad decomposition: one bag per vertex prefix
        let g = random_connected(n, p, seed).unwrap();
        let order: Vec<usize> = {
            let mut o: Vec<usize> = (0..n).collect();
            o.rotate_left((seed as usize) % n);
            o
        };
        let bags: Vec<Vec<usize>> = (0..n).map(|i| {
            let mut b: Vec<usize> = order[..i].iter().copied()
                .filter(|&u| g.neighbors(u).iter().any(|w| !order[..i].contains(w)))
                .collect();
            b.push(order[i]);
            b.sort_unstable();
            b
        }).collect();
        let d = PathDecomposition::new(bags);
        prop_assert!(validate_path_decomposition(&g, &d).is_empty());
        let snd = make_semi_nice(&g, &make_nice(&g, &d).unwrap()).unwrap();
        prop_assert!(validate_semi_nice(&g, &snd).is_empty());
        prop_assert!(snd.width() <= d.width());
    }

    #[test]
    fn fvs_is_minimum(n in 2usize..9, p in 0.2f64..0.8, seed in any::<u64>()) {
        let g = random_connected(n, p, seed).unwrap();
        let f = compute_fvs_exact(&g, n).unwrap();
        prop_assert!(is_fvs(&g, f.members()));
        let smaller = subsets(n).filter(|s| s.len() < f.len()).any(|s| is_fvs(&g, &s));
        prop_assert!(!smaller);
    }

    #[test]
    fn cluster_modulator_is_minimum(n in 2usize..9, p in 0.2f64..0.8, seed in any::<u64>()) {
        let g = random_connected(n, p, seed).unwrap();
        let x = compute_cluster_modulator_exact(&g, n).unwrap();
        prop_assert!(is_cluster_modulator(&g, x.members()));
        let smaller = subsets(n).filter(|s| s.len() < x.len()).any(|s| is_cluster_modulator(&g, &s));
        prop_assert!(!smaller);
    }

    #[test]
    fn type_partition_is_coarsest(types in 2usize..6, seed in any::<u64>()) {
        let (g, _) = random_bounded_nd(types, 3, seed).unwrap();
        let t = compute_type_partition(&g);
        prop_assert!(t.check(&g));
        // any two vertices of the same type share a class
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let same = g.neighbors(u).iter().filter(|&&x| x != v).eq(g.neighbors(v).iter().filter(|&&x| x != u));
                prop_assert_eq!(same, t.class_of[u] == t.class_of[v]);
            }
        }
        prop_assert!(t.classes.len() <= types);
    }
}
