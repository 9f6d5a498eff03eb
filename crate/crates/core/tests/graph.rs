mod common;

use itertools::Itertools;
use proptest::prelude::*;
use std::collections::BTreeSet;
use topsnut::graph::connectivity::{
    e_split_connectivity, edge_connectivity, v_split_connectivity, v_split_connectivity_naive, vertex_connectivity,
    SplitLimits,
};
use topsnut::graph::spanning::*;
use topsnut::graph::*;
use topsnut::{Error, Lcg};

/// Components by plain DFS, independent of the library.
fn components(g: &Graph) -> usize {
    let mut seen = vec![false; g.n()];
    let mut count = 0;
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for &(a, b) in g.edges() {
                let w = if a == u { b } else if b == u { a } else { continue };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

#[test]
fn split_sizes_and_inverse() {
    let mut rng = Lcg::new(3);
    for _ in 0..100 {
        let g = generate::random_tree(rng.range(3, 10), &mut rng);
        let v = (0..g.n()).find(|&v| g.degree(v) >= 2).unwrap();
        let nb = g.neighbors(v);
        let side: Vec<usize> = nb[..rng.range(1, nb.len() - 1)].to_vec();
        let s = vertex_split(&g, v, &side).unwrap();
        assert_eq!((s.graph.n(), s.graph.q()), (g.n() + 1, g.q()));
        assert_eq!(s.provenance[g.n()], v);
        assert!(iso::isomorphic(&vertex_coincide(&s.graph, v, g.n()).unwrap(), &g));

        let e = rng.below(g.q());
        let es = edge_split(&g, e).unwrap();
        assert_eq!((es.graph.n(), es.graph.q()), (g.n() + 2, g.q() + 1));
        assert_eq!(components(&es.graph), 2);
        assert!(iso::isomorphic(&edge_coincide(&es.graph, e, g.q()).unwrap(), &g));
    }
    let p = generate::path(3);
    let s = vertex_split(&p, 1, &[2]).unwrap();
    assert_eq!(components(&s.graph), 2);
    assert_eq!(vertex_split(&p, 1, &[]).map(|_| ()), Err(Error::EmptyPartitionSide));
    assert!(matches!(vertex_coincide(&p, 0, 2), Err(Error::OverlappingNeighborhoods(..))));
}

#[test]
fn split_example_quintuple() {
    let g = common::split_example();
    let lim = SplitLimits { max_vertices: 14, max_edges: 38, witness_budget: 2_000_000 };
    let es = e_split_connectivity(&g, lim).unwrap().gamma;
    let vs = v_split_connectivity(&g, lim).unwrap().gamma;
    let delta = (0..g.n()).map(|v| g.degree(v)).min().unwrap();
    assert_eq!(
        (es, vs, vertex_connectivity(&g), edge_connectivity(&g), delta),
        (Some(2), Some(4), 4, 5, 5)
    );
}

#[test]
fn split_connectivity_equals_vertex_connectivity_up_to_seven() {
    for n in 2..=7 {
        for g in generate::connected_graphs(n) {
            let complete = g.q() == n * (n - 1) / 2;
            let vs = v_split_connectivity(&g, SplitLimits::default()).unwrap().gamma;
            if complete {
                assert_eq!(vs, None);
            } else {
                assert_eq!(vs, Some(vertex_connectivity(&g)));
            }
            if n <= 5 {
                assert_eq!(vs, v_split_connectivity_naive(&g));
            }
            if g.q() <= 10 {
                if let (Some(v), Some(e)) = (vs, e_split_connectivity(&g, SplitLimits::default()).unwrap().gamma) {
                    assert!(v <= 2 * e);
                }
            }
        }
    }
    assert_eq!(v_split_connectivity(&generate::star(4), SplitLimits::default()).unwrap().gamma, Some(1));
}

#[test]
fn split_search_respects_cap() {
    assert!(matches!(
        v_split_connectivity(&generate::cycle(13), SplitLimits::default()),
        Err(Error::SizeLimitExceeded(_))
    ));
    let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    assert_eq!(v_split_connectivity(&two, SplitLimits::default()).map(|_| ()), Err(Error::Disconnected));
}

fn edge_partition(g: &Graph, trails: &[Trail]) -> bool {
    let all: Vec<usize> = trails.iter().flat_map(|t| t.edges.iter().copied()).sorted().collect();
    all == (0..g.q()).collect::<Vec<_>>()
}

#[test]
fn euler_decompositions() {
    let c5 = euler_cycle_decomposition(&generate::cycle(5)).unwrap();
    assert_eq!(c5.len(), 1);
    assert_eq!(c5[0].edges.len(), 5);

    let bow = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
    let t = euler_cycle_decomposition(&bow).unwrap();
    assert_eq!(t.iter().map(|c| c.edges.len()).collect::<Vec<_>>(), vec![3, 3]);

    let k5 = generate::complete(5);
    let t = euler_cycle_decomposition(&k5).unwrap();
    assert!(edge_partition(&k5, &t) && t.iter().all(Trail::is_closed));

    assert!(matches!(euler_cycle_decomposition(&generate::path(3)), Err(Error::OddDegreeVertex(_))));
    assert_eq!(non_euler_path_decomposition(&generate::cycle(4)).map(|_| ()), Err(Error::AlreadyEulerian));

    let p4 = non_euler_path_decomposition(&generate::path(4)).unwrap();
    assert_eq!(p4.len(), 1);
    let star = generate::star(3);
    let s = non_euler_path_decomposition(&star).unwrap();
    assert_eq!(s.len(), 2);
    assert!(edge_partition(&star, &s));

    let mut rng = Lcg::new(17);
    for _ in 0..50 {
        let g = generate::random_tree(rng.range(2, 12), &mut rng);
        let odd = (0..g.n()).filter(|&v| g.degree(v) % 2 == 1).count();
        let paths = non_euler_path_decomposition(&g).unwrap();
        assert_eq!(paths.len(), odd / 2);
        assert!(edge_partition(&g, &paths));
        for p in &paths {
            let ends = [p.vertices[0], *p.vertices.last().unwrap()];
            assert!(ends.iter().all(|&v| g.degree(v) % 2 == 1));
        }
    }
}

fn leaves(t: &Graph) -> usize {
    (0..t.n()).filter(|&v| t.degree(v) == 1).count()
}

#[test]
fn max_leaf_tree() {
    let s = spanning_tree_max_leaf(&generate::star(5)).unwrap();
    assert_eq!(s.dominating, vec![0]);
    assert_eq!(s.tree.q(), 5);
    let c4 = spanning_tree_max_leaf(&generate::cycle(4)).unwrap();
    assert_eq!(leaves(&c4.tree), 2);

    let g = generate::preferential_attachment(40, 2, 5);
    let best = spanning_tree_max_leaf(&g).unwrap();
    assert!(is_spanning_tree(&g, &best));
    assert!(is_connected_dominating(&g, &best.dominating));
    let mut rng = Lcg::new(1);
    for _ in 0..100 {
        let r = random_spanning_tree(&g, &mut rng);
        assert!(is_spanning_tree(&g, &r));
        assert!(leaves(&best.tree) >= leaves(&r.tree));
    }
}

#[test]
fn predefined_nodes() {
    let p5 = generate::path(5);
    assert!(spanning_tree_predefined(&p5, &[0]).unwrap().contains(&0));
    let plain = spanning_tree_predefined(&p5, &[]).unwrap();
    assert!(is_connected_dominating(&p5, &plain));
    let c6 = generate::cycle(6);
    let x = spanning_tree_predefined(&c6, &[0, 3]).unwrap();
    assert!(x.contains(&0) && x.contains(&3));
    assert!(is_connected_dominating(&c6, &x));
    assert_eq!(spanning_tree_predefined(&p5, &[9]).map(|_| ()), Err(Error::UnknownVertex(9)));
}

#[test]
fn degree_preserving_tree() {
    let w = generate::wheel(6);
    let t = spanning_tree_degree_preserve(&w, 3).unwrap();
    assert!(is_spanning_tree(&w, &t));
    // hub neighbourhood enters first
    let first: BTreeSet<usize> = t.edges[..6].iter().map(|&e| w.edge(e)).flat_map(|(a, b)| [a, b]).collect();
    assert_eq!(first, (0..7).collect());

    let mut rng = Lcg::new(2);
    let tree = generate::random_tree(12, &mut rng);
    let hub = (0..12).map(|v| tree.degree(v)).max().unwrap();
    if hub > 1 {
        let same = spanning_tree_degree_preserve(&tree, hub).unwrap();
        assert_eq!(same.tree.q(), tree.q());
        assert!(same.tree.edges().iter().all(|&(a, b)| tree.has_edge(a, b)));
    }

    let g = generate::preferential_attachment(50, 2, 1);
    let t = spanning_tree_degree_preserve(&g, 3).unwrap();
    assert!(is_spanning_tree(&g, &t) && t.tree.is_tree());
    assert!(matches!(spanning_tree_degree_preserve(&w, 99), Err(Error::ThresholdOutOfRange(99))));
}

#[test]
fn tree_classes() {
    assert_eq!(classify_tree(&generate::path(5)).kind, TreeKind::Path);
    assert_eq!(classify_tree(&common::spine_caterpillar().0).kind, TreeKind::Caterpillar);
    assert_eq!(classify_tree(&common::lobster()).kind, TreeKind::Lobster);
    assert_eq!(classify_tree(&generate::spider(&[3, 3, 3])).kind, TreeKind::Spider);
    assert_eq!(classify_tree(&generate::cycle(4)).kind, TreeKind::NonTree);

    for n in 2..=9 {
        for t in generate::trees(n) {
            let c = classify_tree(&t);
            if c.is_lobster && c.witness.len() > 1 {
                let rest: Vec<usize> = (0..t.n()).filter(|v| !c.witness[1].contains(v)).collect();
                let (inner, _) = t.without_vertices(&rest);
                assert!(classify_tree(&inner).is_caterpillar || inner.n() <= 2);
            }
            let high = (0..t.n()).filter(|&v| t.degree(v) >= 3).count();
            assert_eq!(c.is_spider, high == 1);
        }
    }
}

#[test]
fn leaf_identity_on_random_trees() {
    assert!(leaf_identity_check(&generate::star(3)).unwrap());
    let mut rng = Lcg::new(500);
    for _ in 0..500 {
        let t = generate::random_tree(rng.range(2, 30), &mut rng);
        let lhs = leaves(&t) as i64;
        let rhs = 2 + (0..t.n()).map(|v| t.degree(v) as i64).filter(|&d| d >= 3).map(|d| d - 2).sum::<i64>();
        assert_eq!(lhs, rhs);
        assert!(leaf_identity_check(&t).unwrap());
    }
    assert_eq!(leaf_identity_check(&generate::cycle(3)), Err(Error::NotATree));
}

#[test]
fn graph_file_round_trip() {
    let g = common::split_example();
    assert_eq!(io::parse_graph(&io::write_graph(&g)).unwrap(), g);
    assert!(matches!(io::parse_graph("3 2\n0 1\n"), Err(Error::Parse { .. })));
    assert!(matches!(io::parse_graph("2 1\n0 0\n"), Err(Error::Parse { .. })));
}

proptest! {
    #[test]
    fn random_spanning_trees_span(n in 2usize..30, m in 1usize..3, seed in any::<u64>()) {
        let g = generate::preferential_attachment(n, m, seed);
        let mut rng = Lcg::new(seed);
        let t = random_spanning_tree(&g, &mut rng);
        prop_assert!(is_spanning_tree(&g, &t));
        prop_assert_eq!(components(&t.tree), 1);
        prop_assert_eq!(t.tree.q(), n - 1);
    }
}
