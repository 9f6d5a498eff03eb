//! Transcribed example graphs shared by the integration tests.
#![allow(dead_code)]

use topsnut::graph::generate;
use topsnut::Graph;

/// The lobster whose single vertex labelling supports five edge rules.
/// Vertex ids equal the vertex labels: a=0 c=1 d=2 w=3 u=4 y=5 r=6 s=7
/// e=8 x=9 v=10 t=11.
pub const LOBSTER_EDGES: [(usize, usize); 11] =
    [(0, 5), (1, 5), (2, 5), (2, 8), (2, 6), (2, 7), (2, 11), (8, 3), (9, 3), (4, 11), (4, 10)];

/// Printed label sets per edge, in `LOBSTER_EDGES` order.
pub const LOBSTER_SETS: [&[i64]; 11] = [
    &[1, 5, 11, 21, 22],
    &[2, 6, 10, 19, 21],
    &[3, 7, 9, 17, 20],
    &[6, 10, 11, 17],
    &[4, 8, 15, 19],
    &[5, 7, 9, 13, 18],
    &[2, 3, 5, 9, 14],
    &[0, 5, 7, 9, 16],
    &[1, 4, 7, 8, 15],
    &[1, 4, 11, 12],
    &[2, 3, 10, 13],
];

pub fn lobster() -> Graph {
    Graph::from_edges(12, &LOBSTER_EDGES).unwrap()
}

/// Caterpillar with spine labels 0, 37, 10, 25, 12 and hanging leaves.
/// Returns the graph and its vertex labels; spine vertices are ids 0..5.
pub fn spine_caterpillar() -> (Graph, Vec<i64>) {
    let spine = [0i64, 37, 10, 25, 12];
    let leaves: [&[i64]; 5] = [&[39, 41, 43, 45, 47], &[2, 4, 6, 8], &[27, 29, 31, 33, 35], &[], &[13, 15, 17, 19, 21, 23]];
    let mut g = Graph::new(5);
    for i in 0..4 {
        g.add_edge(i, i + 1).unwrap();
    }
    let mut labels = spine.to_vec();
    for (i, ls) in leaves.iter().enumerate() {
        for &x in ls.iter() {
            let v = g.add_vertex();
            g.add_edge(i, v).unwrap();
            labels.push(x);
        }
    }
    (g, labels)
}

/// 14 vertices, 38 edges; split connectivities (2, 4) and κ, κ′, δ = 4, 5, 5.
pub const SPLIT_EXAMPLE_EDGES: [(usize, usize); 38] = [
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 10), (0, 12), (1, 2), (1, 3), (1, 4), (1, 10), (1, 13),
    (2, 3), (2, 4), (2, 11), (2, 13), (3, 4), (3, 11), (4, 12), (5, 6), (5, 7), (5, 8), (5, 9),
    (5, 10), (5, 12), (6, 7), (6, 8), (6, 9), (6, 10), (6, 13), (7, 8), (7, 9), (7, 11), (7, 13),
    (8, 9), (8, 11), (9, 12), (10, 11), (12, 13),
];

pub fn split_example() -> Graph {
    Graph::from_edges(14, &SPLIT_EXAMPLE_EDGES).unwrap()
}

/// A 13-vertex caterpillar standing in for the tree of the 6C example.
pub fn tree13() -> Graph {
    generate::caterpillar(&[3, 2, 2, 2])
}

/// A 17-vertex caterpillar standing in for the image-labelling trees.
pub fn tree17() -> Graph {
    generate::caterpillar(&[3, 2, 3, 2, 2])
}

/// Every caterpillar with at most `max_n` vertices, up to isomorphism.
pub fn caterpillars_upto(max_n: usize) -> Vec<Graph> {
    (2..=max_n)
        .flat_map(generate::trees)
        .filter(|t| topsnut::graph::classify_tree(t).is_caterpillar)
        .collect()
}
