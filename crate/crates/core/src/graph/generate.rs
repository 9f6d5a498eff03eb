//! Graph families, random generators and exhaustive small-graph corpora.

use super::{iso, Graph};
use crate::rng::Lcg;
use std::collections::BTreeSet;

pub fn path(n: usize) -> Graph {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &e).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    g.add_edge(n - 1, 0).unwrap();
    g
}

/// Centre 0 with `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    let e: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &e).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Parts `0..m` and `m..m+n`; edges listed row by row.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let mut g = Graph::new(m + n);
    for u in 0..m {
        for v in 0..n {
            g.add_edge(u, m + v).unwrap();
        }
    }
    g
}

/// Hub 0 joined to a rim cycle on `1..=rim`.
pub fn wheel(rim: usize) -> Graph {
    let mut g = Graph::new(rim + 1);
    for i in 1..=rim {
        g.add_edge(0, i).unwrap();
    }
    for i in 1..=rim {
        g.add_edge(i, i % rim + 1).unwrap();
    }
    g
}

/// Body 0, legs of the given lengths.
pub fn spider(legs: &[usize]) -> Graph {
    let mut g = Graph::new(1);
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            let v = g.add_vertex();
            g.add_edge(prev, v).unwrap();
            prev = v;
        }
    }
    g
}

/// Spine `0..spine`, then leaf counts per spine vertex.
pub fn caterpillar(leaves: &[usize]) -> Graph {
    let mut g = path(leaves.len());
    for (i, &c) in leaves.iter().enumerate() {
        for _ in 0..c {
            let v = g.add_vertex();
            g.add_edge(i, v).unwrap();
        }
    }
    g
}

/// Uniform labelled tree via a random Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut Lcg) -> Graph {
    if n <= 2 {
        return path(n.max(1));
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut g = Graph::new(n);
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    for &s in &seq {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        g.add_edge(leaf, s).unwrap();
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    g.add_edge(rest[0], rest[1]).unwrap();
    g
}

pub fn random_caterpillar(spine: usize, max_leaves: usize, rng: &mut Lcg) -> Graph {
    let leaves: Vec<usize> = (0..spine).map(|_| rng.below(max_leaves + 1)).collect();
    caterpillar(&leaves)
}

/// Each vertex `v >= m` attaches to `m` distinct earlier vertices, chosen with
/// probability proportional to degree. Starts from a clique on `m` vertices.
pub fn preferential_attachment(n: usize, m: usize, seed: u64) -> Graph {
    let mut rng = Lcg::new(seed);
    let m = m.max(1);
    let mut g = complete(m.min(n));
    let mut urn: Vec<usize> = Vec::new();
    for &(u, v) in g.edges() {
        urn.extend([u, v]);
    }
    for v in m..n {
        g.add_vertex();
        let mut chosen = BTreeSet::new();
        while chosen.len() < m.min(v) {
            let pick = if urn.is_empty() { rng.below(v) } else { urn[rng.below(urn.len())] };
            chosen.insert(pick);
        }
        for &u in &chosen {
            g.add_edge(u, v).unwrap();
            urn.extend([u, v]);
        }
    }
    g
}

fn dedup_extend(out: &mut Vec<Graph>, seen: &mut BTreeSet<iso::Code>, g: Graph) {
    if seen.insert(iso::canonical_code(&g)) {
        out.push(g);
    }
}

/// All non-isomorphic trees on `n` vertices.
pub fn trees(n: usize) -> Vec<Graph> {
    let mut level = vec![path(1)];
    for k in 2..=n {
        let mut next = Vec::new();
        let mut seen = BTreeSet::new();
        for t in &level {
            for v in 0..k - 1 {
                let mut h = t.clone();
                let w = h.add_vertex();
                h.add_edge(v, w).unwrap();
                dedup_extend(&mut next, &mut seen, h);
            }
        }
        level = next;
    }
    if n == 0 {
        Vec::new()
    } else {
        level
    }
}

/// All non-isomorphic connected simple graphs on `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![path(1)];
    for k in 2..=n {
        let mut next = Vec::new();
        let mut seen = BTreeSet::new();
        for g in &level {
            for mask in 1u32..(1 << (k - 1)) {
                let mut h = g.clone();
                let w = h.add_vertex();
                for v in 0..k - 1 {
                    if mask >> v & 1 == 1 {
                        h.add_edge(v, w).unwrap();
                    }
                }
                dedup_extend(&mut next, &mut seen, h);
            }
        }
        level = next;
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts_match_known_sequence() {
        // 1, 1, 1, 2, 3, 6, 11, 23
        let counts: Vec<usize> = (1..=8).map(|n| trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
    }

    #[test]
    fn connected_graph_counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn random_tree_is_tree() {
        let mut rng = Lcg::new(3);
        for n in 1..30 {
            assert!(random_tree(n, &mut rng).is_tree());
        }
    }

    #[test]
    fn preferential_attachment_connected() {
        let g = preferential_attachment(50, 2, 1);
        assert_eq!(g.n(), 50);
        assert!(g.is_connected() && g.is_simple());
    }
}
