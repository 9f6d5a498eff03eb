//! Tree classes by iterated leaf deletion.

use super::{Graph, VertexId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeKind {
    Path,
    Caterpillar,
    Lobster,
    Spider,
    GeneralTree,
    NonTree,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeClass {
    /// The most specific class; a spider is only reported as `Spider` when
    /// it is not already a path, caterpillar or lobster.
    pub kind: TreeKind,
    pub is_caterpillar: bool,
    pub is_lobster: bool,
    pub is_spider: bool,
    /// Vertex sets left after each round of leaf deletion, starting with V.
    pub witness: Vec<Vec<VertexId>>,
}

fn strip_leaves(g: &Graph, alive: &[VertexId]) -> Vec<VertexId> {
    if alive.len() <= 2 {
        return Vec::new();
    }
    alive
        .iter()
        .copied()
        .filter(|&v| g.neighbors(v).iter().filter(|w| alive.contains(w)).count() > 1)
        .collect()
}

fn induced_is_path(g: &Graph, alive: &[VertexId]) -> bool {
    alive.iter().all(|&v| g.neighbors(v).iter().filter(|w| alive.contains(w)).count() <= 2)
}

pub fn classify_tree(g: &Graph) -> TreeClass {
    if !g.is_tree() {
        return TreeClass {
            kind: TreeKind::NonTree,
            is_caterpillar: false,
            is_lobster: false,
            is_spider: false,
            witness: Vec::new(),
        };
    }
    let all: Vec<VertexId> = (0..g.n()).collect();
    let mut witness = vec![all.clone()];
    let mut cur = all;
    while cur.len() > 2 && !induced_is_path(g, &cur) {
        cur = strip_leaves(g, &cur);
        witness.push(cur.clone());
    }
    // rounds of stripping before a path remains
    let rounds = witness.len() - 1;
    let is_path = rounds == 0;
    let is_caterpillar = rounds <= 1;
    let is_lobster = rounds <= 2;
    let is_spider = (0..g.n()).filter(|&v| g.degree(v) >= 3).count() == 1;
    let kind = if is_path {
        TreeKind::Path
    } else if is_caterpillar {
        TreeKind::Caterpillar
    } else if is_lobster {
        TreeKind::Lobster
    } else if is_spider {
        TreeKind::Spider
    } else {
        TreeKind::GeneralTree
    };
    TreeClass { kind, is_caterpillar, is_lobster, is_spider, witness }
}

/// The spine of a caterpillar in path order, starting from the end with the
/// smaller id. For K1 and K2 the spine is the single vertex 0.
pub fn spine_of(g: &Graph) -> Result<Vec<VertexId>> {
    let c = classify_tree(g);
    if !c.is_caterpillar {
        return Err(Error::NotACaterpillar);
    }
    let inner: Vec<VertexId> = if g.n() <= 2 {
        Vec::new()
    } else {
        (0..g.n()).filter(|&v| g.degree(v) > 1).collect()
    };
    if inner.is_empty() {
        return Ok(vec![0]);
    }
    let deg_in = |v: VertexId| g.neighbors(v).iter().filter(|w| inner.contains(w)).count();
    let start = *inner.iter().find(|&&v| deg_in(v) <= 1).unwrap();
    let mut order = vec![start];
    while let Some(&next) = g
        .neighbors(*order.last().unwrap())
        .iter()
        .find(|w| inner.contains(w) && !order.contains(w))
    {
        order.push(next);
    }
    Ok(order)
}

/// n₁(T) = 2 + Σ_{d≥3} (d−2)·n_d(T).
pub fn leaf_identity_check(t: &Graph) -> Result<bool> {
    if !t.is_tree() || t.n() < 2 {
        return Err(Error::NotATree);
    }
    let leaves = t.leaves().len() as i64;
    let rhs = 2 + (0..t.n())
        .map(|v| t.degree(v) as i64)
        .filter(|&d| d >= 3)
        .map(|d| d - 2)
        .sum::<i64>();
    Ok(leaves == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn families() {
        assert_eq!(classify_tree(&generate::path(5)).kind, TreeKind::Path);
        assert_eq!(classify_tree(&generate::caterpillar(&[2, 0, 3])).kind, TreeKind::Caterpillar);
        let spider = generate::spider(&[2, 2, 2]);
        let c = classify_tree(&spider);
        assert_eq!(c.kind, TreeKind::Lobster);
        assert!(c.is_spider);
        assert_eq!(classify_tree(&generate::spider(&[3, 3, 3])).kind, TreeKind::Spider);
        assert_eq!(classify_tree(&generate::cycle(4)).kind, TreeKind::NonTree);
    }

    #[test]
    fn general_tree() {
        // two long-legged spiders joined at their bodies
        let mut g = generate::spider(&[3, 3, 3]);
        let base = g.n();
        for _ in 0..10 {
            g.add_vertex();
        }
        let legs = [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 6), (0, 7), (7, 8), (8, 9)];
        for (a, b) in legs {
            g.add_edge(base + a, base + b).unwrap();
        }
        g.add_edge(0, base).unwrap();
        assert_eq!(classify_tree(&g).kind, TreeKind::GeneralTree);
    }

    #[test]
    fn spine_order() {
        let g = generate::caterpillar(&[1, 2, 0, 1]);
        assert_eq!(spine_of(&g).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(spine_of(&generate::path(2)).unwrap(), vec![0]);
    }

    #[test]
    fn leaf_identity() {
        assert!(leaf_identity_check(&generate::star(3)).unwrap());
        assert!(leaf_identity_check(&generate::path(6)).unwrap());
        assert_eq!(leaf_identity_check(&generate::cycle(3)), Err(Error::NotATree));
    }
}
