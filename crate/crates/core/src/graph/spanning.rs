//! Three spanning-tree heuristics aimed at many leaves / small connected
//! dominating sets, plus checkers.

use super::{EdgeId, Graph, VertexId};
use crate::error::{Error, Result};
use crate::rng::Lcg;
use std::collections::VecDeque;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    /// Edge ids of the host graph, in the order they were added.
    pub edges: Vec<EdgeId>,
    /// The tree on the host's vertex ids.
    pub tree: Graph,
    /// Non-leaf vertices of the tree (one vertex when the tree is tiny).
    pub dominating: Vec<VertexId>,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

fn finish(g: &Graph, edges: Vec<EdgeId>) -> SpanningTree {
    let mut tree = Graph::new(g.n());
    for &e in &edges {
        let (u, v) = g.edge(e);
        tree.add_edge(u, v).expect("host ids");
    }
    let mut dominating: Vec<VertexId> = (0..g.n()).filter(|&v| tree.degree(v) > 1).collect();
    if dominating.is_empty() && g.n() > 0 {
        let top = (0..g.n()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
        dominating.push(top);
    }
    SpanningTree { edges, tree, dominating }
}

/// Largest degree first, smallest id on ties.
fn by_degree_desc(g: &Graph, mut vs: Vec<VertexId>) -> Vec<VertexId> {
    vs.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    vs
}

/// Seed at a maximum-degree vertex with its whole neighbourhood, then keep
/// expanding the tree leaf of largest degree that still has new neighbours.
/// Once every vertex is in or next to the tree, the stragglers hang off the
/// tree neighbour of largest tree degree.
pub fn spanning_tree_max_leaf(g: &Graph) -> Result<SpanningTree> {
    if !g.is_connected() || g.n() == 0 {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut in_tree = vec![false; n];
    let mut expanded = vec![false; n];
    let mut tdeg = vec![0usize; n];
    let mut edges = Vec::new();
    let u1 = by_degree_desc(g, (0..n).collect())[0];
    let grow = |u: VertexId, in_tree: &mut Vec<bool>, tdeg: &mut Vec<usize>, edges: &mut Vec<EdgeId>| {
        in_tree[u] = true;
        for &(w, e) in g.incident(u) {
            if !in_tree[w] {
                in_tree[w] = true;
                tdeg[u] += 1;
                tdeg[w] += 1;
                edges.push(e);
            }
        }
    };
    grow(u1, &mut in_tree, &mut tdeg, &mut edges);
    expanded[u1] = true;
    loop {
        let dominated = (0..n).all(|v| in_tree[v] || g.neighbors(v).iter().any(|&w| in_tree[w]));
        if dominated {
            break;
        }
        let pick = by_degree_desc(
            g,
            (0..n)
                .filter(|&v| {
                    in_tree[v]
                        && !expanded[v]
                        && tdeg[v] <= 1
                        && g.neighbors(v).iter().any(|&w| !in_tree[w])
                })
                .collect(),
        );
        let u = *pick.first().expect("a connected graph always has a growable leaf");
        expanded[u] = true;
        grow(u, &mut in_tree, &mut tdeg, &mut edges);
    }
    for y in 0..n {
        if in_tree[y] {
            continue;
        }
        let (v, e) = g
            .incident(y)
            .iter()
            .filter(|&&(w, _)| in_tree[w])
            .max_by_key(|&&(w, _)| (tdeg[w], std::cmp::Reverse(w)))
            .copied()
            .expect("dominated");
        in_tree[y] = true;
        tdeg[v] += 1;
        tdeg[y] += 1;
        edges.push(e);
    }
    Ok(finish(g, edges))
}

/// Connected dominating set forced to contain `required`: hang a pendant
/// vertex on every required vertex, run the max-leaf routine, drop pendants.
pub fn spanning_tree_predefined(g: &Graph, required: &[VertexId]) -> Result<Vec<VertexId>> {
    for &v in required {
        g.check(v)?;
    }
    if !g.is_connected() || g.n() == 0 {
        return Err(Error::Disconnected);
    }
    let mut star = g.clone();
    for &u in required {
        let p = star.add_vertex();
        star.add_edge(u, p)?;
    }
    let t = spanning_tree_max_leaf(&star)?;
    let mut x: Vec<VertexId> = t.dominating.into_iter().filter(|&v| v < g.n()).collect();
    for &u in required {
        if !x.contains(&u) {
            x.push(u);
        }
    }
    x.sort_unstable();
    Ok(x)
}

/// Phase one unions closed neighbourhoods of the vertices with degree ≥ k in
/// degree order, linking each new hub through its best already-covered
/// neighbour. Phase two is a breadth-first sweep that prefers high-degree
/// neighbours and also merges any forest pieces phase one left apart.
pub fn spanning_tree_degree_preserve(g: &Graph, k: usize) -> Result<SpanningTree> {
    if !g.is_connected() || g.n() == 0 {
        return Err(Error::Disconnected);
    }
    if k < g.min_degree() || k > g.max_degree() || k == 0 {
        return Err(Error::ThresholdOutOfRange(k));
    }
    let n = g.n();
    let order = by_degree_desc(g, (0..n).collect());
    let hubs: Vec<VertexId> = order.iter().copied().filter(|&v| g.degree(v) >= k).collect();
    let mut dsu = Dsu::new(n);
    let mut covered = vec![false; n];
    let mut edges = Vec::new();
    let link = |u: VertexId, w: VertexId, dsu: &mut Dsu, edges: &mut Vec<EdgeId>| {
        if let Some(e) = g.find_edge(u, w) {
            if dsu.union(u, w) {
                edges.push(e);
            }
        }
    };
    for (i, &v) in hubs.iter().enumerate() {
        let nbrs = g.neighbors(v);
        if i > 0 {
            let common: Vec<VertexId> = nbrs.iter().copied().filter(|&w| covered[w]).collect();
            if let Some(&x) = by_degree_desc(g, common).first() {
                link(v, x, &mut dsu, &mut edges);
            }
        }
        covered[v] = true;
        for w in nbrs {
            if !covered[w] {
                covered[w] = true;
                link(v, w, &mut dsu, &mut edges);
            }
        }
    }
    let mut seen = covered.clone();
    let mut queue: VecDeque<VertexId> = order.iter().copied().filter(|&v| covered[v]).collect();
    while let Some(v) = queue.pop_front() {
        for y in by_degree_desc(g, g.neighbors(v)) {
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
            link(v, y, &mut dsu, &mut edges);
        }
    }
    Ok(finish(g, edges))
}

/// Kruskal over a shuffled edge order.
pub fn random_spanning_tree(g: &Graph, rng: &mut Lcg) -> SpanningTree {
    let mut order: Vec<EdgeId> = (0..g.q()).collect();
    rng.shuffle(&mut order);
    let mut dsu = Dsu::new(g.n());
    let edges = order
        .into_iter()
        .filter(|&e| {
            let (u, v) = g.edge(e);
            dsu.union(u, v)
        })
        .collect();
    finish(g, edges)
}

pub fn is_spanning_tree(g: &Graph, t: &SpanningTree) -> bool {
    t.tree.n() == g.n()
        && t.tree.is_tree()
        && t.edges.iter().all(|&e| e < g.q())
        && t.edges.iter().enumerate().all(|(i, &e)| t.tree.edge(i) == g.edge(e))
}

pub fn is_connected_dominating(g: &Graph, set: &[VertexId]) -> bool {
    if set.is_empty() {
        return g.n() == 0;
    }
    let dominated = (0..g.n()).all(|v| set.contains(&v) || g.neighbors(v).iter().any(|w| set.contains(w)));
    let removed: Vec<VertexId> = (0..g.n()).filter(|v| !set.contains(v)).collect();
    dominated && g.without_vertices(&removed).0.is_connected()
}
