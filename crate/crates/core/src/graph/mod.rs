//! Graph storage plus the structural algorithms built on it.

mod classify;
pub mod connectivity;
mod euler;
pub mod generate;
pub mod io;
pub mod iso;
pub mod spanning;
mod split;

pub use classify::{classify_tree, leaf_identity_check, spine_of, TreeClass, TreeKind};
pub use connectivity::{
    e_split_connectivity, edge_connectivity, v_split_connectivity, vertex_connectivity,
    SplitLimits,
};
pub use euler::{euler_cycle_decomposition, non_euler_path_decomposition, Trail};
pub use split::{edge_coincide, edge_split, vertex_coincide, vertex_split, SplitResult};

use crate::error::{Error, Result};
use std::collections::VecDeque;

pub type VertexId = usize;
pub type EdgeId = usize;

/// Vertices are `0..n`; edges keep their insertion order, which fixes every
/// "deterministic" traversal built on top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
    allow_loops: bool,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n], allow_loops: false }
    }

    /// Same as `new`, but self-loops are accepted.
    pub fn with_loops(n: usize) -> Self {
        Graph { allow_loops: true, ..Graph::new(n) }
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.adj.push(Vec::new());
        self.n += 1;
        self.n - 1
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        self.check(u)?;
        self.check(v)?;
        if u == v && !self.allow_loops {
            return Err(Error::ConditionViolation(vec![format!("self-loop at {u}")]));
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.adj[u].push((v, id));
        if u != v {
            self.adj[v].push((u, id));
        }
        Ok(id)
    }

    pub fn check(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    /// Sorted, deduplicated neighbour ids.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self.adj[v].iter().map(|&(w, _)| w).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.adj.get(u)?.iter().find(|&&(w, _)| w == v).map(|&(_, e)| e)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.find_edge(u, v).is_some()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().all(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))))
    }

    pub fn leaves(&self) -> Vec<VertexId> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Component index per vertex, numbered in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut c = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = c;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = c;
                        queue.push_back(w);
                    }
                }
            }
            c += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.q() + 1 == self.n && self.is_connected()
    }

    pub fn is_acyclic(&self) -> bool {
        self.q() + self.component_count() == self.n
    }

    /// BFS 2-colouring; `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &(w, _) in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    /// The subgraph without `removed`; returns it plus old→new id map.
    pub fn without_vertices(&self, removed: &[VertexId]) -> (Graph, Vec<Option<VertexId>>) {
        let mut map = vec![None; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !removed.contains(&v) {
                map[v] = Some(next);
                next += 1;
            }
        }
        let mut h = Graph { allow_loops: self.allow_loops, ..Graph::new(next) };
        for &(u, v) in &self.edges {
            if let (Some(a), Some(b)) = (map[u], map[v]) {
                h.add_edge(a, b).expect("ids valid");
            }
        }
        (h, map)
    }

    pub fn without_edges(&self, removed: &[EdgeId]) -> Graph {
        let mut h = Graph { allow_loops: self.allow_loops, ..Graph::new(self.n) };
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if !removed.contains(&e) {
                h.add_edge(u, v).expect("ids valid");
            }
        }
        h
    }

    /// BFS tree edges from `root`, as (parent, child) in visit order.
    pub fn bfs_order(&self, root: VertexId) -> Vec<(VertexId, VertexId)> {
        let mut seen = vec![false; self.n];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        let mut out = Vec::new();
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    out.push((u, w));
                    queue.push_back(w);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_counts() {
        let g = generate::path(4);
        assert_eq!((g.n(), g.q()), (4, 3));
        assert!(g.is_tree());
        assert_eq!(g.leaves(), vec![0, 3]);
        assert!(g.bipartition().is_some());
        assert!(generate::cycle(3).bipartition().is_none());
    }

    #[test]
    fn loops_rejected_by_default() {
        let mut g = Graph::new(2);
        assert!(g.add_edge(1, 1).is_err());
        let mut h = Graph::with_loops(2);
        assert!(h.add_edge(1, 1).is_ok());
        assert!(g.add_edge(0, 5).is_err());
    }

    #[test]
    fn vertex_removal_relabels() {
        let g = generate::path(5);
        let (h, map) = g.without_vertices(&[2]);
        assert_eq!(h.n(), 4);
        assert_eq!(h.component_count(), 2);
        assert_eq!(map[3], Some(2));
    }
}
