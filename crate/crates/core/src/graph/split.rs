//! Vertex and edge split/coincide operations.

use super::{EdgeId, Graph, VertexId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitResult {
    pub graph: Graph,
    /// `provenance[v]` is the original vertex that new vertex `v` came from.
    pub provenance: Vec<VertexId>,
}

fn identity(n: usize) -> Vec<VertexId> {
    (0..n).collect()
}

/// Moves the incidences `moved` of `v` onto a fresh vertex. Edge ids are kept.
pub(crate) fn split_incidences(g: &Graph, v: VertexId, moved: &[EdgeId]) -> Result<Graph> {
    g.check(v)?;
    let inc: Vec<EdgeId> = g.incident(v).iter().map(|&(_, e)| e).collect();
    if moved.is_empty() || moved.len() >= inc.len() {
        return Err(Error::EmptyPartitionSide);
    }
    if moved.iter().any(|e| !inc.contains(e)) {
        return Err(Error::BadPartition(v));
    }
    let mut edges = g.edges().to_vec();
    let fresh = g.n();
    for &e in moved {
        let (a, b) = edges[e];
        edges[e] = if a == v { (fresh, b) } else { (a, fresh) };
    }
    rebuild(g, g.n() + 1, &edges)
}

fn rebuild(g: &Graph, n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph> {
    let mut h = if g.allow_loops { Graph::with_loops(n) } else { Graph::new(n) };
    for &(a, b) in edges {
        h.add_edge(a, b)?;
    }
    Ok(h)
}

/// Splits `v` into `v′` (keeps the id, neighbours outside `side_b`) and a new
/// vertex `v″` (appended, neighbours in `side_b`).
pub fn vertex_split(g: &Graph, v: VertexId, side_b: &[VertexId]) -> Result<SplitResult> {
    g.check(v)?;
    let nbrs = g.neighbors(v);
    if side_b.iter().any(|w| !nbrs.contains(w)) {
        return Err(Error::BadPartition(v));
    }
    let moved: Vec<EdgeId> =
        g.incident(v).iter().filter(|(w, _)| side_b.contains(w)).map(|&(_, e)| e).collect();
    if moved.is_empty() {
        return Err(Error::EmptyPartitionSide);
    }
    let graph = split_incidences(g, v, &moved)?;
    let mut provenance = identity(g.n());
    provenance.push(v);
    Ok(SplitResult { graph, provenance })
}

/// Merges `x` and `y`. The smaller id survives; ids above the larger shift down.
pub fn vertex_coincide(g: &Graph, x: VertexId, y: VertexId) -> Result<Graph> {
    g.check(x)?;
    g.check(y)?;
    if x == y {
        return Err(Error::OverlappingNeighborhoods(x, y));
    }
    let nx = g.neighbors(x);
    let ny = g.neighbors(y);
    if nx.iter().any(|w| ny.contains(w)) || nx.contains(&y) {
        return Err(Error::OverlappingNeighborhoods(x, y));
    }
    Ok(merge(g, &[(x, y)], None))
}

/// Replaces every `b` by `a` for the pairs, drops `skip_edge`, then removes
/// the vacated ids.
fn merge(g: &Graph, pairs: &[(VertexId, VertexId)], skip_edge: Option<EdgeId>) -> Graph {
    let mut target: Vec<VertexId> = identity(g.n());
    let mut gone = Vec::new();
    for &(x, y) in pairs {
        let (keep, drop) = (x.min(y), x.max(y));
        target[drop] = keep;
        gone.push(drop);
    }
    let mut newid = vec![0; g.n()];
    let mut next = 0;
    for v in 0..g.n() {
        if !gone.contains(&v) {
            newid[v] = next;
            next += 1;
        }
    }
    let mut h = if g.allow_loops { Graph::with_loops(next) } else { Graph::new(next) };
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if Some(e) == skip_edge {
            continue;
        }
        h.add_edge(newid[target[a]], newid[target[b]]).expect("merge keeps ids valid");
    }
    h
}

/// Splits edge `e = uv` into `u′v′` (old id) and `u″v″` (appended). Neighbours
/// of `u` listed in `u_moves` follow `u″`; likewise for `v`.
pub fn edge_split_with(
    g: &Graph,
    e: EdgeId,
    u_moves: &[VertexId],
    v_moves: &[VertexId],
) -> Result<SplitResult> {
    if e >= g.q() {
        return Err(Error::UnknownEdge(e));
    }
    let (u, v) = g.edge(e);
    let mut edges = g.edges().to_vec();
    let (u2, v2) = (g.n(), g.n() + 1);
    for (end, moves, fresh) in [(u, u_moves, u2), (v, v_moves, v2)] {
        let nbrs = g.neighbors(end);
        if moves.iter().any(|w| !nbrs.contains(w)) {
            return Err(Error::BadPartition(end));
        }
        for &(w, f) in g.incident(end) {
            if f != e && moves.contains(&w) {
                let (a, b) = edges[f];
                edges[f] = if a == end { (fresh, b) } else { (a, fresh) };
            }
        }
    }
    edges.push((u2, v2));
    let graph = rebuild(g, g.n() + 2, &edges)?;
    let mut provenance = identity(g.n());
    provenance.extend([u, v]);
    Ok(SplitResult { graph, provenance })
}

/// Plain edge split: the new copy `u″v″` carries no other neighbours.
pub fn edge_split(g: &Graph, e: EdgeId) -> Result<SplitResult> {
    edge_split_with(g, e, &[], &[])
}

/// Coincides edge `xy` with `uv`, merging `x` with `u` and `y` with `v`.
pub fn edge_coincide(g: &Graph, xy: EdgeId, uv: EdgeId) -> Result<Graph> {
    if xy >= g.q() {
        return Err(Error::UnknownEdge(xy));
    }
    if uv >= g.q() {
        return Err(Error::UnknownEdge(uv));
    }
    let (x, y) = g.edge(xy);
    let (u, v) = g.edge(uv);
    let mut failed = Vec::new();
    for (a, an, b, bn) in [(x, "x", u, "u"), (x, "x", v, "v"), (y, "y", u, "u"), (y, "y", v, "v")] {
        let na = g.neighbors(a);
        if a == b || g.neighbors(b).iter().any(|w| na.contains(w)) {
            failed.push(format!("N({an})∩N({bn})"));
        }
    }
    if !failed.is_empty() {
        return Err(Error::ConditionViolation(failed));
    }
    Ok(merge(g, &[(x, u), (y, v)], Some(uv)))
}
