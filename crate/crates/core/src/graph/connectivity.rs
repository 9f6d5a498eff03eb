//! Vertex/edge connectivity via max-flow, and the split connectivities
//! γ_vs / γ_es by exhaustive split-set search.

use super::split::{edge_split_with, split_incidences};
use super::{EdgeId, Graph, VertexId};
use crate::error::{Error, Result};
use std::collections::VecDeque;

/// Unit-capacity max-flow on a dense residual matrix. Fine for the few dozen
/// nodes these searches see.
fn max_flow(cap: &mut [Vec<i32>], s: usize, t: usize) -> i32 {
    let n = cap.len();
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; n];
        prev[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for v in 0..n {
                if prev[v] == usize::MAX && cap[u][v] > 0 {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if prev[t] == usize::MAX {
            return flow;
        }
        let mut v = t;
        while v != s {
            let u = prev[v];
            cap[u][v] -= 1;
            cap[v][u] += 1;
            v = u;
        }
        flow += 1;
    }
}

/// Internally disjoint s–t paths (s, t non-adjacent).
fn local_vertex_connectivity(g: &Graph, s: VertexId, t: VertexId) -> usize {
    // v_in = 2v, v_out = 2v+1
    let n = g.n();
    let big = n as i32 + 1;
    let mut cap = vec![vec![0; 2 * n]; 2 * n];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = if v == s || v == t { big } else { 1 };
    }
    for &(u, v) in g.edges() {
        cap[2 * u + 1][2 * v] = big;
        cap[2 * v + 1][2 * u] = big;
    }
    max_flow(&mut cap, 2 * s + 1, 2 * t) as usize
}

/// κ(G); the complete graph K_n gets n−1 by convention.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_vertex_connectivity(g, s, t));
            }
        }
    }
    best
}

/// κ′(G).
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    (1..n)
        .map(|t| {
            let mut cap = vec![vec![0; n]; n];
            for &(u, v) in g.edges() {
                cap[u][v] += 1;
                cap[v][u] += 1;
            }
            max_flow(&mut cap, 0, t) as usize
        })
        .min()
        .unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitLimits {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Upper bound on split graphs built while hunting for one witness set.
    pub witness_budget: usize,
}

impl Default for SplitLimits {
    fn default() -> Self {
        SplitLimits { max_vertices: 12, max_edges: 12, witness_budget: 200_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitConnectivity {
    /// Smallest split set size that disconnects; `None` if no split set does
    /// (complete graphs).
    pub gamma: Option<usize>,
    pub witness: Vec<usize>,
    pub split_graph: Option<Graph>,
    /// Classical counterpart: κ for vertex splits, κ′ for edge splits.
    pub classical: usize,
}

/// At least two components, each holding a vertex with id below `orig` that
/// is not in `touched`.
fn split_disconnects(h: &Graph, orig: usize, touched: &[VertexId]) -> bool {
    let comp = h.components();
    let count = comp.iter().max().map_or(0, |m| m + 1);
    if count < 2 {
        return false;
    }
    let mut has = vec![false; count];
    for v in 0..orig {
        if !touched.contains(&v) {
            has[comp[v]] = true;
        }
    }
    has.iter().all(|&b| b)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Side of every vertex outside `removed`, from a bitmask over the
/// components of the remainder. Entries for removed vertices are unused.
fn side_of_rest(g: &Graph, removed: &[VertexId], mask: u64) -> Vec<bool> {
    let (rest, map) = g.without_vertices(removed);
    let comp = rest.components();
    (0..g.n()).map(|v| map[v].is_some_and(|m| mask >> comp[m] & 1 == 1)).collect()
}

fn remainder_components(g: &Graph, removed: &[VertexId]) -> usize {
    g.without_vertices(removed).0.component_count()
}

/// Non-empty proper subsets of `items`, smallest first.
fn proper_subsets<T: Copy>(items: &[T]) -> Vec<Vec<T>> {
    let d = items.len();
    let mut out: Vec<Vec<T>> = (1u64..(1 << d) - 1)
        .map(|m| (0..d).filter(|i| m >> i & 1 == 1).map(|i| items[i]).collect())
        .collect();
    out.sort_by_key(|s: &Vec<T>| s.len());
    out
}

fn vertex_witness(g: &Graph, vs: &[VertexId], budget: &mut usize) -> Option<Graph> {
    let r = remainder_components(g, vs);
    let inner: Vec<EdgeId> = (0..g.q())
        .filter(|&e| {
            let (a, b) = g.edge(e);
            vs.contains(&a) && vs.contains(&b)
        })
        .collect();
    // component 0 is always on side A, so each colouring is tried once
    for mask in (2u64..(1 << r)).step_by(2) {
        let side = side_of_rest(g, vs, mask);
        for inner_mask in 0u64..(1 << inner.len().min(20)) {
            let on_b = |e: EdgeId, v: VertexId| -> bool {
                let (a, b) = g.edge(e);
                let w = if a == v { b } else { a };
                if vs.contains(&w) {
                    let i = inner.iter().position(|&x| x == e).unwrap();
                    inner_mask >> i & 1 == 1
                } else {
                    side[w]
                }
            };
            // per split vertex: the incidences moved to the new copy
            let mut choices: Vec<Vec<Vec<EdgeId>>> = Vec::new();
            for &v in vs {
                let inc: Vec<EdgeId> = g.incident(v).iter().map(|&(_, e)| e).collect();
                let moved: Vec<EdgeId> = inc.iter().copied().filter(|&e| on_b(e, v)).collect();
                if !moved.is_empty() && moved.len() < inc.len() {
                    choices.push(vec![moved]);
                } else if inc.len() >= 2 {
                    // one-sided vertex: both copies stay on that side
                    choices.push(proper_subsets(&inc));
                } else {
                    choices.push(Vec::new());
                }
            }
            if choices.iter().any(|c| c.is_empty()) {
                continue;
            }
            let mut idx = vec![0; vs.len()];
            loop {
                if *budget == 0 {
                    return None;
                }
                *budget -= 1;
                let mut h = g.clone();
                let mut ok = true;
                for (i, &v) in vs.iter().enumerate() {
                    match split_incidences(&h, v, &choices[i][idx[i]]) {
                        Ok(next) => h = next,
                        Err(_) => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok && split_disconnects(&h, g.n(), vs) {
                    return Some(h);
                }
                // odometer over the per-vertex choices
                let mut i = 0;
                while i < vs.len() {
                    idx[i] += 1;
                    if idx[i] < choices[i].len() {
                        break;
                    }
                    idx[i] = 0;
                    i += 1;
                }
                if i == vs.len() {
                    break;
                }
            }
        }
    }
    None
}

/// γ_vs(G). A split set can only disconnect when deleting it does, so only
/// separating sets are tried; each candidate is confirmed by building the
/// split graph literally.
pub fn v_split_connectivity(g: &Graph, limits: SplitLimits) -> Result<SplitConnectivity> {
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() > limits.max_vertices {
        return Err(Error::SizeLimitExceeded(format!(
            "{} vertices > cap {}",
            g.n(),
            limits.max_vertices
        )));
    }
    let classical = vertex_connectivity(g);
    for k in 1..g.n() {
        for vs in combinations(g.n(), k) {
            if remainder_components(g, &vs) < 2 {
                continue;
            }
            let mut budget = limits.witness_budget;
            if let Some(h) = vertex_witness(g, &vs, &mut budget) {
                return Ok(SplitConnectivity {
                    gamma: Some(k),
                    witness: vs,
                    split_graph: Some(h),
                    classical,
                });
            }
        }
    }
    Ok(SplitConnectivity { gamma: None, witness: Vec::new(), split_graph: None, classical })
}

fn edge_witness(g: &Graph, es: &[EdgeId], budget: &mut usize) -> Option<Graph> {
    let mut ends: Vec<VertexId> = es.iter().flat_map(|&e| [g.edge(e).0, g.edge(e).1]).collect();
    ends.sort_unstable();
    ends.dedup();
    let r = remainder_components(g, &ends);
    let inner: Vec<EdgeId> = (0..g.q())
        .filter(|&e| {
            let (a, b) = g.edge(e);
            !es.contains(&e) && ends.contains(&a) && ends.contains(&b)
        })
        .collect();
    for mask in (2u64..(1 << r)).step_by(2) {
        let side = side_of_rest(g, &ends, mask);
        for inner_mask in 0u64..(1 << inner.len().min(20)) {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            // Side of each original edge at the ends; split edges keep their
            // old copy on side A and put the new copy on side B.
            let edge_on_b = |e: EdgeId| -> bool {
                let (a, b) = g.edge(e);
                if let Some(i) = inner.iter().position(|&x| x == e) {
                    inner_mask >> i & 1 == 1
                } else if !ends.contains(&a) {
                    side[a]
                } else {
                    side[b]
                }
            };
            let mut h = g.clone();
            let mut ok = true;
            for &e in es {
                let (u, v) = h.edge(e);
                let mv = |x: VertexId| -> Vec<VertexId> {
                    h.incident(x)
                        .iter()
                        .filter(|&&(_, f)| f != e && (f >= g.q() || edge_on_b(f)))
                        .map(|&(w, _)| w)
                        .collect()
                };
                let (um, vm) = (mv(u), mv(v));
                match edge_split_with(&h, e, &um, &vm) {
                    Ok(s) => h = s.graph,
                    Err(_) => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && split_disconnects(&h, g.n(), &ends) {
                return Some(h);
            }
        }
    }
    None
}

/// γ_es(G), searched like γ_vs over edge sets whose ends separate G.
pub fn e_split_connectivity(g: &Graph, limits: SplitLimits) -> Result<SplitConnectivity> {
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.q() > limits.max_edges {
        return Err(Error::SizeLimitExceeded(format!(
            "{} edges > cap {}",
            g.q(),
            limits.max_edges
        )));
    }
    let classical = edge_connectivity(g);
    for k in 1..=g.q() {
        for es in combinations(g.q(), k) {
            let mut ends: Vec<VertexId> =
                es.iter().flat_map(|&e| [g.edge(e).0, g.edge(e).1]).collect();
            ends.sort_unstable();
            ends.dedup();
            if ends.len() >= g.n() || remainder_components(g, &ends) < 2 {
                continue;
            }
            let mut budget = limits.witness_budget;
            if let Some(h) = edge_witness(g, &es, &mut budget) {
                return Ok(SplitConnectivity {
                    gamma: Some(k),
                    witness: es,
                    split_graph: Some(h),
                    classical,
                });
            }
        }
    }
    Ok(SplitConnectivity { gamma: None, witness: Vec::new(), split_graph: None, classical })
}

/// γ_vs by trying every split of every vertex subset, no pruning. Only for
/// cross-checking on tiny graphs.
pub fn v_split_connectivity_naive(g: &Graph) -> Option<usize> {
    for k in 1..g.n() {
        for vs in combinations(g.n(), k) {
            let options: Vec<Vec<Vec<EdgeId>>> = vs
                .iter()
                .map(|&v| {
                    let inc: Vec<EdgeId> = g.incident(v).iter().map(|&(_, e)| e).collect();
                    if inc.len() < 2 {
                        Vec::new()
                    } else {
                        proper_subsets(&inc)
                    }
                })
                .collect();
            if options.iter().any(|o| o.is_empty()) {
                continue;
            }
            let mut idx = vec![0; k];
            'odo: loop {
                let mut h = g.clone();
                for (i, &v) in vs.iter().enumerate() {
                    h = split_incidences(&h, v, &options[i][idx[i]]).expect("valid split");
                }
                if split_disconnects(&h, g.n(), &vs) {
                    return Some(k);
                }
                let mut i = 0;
                loop {
                    if i == k {
                        break 'odo;
                    }
                    idx[i] += 1;
                    if idx[i] < options[i].len() {
                        break;
                    }
                    idx[i] = 0;
                    i += 1;
                }
            }
        }
    }
    None
}
