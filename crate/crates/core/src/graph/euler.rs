//! Edge-disjoint cycle and trail decompositions.

use super::{EdgeId, Graph, VertexId};
use crate::error::{Error, Result};

/// A walk `vertices[0] e0 vertices[1] e1 …`; closed when first == last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trail {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Trail {
    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }
}

fn first_odd(g: &Graph) -> Option<VertexId> {
    (0..g.n()).find(|&v| g.degree(v) % 2 == 1)
}

fn next_unused(g: &Graph, v: VertexId, used: &[bool]) -> Option<(VertexId, EdgeId)> {
    g.incident(v).iter().filter(|&&(_, e)| !used[e]).min_by_key(|&&(_, e)| e).copied()
}

/// Peels cycles off in edge order: start at the lowest unused edge, always
/// leave by the lowest unused incident edge, and cut a cycle whenever the
/// walk returns to a vertex already on it.
pub fn euler_cycle_decomposition(g: &Graph) -> Result<Vec<Trail>> {
    if let Some(v) = first_odd(g) {
        return Err(Error::OddDegreeVertex(v));
    }
    let mut used = vec![false; g.q()];
    let mut cycles = Vec::new();
    while let Some(start) = (0..g.q()).find(|&e| !used[e]) {
        let mut verts = vec![g.edge(start).0];
        let mut edges: Vec<EdgeId> = Vec::new();
        loop {
            let cur = *verts.last().unwrap();
            let (w, e) = if edges.is_empty() {
                let (a, b) = g.edge(start);
                (if a == cur { b } else { a }, start)
            } else {
                match next_unused(g, cur, &used) {
                    Some(x) => x,
                    None => break,
                }
            };
            used[e] = true;
            edges.push(e);
            if let Some(i) = verts.iter().position(|&x| x == w) {
                let mut cv: Vec<VertexId> = verts.drain(i..).collect();
                cv.push(w);
                let ce: Vec<EdgeId> = edges.drain(i..).collect();
                cycles.push(Trail { vertices: cv, edges: ce });
                verts.push(w);
                if edges.is_empty() {
                    break;
                }
            } else {
                verts.push(w);
            }
        }
    }
    Ok(cycles)
}

/// Pairs odd vertices with virtual edges, walks an Euler circuit, and cuts
/// it at the virtual edges. Returns (odd vertices)/2 edge-disjoint trails
/// with odd end vertices that together cover E(G).
pub fn non_euler_path_decomposition(g: &Graph) -> Result<Vec<Trail>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let odd: Vec<VertexId> = (0..g.n()).filter(|&v| g.degree(v) % 2 == 1).collect();
    if odd.is_empty() {
        return Err(Error::AlreadyEulerian);
    }
    let mut h = g.clone();
    for pair in odd.chunks(2) {
        h.add_edge(pair[0], pair[1])?;
    }
    let virt = |e: EdgeId| e >= g.q();
    // Hierholzer, lowest edge id first.
    let mut used = vec![false; h.q()];
    let mut stack: Vec<(VertexId, Option<EdgeId>)> = vec![(odd[0], None)];
    let mut circuit: Vec<(VertexId, Option<EdgeId>)> = Vec::new();
    while let Some(&(v, _)) = stack.last() {
        match next_unused(&h, v, &used) {
            Some((w, e)) => {
                used[e] = true;
                stack.push((w, Some(e)));
            }
            None => circuit.push(stack.pop().unwrap()),
        }
    }
    circuit.reverse();
    // circuit[i].1 is the edge used to arrive at circuit[i].0
    let steps: Vec<(VertexId, EdgeId, VertexId)> =
        (1..circuit.len()).map(|i| (circuit[i - 1].0, circuit[i].1.unwrap(), circuit[i].0)).collect();
    let first_virtual = steps.iter().position(|s| virt(s.1)).expect("virtual edge present");
    let n = steps.len();
    let mut trails = Vec::new();
    let mut cur: Option<Trail> = None;
    for k in 1..=n {
        let (a, e, b) = steps[(first_virtual + k) % n];
        if virt(e) {
            if let Some(t) = cur.take() {
                trails.push(t);
            }
            continue;
        }
        let t = cur.get_or_insert_with(|| Trail { vertices: vec![a], edges: Vec::new() });
        t.edges.push(e);
        t.vertices.push(b);
    }
    if let Some(t) = cur {
        trails.push(t);
    }
    Ok(trails)
}
