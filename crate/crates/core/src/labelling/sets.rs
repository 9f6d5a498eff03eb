//! Set-valued labellings of trees built by peeling leaves.

use super::VerificationReport;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetLabelling {
    /// Sorted, duplicate-free.
    pub vertex: Vec<Vec<i64>>,
    pub edge: Vec<Vec<i64>>,
    pub representatives: Option<Vec<i64>>,
}

impl SetLabelling {
    /// Fills the edge sets with f(u) ∩ f(v).
    fn from_vertex_sets(g: &Graph, vertex: Vec<Vec<i64>>, representatives: Option<Vec<i64>>) -> Self {
        let edge = g.edges().iter().map(|&(u, v)| intersect(&vertex[u], &vertex[v])).collect();
        SetLabelling { vertex, edge, representatives }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntersectionMode {
    Graceful,
    OddGraceful,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetScheme {
    GracefulIntersection,
    OddGracefulIntersection,
    RainbowIntersection,
}

/// R_k = [1, len_k] for the chosen length rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RainbowSequence {
    /// len_k = k
    Regular,
    /// len_k = 2k−1
    Odd,
    /// len_k = F_{k+1}: 1, 2, 3, 5, 8, …
    Fibonacci,
    /// The first τ lengths are given; each later one sums the τ before it.
    TauTerm { tau: usize, seeds: Vec<i64> },
}

impl RainbowSequence {
    pub fn lengths(&self, count: usize) -> Result<Vec<i64>> {
        let mut out: Vec<i64> = Vec::with_capacity(count);
        match self {
            RainbowSequence::Regular => out.extend(1..=count as i64),
            RainbowSequence::Odd => out.extend((1..=count as i64).map(|k| 2 * k - 1)),
            RainbowSequence::Fibonacci => {
                let (mut a, mut b) = (1i64, 2i64);
                for _ in 0..count {
                    out.push(a);
                    (a, b) = (b, a.checked_add(b).ok_or_else(|| Error::BadSequenceParams("overflow".into()))?);
                }
            }
            RainbowSequence::TauTerm { tau, seeds } => {
                if *tau < 2 || seeds.len() != *tau {
                    return Err(Error::BadSequenceParams(format!("need τ ≥ 2 seeds, got τ={tau}, {} seeds", seeds.len())));
                }
                if seeds.iter().any(|&a| a <= 1) || seeds.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::BadSequenceParams("seeds must exceed 1 and increase".into()));
                }
                for k in 0..count {
                    let next = if k < *tau {
                        seeds[k]
                    } else {
                        out[k - tau..k]
                            .iter()
                            .try_fold(0i64, |acc, &x| acc.checked_add(x))
                            .ok_or_else(|| Error::BadSequenceParams("overflow".into()))?
                    };
                    out.push(next);
                }
            }
        }
        Ok(out)
    }
}

fn intersect(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

/// Leaf removals (leaf, its neighbour, edge) until one vertex is left.
/// `first` picks the opening leaf; afterwards the smallest id goes first.
fn peel(t: &Graph, first: Option<VertexId>) -> Result<Vec<(VertexId, VertexId, EdgeId)>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.n() < 2 {
        return Err(Error::DegenerateParameters("a single vertex has no edges to label".into()));
    }
    let mut deg: Vec<usize> = (0..t.n()).map(|v| t.degree(v)).collect();
    let mut gone = vec![false; t.n()];
    let mut out = Vec::with_capacity(t.q());
    let mut next = first;
    if let Some(x) = first {
        t.check(x)?;
        if deg[x] != 1 {
            return Err(Error::DegenerateParameters(format!("vertex {x} is not a leaf")));
        }
    }
    while out.len() < t.q() {
        let x = match next.take() {
            Some(x) => x,
            None => (0..t.n()).find(|&v| !gone[v] && deg[v] == 1).expect("a tree with an edge has a leaf"),
        };
        let &(y, e) = t.incident(x).iter().find(|(w, _)| !gone[*w]).expect("leaf has a live neighbour");
        gone[x] = true;
        deg[x] -= 1;
        deg[y] -= 1;
        out.push((x, y, e));
    }
    Ok(out)
}

/// Rebuilds the tree from its last edge outwards: the base edge gets {1} on
/// both ends, and the j-th edge re-added puts its value on the new leaf and
/// adds it to the leaf's neighbour. Edge representatives are those values.
pub fn intersection_set_labelling(t: &Graph, mode: IntersectionMode) -> Result<SetLabelling> {
    let order = peel(t, None)?;
    let value = |j: i64| match mode {
        IntersectionMode::Graceful => j,
        IntersectionMode::OddGraceful => 2 * j - 1,
    };
    let mut sets = vec![Vec::new(); t.n()];
    let mut reps = vec![0; t.q()];
    for (j, &(x, y, e)) in order.iter().rev().enumerate() {
        let val = value(j as i64 + 1);
        for v in [x, y] {
            sets[v].push(val);
            sets[v].sort_unstable();
        }
        reps[e] = val;
    }
    Ok(SetLabelling::from_vertex_sets(t, sets, Some(reps)))
}

/// The k-th peeled leaf gets R_k and the surviving vertex R_{q+1}; each edge
/// set is then the leaf's own set.
pub fn rainbow_set_labelling(t: &Graph, seq: &RainbowSequence) -> Result<SetLabelling> {
    rainbow_set_labelling_from(t, seq, None)
}

/// As `rainbow_set_labelling`, opening the peel at a chosen leaf. Different
/// opening leaves give different labellings.
pub fn rainbow_set_labelling_from(
    t: &Graph,
    seq: &RainbowSequence,
    first: Option<VertexId>,
) -> Result<SetLabelling> {
    let order = peel(t, first)?;
    let lens = seq.lengths(t.q() + 1)?;
    let mut sets = vec![Vec::new(); t.n()];
    for (k, &(x, _, _)) in order.iter().enumerate() {
        sets[x] = (1..=lens[k]).collect();
    }
    let (_, root, _) = *order.last().expect("at least one edge");
    sets[root] = (1..=lens[t.q()]).collect();
    Ok(SetLabelling::from_vertex_sets(t, sets, None))
}

/// Kuhn's augmenting paths: can each edge pick a distinct value from its
/// own set so that all of `targets` is used?
fn has_system_of_representatives(edge_sets: &[Vec<i64>], targets: &[i64]) -> bool {
    if edge_sets.len() != targets.len() {
        return false;
    }
    let mut owner: Vec<Option<usize>> = vec![None; targets.len()];
    fn augment(e: usize, sets: &[Vec<i64>], targets: &[i64], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for (t, val) in targets.iter().enumerate() {
            if seen[t] || sets[e].binary_search(val).is_err() {
                continue;
            }
            seen[t] = true;
            if owner[t].is_none() || augment(owner[t].unwrap(), sets, targets, seen, owner) {
                owner[t] = Some(e);
                return true;
            }
        }
        false
    }
    (0..edge_sets.len()).all(|e| {
        let mut seen = vec![false; targets.len()];
        augment(e, edge_sets, targets, &mut seen, &mut owner)
    })
}

pub fn verify_set(g: &Graph, l: &SetLabelling, scheme: SetScheme) -> Result<VerificationReport> {
    if l.vertex.len() != g.n() || l.edge.len() != g.q() {
        return Err(Error::SizeMismatch("set labelling does not match the graph".into()));
    }
    let mut r = VerificationReport::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let want = intersect(&l.vertex[u], &l.vertex[v]);
        r.check(l.edge[e] == want, "edge-intersection", || format!("edge {e}"));
    }
    // the two-vertex base case of the intersection construction shares {1}
    let base_case = g.n() == 2 && scheme != SetScheme::RainbowIntersection;
    if !base_case {
        for a in 0..g.n() {
            if let Some(b) = (a + 1..g.n()).find(|&b| l.vertex[a] == l.vertex[b]) {
                r.fail("vertex-distinct", format!("vertices {a} and {b}"));
            }
        }
    }
    let q = g.q() as i64;
    match scheme {
        SetScheme::GracefulIntersection | SetScheme::OddGracefulIntersection => {
            let odd = scheme == SetScheme::OddGracefulIntersection;
            let top = if odd { 2 * q - 1 } else { q };
            for (v, s) in l.vertex.iter().enumerate() {
                r.check(!s.is_empty() && s.iter().all(|x| (1..=top).contains(x)), "vertex-range", || {
                    format!("vertex {v} set {s:?}")
                });
            }
            let targets: Vec<i64> = if odd { (1..=q).map(|i| 2 * i - 1).collect() } else { (1..=q).collect() };
            match &l.representatives {
                Some(reps) => {
                    for (e, a) in reps.iter().enumerate() {
                        r.check(l.edge[e].contains(a), "representative", || format!("edge {e} picks {a}"));
                    }
                    let mut sorted = reps.clone();
                    sorted.sort_unstable();
                    r.check(sorted == targets, "representatives", || format!("{sorted:?}"));
                }
                None => {
                    r.check(has_system_of_representatives(&l.edge, &targets), "representatives", || {
                        "no matching of edges onto the target range".into()
                    });
                }
            }
        }
        SetScheme::RainbowIntersection => {
            for (v, s) in l.vertex.iter().enumerate() {
                let interval = !s.is_empty() && s.iter().zip(1..).all(|(&x, i)| x == i);
                r.check(interval, "rainbow-form", || format!("vertex {v} set {s:?} is not [1,a]"));
            }
        }
    }
    Ok(r)
}
