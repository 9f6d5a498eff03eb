//! Every-zero graphic groups: n labellings of one graph where any element
//! can act as the zero, plus group colourings of trees, complete bipartite
//! graphs and ring-like networks.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::label::Label;
use crate::labelling::Labelling;
use crate::matrix::{Route, TopsnutMatrix};
use crate::tbpaw::TbPaw;
use std::collections::VecDeque;

/// Maps any integer onto the index range `[1, n]`, residue 0 going to n.
pub fn wrap_index(v: i64, n: usize) -> usize {
    ((v - 1).rem_euclid(n as i64) + 1) as usize
}

fn check_order(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::BadOrder(n as i64));
    }
    Ok(())
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange(i as i64));
    }
    Ok(())
}

/// `H_i ⊕ H_j` under zero `H_k` in a group of order `n`.
pub fn group_add(n: usize, i: usize, j: usize, k: usize) -> Result<usize> {
    check_order(n)?;
    for x in [i, j, k] {
        check_index(x, n)?;
    }
    Ok(wrap_index(i as i64 + j as i64 - k as i64, n))
}

/// Checks closure, commutativity, associativity, the zero law and inverses
/// of `group_add` for every choice of zero. Returns the first failure.
pub fn check_index_axioms(n: usize) -> Result<()> {
    check_order(n)?;
    let add = |i, j, k| group_add(n, i, j, k).expect("indices in range");
    for k in 1..=n {
        for i in 1..=n {
            if add(i, k, k) != i {
                return Err(Error::InvalidColoring(format!("zero law fails for i={i} k={k}")));
            }
            if !(1..=n).any(|j| add(i, j, k) == k) {
                return Err(Error::InvalidColoring(format!("no inverse of {i} under zero {k}")));
            }
            for j in 1..=n {
                if add(i, j, k) != add(j, i, k) {
                    return Err(Error::InvalidColoring(format!("{i},{j} do not commute under {k}")));
                }
                for l in 1..=n {
                    if add(add(i, j, k), l, k) != add(i, add(j, l, k), k) {
                        return Err(Error::InvalidColoring(format!("({i},{j},{l}) not associative under {k}")));
                    }
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EveryZeroGraphicGroup {
    pub base: Graph,
    pub labels: Labelling,
    pub n: usize,
}

impl EveryZeroGraphicGroup {
    /// Element `H_i` relabels every vertex to `f(x) + i - 1 (mod n)`; edge
    /// labels stay those of the base.
    pub fn new(h: Graph, f: Labelling, n: usize) -> Result<Self> {
        check_order(n)?;
        f.vertex_values()?;
        if f.vertex.len() != h.n() {
            return Err(Error::MissingLabel("labelling does not cover the base".into()));
        }
        let grp = EveryZeroGraphicGroup { base: h, labels: f, n };
        grp.check_axioms()?;
        Ok(grp)
    }

    pub fn add(&self, i: usize, j: usize, k: usize) -> Result<usize> {
        group_add(self.n, i, j, k)
    }

    pub fn vertex_labels(&self, i: usize) -> Result<Vec<i64>> {
        check_index(i, self.n)?;
        let n = self.n as i64;
        Ok(self.labels.vertex_values()?.into_iter().map(|v| (v + i as i64 - 1).rem_euclid(n)).collect())
    }

    pub fn element(&self, i: usize) -> Result<Labelling> {
        let mut l = self.labels.clone();
        l.vertex = self.vertex_labels(i)?.into_iter().map(Some).collect();
        l.scheme = None;
        Ok(l)
    }

    /// The labelwise law `h_i(x) + h_j(x) - h_k(x) ≡ h_{i⊕j}(x)` on every
    /// vertex and for every triple.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.n as i64;
        let all: Vec<Vec<i64>> = (1..=self.n).map(|i| self.vertex_labels(i)).collect::<Result<_>>()?;
        for k in 1..=self.n {
            for i in 1..=self.n {
                for j in 1..=self.n {
                    let s = self.add(i, j, k)?;
                    for x in 0..self.base.n() {
                        let lhs = (all[i - 1][x] + all[j - 1][x] - all[k - 1][x]).rem_euclid(n);
                        if lhs != all[s - 1][x] {
                            return Err(Error::InvalidColoring(format!(
                                "h{i}+h{j}-h{k} differs from h{s} at vertex {x}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `group n <order> base <graph-file> <labelling-file>`
    pub fn header(&self, graph_file: &str, labelling_file: &str) -> String {
        format!("group n {} base {graph_file} {labelling_file}", self.n)
    }

    /// Reads the header back into (order, graph file, labelling file).
    pub fn parse_header(line: &str) -> Result<(usize, String, String)> {
        let bad = |msg: &str| Error::Parse { line: 1, msg: msg.to_string() };
        let parts: Vec<&str> = line.split_whitespace().collect();
        match parts.as_slice() {
            ["group", "n", n, "base", g, l] => {
                let n: usize = n.parse().map_err(|_| bad("order is not a number"))?;
                check_order(n)?;
                Ok((n, g.to_string(), l.to_string()))
            }
            _ => Err(bad("expected: group n <order> base <graph-file> <labelling-file>")),
        }
    }
}

/// Element indices on a host's vertices and edges under one zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupLabelling {
    pub n: usize,
    pub zero: usize,
    pub vertex: Vec<usize>,
    pub edge: Vec<usize>,
}

impl GroupLabelling {
    /// Edge rule `index(uv) ≡ index(u) + index(v) - zero (mod n)`.
    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.vertex.len() != g.n() || self.edge.len() != g.q() {
            return Err(Error::InvalidColoring("assignment does not cover the host".into()));
        }
        check_order(self.n)?;
        check_index(self.zero, self.n)?;
        for &i in self.vertex.iter().chain(&self.edge) {
            check_index(i, self.n)?;
        }
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let want = group_add(self.n, self.vertex[u], self.vertex[v], self.zero)?;
            if self.edge[e] != want {
                return Err(Error::InvalidColoring(format!(
                    "edge {u}-{v} has index {} but its ends give {want}",
                    self.edge[e]
                )));
            }
        }
        Ok(())
    }

    /// Checks the edge rule and that the edge indices are `sequence` as a
    /// multiset.
    pub fn check_sequence(&self, g: &Graph, sequence: &[usize]) -> Result<()> {
        self.check(g)?;
        let mut a = self.edge.clone();
        let mut b = sequence.to_vec();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Err(Error::InvalidColoring(format!("edge indices {a:?} are not the sequence {b:?}")));
        }
        Ok(())
    }

    /// A group labelling has pairwise distinct vertex indices; otherwise it
    /// is only a group colouring.
    pub fn is_labelling(&self) -> bool {
        let mut v = self.vertex.clone();
        v.sort_unstable();
        v.windows(2).all(|w| w[0] != w[1])
    }

    /// Adds `s` to every index, zero included. The result obeys the edge
    /// rule again.
    pub fn shifted(&self, s: i64) -> GroupLabelling {
        let sh = |i: usize| wrap_index(i as i64 + s, self.n);
        GroupLabelling {
            n: self.n,
            zero: sh(self.zero),
            vertex: self.vertex.iter().map(|&i| sh(i)).collect(),
            edge: self.edge.iter().map(|&i| sh(i)).collect(),
        }
    }
}

/// The index forced on `v` when edge `uv` must carry `e`.
fn solve_far_end(e: usize, u: usize, zero: usize, n: usize) -> usize {
    wrap_index(e as i64 - u as i64 + zero as i64, n)
}

/// Start gets the zero; edges take the sequence in breadth-first order and
/// each new vertex takes the index that makes its edge come out right.
pub fn tree_group_coloring(
    t: &Graph,
    n: usize,
    sequence: &[usize],
    zero: usize,
    start: VertexId,
) -> Result<GroupLabelling> {
    check_order(n)?;
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if start >= t.n() {
        return Err(Error::UnknownVertex(start));
    }
    if sequence.len() != t.q() {
        return Err(Error::SequenceLengthMismatch { got: sequence.len(), want: t.q() });
    }
    check_index(zero, n)?;
    for &s in sequence {
        check_index(s, n)?;
    }
    let mut vertex = vec![0; t.n()];
    let mut edge = vec![0; t.q()];
    vertex[start] = zero;
    for (&(u, v), &e) in t.bfs_order(start).iter().zip(sequence) {
        vertex[v] = solve_far_end(e, vertex[u], zero, n);
        edge[t.find_edge(u, v).expect("tree edge")] = e;
    }
    let gl = GroupLabelling { n, zero, vertex, edge };
    debug_assert!(gl.check_sequence(t, sequence).is_ok());
    Ok(gl)
}

/// Colours any connected graph: a breadth-first tree takes the sequence as
/// in `tree_group_coloring`, the remaining edges get whatever index their
/// ends force.
pub fn spanning_group_coloring(
    g: &Graph,
    n: usize,
    tree_sequence: impl Fn(usize) -> usize,
    zero: usize,
    start: VertexId,
) -> Result<GroupLabelling> {
    check_order(n)?;
    check_index(zero, n)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut vertex = vec![0; g.n()];
    vertex[start] = zero;
    for (j, &(u, v)) in g.bfs_order(start).iter().enumerate() {
        vertex[v] = solve_far_end(wrap_index(tree_sequence(j) as i64, n), vertex[u], zero, n);
    }
    let edge = g
        .edges()
        .iter()
        .map(|&(u, v)| group_add(n, vertex[u], vertex[v], zero))
        .collect::<Result<_>>()?;
    Ok(GroupLabelling { n, zero, vertex, edge })
}

/// K_{m,cols} with parts `0..m` and `m..m+cols`. The edges carry
/// `a, a+b, …, a+(m·cols-1)b`; the zero is `H_a`.
pub fn complete_bipartite_group_labelling(
    m: usize,
    cols: usize,
    n: usize,
    a: usize,
    b: usize,
) -> Result<(Graph, GroupLabelling)> {
    check_order(n)?;
    check_index(a, n)?;
    if m == 0 || cols == 0 {
        return Err(Error::DegenerateParameters(format!("K_{{{m},{cols}}} has no edges")));
    }
    if b.is_multiple_of(n) {
        return Err(Error::DegenerateParameters(format!("step {b} vanishes mod {n}")));
    }
    let g = crate::graph::generate::complete_bipartite(m, cols);
    let at = |t: usize| wrap_index((a + t * b) as i64, n);
    let mut vertex = vec![0; m + cols];
    for k in 0..m {
        vertex[k] = at(k * cols);
    }
    for j in 0..cols {
        vertex[m + j] = at(j);
    }
    let gl = GroupLabelling {
        n,
        zero: a,
        vertex,
        edge: g.edges().iter().map(|&(u, v)| at(u * cols + (v - m))).collect(),
    };
    gl.check(&g)?;
    Ok((g, gl))
}

/// Vertices left after stripping leaves repeatedly (the 2-core), and the
/// edges among them.
fn core(g: &Graph) -> (Vec<bool>, Vec<EdgeId>) {
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; g.n()];
    let mut queue: VecDeque<VertexId> = (0..g.n()).filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = queue.pop_front() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    queue.push_back(w);
                }
            }
        }
    }
    let edges = (0..g.q())
        .filter(|&e| {
            let (u, v) = g.edge(e);
            alive[u] && alive[v]
        })
        .collect();
    (alive, edges)
}

/// Largest core handled by the exhaustive search.
pub const RING_SEARCH_LIMIT: usize = 8;

/// Colours a ring-like network: the core (a cycle, or any graph left after
/// stripping leaves) takes `core_sequence` through an exhaustive search,
/// then the hanging trees take `tree_sequence` in breadth-first order away
/// from the core.
pub fn ring_like_group_labelling(
    g: &Graph,
    n: usize,
    zero: usize,
    core_sequence: &[usize],
    tree_sequence: &[usize],
) -> Result<GroupLabelling> {
    check_order(n)?;
    check_index(zero, n)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (alive, core_edges) = core(g);
    if core_edges.is_empty() {
        return Err(Error::NotACycle);
    }
    if core_sequence.len() != core_edges.len() {
        return Err(Error::SequenceLengthMismatch { got: core_sequence.len(), want: core_edges.len() });
    }
    if core_sequence.len() + tree_sequence.len() != g.q() {
        return Err(Error::SequenceLengthMismatch {
            got: core_sequence.len() + tree_sequence.len(),
            want: g.q(),
        });
    }
    if core_edges.len() > RING_SEARCH_LIMIT {
        return Err(Error::SizeLimitExceeded(format!("core has {} edges", core_edges.len())));
    }
    for &s in core_sequence.iter().chain(tree_sequence) {
        check_index(s, n)?;
    }
    let root = alive.iter().position(|&a| a).expect("core is non-empty");
    let (vertex, edge) = search_core(g, n, zero, root, &core_edges, core_sequence).ok_or(Error::NoCycleColoring)?;

    let mut vertex = vertex;
    let mut edge = edge;
    let mut seen = alive.clone();
    let mut queue: VecDeque<VertexId> = (0..g.n()).filter(|&v| alive[v]).collect();
    let mut seq = tree_sequence.iter();
    while let Some(u) = queue.pop_front() {
        for &(w, e) in g.incident(u) {
            if !seen[w] {
                seen[w] = true;
                let s = *seq.next().expect("lengths checked");
                vertex[w] = solve_far_end(s, vertex[u], zero, n);
                edge[e] = s;
                queue.push_back(w);
            }
        }
    }
    let gl = GroupLabelling { n, zero, vertex, edge };
    let all: Vec<usize> = core_sequence.iter().chain(tree_sequence).copied().collect();
    gl.check_sequence(g, &all)?;
    Ok(gl)
}

/// Tries every assignment of the core sequence to core edges and every
/// index on the root, propagating along a spanning tree of the core and
/// checking the rest.
fn search_core(
    g: &Graph,
    n: usize,
    zero: usize,
    root: VertexId,
    core_edges: &[EdgeId],
    core_sequence: &[usize],
) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut sub = Graph::new(g.n());
    for &e in core_edges {
        let (u, v) = g.edge(e);
        sub.add_edge(u, v).expect("host ids");
    }
    let tree = sub.bfs_order(root);
    let mut perm: Vec<usize> = (0..core_edges.len()).collect();
    let mut sorted = core_sequence.to_vec();
    sorted.sort_unstable();
    loop {
        // Distinct multiset permutations only: skip when the assignment
        // repeats a value order already tried.
        let assign: Vec<usize> = perm.iter().map(|&p| sorted[p]).collect();
        if is_first_of_multiset(&perm, &sorted) {
            let mut edge = vec![0; g.q()];
            for (slot, &e) in core_edges.iter().enumerate() {
                edge[e] = assign[slot];
            }
            for r in 1..=n {
                let mut vertex = vec![0; g.n()];
                vertex[root] = r;
                for &(u, v) in &tree {
                    vertex[v] = solve_far_end(edge[g.find_edge(u, v).unwrap()], vertex[u], zero, n);
                }
                let ok = core_edges.iter().all(|&e| {
                    let (u, v) = g.edge(e);
                    group_add(n, vertex[u], vertex[v], zero).ok() == Some(edge[e])
                });
                if ok {
                    return Some((vertex, edge));
                }
            }
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

/// Equal values must appear with their positions in increasing order.
fn is_first_of_multiset(perm: &[usize], sorted: &[usize]) -> bool {
    let mut last: Vec<Option<usize>> = vec![None; sorted.len()];
    for &p in perm {
        let first = sorted.iter().position(|&s| s == sorted[p]).unwrap();
        if let Some(prev) = last[first] {
            if prev > p {
                return false;
            }
        }
        last[first] = Some(p);
    }
    true
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Matrices `A_i` with X and Y shifted by `i - 1 (mod n)` and W untouched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixGroup {
    pub base: TopsnutMatrix,
    pub n: usize,
}

impl MatrixGroup {
    pub fn new(base: TopsnutMatrix, n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(MatrixGroup { base, n })
    }

    pub fn shift_label(&self, l: &Label, i: usize) -> Label {
        let n = self.n as i64;
        l.map(|x| (x + i as i64 - 1).rem_euclid(n))
    }

    pub fn element(&self, i: usize) -> Result<TopsnutMatrix> {
        check_index(i, self.n)?;
        let row = |r: &[Label]| r.iter().map(|l| self.shift_label(l, i)).collect();
        Ok(TopsnutMatrix { x: row(&self.base.x), w: self.base.w.clone(), y: row(&self.base.y) })
    }

    pub fn add(&self, i: usize, j: usize, k: usize) -> Result<usize> {
        group_add(self.n, i, j, k)
    }

    /// Entrywise `A_i + A_j - A_k ≡ A_{i⊕j}` on X and Y for every triple.
    /// Set-valued cells are skipped.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.n as i64;
        let els: Vec<TopsnutMatrix> = (1..=self.n).map(|i| self.element(i)).collect::<Result<_>>()?;
        let nums = |m: &TopsnutMatrix| -> Vec<Option<i64>> { m.x.iter().chain(&m.y).map(Label::as_num).collect() };
        let vals: Vec<Vec<Option<i64>>> = els.iter().map(nums).collect();
        for k in 1..=self.n {
            for i in 1..=self.n {
                for j in 1..=self.n {
                    let s = self.add(i, j, k)?;
                    for c in 0..vals[0].len() {
                        if let (Some(a), Some(b), Some(z), Some(t)) =
                            (vals[i - 1][c], vals[j - 1][c], vals[k - 1][c], vals[s - 1][c])
                        {
                            if (a + b - z).rem_euclid(n) != t {
                                return Err(Error::InvalidColoring(format!("A{i}+A{j}-A{k} is not A{s}")));
                            }
                        }
                    }
                    if els[s - 1].w != self.base.w {
                        return Err(Error::InvalidColoring(format!("A{s} changed the W row")));
                    }
                }
            }
        }
        Ok(())
    }

    /// One fixed route applied to every element.
    pub fn tbpaw_group(&self, route: &Route) -> Result<Vec<TbPaw>> {
        (1..=self.n).map(|i| self.element(i)?.extract(route)).collect()
    }
}
