//! Neighbor-method generators: each reads a labelled graph block by block.

use super::TbPaw;
use crate::error::{Error, Result};
use crate::graph::{classify_tree, euler_cycle_decomposition, non_euler_path_decomposition, Graph, VertexId};
use crate::label::Label;
use crate::labelling::{verify, Labelling, Scheme};
use crate::matrix::factorial;
use num_bigint::BigUint;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

/// Vertex labels only, or vertex and edge labels interleaved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Vv,
    Vev,
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vv" => Ok(Kind::Vv),
            "vev" => Ok(Kind::Vev),
            _ => Err(Error::Parse { line: 0, msg: format!("unknown kind {s}") }),
        }
    }
}

/// The order in which a block lists its neighbors. Equal labels fall back
/// to vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum NeighborPolicy {
    #[default]
    Mini,
    Maxi,
    /// A fixed order per vertex; vertices not listed use `Mini`.
    Explicit(BTreeMap<VertexId, Vec<VertexId>>),
}

impl FromStr for NeighborPolicy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mini" => Ok(NeighborPolicy::Mini),
            "maxi" => Ok(NeighborPolicy::Maxi),
            _ => Err(Error::Parse { line: 0, msg: format!("unknown policy {s}") }),
        }
    }
}

impl fmt::Display for NeighborPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NeighborPolicy::Mini => f.write_str("mini"),
            NeighborPolicy::Maxi => f.write_str("maxi"),
            NeighborPolicy::Explicit(_) => f.write_str("explicit"),
        }
    }
}

impl NeighborPolicy {
    fn order(&self, l: &Labelling, u: VertexId, mut cands: Vec<VertexId>) -> Result<Vec<VertexId>> {
        if let NeighborPolicy::Explicit(map) = self {
            if let Some(given) = map.get(&u) {
                let a: BTreeSet<_> = given.iter().collect();
                let b: BTreeSet<_> = cands.iter().collect();
                if a != b || given.len() != cands.len() {
                    return Err(Error::BadPermutation);
                }
                return Ok(given.clone());
            }
        }
        let keys: BTreeMap<VertexId, i64> = cands.iter().map(|&v| Ok((v, l.v(v)?))).collect::<Result<_>>()?;
        cands.sort_by_key(|v| (keys[v], *v));
        if *self == NeighborPolicy::Maxi {
            cands.sort_by_key(|v| (std::cmp::Reverse(keys[v]), *v));
        }
        Ok(cands)
    }
}

struct Emitter<'a> {
    g: &'a Graph,
    l: &'a Labelling,
    kind: Kind,
    out: Vec<Label>,
}

impl<'a> Emitter<'a> {
    fn new(g: &'a Graph, l: &'a Labelling, kind: Kind) -> Self {
        Emitter { g, l, kind, out: Vec::new() }
    }

    fn vertex(&mut self, v: VertexId) -> Result<()> {
        self.out.push(Label::Num(self.l.v(v)?));
        Ok(())
    }

    /// The edge label between u and v, skipped for vv.
    fn edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        if self.kind == Kind::Vev {
            let e = self.g.find_edge(u, v).ok_or(Error::NotAWalk)?;
            self.out.push(Label::Num(self.l.e(e)?));
        }
        Ok(())
    }

    /// f(u) [f(uv) f(v)]… f(u)
    fn block(&mut self, u: VertexId, body: &[VertexId]) -> Result<()> {
        self.vertex(u)?;
        for &v in body {
            self.edge(u, v)?;
            self.vertex(v)?;
        }
        self.vertex(u)
    }

    fn finish(self, provenance: String) -> TbPaw {
        TbPaw::new(self.out, provenance)
    }
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Vv => "vv",
        Kind::Vev => "vev",
    }
}

/// Labels along a walk; vev puts each step's edge label between its ends.
pub fn path_method(g: &Graph, l: &Labelling, walk: &[VertexId], kind: Kind) -> Result<TbPaw> {
    if walk.is_empty() || walk.iter().any(|&v| v >= g.n()) || walk.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return Err(Error::NotAWalk);
    }
    let mut em = Emitter::new(g, l, kind);
    em.vertex(walk[0])?;
    for w in walk.windows(2) {
        em.edge(w[0], w[1])?;
        em.vertex(w[1])?;
    }
    Ok(em.finish(format!("path {}", kind_name(kind))))
}

fn check_path(g: &Graph, spine: &[VertexId]) -> Result<()> {
    let distinct: BTreeSet<_> = spine.iter().collect();
    if spine.is_empty()
        || distinct.len() != spine.len()
        || spine.iter().any(|&v| v >= g.n())
        || spine.windows(2).any(|w| !g.has_edge(w[0], w[1]))
    {
        return Err(Error::NotAPath);
    }
    Ok(())
}

/// Neighbors listed in a spine block: all of N(u) except the spine vertex
/// before it.
fn spine_body(g: &Graph, spine: &[VertexId], i: usize) -> Vec<VertexId> {
    let prev = if i > 0 { Some(spine[i - 1]) } else { None };
    g.neighbors(spine[i]).into_iter().filter(|&w| Some(w) != prev).collect()
}

/// One block f(u)〈neighbors〉f(u) per spine vertex, in spine order.
pub fn path_neighbor_method(
    g: &Graph,
    l: &Labelling,
    spine: &[VertexId],
    policy: &NeighborPolicy,
    kind: Kind,
) -> Result<TbPaw> {
    check_path(g, spine)?;
    let mut em = Emitter::new(g, l, kind);
    for i in 0..spine.len() {
        let body = policy.order(l, spine[i], spine_body(g, spine, i))?;
        em.block(spine[i], &body)?;
    }
    Ok(em.finish(format!("path-neighbor {} {policy}", kind_name(kind))))
}

/// ∏ m_i! where m_i is the size of block i.
pub fn path_neighbor_variant_count(g: &Graph, spine: &[VertexId]) -> Result<BigUint> {
    check_path(g, spine)?;
    Ok((0..spine.len()).map(|i| factorial(spine_body(g, spine, i).len() as u64)).product())
}

fn check_cycle(g: &Graph, cycle: &[VertexId]) -> Result<()> {
    if cycle.len() < 3 {
        return Err(Error::NotACycle);
    }
    check_path(g, cycle).map_err(|_| Error::NotACycle)?;
    if !g.has_edge(cycle[cycle.len() - 1], cycle[0]) {
        return Err(Error::NotACycle);
    }
    Ok(())
}

fn rotate(cycle: &[VertexId], start: usize) -> Vec<VertexId> {
    let mut c = cycle.to_vec();
    c.rotate_left(start % cycle.len());
    c
}

/// The start vertex lists all its neighbors; every later cycle vertex drops
/// its predecessor.
fn cycle_bodies(g: &Graph, c: &[VertexId]) -> Vec<Vec<VertexId>> {
    (0..c.len())
        .map(|i| {
            let prev = if i > 0 { Some(c[i - 1]) } else { None };
            g.neighbors(c[i]).into_iter().filter(|&w| Some(w) != prev).collect()
        })
        .collect()
}

/// Blocks around the cycle from `cycle[start]`, then the first block again.
pub fn cycle_neighbor_method(
    g: &Graph,
    l: &Labelling,
    cycle: &[VertexId],
    start: usize,
    policy: &NeighborPolicy,
    kind: Kind,
) -> Result<TbPaw> {
    check_cycle(g, cycle)?;
    let c = rotate(cycle, start);
    let bodies = cycle_bodies(g, &c);
    let mut em = Emitter::new(g, l, kind);
    let first = policy.order(l, c[0], bodies[0].clone())?;
    em.block(c[0], &first)?;
    for i in 1..c.len() {
        let body = policy.order(l, c[i], bodies[i].clone())?;
        em.block(c[i], &body)?;
    }
    em.block(c[0], &first)?;
    Ok(em.finish(format!("cycle-neighbor {} {policy} start {}", kind_name(kind), c[0])))
}

/// Body orderings available from one start: ∏ |body_i|!.
pub fn cycle_start_variants(g: &Graph, cycle: &[VertexId], start: usize) -> Result<BigUint> {
    check_cycle(g, cycle)?;
    let c = rotate(cycle, start);
    Ok(cycle_bodies(g, &c).iter().map(|b| factorial(b.len() as u64)).product())
}

/// n·(m₁+1)!·(m_n+1)!·∏_{i=2}^{n−1} m_i!, with m_i the block sizes of the
/// path-neighbor method on the spine before the closing edge was added.
pub fn cycle_formula_count(block_sizes: &[u64]) -> Result<BigUint> {
    let n = block_sizes.len();
    if n < 3 {
        return Err(Error::NotACycle);
    }
    let inner: BigUint = block_sizes[1..n - 1].iter().map(|&m| factorial(m)).product();
    Ok(BigUint::from(n) * factorial(block_sizes[0] + 1) * factorial(block_sizes[n - 1] + 1) * inner)
}

/// The caterpillar core of a lobster: its spine in path order, and for each
/// spine neighbor off the spine, the leaves hanging from it.
fn lobster_layers(t: &Graph) -> Result<(Vec<VertexId>, BTreeSet<VertexId>)> {
    let c = classify_tree(t);
    if !c.is_lobster {
        return Err(Error::NotALobster);
    }
    if c.is_caterpillar {
        let spine = crate::graph::spine_of(t)?;
        return Ok((spine, BTreeSet::new()));
    }
    // two rounds of leaf stripping leave the spine
    let core: BTreeSet<VertexId> = c.witness[2].iter().copied().collect();
    let start = *core
        .iter()
        .find(|&&v| t.neighbors(v).iter().filter(|w| core.contains(w)).count() <= 1)
        .expect("the core is a path");
    let mut spine = vec![start];
    while let Some(&next) =
        t.neighbors(*spine.last().unwrap()).iter().find(|w| core.contains(w) && !spine.contains(w))
    {
        spine.push(next);
    }
    let near: BTreeSet<VertexId> = spine.iter().flat_map(|&u| t.neighbors(u)).collect();
    let far = (0..t.n()).filter(|v| !near.contains(v) && !core.contains(v)).collect();
    Ok((spine, far))
}

/// Spine blocks where each listed neighbor is followed by the new leaves
/// hanging from it and then the neighbor again. As in the spine blocks, no
/// edge label is repeated before the closing vertex.
pub fn lobster_neighbor_method(t: &Graph, l: &Labelling, policy: &NeighborPolicy, kind: Kind) -> Result<TbPaw> {
    let (spine, far) = lobster_layers(t)?;
    let mut em = Emitter::new(t, l, kind);
    let on_spine: BTreeSet<VertexId> = spine.iter().copied().collect();
    for i in 0..spine.len() {
        let u = spine[i];
        em.vertex(u)?;
        let body = policy.order(l, u, spine_body(t, &spine, i))?;
        for v in body {
            em.edge(u, v)?;
            em.vertex(v)?;
            if on_spine.contains(&v) {
                continue;
            }
            let hairs: Vec<VertexId> = t.neighbors(v).into_iter().filter(|w| far.contains(w)).collect();
            if hairs.is_empty() {
                continue;
            }
            let hairs = policy.order(l, v, hairs)?;
            for &a in &hairs {
                em.edge(v, a)?;
                em.vertex(a)?;
            }
            em.vertex(v)?;
        }
        em.vertex(u)?;
    }
    Ok(em.finish(format!("lobster-neighbor {} {policy}", kind_name(kind))))
}

/// The body (the single vertex of degree ≥ 3, or a star's centre), its
/// leaf neighbors and its legs as vertex sequences leaving the body.
fn spider_parts(s: &Graph) -> Result<(VertexId, Vec<VertexId>, Vec<Vec<VertexId>>)> {
    if !s.is_tree() {
        return Err(Error::NotASpider);
    }
    let hubs: Vec<VertexId> = (0..s.n()).filter(|&v| s.degree(v) >= 3).collect();
    let &[body] = hubs.as_slice() else {
        return Err(Error::NotASpider);
    };
    let mut leaves = Vec::new();
    let mut legs = Vec::new();
    for w in s.neighbors(body) {
        if s.degree(w) == 1 {
            leaves.push(w);
            continue;
        }
        let mut leg = vec![w];
        let mut prev = body;
        while let Some(&next) = s.neighbors(*leg.last().unwrap()).iter().find(|&&x| x != prev) {
            prev = *leg.last().unwrap();
            leg.push(next);
        }
        legs.push(leg);
    }
    Ok((body, leaves, legs))
}

/// Starts at the body, lists its leaf neighbors, then walks each leg after
/// re-anchoring at the body. Explicit orders for the body mix leaves and
/// legs freely. Returns the TB-paw and the (k+n)! count of orders.
pub fn spider_neighbor_method(s: &Graph, l: &Labelling, policy: &NeighborPolicy, kind: Kind) -> Result<(TbPaw, BigUint)> {
    let (body, leaves, legs) = spider_parts(s)?;
    let count = factorial((leaves.len() + legs.len()) as u64);
    let order = match policy {
        NeighborPolicy::Explicit(m) if m.contains_key(&body) => policy.order(l, body, s.neighbors(body))?,
        _ => {
            let firsts = policy.order(l, body, legs.iter().map(|leg| leg[0]).collect())?;
            policy.order(l, body, leaves.clone())?.into_iter().chain(firsts).collect()
        }
    };
    let mut em = Emitter::new(s, l, kind);
    em.vertex(body)?;
    for w in order {
        match legs.iter().find(|leg| leg[0] == w) {
            None => {
                em.edge(body, w)?;
                em.vertex(w)?;
            }
            Some(leg) => {
                em.vertex(body)?;
                em.edge(body, w)?;
                em.vertex(w)?;
                for p in leg.windows(2) {
                    em.edge(p[0], p[1])?;
                    em.vertex(p[1])?;
                }
            }
        }
    }
    Ok((em.finish(format!("spider-neighbor {} {policy}", kind_name(kind))), count))
}

/// vev blocks of the decomposition's trails (cycles when every degree is
/// even, otherwise paths between odd vertices), taken in `order`. A
/// shorter `order` gives the prefix variant.
pub fn euler_hamilton_method(g: &Graph, l: &Labelling, order: Option<&[usize]>) -> Result<TbPaw> {
    let trails = if (0..g.n()).all(|v| g.degree(v).is_multiple_of(2)) {
        euler_cycle_decomposition(g)?
    } else {
        non_euler_path_decomposition(g)?
    };
    let ids: Vec<usize> = match order {
        Some(o) => o.to_vec(),
        None => (0..trails.len()).collect(),
    };
    let distinct: BTreeSet<_> = ids.iter().collect();
    if distinct.len() != ids.len() || ids.iter().any(|&i| i >= trails.len()) {
        return Err(Error::BadPermutation);
    }
    let mut out = Vec::new();
    for i in ids {
        let t = &trails[i];
        out.push(Label::Num(l.v(t.vertices[0])?));
        for (k, &e) in t.edges.iter().enumerate() {
            out.push(Label::Num(l.e(e)?));
            out.push(Label::Num(l.v(t.vertices[k + 1])?));
        }
    }
    Ok(TbPaw::new(out, format!("euler-hamilton over {} trails", trails.len())))
}

/// Number of trails the Euler-Hamilton method would concatenate.
pub fn euler_block_count(g: &Graph) -> Result<usize> {
    if (0..g.n()).all(|v| g.degree(v).is_multiple_of(2)) {
        Ok(euler_cycle_decomposition(g)?.len())
    } else {
        Ok(non_euler_path_decomposition(g)?.len())
    }
}

/// Reads a tree from `root`. The root's children go in ascending label
/// order; a run of consecutive leaf children shares one block, every other
/// child opens its own. A block is f(root) followed, per child, by the
/// child's edge and label and then its subtree in preorder.
pub fn rooted_block_emission(t: &Graph, l: &Labelling, root: VertexId, kind: Kind) -> Result<TbPaw> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    t.check(root)?;
    let children = NeighborPolicy::Mini.order(l, root, t.neighbors(root))?;
    let mut em = Emitter::new(t, l, kind);
    fn subtree(em: &mut Emitter, parent: VertexId, v: VertexId) -> Result<()> {
        let kids = NeighborPolicy::Mini.order(em.l, v, em.g.neighbors(v).into_iter().filter(|&w| w != parent).collect())?;
        for w in kids {
            em.edge(v, w)?;
            em.vertex(w)?;
            subtree(em, v, w)?;
        }
        Ok(())
    }
    let mut i = 0;
    while i < children.len() {
        em.vertex(root)?;
        let leaf = |v: VertexId| t.degree(v) == 1;
        let mut j = i + 1;
        if leaf(children[i]) {
            while j < children.len() && leaf(children[j]) {
                j += 1;
            }
        }
        for &c in &children[i..j] {
            em.edge(root, c)?;
            em.vertex(c)?;
            subtree(&mut em, root, c)?;
        }
        i = j;
    }
    Ok(em.finish(format!("rooted blocks {} from {root}", kind_name(kind))))
}

/// One vev TB-paw per interpretation of the same vertex labelling; each
/// interpretation must pass its own scheme.
pub fn multiple_meaning_emit(g: &Graph, interpretations: &[(Scheme, Labelling)], start: VertexId) -> Result<Vec<TbPaw>> {
    interpretations
        .iter()
        .map(|(s, l)| {
            let r = verify(g, l, s)?;
            if !r.pass {
                let why = r.violated.iter().map(|(c, w)| format!("{c}: {w}")).collect::<Vec<_>>().join("; ");
                return Err(Error::SchemeViolation(format!("{s}: {why}")));
            }
            let mut d = rooted_block_emission(g, l, start, Kind::Vev)?;
            d.provenance = format!("{s} {}", d.provenance);
            Ok(d)
        })
        .collect()
}
