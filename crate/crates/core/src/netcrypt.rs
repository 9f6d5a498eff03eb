//! Encrypted networks: every host vertex and host edge becomes a labelled
//! copy of the base graph, and join edges stitch the copies together along
//! the host's edges.

use crate::error::{Error, Result};
use crate::graph::spanning::{spanning_tree_degree_preserve, spanning_tree_max_leaf, spanning_tree_predefined};
use crate::graph::{io, EdgeId, Graph, VertexId};
use crate::groups::{spanning_group_coloring, tree_group_coloring, EveryZeroGraphicGroup, GroupLabelling};
use crate::label::Label;
use crate::matrix::{Route, TopsnutMatrix};
use crate::rng::Lcg;
use crate::tbpaw::TbPaw;
use std::fmt;
use std::str::FromStr;

/// Which vertex of each block a join edge lands on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JoinPolicy {
    Smallest,
    Seeded(u64),
}

impl fmt::Display for JoinPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JoinPolicy::Smallest => write!(f, "smallest"),
            JoinPolicy::Seeded(s) => write!(f, "seeded:{s}"),
        }
    }
}

impl FromStr for JoinPolicy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "smallest" => Ok(JoinPolicy::Smallest),
            _ => s
                .strip_prefix("seeded:")
                .and_then(|n| n.parse().ok())
                .map(JoinPolicy::Seeded)
                .ok_or_else(|| Error::Parse { line: 0, msg: format!("unknown join policy {s}") }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockOwner {
    Vertex(VertexId),
    Edge(EdgeId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub owner: BlockOwner,
    /// Group element index carried by the copy.
    pub element: usize,
    /// First expanded vertex id of the copy.
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinEdge {
    pub blocks: (usize, usize),
    pub ends: (VertexId, VertexId),
    pub label: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncryptedNetwork {
    pub host: Graph,
    pub group: EveryZeroGraphicGroup,
    pub assignment: GroupLabelling,
    /// Host vertices first, then host edges.
    pub blocks: Vec<Block>,
    pub joins: Vec<JoinEdge>,
    pub expanded: Graph,
    pub policy: JoinPolicy,
}

pub fn encrypt_network(
    g: &Graph,
    grp: &EveryZeroGraphicGroup,
    coloring: &GroupLabelling,
    policy: JoinPolicy,
) -> Result<EncryptedNetwork> {
    if coloring.n != grp.n {
        return Err(Error::InvalidColoring(format!("colouring order {} but group order {}", coloring.n, grp.n)));
    }
    coloring.check(g).map_err(|e| match e {
        Error::InvalidColoring(m) => Error::InvalidColoring(m),
        other => Error::InvalidColoring(other.to_string()),
    })?;
    let size = grp.base.n();
    if size == 0 {
        return Err(Error::InvalidColoring("base graph is empty".into()));
    }
    let owners = (0..g.n()).map(BlockOwner::Vertex).chain((0..g.q()).map(BlockOwner::Edge));
    let blocks: Vec<Block> = owners
        .enumerate()
        .map(|(b, owner)| {
            let element = match owner {
                BlockOwner::Vertex(v) => coloring.vertex[v],
                BlockOwner::Edge(e) => coloring.edge[e],
            };
            Block { owner, element, offset: b * size }
        })
        .collect();
    let mut expanded = Graph::new(blocks.len() * size);
    for b in &blocks {
        for &(x, y) in grp.base.edges() {
            expanded.add_edge(b.offset + x, b.offset + y)?;
        }
    }
    let mut rng = match policy {
        JoinPolicy::Seeded(s) => Some(Lcg::new(s)),
        JoinPolicy::Smallest => None,
    };
    let mut pick = |b: &Block| b.offset + rng.as_mut().map_or(0, |r| r.below(size));
    let mut joins = Vec::with_capacity(2 * g.q());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let eb = g.n() + e;
        for (a, b) in [(u, eb), (eb, v)] {
            let ends = (pick(&blocks[a]), pick(&blocks[b]));
            expanded.add_edge(ends.0, ends.1)?;
            joins.push(JoinEdge { blocks: (a, b), ends, label: joins.len() as i64 + 1 });
        }
    }
    Ok(EncryptedNetwork {
        host: g.clone(),
        group: grp.clone(),
        assignment: coloring.clone(),
        blocks,
        joins,
        expanded,
        policy,
    })
}

impl EncryptedNetwork {
    pub fn block_size(&self) -> usize {
        self.group.base.n()
    }

    pub fn vertex_block(&self, v: VertexId) -> usize {
        v
    }

    pub fn edge_block(&self, e: EdgeId) -> usize {
        self.host.n() + e
    }

    /// Block of an expanded vertex.
    pub fn block_of(&self, x: VertexId) -> usize {
        x / self.block_size()
    }

    /// Label of an expanded vertex under its block's element.
    pub fn vertex_label(&self, x: VertexId) -> Result<i64> {
        let b = &self.blocks[self.block_of(x)];
        Ok(self.group.vertex_labels(b.element)?[x - b.offset])
    }

    /// Block counts, join counts and the colouring rule.
    pub fn check(&self) -> Result<()> {
        let (n, q) = (self.host.n(), self.host.q());
        let fail = |m: String| Err(Error::InvalidColoring(m));
        if self.blocks.len() != n + q {
            return fail(format!("{} blocks for {} vertices and {} edges", self.blocks.len(), n, q));
        }
        self.assignment.check(&self.host)?;
        for (e, &(u, v)) in self.host.edges().iter().enumerate() {
            let eb = n + e;
            for pair in [(u, eb), (eb, v)] {
                let c = self.joins.iter().filter(|j| j.blocks == pair).count();
                if c != 1 {
                    return fail(format!("blocks {pair:?} joined {c} times"));
                }
            }
        }
        for j in &self.joins {
            if self.block_of(j.ends.0) != j.blocks.0 || self.block_of(j.ends.1) != j.blocks.1 {
                return fail(format!("join {} leaves its blocks", j.label));
            }
        }
        let want = (n + q) * self.group.base.q() + self.joins.len();
        if self.expanded.q() != want || self.expanded.n() != (n + q) * self.block_size() {
            return fail("expanded graph has the wrong size".into());
        }
        Ok(())
    }

    pub fn block_tbpaw(&self, b: usize, route: &Route) -> Result<TbPaw> {
        let el = self.blocks[b].element;
        let m = TopsnutMatrix::of(&self.group.base, &self.group.element(el)?)?;
        let mut d = m.extract(route)?;
        d.provenance = format!("H{el}");
        Ok(d)
    }

    fn join_tbpaw(&self, j: &JoinEdge) -> Result<TbPaw> {
        let tokens = vec![
            Label::Num(self.vertex_label(j.ends.0)?),
            Label::Num(j.label),
            Label::Num(self.vertex_label(j.ends.1)?),
        ];
        let (a, b) = (self.blocks[j.blocks.0].element, self.blocks[j.blocks.1].element);
        Ok(TbPaw::new(tokens, format!("a{a}b{b}")))
    }

    fn join_between(&self, a: usize, b: usize) -> Result<&JoinEdge> {
        self.joins
            .iter()
            .find(|j| j.blocks == (a, b) || j.blocks == (b, a))
            .ok_or_else(|| Error::InvalidColoring(format!("blocks {a} and {b} are not joined")))
    }

    /// Components of the emitted TB-paw in order, each named by its block
    /// element (`H7`) or join (`a1b7`).
    pub fn emit_components(&self, traversal: &Traversal, route: &Route) -> Result<Vec<TbPaw>> {
        let mut out = Vec::new();
        let step = |out: &mut Vec<TbPaw>, u: VertexId, e: EdgeId, v: VertexId| -> Result<()> {
            let eb = self.edge_block(e);
            out.push(self.join_tbpaw(self.join_between(self.vertex_block(u), eb)?)?);
            out.push(self.block_tbpaw(eb, route)?);
            out.push(self.join_tbpaw(self.join_between(eb, self.vertex_block(v))?)?);
            out.push(self.block_tbpaw(self.vertex_block(v), route)?);
            Ok(())
        };
        match traversal {
            Traversal::Walk(walk) => {
                let Some(&first) = walk.first() else {
                    return Err(Error::NotAWalk);
                };
                self.host.check(first).map_err(|_| Error::NotAWalk)?;
                out.push(self.block_tbpaw(self.vertex_block(first), route)?);
                for w in walk.windows(2) {
                    let e = self.host.find_edge(w[0], w[1]).ok_or(Error::NotAWalk)?;
                    step(&mut out, w[0], e, w[1])?;
                }
            }
            Traversal::EdgeBlocks(edges) => {
                for &e in edges {
                    if e >= self.host.q() {
                        return Err(Error::UnknownEdge(e));
                    }
                    let (u, v) = self.host.edge(e);
                    out.push(self.block_tbpaw(self.vertex_block(u), route)?);
                    step(&mut out, u, e, v)?;
                }
            }
        }
        Ok(out)
    }

    pub fn emit_tbpaw(&self, traversal: &Traversal, route: &Route) -> Result<(TbPaw, ByteAccount)> {
        let parts = self.emit_components(traversal, route)?;
        let account = ByteAccount::of(&parts);
        let mut d = TbPaw::new(parts.iter().flat_map(|p| p.tokens.iter().cloned()).collect(), "");
        d.provenance = format!("encrypted network, join policy {}", self.policy);
        Ok((d, account))
    }

    /// The network whose every block and edge element is moved by `s`.
    /// Shifting by `0..n` gives the whole derived group.
    pub fn shifted(&self, s: i64) -> Result<EncryptedNetwork> {
        encrypt_network(&self.host, &self.group, &self.assignment.shifted(s), self.policy)
    }

    /// Plain-text dump: host edges, block assignments, join edges.
    pub fn dump(&self) -> String {
        let mut s = format!(
            "host {} {}\norder {}\nzero {}\npolicy {}\n",
            self.host.n(),
            self.host.q(),
            self.group.n,
            self.assignment.zero,
            self.policy
        );
        for &(u, v) in self.host.edges() {
            s += &format!("edge {u} {v}\n");
        }
        for (i, b) in self.blocks.iter().enumerate() {
            let owner = match b.owner {
                BlockOwner::Vertex(v) => format!("vertex {v}"),
                BlockOwner::Edge(e) => format!("edge {e}"),
            };
            s += &format!("block {i} {owner} H{} offset {}\n", b.element, b.offset);
        }
        for j in &self.joins {
            s += &format!("join {} {} label {}\n", j.ends.0, j.ends.1, j.label);
        }
        s
    }
}

/// The networks `N_1 … N_n` obtained by shifting the base network's indices.
/// `N_i ⊕ N_j` under zero `N_k` is `N_{i⊕j}`, checked entrywise on every
/// block element and on the colouring rule of each shifted network.
pub fn derived_group(net: &EncryptedNetwork) -> Result<Vec<EncryptedNetwork>> {
    net.assignment.check(&net.host).map_err(|e| Error::NotGroupLabelled(e.to_string()))?;
    let n = net.group.n;
    let nets: Vec<EncryptedNetwork> = (0..n as i64).map(|s| net.shifted(s)).collect::<Result<_>>()?;
    for k in 1..=n {
        for i in 1..=n {
            for j in 1..=n {
                let s = net.group.add(i, j, k)?;
                for b in 0..net.blocks.len() {
                    let el = |x: usize| nets[x - 1].blocks[b].element as i64;
                    if crate::groups::wrap_index(el(i) + el(j) - el(k), n) != nets[s - 1].blocks[b].element {
                        return Err(Error::NotGroupLabelled(format!("N{i}+N{j}-N{k} differs from N{s} at block {b}")));
                    }
                }
            }
        }
    }
    Ok(nets)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Traversal {
    /// A host walk: first block, then join, edge block, join, vertex block
    /// for every step.
    Walk(Vec<VertexId>),
    /// For each listed host edge uv: block u, join, block uv, join, block v.
    EdgeBlocks(Vec<EdgeId>),
}

/// Rendered length of each component and their sum. One byte is one
/// rendered character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ByteAccount {
    pub parts: Vec<(String, usize)>,
    pub total: usize,
}

impl ByteAccount {
    pub fn of(parts: &[TbPaw]) -> ByteAccount {
        Self::from_strings(parts.iter().map(|p| (p.provenance.clone(), p.rendered())))
    }

    pub fn from_strings<S: AsRef<str>>(parts: impl IntoIterator<Item = (String, S)>) -> ByteAccount {
        let parts: Vec<(String, usize)> = parts.into_iter().map(|(n, s)| (n, s.as_ref().chars().count())).collect();
        let total = parts.iter().map(|p| p.1).sum();
        ByteAccount { parts, total }
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for (name, len) in &self.parts {
            s += &format!("{name}={len}\n");
        }
        s += &format!("total={}\n", self.total);
        s
    }
}

/// Spanning-tree choice for the pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeAlgo {
    /// Grow from a maximum-degree vertex, favouring many leaves.
    A,
    /// Connected dominating set forced through a seeded vertex, others
    /// hung on it.
    B,
    /// Hub neighbourhoods first, then a degree-preferring sweep.
    C,
}

impl FromStr for TreeAlgo {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(TreeAlgo::A),
            "b" => Ok(TreeAlgo::B),
            "c" => Ok(TreeAlgo::C),
            _ => Err(Error::Parse { line: 0, msg: format!("unknown tree algorithm {s}") }),
        }
    }
}

/// Degree threshold handed to the hub-first tree.
const HUB_DEGREE: usize = 3;

fn tree_via_dominating(g: &Graph, set: &[VertexId]) -> Result<Graph> {
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    let mut t = Graph::new(g.n());
    let mut seen = vec![false; g.n()];
    let root = *set.first().ok_or(Error::Disconnected)?;
    seen[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if inside[w] && !seen[w] {
                seen[w] = true;
                t.add_edge(u, w)?;
                queue.push_back(w);
            }
        }
    }
    for v in 0..g.n() {
        if !seen[v] {
            let hub = g.neighbors(v).into_iter().filter(|&w| inside[w] && seen[w]).min().ok_or(Error::Disconnected)?;
            seen[v] = true;
            t.add_edge(hub, v)?;
        }
    }
    Ok(t)
}

pub fn pipeline_tree(g: &Graph, algo: TreeAlgo, seed: u64) -> Result<Graph> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    match algo {
        TreeAlgo::A => Ok(spanning_tree_max_leaf(g)?.tree),
        TreeAlgo::B => {
            let pick = Lcg::new(seed).below(g.n());
            tree_via_dominating(g, &spanning_tree_predefined(g, &[pick])?)
        }
        TreeAlgo::C => Ok(spanning_tree_degree_preserve(g, HUB_DEGREE)?.tree),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineRun {
    pub tree: Graph,
    pub sequence: Vec<usize>,
    pub start: VertexId,
    pub network: EncryptedNetwork,
    pub tbpaw: TbPaw,
    pub account: ByteAccount,
}

/// Spanning tree, seeded edge sequence / zero / start, tree colouring,
/// encryption, then one five-part piece per tree edge in breadth-first
/// order.
pub fn pipeline_encrypt(
    snapshot: &Graph,
    grp: &EveryZeroGraphicGroup,
    algo: TreeAlgo,
    route: &Route,
    seed: u64,
) -> Result<PipelineRun> {
    let tree = pipeline_tree(snapshot, algo, seed)?;
    let mut rng = Lcg::new(seed);
    let start = rng.below(tree.n());
    let zero = rng.range(1, grp.n);
    let sequence: Vec<usize> = (0..tree.q()).map(|_| rng.range(1, grp.n)).collect();
    let coloring = tree_group_coloring(&tree, grp.n, &sequence, zero, start)?;
    let network = encrypt_network(&tree, grp, &coloring, JoinPolicy::Smallest)?;
    network.check()?;
    let order: Vec<EdgeId> = tree.bfs_order(start).iter().map(|&(u, v)| tree.find_edge(u, v).unwrap()).collect();
    let (tbpaw, account) = network.emit_tbpaw(&Traversal::EdgeBlocks(order), route)?;
    Ok(PipelineRun { tree, sequence, start, network, tbpaw, account })
}

/// Snapshot file: `t <timestep>` then a graph file.
pub fn parse_snapshot(text: &str) -> Result<(u64, Graph)> {
    let mut lines = io::content_lines(text);
    let (ln, head) = lines.next().ok_or(Error::Parse { line: 0, msg: "empty snapshot".into() })?;
    let t = head
        .strip_prefix("t ")
        .and_then(|t| t.trim().parse().ok())
        .ok_or(Error::Parse { line: ln, msg: "expected \"t <timestep>\"".into() })?;
    let rest: Vec<&str> = text.lines().skip(ln).collect();
    let g = io::parse_graph(&rest.join("\n")).map_err(|e| match e {
        Error::Parse { line, msg } => Error::Parse { line: line + ln, msg },
        other => other,
    })?;
    Ok((t, g))
}

pub fn write_snapshot(t: u64, g: &Graph) -> String {
    format!("t {t}\n{}", io::write_graph(g))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generation {
    pub graph: Graph,
    /// Element of each block; block `b` owns vertices `b·|V(H)| ..`.
    pub block_elements: Vec<usize>,
    /// Each block coloured under its own element as zero.
    pub colorings: Vec<GroupLabelling>,
    /// Join edges, old and new: they carry no label from the base.
    pub unlabelled: Vec<EdgeId>,
    /// Edges inside the blocks.
    pub labelled: Vec<EdgeId>,
    /// Where the previous generation's unlabelled edges went, in order.
    pub carried: Vec<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfSimilarSeries {
    pub generations: Vec<Generation>,
}

/// Colours one block (a copy of the base carrying element `j`) with `j` as
/// its zero: vertex 0 gets `j`, tree edges take `1, 2, …` cyclically.
fn self_zero_coloring(grp: &EveryZeroGraphicGroup, j: usize) -> Result<GroupLabelling> {
    let n = grp.n;
    spanning_group_coloring(&grp.base, n, |t| t % n + 1, j, 0)
}

fn seed_generation(grp: &EveryZeroGraphicGroup) -> Result<Generation> {
    Ok(Generation {
        graph: grp.base.clone(),
        block_elements: vec![1],
        colorings: vec![self_zero_coloring(grp, 1)?],
        unlabelled: Vec::new(),
        labelled: (0..grp.base.q()).collect(),
        carried: Vec::new(),
    })
}

/// Replaces every vertex and every labelled edge of `prev` by a block whose
/// element the self-zero colourings dictate. Labelled edges are joined
/// through their edge block; unlabelled edges stay single edges between the
/// blocks of their ends.
fn grow(prev: &Generation, grp: &EveryZeroGraphicGroup, rng: &mut Option<Lcg>) -> Result<Generation> {
    let h = grp.base.n();
    let hq = grp.base.q();
    let pn = prev.graph.n();
    let mut vertex_el = vec![0; pn];
    let mut edge_el = vec![0; prev.graph.q()];
    for (b, c) in prev.colorings.iter().enumerate() {
        for t in 0..h {
            vertex_el[b * h + t] = c.vertex[t];
        }
        for t in 0..hq {
            edge_el[b * hq + t] = c.edge[t];
        }
    }
    let mut block_elements = vertex_el.clone();
    block_elements.extend(prev.labelled.iter().map(|&e| edge_el[e]));
    let blocks = block_elements.len();
    let mut graph = Graph::new(blocks * h);
    for b in 0..blocks {
        for &(x, y) in grp.base.edges() {
            graph.add_edge(b * h + x, b * h + y)?;
        }
    }
    let labelled: Vec<EdgeId> = (0..graph.q()).collect();
    let mut pick = |b: usize| b * h + rng.as_mut().map_or(0, |r| r.below(h));
    let mut unlabelled = Vec::new();
    let mut carried = Vec::new();
    for &e in &prev.unlabelled {
        let (x, y) = prev.graph.edge(e);
        let id = graph.add_edge(pick(x), pick(y))?;
        carried.push(id);
        unlabelled.push(id);
    }
    for (k, &e) in prev.labelled.iter().enumerate() {
        let (x, y) = prev.graph.edge(e);
        let eb = pn + k;
        for (a, b) in [(x, eb), (eb, y)] {
            unlabelled.push(graph.add_edge(pick(a), pick(b))?);
        }
    }
    let colorings = block_elements.iter().map(|&j| self_zero_coloring(grp, j)).collect::<Result<_>>()?;
    Ok(Generation { graph, block_elements, colorings, unlabelled, labelled, carried })
}

/// Generation 1 blows the base up over itself (the base is coloured with
/// `H_1` as its own zero); every later generation blows up the previous one
/// block by block, each block under its own element as zero.
pub fn self_similar_generate(
    grp: &EveryZeroGraphicGroup,
    steps: usize,
    policy: JoinPolicy,
) -> Result<SelfSimilarSeries> {
    if steps == 0 {
        return Err(Error::BadSteps);
    }
    if !grp.base.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut rng = match policy {
        JoinPolicy::Seeded(s) => Some(Lcg::new(s)),
        JoinPolicy::Smallest => None,
    };
    let mut prev = seed_generation(grp)?;
    let mut generations = Vec::with_capacity(steps);
    for _ in 0..steps {
        let next = grow(&prev, grp, &mut rng)?;
        generations.push(next.clone());
        prev = next;
    }
    Ok(SelfSimilarSeries { generations })
}

impl SelfSimilarSeries {
    /// Vertex counts follow `|V(H)|·(|V(H)|+|E(H)|)·blocks` of the previous
    /// generation, old unlabelled edges survive between the right blocks,
    /// the unlabelled set grows strictly, and every block colouring obeys
    /// the edge rule under its own element.
    pub fn check(&self, grp: &EveryZeroGraphicGroup) -> Result<()> {
        let h = grp.base.n();
        let seed = seed_generation(grp)?;
        let mut prev = &seed;
        for (i, g) in self.generations.iter().enumerate() {
            let fail = |m: String| Err(Error::InvalidColoring(format!("generation {}: {m}", i + 1)));
            let blocks = prev.block_elements.len() * (grp.base.n() + grp.base.q());
            if g.block_elements.len() != blocks || g.graph.n() != h * blocks {
                return fail("vertex bookkeeping is off".into());
            }
            for (b, c) in g.colorings.iter().enumerate() {
                c.check(&grp.base)?;
                if c.zero != g.block_elements[b] || c.vertex[0] != c.zero {
                    return fail(format!("block {b} is not coloured under its own element"));
                }
            }
            if g.carried.len() != prev.unlabelled.len() || g.unlabelled.len() <= prev.unlabelled.len() {
                return fail("unlabelled edges did not nest".into());
            }
            for (&old, &new) in prev.unlabelled.iter().zip(&g.carried) {
                let (x, y) = prev.graph.edge(old);
                let (a, b) = g.graph.edge(new);
                if (a / h, b / h) != (x, y) || !g.unlabelled.contains(&new) {
                    return fail(format!("edge {x}-{y} was not carried over"));
                }
            }
            prev = g;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;
    use crate::labelling::Labelling;

    fn base() -> EveryZeroGraphicGroup {
        let h = generate::path(3);
        let f = Labelling::total(&h, &[0, 3, 1], &[3, 2]);
        EveryZeroGraphicGroup::new(h, f, 4).unwrap()
    }

    #[test]
    fn k2_host_three_blocks() {
        let grp = base();
        let host = generate::path(2);
        let c = tree_group_coloring(&host, 4, &[3], 1, 0).unwrap();
        let net = encrypt_network(&host, &grp, &c, JoinPolicy::Smallest).unwrap();
        assert_eq!((net.blocks.len(), net.joins.len()), (3, 2));
        net.check().unwrap();
    }

    #[test]
    fn bad_colouring_refused() {
        let grp = base();
        let host = generate::path(2);
        let mut c = tree_group_coloring(&host, 4, &[3], 1, 0).unwrap();
        c.edge[0] = 4;
        assert!(matches!(encrypt_network(&host, &grp, &c, JoinPolicy::Smallest), Err(Error::InvalidColoring(_))));
    }

    #[test]
    fn single_block_is_its_tbpaw() {
        let grp = base();
        let host = Graph::new(1);
        let c = GroupLabelling { n: 4, zero: 2, vertex: vec![2], edge: vec![] };
        let net = encrypt_network(&host, &grp, &c, JoinPolicy::Smallest).unwrap();
        let (d, acc) = net.emit_tbpaw(&Traversal::Walk(vec![0]), &Route::RowMajor).unwrap();
        assert_eq!(d.rendered(), net.block_tbpaw(0, &Route::RowMajor).unwrap().rendered());
        assert_eq!(acc.total, d.rendered().len());
    }

    #[test]
    fn snapshot_round_trip() {
        let g = generate::cycle(5);
        let (t, back) = parse_snapshot(&write_snapshot(42, &g)).unwrap();
        assert_eq!((t, back), (42, g));
        assert!(parse_snapshot("x 1\n1 0\n").is_err());
    }

    #[test]
    fn policy_parse() {
        assert_eq!("smallest".parse::<JoinPolicy>().unwrap(), JoinPolicy::Smallest);
        assert_eq!("seeded:9".parse::<JoinPolicy>().unwrap(), JoinPolicy::Seeded(9));
        assert!("seeded:x".parse::<JoinPolicy>().is_err());
    }

    #[test]
    fn zero_steps_refused() {
        assert_eq!(self_similar_generate(&base(), 0, JoinPolicy::Smallest), Err(Error::BadSteps));
    }
}
