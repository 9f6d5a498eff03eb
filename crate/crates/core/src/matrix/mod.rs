//! The 3×q Topsnut-matrix: one column (x, e, y) per edge.

mod count;
mod routes;

pub use count::{
    distinct_matrix_count, factorial, fold_line_tbpaw_count, leaf_lobster_count, matrix_count, partition_count_a,
    partition_count_p, raw_pair_census, raw_pair_count, tbpaw_count, FactoredCount, PairCensus,
};
pub use routes::{fold_line_census, fold_line_groups, is_fold_line, Adjacency, Route};

use crate::error::{Error, Result};
use crate::graph::{io::content_lines, EdgeId, Graph};
use crate::label::Label;
use crate::labelling::{Labelling, SetLabelling};
use crate::tbpaw::TbPaw;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TopsnutMatrix {
    pub x: Vec<Label>,
    pub w: Vec<Label>,
    pub y: Vec<Label>,
}

/// How component matrices were obtained from the whole: by splitting edges
/// (the shared edge column appears in both parts) or vertices (no shared
/// columns).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Compose {
    EdgeCoincide,
    VertexCoincide,
}

/// Column-level facts that can be read off a matrix without the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StructuralFacts {
    pub simple: bool,
    pub connected: bool,
    pub graceful: bool,
    pub odd_graceful: bool,
    pub elegant: bool,
    pub odd_elegant: bool,
}

fn check_order(q: usize, order: &[EdgeId], flip: &[bool]) -> Result<()> {
    let distinct: BTreeSet<EdgeId> = order.iter().copied().collect();
    if order.len() != q || flip.len() != q || distinct.len() != q || order.iter().any(|&e| e >= q) {
        return Err(Error::BadPermutation);
    }
    Ok(())
}

impl TopsnutMatrix {
    pub fn new(x: Vec<Label>, w: Vec<Label>, y: Vec<Label>) -> Result<Self> {
        if x.len() != w.len() || w.len() != y.len() {
            return Err(Error::SizeMismatch(format!("rows of length {}, {}, {}", x.len(), w.len(), y.len())));
        }
        Ok(TopsnutMatrix { x, w, y })
    }

    pub fn from_numbers(x: &[i64], w: &[i64], y: &[i64]) -> Result<Self> {
        let conv = |r: &[i64]| r.iter().map(|&v| Label::Num(v)).collect();
        TopsnutMatrix::new(conv(x), conv(w), conv(y))
    }

    pub fn q(&self) -> usize {
        self.w.len()
    }

    /// Column i carries edge `order[i]`; `flip[i]` puts the edge's second
    /// endpoint in X instead of the first.
    pub fn from_graph(g: &Graph, l: &Labelling, order: &[EdgeId], flip: &[bool]) -> Result<Self> {
        let v: Vec<Label> = l.vertex_values()?.into_iter().map(Label::Num).collect();
        let e: Vec<Label> = l.edge_values()?.into_iter().map(Label::Num).collect();
        Self::from_cells(g, &v, &e, order, flip)
    }

    /// Edge order and endpoint order as stored in the graph.
    pub fn of(g: &Graph, l: &Labelling) -> Result<Self> {
        let order: Vec<EdgeId> = (0..g.q()).collect();
        Self::from_graph(g, l, &order, &vec![false; g.q()])
    }

    pub fn of_sets(g: &Graph, l: &SetLabelling) -> Result<Self> {
        let v: Vec<Label> = l.vertex.iter().map(|s| Label::set(s.iter().copied())).collect();
        let e: Vec<Label> = l.edge.iter().map(|s| Label::set(s.iter().copied())).collect();
        let order: Vec<EdgeId> = (0..g.q()).collect();
        Self::from_cells(g, &v, &e, &order, &vec![false; g.q()])
    }

    pub fn from_cells(g: &Graph, v: &[Label], e: &[Label], order: &[EdgeId], flip: &[bool]) -> Result<Self> {
        check_order(g.q(), order, flip)?;
        if v.len() != g.n() || e.len() != g.q() {
            return Err(Error::MissingLabel("labels do not cover the graph".into()));
        }
        let mut m = TopsnutMatrix { x: Vec::new(), w: Vec::new(), y: Vec::new() };
        for (&ei, &f) in order.iter().zip(flip) {
            let (a, b) = g.edge(ei);
            let (a, b) = if f { (b, a) } else { (a, b) };
            m.x.push(v[a].clone());
            m.w.push(e[ei].clone());
            m.y.push(v[b].clone());
        }
        Ok(m)
    }

    /// The graph read back from the columns: one vertex per distinct label
    /// (in order of first appearance), one edge per column.
    pub fn to_graph(&self) -> (Graph, Vec<Label>, Vec<Label>) {
        let mut ids: BTreeMap<Label, usize> = BTreeMap::new();
        let mut labels = Vec::new();
        let mut g = Graph::with_loops(0);
        let mut id = |lab: &Label, g: &mut Graph| -> usize {
            *ids.entry(lab.clone()).or_insert_with(|| {
                labels.push(lab.clone());
                g.add_vertex()
            })
        };
        for i in 0..self.q() {
            let a = id(&self.x[i], &mut g);
            let b = id(&self.y[i], &mut g);
            g.add_edge(a, b).expect("ids exist");
        }
        (g, labels, self.w.clone())
    }

    pub fn extract(&self, route: &Route) -> Result<TbPaw> {
        let cells = route.cells(self.q())?;
        let tokens = cells.iter().map(|&c| self.cell(c).clone()).collect();
        Ok(TbPaw::new(tokens, format!("matrix route {route}")))
    }

    /// Cell `row*q + col`, rows X, W, Y.
    pub fn cell(&self, c: usize) -> &Label {
        let q = self.q();
        match c / q {
            0 => &self.x[c % q],
            1 => &self.w[c % q],
            _ => &self.y[c % q],
        }
    }

    fn index(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.q() {
            Err(Error::IndexOutOfRange(i as i64))
        } else {
            Ok(i - 1)
        }
    }

    /// Swaps columns i and j (1-based).
    pub fn column_exchange(&self, i: usize, j: usize) -> Result<Self> {
        let (a, b) = (self.index(i)?, self.index(j)?);
        let mut m = self.clone();
        m.x.swap(a, b);
        m.w.swap(a, b);
        m.y.swap(a, b);
        Ok(m)
    }

    /// Swaps x_i and y_i (1-based).
    pub fn xy_exchange(&self, i: usize) -> Result<Self> {
        let a = self.index(i)?;
        let mut m = self.clone();
        std::mem::swap(&mut m.x[a], &mut m.y[a]);
        Ok(m)
    }

    /// Each row reversed.
    pub fn reciprocal(&self) -> Self {
        let rev = |r: &[Label]| r.iter().rev().cloned().collect();
        TopsnutMatrix { x: rev(&self.x), w: rev(&self.w), y: rev(&self.y) }
    }

    fn column(&self, i: usize) -> (Label, Label, Label) {
        (self.x[i].clone(), self.w[i].clone(), self.y[i].clone())
    }

    fn push(&mut self, (x, w, y): (Label, Label, Label)) {
        self.x.push(x);
        self.w.push(w);
        self.y.push(y);
    }

    /// Glues component matrices. Under `EdgeCoincide` a column already
    /// present (same edge label and endpoint pair) is the shared edge and is
    /// kept once; the same edge label with other endpoints is inconsistent.
    /// Under `VertexCoincide` no edge label may repeat.
    pub fn compose(ms: &[TopsnutMatrix], op: Compose) -> Result<Self> {
        let mut out = TopsnutMatrix { x: Vec::new(), w: Vec::new(), y: Vec::new() };
        let mut seen: BTreeMap<Label, BTreeSet<Label>> = BTreeMap::new();
        for m in ms {
            for i in 0..m.q() {
                let (x, w, y) = m.column(i);
                let ends = BTreeSet::from([x.clone(), y.clone()]);
                match seen.get(&w) {
                    Some(prev) if op == Compose::EdgeCoincide && *prev == ends => continue,
                    Some(_) => {
                        return Err(Error::InconsistentSharedLabels(format!("edge label {w} appears twice")));
                    }
                    None => {
                        seen.insert(w.clone(), ends);
                    }
                }
                out.push((x, w, y));
            }
        }
        Ok(out)
    }

    /// Removes the columns of `part`, keeping columns whose edge label is
    /// listed in `shared` (the coincided edges of an edge-split).
    pub fn decompose(&self, part: &TopsnutMatrix, shared: &[Label]) -> Result<Self> {
        let mut out = TopsnutMatrix { x: Vec::new(), w: Vec::new(), y: Vec::new() };
        let mut drop: Vec<(Label, Label, Label)> = (0..part.q()).map(|i| part.column(i)).collect();
        for i in 0..self.q() {
            let col = self.column(i);
            let same = |c: &(Label, Label, Label)| {
                c.1 == col.1 && BTreeSet::from([&c.0, &c.2]) == BTreeSet::from([&col.0, &col.2])
            };
            match drop.iter().position(same) {
                Some(k) if !shared.contains(&col.1) => {
                    drop.remove(k);
                }
                _ => out.push(col),
            }
        }
        let missing: Vec<_> = drop.iter().filter(|c| !shared.contains(&c.1)).collect();
        if !missing.is_empty() {
            return Err(Error::InconsistentSharedLabels(format!("{} part columns not found", missing.len())));
        }
        Ok(out)
    }

    /// One 3×1 matrix per edge, glued in edge order.
    pub fn per_edge(g: &Graph, l: &Labelling) -> Result<Self> {
        let parts: Vec<TopsnutMatrix> = (0..g.q())
            .map(|e| {
                let (a, b) = g.edge(e);
                TopsnutMatrix::from_numbers(&[l.v(a)?], &[l.e(e)?], &[l.v(b)?])
            })
            .collect::<Result<_>>()?;
        let mut out = TopsnutMatrix { x: Vec::new(), w: Vec::new(), y: Vec::new() };
        for p in parts {
            out.push(p.column(0));
        }
        Ok(out)
    }

    /// x e y of each column, columns taken in `perm` order.
    pub fn edge_permutation_tbpaw(&self, perm: &[usize]) -> Result<TbPaw> {
        check_order(self.q(), perm, &vec![false; self.q()])?;
        let mut tokens = Vec::with_capacity(3 * self.q());
        for &i in perm {
            tokens.extend([self.x[i].clone(), self.w[i].clone(), self.y[i].clone()]);
        }
        Ok(TbPaw::new(tokens, "per-edge columns"))
    }

    /// Simple: no loop column and no two columns on the same endpoint pair.
    /// Connected: the columns chain together through shared endpoint labels.
    /// The labelling predicates check each column's rule and the edge set.
    pub fn structural_predicates(&self) -> StructuralFacts {
        let q = self.q();
        let mut pairs = BTreeSet::new();
        let mut simple = true;
        for i in 0..q {
            if self.x[i] == self.y[i] || !pairs.insert(BTreeSet::from([&self.x[i], &self.y[i]])) {
                simple = false;
            }
        }
        let (g, _, _) = self.to_graph();
        let connected = q == 0 || g.is_connected();

        let nums = |r: &[Label]| r.iter().map(Label::as_num).collect::<Option<Vec<i64>>>();
        let mut facts = StructuralFacts { simple, connected, ..Default::default() };
        let (Some(x), Some(w), Some(y)) = (nums(&self.x), nums(&self.w), nums(&self.y)) else {
            return facts;
        };
        let qi = q as i64;
        let mut sorted = w.clone();
        sorted.sort_unstable();
        let odd: Vec<i64> = (1..=qi).map(|i| 2 * i - 1).collect();
        let diff_rule = (0..q).all(|i| w[i] == (x[i] - y[i]).abs());
        facts.graceful = diff_rule && sorted == (1..=qi).collect::<Vec<_>>();
        facts.odd_graceful = diff_rule && sorted == odd;
        if q > 0 {
            facts.elegant = (0..q).all(|i| w[i] == (x[i] + y[i]).rem_euclid(qi))
                && sorted == (0..qi).collect::<Vec<_>>();
            facts.odd_elegant = (0..q).all(|i| w[i] == (x[i] + y[i]).rem_euclid(2 * qi)) && sorted == odd;
        }
        facts
    }

    /// Three lines: X, W, Y. A set cell is written as comma-joined elements.
    pub fn write(&self) -> String {
        let row = |r: &[Label]| {
            r.iter()
                .map(|l| match l {
                    Label::Num(n) => n.to_string(),
                    Label::Set(s) => s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!("{}\n{}\n{}\n", row(&self.x), row(&self.w), row(&self.y))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let rows: Vec<(usize, Vec<Label>)> = content_lines(text)
            .map(|(line, s)| {
                s.split_whitespace()
                    .map(|tok| parse_cell(tok).ok_or_else(|| Error::Parse { line, msg: format!("bad cell {tok}") }))
                    .collect::<Result<Vec<_>>>()
                    .map(|r| (line, r))
            })
            .collect::<Result<_>>()?;
        match <[_; 3]>::try_from(rows) {
            Ok([(_, x), (_, w), (_, y)]) => TopsnutMatrix::new(x, w, y),
            Err(rows) => Err(Error::Parse {
                line: rows.last().map(|r| r.0).unwrap_or(0),
                msg: format!("expected 3 rows, found {}", rows.len()),
            }),
        }
    }
}

fn parse_cell(tok: &str) -> Option<Label> {
    if tok.contains(',') {
        tok.split(',').map(|s| s.parse().ok()).collect::<Option<Vec<i64>>>().map(Label::set)
    } else {
        tok.parse().ok().map(Label::Num)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    #[test]
    fn k2_matrix_and_routes() {
        let g = generate::path(2);
        let l = Labelling::total(&g, &[0, 1], &[1]);
        let m = TopsnutMatrix::of(&g, &l).unwrap();
        assert_eq!(m, TopsnutMatrix::from_numbers(&[0], &[1], &[1]).unwrap());
        let d = m.extract(&Route::Met(1)).unwrap();
        assert_eq!(d.rendered(), "011");
        assert_eq!(m.extract(&Route::Met(1).reciprocal()).unwrap().rendered(), "110");
    }

    #[test]
    fn exchanges_are_involutions() {
        let m = TopsnutMatrix::from_numbers(&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]).unwrap();
        assert_eq!(m.column_exchange(2, 2).unwrap(), m);
        assert_eq!(m.xy_exchange(3).unwrap().xy_exchange(3).unwrap(), m);
        assert_eq!(m.reciprocal().reciprocal(), m);
        assert_eq!(m.column_exchange(0, 1), Err(Error::IndexOutOfRange(0)));
        assert_eq!(m.xy_exchange(4), Err(Error::IndexOutOfRange(4)));
    }

    #[test]
    fn file_round_trip_with_sets() {
        let m = TopsnutMatrix::new(
            vec![Label::Num(5), Label::set([0, 7])],
            vec![Label::Num(1), Label::Num(2)],
            vec![Label::set([6, 8]), Label::Num(3)],
        )
        .unwrap();
        assert_eq!(TopsnutMatrix::parse(&m.write()).unwrap(), m);
        assert!(TopsnutMatrix::parse("1 2\n3 4\n").is_err());
    }

    #[test]
    fn duplicate_column_is_not_simple() {
        let m = TopsnutMatrix::from_numbers(&[0, 0], &[1, 1], &[1, 1]).unwrap();
        assert!(!m.structural_predicates().simple);
        let p = TopsnutMatrix::from_numbers(&[0, 2], &[2, 1], &[2, 1]).unwrap();
        let f = p.structural_predicates();
        assert!(f.simple && f.connected && f.graceful);
    }

    #[test]
    fn bad_order_rejected() {
        let g = generate::path(3);
        let l = Labelling::total(&g, &[0, 2, 1], &[2, 1]);
        assert_eq!(TopsnutMatrix::from_graph(&g, &l, &[0, 0], &[false, false]), Err(Error::BadPermutation));
    }
}
