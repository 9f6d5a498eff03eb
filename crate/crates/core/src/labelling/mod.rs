//! Number labellings of graphs: the data types, their text format, and the
//! verifiers and constructors for each labelling family.

mod construct;
mod sets;
mod verify;

pub use construct::{
    caterpillar_set_ordered_graceful, equivalence_suite, extend_caterpillar_to_lobster,
    graceful_to_odd_graceful, image_labelling, odd_image_labelling, reciprocal_inverse_pair,
    set_ordered_sides, six_c_complementary_matching, six_c_from_set_ordered_graceful,
    six_c_partner_from_set_ordered_graceful, twin_odd_graceful, Coincided,
};
pub use sets::{
    intersection_set_labelling, rainbow_set_labelling, rainbow_set_labelling_from,
    verify_set, IntersectionMode, RainbowSequence, SetLabelling, SetScheme,
};
pub use verify::verify;

use crate::error::{Error, Result};
use crate::graph::{io::content_lines, EdgeId, Graph, VertexId};
use std::collections::BTreeMap;
use std::fmt;

/// A (partial) labelling: `None` means "not labelled". Edge labels of
/// vertex-only schemes are derived on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labelling {
    pub vertex: Vec<Option<i64>>,
    pub edge: Vec<Option<i64>>,
    pub scheme: Option<Scheme>,
}

impl Labelling {
    pub fn empty(g: &Graph) -> Self {
        Labelling { vertex: vec![None; g.n()], edge: vec![None; g.q()], scheme: None }
    }

    pub fn from_vertices(g: &Graph, values: &[i64]) -> Self {
        let mut l = Labelling::empty(g);
        for (v, &x) in values.iter().enumerate().take(g.n()) {
            l.vertex[v] = Some(x);
        }
        l
    }

    /// Vertex and edge labels given in full.
    pub fn total(g: &Graph, vertices: &[i64], edges: &[i64]) -> Self {
        let mut l = Labelling::from_vertices(g, vertices);
        for (e, &x) in edges.iter().enumerate().take(g.q()) {
            l.edge[e] = Some(x);
        }
        l
    }

    pub fn with_scheme(mut self, s: Scheme) -> Self {
        self.scheme = Some(s);
        self
    }

    pub fn v(&self, v: VertexId) -> Result<i64> {
        self.vertex
            .get(v)
            .copied()
            .flatten()
            .ok_or_else(|| Error::MissingLabel(format!("vertex {v}")))
    }

    pub fn e(&self, e: EdgeId) -> Result<i64> {
        self.edge.get(e).copied().flatten().ok_or_else(|| Error::MissingLabel(format!("edge {e}")))
    }

    pub fn vertex_values(&self) -> Result<Vec<i64>> {
        (0..self.vertex.len()).map(|v| self.v(v)).collect()
    }

    pub fn edge_values(&self) -> Result<Vec<i64>> {
        (0..self.edge.len()).map(|e| self.e(e)).collect()
    }

    /// Same vertex labels, edge labels replaced by |f(u)−f(v)|.
    pub fn with_difference_edges(&self, g: &Graph) -> Result<Labelling> {
        self.with_edges_from(g, |a, b| (a - b).abs())
    }

    pub fn with_edges_from(&self, g: &Graph, rule: impl Fn(i64, i64) -> i64) -> Result<Labelling> {
        let mut out = self.clone();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            out.edge[e] = Some(rule(self.v(u)?, self.v(v)?));
        }
        Ok(out)
    }

    /// h′(z) = max h(S) + min h(S) − h(z) over every labelled element.
    pub fn dual(&self) -> Result<Labelling> {
        let all = self.vertex.iter().chain(&self.edge).flatten();
        let (lo, hi) = match (all.clone().min(), all.max()) {
            (Some(&lo), Some(&hi)) => (lo, hi),
            _ => return Err(Error::EmptyLabelling),
        };
        let flip = |x: &Option<i64>| x.map(|x| hi + lo - x);
        Ok(Labelling {
            vertex: self.vertex.iter().map(flip).collect(),
            edge: self.edge.iter().map(flip).collect(),
            scheme: self.scheme.clone(),
        })
    }

    /// Reads "scheme …", "v <id> <int>" and "e <u> <v> <int>" lines. Parallel
    /// edges are filled in order of appearance.
    pub fn parse(text: &str, g: &Graph) -> Result<Labelling> {
        let mut l = Labelling::empty(g);
        for (line, content) in content_lines(text) {
            let bad = |msg: &str| Error::Parse { line, msg: msg.to_string() };
            let words: Vec<&str> = content.split_whitespace().collect();
            let num = |s: &str| s.parse::<i64>().map_err(|_| bad(&format!("not an integer: {s}")));
            match words.as_slice() {
                ["scheme", rest @ ..] => l.scheme = Some(Scheme::parse(&rest.join(" "))?),
                ["v", id, x] => {
                    let v = num(id)? as usize;
                    g.check(v)?;
                    l.vertex[v] = Some(num(x)?);
                }
                ["e", a, b, x] => {
                    let (a, b) = (num(a)? as usize, num(b)? as usize);
                    let e = g
                        .incident(a)
                        .iter()
                        .filter(|&&(w, e)| w == b && l.edge[e].is_none())
                        .map(|&(_, e)| e)
                        .min()
                        .ok_or_else(|| bad(&format!("no unlabelled edge {a}-{b}")))?;
                    l.edge[e] = Some(num(x)?);
                }
                _ => return Err(bad("expected 'scheme', 'v' or 'e' line")),
            }
        }
        Ok(l)
    }

    pub fn write(&self, g: &Graph) -> String {
        let mut out = String::new();
        if let Some(s) = &self.scheme {
            out.push_str(&format!("scheme {s}\n"));
        }
        for (v, x) in self.vertex.iter().enumerate() {
            if let Some(x) = x {
                out.push_str(&format!("v {v} {x}\n"));
            }
        }
        for (e, x) in self.edge.iter().enumerate() {
            if let Some(x) = x {
                let (a, b) = g.edge(e);
                out.push_str(&format!("e {a} {b} {x}\n"));
            }
        }
        out
    }
}

/// A labelling family plus its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scheme {
    Graceful,
    SetOrderedGraceful,
    OddGraceful,
    SetOrderedOddGraceful,
    /// Odd-graceful whose pairwise vertex differences fill [1, 2q−1].
    PerfectOddGraceful,
    Felicitous,
    OddElegant,
    Harmonious,
    /// Bijection onto [1, p+q] with constant f(u)+f(uv)+f(v); `super_`
    /// additionally asks f(V) = [1, p].
    EdgeMagicTotal { k: Option<i64>, super_: bool },
    /// Bijection onto [1, p+q] whose edge sums are {k, k+d, …, k+(q−1)d}.
    EdgeAntimagicTotal { k: i64, d: i64, super_: bool },
    EdgeOddGracefulTotal,
    /// The five readings of a single vertex labelling, rule 1..=5.
    MultipleMeaning { rule: u8, k: Option<i64> },
    KdGraceful { k: i64, d: i64 },
    KdArithmetic { k: i64, d: i64 },
    KdHarmonious { k: i64, d: i64 },
    SixC,
    OddSixC,
}

impl Scheme {
    /// Parses "name [params]", e.g. "kd-graceful 101 11" or "6c".
    pub fn parse(s: &str) -> Result<Scheme> {
        let words: Vec<&str> = s.split_whitespace().collect();
        let unknown = || Error::UnknownScheme(s.trim().to_string());
        let ints: Vec<i64> =
            words.iter().skip(1).map(|w| w.parse::<i64>()).collect::<std::result::Result<_, _>>().map_err(|_| unknown())?;
        let name = words.first().map(|w| w.to_ascii_lowercase()).ok_or_else(unknown)?;
        let kd = |super_: bool| -> Result<(i64, i64, bool)> {
            match ints.as_slice() {
                [k, d] if *k >= 1 && *d >= 1 => Ok((*k, *d, super_)),
                _ => Err(unknown()),
            }
        };
        let no_args = |sch: Scheme| if ints.is_empty() { Ok(sch) } else { Err(unknown()) };
        match name.as_str() {
            "graceful" => no_args(Scheme::Graceful),
            "set-ordered-graceful" => no_args(Scheme::SetOrderedGraceful),
            "odd-graceful" => no_args(Scheme::OddGraceful),
            "set-ordered-odd-graceful" => no_args(Scheme::SetOrderedOddGraceful),
            "perfect-odd-graceful" => no_args(Scheme::PerfectOddGraceful),
            "felicitous" => no_args(Scheme::Felicitous),
            "odd-elegant" => no_args(Scheme::OddElegant),
            "harmonious" => no_args(Scheme::Harmonious),
            "edge-odd-graceful-total" => no_args(Scheme::EdgeOddGracefulTotal),
            "6c" => no_args(Scheme::SixC),
            "odd-6c" => no_args(Scheme::OddSixC),
            "edge-magic-total" | "super-edge-magic-total" if ints.len() <= 1 => {
                Ok(Scheme::EdgeMagicTotal { k: ints.first().copied(), super_: name.starts_with("super") })
            }
            "edge-antimagic-total" | "super-edge-antimagic-total" => {
                let (k, d, super_) = kd(name.starts_with("super"))?;
                Ok(Scheme::EdgeAntimagicTotal { k, d, super_ })
            }
            "multiple-meaning" => match ints.as_slice() {
                [r] if (1..=5).contains(r) => Ok(Scheme::MultipleMeaning { rule: *r as u8, k: None }),
                [r, k] if (1..=5).contains(r) => Ok(Scheme::MultipleMeaning { rule: *r as u8, k: Some(*k) }),
                _ => Err(unknown()),
            },
            "kd-graceful" => kd(false).map(|(k, d, _)| Scheme::KdGraceful { k, d }),
            "kd-arithmetic" => kd(false).map(|(k, d, _)| Scheme::KdArithmetic { k, d }),
            "kd-harmonious" => kd(false).map(|(k, d, _)| Scheme::KdHarmonious { k, d }),
            _ => Err(unknown()),
        }
    }

    /// True when the scheme only labels vertices and induces edge labels.
    pub fn vertex_only(&self) -> bool {
        !matches!(
            self,
            Scheme::EdgeMagicTotal { .. }
                | Scheme::EdgeAntimagicTotal { .. }
                | Scheme::EdgeOddGracefulTotal
                | Scheme::MultipleMeaning { .. }
                | Scheme::SixC
                | Scheme::OddSixC
        )
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sup = |s: bool| if s { "super-" } else { "" };
        match self {
            Scheme::Graceful => write!(f, "graceful"),
            Scheme::SetOrderedGraceful => write!(f, "set-ordered-graceful"),
            Scheme::OddGraceful => write!(f, "odd-graceful"),
            Scheme::SetOrderedOddGraceful => write!(f, "set-ordered-odd-graceful"),
            Scheme::PerfectOddGraceful => write!(f, "perfect-odd-graceful"),
            Scheme::Felicitous => write!(f, "felicitous"),
            Scheme::OddElegant => write!(f, "odd-elegant"),
            Scheme::Harmonious => write!(f, "harmonious"),
            Scheme::EdgeMagicTotal { k, super_ } => {
                write!(f, "{}edge-magic-total", sup(*super_))?;
                match k {
                    Some(k) => write!(f, " {k}"),
                    None => Ok(()),
                }
            }
            Scheme::EdgeAntimagicTotal { k, d, super_ } => {
                write!(f, "{}edge-antimagic-total {k} {d}", sup(*super_))
            }
            Scheme::EdgeOddGracefulTotal => write!(f, "edge-odd-graceful-total"),
            Scheme::MultipleMeaning { rule, k } => {
                write!(f, "multiple-meaning {rule}")?;
                match k {
                    Some(k) => write!(f, " {k}"),
                    None => Ok(()),
                }
            }
            Scheme::KdGraceful { k, d } => write!(f, "kd-graceful {k} {d}"),
            Scheme::KdArithmetic { k, d } => write!(f, "kd-arithmetic {k} {d}"),
            Scheme::KdHarmonious { k, d } => write!(f, "kd-harmonious {k} {d}"),
            Scheme::SixC => write!(f, "6c"),
            Scheme::OddSixC => write!(f, "odd-6c"),
        }
    }
}

/// Outcome of a verifier. `values` carries the constants it found (k, k′,
/// k″, singularity, …) and which alternative of a clause applied.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub pass: bool,
    pub violated: Vec<(String, String)>,
    pub values: BTreeMap<String, i64>,
}

impl VerificationReport {
    pub(crate) fn new() -> Self {
        VerificationReport { pass: true, ..Default::default() }
    }

    pub(crate) fn fail(&mut self, clause: &str, witness: impl Into<String>) {
        self.pass = false;
        self.violated.push((clause.to_string(), witness.into()));
    }

    pub(crate) fn check(&mut self, ok: bool, clause: &str, witness: impl FnOnce() -> String) {
        if !ok {
            self.fail(clause, witness());
        }
    }

    pub fn value(&self, key: &str) -> Option<i64> {
        self.values.get(key).copied()
    }

    pub fn violates(&self, clause: &str) -> bool {
        self.violated.iter().any(|(c, _)| c == clause)
    }

    /// key=value lines, violations as "violated=<clause>:<witness>".
    pub fn render(&self) -> String {
        let mut out = format!("pass={}\n", self.pass);
        for (k, v) in &self.values {
            out.push_str(&format!("{k}={v}\n"));
        }
        for (c, w) in &self.violated {
            out.push_str(&format!("violated={c}:{w}\n"));
        }
        out
    }
}
